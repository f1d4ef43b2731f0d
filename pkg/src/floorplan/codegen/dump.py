"""Versioned JSON dump of a GeneratedInterface."""

from __future__ import annotations

import json

from .derive import check_word_width
from .ir import GeneratedInterface

FORMAT = "floorplan-interface"
VERSION = 1


def interface_to_dict(gi: GeneratedInterface) -> dict:
    return {
        "format": FORMAT,
        "version": VERSION,
        "arch": {"word_bytes": gi.word_bytes, "page_bytes": gi.page_bytes},
        "address_types": [
            {"name": t.name, "source": t.source, "kind": t.kind,
             "alignment_bytes": t.alignment_bytes, "size_bytes": t.size_bytes}
            for t in gi.address_types],
        "constants": [
            {"name": c.name, "value": c.value, "type": c.ty, "owner": c.owner}
            for c in gi.constants],
        "records": [
            {"name": r.name, "fields": [{"name": f.name, "type": f.ty} for f in r.fields]}
            for r in gi.records],
        "functions": [
            {"kind": f.kind, "owner": f.owner, "name": f.name, "receiver": f.receiver,
             "params": [{"name": p.name, "type": p.ty} for p in f.params],
             "returns": f.returns,
             "body": [s.to_json() for s in f.body]}
            for f in gi.functions],
    }


def dump_interface(gi: GeneratedInterface) -> str:
    check_word_width(gi)
    return json.dumps(interface_to_dict(gi), indent=2, sort_keys=True) + "\n"
