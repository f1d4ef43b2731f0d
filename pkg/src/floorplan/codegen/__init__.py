"""Interface derivation and rendering."""

from .derive import (Deriver, check_interface, check_word_width, derive_allocation_patterns,
                     derive_bitfield_accessors, derive_boundary_casts,
                     derive_contains_conversions, derive_enum_interface, derive_interface,
                     derive_offsets_and_alignments, derive_shared_count_maps, snake, upper_snake)
from .dump import dump_interface, interface_to_dict
from .ir import AddressType, GeneratedInterface, InterfaceFn, NamedConstant, Param, Record
from .rust import render_rust
from .sim import DebugAssertion, FlatStore, Machine, SimulationError

BACKENDS = {"rust": render_rust, "dump": dump_interface}
EXTENSIONS = {"rust": ".rs", "dump": ".json"}


def render(gi: GeneratedInterface, backend: str = "rust") -> str:
    try:
        return BACKENDS[backend](gi)
    except KeyError:
        raise ValueError(f"unknown backend {backend!r}") from None


__all__ = [
    "AddressType", "BACKENDS", "DebugAssertion", "Deriver", "EXTENSIONS", "FlatStore",
    "GeneratedInterface", "InterfaceFn", "Machine", "NamedConstant", "Param", "Record",
    "SimulationError", "check_interface", "check_word_width", "derive_allocation_patterns",
    "derive_bitfield_accessors", "derive_boundary_casts", "derive_contains_conversions",
    "derive_enum_interface", "derive_interface", "derive_offsets_and_alignments",
    "derive_shared_count_maps", "dump_interface", "interface_to_dict", "render", "render_rust",
    "snake", "upper_snake",
]
