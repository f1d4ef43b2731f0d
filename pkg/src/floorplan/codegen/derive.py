"""Derivation of a GeneratedInterface from an expanded specification.

Every Field and LayerDecl gets an address type. Type names are shared by
copies of the same declaration (macro expansion copies a layer into each
use site), and field types are qualified by their owner only when two
different owners declare a field of the same name.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from ..arith import DEFAULT_ARCH, ArchConfig, bits_to_bytes, eval_bits, eval_bytes
from ..core import enum_bytes
from ..diagnostics import CodegenError, DiagnosticSink
from ..syntax import ast as A
from . import ir
from .ir import (SELF, AddressType, GeneratedInterface, InterfaceFn, NamedConstant, Param,
                 Record, RecordField)

UINT_TYPES = {8: "u8", 16: "u16", 32: "u32", 64: "u64", 128: "u128"}
RUST_KEYWORDS = frozenset("""as break const continue crate else enum extern false fn for if impl in
let loop match mod move mut pub ref return self Self static struct super trait true type unsafe use
where while async await dyn abstract become box do final macro override priv typeof unsized virtual
yield try""".split())


def upper_snake(name: str) -> str:
    s = re.sub(r"(?<=[a-z0-9])(?=[A-Z])", "_", name)
    return re.sub(r"_+", "_", s).upper()


def snake(name: str) -> str:
    s = upper_snake(name).lower()
    return s + "_" if s in RUST_KEYWORDS else s


def capitalize(name: str) -> str:
    return name[:1].upper() + name[1:]


def uint_for_bits(nbits: int) -> Optional[str]:
    for width, ty in UINT_TYPES.items():
        if nbits <= width:
            return ty
    return None


def body_of(node):
    return node.value if isinstance(node, A.Field) else node.body


@dataclass
class Site:
    node: A.Field | A.LayerDecl
    owner: Optional["Site"]
    type_name: str = ""

    @property
    def name(self) -> str:
        return self.node.name

    @property
    def stem(self) -> str:
        return self.type_name[: -len("Addr")]

    @property
    def cstem(self) -> str:
        return upper_snake(self.stem)


@dataclass
class Deriver:
    spec: A.SpecAst
    arch: ArchConfig = DEFAULT_ARCH
    sink: DiagnosticSink = field(default_factory=DiagnosticSink)

    def __post_init__(self):
        self.out = GeneratedInterface(self.arch.word_bytes, self.arch.page_bytes)
        self.sites: list[Site] = []
        self.by_node: dict[int, Site] = {}
        self.unique: dict[str, Site] = {}
        self._sizes: dict[int, Optional[int]] = {}
        self._fn_names: set = set()
        self._const_names: dict = {}
        self._collect()

    # -- structure ---------------------------------------------------------

    def _collect(self) -> None:
        def visit(node, owner: Optional[Site]):
            if isinstance(node, (A.Field, A.LayerDecl)):
                site = Site(node, owner)
                self.sites.append(site)
                self.by_node[id(node)] = site
                owner = site
            for child in A.children(node):
                visit(child, owner)

        for decl in self.spec.layers:
            visit(decl, None)

        layer_types = {s.name + "Addr" for s in self.sites if isinstance(s.node, A.LayerDecl)}
        owners_of: dict[str, set] = {}
        for s in self.sites:
            if isinstance(s.node, A.Field):
                owners_of.setdefault(s.name, set()).add(s.owner.name)
        for s in self.sites:  # pre-order, so owners are named first
            if isinstance(s.node, A.LayerDecl):
                s.type_name = s.name + "Addr"
            else:
                plain = capitalize(s.name) + "Addr"
                if len(owners_of[s.name]) > 1 or plain in layer_types:
                    s.type_name = f"{s.owner.stem}_{capitalize(s.name)}Addr"
                else:
                    s.type_name = plain
            self.unique.setdefault(s.type_name, s)

    def size(self, node) -> Optional[int]:
        """Static footprint in bytes, or None when it depends on a count."""
        key = id(node)
        if key not in self._sizes:
            self._sizes[key] = self._size(node)
        return self._sizes[key]

    def _size(self, node) -> Optional[int]:
        arch = self.arch
        if isinstance(node, A.Size):
            return eval_bytes(node.expr, arch)
        if isinstance(node, A.Ptr):
            return arch.word_bytes
        if isinstance(node, A.Enum):
            return enum_bytes(len(node.flags))
        if isinstance(node, A.Bits):
            return bits_to_bytes(sum(eval_bits(f.size, arch) for f in node.fields))
        if isinstance(node, A.Field):
            return self.size(node.value)
        if isinstance(node, A.LayerDecl):
            if node.magnitude is not None:
                return eval_bytes(node.magnitude, arch)
            return self.size(node.body)
        if isinstance(node, A.Seq):
            sizes = [self.size(i) for i in node.items]
            return None if None in sizes else sum(sizes)
        if isinstance(node, A.Union):
            sizes = {self.size(a) for a in node.alts}
            return sizes.pop() if len(sizes) == 1 else None
        if isinstance(node, A.Repeat):
            inner = self.size(node.body)
            if inner == 0:
                return 0
            if isinstance(node.count, int) and inner is not None:
                return node.count * inner
        return None

    def alignment(self, node) -> Optional[int]:
        if isinstance(node, A.LayerDecl) and node.alignment is not None:
            return eval_bytes(node.alignment, self.arch)
        return None

    def site_type(self, node) -> str:
        return self.by_node[id(node)].type_name

    def layer_type(self, name: str) -> Optional[str]:
        for s in self.sites:
            if isinstance(s.node, A.LayerDecl) and s.name == name:
                return s.type_name
        for s in self.sites:
            if s.name == name:
                return s.type_name
        return None

    # -- emission helpers -------------------------------------------------

    def add_const(self, name: str, value: int, ty: str = "usize", owner: Optional[str] = None,
                  fmt: Optional[str] = None, qualifier: str = "") -> str:
        """Add a constant; a clash with a different value is resolved by
        prefixing *qualifier*. Returns the name actually used."""
        key = (name, owner)
        if key in self._const_names:
            if self._const_names[key] == value:
                return name
            if not qualifier:
                raise CodegenError(f"constant {name} defined twice with different values")
            return self.add_const(f"{qualifier}_{name}", value, ty, owner, fmt)
        self._const_names[key] = value
        self.out.constants.append(NamedConstant(name, value, ty, owner, fmt))
        return name

    def add_fn(self, kind: str, owner: str, name: str, params: Iterable[tuple[str, str]],
               returns: Optional[str], body: Iterable[ir.Stmt], receiver: bool = True) -> None:
        if (owner, name) in self._fn_names:
            return
        self._fn_names.add((owner, name))
        self.out.functions.append(InterfaceFn(
            kind, owner, name, tuple(Param(n, t) for n, t in params), returns, tuple(body),
            receiver))

    def builtin_types(self) -> list[tuple[str, int]]:
        return [("Byte", 1), ("Word", self.arch.word_bytes), ("Page", self.arch.page_bytes)]

    # -- passes -----------------------------------------------------------

    def derive_address_types(self) -> None:
        taken = set(self.unique)
        for label, nbytes in self.builtin_types():
            name = label + "Addr"
            if name in taken:
                continue
            cstem = upper_snake(label)
            self.add_const(f"{cstem}_BYTES_ALIGN", nbytes)
            self.add_const(f"{cstem}_SIZE", nbytes)
            self.out.address_types.append(AddressType(
                name, label, "builtin", nbytes, nbytes, f"{cstem}_BYTES_ALIGN", False))
        for name, site in self.unique.items():
            align = self.alignment(site.node)
            size = self.size(site.node)
            cstem = site.cstem
            self.add_const(f"{cstem}_BYTES_ALIGN", align or 1)
            if align and align & (align - 1) == 0:
                const = self.add_const(f"{cstem}_ALIGN", align.bit_length() - 1)
                log2 = True
            else:
                const = f"{cstem}_BYTES_ALIGN"
                log2 = False
            if size is not None:
                self.add_const(f"{cstem}_SIZE", size)
            kind = "layer" if isinstance(site.node, A.LayerDecl) else "field"
            self.out.address_types.append(
                AddressType(name, site.name, kind, align or 1, size, const, log2))

    def _members(self, site: Site):
        """Named nodes directly below *site*: (node, offset or None,
        under a repetition, is a seq item)."""
        found = []

        def go(node, off, rep, in_seq):
            if isinstance(node, (A.Field, A.LayerDecl)):
                found.append((node, off, rep, in_seq))
            elif isinstance(node, A.Seq):
                cur = off
                for item in node.items:
                    go(item, cur, rep, True)
                    step = self.size(item)
                    cur = None if cur is None or step is None else cur + step
            elif isinstance(node, A.Union):
                for alt in node.alts:
                    go(alt, off, rep, False)
            elif isinstance(node, A.Repeat):
                go(node.body, off, True, False)

        go(body_of(site.node), 0, False, False)
        return found

    def _positioned(self, site: Site):
        return [(n, off) for n, off, rep, in_seq in self._members(site)
                if in_seq and not rep and off is not None]

    def derive_offsets_and_alignments(self) -> None:
        for name, site in self.unique.items():
            for node, off in self._positioned(site):
                inner = self.by_node[id(node)]
                if inner.type_name == name:
                    continue
                const = self.add_const(f"{inner.cstem}_OFFSET", off, qualifier=site.cstem)
                method = snake(inner.stem)
                self.add_fn("accessor", name, method, (), inner.type_name,
                            [ir.ret(ir.plus(SELF, ir.const(const), inner.type_name))])
                self.add_fn("cast", name, f"from_{method}", [("x", inner.type_name)], name,
                            [ir.ret(ir.minus(ir.var("x"), ir.const(const), name))],
                            receiver=False)

    def derive_boundary_casts(self) -> None:
        for name, site in self.unique.items():
            direct = {id(n) for n, _ in self._positioned(site)}
            found = []

            def go(node, rep, top):
                if isinstance(node, (A.Field, A.LayerDecl)):
                    if not (top and id(node) in direct):
                        found.append((node, rep))
                    go(body_of(node), rep, False)
                elif isinstance(node, A.Seq):
                    if node.items:
                        go(node.items[0], rep, top)
                elif isinstance(node, A.Union):
                    for alt in node.alts:
                        go(alt, rep, top)
                elif isinstance(node, A.Repeat):
                    go(node.body, True, top)

            go(body_of(site.node), False, True)
            for node, rep in found:
                inner = self.by_node[id(node)]
                if inner.type_name == name:
                    continue
                to_inner = [ir.ret(ir.plus(SELF, ir.lit(0), inner.type_name))]
                if rep:
                    self.add_fn("cast", name, f"get_first_{snake(inner.stem)}", (),
                                inner.type_name, to_inner)
                    continue
                self.add_fn("cast", name, f"cast_{snake(site.stem)}_to_{snake(inner.stem)}", (),
                            inner.type_name, to_inner)
                self.add_fn("cast", inner.type_name,
                            f"cast_{snake(inner.stem)}_to_{snake(site.stem)}", (), name,
                            [ir.ret(ir.plus(SELF, ir.lit(0), name))])

    def _element(self, node) -> Optional[tuple[str, str, int]]:
        """(label, address type, byte size) of one repeated element."""
        size = self.size(node)
        if size is None:
            return None
        if isinstance(node, A.LayerDecl):
            return node.origin or node.name, self.site_type(node), size
        if isinstance(node, A.Ptr):
            return f"{node.target}_ptr", self.layer_type(node.target) or "WordAddr", size
        for label, nbytes in self.builtin_types():
            if size == nbytes:
                return label, label + "Addr", size
        return f"Bytes{size}", "ByteAddr", size

    def _size_expr(self, nbytes: int, node) -> ir.Expr:
        if isinstance(node, A.Ptr):
            return ir.const("BYTES_IN_POINTER")
        if nbytes == self.arch.word_bytes and isinstance(node, A.Size):
            return ir.const("BYTES_IN_WORD")
        return ir.lit(nbytes)

    def derive_allocation_patterns(self) -> None:
        for name, site in self.unique.items():
            offsets = {id(n): off for n, off in self._positioned(site)}
            for seq in self._own_seqs(site):
                for a, b in zip(seq.items, seq.items[1:]):
                    if not (isinstance(a, A.Field) and isinstance(b, A.Field)
                            and isinstance(a.value, A.Repeat) and isinstance(b.value, A.Repeat)):
                        continue
                    elem = self._element(a.value.body)
                    if elem is None:
                        self.sink.note(f"no allocation pattern for {a.name}/{b.name} in "
                                       f"{site.name}: element size of {a.name} is not static",
                                       a.pos)
                        continue
                    self._allocation(site, a, b, elem, offsets.get(id(a)))

    def _own_seqs(self, site: Site):
        """Seq nodes whose nearest named ancestor is *site*."""
        out = []

        def go(node):
            if isinstance(node, (A.Field, A.LayerDecl)):
                return
            if isinstance(node, A.Seq):
                out.append(node)
            for child in A.children(node):
                go(child)

        go(body_of(site.node))
        return out

    def _allocation(self, site: Site, a: A.Field, b: A.Field, elem, offset) -> None:
        owner = site.type_name
        first, second = self.site_type(a), self.site_type(b)
        label, elem_ty, nbytes = elem
        if offset is not None:
            self.add_fn("cast", owner, f"cast_{snake(site.stem)}_to_{snake(a.name)}", (), first,
                        [ir.ret(ir.plus(SELF, ir.lit(offset), first))])
        checks = []
        if nbytes > 1:
            checks.append(ir.check(
                ir.binop("eq", ir.binop("rem", ir.var("bytes"), ir.lit(nbytes)), ir.lit(0)),
                f"bytes is a whole number of {label} elements"))
        total = self.size(site.node)
        if total is not None and offset is not None:
            checks.append(ir.check(ir.binop("le", ir.var("bytes"), ir.lit(total - offset)),
                                   f"bytes fits in {site.name}"))
        self.add_fn("init", owner, f"init_{snake(b.name)}_after_{snake(a.name)}",
                    [("p1", first), ("bytes", "usize")], second,
                    checks + [ir.ret(ir.plus(ir.var("p1"), ir.var("bytes"), second))],
                    receiver=False)
        step = self._size_expr(nbytes, a.value.body)
        self.add_fn("bump", owner, f"bump_new_{label}", [("rhs", second)],
                    f"({elem_ty}, {second})",
                    [ir.ret(ir.tup(ir.plus(ir.var("rhs"), ir.lit(0), elem_ty),
                                   ir.plus(ir.var("rhs"), step, second)))],
                    receiver=False)

    def derive_bitfield_accessors(self) -> None:
        for name, site in self.unique.items():
            bits = body_of(site.node)
            if not isinstance(bits, A.Bits):
                continue
            footprint = self.size(bits)
            low = 0
            for f in bits.fields:
                width = eval_bits(f.size, self.arch)
                unit = uint_for_bits(low + width)
                if unit is None or int(unit[1:]) > max(8, footprint * 8):
                    raise CodegenError(f"bit field {f.name} of {site.name} is wider than a "
                                       "loadable container", f.pos)
                key = upper_snake(f.name)
                mask = ((1 << width) - 1) << low
                self.add_const(f"{key}_LOW_BIT", low, owner=name)
                self.add_const(f"{key}_NUM_BITS", width, owner=name)
                self.add_const(f"{key}_MASK", mask, unit, owner=name, fmt="bin")
                if width:
                    self._bit_accessors(name, f.name, key, width, unit)
                low += width

    def _bit_accessors(self, owner: str, fname: str, key: str, width: int, unit: str) -> None:
        mask, lowb = ir.const(f"{key}_MASK", owner), ir.const(f"{key}_LOW_BIT", owner)
        value = ir.binop("shr", ir.binop("and", ir.load(SELF, unit), mask), lowb)
        merged = ir.binop("or", ir.binop("and", ir.var("old"), ir.Expr("not", (mask,), ty=unit)),
                          ir.binop("and", ir.binop("shl", ir.cast(ir.var("val"), unit), lowb),
                                   mask))
        setter = [ir.let("old", ir.load(SELF, unit)), ir.store(SELF, merged, unit)]
        if width == 1:
            self.add_fn("bits_get", owner, f"get_{fname}_bit", (), "bool",
                        [ir.ret(ir.binop("ne", value, ir.lit(0, unit)))])
            self.add_fn("bits_set", owner, f"set_{fname}_bit", [("val", "bool")], None, setter)
        else:
            self.add_fn("bits_get", owner, f"get_{fname}_bits", (), unit, [ir.ret(value)])
            if width < int(unit[1:]):
                setter.insert(0, ir.check(
                    ir.binop("le", ir.var("val"), ir.lit((1 << width) - 1, unit)),
                    f"val fits in {width} bits"))
            self.add_fn("bits_set", owner, f"set_{fname}_bits", [("val", unit)], None, setter)

    def derive_enum_interface(self) -> None:
        for name, site in self.unique.items():
            enum = body_of(site.node)
            if not isinstance(enum, A.Enum):
                continue
            nbytes = enum_bytes(len(enum.flags))
            if nbytes and nbytes not in (1, 2, 4, 8):
                raise CodegenError(f"enum {site.name} needs a {nbytes}-byte footprint", enum.pos)
            ty = UINT_TYPES.get(8 * nbytes, "u8")
            assert len(enum.flags) <= 1 << (8 * nbytes)
            for i, flag in enumerate(enum.flags):
                self.add_const(flag, i, ty, owner=name)
            if nbytes:
                self.add_fn("enum_get", name, "get_flag", (), ty, [ir.ret(ir.load(SELF, ty))])
                self.add_fn("enum_set", name, "set_flag", [("val", ty)], None, [
                    ir.check(ir.binop("lt", ir.var("val"), ir.lit(len(enum.flags), ty)),
                             f"val names one of the {len(enum.flags)} flags"),
                    ir.store(SELF, ir.var("val"), ty)])

    def derive_pointer_accessors(self) -> None:
        for name, site in self.unique.items():
            ptr = body_of(site.node)
            if not isinstance(ptr, A.Ptr):
                continue
            target = self.layer_type(ptr.target)
            if target is None:
                continue
            method = snake(ptr.target)
            self.add_fn("accessor", name, f"get_{method}", (), target,
                        [ir.ret(ir.load(SELF, target))])
            self.add_fn("accessor", name, f"set_{method}", [("ptr", target)], None,
                        [ir.store(SELF, ir.var("ptr"), target)])

    def derive_shared_count_maps(self) -> None:
        for decl_name, site in self.unique.items():
            decl = site.node
            if not isinstance(decl, A.LayerDecl):
                continue
            for formal in decl.formals:
                sites = self._count_sites(decl, formal)
                for i, first in enumerate(sites):
                    for second in sites[i + 1:]:
                        self._map(site, formal, first, second)

    def _count_sites(self, decl: A.LayerDecl, formal: str) -> list[A.Repeat]:
        found = []

        def go(node, top):
            if isinstance(node, A.LayerDecl) and not top and formal in node.formals:
                return  # shadowed
            if isinstance(node, A.Repeat):
                if node.count == formal:
                    found.append(node)
                return
            for child in A.children(node):
                go(child, False)

        go(decl, True)
        return found

    def _map(self, site: Site, formal: str, first: A.Repeat, second: A.Repeat) -> None:
        src, dst = self._element(first.body), self._element(second.body)
        if src is None or dst is None:
            self.sink.note(f"no {formal}-indexed map in {site.name}: element sizes are not "
                           "static", first.pos)
            return
        (slabel, sty, ssize), (dlabel, dty, dsize) = src, dst
        name = f"{slabel}2{dlabel}"
        if any(r.name == name for r in self.out.records):
            name = f"{site.stem}{name}"
            if any(r.name == name for r in self.out.records):
                return
        self.out.records.append(Record(name, (
            RecordField("f_base", sty), RecordField("t_base", dty), RecordField("end", dty)),
            f"{dlabel} element for each {slabel} element, both repeated {formal} times"))
        diff = ir.binop("sub", ir.addr_of(ir.var("f_a")), ir.addr_of(ir.rfield("f_base")))
        if ssize and ssize & (ssize - 1) == 0:
            index = ir.binop("shr", diff, ir.lit(ssize.bit_length() - 1))
        else:
            index = ir.binop("div", diff, ir.lit(ssize))
        step = ir.var("idx") if dsize == 1 else ir.binop("mul", ir.var("idx"), ir.lit(dsize))
        locate = [
            ir.check(ir.binop("ge", ir.addr_of(ir.var("f_a")), ir.addr_of(ir.rfield("f_base"))),
                     "f_a >= f_base"),
            ir.let("idx", index),
            ir.let("loc", ir.plus(ir.rfield("t_base"), step, dty)),
            ir.check(ir.binop("gt", ir.addr_of(ir.rfield("end")), ir.addr_of(ir.var("loc"))),
                     "end > loc"),
        ]
        self.add_fn("map_addr", name, "lookup", [("f_a", sty)], dty,
                    locate + [ir.ret(ir.var("loc"))])
        vty = UINT_TYPES.get(8 * dsize)
        if vty is None:
            return
        self.add_fn("map_set", name, "set", [("f_a", sty), ("val", vty)], None,
                    locate + [ir.store(ir.var("loc"), ir.var("val"), vty)])
        self.add_fn("map_get", name, "get", [("f_a", sty)], vty,
                    locate + [ir.ret(ir.load(ir.var("loc"), vty))])

    def derive_contains_conversions(self) -> None:
        for name, site in self.unique.items():
            decl = site.node
            if not isinstance(decl, A.LayerDecl):
                continue
            for inner_name in decl.contains:
                reason = self._contains_problem(decl, inner_name)
                if reason:
                    self.sink.warning(f"contains({inner_name}) on {decl.name} yields no "
                                      f"conversion: {reason}", decl.pos)
                    continue
                inner = self.layer_type(inner_name)
                size = self.size(decl)
                self.add_fn("contains_up", inner, f"containing_{snake(decl.name)}", (), name, [
                    ir.ret(ir.wrap(ir.binop("and", ir.addr_of(SELF), ir.Expr(
                        "not", (ir.binop("sub", ir.const(f"{site.cstem}_SIZE"), ir.lit(1)),),
                        ty="usize")), name))])
                self.add_fn("contains_down", name, f"first_{snake(inner_name)}", (), inner,
                            [ir.ret(ir.plus(SELF, ir.lit(0), inner))])
                inner_site = self.unique[inner]
                inner_size = self.size(inner_site.node)
                if inner_size:
                    self.add_const(f"{inner_site.cstem}_STRIDE", inner_size)
                assert size is not None

    def _contains_problem(self, decl: A.LayerDecl, inner_name: str) -> Optional[str]:
        size, align = self.size(decl), self.alignment(decl)
        if decl.magnitude is None or size is None:
            return f"{decl.name} declares no magnitude"
        if size & (size - 1) or size == 0:
            return f"its size {size} is not a power of two"
        if align != size:
            return f"its alignment is not its size ({size} bytes)"
        inner = next((s for s in self.sites if isinstance(s.node, A.LayerDecl)
                      and s.name == inner_name), None)
        if inner is None:
            return f"{inner_name} is not a layer"
        inner_align = self.alignment(inner.node) or 1
        if size % inner_align:
            return f"{inner_name}'s alignment {inner_align} does not divide {size}"
        return None

    # -- driver ---------------------------------------------------------

    PASSES = ("derive_offsets_and_alignments", "derive_boundary_casts",
              "derive_pointer_accessors", "derive_allocation_patterns",
              "derive_bitfield_accessors", "derive_enum_interface",
              "derive_shared_count_maps", "derive_contains_conversions")

    def run(self, passes: Iterable[str] = PASSES) -> GeneratedInterface:
        word = self.arch.word_bytes
        self.add_const("BYTES_IN_WORD", word)
        self.add_const("BYTES_IN_POINTER", word)
        self.add_const("BYTES_IN_PAGE", self.arch.page_bytes)
        self.derive_address_types()
        for p in passes:
            getattr(self, p)()
        check_interface(self.out)
        return self.out


PRIMITIVES = frozenset(["bool", "usize", *UINT_TYPES.values()])


def check_interface(gi: GeneratedInterface) -> None:
    names = [t.name for t in gi.address_types]
    if len(set(names)) != len(names):
        raise CodegenError("duplicate address type names")
    known = set(names) | PRIMITIVES
    records = {r.name for r in gi.records}
    for f in gi.functions:
        tys = [p.ty for p in f.params]
        if f.returns:
            tys += [t.strip() for t in f.returns.strip("()").split(",")]
        for ty in tys:
            if ty not in known:
                raise CodegenError(f"{f.owner}::{f.name} references undeclared type {ty}")
        if f.owner not in known and f.owner not in records:
            raise CodegenError(f"{f.name} belongs to undeclared type {f.owner}")


def check_word_width(gi: GeneratedInterface) -> None:
    """Every constant and literal must fit its type on the target."""
    word_bits = gi.word_bytes * 8

    def bits_of(ty: Optional[str]) -> int:
        if ty in UINT_TYPES.values():
            return int(ty[1:])
        return word_bits

    def check(value: int, ty: Optional[str], what: str):
        if value < 0 or value >= 1 << bits_of(ty):
            raise CodegenError(f"{what} = {value} does not fit in {bits_of(ty)} bits")

    for c in gi.constants:
        check(c.value, c.ty, f"constant {c.name}")

    def walk(e: ir.Expr, where: str):
        if e.op == "lit":
            check(e.value, e.ty, f"literal in {where}")
        for a in e.args:
            walk(a, where)

    for f in gi.functions:
        for s in f.body:
            for a in s.args:
                walk(a, f"{f.owner}::{f.name}")


def _make(passes: tuple[str, ...]) -> Callable:
    def derive(spec: A.SpecAst, arch: ArchConfig = DEFAULT_ARCH,
               sink: Optional[DiagnosticSink] = None) -> GeneratedInterface:
        return Deriver(spec, arch, sink or DiagnosticSink()).run(passes)
    return derive


derive_interface = _make(Deriver.PASSES)
derive_offsets_and_alignments = _make(("derive_offsets_and_alignments",))
derive_boundary_casts = _make(("derive_boundary_casts",))
derive_allocation_patterns = _make(("derive_allocation_patterns",))
derive_bitfield_accessors = _make(("derive_bitfield_accessors",))
derive_enum_interface = _make(("derive_enum_interface",))
derive_shared_count_maps = _make(("derive_shared_count_maps",))
derive_contains_conversions = _make(("derive_contains_conversions",))
