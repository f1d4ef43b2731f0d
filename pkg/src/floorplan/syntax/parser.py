"""Recursive-descent parser producing a :class:`SpecAst`.

Size arithmetic precedence: ``^`` (right) > ``*`` ``/`` (left) > ``+`` ``-``
(left). A ``@|sz|@`` annotation is desugared here into equal magnitude and
alignment. Ambiguity between a layer declaration and a macro reference is
resolved by backtracking: an upper-case identifier is a declaration only if
its header is followed by ``->``.
"""

from __future__ import annotations

from typing import Optional

from ..diagnostics import ParseError
from . import ast as A
from .lexer import UNITS, Token, tokenize

_LIT_PREC = {"+": 1, "-": 1, "*": 2, "/": 2, "^": 3}


class _Backtrack(Exception):
    pass


class Parser:
    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.i = 0
        self.errors: list[ParseError] = []

    # -- token helpers -----------------------------------------------------

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def at(self, *kinds: str) -> bool:
        return self.tok.kind in kinds

    def take(self, *kinds: str) -> Token:
        if self.tok.kind not in kinds:
            shown = self.tok.text or "end of input"
            raise ParseError(f"unexpected {shown!r}", self.tok.pos, frozenset(kinds))
        tok = self.tok
        self.i += 1
        return tok

    def accept(self, kind: str) -> Optional[Token]:
        if self.tok.kind == kind:
            return self.take(kind)
        return None

    # -- top level ---------------------------------------------------------

    def parse_spec(self) -> A.SpecAst:
        layers = []
        while not self.at("EOF"):
            start = self.i
            try:
                layers.append(self.top_layer())
            except ParseError as err:
                self.errors.append(err)
                self._resync(start)
        if self.errors:
            first = self.errors[0]
            first.errors = list(self.errors)  # type: ignore[attr-defined]
            raise first
        return A.SpecAst(tuple(layers))

    def _resync(self, start: int) -> None:
        """Skip to the next plausible top-level declaration (an upper-case
        identifier in column 1 at brace depth zero)."""
        self.i = max(self.i, start + 1)
        depth = 0
        for tok in self.toks[start:self.i]:
            depth += (tok.kind == "{") - (tok.kind == "}")
        while not self.at("EOF"):
            if depth <= 0 and self.tok.kind == "UPPER" and self.tok.pos.col == 1:
                return
            depth += (self.tok.kind == "{") - (self.tok.kind == "}")
            self.i += 1

    def top_layer(self) -> A.LayerDecl:
        if self.accept("("):
            decl = self.top_layer()
            self.take(")")
            return decl
        if not self.at("UPPER"):
            raise ParseError(f"unexpected {self.tok.text or 'end of input'!r}", self.tok.pos,
                             frozenset({"layer-id", "("}))
        return self.layer_simple(commit=True)

    # -- layers ------------------------------------------------------------

    def layer_simple(self, commit: bool) -> A.LayerDecl:
        """Parse ``Name<formals>? mag? align? contains* -> demarc-val``.

        With ``commit=False`` any failure before ``->`` raises _Backtrack.
        """
        start = self.i
        try:
            name_tok = self.take("UPPER")
            formals: list[str] = []
            if self.accept("<"):
                formals.append(self.take("LOWER").text)
                while self.accept(","):
                    if self.at(">"):
                        break
                    formals.append(self.take("LOWER").text)
                self.take(">")
            magnitude = alignment = None
            if self.at("@|"):
                self.take("@|")
                magnitude = alignment = self.size_arith()
                self.take("|@")
            else:
                if self.at("||", "|"):
                    closer = self.take("||", "|").kind
                    magnitude = self.size_arith()
                    self.take(closer)
                if self.at("@"):
                    self.take("@")
                    self.take("(")
                    alignment = self.size_arith()
                    self.take(")")
                    self.accept("@")
            contains = []
            while self.accept("contains"):
                self.take("(")
                contains.append(self.take("UPPER").text)
                self.take(")")
            self.take("->")
        except ParseError as err:
            if commit:
                raise
            self.i = start
            raise _Backtrack() from err
        if len(set(formals)) != len(formals):
            raise ParseError(f"duplicate formal parameter in {name_tok.text}", name_tok.pos)
        body = self.demarc_val()
        return A.LayerDecl(name_tok.text, tuple(formals), magnitude, alignment,
                           tuple(contains), body, name_tok.pos)

    # -- demarcations ------------------------------------------------------

    def demarc(self) -> A.Demarc:
        if self.at("LOWER") and self.peek().kind == ":":
            name = self.take("LOWER")
            self.take(":")
            return A.Field(name.text, self.demarc_val(), name.pos)
        return self.demarc_val()

    def demarc_val(self):
        pos = self.tok.pos
        if self.accept("#"):
            return A.Repeat("#", self.demarc_body(), pos)
        if self.at("LOWER") and self.peek().kind != "ptr":
            formal = self.take("LOWER").text
            return A.Repeat(formal, self.demarc_body(), pos)
        return self.demarc_body()

    def demarc_body(self):
        tok = self.tok
        kind = tok.kind
        if kind == "enum":
            return self.enum()
        if kind == "bits" and self.peek().kind == "{":
            return self.bits()
        if kind in ("union", "seq"):
            return self.group()
        if kind in ("UPPER", "LOWER") and self.peek().kind == "ptr":
            self.i += 2
            return A.Ptr(tok.text, tok.pos)
        if kind == "UPPER":
            try:
                return self.layer_simple(commit=False)
            except _Backtrack:
                return self.macro()
        if kind == "(":
            size = self.try_size()
            if size is not None:
                return size
            self.take("(")
            inner = self.demarc_val()
            self.take(")")
            return inner
        if kind == "INT" or kind in UNITS:
            return A.Size(self.size_arith(), tok.pos)
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.pos,
                         frozenset({"#", "formal-id", "enum", "bits", "union", "seq",
                                    "layer-id", "size", "("}))

    def try_size(self) -> Optional[A.Size]:
        start = self.i
        try:
            return A.Size(self.size_arith(), self.toks[start].pos)
        except ParseError:
            self.i = start
            return None

    def enum(self) -> A.Enum:
        pos = self.take("enum").pos
        self.take("{")
        flags = [self.take("UPPER").text]
        while self.accept("|"):
            if self.at("}"):
                break
            flags.append(self.take("UPPER").text)
        self.take("}")
        return A.Enum(tuple(flags), pos)

    def bits(self) -> A.Bits:
        pos = self.take("bits").pos
        self.take("{")
        fields = [self.bits_field()]
        while self.accept(","):
            if self.at("}"):
                break
            fields.append(self.bits_field())
        self.take("}")
        return A.Bits(tuple(fields), pos)

    def bits_field(self) -> A.BitsField:
        name = self.take("UPPER", "LOWER")
        self.take(":")
        return A.BitsField(name.text, self.size_arith(), name.pos)

    def group(self):
        head = self.take("union", "seq")
        sep = "|" if head.kind == "union" else ","
        self.take("{")
        items = [self.demarc()]
        while self.accept(sep):
            if self.at("}"):
                break
            items.append(self.demarc())
        self.take("}")
        cls = A.Union if head.kind == "union" else A.Seq
        return cls(tuple(items), head.pos)

    def macro(self) -> A.Macro:
        name = self.take("UPPER")
        args: list = []
        if self.accept("<"):
            args.append(self.macro_arg())
            while self.accept(","):
                if self.at(">"):
                    break
                args.append(self.macro_arg())
            self.take(">")
        return A.Macro(name.text, tuple(args), name.pos)

    def macro_arg(self):
        tok = self.take("LOWER", "INT")
        return tok.value if tok.kind == "INT" else tok.text

    # -- size arithmetic ---------------------------------------------------

    def size_arith(self) -> A.SizeArith:
        left = self.size_term()
        while self.at("+", "-"):
            op = self.take("+", "-")
            right = self.size_term()
            left = A.SizeOp(op.kind, left, right, op.pos)
        return left

    def size_term(self) -> A.SizeArith:
        tok = self.tok
        if tok.kind in UNITS:
            self.i += 1
            return A.Scaled(tok.kind, None, tok.pos)
        start = self.i
        if tok.kind in ("INT", "("):
            try:
                factor = self.lit_arith(0)
                unit = self.take(*UNITS)
                return A.Scaled(unit.kind, factor, tok.pos)
            except ParseError:
                self.i = start
        if tok.kind == "(":
            self.take("(")
            inner = self.size_arith()
            self.take(")")
            return inner
        raise ParseError(f"unexpected {tok.text or 'end of input'!r} in size expression",
                         tok.pos, frozenset({"literal", "(", *UNITS}))

    def lit_arith(self, min_prec: int) -> A.Lit:
        left = self.lit_atom()
        while self.tok.kind in _LIT_PREC and _LIT_PREC[self.tok.kind] >= min_prec:
            op = self.take(self.tok.kind)
            prec = _LIT_PREC[op.kind]
            right = self.lit_arith(prec if op.kind == "^" else prec + 1)
            left = A.LitOp(op.kind, left, right, op.pos)
        return left

    def lit_atom(self) -> A.Lit:
        tok = self.tok
        if tok.kind == "INT":
            self.i += 1
            return A.Num(tok.value, tok.text.lower().startswith("0b"), tok.pos)
        if tok.kind == "(":
            self.take("(")
            inner = self.lit_arith(0)
            self.take(")")
            return inner
        raise ParseError(f"unexpected {tok.text or 'end of input'!r} in literal arithmetic",
                         tok.pos, frozenset({"literal", "("}))


def parse_tokens(tokens: list[Token]) -> A.SpecAst:
    return Parser(tokens).parse_spec()


def parse(source: str) -> A.SpecAst:
    """Tokenize and parse *source* into a :class:`SpecAst`."""
    return parse_tokens(tokenize(source))
