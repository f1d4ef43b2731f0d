"""Pretty-printer; ``parse(format_spec(ast)) == ast`` for parser output."""

from __future__ import annotations

from . import ast as A

_LIT_PREC = {"+": 1, "-": 1, "*": 2, "/": 2, "^": 3}


def format_lit(lit: A.Lit, min_prec: int = 0) -> str:
    if isinstance(lit, A.Num):
        return bin(lit.value) if lit.binary else str(lit.value)
    prec = _LIT_PREC[lit.op]
    if lit.op == "^":
        text = f"{format_lit(lit.left, prec + 1)}^{format_lit(lit.right, prec)}"
    else:
        text = f"{format_lit(lit.left, prec)} {lit.op} {format_lit(lit.right, prec + 1)}"
    return f"({text})" if prec < min_prec else text


def format_size(expr: A.SizeArith, right_operand: bool = False) -> str:
    if isinstance(expr, A.Scaled):
        if expr.factor is None:
            return expr.unit
        return f"{format_lit(expr.factor, 2)} {expr.unit}"
    text = f"{format_size(expr.left)} {expr.op} {format_size(expr.right, True)}"
    return f"({text})" if right_operand else text


def format_demarc(node, indent: int = 0) -> str:
    pad = "  " * (indent + 1)
    if isinstance(node, A.Field):
        return f"{node.name} : {format_demarc(node.value, indent)}"
    if isinstance(node, A.LayerDecl):
        return format_layer(node, indent)
    if isinstance(node, A.Repeat):
        inner = format_demarc(node.body, indent)
        if isinstance(node.body, A.Repeat):
            inner = f"({inner})"
        return f"{node.count} {inner}"
    if isinstance(node, A.Enum):
        return "enum { " + " | ".join(node.flags) + " }"
    if isinstance(node, A.Bits):
        fields = ", ".join(f"{f.name} : {format_size(f.size)}" for f in node.fields)
        return "bits { " + fields + " }"
    if isinstance(node, (A.Seq, A.Union)):
        keyword, sep = ("seq", ",") if isinstance(node, A.Seq) else ("union", " |")
        members = node.items if isinstance(node, A.Seq) else node.alts
        lines = [pad + format_demarc(m, indent + 1) for m in members]
        return f"{keyword} {{\n" + f"{sep}\n".join(lines) + "\n" + "  " * indent + "}"
    if isinstance(node, A.Ptr):
        return f"{node.target} ptr"
    if isinstance(node, A.Size):
        text = format_size(node.expr)
        return f"({text})" if isinstance(node.expr, A.SizeOp) else text
    if isinstance(node, A.Macro):
        if not node.args:
            return node.name
        return f"{node.name}<{', '.join(str(a) for a in node.args)}>"
    raise TypeError(f"cannot format {node!r}")


def format_layer(decl: A.LayerDecl, indent: int = 0) -> str:
    parts = [decl.name]
    if decl.formals:
        parts[0] += "<" + ", ".join(decl.formals) + ">"
    if decl.magnitude is not None and decl.magnitude == decl.alignment:
        parts.append(f"@|{format_size(decl.magnitude)}|@")
    elif decl.magnitude is not None:
        parts.append(f"||{format_size(decl.magnitude)}||")
    if decl.alignment is not None and decl.alignment != decl.magnitude:
        parts.append(f"@({format_size(decl.alignment)})@")
    parts.extend(f"contains({c})" for c in decl.contains)
    parts.append("->")
    parts.append(format_demarc(decl.body, indent))
    return " ".join(parts)


def format_spec(spec: A.SpecAst) -> str:
    return "".join(format_layer(decl) + "\n" for decl in spec.layers)
