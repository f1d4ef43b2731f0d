"""Tokenizer for `.flp` layout specifications."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..diagnostics import LexError, Pos

KEYWORDS = frozenset({"seq", "union", "enum", "bits", "ptr", "contains", "bytes", "words", "pages"})
UNITS = ("bits", "bytes", "words", "pages")

# Longest first so that `||` wins over `|` and `->` over `-`.
PUNCTUATION = ("->", "||", "@|", "|@", "|", "@", "(", ")", "{", "}", "<", ">",
               ",", ":", "#", "+", "-", "*", "/", "^")


@dataclass(frozen=True)
class Token:
    kind: str  # UPPER, LOWER, INT, EOF, or the keyword/punctuation text itself
    text: str
    pos: Pos
    value: Optional[int] = None

    def __repr__(self) -> str:
        return f"Token({self.kind!r}, {self.text!r}, {self.pos})"


def _is_ident_char(ch: str) -> bool:
    return ch.isascii() and (ch.isalnum() or ch == "_")


def tokenize(source: str) -> list[Token]:
    """Split *source* into tokens, dropping whitespace and comments.

    The returned list always ends with a single EOF token.
    """
    tokens: list[Token] = []
    i, line, col = 0, 1, 1
    n = len(source)

    def advance(k: int) -> None:
        nonlocal i, line, col
        for _ in range(k):
            if source[i] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    while i < n:
        ch = source[i]
        if ch in " \t\r\n\f\v":
            advance(1)
            continue
        if source.startswith("//", i):
            while i < n and source[i] != "\n":
                advance(1)
            continue
        if source.startswith("/*", i):
            start = Pos(line, col)
            end = source.find("*/", i + 2)
            if end < 0:
                raise LexError("unterminated block comment", start)
            advance(end + 2 - i)
            continue

        pos = Pos(line, col)
        if ch.isascii() and ch.isdigit():
            if source.startswith(("0b", "0B"), i):
                j = i + 2
                while j < n and source[j] in "01":
                    j += 1
                if j == i + 2:
                    raise LexError("binary literal needs at least one digit", Pos(line, col + 2))
                if j < n and _is_ident_char(source[j]):
                    bad = Pos(line, col + (j - i))
                    raise LexError(f"malformed binary literal: unexpected {source[j]!r}", bad)
                text = source[i:j]
                tokens.append(Token("INT", text, pos, int(text[2:], 2)))
                advance(j - i)
                continue
            j = i
            while j < n and source[j].isascii() and source[j].isdigit():
                j += 1
            text = source[i:j]
            tokens.append(Token("INT", text, pos, int(text)))
            advance(j - i)
            continue
        if ch.isascii() and ch.isalpha():
            j = i
            while j < n and _is_ident_char(source[j]):
                j += 1
            text = source[i:j]
            if "__" in text:
                raise LexError(f"identifier {text!r} contains reserved '__'", pos)
            if text in KEYWORDS:
                kind = text
            else:
                kind = "UPPER" if ch.isupper() else "LOWER"
            tokens.append(Token(kind, text, pos))
            advance(j - i)
            continue
        for punct in PUNCTUATION:
            if source.startswith(punct, i):
                tokens.append(Token(punct, punct, pos))
                advance(len(punct))
                break
        else:
            raise LexError(f"illegal character {ch!r}", pos)

    tokens.append(Token("EOF", "", Pos(line, col)))
    return tokens
