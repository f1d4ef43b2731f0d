"""Surface syntax: tokenizer, parser and pretty-printer."""

from .ast import SpecAst
from .lexer import Token, tokenize
from .parser import parse, parse_tokens
from .printer import format_spec

__all__ = ["SpecAst", "Token", "format_spec", "parse", "parse_tokens", "tokenize"]
