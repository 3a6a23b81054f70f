"""
Textual query syntax.

    union   := concat ('+' concat)*
    concat  := postfix postfix*
    postfix := primary '*'*
    primary := LABEL | 'eps' | '(' union ')'

Labels are ASCII alphanumeric-plus-underscore tokens, the same alphabet as
graph identifiers; juxtaposition (whitespace)
is concatenation.
"""

import re
from enum import Enum
from typing import Iterator, List, NamedTuple

from rpq_lab.core.errors import ParseError
from rpq_lab.rpq.ast import EPS, Atom, Concat, Epsilon, Regex, Star, Union

EPS_KEYWORD = "eps"


class Kind(Enum):
    PLUS = "+"
    STAR = "*"
    LPAR = "("
    RPAR = ")"
    LABEL = "label"
    EPS = "eps"
    EOF = "end of input"


class Token(NamedTuple):
    kind: Kind
    text: str
    pos: int


_SINGLE = {"+": Kind.PLUS, "*": Kind.STAR, "(": Kind.LPAR, ")": Kind.RPAR}
_LABEL_RE = re.compile(r"[A-Za-z0-9_]+")


def tokenize(text: str) -> Iterator[Token]:
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in _SINGLE:
            yield Token(_SINGLE[ch], ch, i)
            i += 1
        else:
            m = _LABEL_RE.match(text, i)
            if m is None:
                raise ParseError(f"unexpected character {ch!r}", i)
            tok = m.group()
            yield Token(Kind.EPS if tok == EPS_KEYWORD else Kind.LABEL, tok, i)
            i = m.end()
    yield Token(Kind.EOF, "", n)


class TokenStream:
    """Token source with one-token lookahead and push-back."""

    def __init__(self, tokens: Iterator[Token]):
        self.tokens = tokens
        self.buffer: List[Token] = []

    def get(self) -> Token:
        if self.buffer:
            return self.buffer.pop()
        return next(self.tokens)

    def unget(self, token: Token) -> None:
        self.buffer.append(token)

    def peek(self) -> Token:
        token = self.get()
        self.unget(token)
        return token

    def expect(self, kind: Kind) -> Token:
        token = self.get()
        if token.kind is not kind:
            raise ParseError(f"expected {kind.value!r}, found {token.kind.value!r}", token.pos)
        return token


_STARTS_PRIMARY = (Kind.LABEL, Kind.EPS, Kind.LPAR)


# Both binary operators associate to the right: "a b c" is Concat(a, Concat(b, c)).
def _fold_right(node_type, parts: List[Regex]) -> Regex:
    node = parts[-1]
    for part in reversed(parts[:-1]):
        node = node_type(part, node)
    return node


def _parse_union(ts: TokenStream) -> Regex:
    parts = [_parse_concat(ts)]
    while ts.peek().kind is Kind.PLUS:
        ts.get()
        parts.append(_parse_concat(ts))
    return _fold_right(Union, parts)


def _parse_concat(ts: TokenStream) -> Regex:
    parts = [_parse_postfix(ts)]
    while ts.peek().kind in _STARTS_PRIMARY:
        parts.append(_parse_postfix(ts))
    return _fold_right(Concat, parts)


def _parse_postfix(ts: TokenStream) -> Regex:
    node = _parse_primary(ts)
    while ts.peek().kind is Kind.STAR:
        ts.get()
        node = Star(node)
    return node


def _parse_primary(ts: TokenStream) -> Regex:
    token = ts.get()
    if token.kind is Kind.LABEL:
        return Atom(token.text)
    if token.kind is Kind.EPS:
        return EPS
    if token.kind is Kind.LPAR:
        node = _parse_union(ts)
        ts.expect(Kind.RPAR)
        return node
    raise ParseError(f"unexpected {token.kind.value!r}", token.pos)


def parse_query(text: str) -> Regex:
    """Parse a query; raises ParseError with the offending character offset."""
    ts = TokenStream(tokenize(text))
    node = _parse_union(ts)
    ts.expect(Kind.EOF)
    return node


# ============================================================================
# PRINTING
# ============================================================================

_PREC_UNION, _PREC_CONCAT, _PREC_STAR = 0, 1, 2


def _prec(r: Regex) -> int:
    if isinstance(r, Union):
        return _PREC_UNION
    if isinstance(r, Concat):
        return _PREC_CONCAT
    return _PREC_STAR + 1


def _wrap(r: Regex, min_prec: int) -> str:
    text = to_text(r)
    return f"({text})" if _prec(r) < min_prec else text


def to_text(r: Regex) -> str:
    """Canonical form with minimal parentheses; parse_query(to_text(r)) == r."""
    if isinstance(r, Epsilon):
        return EPS_KEYWORD
    if isinstance(r, Atom):
        return r.label
    if isinstance(r, Star):
        inner = r.inner
        text = to_text(inner)
        if isinstance(inner, (Union, Concat)):
            text = f"({text})"
        return text + "*"
    if isinstance(r, Concat):
        return f"{_wrap(r.left, _PREC_CONCAT + 1)} {_wrap(r.right, _PREC_CONCAT)}"
    return f"{_wrap(r.left, _PREC_UNION + 1)} + {_wrap(r.right, _PREC_UNION)}"
