"""Algebra definition files and the expression grammar.

File grammar (line oriented, ``#`` starts a comment)::

    generators: A B C
    degrees: A=1 B=1 C=1               # optional, default 1
    params: alpha beta lambda          # optional
    mode: strict | permissive cap=N    # optional, default strict
    assume: lambda + 1                 # optional, repeatable: nonzero factors
    rel: [B,A] = lambda*A*B + C

Expressions use ``+ - * / ^`` and parentheses.  ``^`` takes a positive integer
literal and binds tightest; juxtaposition is an error.  Generators do not
commute with each other, parameters commute with everything, and division is
only by scalar (generator-free) expressions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .coeffring import RatFunc, as_coeff
from .freealg import NCPoly, is_ordered, word_key, word_str
from .relations import DEFAULT_CAP, RelationSet, validate

__all__ = ["ParseError", "format_algebra", "parse_algebra_file", "parse_expression", "parse_scalar"]


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.message, self.line, self.col = message, line, col
        where = f"line {line}, col {col}: " if line else (f"col {col}: " if col else "")
        super().__init__(where + message)


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^(){}\[\],=]))"
)


@dataclass
class _Tok:
    kind: str
    text: str
    col: int


def _tokenize(text: str, line: int, col0: int = 1):
    toks = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col0 + pos)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append(_Tok(kind, m.group(kind), col0 + start))
        pos = m.end()
    toks.append(_Tok("end", "", col0 + len(text)))
    return toks


class _ExprParser:
    def __init__(self, toks, generators, params, line, allow_brackets):
        self.toks = toks
        self.k = 0
        self.gens = tuple(generators)
        self.gindex = {g: i for i, g in enumerate(self.gens)}
        self.params = set(params)
        self.line = line
        self.allow_brackets = allow_brackets

    def peek(self):
        return self.toks[self.k]

    def take(self, text=None):
        t = self.toks[self.k]
        if text is not None and t.text != text:
            found = t.text or "end of input"
            raise ParseError(f"expected {text!r}, found {found!r}", self.line, t.col)
        self.k += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, self.line, tok.col)

    def parse(self, stop=("end",)):
        v = self.expr()
        t = self.peek()
        if t.kind not in stop and t.text not in stop:
            if t.kind in ("num", "ident") or t.text in "({[":
                raise self.error("juxtaposition is not allowed; use '*'")
            raise self.error(f"unexpected {t.text!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek().text in ("+", "-"):
            op = self.take().text
            rhs = self.term()
            v = v + rhs if op == "+" else v - rhs
        return v

    def term(self):
        v = self.unary()
        while True:
            t = self.peek()
            if t.text == "*":
                self.take()
                v = v * self.unary()
            elif t.text == "/":
                self.take()
                d = self.unary()
                if any(w for w in d.terms):
                    raise self.error("division by an expression containing generators", t)
                c = d.coeff(())
                if not c:
                    raise self.error("division by zero", t)
                v = v.scale(1 / RatFunc.coerce(c))
            elif t.kind in ("num", "ident") or t.text in ("(", "{") or (t.text == "[" and self.allow_brackets):
                raise self.error("juxtaposition is not allowed; use '*'")
            else:
                return v

    def unary(self):
        t = self.peek()
        if t.text == "-":
            self.take()
            return -self.unary()
        if t.text == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek().text == "^":
            self.take()
            t = self.peek()
            if t.kind != "num":
                raise self.error("exponent must be a positive integer literal")
            self.take()
            k = int(t.text)
            if k < 1:
                raise ParseError("exponent must be a positive integer", self.line, t.col)
            base = base ** k
            if self.peek().text == "^":
                raise self.error("chained '^' is ambiguous; use parentheses")
        return base

    def atom(self):
        t = self.peek()
        if t.kind == "num":
            self.take()
            return NCPoly.scalar(int(t.text), self.gens)
        if t.kind == "ident":
            self.take()
            if t.text in self.gindex:
                return NCPoly.gen(self.gindex[t.text], self.gens)
            if t.text in self.params:
                return NCPoly.scalar(RatFunc.symbol(t.text), self.gens)
            raise ParseError(f"unknown symbol {t.text!r}", self.line, t.col)
        if t.text == "(":
            self.take()
            v = self.expr()
            self.take(")")
            return v
        if t.text in ("{", "[") and self.allow_brackets:
            close = "}" if t.text == "{" else "]"
            self.take()
            x = self.expr()
            self.take(",")
            y = self.expr()
            self.take(close)
            return x * y + y * x if close == "}" else x * y - y * x
        if t.text in ("{", "["):
            raise self.error("bracket syntax is only accepted in expressions and Casimir files")
        if t.kind == "end":
            raise self.error("unexpected end of expression")
        raise self.error(f"unexpected {t.text!r}")


def parse_expression(text: str, generators: Sequence[str], params: Sequence[str] = (),
                     allow_brackets: bool = True, line: int = 0, col0: int = 1) -> NCPoly:
    """Parse an element of the free algebra; ``{X,Y}`` and ``[X,Y]`` expand at once."""
    toks = _tokenize(text, line, col0)
    return _ExprParser(toks, generators, params, line, allow_brackets).parse()


def parse_scalar(text: str, params: Sequence[str] = ()):
    """Parse a generator-free expression into a rational or RatFunc."""
    p = parse_expression(text, (), params, allow_brackets=False)
    return as_coeff(p.coeff(()))


_HEADER = re.compile(r"^\s*([a-z]+)\s*:(.*)$")
_IDENT = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_REL = re.compile(r"^\s*\[\s*([A-Za-z_][A-Za-z0-9_]*)\s*,\s*([A-Za-z_][A-Za-z0-9_]*)\s*\]\s*=(.*)$")


def parse_algebra_file(text: str) -> RelationSet:
    generators = None
    degrees = None
    params: list = []
    mode, cap = "strict", DEFAULT_CAP
    assumes = []
    rels = []  # (line, col_of_rhs, j, i, rhs_text)
    seen_pairs = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        m = _HEADER.match(line)
        if not m:
            raise ParseError("expected 'key: value'", lineno, 1)
        key, body = m.group(1), m.group(2)
        body_col = m.start(2) + 1
        if key == "generators":
            if generators is not None:
                raise ParseError("duplicate generators line", lineno, 1)
            generators = body.split()
            if not generators:
                raise ParseError("no generators declared", lineno, body_col)
            for g in generators:
                if not _IDENT.match(g):
                    raise ParseError(f"bad generator name {g!r}", lineno, body_col + body.index(g))
            if len(set(generators)) != len(generators):
                raise ParseError("duplicate generator name", lineno, body_col)
        elif key == "degrees":
            if generators is None:
                raise ParseError("degrees must follow the generators line", lineno, 1)
            degrees = {}
            for item in body.split():
                name, eq, val = item.partition("=")
                col = body_col + body.index(item)
                if not eq or name not in generators:
                    raise ParseError(f"bad degree entry {item!r}", lineno, col)
                if not val.isdigit() or int(val) < 1:
                    raise ParseError(f"degree must be a positive integer in {item!r}", lineno, col)
                degrees[name] = int(val)
        elif key == "params":
            params = body.split()
            for p in params:
                if not _IDENT.match(p):
                    raise ParseError(f"bad parameter name {p!r}", lineno, body_col + body.index(p))
        elif key == "mode":
            parts = body.split()
            if not parts or parts[0] not in ("strict", "permissive"):
                raise ParseError("mode must be 'strict' or 'permissive cap=N'", lineno, body_col)
            mode = parts[0]
            for extra in parts[1:]:
                k, _, v = extra.partition("=")
                if k != "cap" or not v.isdigit() or mode != "permissive":
                    raise ParseError(f"bad mode option {extra!r}", lineno, body_col + body.index(extra))
                cap = int(v)
        elif key == "assume":
            assumes.append((lineno, body_col, body))
        elif key == "rel":
            if generators is None:
                raise ParseError("relations must follow the generators line", lineno, 1)
            rm = _REL.match(body)
            if not rm:
                raise ParseError("expected '[X,Y] = expression'", lineno, body_col)
            x, y, rhs = rm.group(1), rm.group(2), rm.group(3)
            for name, grp in ((x, 1), (y, 2)):
                if name not in generators:
                    raise ParseError(f"unknown generator {name!r}", lineno, body_col + rm.start(grp))
            j, i = generators.index(x), generators.index(y)
            if j == i:
                raise ParseError(f"[{x},{y}] is identically zero", lineno, body_col)
            if j < i:
                raise ParseError(f"bracket must be written [{y},{x}]", lineno, body_col)
            if (j, i) in seen_pairs:
                raise ParseError(
                    f"duplicate relation for [{x},{y}] (first on line {seen_pairs[(j, i)]})", lineno, body_col
                )
            seen_pairs[(j, i)] = lineno
            rels.append((lineno, body_col + rm.start(3), j, i, rhs))
        else:
            raise ParseError(f"unknown key {key!r}", lineno, 1)
    if generators is None:
        raise ParseError("missing generators line")
    clash = set(generators) & set(params)
    if clash:
        raise ParseError(f"names declared as both generator and parameter: {sorted(clash)}")
    dmap = tuple((degrees or {}).get(g, 1) for g in generators)
    if any(a > b for a, b in zip(dmap, dmap[1:])):
        raise ParseError("graded degrees must be weakly increasing in generator order")

    brackets = {}
    for lineno, col, j, i, rhs in rels:
        p = parse_expression(rhs, generators, params, allow_brackets=False, line=lineno, col0=col)
        for w in p.terms:
            if not is_ordered(w):
                raise ParseError(f"right-hand side word {word_str(w, generators)} is not ordered", lineno, col)
            if mode == "strict" and word_key(w, dmap) >= word_key((j, i), dmap):
                raise ParseError(
                    f"non-admissible relation: {word_str(w, generators)} not ≺ {word_str((j, i), generators)}",
                    lineno, col,
                )
        brackets[(j, i)] = p
    assumptions = []
    for lineno, col, body in assumes:
        v = parse_expression(body, (), params, allow_brackets=False, line=lineno, col0=col)
        c = v.coeff(())
        if not c:
            raise ParseError("assumed-nonzero expression is zero", lineno, col)
        if isinstance(c, RatFunc):
            assumptions.append(c.num)
    R = RelationSet.from_brackets(
        generators, brackets, dmap, params=tuple(params), mode=mode, cap=cap, assumptions=tuple(assumptions)
    )
    diags = validate(R)
    if diags:
        raise ParseError("; ".join(diags))
    return R


def format_algebra(R: RelationSet) -> str:
    """Text in the algebra-file grammar; reparses to an equal RelationSet."""
    lines = [f"generators: {' '.join(R.generators)}"]
    if any(d != 1 for d in R.degree_map):
        lines.append("degrees: " + " ".join(f"{g}={d}" for g, d in zip(R.generators, R.degree_map)))
    if R.params:
        lines.append(f"params: {' '.join(R.params)}")
    if R.mode == "permissive":
        lines.append(f"mode: permissive cap={R.cap}")
    for p in R.assumptions:
        lines.append(f"assume: {p}")
    n = len(R.generators)
    for j in range(1, n):
        for i in range(j):
            p = R.bracket_poly(j, i)
            if p:
                lines.append(f"rel: [{R.generators[j]},{R.generators[i]}] = {p.to_str(R.degree_map)}")
    return "\n".join(lines) + "\n"

