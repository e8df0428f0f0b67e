"""Lower-triangular, degree-preserving changes of generators.

A transformation is a matrix ``M`` with ``x_i' = sum_j M[i][j] x_j`` and
``M[i][j] = 0`` for ``j > i``.  Applying it to a relation set rewrites every
bracket of new generators as a combination of ordered words in the new
generators.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .coeffring import ParamPoly, RatFunc, as_coeff
from .freealg import NCPoly, word_key
from .relations import RelationSet, normal_form

__all__ = [
    "CANONICAL_FORMS",
    "Classification",
    "Transformation",
    "ab_bracket_closed_form",
    "apply",
    "canonical_label",
    "classify_AB_form",
    "compose",
    "invert",
    "parse_transformation",
    "to_new_basis",
]


def _nonzero(c) -> bool:
    return bool(as_coeff(c))


@dataclass(frozen=True)
class Transformation:
    generators: tuple
    matrix: tuple  # rows of coefficients, lower-triangular

    def __post_init__(self):
        n = len(self.generators)
        m = tuple(tuple(as_coeff(c) for c in row) for row in self.matrix)
        if len(m) != n or any(len(r) != n for r in m):
            raise ValueError(f"transformation must be a {n}x{n} matrix")
        for i in range(n):
            for j in range(i + 1, n):
                if _nonzero(m[i][j]):
                    raise ValueError(
                        f"transformation must be lower-triangular: {self.generators[i]}' "
                        f"may not involve {self.generators[j]}"
                    )
            if not _nonzero(m[i][i]):
                raise ValueError(f"diagonal entry for {self.generators[i]} is zero")
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "generators", tuple(self.generators))

    @classmethod
    def identity(cls, generators: Sequence[str]) -> "Transformation":
        n = len(generators)
        return cls(tuple(generators), tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, generators: Sequence[str], diag: Sequence) -> "Transformation":
        n = len(generators)
        return cls(tuple(generators), tuple(tuple(diag[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def three(cls, alpha1, beta1, beta2, gamma1, gamma2, gamma3, generators=("A", "B", "C")):
        """A' = alpha1 A;  B' = beta1 B + beta2 A;  C' = gamma1 C + gamma2 B + gamma3 A."""
        return cls(tuple(generators), ((alpha1, 0, 0), (beta2, beta1, 0), (gamma3, gamma2, gamma1)))

    def is_identity(self) -> bool:
        n = len(self.generators)
        return all(self.matrix[i][j] == int(i == j) for i in range(n) for j in range(n))

    def check_degrees(self, degree_map: Sequence[int]):
        for i, row in enumerate(self.matrix):
            for j, c in enumerate(row):
                if _nonzero(c) and degree_map[j] > degree_map[i]:
                    raise ValueError(
                        f"transformation is not degree-preserving: {self.generators[i]}' "
                        f"involves {self.generators[j]} of higher degree"
                    )

    def image(self, i: int) -> NCPoly:
        """x_i' as a polynomial in the old generators."""
        return NCPoly({(j,): c for j, c in enumerate(self.matrix[i])}, self.generators)

    def nonzero_assumptions(self) -> list:
        out = []
        for i in range(len(self.generators)):
            c = self.matrix[i][i]
            if isinstance(c, RatFunc):
                out.append(c.num)
                out.extend(a for a, _ in c.den_factors)
        return out

    def lines(self) -> list:
        out = []
        for i, g in enumerate(self.generators):
            out.append(f"{g} = {self.image(i).to_str()}")
        return out

    def __str__(self):
        return "\n".join(self.lines())


def parse_transformation(text: str, generators: Sequence[str], params: Sequence[str] = ()) -> Transformation:
    """Lines ``X = expr`` with expr linear in the old generators; omitted lines mean X' = X."""
    from .parsing import ParseError, parse_expression

    gens = tuple(generators)
    n = len(gens)
    rows = {i: tuple(int(i == j) for j in range(n)) for i in range(n)}
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        m = re.match(r"^\s*([A-Za-z_][A-Za-z0-9_]*)'?\s*=(.*)$", line)
        if not m:
            raise ParseError("expected 'X = linear expression'", lineno, 1)
        name = m.group(1)
        if name not in gens:
            raise ParseError(f"unknown generator {name!r}", lineno, m.start(1) + 1)
        if name in seen:
            raise ParseError(f"duplicate line for {name}", lineno, 1)
        seen.add(name)
        p = parse_expression(m.group(2), gens, params, allow_brackets=False, line=lineno, col0=m.start(2) + 1)
        row = [0] * n
        for w, c in p.terms.items():
            if len(w) != 1:
                raise ParseError("transformation entries must be linear in the generators", lineno, m.start(2) + 1)
            row[w[0]] = c
        rows[gens.index(name)] = tuple(row)
    try:
        return Transformation(gens, tuple(rows[i] for i in range(n)))
    except ValueError as e:
        raise ParseError(str(e)) from None


# -- algebra of transformations ----------------------------------------------

def compose(T2: Transformation, T1: Transformation) -> Transformation:
    """The transformation doing T1 first, then T2 (matrix product T2*T1)."""
    if T1.generators != T2.generators:
        raise ValueError("transformations over different generators")
    n = len(T1.generators)
    m = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = 0
            for k in range(n):
                a, b = T2.matrix[i][k], T1.matrix[k][j]
                if _nonzero(a) and _nonzero(b):
                    acc = acc + a * b
            row.append(as_coeff(acc))
        m.append(tuple(row))
    return Transformation(T1.generators, tuple(m))


def invert(T: Transformation) -> Transformation:
    n = len(T.generators)
    M = T.matrix
    inv = [[0] * n for _ in range(n)]
    for i in range(n):
        inv[i][i] = as_coeff(1 / RatFunc.coerce(M[i][i]))
        for j in range(i - 1, -1, -1):
            acc = 0
            for k in range(j, i):
                if _nonzero(M[i][k]) and _nonzero(inv[k][j]):
                    acc = acc + M[i][k] * inv[k][j]
            inv[i][j] = as_coeff(-RatFunc.coerce(acc) * inv[i][i]) if _nonzero(acc) else 0
    return Transformation(T.generators, tuple(tuple(r) for r in inv))


# -- change of basis -----------------------------------------------------------

class _Rewriter:
    """Expresses old-basis ordered polynomials in ordered words of new generators."""

    def __init__(self, T: Transformation, R: RelationSet):
        self.T, self.R = T, R
        self.images = [T.image(i) for i in range(len(T.generators))]
        self.cache: dict = {}

    def word_image(self, w) -> NCPoly:
        img = self.cache.get(w)
        if img is None:
            p = NCPoly.scalar(1, self.R.generators)
            for g in w:
                p = p * self.images[g]
            img = normal_form(p, self.R)
            self.cache[w] = img
        return img

    def lead_scale(self, w):
        c = 1
        for g in w:
            c = c * self.T.matrix[g][g]
        return c

    def convert(self, P: NCPoly) -> NCPoly:
        d = self.R.degree_map
        out: dict = {}
        P = normal_form(P, self.R)
        guard = 0
        while P.terms:
            guard += 1
            if guard > 100_000:
                raise RuntimeError("basis conversion did not terminate")
            u = max(P.terms, key=lambda w: word_key(w, d))
            c = as_coeff(RatFunc.coerce(P.terms[u]) / RatFunc.coerce(self.lead_scale(u)))
            out[u] = c
            P = P - self.word_image(u).scale(c)
            if u in P.terms:
                raise RuntimeError("transformation image does not lead with the expected word")
        return NCPoly(out, self.R.generators)


def to_new_basis(T: Transformation, R: RelationSet, K: NCPoly) -> NCPoly:
    """Rewrite an element of the algebra in ordered words of the new generators."""
    return _Rewriter(T, R).convert(K)


def apply(T: Transformation, R: RelationSet) -> RelationSet:
    if T.generators != R.generators:
        raise ValueError("transformation and relations use different generators")
    T.check_degrees(R.degree_map)
    rw = _Rewriter(T, R)
    n = len(R.generators)
    brackets = {}
    for j in range(n):
        for i in range(j):
            xj, xi = rw.images[j], rw.images[i]
            brackets[(j, i)] = rw.convert(xj * xi - xi * xj)
    extra = tuple(T.nonzero_assumptions())
    return RelationSet.from_brackets(
        R.generators, brackets, R.degree_map, params=R.params, mode=R.mode, cap=R.cap,
        assumptions=tuple(R.assumptions) + tuple(a for a in extra if not a.is_constant()),
    )


# -- canonical forms of [B,A] ---------------------------------------------------

# (A^2, A, B, C) coefficients of each canonical shape; A*B carries lambda.
CANONICAL_FORMS = {
    "1a": (0, 0, 0, 1),
    "1b": (1, 0, 0, 1),
    "1c": (0, 0, 1, 1),
    "1d": (1, 0, 1, 1),
    "2a": (0, 0, 1, 0),
    "2b": (1, 0, 1, 0),
    "2c": (0, 1, 0, 0),
    "2d": (0, 1, 1, 0),
    "2e": (1, 1, 0, 0),
    "2f": (0, 0, 0, 0),
    "2g": (1, 0, 1, 0),  # same shape as 2b
    "2h": (1, 0, 0, 0),
}

_AA, _AB, _A, _B, _C = (0, 0), (0, 1), (0,), (1,), (2,)
_ONE = ()  # central constant terms pass through a linear change of basis unchanged
_QUAD_BA = {_AA, _AB, _A, _B, _C, _ONE}
_QUAD = {_AA, _AB, (0, 2), (1, 1), (1, 2), (2, 2), _A, _B, _C, _ONE}


@dataclass
class Classification:
    label: str
    lam: object
    transformation: Transformation
    relations: RelationSet
    assumptions: list = field(default_factory=list)
    note: str = "when several canonical forms are reachable, the first in 1a..2h order is reported"


def _ba_coeffs(R: RelationSet):
    p = R.bracket_poly(1, 0)
    return {w: p.coeff(w) for w in _QUAD_BA}


def canonical_label(R: RelationSet):
    """Label of [B,A] if it already has a canonical shape, else None."""
    c = _ba_coeffs(R)
    shape = tuple(c[w] for w in (_AA, _A, _B, _C))
    for label, pattern in CANONICAL_FORMS.items():
        if shape == pattern:
            return label
    return None


def _check_shape(R: RelationSet):
    msg = "classification defined for quadratic three-generator algebras"
    if len(R.generators) != 3:
        raise ValueError(msg)
    for (j, i) in R.rules:
        p = R.bracket_poly(j, i)
        allowed = _QUAD_BA if (j, i) == (1, 0) else _QUAD
        if any(w not in allowed for w in p.terms):
            raise ValueError(msg)


def classify_AB_form(R: RelationSet) -> Classification:
    _check_shape(R)
    names = R.generators
    c = _ba_coeffs(R)
    lam = c[_AB]
    label = canonical_label(R)
    if label is not None:
        return Classification(label, lam, Transformation.identity(names), R)

    a200, a110, a100, a010, a001 = (RatFunc.coerce(c[w]) for w in (_AA, _AB, _A, _B, _C))
    one, zero = RatFunc.coerce(1), RatFunc.coerce(0)
    assumed = []

    def nz(x):
        if x and not x.is_constant():
            assumed.append(x)
        return bool(x)

    alpha1 = beta1 = gamma1 = one
    beta2 = gamma2 = gamma3 = zero
    if nz(a001):
        if nz(a110):
            beta2 = a200 / a110
        elif nz(a200):
            alpha1 = a200
        gamma1 = alpha1 * beta1 * a001
        gamma2 = a010 * gamma1 / a001
        gamma3 = gamma1 * (beta1 * a100 - a010 * beta2 + a001 * beta2 * gamma2 / gamma1) / (a001 * beta1)
    elif nz(a010):
        alpha1 = 1 / a010
        beta2 = a100 / a010
        disc = a200 * a010 - a110 * a100
        if nz(disc):
            beta1 = 1 / disc
            beta2 = beta1 * a100 / a010
    elif nz(a100):
        beta1 = 1 / a100
        if nz(a110):
            beta2 = beta1 * a200 / a110
        elif nz(a200):
            alpha1 = a200 / a100
    else:
        if nz(a110):
            beta2 = a200 / a110
        elif nz(a200):
            alpha1 = a200
    T = Transformation.three(alpha1, beta1, beta2, gamma1, gamma2, gamma3, names)
    R2 = apply(T, R)
    label = canonical_label(R2)
    if label is None:  # pragma: no cover - guarded by tests over every branch
        raise RuntimeError("classification failed to reach a canonical form")
    return Classification(label, as_coeff(R2.bracket_poly(1, 0).coeff(_AB)), T, R2, _unique(assumed))


def _unique(polys):
    out = []
    for p in polys:
        q = p.num if isinstance(p, RatFunc) else ParamPoly.coerce(p)
        if not q.is_constant() and q not in out:
            out.append(q)
    return out


def ab_bracket_closed_form(a: Mapping, alpha1, beta1, beta2, gamma1, gamma2, gamma3) -> dict:
    """Coefficients of [B',A'] / (alpha1*beta1) for the general quadratic, keyed by word.

    ``a`` maps a200, a110, a100, a010, a001 to values.
    """
    a200, a110, a100, a010, a001 = (a[k] for k in ("a200", "a110", "a100", "a010", "a001"))
    return {
        _AA: a200 / alpha1**2 - a110 * beta2 / (alpha1**2 * beta1),
        _AB: a110 / (alpha1 * beta1),
        _A: a100 / alpha1 - a010 * beta2 / (alpha1 * beta1) + a001 * beta2 * gamma2 / (alpha1 * beta1 * gamma1)
        - a001 * gamma3 / (alpha1 * gamma1),
        _B: a010 / beta1 - a001 * gamma2 / (beta1 * gamma1),
        _C: a001 / gamma1,
    }
