"""Exact coefficients: rationals, polynomials in named parameters, and
rational functions of those parameters.

Rationals are :class:`fractions.Fraction` (integers are kept as ``int`` when
possible, since most structure constants are integral and ``int`` arithmetic
is much cheaper).  A :class:`ParamPoly` is a sparse map from monomials to
nonzero rationals, where a monomial is a name-sorted tuple of
``(symbol, exponent)`` pairs.

:class:`RatFunc` keeps its denominator as a product of powers of primitive
"atoms" rather than as a single expanded polynomial.  All denominators in this
domain come from a handful of input factors such as ``lambda + 1``, so the
factored form gives cheap least common denominators and cancellation by exact
division without needing a multivariate gcd.
"""

from __future__ import annotations

import math
import numbers
import zlib
from fractions import Fraction
from functools import cmp_to_key, lru_cache
from typing import Iterable, Mapping, Union

Monomial = tuple  # tuple[tuple[str, int], ...], sorted by symbol name
Scalar = Union[int, Fraction]

__all__ = [
    "ParamPoly",
    "RatFunc",
    "as_coeff",
    "clear_denominators",
    "coeff_str",
    "is_scalar",
    "to_fraction",
]


def _q(x) -> Scalar:
    """Canonical rational: ``int`` when integral, else ``Fraction``."""
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, numbers.Rational):
        return _q(Fraction(x.numerator, x.denominator))
    raise TypeError(f"not an exact rational: {x!r}")


def is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


# ---------------------------------------------------------------------------
# monomials
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for n, e in m2:
        d[n] = d.get(n, 0) + e
    return tuple(sorted(d.items()))


def _mono_div(m1: Monomial, m2: Monomial):
    """m1 / m2, or None when m2 does not divide m1."""
    if not m2:
        return m1
    d = dict(m1)
    for n, e in m2:
        r = d.get(n, 0) - e
        if r < 0:
            return None
        if r:
            d[n] = r
        else:
            del d[n]
    return tuple(sorted(d.items()))


def _mono_deg(m: Monomial) -> int:
    return sum(e for _, e in m)


def _lex_cmp(m1: Monomial, m2: Monomial) -> int:
    # pure lex with symbols ordered by name, first name most significant
    i = j = 0
    while i < len(m1) and j < len(m2):
        (n1, e1), (n2, e2) = m1[i], m2[j]
        if n1 == n2:
            if e1 != e2:
                return 1 if e1 > e2 else -1
            i += 1
            j += 1
        elif n1 < n2:
            return 1
        else:
            return -1
    if i < len(m1):
        return 1
    if j < len(m2):
        return -1
    return 0


_lex_key = cmp_to_key(_lex_cmp)


def _print_key(m: Monomial):
    # constant first, then by total degree, then alphabetically by the
    # expanded symbol list (so a*b sorts after a^2)
    expanded = []
    for n, e in m:
        expanded.extend([n] * e)
    return (_mono_deg(m), expanded)


def _mono_str(m: Monomial) -> str:
    return "*".join(n if e == 1 else f"{n}^{e}" for n, e in m)


# ---------------------------------------------------------------------------
# ParamPoly
# ---------------------------------------------------------------------------

class ParamPoly:
    """Commutative polynomial with rational coefficients in named symbols.

    Immutable.  ``terms`` maps monomials to nonzero rationals; the empty map
    is the zero polynomial.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                c = _q(c)
                if c:
                    clean[m] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "ParamPoly":
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def symbol(cls, name: str) -> "ParamPoly":
        if not name:
            raise ValueError("symbol name must be nonempty")
        return cls._raw({((name, 1),): 1})

    @classmethod
    def const(cls, c) -> "ParamPoly":
        c = _q(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def coerce(cls, x) -> "ParamPoly":
        if isinstance(x, ParamPoly):
            return x
        if is_scalar(x):
            return cls.const(x)
        if isinstance(x, RatFunc):
            if x.den_factors:
                raise TypeError("rational function with a nontrivial denominator is not a polynomial")
            return x.num
        raise TypeError(f"cannot convert {x!r} to ParamPoly")

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get((), 0)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def symbols(self) -> set:
        return {n for m in self.terms for n, _ in m}

    def total_degree(self) -> int:
        return max((_mono_deg(m) for m in self.terms), default=0)

    def degree_in(self, name: str) -> int:
        return max((e for m in self.terms for n, e in m if n == name), default=0)

    def __len__(self) -> int:
        return len(self.terms)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        other = _poly_or_none(other)
        if other is None:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = t.get(m, 0) + c
            if v:
                t[m] = _q(v)
            else:
                t.pop(m, None)
        return ParamPoly._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        other = _poly_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _poly_or_none(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        if is_scalar(other):
            if not other:
                return ParamPoly._raw({})
            return ParamPoly._raw({m: _q(c * other) for m, c in self.terms.items()})
        if not isinstance(other, ParamPoly):
            return NotImplemented
        if not self.terms or not other.terms:
            return ParamPoly._raw({})
        t: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                t[m] = t.get(m, 0) + c1 * c2
        return ParamPoly._raw({m: _q(c) for m, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("exponent must be an integer")
        if k < 0:
            raise ValueError("negative power of a polynomial; use RatFunc")
        result = ParamPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        # division by a scalar stays polynomial; anything else is a RatFunc
        if is_scalar(other):
            if not other:
                raise ZeroDivisionError("division by zero")
            inv = Fraction(1) / other
            return ParamPoly._raw({m: _q(c * inv) for m, c in self.terms.items()})
        if isinstance(other, (ParamPoly, RatFunc)):
            return RatFunc(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        if is_scalar(other):
            return RatFunc(ParamPoly.const(other)) / self
        return NotImplemented

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return other == self
        other = _poly_or_none(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.terms.get((), 0))
            else:
                self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- structure --------------------------------------------------------
    def leading_term(self):
        """(monomial, coefficient) of the lex-largest monomial."""
        if not self.terms:
            raise ValueError("leading term of zero polynomial")
        m = max(self.terms, key=_lex_key)
        return m, self.terms[m]

    def content(self) -> Fraction:
        """Positive rational c with self/c having coprime integer coefficients."""
        if not self.terms:
            return Fraction(0)
        nums = [abs(Fraction(c).numerator) for c in self.terms.values()]
        dens = [Fraction(c).denominator for c in self.terms.values()]
        return Fraction(math.gcd(*nums), math.lcm(*dens))

    def primitive(self):
        """Return (c, p) with self == c*p, p primitive with positive lex-leading coefficient."""
        c = self.content()
        if self.leading_term()[1] < 0:
            c = -c
        return c, self / c

    def monomial_content(self) -> Monomial:
        """Largest monomial dividing every term."""
        it = iter(self.terms)
        common = dict(next(it))
        for m in it:
            md = dict(m)
            for n in list(common):
                e = min(common[n], md.get(n, 0))
                if e:
                    common[n] = e
                else:
                    del common[n]
            if not common:
                break
        return tuple(sorted(common.items()))

    def exact_div(self, other: "ParamPoly"):
        """self / other if other divides self exactly, else None."""
        if not other.terms:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.terms:
            return self
        if other.is_constant():
            return self / other.constant_value()
        # cheap necessary conditions before running the division loop
        if len(other.terms) > 1 and len(self.terms) < 2:
            return None
        for n in other.symbols():
            if self.degree_in(n) < other.degree_in(n):
                return None
        lm_g, lc_g = other.leading_term()
        rem = dict(self.terms)
        quot: dict = {}
        while rem:
            lm_f = max(rem, key=_lex_key)
            mq = _mono_div(lm_f, lm_g)
            if mq is None:
                return None
            cq = Fraction(rem[lm_f]) / lc_g
            quot[mq] = _q(cq)
            for m2, c2 in other.terms.items():
                m = _mono_mul(mq, m2)
                v = rem.get(m, 0) - cq * c2
                if v:
                    rem[m] = v
                else:
                    rem.pop(m, None)
        return ParamPoly._raw(quot)

    # -- evaluation -------------------------------------------------------
    def substitute(self, assignment: Mapping[str, object]) -> "ParamPoly":
        """Replace symbols by rationals (or polynomials); others stay symbolic."""
        if not assignment:
            return self
        out = ParamPoly._raw({})
        cache: dict = {}
        for m, c in self.terms.items():
            keep = []
            factor = c
            poly_factor = None
            for n, e in m:
                if n in assignment:
                    v = assignment[n]
                    if is_scalar(v):
                        factor = factor * _q(v) ** e
                    else:
                        key = (n, e)
                        if key not in cache:
                            cache[key] = ParamPoly.coerce(v) ** e
                        poly_factor = cache[key] if poly_factor is None else poly_factor * cache[key]
                else:
                    keep.append((n, e))
            if not factor:
                continue
            term = ParamPoly._raw({tuple(keep): _q(factor)})
            if poly_factor is not None:
                term = term * poly_factor
            out = out + term
        return out

    def evaluate(self, assignment: Mapping[str, Scalar]) -> Scalar:
        p = self.substitute(assignment)
        if not p.is_constant():
            missing = sorted(p.symbols())
            raise ValueError(f"unassigned symbols: {', '.join(missing)}")
        return p.constant_value()

    def _fingerprint(self, prime: int) -> int:
        acc = 0
        for m, c in self.terms.items():
            v = Fraction(c)
            t = v.numerator % prime * pow(v.denominator, -1, prime) % prime
            for n, e in m:
                t = t * pow(_symbol_residue(n, prime), e, prime) % prime
            acc = (acc + t) % prime
        return acc

    # -- printing ---------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: _print_key(mc[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, (m, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            a = -c if neg else c
            if not m:
                body = _rat_str(a)
            elif a == 1:
                body = _mono_str(m)
            else:
                body = f"{_rat_str(a)}*{_mono_str(m)}"
            if k == 0:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)

    def __repr__(self):
        return f"ParamPoly({str(self)!r})"


def _poly_or_none(x):
    if isinstance(x, ParamPoly):
        return x
    if is_scalar(x):
        return ParamPoly.const(x)
    return None


def _rat_str(c: Scalar) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


_PRIME = (1 << 61) - 1


@lru_cache(maxsize=None)
def _symbol_residue(name: str, prime: int) -> int:
    h = zlib.crc32(name.encode()) * 2654435761 + 97
    return h % prime or 1


# ---------------------------------------------------------------------------
# denominator atoms
# ---------------------------------------------------------------------------

# Known primitive factors, consulted when splitting a new denominator.  This is
# a cache: correctness never depends on its contents.
_known_atoms: dict = {}
_ATOM_LIMIT = 512


def _split_denominator(p: ParamPoly):
    """Write nonzero p as c * prod(atom^e).  Returns (c, {atom: e})."""
    c, prim = p.primitive()
    factors: dict = {}
    if prim.is_constant():
        return c, factors
    mono = prim.monomial_content()
    if mono:
        for n, e in mono:
            factors[ParamPoly.symbol(n)] = e
        prim = prim.exact_div(ParamPoly._raw({mono: 1}))
    if prim.is_constant():
        return c, factors
    if prim.is_monomial():
        raise AssertionError("monomial content not removed")
    for atom in list(_known_atoms):
        if len(atom) >= len(prim):
            continue
        while True:
            q = prim.exact_div(atom)
            if q is None:
                break
            factors[atom] = factors.get(atom, 0) + 1
            prim = q
        if prim.is_constant():
            break
    if not prim.is_constant():
        cc, prim = prim.primitive()
        c = c * cc
        factors[prim] = factors.get(prim, 0) + 1
        if len(_known_atoms) < _ATOM_LIMIT:
            _known_atoms[prim] = None
    else:
        c = c * prim.constant_value()
    return c, factors


def _atom_key(a: ParamPoly):
    return (len(a.terms), str(a))


def _factors_tuple(d: dict):
    return tuple(sorted(((a, e) for a, e in d.items() if e), key=lambda ae: _atom_key(ae[0])))


def _expand(factors) -> ParamPoly:
    out = ParamPoly.const(1)
    for a, e in factors:
        out = out * a ** e
    return out


# ---------------------------------------------------------------------------
# RatFunc
# ---------------------------------------------------------------------------

class RatFunc:
    """Rational function ``num / den`` over the rationals.

    ``den`` is held as ``den_factors``, a sorted tuple of (atom, exponent)
    pairs, every atom primitive with a positive lex-leading coefficient.  The
    fraction is not guaranteed to be in lowest terms; equality is decided by
    cross-multiplication.
    """

    __slots__ = ("num", "den_factors", "_hash")

    def __init__(self, num=0, den=None):
        num = ParamPoly.coerce(num)
        if den is None:
            self.num, self.den_factors = num, ()
        else:
            den = ParamPoly.coerce(den)
            if den.is_zero():
                raise ZeroDivisionError("division by zero rational function")
            c, factors = _split_denominator(den)
            self.num, self.den_factors = _cancel(num / c, factors)
        self._hash = None

    @classmethod
    def _make(cls, num: ParamPoly, factors) -> "RatFunc":
        r = cls.__new__(cls)
        r.num = num
        r.den_factors = () if num.is_zero() else factors
        r._hash = None
        return r

    @classmethod
    def symbol(cls, name: str) -> "RatFunc":
        return cls._make(ParamPoly.symbol(name), ())

    @classmethod
    def coerce(cls, x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        return cls._make(ParamPoly.coerce(x), ())

    @property
    def den(self) -> ParamPoly:
        return _expand(self.den_factors)

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_constant(self) -> bool:
        return not self.den_factors and self.num.is_constant()

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError("rational function is not constant")
        return self.num.constant_value()

    def is_polynomial(self) -> bool:
        return not self.den_factors

    def symbols(self) -> set:
        s = self.num.symbols()
        for a, _ in self.den_factors:
            s |= a.symbols()
        return s

    def complexity(self) -> int:
        return len(self.num.terms) + sum(len(a.terms) for a, _ in self.den_factors)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = _rf_or_none(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        if self.den_factors == o.den_factors:
            return RatFunc._make(*_cancel(self.num + o.num, dict(self.den_factors)))
        lcm = dict(self.den_factors)
        for a, e in o.den_factors:
            if lcm.get(a, 0) < e:
                lcm[a] = e
        n1 = self.num * _cofactor(lcm, self.den_factors)
        n2 = o.num * _cofactor(lcm, o.den_factors)
        return RatFunc._make(*_cancel(n1 + n2, lcm))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._make(-self.num, self.den_factors)

    def __sub__(self, other):
        o = _rf_or_none(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _rf_or_none(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if is_scalar(other):
            if not other:
                return RatFunc._make(ParamPoly._raw({}), ())
            return RatFunc._make(self.num * other, self.den_factors)
        o = _rf_or_none(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return RatFunc._make(ParamPoly._raw({}), ())
        n1, d2 = _cancel(self.num, dict(o.den_factors))
        n2, d1 = _cancel(o.num, dict(self.den_factors))
        merged = dict(d1)
        for a, e in d2:
            merged[a] = merged.get(a, 0) + e
        return RatFunc._make(n1 * n2, _factors_tuple(merged))

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        c, factors = _split_denominator(self.num)
        top = _expand(self.den_factors) / c
        return RatFunc._make(*_cancel(top, factors))

    def __truediv__(self, other):
        if is_scalar(other):
            if not other:
                raise ZeroDivisionError("division by zero rational function")
            return RatFunc._make(self.num / other, self.den_factors)
        o = _rf_or_none(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _rf_or_none(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("exponent must be an integer")
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        return RatFunc._make(base.num ** k, tuple((a, e * k) for a, e in base.den_factors))

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        o = _rf_or_none(other)
        if o is None:
            return NotImplemented
        if self.den_factors == o.den_factors:
            return self.num == o.num
        lcm = dict(self.den_factors)
        for a, e in o.den_factors:
            if lcm.get(a, 0) < e:
                lcm[a] = e
        return self.num * _cofactor(lcm, self.den_factors) == o.num * _cofactor(lcm, o.den_factors)

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                d = _expand(self.den_factors)._fingerprint(_PRIME)
                if d == 0:
                    self._hash = 0
                else:
                    n = self.num._fingerprint(_PRIME)
                    self._hash = hash((n * pow(d, -1, _PRIME)) % _PRIME)
        return self._hash

    # -- evaluation -------------------------------------------------------
    def substitute(self, assignment: Mapping[str, object]) -> "RatFunc":
        if not assignment:
            return self
        num = self.num.substitute(assignment)
        den = _expand(self.den_factors).substitute(assignment)
        if den.is_zero():
            raise ZeroDivisionError(f"denominator {self.den} vanishes under the assignment")
        return RatFunc(num, den)

    # -- printing ---------------------------------------------------------
    def __str__(self):
        if not self.den_factors:
            return str(self.num)
        num = str(self.num)
        if len(self.num.terms) > 1:
            num = f"({num})"
        if len(self.den_factors) == 1 and self.den_factors[0][1] == 1 and len(self.den_factors[0][0]) == 1 \
                and self.den_factors[0][0].leading_term()[1] == 1:
            den = str(self.den_factors[0][0])
        else:
            den = f"({self.den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"RatFunc({str(self)!r})"


def _rf_or_none(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, ParamPoly):
        return RatFunc._make(x, ())
    if is_scalar(x):
        return RatFunc._make(ParamPoly.const(x), ())
    return None


def _cofactor(lcm: dict, factors) -> ParamPoly:
    have = dict(factors)
    out = ParamPoly.const(1)
    for a, e in lcm.items():
        k = e - have.get(a, 0)
        if k:
            out = out * a ** k
    return out


def _cancel(num: ParamPoly, factors: dict):
    """Divide out atoms of the denominator that divide num exactly."""
    if num.is_zero():
        return num, ()
    if not factors:
        return num, ()
    factors = dict(factors)
    for a in list(factors):
        while factors[a]:
            q = num.exact_div(a)
            if q is None:
                break
            num = q
            factors[a] -= 1
    return num, _factors_tuple(factors)


# ---------------------------------------------------------------------------
# helpers shared by the rest of the package
# ---------------------------------------------------------------------------

def as_coeff(x):
    """Demote constant RatFunc/ParamPoly values to plain rationals."""
    if isinstance(x, RatFunc):
        return _q(x.constant_value()) if x.is_constant() else x
    if isinstance(x, ParamPoly):
        return _q(x.constant_value()) if x.is_constant() else RatFunc._make(x, ())
    return _q(x)


def to_fraction(x) -> Fraction:
    x = as_coeff(x)
    if isinstance(x, RatFunc):
        raise ValueError(f"coefficient {x} is not a number")
    return Fraction(x)


def coeff_str(c) -> str:
    """Printable coefficient that reparses with the algebra-file grammar."""
    if is_scalar(c):
        return _rat_str(c)
    return str(c)


def clear_denominators(fs: Iterable) -> tuple:
    """Common denominator of a nonempty list of rational functions.

    Returns ``(common, numerators)`` with ``fs[i] * common == numerators[i]``.
    ``common`` is the least common multiple over denominator atoms, which may
    exceed the true lcm when atoms share factors.
    """
    fs = [RatFunc.coerce(f) for f in fs]
    if not fs:
        raise ValueError("clear_denominators needs at least one element")
    lcm: dict = {}
    scalar_den = 1
    for f in fs:
        for a, e in f.den_factors:
            if lcm.get(a, 0) < e:
                lcm[a] = e
        for c in f.num.terms.values():
            d = Fraction(c).denominator
            scalar_den = scalar_den * d // math.gcd(scalar_den, d)
    common = _expand(_factors_tuple(lcm)) * scalar_den
    numerators = [f.num * _cofactor(lcm, f.den_factors) * scalar_den for f in fs]
    return common, numerators
