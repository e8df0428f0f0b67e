import itertools

import pytest
from hypothesis import given, settings, strategies as st

from pbwalg import catalog
from pbwalg.freealg import (
    NCPoly,
    admissible_monomials,
    find_degree_map,
    is_ordered,
    leading_monomial,
    nc_commutator,
    nc_mul,
    ordered_words,
    word_compare,
    word_degree,
    word_str,
)

from conftest import sym

NAMES = ("A", "B", "C")
A, B, C = (NCPoly.gen(i, NAMES) for i in range(3))
ONE = NCPoly.scalar(1, NAMES)

words = st.lists(st.integers(0, 2), max_size=5).map(tuple)
degree_maps = st.lists(st.integers(1, 4), min_size=3, max_size=3).map(lambda d: tuple(sorted(d)))


def w(s):
    return tuple("ABC".index(ch) for ch in s)


# -- word order ---------------------------------------------------------------

def test_lex_first_difference():
    assert word_compare(w("AB"), w("BA"), (1, 1, 1)) < 0


def test_degree_tie_broken_lexicographically():
    assert word_compare(w("AAA"), w("BA"), (1, 2, 3)) < 0


def test_degree_dominates():
    assert word_compare(w("C"), w("AB"), (1, 1, 3)) > 0


def test_equal_words_compare_equal():
    assert word_compare(w("ABC"), w("ABC"), (1, 2, 3)) == 0


def test_word_degree_is_weighted_length():
    assert word_degree(w("AAC"), (2, 3, 4)) == 8


@settings(max_examples=80, deadline=None)
@given(degree_maps, words, words, words)
def test_word_order_is_total_and_transitive(d, u, v, x):
    assert (word_compare(u, v, d) == 0) == (u == v)
    assert word_compare(u, v, d) == -word_compare(v, u, d)
    if word_compare(u, v, d) < 0 and word_compare(v, x, d) < 0:
        assert word_compare(u, x, d) < 0


@settings(max_examples=80, deadline=None)
@given(degree_maps, words, words, words, words)
def test_word_order_is_compatible_with_concatenation(d, u, v, left, right):
    c = word_compare(u, v, d)
    assert word_compare(left + u + right, left + v + right, d) == c


# -- products -----------------------------------------------------------------

def test_distributive_product():
    assert nc_mul(A + B, A) == NCPoly.word(w("AA"), NAMES) + NCPoly.word(w("BA"), NAMES)


def test_empty_word_is_unit():
    assert nc_mul(A, ONE) == A and nc_mul(ONE, A) == A


def test_scalar_carries_through_product():
    lam = sym("lambda")
    f = nc_mul(nc_mul(A, B).scale(lam), C)
    assert f == NCPoly.word(w("ABC"), NAMES, lam)


def test_commutator_definition():
    assert nc_commutator(A, B) == NCPoly.word(w("AB"), NAMES) - NCPoly.word(w("BA"), NAMES)
    assert nc_commutator(A, A).is_zero()
    assert nc_commutator(A, nc_mul(B, C)) == NCPoly.word(w("ABC"), NAMES) - NCPoly.word(w("BCA"), NAMES)


polys = st.lists(st.tuples(words, st.integers(-3, 3)), max_size=4).map(
    lambda ts: NCPoly({u: c for u, c in ts if c}, NAMES)
)


@settings(max_examples=50, deadline=None)
@given(polys, polys, polys)
def test_product_associative_and_commutator_antisymmetric(f, g, h):
    assert nc_mul(nc_mul(f, g), h) == nc_mul(f, nc_mul(g, h))
    assert nc_commutator(f, g) == -nc_commutator(g, f)


# -- leading monomials --------------------------------------------------------

def test_leading_monomial_of_simple_relation():
    f = NCPoly.word(w("AB"), NAMES) - NCPoly.word(w("BA"), NAMES) + C
    assert leading_monomial(f, (1, 1, 1)) == (w("BA"), -1)


def test_symbolic_coefficient_counts_as_nonzero():
    lam = sym("lambda")
    f = C + NCPoly.word(w("AB"), NAMES, lam)
    word, coeff = leading_monomial(f, (1, 1, 1))
    assert word == w("AB") and coeff == lam


def test_single_term_leading_monomial():
    assert leading_monomial(NCPoly.word(w("ABC"), NAMES, 5), (1, 1, 1)) == (w("ABC"), 5)


def test_leading_monomial_of_zero():
    with pytest.raises(ValueError, match="leading monomial of zero"):
        leading_monomial(NCPoly({}, NAMES), (1, 1, 1))


# -- admissible monomials -----------------------------------------------------

def brute_admissible(d, lhs, max_len):
    """Independent enumeration: all weakly increasing index tuples, compared by hand."""
    dl = sum(d[g] for g in lhs)
    out = set()
    for n in range(max_len + 1):
        for u in itertools.product(range(len(d)), repeat=n):
            if list(u) != sorted(u):
                continue
            du = sum(d[g] for g in u)
            if du < dl or (du == dl and u < lhs):
                out.add(u)
    return out


def test_admissible_below_ba_unit_degrees():
    got = admissible_monomials((1, 1, 1), w("BA"), 2)
    # AC has degree 2 and AC < BA lexicographically, so the strict rule admits it
    assert got == {(), w("A"), w("B"), w("C"), w("AA"), w("AB"), w("AC")}
    assert got == brute_admissible((1, 1, 1), w("BA"), 2)


def test_admissible_below_cb_weighted():
    got = admissible_monomials((2, 3, 4), w("CB"), 3)
    assert w("AAB") in got and w("AC") in got
    assert w("AAC") not in got


def test_admissible_below_ba_with_heavy_c():
    got = admissible_monomials((1, 2, 3), w("BA"), 3)
    assert w("AAA") in got
    assert w("C") not in got


@settings(max_examples=30, deadline=None)
@given(degree_maps, st.sampled_from([w("BA"), w("CA"), w("CB")]), st.integers(1, 3))
def test_admissible_matches_enumeration_and_is_downward_closed(d, lhs, n):
    got = admissible_monomials(d, lhs, n)
    assert got == brute_admissible(d, lhs, n)
    for u in ordered_words(3, n):
        if any(word_compare(u, v, d) < 0 for v in got):
            assert u in got


def test_admissible_rejects_ordered_lhs():
    with pytest.raises(ValueError):
        admissible_monomials((1, 1, 1), w("AB"), 2)


def test_ordered_word_helpers():
    assert is_ordered(w("AABC")) and not is_ordered(w("BA"))
    assert word_str(w("AAB"), NAMES) == "A^2*B"
    assert word_str((), NAMES) == "1"


# -- degree-map search --------------------------------------------------------

def test_degree_map_quadratic():
    assert find_degree_map(catalog.get("daskaloyannis").relations(), 6) == (1, 1, 1)


def test_degree_map_cubic_extension():
    R = catalog.get("daskaloyannis-cubic").relations()
    d = find_degree_map(R, 6)
    # lexicographically first admissible map; (2,3,4) is admissible as well
    assert d == (1, 2, 2)
    assert find_degree_map(R.replace(degree_map=(2, 3, 4)), 6) == (1, 2, 2)
    for rel in R.rules.values():
        for u in rel.rhs.terms:
            assert word_compare(u, rel.lhs, (2, 3, 4)) < 0


def test_degree_map_none_for_literal_rho_sigma_omega():
    R = catalog.get("rho-sigma-omega").relations(printed=True)
    assert find_degree_map(R, 6) is None
    assert find_degree_map(R, 12) is None


def test_degree_map_bound_must_be_positive():
    with pytest.raises(ValueError):
        find_degree_map(catalog.get("daskaloyannis").relations(), 0)


# Admissibility of individual right-hand-side terms for weights
# d = (1+a, 1+a+b, 1+a+b+c), as closed-form conditions on a, b, c >= 0.
TERM_CONDITIONS = [
    ((1, 0), (2,), lambda a, b, c: c <= a),
    ((1, 0), (0, 0, 0), lambda a, b, c: a <= b - 1),
    ((2, 0), (1, 1), lambda a, b, c: b <= c),
    ((2, 0), (0, 0, 0), lambda a, b, c: a <= b + c - 1),
    ((2, 0), (0, 0, 1), lambda a, b, c: a <= c - 1),
    ((2, 0), (0, 1, 1), lambda a, b, c: a + b <= c - 1),
    ((2, 0), (1, 1, 1), lambda a, b, c: a + 2 * b <= c - 1),
    ((2, 1), (0, 0, 0), lambda a, b, c: a <= 2 * b + c - 1),
    ((2, 1), (0, 0, 1), lambda a, b, c: a <= b + c - 1),
    ((2, 1), (0, 0, 2), lambda a, b, c: a <= b - 1),
    ((2, 1), (0, 1, 1), lambda a, b, c: a <= c - 1),
    ((2, 1), (1, 1, 1), lambda a, b, c: a + b <= c - 1),
]


@pytest.mark.parametrize("lhs,word,condition", TERM_CONDITIONS)
def test_term_admissibility_conditions_on_weight_grid(lhs, word, condition):
    for a, b, c in itertools.product(range(4), repeat=3):
        d = (1 + a, 1 + a + b, 1 + a + b + c)
        assert (word in admissible_monomials(d, lhs, 3)) == condition(a, b, c), (a, b, c)
