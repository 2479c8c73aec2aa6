"""Randomized invariants (hypothesis)."""

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from ellmcm import oracle
from ellmcm.betti import ModuleDescriptor, betti_entry
from ellmcm.charge import apply, compose, euler_pairing, inverse, power, shift_matrix
from ellmcm.cohom import cohomology_dims
from ellmcm.kbundle import NONPOSITIVE, POSITIVE, SSeqSpec, closed_form, closed_form_value, s_value
from ellmcm.koszul import is_cokoszul, is_koszul, koszul_charge_predicate
from ellmcm.qfield import QuadNum, mu, sign
from ellmcm.series import RationalFunction, series_coeffs

ns = st.integers(min_value=4, max_value=12)
small = st.integers(min_value=-30, max_value=30)
ranks = st.integers(min_value=1, max_value=30)
rationals = st.fractions(min_value=-50, max_value=50, max_denominator=30)


@given(ns, small, small, small, small)
def test_shift_preserves_pairing(n, r1, d1, r2, d2):
    m = shift_matrix(n)
    assert euler_pairing(apply(m, (r1, d1)), apply(m, (r2, d2))) == euler_pairing((r1, d1), (r2, d2))


@given(ns, st.integers(min_value=-20, max_value=20), st.integers(min_value=-20, max_value=20))
def test_powers_compose(n, a, b):
    m = shift_matrix(n)
    assert compose(power(m, a), power(m, b)) == power(m, a + b)
    assert inverse(power(m, a)) == power(m, -a)


@given(ns)
def test_mu_is_root(n):
    m = mu(n)
    assert m * m - (n - 2) * m + 1 == 0
    assert m >= 1


@given(st.sampled_from([2, 3, 5, 6, 7, 12, 21]), rationals, rationals, rationals, rationals)
def test_field_axioms(D, a, b, c, d):
    x, y = QuadNum(a, b, D), QuadNum(c, d, D)
    assert x + y - y == x
    assert (x * y).norm() == x.norm() * y.norm()
    if y != 0:
        assert x / y * y == x
    assert sign(x - y) == -sign(y - x)
    # sign agrees with a high-precision float for comfortably nonzero values
    fx = float(a) + float(b) * D ** 0.5
    if abs(fx) > 1e-6:
        assert sign(x) == (1 if fx > 0 else -1)


@given(ns, ranks, small, st.integers(min_value=-30, max_value=30))
def test_closed_form_reproduces_sequence(n, p, q, j):
    spec = SSeqSpec(n, p, q)
    side = POSITIVE if j >= 1 else NONPOSITIVE
    coeffs = closed_form(spec, side)
    assert closed_form_value(spec, coeffs, j) == s_value(spec, j)


@given(small, st.booleans())
def test_cohomology_euler_characteristic(d, special):
    assume(d == 0 or not special)
    c = cohomology_dims(d, special)
    assert c.h0 - c.h1 == d
    assert min(c.h0, c.h1) == (1 if special else 0)


polys = st.lists(st.integers(min_value=-9, max_value=9), min_size=1, max_size=5)
dens = polys.filter(lambda p: p[0] != 0)


@given(polys, dens, polys, dens)
def test_canonical_equality_is_cross_multiplication(a, b, c, d):
    f, g = RationalFunction(a, b), RationalFunction(c, d)
    cross = RationalFunction(_mul(a, d), [1]) == RationalFunction(_mul(c, b), [1])
    assert (f == g) == cross
    assert hash(f) == hash(RationalFunction(f.numerator, f.denominator))


@given(polys, st.lists(st.integers(min_value=-9, max_value=9), max_size=4))
def test_series_of_product(a, tail):
    # denominators with constant term 1 keep the expansion integral
    den = [1] + tail
    f = RationalFunction(a, den)
    N = 12
    got = series_coeffs(f * RationalFunction(den, [1]), N)
    want = (list(a) + [0] * (N + 1))[:N + 1]
    assert got == want
    coeffs = series_coeffs(f, N)
    conv = [sum(coeffs[k] * (den + [0] * N)[i - k] for k in range(i + 1)) for i in range(N + 1)]
    assert conv == want


def _mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


@given(st.integers(min_value=4, max_value=9), ranks, small)
def test_koszul_predicate_equivalence(n, p, q):
    assert koszul_charge_predicate(n, p, q) == bool(is_koszul(ModuleDescriptor(n, (p, q))))


@given(st.integers(min_value=4, max_value=9), ranks, small)
def test_koszul_cokoszul_exclusive(n, p, q):
    d = ModuleDescriptor(n, (p, q))
    assert not (is_koszul(d) and is_cokoszul(d))


def test_printed_inequality_is_too_weak():
    """mu(pn - q(n-1)) - q <= 0 admits (4, 5) for n = 5, which is not Koszul."""
    n, p, q = 5, 4, 5
    printed = sign(mu(n) * (p * n - q * (n - 1)) - q) <= 0
    assert printed
    assert not koszul_charge_predicate(n, p, q)
    d = ModuleDescriptor(n, (p, q))
    assert betti_entry(d, 1, 2) == 5


@settings(max_examples=60)
@given(st.integers(min_value=4, max_value=8), ranks, small)
def test_at_most_one_sign_change_per_side(n, p, q):
    spec = SSeqSpec(n, p, q)
    for side in (POSITIVE, NONPOSITIVE):
        assert oracle.count_sign_changes(oracle.naive_terms(spec, side, 150)) <= 1
