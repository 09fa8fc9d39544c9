import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from redlab.errors import (
    LengthMismatch,
    NotCoprime,
    PolynomialSyntaxError,
    RingMismatch,
    VariableMismatch,
    ZeroInverse,
)
from redlab.polyfield import (
    PolyRing,
    crt_univariate,
    ff_inv,
    format_poly,
    is_irreducible,
    monic_irreducibles,
    parse_poly,
    poly_divmod,
)

F2 = PolyRing(2, ("x", "y"))
F3 = PolyRing(3, ("x", "y"))


def test_inverse_table():
    assert ff_inv(1, 2) == 1
    assert ff_inv(2, 3) == 2
    assert ff_inv(3, 7) == 5
    with pytest.raises(ZeroInverse):
        ff_inv(0, 5)


def test_frobenius_and_small_products():
    assert F2("x+y") * F2("x+y") == F2("x^2+y^2")
    assert F3("x+1") * F3("x+2") == F3("x^2+2")
    assert F2("x") + F2("x") == F2.zero()


def test_parser_accepts_grammar():
    f = F3("-x^2*y + 4*x - 2")
    assert f == F3("2*x^2*y + x + 1")
    assert str(F2("x*y^2 + x^2*y")) == "x^2*y + x*y^2"
    assert F2("  x ^ 2 ") == F2("x^2")
    assert F2("0").is_zero()


@pytest.mark.parametrize("text, column", [("x+*y", 3), ("x^", 3), ("x + z", 5), ("2**x", 3), ("x y", 3)])
def test_parser_reports_column(text, column):
    with pytest.raises(PolynomialSyntaxError) as info:
        parse_poly(text, F2)
    assert info.value.column == column


def test_ring_mismatch_errors():
    with pytest.raises(VariableMismatch):
        F2("x") + PolyRing(2, ("x", "y", "z"))("x")
    with pytest.raises(RingMismatch):
        F2("x") + F3("x")


def test_truncate_and_order():
    f = F2("x + x^2*y + y^5")
    assert f.truncate(3) == F2("x")
    assert f.order() == 1
    assert f.degree() == 5


polys = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(0, 6), max_size=6
)


@given(polys, polys)
@settings(max_examples=60, deadline=None)
def test_frobenius_identity(a, b):
    f = F2.zero()
    g = F2.zero()
    for e, c in a.items():
        if c % 2:
            f = f + F2.monomial(e)
    for e, c in b.items():
        if c % 2:
            g = g + F2.monomial(e)
    assert (f + g) ** 2 == f ** 2 + g ** 2


@given(polys)
@settings(max_examples=60, deadline=None)
def test_format_parse_round_trip(a):
    f = F3.zero()
    for e, c in a.items():
        if c % 3:
            f = f + F3.monomial(e, c)
    assert parse_poly(format_poly(f), F3) == f


U2 = PolyRing(2, ("y",))
U3 = PolyRing(3, ("y",))


def test_first_irreducibles_over_f2():
    first = [str(f) for _, f in zip(range(7), monic_irreducibles(U2))]
    assert first == ["y", "y + 1", "y^2 + y + 1", "y^3 + y + 1", "y^3 + y^2 + 1", "y^4 + y + 1", "y^4 + y^3 + 1"]
    assert not is_irreducible(U2("y^2+1"))


def test_crt_small_case_against_brute_force():
    moduli = [U2("y"), U2("y+1"), U2("y^2+y+1")]
    residues = [U2("1"), U2("0"), U2("1")]
    f = crt_univariate(moduli, residues)
    found = []
    for bits in range(16):
        g = U2.zero()
        for k in range(4):
            if bits >> k & 1:
                g = g + U2.monomial((k,))
        if all(poly_divmod(g - r, m)[1].is_zero() for m, r in zip(moduli, residues)):
            found.append(g)
    assert found == [f]


def test_crt_errors():
    with pytest.raises(LengthMismatch):
        crt_univariate([U2("y")], [])
    with pytest.raises(NotCoprime) as info:
        crt_univariate([U2("y"), U2("y+1"), U2("y^2+y")], [U2("0")] * 3)
    assert info.value.pair == (0, 2)


@given(st.lists(st.integers(0, 2), min_size=4, max_size=4), st.lists(st.integers(0, 2), min_size=4, max_size=4))
@settings(max_examples=40, deadline=None)
def test_crt_round_trip(r1, r2):
    moduli = [f for _, f in zip(range(4), monic_irreducibles(U3))]
    residues = [U3.const(a) + U3.monomial((1,), b) for a, b in zip(r1, r2)]
    residues = [poly_divmod(r, m)[1] for r, m in zip(residues, moduli)]
    f = crt_univariate(moduli, residues)
    total = sum(m.degree() for m in moduli)
    assert f.degree() < total
    for m, r in zip(moduli, residues):
        assert poly_divmod(f - r, m)[1].is_zero()
