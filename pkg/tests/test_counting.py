import csv
import io
import math
import sys

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apollonian.counting import (
    EXPANSION_THRESHOLD,
    ClassCensus,
    census,
    census_chain,
    census_seed,
    census_step,
    closed_a,
    closed_b,
    closed_c,
    closed_s,
    decimal_digits,
    entropy_comparison,
    entropy_csv,
    entropy_limit,
    entropy_table,
    spanning_tree_count,
    z_explicit,
    z_from_count,
)
from apollonian.errors import ConsistencyError, SizeGuardError


@pytest.fixture(scope="module")
def chain():
    return list(census_chain(13))


def test_seed():
    seed = census_seed()
    assert (seed.n, seed.a, seed.b, seed.c, seed.s) == (0, 1, 0, 0, 3)


def test_first_steps():
    one = census_step(census_seed())
    assert (one.a, one.b, one.c, one.s) == (3, 1, 1, 16)
    two = census_step(one)
    # hand evaluation: a = 81 + 54, b = 27 + 63 + 21 + 9, c = 27 + 108 + 108 + 14 + 27 + 36,
    # s = 432 + 648 + 234 + 14 + 81 + 36
    assert (two.a, two.b, two.c, two.s) == (135, 120, 320, 1445)
    three = census_step(two)
    assert three.s == 487350000


def test_census_rejects_broken_identity():
    with pytest.raises(ConsistencyError):
        ClassCensus(n=1, a=3, b=1, c=2, s=16)
    with pytest.raises(ConsistencyError):
        ClassCensus(n=1, a=1, b=0, c=0, s=1)


@pytest.mark.parametrize("n, a", [(0, 1), (1, 3), (2, 135)])
def test_closed_a_values(n, a):
    assert closed_a(n) == a


@pytest.mark.parametrize("n, b", [(0, 0), (1, 1), (2, 120)])
def test_closed_b_values(n, b):
    assert closed_b(n) == b


@pytest.mark.parametrize("n, c", [(0, 0), (1, 1), (2, 320)])
def test_closed_c_values(n, c):
    assert closed_c(n) == c


@pytest.mark.parametrize("n, e3, e5, m, value", [
    (0, 1, 0, 1, 3),
    (1, 0, 0, 4, 16),
    (2, 0, 1, 17, 1445),
    (3, 3, 5, 76, 487350000),
])
def test_closed_s_factored(n, e3, e5, m, value):
    fc = closed_s(n)
    assert (fc.e3, fc.e5, fc.m) == (e3, e5, m)
    assert fc.expand() == value


def test_factored_string():
    assert str(closed_s(3)) == "3^3 * 5^5 * 76^2"


@pytest.mark.parametrize("n", range(13))
def test_recursion_equals_closed_forms(chain, n):
    c = chain[n]
    assert c.a == closed_a(n)
    assert c.b == closed_b(n)
    assert c.c == closed_c(n)
    assert c.s == closed_s(n).expand()


@pytest.mark.parametrize("n", range(13))
def test_identities(chain, n):
    c, nxt = chain[n], chain[n + 1]
    assert c.a * c.c == 3 * c.b**2
    # hub-edge bijections: trees use 0, 1 or 2 hub edges
    assert c.s == c.c + 6 * c.b + 3 * c.a
    if n == 0:
        assert nxt.a == 3 * c.a**3
    else:
        assert 3 ** (n - 1) * nxt.a == 5**n * c.a**3


@pytest.mark.parametrize("n", range(1, 11))
def test_growth(chain, n):
    assert chain[n + 1].s >= 16 * chain[n].a ** 3
    assert chain[n + 1].s > chain[n].s


def test_growth_is_subcubic(chain):
    assert all(chain[n + 1].s < chain[n].s ** 3 for n in range(1, 11))


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=1, max_value=400))
def test_exponents_are_integral(n):
    assert (3**n - 2 * (n - 1) - 3) % 4 == 0
    assert 3 * (3 ** (n - 1) - 2 * (n - 1) - 1) % 4 == 0
    assert (3**n + 5**n) % 2 == 0
    assert (5**n - 3**n) % 2 == 0


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=0, max_value=60))
def test_factored_fields_for_large_n(n):
    fc = closed_s(n)
    assert fc.e3 >= 0 and fc.e5 >= 0
    assert 2 * fc.m == 3**n + 5**n


@pytest.mark.parametrize("method", ["recursion", "closed-form"])
@pytest.mark.parametrize("n, value", [(0, 3), (1, 16), (2, 1445)])
def test_spanning_tree_count(method, n, value):
    assert spanning_tree_count(n, method) == value


def test_threshold():
    with pytest.raises(SizeGuardError):
        spanning_tree_count(EXPANSION_THRESHOLD + 1)
    with pytest.raises(SizeGuardError):
        closed_s(EXPANSION_THRESHOLD + 1).expand()
    assert closed_s(13).expand(threshold=13) == census(13).s


def test_unknown_method():
    with pytest.raises(ValueError):
        spanning_tree_count(2, "kirchhoff")


def test_decimal_digits(chain):
    old = sys.get_int_max_str_digits() if hasattr(sys, "get_int_max_str_digits") else None
    if old is not None:
        sys.set_int_max_str_digits(0)
    try:
        for n in range(13):
            assert decimal_digits(chain[n].s) == len(str(chain[n].s))
        for x in (1, 9, 10, 99, 100, 10**50 - 1, 10**50):
            assert decimal_digits(x) == len(str(x))
    finally:
        if old is not None:
            sys.set_int_max_str_digits(old)


def test_s12_digit_count():
    assert closed_s(12).num_digits() == 156260


def test_num_digits_from_log_matches_exact():
    fc = closed_s(13)
    exact = decimal_digits(fc.expand(threshold=13))
    assert fc.num_digits() == exact


def test_z_small_values():
    with mpmath.workdps(30):
        assert abs(z_from_count(0, 30)[1] - mpmath.log(3) / 3) < mpmath.mpf("1e-28")
        _, z2 = z_from_count(2, 30)
    assert float(z2) == pytest.approx(math.log(1445) / 7, rel=1e-15)
    assert float(z2) == pytest.approx(1.0394092, abs=1e-7)


@pytest.mark.parametrize("n", range(21))
def test_z_routes_agree(n):
    with mpmath.workdps(40):
        _, a = z_from_count(n, 40)
        b = z_explicit(n, 40)
        assert abs(a - b) <= mpmath.mpf("1e-38") * abs(a)


def test_entropy_table():
    rows = entropy_table(12, precision_digits=20)
    assert [r.n for r in rows] == list(range(13))
    assert rows[7].v == 1096
    limit = entropy_limit(20)
    residuals = [abs(r.z - limit) for r in rows]
    assert all(residuals[n] < residuals[n - 1] for n in range(8, 13))
    # z_n overshoots the limit between n = 5 and n = 6
    assert rows[5].z < limit < rows[6].z
    assert residuals[7] > residuals[6]
    assert residuals[10] < 1e-3
    assert all(r.z > 0 for r in rows[1:])


def test_entropy_table_precision_floor():
    with pytest.raises(ValueError):
        entropy_table(3, precision_digits=10)


def test_entropy_limit():
    limit = entropy_limit(30)
    assert mpmath.nstr(limit, 8) == "1.3540251"
    assert round(float(limit), 4) == 1.3540


def test_entropy_csv():
    text = entropy_csv(entropy_table(3, 15), 15)
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["n", "V_n", "ln_s", "z_n", "residual"]
    assert [r[0] for r in rows[1:]] == ["0", "1", "2", "3", "limit"]
    assert rows[3][1] == "7"
    assert float(rows[3][3]) == pytest.approx(math.log(1445) / 7, rel=1e-14)
    assert float(rows[-1][3]) == pytest.approx(math.log(15) / 2, rel=1e-14)


def test_entropy_comparison():
    table = entropy_comparison()
    assert float(table["apollonian"]) == pytest.approx(1.3540, abs=5e-5)
    assert table["sierpinski-3d"] == mpmath.mpf("1.5694")
    assert table["hypercubic-lattice-3d"] == mpmath.mpf("1.6734")
    assert table["apollonian"] < table["sierpinski-3d"] < table["hypercubic-lattice-3d"]
