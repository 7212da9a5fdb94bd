"""Exact spanning-tree counts for Apollonian networks.

Two routes are implemented and kept separate:

* the class census ``(a, b, c, s)`` advanced one step at a time by polynomial
  recurrences, starting from the triangle;
* closed forms whose rational exponents are checked to be integral and then
  evaluated with integer powers only.

Here ``a`` counts spanning 3-forests with each hub in its own tree, ``b``
counts spanning 2-forests without hub edges in which one given hub is alone
in its tree, ``c`` counts spanning trees without hub edges and ``s`` counts
all spanning trees.

The spanning-tree entropy sequence ``z_n = ln(s_n) / V_n`` is computed with
mpmath from the factored form of ``s_n``; the integer itself is never
expanded for it.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterator

import mpmath

from .errors import ConsistencyError, SizeGuardError
from .graph import check_step, order_size

EXPANSION_THRESHOLD = 12
GUARD_DIGITS = 10
METHODS = ("recursion", "closed-form")

SIERPINSKI_3D_ENTROPY = "1.5694"
HYPERCUBIC_3D_ENTROPY = "1.6734"


@dataclass(frozen=True)
class ClassCensus:
    n: int
    a: int
    b: int
    c: int
    s: int

    def __post_init__(self) -> None:
        check_step(self.n)
        if self.a < 1 or min(self.b, self.c, self.s) < 0:
            raise ConsistencyError(f"census counts out of range: {self}")
        if (self.b == 0 and self.c == 0) != (self.n == 0):
            raise ConsistencyError(f"b and c must vanish exactly at n = 0: {self}")
        if self.a * self.c != 3 * self.b * self.b:
            raise ConsistencyError(f"a*c != 3*b^2 at n = {self.n}")


def census_seed() -> ClassCensus:
    """The census of A(0), a triangle."""
    return ClassCensus(n=0, a=1, b=0, c=0, s=3)


def census_step(prev: ClassCensus) -> ClassCensus:
    """Advance the census from A(n) to A(n+1)."""
    a, b, c = prev.a, prev.b, prev.c
    a2, b2 = a * a, b * b
    a3 = a2 * a
    b3 = b2 * b
    a2b, ab2, a2c, abc = a2 * b, a * b2, a2 * c, a * b * c
    return ClassCensus(
        n=prev.n + 1,
        a=3 * a3 + 6 * a2b,
        b=a3 + 7 * a2b + 7 * ab2 + a2c,
        c=a3 + 12 * a2b + 36 * ab2 + 14 * b3 + 3 * a2c + 12 * abc,
        s=16 * a3 + 72 * a2b + 78 * ab2 + 14 * b3 + 9 * a2c + 12 * abc,
    )


def census_chain(n_max: int) -> Iterator[ClassCensus]:
    """Yield the censuses for steps ``0 .. n_max`` inclusive."""
    check_step(n_max)
    census = census_seed()
    yield census
    for _ in range(n_max):
        census = census_step(census)
        yield census


def census(n: int) -> ClassCensus:
    for item in census_chain(n):
        pass
    return item


def _quarter(numerator: int, what: str) -> int:
    if numerator % 4:
        raise ConsistencyError(f"exponent of {what} is not an integer: {numerator}/4")
    return numerator // 4


def _half(value: int, what: str) -> int:
    if value % 2:
        raise ConsistencyError(f"{what} is odd: cannot halve exactly")
    return value // 2


def _shared_exponent(n: int) -> int:
    # (3^n - 2n - 1) / 4, common to the powers of 5 in a, b, c and of 15 in b
    return _quarter(3**n - 2 * n - 1, "5")


def closed_a(n: int) -> int:
    check_step(n)
    e3 = _quarter(3**n + 2 * n - 1, "3")
    e5 = _shared_exponent(n)
    return 3**e3 * 5**e5


def closed_b(n: int) -> int:
    check_step(n)
    e = _shared_exponent(n)
    return 15**e * _half(5**n - 3**n, "5^n - 3^n")


def closed_c(n: int) -> int:
    check_step(n)
    e3 = _quarter(3**n - 6 * n + 3, "3")
    e5 = _shared_exponent(n)
    half_gap = _half(5**n - 3**n, "5^n - 3^n")
    return 3**e3 * 5**e5 * half_gap * half_gap


@dataclass(frozen=True)
class FactoredCount:
    """``s_n = 3**e3 * 5**e5 * m**2`` with ``m = (3**n + 5**n) / 2``."""

    n: int
    e3: int
    e5: int
    m: int

    def __str__(self) -> str:
        return f"3^{self.e3} * 5^{self.e5} * {self.m}^2"

    def expand(self, threshold: int = EXPANSION_THRESHOLD) -> int:
        if self.n > threshold:
            raise SizeGuardError(
                f"s_{self.n} is not expanded above n = {threshold}; "
                "use the factored form or its logarithm instead"
            )
        return 3**self.e3 * 5**self.e5 * self.m * self.m

    def log(self, dps: int = 30) -> mpmath.mpf:
        """Natural logarithm of the represented value at ``dps`` digits."""
        with mpmath.workdps(dps + GUARD_DIGITS):
            value = self.e3 * mpmath.log(3) + self.e5 * mpmath.log(5) + 2 * mpmath.log(self.m)
        return value

    def log10(self, dps: int = 30) -> mpmath.mpf:
        with mpmath.workdps(dps + GUARD_DIGITS):
            value = self.log(dps) / mpmath.log(10)
        return value

    def num_digits(self) -> int:
        """Decimal digit count, from the logarithm (exact integer count when small)."""
        if self.n <= EXPANSION_THRESHOLD:
            return decimal_digits(self.expand())
        # value is never a power of ten (it is odd or divisible by 3 or by m > 1)
        dps = len(str(self.e3 + self.e5)) + 20
        return int(mpmath.floor(self.log10(dps))) + 1


def decimal_digits(x: int) -> int:
    """Number of decimal digits of ``x > 0`` without converting it to a string."""
    if x <= 0:
        raise ValueError("x must be positive")
    k = max(1, int(x.bit_length() * 0.30102999566398120))
    while 10**k <= x:
        k += 1
    while k > 1 and 10 ** (k - 1) > x:
        k -= 1
    return k


def closed_s(n: int) -> FactoredCount:
    """Spanning-tree count of A(n) in factored form."""
    check_step(n)
    m = _half(3**n + 5**n, "3^n + 5^n")
    if n == 0:
        # 3^(n-1) is fractional at n = 0; the formula still evaluates to 3
        return FactoredCount(n=0, e3=1, e5=0, m=m)
    e3 = _quarter(3 * (3 ** (n - 1) - 2 * (n - 1) - 1), "3")
    e5 = _quarter(3**n - 2 * (n - 1) - 3, "5")
    return FactoredCount(n=n, e3=e3, e5=e5, m=m)


def spanning_tree_count(n: int, method: str = "closed-form", threshold: int = EXPANSION_THRESHOLD) -> int:
    """Number of spanning trees of A(n) as a full integer.

    ``method`` is ``"recursion"`` (iterate the census) or ``"closed-form"``.
    Both refuse ``n > threshold``.
    """
    check_step(n)
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    if n > threshold:
        raise SizeGuardError(f"s_{n} is not expanded above n = {threshold}")
    if method == "recursion":
        return census(n).s
    return closed_s(n).expand(threshold)


@dataclass(frozen=True)
class EntropyRow:
    n: int
    v: int
    ln_s: mpmath.mpf
    z: mpmath.mpf

    def residual(self) -> mpmath.mpf:
        return abs(self.z - entropy_limit(mpmath.mp.dps))


def entropy_limit(dps: int = 30) -> mpmath.mpf:
    with mpmath.workdps(dps + GUARD_DIGITS):
        value = mpmath.log(15) / 2
    return value


def z_from_count(n: int, dps: int) -> tuple[mpmath.mpf, mpmath.mpf]:
    """``(ln s_n, ln s_n / V_n)`` from the factored count."""
    v, _ = order_size(n)
    with mpmath.workdps(dps + GUARD_DIGITS):
        ln_s = closed_s(n).log(dps + GUARD_DIGITS)
        return ln_s, ln_s / v


def z_explicit(n: int, dps: int) -> mpmath.mpf:
    """z_n from its standalone expression in ln 2, ln(27/5), ln 15, ln 135 and ln(3^n + 5^n)."""
    check_step(n)
    log = mpmath.log
    p3 = 3**n
    with mpmath.workdps(dps + GUARD_DIGITS):
        numerator = (
            -8 * log(2)
            + log(mpmath.mpf(27) / 5)
            + p3 * log(15)
            - 2 * n * log(135)
            + 8 * log(p3 + 5**n)
        )
        return numerator / (2 * (5 + p3))


def entropy_table(n_max: int, precision_digits: int = 20) -> list[EntropyRow]:
    """Rows ``n = 0 .. n_max`` of ``(n, V_n, ln s_n, z_n)``.

    Each ``z_n`` is computed from the factored count and from the explicit
    expression; the two must agree to ``precision_digits`` significant digits.
    """
    check_step(n_max)
    if precision_digits < 15:
        raise ValueError("precision_digits must be at least 15")
    rows = []
    tolerance = mpmath.mpf(10) ** (-precision_digits)
    with mpmath.workdps(precision_digits + GUARD_DIGITS):
        for n in range(n_max + 1):
            v, _ = order_size(n)
            ln_s, z = z_from_count(n, precision_digits)
            z_alt = z_explicit(n, precision_digits)
            if abs(z - z_alt) > tolerance * abs(z):
                raise ConsistencyError(f"z_{n} disagrees between factored count and explicit form: {z} vs {z_alt}")
            rows.append(EntropyRow(n=n, v=v, ln_s=ln_s, z=z))
    return rows


def entropy_csv(rows: list[EntropyRow], precision_digits: int = 20) -> str:
    """CSV with header ``n,V_n,ln_s,z_n,residual`` and a closing ``limit`` row."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "V_n", "ln_s", "z_n", "residual"])
    with mpmath.workdps(precision_digits + GUARD_DIGITS):
        limit = entropy_limit(precision_digits)
        for row in rows:
            writer.writerow([
                row.n,
                row.v,
                mpmath.nstr(row.ln_s, precision_digits),
                mpmath.nstr(row.z, precision_digits),
                mpmath.nstr(abs(row.z - limit), 6),
            ])
        if rows:
            writer.writerow(["limit", "", "", mpmath.nstr(limit, precision_digits),
                             mpmath.nstr(abs(rows[-1].z - limit), 6)])
    return buf.getvalue()


def entropy_comparison() -> dict[str, mpmath.mpf]:
    """Spanning-tree entropies of graphs with average degree 6."""
    return {
        "apollonian": entropy_limit(),
        "sierpinski-3d": mpmath.mpf(SIERPINSKI_3D_ENTROPY),
        "hypercubic-lattice-3d": mpmath.mpf(HYPERCUBIC_3D_ENTROPY),
    }
