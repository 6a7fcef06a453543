"""Exact arithmetic in valued fields and their finite Galois extensions.

The base field is always Q, carried either with the usual absolute value
("arch" backend) or with a p-adic absolute value ("padic" backend).  Norm
values are kept exact:

* padic: every value that occurs is of the form u * p**e with u a positive
  rational of zero p-valuation and e rational (e covers extension norms
  |N(a)|**(1/n); u covers rational weights like 3/2 that are not powers of
  p).  The representation is canonical, so multiplication and comparison
  are exact.
* arch: a value is an interval [lo, hi] of rationals that is guaranteed to
  contain the true value.  Exact values have lo == hi.  Intervals produced
  from algebraic data carry a refiner that recomputes them at higher
  precision; comparisons refine on demand and raise UndecidableComparison
  once the precision budget is exhausted.

Finite extensions L/K are presented by a monic integer minimal polynomial
and the images of the primitive element under a set of Galois generators.
Elements of L are coefficient vectors over the power basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import (
    CapExceeded,
    GroupOrderMismatch,
    IndexOutOfRange,
    MixedBackends,
    NotAutomorphism,
    NotIrreducible,
    NotUnramified,
    UndecidableComparison,
)
from .linalg import F0, F1, Mat, Vec, det, frac, mat_vec, solve, vec

ARCH = "arch"
PADIC = "padic"

DEGREE_CAP = 8

_PRECISION_BUDGET = 4096


def set_precision_budget(bits: int) -> None:
    global _PRECISION_BUDGET
    _PRECISION_BUDGET = int(bits)


def precision_budget() -> int:
    return _PRECISION_BUDGET


class local_precision_budget:
    """Temporarily lower (or raise) the refinement budget for comparisons."""

    def __init__(self, bits: int):
        self.bits = int(bits)
        self._saved: int | None = None

    def __enter__(self):
        global _PRECISION_BUDGET
        self._saved = _PRECISION_BUDGET
        _PRECISION_BUDGET = self.bits
        return self

    def __exit__(self, *exc):
        global _PRECISION_BUDGET
        _PRECISION_BUDGET = self._saved
        return False


@dataclass(frozen=True)
class ValuedField:
    """Q with a non-trivial multiplicative valuation."""

    backend: str
    prime: int | None = None

    def __post_init__(self):
        if self.backend not in (ARCH, PADIC):
            raise ValueError(f"unknown backend {self.backend!r}")
        if self.backend == PADIC:
            if self.prime is None or self.prime < 2 or not _is_prime(self.prime):
                raise ValueError(f"padic backend needs a prime, got {self.prime!r}")
        elif self.prime is not None:
            raise ValueError("arch backend takes no prime")

    @property
    def is_padic(self) -> bool:
        return self.backend == PADIC

    def abs(self, x) -> "NormValue":
        """|x| for a rational x, per the backend."""
        x = frac(x)
        if self.is_padic:
            if x == 0:
                return PadicNorm.zero(self.prime)
            return PadicNorm(self.prime, F1, Fraction(-padic_valuation(x, self.prime)))
        return ArchNorm.exact(abs(x))

    def norm_value(self, q) -> "NormValue":
        """Exact NormValue with the given positive rational value."""
        q = frac(q)
        if q < 0:
            raise ValueError("norm values are non-negative")
        if self.is_padic:
            return PadicNorm.zero(self.prime) if q == 0 else PadicNorm(self.prime, q, F0)
        return ArchNorm.exact(q)

    def zero_norm(self) -> "NormValue":
        return self.norm_value(0)

    def one_norm(self) -> "NormValue":
        return self.norm_value(1)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, int(math.isqrt(n)) + 1):
        if n % d == 0:
            return False
    return True


def padic_valuation(x: Fraction, p: int) -> int:
    if x == 0:
        raise ValueError("0 has infinite valuation")
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


class PadicNorm:
    """Exact non-negative value u * p**e, u a p-unit rational; 0 if u == 0."""

    __slots__ = ("p", "unit", "exp")

    def __init__(self, p: int, unit: Fraction, exp: Fraction):
        unit = frac(unit)
        exp = frac(exp)
        if unit < 0:
            raise ValueError("norm values are non-negative")
        if unit == 0:
            exp = F0
        else:
            v = padic_valuation(unit, p)
            if v:
                unit = unit / Fraction(p) ** v
                exp = exp + v
        self.p = p
        self.unit = unit
        self.exp = exp

    @classmethod
    def zero(cls, p: int) -> "PadicNorm":
        return cls(p, F0, F0)

    @property
    def is_exact(self) -> bool:
        return True

    def is_zero(self) -> bool:
        return self.unit == 0

    def is_one(self) -> bool:
        return self.unit == 1 and self.exp == 0

    def __mul__(self, other):
        other = self._coerce(other)
        return PadicNorm(self.p, self.unit * other.unit, self.exp + other.exp)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("norm value division by zero")
        return PadicNorm(self.p, self.unit / other.unit, self.exp - other.exp)

    def __pow__(self, k: int):
        if self.is_zero():
            return self if k > 0 else PadicNorm(self.p, F1, F0)
        return PadicNorm(self.p, self.unit**k, self.exp * k)

    def root(self, k: int) -> "PadicNorm":
        """k-th root; only p-power values keep an exact representation."""
        if self.is_zero():
            return self
        if self.unit != 1:
            raise ValueError(f"{self} has no exact {k}-th root in p^Q form")
        return PadicNorm(self.p, F1, self.exp / k)

    def _coerce(self, other) -> "PadicNorm":
        if isinstance(other, PadicNorm):
            if other.p != self.p:
                raise MixedBackends(f"p-adic values for p={self.p} and p={other.p}")
            return other
        if isinstance(other, ArchNorm):
            raise MixedBackends("cannot mix arch and padic norm values")
        return PadicNorm(self.p, frac(other), F0)

    def _cmp(self, other) -> int:
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            a = 0 if self.is_zero() else 1
            b = 0 if other.is_zero() else 1
            return (a > b) - (a < b)
        q = self.exp - other.exp
        d, m = q.denominator, q.numerator
        # self <=> other  iff  (unit_s/unit_o)**d * p**m <=> 1
        lhs = (self.unit / other.unit) ** d * Fraction(self.p) ** m
        return (lhs > 1) - (lhs < 1)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        if not isinstance(other, (PadicNorm, ArchNorm, int, Fraction)):
            return NotImplemented
        return self._cmp(other) == 0

    def __hash__(self):
        return hash((self.p, self.unit, self.exp))

    def as_fraction(self) -> Fraction:
        """Exact rational value; fails for fractional exponents."""
        if self.is_zero():
            return F0
        if self.exp.denominator != 1:
            raise ValueError(f"{self} is irrational")
        return self.unit * Fraction(self.p) ** self.exp.numerator

    def __repr__(self):
        if self.is_zero():
            return "0"
        if self.unit == 1:
            return f"{self.p}^{self.exp}"
        return f"{self.unit}*{self.p}^{self.exp}"

    def describe(self) -> str:
        return repr(self)


class ArchNorm:
    """Interval enclosure [lo, hi] of a non-negative real, refinable."""

    __slots__ = ("lo", "hi", "refiner")

    def __init__(self, lo: Fraction, hi: Fraction, refiner: Callable[[int], tuple[Fraction, Fraction]] | None = None):
        lo = max(frac(lo), F0)
        hi = frac(hi)
        if hi < lo:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        self.lo = lo
        self.hi = hi
        self.refiner = refiner

    @classmethod
    def exact(cls, q) -> "ArchNorm":
        q = frac(q)
        return cls(q, q)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def is_zero(self) -> bool:
        if self.is_exact:
            return self.lo == 0
        return self._decide(lambda a: False if a.lo > 0 else (True if a.hi == 0 else None))

    def is_one(self) -> bool:
        return self.is_exact and self.lo == 1

    def refined(self, bits: int) -> "ArchNorm":
        """Tighter enclosure at the given precision (intersection stays valid)."""
        if self.refiner is None or self.is_exact:
            return self
        lo, hi = self.refiner(bits)
        return ArchNorm(max(lo, self.lo), min(hi, self.hi), self.refiner)

    def _coerce(self, other) -> "ArchNorm":
        if isinstance(other, ArchNorm):
            return other
        if isinstance(other, PadicNorm):
            raise MixedBackends("cannot mix arch and padic norm values")
        return ArchNorm.exact(other)

    def __mul__(self, other):
        other = self._coerce(other)
        if self.refiner is None and other.refiner is None:
            return ArchNorm(self.lo * other.lo, self.hi * other.hi)
        a, b = self, other

        def refine(bits):
            ra, rb = a.refined(bits), b.refined(bits)
            return ra.lo * rb.lo, ra.hi * rb.hi

        return ArchNorm(self.lo * other.lo, self.hi * other.hi, refine)

    __rmul__ = __mul__

    def __add__(self, other):
        other = self._coerce(other)
        if self.refiner is None and other.refiner is None:
            return ArchNorm(self.lo + other.lo, self.hi + other.hi)
        a, b = self, other

        def refine(bits):
            ra, rb = a.refined(bits), b.refined(bits)
            return ra.lo + rb.lo, ra.hi + rb.hi

        return ArchNorm(self.lo + other.lo, self.hi + other.hi, refine)

    __radd__ = __add__

    def __truediv__(self, other):
        other = self._coerce(other)
        b = other
        if b.lo == 0:
            b = _refine_until(b, lambda x: x.lo > 0 or None)
        if self.refiner is None and b.refiner is None:
            return ArchNorm(self.lo / b.hi, self.hi / b.lo)
        a = self

        def refine(bits):
            ra, rb = a.refined(bits), b.refined(bits)
            blo = rb.lo if rb.lo > 0 else rb.hi  # keep a valid (loose) bound
            return ra.lo / rb.hi, ra.hi / blo

        return ArchNorm(self.lo / b.hi, self.hi / b.lo, refine)

    def __pow__(self, k: int):
        out = ArchNorm.exact(1)
        for _ in range(k):
            out = out * self
        return out

    def _decide(self, test, negate=False):
        """Refine until `test` returns a bool; test gets the current enclosure."""
        cur = self
        bits = 64
        while True:
            r = test(cur)
            if r is not None:
                return r
            if cur.refiner is None or bits > _PRECISION_BUDGET:
                raise UndecidableComparison(
                    f"cannot decide comparison for [{cur.lo}, {cur.hi}] within {_PRECISION_BUDGET} bits"
                )
            cur = cur.refined(bits)
            bits *= 2

    def _cmp_pair(self, other, op):
        other = self._coerce(other)
        a, b = self, other
        bits = 64
        while True:
            if op == "le":
                if a.hi <= b.lo:
                    return True
                if b.hi < a.lo:
                    return False
            elif op == "lt":
                if a.hi < b.lo:
                    return True
                if b.hi <= a.lo:
                    return False
            elif op == "eq":
                if a.is_exact and b.is_exact:
                    return a.lo == b.lo
                if a.hi < b.lo or b.hi < a.lo:
                    return False
            if (a.refiner is None and b.refiner is None) or bits > _PRECISION_BUDGET:
                raise UndecidableComparison(
                    f"[{a.lo}, {a.hi}] vs [{b.lo}, {b.hi}] undecided at {_PRECISION_BUDGET} bits"
                )
            a, b = a.refined(bits), b.refined(bits)
            bits *= 2

    def __le__(self, other):
        return self._cmp_pair(other, "le")

    def __lt__(self, other):
        return self._cmp_pair(other, "lt")

    def __ge__(self, other):
        return self._coerce(other)._cmp_pair(self, "le")

    def __gt__(self, other):
        return self._coerce(other)._cmp_pair(self, "lt")

    def __eq__(self, other):
        if not isinstance(other, (ArchNorm, PadicNorm, int, Fraction)):
            return NotImplemented
        return self._cmp_pair(other, "eq")

    def __hash__(self):
        if not self.is_exact:
            raise TypeError("inexact interval is unhashable")
        return hash(self.lo)

    def as_fraction(self) -> Fraction:
        if not self.is_exact:
            raise ValueError(f"[{self.lo}, {self.hi}] is not exact")
        return self.lo

    def __repr__(self):
        if self.is_exact:
            return str(self.lo)
        return f"[{self.lo}, {self.hi}]"

    def describe(self) -> str:
        if self.is_exact:
            return str(self.lo)
        return f"[{self.lo}, {self.hi}] ~ {float(self.lo):.6g}..{float(self.hi):.6g}"


NormValue = PadicNorm | ArchNorm


def _refine_until(x: ArchNorm, test):
    bits = 64
    cur = x
    while True:
        r = test(cur)
        if r is not None:
            return cur
        if cur.refiner is None or bits > _PRECISION_BUDGET:
            raise UndecidableComparison(f"cannot separate [{cur.lo}, {cur.hi}] from 0")
        cur = cur.refined(bits)
        bits *= 2


def nv_max(values, field: ValuedField | None = None) -> NormValue:
    values = list(values)
    if not values:
        if field is None:
            raise ValueError("empty max needs a field")
        return field.zero_norm()
    out = values[0]
    for v in values[1:]:
        if isinstance(out, ArchNorm) or isinstance(v, ArchNorm):
            a, b = out, v
            out = ArchNorm(
                max(a.lo, b.lo),
                max(a.hi, b.hi),
                (lambda a_, b_: (lambda bits: _pair_max(a_, b_, bits)))(a, b)
                if (a.refiner or b.refiner)
                else None,
            )
        else:
            out = out if out >= v else v
    return out


def _pair_max(a: ArchNorm, b: ArchNorm, bits):
    ra, rb = a.refined(bits), b.refined(bits)
    return max(ra.lo, rb.lo), max(ra.hi, rb.hi)


def nv_sum(values, field: ValuedField) -> NormValue:
    if field.is_padic:
        raise MixedBackends("sums of p-adic norm values never occur (sup convention)")
    out: ArchNorm = field.zero_norm()
    for v in values:
        out = out + v
    return out


def parse_norm_value(field: ValuedField, text) -> NormValue:
    """Scenario literal: 'a/b' rational, or 'p^q' in the padic backend."""
    if isinstance(text, (int, float)):
        return field.norm_value(Fraction(text).limit_denominator() if isinstance(text, float) else text)
    text = text.strip()
    if "^" in text:
        base, _, e = text.partition("^")
        if not field.is_padic:
            raise MixedBackends("p^q literals need the padic backend")
        if int(base) != field.prime:
            raise ValueError(f"literal base {base} != field prime {field.prime}")
        return PadicNorm(field.prime, F1, Fraction(e))
    return field.norm_value(Fraction(text))


# ---------------------------------------------------------------------------
# certified root enclosures (arch backend)

_SQRT_BITS = 64


def _sqrt_bounds(q: Fraction, bits: int = _SQRT_BITS) -> tuple[Fraction, Fraction]:
    """Rational lo <= sqrt(q) <= hi with relative gap ~2**-bits."""
    if q < 0:
        raise ValueError("negative radicand")
    if q == 0:
        return F0, F0
    num, den = q.numerator, q.denominator
    scale = 1 << bits
    s = math.isqrt(num * den * scale * scale)
    lo = Fraction(s, den * scale)
    hi = Fraction(s + 1, den * scale)
    return lo, hi


def _cabs_bounds(re: Fraction, im: Fraction) -> tuple[Fraction, Fraction]:
    return _sqrt_bounds(re * re + im * im)


def _poly_eval_complex(coeffs: Sequence[Fraction], re: Fraction, im: Fraction) -> tuple[Fraction, Fraction]:
    """Evaluate sum c_i z^i exactly at z = re + im*i."""
    rre, rim = F0, F0
    for c in reversed(coeffs):
        rre, rim = rre * re - rim * im + c, rre * im + rim * re
    return rre, rim


def _mpf_to_fraction(x) -> Fraction:
    import mpmath

    p, q = mpmath.libmp.to_rational(x._mpf_)
    return Fraction(p, q)


def root_enclosures(coeffs: Sequence[Fraction], bits: int = 128) -> list[tuple[Fraction, Fraction, Fraction]]:
    """Certified enclosures (re, im, radius) of all roots of a squarefree poly.

    Centers come from mpmath; the radius n*|f(z)|/|f'(z)| is evaluated in
    exact rational complex arithmetic, so each disk certifiably contains a
    root.  Disks are checked pairwise disjoint, which pins exactly one root
    per disk.  Retries at higher precision until that succeeds.
    """
    import mpmath

    coeffs = [frac(c) for c in coeffs]
    n = len(coeffs) - 1
    if n == 0:
        return []
    dcoeffs = [coeffs[i] * i for i in range(1, n + 1)]
    attempt_bits = max(bits, 64)
    for _ in range(12):
        with mpmath.workprec(attempt_bits + 64):
            mp_coeffs = [mpmath.mpf(c.numerator) / mpmath.mpf(c.denominator) for c in reversed(coeffs)]
            try:
                roots = mpmath.polyroots(mp_coeffs, maxsteps=200, extraprec=attempt_bits)
            except mpmath.libmp.NoConvergence:
                attempt_bits *= 2
                continue
            grid = 1 << (attempt_bits + 16)
            centers = []
            for r in roots:
                c = mpmath.mpc(r)
                centers.append(
                    (
                        Fraction(round(_mpf_to_fraction(c.real) * grid), grid),
                        Fraction(round(_mpf_to_fraction(c.imag) * grid), grid),
                    )
                )
        enclosures = []
        ok = True
        for re, im in centers:
            fre, fim = _poly_eval_complex(coeffs, re, im)
            dre, dim_ = _poly_eval_complex(dcoeffs, re, im)
            _, f_hi = _cabs_bounds(fre, fim)
            df_lo, _ = _cabs_bounds(dre, dim_)
            if df_lo == 0:
                ok = False
                break
            rad = n * f_hi / df_lo
            enclosures.append((re, im, rad))
        if ok:
            for i in range(len(enclosures)):
                for j in range(i + 1, len(enclosures)):
                    ri, rj = enclosures[i], enclosures[j]
                    d2 = (ri[0] - rj[0]) ** 2 + (ri[1] - rj[1]) ** 2
                    if d2 <= (ri[2] + rj[2]) ** 2:
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            return enclosures
        attempt_bits *= 2
    raise CapExceeded(f"could not isolate roots of degree-{n} polynomial at {attempt_bits} bits")


# ---------------------------------------------------------------------------
# finite Galois extensions


class FieldExtension:
    """L/K presented by a monic integer minimal polynomial plus Galois data.

    Elements of L are coefficient vectors over the power basis 1, theta,
    ..., theta^(n-1).  galois[k] is the matrix of the k-th automorphism;
    index 0 is the identity.
    """

    def __init__(
        self,
        base: ValuedField,
        minpoly: tuple[Fraction, ...],
        galois: tuple[Mat, ...],
        norm_flavor: str,
        norm_weights: tuple[NormValue, ...],
        name: str = "",
    ):
        self.base = base
        self.minpoly = minpoly
        self.degree = len(minpoly) - 1
        self.galois = galois
        self.norm_flavor = norm_flavor
        self.norm_weights = norm_weights
        self.name = name or f"deg{self.degree}"
        self._power_table = _power_table(minpoly)
        self._comp_table: tuple[tuple[int, ...], ...] | None = None
        self._root_cache: dict[int, list[tuple[Fraction, Fraction, Fraction]]] = {}

    # -- element arithmetic over the power basis --

    def zero(self) -> Vec:
        return (F0,) * self.degree

    def one(self) -> Vec:
        return vec([1] + [0] * (self.degree - 1))

    def embed(self, c) -> Vec:
        return vec([c] + [0] * (self.degree - 1))

    def gen(self) -> Vec:
        if self.degree == 1:
            # theta is a rational root of the degree-1 minimal polynomial
            return self.embed(-self.minpoly[0])
        return vec([0, 1] + [0] * (self.degree - 2))

    def mul(self, a: Sequence[Fraction], b: Sequence[Fraction]) -> Vec:
        n = self.degree
        out = [F0] * n
        for i in range(n):
            ai = a[i]
            if not ai:
                continue
            for j in range(n):
                bj = b[j]
                if not bj:
                    continue
                prod = self._power_table[i + j]
                c = ai * bj
                for k in range(n):
                    if prod[k]:
                        out[k] += c * prod[k]
        return tuple(out)

    def power_product(self, i: int, j: int) -> Vec:
        """theta^i * theta^j reduced to the power basis."""
        return self._power_table[i + j]

    def mul_matrix(self, a: Sequence[Fraction]) -> Mat:
        """Matrix of multiplication by a (columns are a * theta^j)."""
        n = self.degree
        cols = [self.mul(a, _unit(n, j)) for j in range(n)]
        return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))

    def field_norm(self, a: Sequence[Fraction]) -> Fraction:
        return det(self.mul_matrix(a))

    def inverse(self, a: Sequence[Fraction]) -> Vec:
        sol = solve(self.mul_matrix(a), self.one())
        if sol is None:
            raise ZeroDivisionError("element is not invertible")
        return sol

    # -- Galois group --

    @property
    def group_order(self) -> int:
        return len(self.galois)

    def apply(self, sigma_index: int, a: Sequence[Fraction]) -> Vec:
        if not 0 <= sigma_index < len(self.galois):
            raise IndexOutOfRange(f"automorphism index {sigma_index} of {len(self.galois)}")
        return mat_vec(self.galois[sigma_index], a)

    def composition_table(self) -> tuple[tuple[int, ...], ...]:
        """comp[i][j] = index of sigma_i o sigma_j."""
        if self._comp_table is None:
            index = {g: k for k, g in enumerate(self.galois)}
            table = []
            for gi in self.galois:
                row = []
                for gj in self.galois:
                    from .linalg import mat_mul

                    row.append(index[mat_mul(gi, gj)])
                table.append(tuple(row))
            self._comp_table = tuple(table)
        return self._comp_table

    def inverse_index(self, i: int) -> int:
        comp = self.composition_table()
        return comp[i].index(0)

    # -- norms on L --

    def element_norm(self, a: Sequence[Fraction]) -> NormValue:
        """The chosen norm of a (weighted l1 in arch, sup in padic)."""
        terms = [self.norm_weights[i] * self.base.abs(a[i]) for i in range(self.degree)]
        if self.base.is_padic or self.norm_flavor == "max":
            return nv_max(terms, self.base)
        return nv_sum(terms, self.base)

    def element_abs(self, a: Sequence[Fraction]) -> NormValue:
        """Galois-invariant absolute value of a in L.

        padic (unramified): |N(a)|^(1/n), exact.  arch: max modulus over
        all conjugates, as a refinable interval enclosure.
        """
        if self.base.is_padic:
            nrm = self.field_norm(a)
            if nrm == 0:
                return PadicNorm.zero(self.base.prime)
            v = Fraction(padic_valuation(nrm, self.base.prime), self.degree)
            return PadicNorm(self.base.prime, F1, -v)
        if all(x == 0 for x in a[1:]):
            return ArchNorm.exact(abs(a[0]))
        coeffs = tuple(a)

        def bounds(bits: int) -> tuple[Fraction, Fraction]:
            enclosures = self._roots(bits)
            lo = hi = None
            for re, im, rad in enclosures:
                vre, vim = _poly_eval_complex(coeffs, re, im)
                v_lo, v_hi = _cabs_bounds(vre, vim)
                err = _conjugate_error_bound(coeffs, re, im, rad)
                clo, chi = max(v_lo - err, F0), v_hi + err
                lo = clo if lo is None else max(lo, clo)
                hi = chi if hi is None else max(hi, chi)
            return lo, hi

        lo, hi = bounds(128)
        return ArchNorm(lo, hi, bounds)

    def _roots(self, bits: int):
        key = max(bits, 128)
        if key not in self._root_cache:
            self._root_cache[key] = root_enclosures(self.minpoly, key)
        return self._root_cache[key]

    def __repr__(self):
        return f"FieldExtension({self.name}, degree={self.degree}, |Gamma|={len(self.galois)}, {self.base.backend})"


def _unit(n: int, j: int) -> Vec:
    return tuple(F1 if k == j else F0 for k in range(n))


def _power_table(minpoly: Sequence[Fraction]) -> tuple[Vec, ...]:
    """theta^m reduced mod the minimal polynomial, for m up to 2n-2."""
    n = len(minpoly) - 1
    if n == 0:
        raise ValueError("constant minimal polynomial")
    table = [_unit(n, m) for m in range(n)]
    if n == 1:
        root = -frac(minpoly[0])
        return tuple([(F1,)] + [(root ** m,) for m in range(1, 2 * n)])
    for m in range(n, 2 * n - 1):
        prev = table[m - 1]
        shifted = [F0] + [frac(x) for x in prev[:-1]]
        top = prev[-1]
        if top:
            for k in range(n):
                shifted[k] -= top * frac(minpoly[k])
        table.append(tuple(shifted))
    return tuple(table)


def _conjugate_error_bound(coeffs: Sequence[Fraction], re: Fraction, im: Fraction, rad: Fraction) -> Fraction:
    """|g(z) - g(z0)| <= sup |g'| on the disk * rad, with a crude sup bound."""
    mod_hi = _cabs_bounds(re, im)[1] + rad
    bound = F0
    power = F1
    for i in range(1, len(coeffs)):
        bound += i * abs(coeffs[i]) * power
        power *= mod_hi
    return bound * rad


def _rational_roots(coeffs: Sequence[Fraction]) -> list[Fraction]:
    """Rational root test for a polynomial with integer coefficients."""
    ints = [int(c) for c in coeffs]
    while ints and ints[-1] == 0:
        ints.pop()
    lead, const = ints[-1], ints[0]
    if const == 0:
        return [F0]
    roots = []

    def divisors(m):
        m = abs(m)
        return [d for d in range(1, m + 1) if m % d == 0]

    for p in divisors(const):
        for q in divisors(lead):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                val = F0
                for c in reversed(ints):
                    val = val * cand + c
                if val == 0 and cand not in roots:
                    roots.append(cand)
    return roots


def _is_irreducible(coeffs: Sequence[Fraction]) -> bool:
    n = len(coeffs) - 1
    if n == 1:
        return True
    if _rational_roots(coeffs):
        return False
    if n <= 3:
        return True
    # Degree-pattern sieves mod p cannot certify fields like Q(sqrt2, sqrt3),
    # so fall back to a full factorization over Q.
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.Poly([int(c) for c in reversed(coeffs)], x, domain="QQ")
    return poly.is_irreducible


def build_extension(
    base: ValuedField,
    minpoly: Sequence,
    galois_generators: Sequence[Sequence],
    name: str = "",
) -> FieldExtension:
    """Construct L/K from a monic minimal polynomial and generator images.

    Verifies irreducibility, that each generator image is a root of the
    minimal polynomial (hence induces an automorphism), and that the
    generated group has order exactly [L:K].  Assigns the extension norm:
    all-ones sup weights over the power basis in the unramified padic case,
    minimal power-of-two l1 weights (submultiplicative) in the arch case.
    """
    coeffs = vec(minpoly)
    n = len(coeffs) - 1
    if n < 1:
        raise ValueError("minimal polynomial must have degree >= 1")
    if n > DEGREE_CAP:
        raise CapExceeded(f"degree {n} exceeds cap {DEGREE_CAP}")
    if coeffs[-1] != 1:
        raise ValueError("minimal polynomial must be monic")
    if any(c.denominator != 1 for c in coeffs):
        raise ValueError("minimal polynomial must have integer coefficients")
    if not _is_irreducible(coeffs):
        raise NotIrreducible(f"{[str(c) for c in coeffs]} factors over Q")

    table = _power_table(coeffs)

    def reduce_power(poly_vec: Sequence[Fraction], power: int) -> Vec:
        # poly_vec**power via repeated table multiplication
        out = _unit(n, 0)
        for _ in range(power):
            acc = [F0] * n
            for i in range(n):
                if not out[i]:
                    continue
                for j in range(n):
                    if not poly_vec[j]:
                        continue
                    prod = table[i + j]
                    c = out[i] * poly_vec[j]
                    for k in range(n):
                        if prod[k]:
                            acc[k] += c * prod[k]
            out = tuple(acc)
        return out

    def automorphism_matrix(image: Vec) -> Mat:
        cols = [reduce_power(image, j) for j in range(n)]
        return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))

    def poly_at(image: Vec) -> Vec:
        val = [F0] * n
        power = _unit(n, 0)
        for c in coeffs:
            if c:
                for k in range(n):
                    val[k] += c * power[k]
            acc = [F0] * n
            for i in range(n):
                if not power[i]:
                    continue
                for j in range(n):
                    if not image[j]:
                        continue
                    prod = table[i + j]
                    cc = power[i] * image[j]
                    for k in range(n):
                        if prod[k]:
                            acc[k] += cc * prod[k]
            power = tuple(acc)
        return tuple(val)

    gens = []
    for raw in galois_generators:
        image = vec(raw)
        if len(image) != n:
            raise NotAutomorphism(f"generator image has length {len(image)}, expected {n}")
        if any(poly_at(image)):
            raise NotAutomorphism(f"image {[str(x) for x in image]} is not a root of the minimal polynomial")
        m = automorphism_matrix(image)
        if det(m) == 0:
            raise NotAutomorphism("generator matrix is singular")
        gens.append(m)

    ident = tuple(tuple(F1 if i == j else F0 for j in range(n)) for i in range(n))
    group = {ident}
    frontier = [ident]
    from .linalg import mat_mul

    while frontier:
        cur = frontier.pop()
        for g in gens:
            nxt = mat_mul(g, cur)
            if nxt not in group:
                if len(group) >= 2 * DEGREE_CAP:
                    raise GroupOrderMismatch("generated group exceeds the order cap")
                group.add(nxt)
                frontier.append(nxt)
    if len(group) != n:
        raise GroupOrderMismatch(f"|Gamma| = {len(group)} but [L:K] = {n}: presentation is not Galois")
    galois = (ident,) + tuple(sorted(g for g in group if g != ident))

    if base.is_padic:
        p = base.prime
        if not _poly_irreducible_mod_p(coeffs, p):
            raise NotUnramified(f"minimal polynomial is reducible mod {p}; only unramified padic extensions are supported")
        weights = tuple(base.one_norm() for _ in range(n))
        flavor = "max"
    else:
        weights, flavor = _arch_power_weights(table, n), "sum"

    return FieldExtension(base, coeffs, galois, flavor, weights, name=name)


def _poly_irreducible_mod_p(coeffs: Sequence[Fraction], p: int) -> bool:
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.Poly([int(c) % p for c in reversed(coeffs)], x, modulus=p)
    return sympy.Poly(poly, x, modulus=p).is_irreducible


def _arch_power_weights(table: Sequence[Vec], n: int) -> tuple[ArchNorm, ...]:
    """Smallest power-of-two w with ||theta^(i+j)|| <= w^(i+j) for all pairs."""
    w = F1
    for _ in range(64):
        ok = True
        for m in range(n, 2 * n - 1):
            lhs = sum(abs(table[m][k]) * w**k for k in range(n))
            if lhs > w**m:
                ok = False
                break
        if ok:
            return tuple(ArchNorm.exact(w**i) for i in range(n))
        w *= 2
    raise CapExceeded("no submultiplicative power weight found")  # unreachable at cap 8


def abs_value(field: ValuedField, x) -> NormValue:
    """|x| of a rational x in the given backend."""
    return field.abs(x)


def apply_galois(ext: FieldExtension, sigma_index: int, element: Sequence) -> Vec:
    return ext.apply(sigma_index, vec(element))
