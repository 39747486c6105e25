"""Exact multivariate Laurent polynomials on the half-integer exponent lattice.

Exponents live in (1/2)Z^n and are stored *doubled* (multiplied by 2), so every
exponent is a plain Python int and all arithmetic stays in Z.  Coefficients are
arbitrary-precision ints.  A polynomial is a finite map

    doubled exponent tuple  ->  nonzero int coefficient

and the zero polynomial is the empty map.  Everything here is immutable after
construction and safe to share.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

from .errors import ExactDivisionError, SymmetryError

Exp = tuple  # doubled exponent tuple, one int per variable


def double_exponent(e) -> int:
    """Convert an exponent given as int or half-integer Fraction to doubled form."""
    if isinstance(e, int):
        return 2 * e
    f = Fraction(e)
    d = f * 2
    if d.denominator != 1:
        raise ValueError(f"exponent {e} is not a half-integer")
    return int(d)


def halve_exponent(d: int) -> Fraction:
    """Inverse of double_exponent."""
    return Fraction(d, 2)


class LaurentPoly:
    """An integer-coefficient Laurent polynomial in ``nvars`` variables.

    ``terms`` maps doubled exponent tuples to nonzero coefficients.  Use
    :meth:`from_terms` to build one from half-integer exponents.

    >>> t = LaurentPoly.from_terms(1, [(1, (1,)), (-1, (0,)), (1, (-1,))])
    >>> t
    LaurentPoly(1, 't - 1 + t^-1')
    >>> t * t == LaurentPoly.from_terms(1, [(1, (2,)), (-2, (1,)), (3, (0,)),
    ...                                     (-2, (-1,)), (1, (-2,))])
    True
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exp, int]):
        clean = {}
        for exp, coef in terms.items():
            if not isinstance(coef, int):
                raise TypeError(f"coefficients must be ints, got {coef!r}")
            if coef == 0:
                continue
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has wrong arity for nvars={nvars}")
            if not all(isinstance(e, int) for e in exp):
                raise TypeError(f"doubled exponents must be ints, got {exp!r}")
            clean[exp] = coef
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, {})

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, nvars: int, coef: int, exps: Sequence) -> "LaurentPoly":
        """Single term; ``exps`` entries may be ints or half-integer Fractions."""
        return cls(nvars, {tuple(double_exponent(e) for e in exps): coef})

    @classmethod
    def from_terms(cls, nvars: int, terms: Iterable) -> "LaurentPoly":
        """Build from (coef, exponent tuple) pairs with half-integer exponents."""
        acc: dict = {}
        for coef, exps in terms:
            key = tuple(double_exponent(e) for e in exps)
            acc[key] = acc.get(key, 0) + coef
        return cls(nvars, acc)

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exps: Sequence) -> int:
        """Coefficient at a half-integer exponent vector (0 if absent)."""
        return self.terms.get(tuple(double_exponent(e) for e in exps), 0)

    def coeff_doubled(self, dexp: Exp) -> int:
        return self.terms.get(tuple(dexp), 0)

    def evaluate_at_one(self) -> int:
        return sum(self.terms.values())

    def sorted_terms(self):
        """Terms as (doubled exponent, coef), sorted for deterministic output."""
        return sorted(self.terms.items())

    # -- ring operations -----------------------------------------------------

    def _check_compatible(self, other: "LaurentPoly"):
        if not isinstance(other, LaurentPoly):
            raise TypeError(f"expected LaurentPoly, got {type(other).__name__}")
        if self.nvars != other.nvars:
            raise ValueError(f"variable-count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_compatible(other)
        acc = dict(self.terms)
        for exp, coef in other.terms.items():
            acc[exp] = acc.get(exp, 0) + coef
        return LaurentPoly(self.nvars, acc)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_compatible(other)
        acc = dict(self.terms)
        for exp, coef in other.terms.items():
            acc[exp] = acc.get(exp, 0) - coef
        return LaurentPoly(self.nvars, acc)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        self._check_compatible(other)
        acc: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                acc[key] = acc.get(key, 0) + c1 * c2
        return LaurentPoly(self.nvars, acc)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (isinstance(other, LaurentPoly)
                and self.nvars == other.nvars and self.terms == other.terms)

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(
                self, "_hash",
                hash((self.nvars, frozenset(self.terms.items()))))
        return self._hash

    def shift(self, dexp: Exp) -> "LaurentPoly":
        """Multiply by the monomial with doubled exponent ``dexp``."""
        return LaurentPoly(
            self.nvars,
            {tuple(a + b for a, b in zip(e, dexp)): c for e, c in self.terms.items()})

    # -- display -------------------------------------------------------------

    def __repr__(self) -> str:
        return f"LaurentPoly({self.nvars}, '{self}')"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        names = ["t"] if self.nvars == 1 else [f"t{i+1}" for i in range(self.nvars)]
        parts = []
        for exp, coef in sorted(self.terms.items(), reverse=True):
            factors = []
            for name, d in zip(names, exp):
                if d == 0:
                    continue
                e = halve_exponent(d)
                if e == 1:
                    factors.append(name)
                elif e.denominator == 1:
                    factors.append(f"{name}^{e.numerator}")
                else:
                    factors.append(f"{name}^({e})")
            mono = "*".join(factors)
            if not mono:
                body = str(abs(coef))
            elif abs(coef) == 1:
                body = mono
            else:
                body = f"{abs(coef)}*{mono}"
            sign = "-" if coef < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


# -- free functions ----------------------------------------------------------


def substitute_powers(f: LaurentPoly, powers: Sequence[int]) -> LaurentPoly:
    """Substitute t_i -> t_i^{p_i}; exponent vectors scale componentwise."""
    if len(powers) != f.nvars:
        raise ValueError("power vector has wrong arity")
    if any(p < 1 for p in powers):
        raise ValueError("powers must be positive")
    return LaurentPoly(
        f.nvars,
        {tuple(p * e for p, e in zip(powers, exp)): coef
         for exp, coef in f.terms.items()})


def geometric_cable_factor(p: int, q: int) -> LaurentPoly:
    """The one-variable factor (t^{pq/2} - t^{-pq/2}) / (t^{q/2} - t^{-q/2}).

    Returned in closed form as sum_{j=0}^{p-1} t^{q(p-1-2j)/2}, which multiplies
    back exactly against the denominator.
    """
    if p < 1 or q < 1:
        raise ValueError("cable parameters must be positive")
    if gcd(p, q) != 1:
        raise ValueError(f"cable parameters must be coprime, got ({p}, {q})")
    return LaurentPoly(1, {(q * (p - 1 - 2 * j),): 1 for j in range(p)})


def involution(f: LaurentPoly) -> LaurentPoly:
    """Invert every variable: exponent vector e -> -e."""
    return LaurentPoly(f.nvars, {tuple(-d for d in exp): c for exp, c in f.terms.items()})


def support_box(f: LaurentPoly):
    """Componentwise (min, max) exponent vectors over the support, as Fractions."""
    if f.is_zero():
        raise ValueError("zero polynomial has no support box")
    lo, hi = _support_box_doubled(f)
    return (tuple(halve_exponent(d) for d in lo), tuple(halve_exponent(d) for d in hi))


def _support_box_doubled(f: LaurentPoly):
    exps = list(f.terms)
    lo = tuple(min(e[i] for e in exps) for i in range(f.nvars))
    hi = tuple(max(e[i] for e in exps) for i in range(f.nvars))
    return lo, hi


def exact_div(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Return h with h*g == f exactly; raise ExactDivisionError otherwise.

    Iterated leading-term elimination under lexicographic exponent order.  In a
    domain both the leading and trailing monomials of a product are the products
    of the factors' leading/trailing monomials, so every quotient monomial lies
    in the componentwise box [min(f)-min(g), max(f)-max(g)]; leaving that box
    proves the division inexact, which also bounds the loop.
    """
    f._check_compatible(g)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return LaurentPoly.zero(f.nvars)
    flo, fhi = _support_box_doubled(f)
    glo, ghi = _support_box_doubled(g)
    qlo = tuple(a - b for a, b in zip(flo, glo))
    qhi = tuple(a - b for a, b in zip(fhi, ghi))

    lead_g = max(g.terms)
    cg = g.terms[lead_g]
    quotient: dict = {}
    rem = dict(f.terms)
    while rem:
        lead_r = max(rem)
        cr = rem[lead_r]
        u = tuple(a - b for a, b in zip(lead_r, lead_g))
        if any(x < lo or x > hi for x, lo, hi in zip(u, qlo, qhi)) or cr % cg != 0:
            raise ExactDivisionError(f"({f}) is not divisible by ({g})")
        c = cr // cg
        quotient[u] = c
        for eg, cg2 in g.terms.items():
            key = tuple(a + b for a, b in zip(u, eg))
            val = rem.get(key, 0) - c * cg2
            if val:
                rem[key] = val
            else:
                rem.pop(key, None)
    return LaurentPoly(f.nvars, quotient)


def symmetry_sign(nvars: int) -> int:
    """Target sign under variable inversion: +1 for knots, (-1)^n for links."""
    return 1 if nvars == 1 else (-1) ** nvars


def normalize_symmetric(f: LaurentPoly) -> LaurentPoly:
    """Recenter f by a unit monomial so that inverting all variables gives
    symmetry_sign(nvars) times the result.

    The overall sign is preserved for multivariable input (the valid choice is
    decided later by H-function validity); for one variable it is fixed by
    requiring the value 1 at t=1.  Raises SymmetryError when no unit multiple
    is symmetric.
    """
    if f.is_zero():
        raise SymmetryError("the zero polynomial cannot be normalized")
    lo, hi = _support_box_doubled(f)
    if any((a + b) % 2 for a, b in zip(lo, hi)):
        raise SymmetryError(f"no symmetric unit multiple of ({f}) on the half-integer lattice")
    shift = tuple(-(a + b) // 2 for a, b in zip(lo, hi))
    g = f.shift(shift)
    if involution(g) != symmetry_sign(f.nvars) * g:
        raise SymmetryError(f"no symmetric unit multiple of ({f})")
    if f.nvars == 1:
        v = g.evaluate_at_one()
        if v == -1:
            g = -g
        elif v != 1:
            raise SymmetryError(f"knot polynomial ({f}) cannot be normalized to value 1 at t=1")
    return g


class KnotChiSeries:
    """Coefficients of Delta(t)/(1 - t^{-1}) for a one-variable symmetric Delta.

    The quotient is the series Delta(t) * (1 + t^-1 + t^-2 + ...), whose
    coefficient at degree d is the tail sum of Delta's coefficients at degrees
    >= d.  Coefficients vanish above the top degree of Delta; nothing below a
    queried degree is ever materialized.
    """

    def __init__(self, poly: LaurentPoly):
        if poly.nvars != 1:
            raise ValueError("KnotChiSeries needs a one-variable polynomial")
        if any(d % 2 for (d,) in poly.terms):
            raise ValueError("knot polynomial must have integer exponents")
        self.poly = poly
        # coefficient list of Delta indexed by integer degree
        self._coeffs = {d // 2: c for (d,), c in poly.terms.items()}
        self._degrees = sorted(self._coeffs, reverse=True)
        self._cache: dict = {}

    @property
    def top_degree(self) -> int:
        return self._degrees[0] if self._degrees else 0

    def coeff(self, d: int) -> int:
        """Series coefficient at degree d: sum of Delta coefficients at >= d."""
        if d not in self._cache:
            self._cache[d] = sum(c for w, c in self._coeffs.items() if w >= d)
        return self._cache[d]

    def ray_sum(self, v: int) -> int:
        """Sum of series coefficients over all degrees u >= v.

        Equals sum_w a_w * (w - v + 1) over Delta terms with w >= v, which is
        finite even though the series itself extends to -infinity.
        """
        return sum(c * (w - v + 1) for w, c in self._coeffs.items() if w >= v)
