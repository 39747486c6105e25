"""The H-function of an L-space link from Alexander data, and its validation.

For a link with all pairwise linking numbers zero the H-function at a lattice
point s is an alternating sum over nonempty sublinks: each sublink contributes
the sum of its HFL^- Euler characteristics over the upper orthant based at the
corresponding coordinates of s+1.  The Euler characteristics are the
coefficients of the half-shifted Alexander polynomial (multi-component
sublinks) or of the torsion-coefficient series Delta(t)/(1-t^{-1}) (knot
sublinks).

The overall sign of a multi-component Alexander polynomial is not pinned down
by symmetry alone; it is resolved here, bottom-up over sublinks, by requiring
the resulting H-function to be valid (nonnegative, unit steps, stabilizing).

h(s) = H(s) - H_O(s), where H_O is the H-function of the unlink.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Optional, Sequence

from .errors import (LSpaceAssertionError, SignResolutionError,
                     StabilizationError, ValidationError)
from .laurent import KnotChiSeries, LaurentPoly
from .linkcat import LinkDescriptor, all_subsets, require_valid

Point = tuple


def tilde_alexander(d: LinkDescriptor, B):
    """The Euler-characteristic generating object for the sublink indexed by B.

    For two or more components: the Alexander polynomial multiplied by
    (t_1 ... t_k)^{1/2}, which must land on the integer lattice (this is the
    zero-linking parity); for a single component: the torsion-coefficient
    series of the knot polynomial.
    """
    B = tuple(sorted(B))
    delta = d.delta(B)
    if len(B) == 1:
        return KnotChiSeries(delta)
    shifted = delta.shift((1,) * len(B))
    _check_integral(shifted)
    return shifted


def _check_integral(shifted: LaurentPoly) -> None:
    if any(e % 2 for exp in shifted.terms for e in exp):
        raise ValidationError(
            "non-integral exponents after the half shift; polynomial parity is "
            "inconsistent with zero linking numbers")


def _chi_support(delta: LaurentPoly) -> dict:
    """Integer-lattice coefficient map of the half-shifted polynomial."""
    shifted = delta.shift((1,) * delta.nvars)
    _check_integral(shifted)
    return {tuple(e // 2 for e in exp): c for exp, c in shifted.terms.items()}


def chi(d: LinkDescriptor, B, u) -> int:
    """Coefficient chi(HFL^-(L_B, u)) read off the stored polynomial data."""
    B = tuple(sorted(B))
    acc = tilde_alexander(d, B)
    if isinstance(acc, KnotChiSeries):
        return acc.coeff(u if isinstance(u, int) else u[0])
    return acc.coeff(tuple(u))


def _support_radius(acc) -> int:
    if isinstance(acc, KnotChiSeries):
        if not acc.poly.terms:
            return 0
        return max(abs(e) // 2 for (e,) in acc.poly.terms)
    if not acc:
        return 0
    return max(abs(x) for exp in acc for x in exp)


def _ray_sum(acc, v) -> int:
    """Sum of chi over the upper orthant based at v."""
    if isinstance(acc, KnotChiSeries):
        return acc.ray_sum(v[0])
    return sum(c for exp, c in acc.items() if all(e >= w for e, w in zip(exp, v)))


class HTable:
    """Memoized H-function of a link descriptor over a lattice box [-M, M]^n.

    The box bounds only the validation sweeps and region extraction; H itself
    is a closed-form alternating sum and can be evaluated at any lattice point.
    The box grows on demand (ensure_box) and revalidates lazily.
    """

    def __init__(self, link: LinkDescriptor, genus_margin: int = 0,
                 box: Optional[int] = None, force: bool = False,
                 sign_overrides: Optional[dict] = None):
        require_valid(link)
        if not link.lspace_asserted and not force:
            raise LSpaceAssertionError(
                f"{link.name}: the L-space property is not asserted; the H-function "
                f"formula presupposes it (pass force=True to compute anyway)")
        self.link = link
        self.n = link.n
        self._memo: dict = {}
        self._h_positive_cache: dict = {}
        self._validated_radius = -1
        self._problems: list = []

        if link.is_atomic:
            self._parts = None
            self._signs, self._chi = self._resolve_signs(sign_overrides)
        else:
            if sign_overrides:
                raise ValueError("sign overrides are only supported on atomic descriptors")
            self._parts = [HTable(p, genus_margin=genus_margin, force=force)
                           for p in link.parts]
            self._chi = None
            self._signs = {}
            for part, (lo, _) in zip(self._parts, link._part_ranges()):
                for B, s in part._signs.items():
                    self._signs[tuple(i + lo for i in B)] = s

        self.support_radius = self._compute_support_radius()
        auto = self.support_radius + genus_margin + 2
        if box is not None and box < auto:
            raise StabilizationError(
                f"requested box {box} is below the auto-computed minimum {auto}")
        self.M = max(auto, box or 0)

    # -- construction helpers ------------------------------------------------

    def _compute_support_radius(self) -> int:
        if self._parts is not None:
            return max(p.support_radius for p in self._parts)
        return max(_support_radius(acc) for acc in self._chi.values())

    def _resolve_signs(self, overrides):
        signs: dict = {}
        chi_acc: dict = {}
        for B in all_subsets(self.n):
            delta = self.link.delta(B)
            if len(B) == 1:
                signs[B] = 1
                chi_acc[B] = KnotChiSeries(delta)
                continue
            if delta.is_zero():
                signs[B] = 1
                chi_acc[B] = {}
                continue
            support = _chi_support(delta)
            if overrides is not None and B in overrides:
                sigma = overrides[B]
                signs[B] = sigma
                chi_acc[B] = {e: sigma * c for e, c in support.items()}
                continue
            chosen = None
            for sigma in (1, -1):  # prefer the stored sign
                candidate = dict(chi_acc)
                candidate[B] = {e: sigma * c for e, c in support.items()}
                if not self._subset_problems(B, candidate):
                    chosen = sigma
                    break
            if chosen is None:
                raise SignResolutionError(
                    f"{self.link.name}: neither sign of the polynomial for subset "
                    f"{tuple(i + 1 for i in B)} yields a valid H-function; "
                    f"not an L-space link with this data")
            signs[B] = chosen
            chi_acc[B] = {e: chosen * c for e, c in support.items()}
        return signs, chi_acc

    def _subset_problems(self, B, accessors) -> list:
        """Validity sweep for the sublink indexed by B with candidate accessors."""
        subsets = [tuple(B[i] for i in idx)
                   for size in range(1, len(B) + 1)
                   for idx in combinations(range(len(B)), size)]
        radius = max(_support_radius(accessors[C]) for C in subsets) + 2
        memo: dict = {}
        k = len(B)
        problems = []
        for s in product(range(-radius, radius + 1), repeat=k):
            v = self._eval_subset(B, s, accessors, memo)
            if v < 0:
                problems.append(f"H{s} = {v} < 0")
                return problems
            for i in range(k):
                if s[i] > -radius:
                    down = self._eval_subset(B, s[:i] + (s[i] - 1,) + s[i + 1:],
                                             accessors, memo)
                    if down - v not in (0, 1):
                        problems.append(f"step law fails at {s} in direction {i + 1}")
                        return problems
            if all(x >= radius - 1 for x in s) and v != 0:
                problems.append(f"H{s} = {v} at the top corner, expected 0")
                return problems
        return problems

    @staticmethod
    def _eval_subset(B, s, accessors, memo):
        """H of the sublink B at point s (coordinates aligned with sorted B)."""
        key = (B, s)
        if key in memo:
            return memo[key]
        total = 0
        k = len(B)
        for size in range(1, k + 1):
            sign = 1 if size % 2 else -1
            for idx in combinations(range(k), size):
                C = tuple(B[i] for i in idx)
                v = tuple(s[i] + 1 for i in idx)
                total += sign * _ray_sum(accessors[C], v)
        memo[key] = total
        return total

    # -- evaluation ------------------------------------------------------------

    def H(self, s: Sequence[int]) -> int:
        """H-function at any lattice point (memoized)."""
        s = tuple(s)
        if len(s) != self.n:
            raise ValueError(f"point {s} has wrong dimension, expected {self.n}")
        if self._parts is None:
            return self._eval_subset(tuple(range(self.n)), s, self._chi, self._memo)
        if s in self._memo:
            return self._memo[s]
        value = 0
        lo = 0
        for part in self._parts:
            value += part.H(s[lo:lo + part.n])
            lo += part.n
        self._memo[s] = value
        return value

    def h(self, s: Sequence[int]) -> int:
        s = tuple(s)
        return self.H(s) - sum((abs(x) - x) // 2 for x in s)

    def chi(self, B, u) -> int:
        """chi(HFL^-(L_B, u)) with the resolved sign."""
        B = tuple(sorted(B))
        u = (u,) if isinstance(u, int) else tuple(u)
        if self._parts is None:
            acc = self._chi[B]
            if isinstance(acc, KnotChiSeries):
                return acc.coeff(u[0])
            return acc.get(u, 0)
        for part, (lo, hi) in zip(self._parts, self.link._part_ranges()):
            if lo <= B[0] and B[-1] < hi:
                return part.chi(tuple(i - lo for i in B), u)
        return 0  # subset crosses parts: split sublink, vanishing chi

    def chi_from_H(self, s: Sequence[int]) -> int:
        """Inclusion-exclusion of H over the unit cube below s.

        Reproduces chi(HFL^-) of the whole link at s; the roundtrip against the
        polynomial coefficients is a standing consistency check.
        """
        s = tuple(s)
        total = 0
        for size in range(self.n + 1):
            sign = -1 if size % 2 == 0 else 1
            for idx in combinations(range(self.n), size):
                p = tuple(x - 1 if i in idx else x for i, x in enumerate(s))
                total += sign * self.H(p)
        return total

    def H_minus(self, i: int, rest: Sequence[int]) -> int:
        """H of the sublink with component i deleted, at the projected point."""
        rest = tuple(rest)
        if self.n == 1:
            return 0
        if self._parts is None:
            B = tuple(j for j in range(self.n) if j != i)
            return self._eval_subset(B, rest, self._chi, self._memo)
        value = 0
        lo = 0
        pos = 0
        for part in self._parts:
            inside = lo <= i < lo + part.n
            take = part.n - (1 if inside else 0)
            chunk = rest[pos:pos + take]
            if inside:
                if part.n > 1:
                    value += part.H_minus(i - lo, chunk)
            else:
                value += part.H(chunk)
            lo += part.n
            pos += take
        return value

    # -- box management and validation -----------------------------------------

    def ensure_box(self, M: int) -> None:
        if M > self.M:
            self.M = M

    def iter_box(self, radius: Optional[int] = None):
        M = self.M if radius is None else radius
        return product(range(-M, M + 1), repeat=self.n)

    def validation_report(self) -> list:
        """Check the standing H-function laws over the current box; cached."""
        if self._validated_radius == self.M:
            return self._problems
        M = self.M
        problems = []
        for s in self.iter_box():
            v = self.H(s)
            if v < 0:
                problems.append(f"H{s} = {v} is negative")
                continue
            for i in range(self.n):
                if s[i] > -M:
                    down = self.H(s[:i] + (s[i] - 1,) + s[i + 1:])
                    if down - v not in (0, 1):
                        problems.append(
                            f"step law fails: H at {s} minus e_{i + 1} jumps by {down - v}")
            if all(x >= M - 1 for x in s) and v != 0:
                problems.append(f"H{s} = {v} on the top corner block, expected 0")
        problems.extend(self._stabilization_problems())
        self._problems = problems
        self._validated_radius = M
        return problems

    def _stabilization_problems(self) -> list:
        M = self.M
        problems = []
        for i in range(self.n):
            for rest in product(range(-M, M + 1), repeat=self.n - 1):
                top = rest[:i] + (M,) + rest[i:]
                below = rest[:i] + (M - 1,) + rest[i:]
                if self.H(top) != self.H(below):
                    problems.append(
                        f"H not constant across the top shells in direction {i + 1} at {rest}")
                    continue
                if self.H(top) != self.H_minus(i, rest):
                    problems.append(
                        f"H at the top edge in direction {i + 1} disagrees with the "
                        f"component-deleted sublink at {rest}")
                bot = rest[:i] + (-M,) + rest[i:]
                above = rest[:i] + (-M + 1,) + rest[i:]
                if self.h(bot) != self.h(above):
                    problems.append(
                        f"h not constant across the bottom shells in direction {i + 1} at {rest}")
        return problems

    def require_valid(self) -> None:
        problems = self.validation_report()
        if problems:
            raise StabilizationError(
                f"{self.link.name}: H-function fails validation on box "
                f"[-{self.M}, {self.M}]^{self.n}: " + "; ".join(problems[:5]))

    @property
    def sign_resolution(self) -> dict:
        """Chosen sign per sublink subset (1-based keys), +1 = as stored."""
        return {tuple(i + 1 for i in B): s for B, s in sorted(self._signs.items())}

    def flipped_signs(self) -> list:
        """1-based subsets whose stored polynomial sign had to be flipped."""
        return [B for B, s in sorted(self.sign_resolution.items()) if s == -1]

    # -- sweeps used by regions and bounds ---------------------------------------

    def h_positive(self, radius: Optional[int] = None):
        """All (point, h) with h > 0 in the box of the given radius."""
        M = self.M if radius is None else radius
        self.ensure_box(M)
        if M not in self._h_positive_cache:
            self._h_positive_cache[M] = [
                (s, hv) for s in self.iter_box(M) if (hv := self.h(s)) > 0]
        return self._h_positive_cache[M]

    def max_h(self) -> int:
        return max((hv for _, hv in self.h_positive()), default=0)

    def fill(self, jobs: int = 1) -> None:
        """Materialize H over the whole box, optionally splitting across threads.

        Evaluation is pure, so concurrent fills are safe; racing memo writes
        store identical values.
        """
        points = list(self.iter_box())
        if jobs <= 1:
            for s in points:
                self.H(s)
            return
        from concurrent.futures import ThreadPoolExecutor
        chunk = (len(points) + jobs - 1) // jobs
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            for k in range(jobs):
                pool.submit(lambda ps: [self.H(p) for p in ps],
                            points[k * chunk:(k + 1) * chunk])


def _table_cache():
    cache: dict = {}

    def table_for(d: LinkDescriptor) -> HTable:
        if d not in cache:
            cache[d] = HTable(d)
        return cache[d]

    return table_for


table_for = _table_cache()


def H_value(d: LinkDescriptor, s) -> int:
    return table_for(d).H(s)


def h_value(d: LinkDescriptor, s) -> int:
    return table_for(d).h(s)


def chi_from_H(d: LinkDescriptor, s) -> int:
    return table_for(d).chi_from_H(s)


def validate_H(d: LinkDescriptor, box: Optional[int] = None,
               force: bool = False) -> list:
    """Report-style validator of the H-function laws (empty list = valid)."""
    table = HTable(d, box=box, force=force)
    return table.validation_report()
