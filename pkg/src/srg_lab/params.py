# -*- coding: utf-8 -*-
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import isqrt
from typing import Dict, List, Optional, Tuple

import sympy

# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Errors
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

class InfeasibleParamsError(ValueError):
    pass


class IdentityViolationError(ValueError):
    pass


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Types
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

@dataclass(frozen=True)
class SrgParams:
    n: int
    k: int
    lam: int
    mu: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"order must be positive: {self.n}")
        if not 0 <= self.k < self.n:
            raise ValueError(f"valency out of range: k={self.k}, n={self.n}")
        if not 0 <= self.lam <= max(self.k - 1, 0):
            raise ValueError(f"lambda out of range: {self.lam} (k: {self.k})")
        if not 0 <= self.mu <= self.k:
            raise ValueError(f"mu out of range: {self.mu} (k: {self.k})")

    @property
    def is_complete(self) -> bool:
        return self.n == self.k + 1

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return self.n, self.k, self.lam, self.mu

    def __str__(self) -> str:
        return f"srg({self.n},{self.k},{self.lam},{self.mu})"


@dataclass(frozen=True)
class Spectrum:
    """Non-principal eigenvalues r > s with multiplicities f, g (sympy exact values)."""
    r: sympy.Expr
    s: sympy.Expr
    f: sympy.Expr
    g: sympy.Expr
    discriminant: int
    numerator: int
    integral: bool

    def to_dict(self) -> Dict[str, object]:
        return {"r": str(self.r), "s": str(self.s), "f": str(self.f), "g": str(self.g),
                "discriminant": self.discriminant, "integral": self.integral}


class FeasibilityReason(str, Enum):
    OK = "ok"
    NON_SQUARE_DISCRIMINANT = "non_square_discriminant_with_nonzero_numerator"
    ZERO_DISCRIMINANT = "zero_discriminant_with_nonzero_numerator"
    NON_INTEGER_MULTIPLICITY = "non_integer_multiplicity"
    IDENTITY_VIOLATION = "identity_violation"


@dataclass(frozen=True)
class FeasibilityVerdict:
    params: SrgParams
    passes_integrality: bool
    reason: FeasibilityReason

    def to_dict(self) -> Dict[str, object]:
        return {"k": self.params.k, "n": self.params.n,
                "pass": self.passes_integrality, "reason": self.reason.value}


@dataclass(frozen=True)
class ExpectedCounts:
    triangles: int
    triangles_per_vertex: int
    partition: Optional[Tuple[int, int, int, int]]


@dataclass(frozen=True)
class TriangleBookkeeping:
    total: int
    through_anchor: int
    w_apex: int
    remaining: int


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Identity
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

def family_order(k: int, lam: int = 1, mu: int = 2) -> int:
    """Order n solving k(k-λ-1) = (n-k-1)μ; defaults to the λ=1, μ=2 family."""
    if k < lam + 1 or mu < 1:
        raise InfeasibleParamsError(f"no family member for k={k} (lambda: {lam}, mu: {mu})")
    top = k * (k - lam - 1)
    if top % mu:
        raise InfeasibleParamsError(f"k(k-lambda-1) not divisible by mu: k={k}, mu={mu}")
    return top // mu + k + 1


def check_identity(p: SrgParams) -> bool:
    return p.is_complete or p.k * (p.k - p.lam - 1) == (p.n - p.k - 1) * p.mu


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Spectrum
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

def _multiplicity_check(p: SrgParams) -> Tuple[int, int, FeasibilityReason]:
    d = (p.lam - p.mu) ** 2 + 4 * (p.k - p.mu)
    num = 2 * p.k + (p.n - 1) * (p.lam - p.mu)
    root = isqrt(d)

    if root * root == d and root > 0:
        if num % root:
            return d, num, FeasibilityReason.NON_INTEGER_MULTIPLICITY
        q = num // root
        twice_f, twice_g = (p.n - 1) - q, (p.n - 1) + q
    elif num == 0:
        # conference case: f = g = (n - 1) / 2 regardless of D
        twice_f = twice_g = p.n - 1
    elif d == 0:
        return d, num, FeasibilityReason.ZERO_DISCRIMINANT
    else:
        return d, num, FeasibilityReason.NON_SQUARE_DISCRIMINANT

    if twice_f % 2 or twice_g % 2 or twice_f < 0 or twice_g < 0:
        return d, num, FeasibilityReason.NON_INTEGER_MULTIPLICITY
    return d, num, FeasibilityReason.OK


def spectrum_of(p: SrgParams) -> Spectrum:
    if not check_identity(p):
        raise IdentityViolationError(f"parameter identity fails for {p}")

    d, num, reason = _multiplicity_check(p)
    sqrt_d = sympy.sqrt(d)
    half = sympy.Rational(1, 2)
    r = half * (p.lam - p.mu + sqrt_d)
    s = half * (p.lam - p.mu - sqrt_d)
    if d == 0:
        f = g = half * (p.n - 1)
    else:
        f = half * (p.n - 1 - num / sqrt_d)
        g = half * (p.n - 1 + num / sqrt_d)
    return Spectrum(r=r, s=s,
                    f=sympy.radsimp(f), g=sympy.radsimp(g),
                    discriminant=d, numerator=num,
                    integral=reason is FeasibilityReason.OK)


def integrality_test(p: SrgParams) -> FeasibilityVerdict:
    if not check_identity(p):
        return FeasibilityVerdict(p, False, FeasibilityReason.IDENTITY_VIOLATION)
    _, _, reason = _multiplicity_check(p)
    return FeasibilityVerdict(p, reason is FeasibilityReason.OK, reason)


def enumerate_family(lam: int, mu: int, k_max: int) -> List[FeasibilityVerdict]:
    if mu < 1:
        raise InfeasibleParamsError(f"family enumeration needs mu >= 1: {mu}")
    verdicts: List[FeasibilityVerdict] = []
    for k in range(max(lam + 1, mu, 1), k_max + 1):
        if k * (k - lam - 1) % mu:
            continue
        p = SrgParams(family_order(k, lam, mu), k, lam, mu)
        verdicts.append(integrality_test(p))
    return verdicts


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Counting
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

def expected_counts(p: SrgParams) -> ExpectedCounts:
    if (p.n * p.k * p.lam) % 6:
        raise InfeasibleParamsError(f"nk*lambda not divisible by 6: {p}")
    if (p.k * p.lam) % 2:
        raise InfeasibleParamsError(f"k*lambda is odd: {p}")

    partition = None
    if p.lam == 1:
        side = p.k - 2
        partition = (side, side, side, p.n - 3 - 3 * side)
    return ExpectedCounts(triangles=p.n * p.k * p.lam // 6,
                          triangles_per_vertex=p.k * p.lam // 2,
                          partition=partition)


def anchor_triangle_count(p: SrgParams) -> int:
    if p.lam != 1:
        raise InfeasibleParamsError(f"anchor triangle count needs lambda = 1: {p}")
    return 3 * (p.k * p.lam // 2) - 2


def triangle_bookkeeping(p: SrgParams) -> TriangleBookkeeping:
    """Split the triangle total into anchor, W-apex and remaining (inside A∪B∪C) parts."""
    counts = expected_counts(p)
    if counts.partition is None:
        raise InfeasibleParamsError(f"bookkeeping needs lambda = 1: {p}")
    through_anchor = anchor_triangle_count(p)
    w_apex = counts.partition[3] * counts.triangles_per_vertex
    return TriangleBookkeeping(total=counts.triangles,
                               through_anchor=through_anchor,
                               w_apex=w_apex,
                               remaining=counts.triangles - through_anchor - w_apex)


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Known Members (λ=1, μ=2)
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

_KNOWN_STATUS = {2: "exists", 4: "exists", 6: "nonexistent", 22: "exists"}


def family_status(verdict: FeasibilityVerdict) -> str:
    p = verdict.params
    if (p.lam, p.mu) != (1, 2):
        return "-"
    if p.k in _KNOWN_STATUS:
        return _KNOWN_STATUS[p.k]
    return "open" if verdict.passes_integrality else "excluded"
