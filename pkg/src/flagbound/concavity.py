"""Attractiveness of roots, the invariant d_ma, and the closed-form bounds."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .domains import (
    DomainSpec,
    RootPartition,
    SUSpec,
    is_convex_degenerate,
    partition,
    require_valid,
)
from .roots import Root, roots_to_json


@dataclass(frozen=True)
class Attractiveness:
    """At(alpha) together with the gamma that completes each beta."""

    alpha: Root
    pairs: tuple[tuple[Root, Root], ...]

    @property
    def betas(self) -> tuple[Root, ...]:
        return tuple(b for b, _ in self.pairs)

    @property
    def gammas(self) -> tuple[Root, ...]:
        return tuple(g for _, g in self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


def attractiveness(alpha: Root, part: RootPartition) -> Attractiveness:
    if alpha not in part.phi:
        raise ValueError(f"{alpha} is not in Phi")
    pairs = []
    for beta in sorted(part.lambda_u_minus):
        gamma = alpha - beta
        if gamma in part.gamma:
            pairs.append((beta, gamma))
    return Attractiveness(alpha, tuple(pairs))


def d_ma(part: RootPartition) -> tuple[int, frozenset[Root]]:
    """Minimal attractiveness over Phi and the roots attaining it.

    Returns ``(0, Phi)`` when Phi or Lambda(u^-) is empty.
    """
    if not part.phi or not part.lambda_u_minus:
        return 0, part.phi
    sizes = {a: len(attractiveness(a, part)) for a in part.phi}
    low = min(sizes.values())
    return low, frozenset(a for a, s in sizes.items() if s == low)


def paper_bound(spec: DomainSpec) -> int:
    """The closed-form lower bound for each family, evaluated verbatim:
    min{r + p' - r', p - r + p'} for SU and min{n - p, n - q} for Sp."""
    require_valid(spec)
    if isinstance(spec, SUSpec):
        return min(spec.r + spec.p_prime - spec.r_prime, spec.p - spec.r + spec.p_prime)
    return min(spec.n - spec.p, spec.n - spec.q)


def spot_codims_su(spec: DomainSpec) -> tuple[int, int]:
    """Codimensions from the block picture for an upper and a lower spot.

    An upper spot kills a row of A (length r) and a column of B (length
    p' - r'); a lower spot kills a column of A (length p - r) and a row of B
    (length r').
    """
    if not isinstance(spec, SUSpec):
        raise TypeError("spot codimensions are defined for SU specs only")
    require_valid(spec)
    upper = spec.r + (spec.p_prime - spec.r_prime)
    lower = (spec.p - spec.r) + spec.r_prime
    return upper, lower


@dataclass(frozen=True)
class ConcavityReport:
    spec: DomainSpec
    dim_u_minus: int
    per_alpha: dict[Root, int]
    d_ma: int
    argmin: frozenset[Root]
    paper_bound: int
    derived_bound_su: Optional[int]
    convex_degenerate: bool
    paper_formula_match: bool

    def to_json(self) -> dict:
        return {
            "family": self.spec.family,
            "params": self.spec.params(),
            "dim_u_minus": self.dim_u_minus,
            "attractiveness": [
                {"alpha": a.to_json(), "size": self.per_alpha[a]} for a in sorted(self.per_alpha)
            ],
            "d_ma": self.d_ma,
            "argmin": roots_to_json(self.argmin),
            "paper_bound": self.paper_bound,
            "derived_bound_su": self.derived_bound_su,
            "convex_degenerate": self.convex_degenerate,
            "paper_formula_match": self.paper_formula_match,
        }


def report(spec: DomainSpec, part: Optional[RootPartition] = None) -> ConcavityReport:
    if part is None:
        part = partition(spec)
    per_alpha = {a: len(attractiveness(a, part)) for a in sorted(part.phi)}
    value, argmin = d_ma(part)
    bound = paper_bound(spec)
    derived = min(spot_codims_su(spec)) if isinstance(spec, SUSpec) else None
    return ConcavityReport(
        spec=spec,
        dim_u_minus=len(part.lambda_u_minus),
        per_alpha=per_alpha,
        d_ma=value,
        argmin=argmin,
        paper_bound=bound,
        derived_bound_su=derived,
        convex_degenerate=is_convex_degenerate(part),
        paper_formula_match=value == bound,
    )

