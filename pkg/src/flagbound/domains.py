"""Flag domains in Grassmannians and their root partitions.

Two families are supported:

* ``SUSpec(p, p_prime, r, r_prime)``: the open SU(p, p')-orbit of k-planes in
  C^n (n = p + p', k = r + r') on which the Hermitian form has signature
  (r, r').  Base point span{e_1..e_r, f_1..f_r'}.
* ``SpSpec(n, p, q)``: the open Sp(2n, R)-orbit of isotropic (p + q)-planes of
  signature (p, q) in C^{2n}.  Base point span{v_1..v_p, v_{2n-q+1}..v_{2n}}.

The stabilizer of the base cycle is taken to be K throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Union

from .roots import Family, Root, RootSystem, build_root_system, roots_to_json


class InvalidSpecError(ValueError):
    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


@dataclass(frozen=True, order=True)
class SUSpec:
    p: int
    p_prime: int
    r: int
    r_prime: int

    family = "su"

    @property
    def n(self) -> int:
        return self.p + self.p_prime

    @property
    def k(self) -> int:
        return self.r + self.r_prime

    def params(self) -> dict[str, int]:
        return {"p": self.p, "p_prime": self.p_prime, "r": self.r, "r_prime": self.r_prime}

    def __str__(self) -> str:
        return f"SU{{{self.p},{self.p_prime},{self.r},{self.r_prime}}}"


@dataclass(frozen=True, order=True)
class SpSpec:
    n: int
    p: int
    q: int

    family = "sp"

    @property
    def k(self) -> int:
        return self.p + self.q

    def params(self) -> dict[str, int]:
        return {"n": self.n, "p": self.p, "q": self.q}

    def __str__(self) -> str:
        return f"Sp{{{self.n},{self.p},{self.q}}}"


DomainSpec = Union[SUSpec, SpSpec]


def validate(spec: DomainSpec) -> list[str]:
    """Human-readable list of violated constraints; empty when the spec is valid."""
    out: list[str] = []
    if isinstance(spec, SUSpec):
        if spec.p < 1:
            out.append("p must be positive")
        if spec.p_prime < 1:
            out.append("p_prime must be positive")
        if spec.r < 0:
            out.append("r must be non-negative")
        if spec.r_prime < 0:
            out.append("r_prime must be non-negative")
        if spec.r > spec.p:
            out.append("r exceeds p")
        if spec.r_prime > spec.p_prime:
            out.append("r_prime exceeds p_prime")
        if not 1 <= spec.k <= spec.n - 1:
            out.append("r+r_prime must lie in [1, n-1]")
    elif isinstance(spec, SpSpec):
        if spec.n < 1:
            out.append("n must be positive")
        if spec.p < 0:
            out.append("p must be non-negative")
        if spec.q < 0:
            out.append("q must be non-negative")
        if spec.k < 1:
            out.append("p+q must be at least 1")
        if spec.k >= spec.n:
            out.append("p+q<n violated")
    else:
        out.append(f"unknown spec type {type(spec).__name__}")
    return out


def require_valid(spec: DomainSpec) -> None:
    violations = validate(spec)
    if violations:
        raise InvalidSpecError(violations)


def root_system(spec: DomainSpec) -> RootSystem:
    require_valid(spec)
    if isinstance(spec, SUSpec):
        return build_root_system(Family.A, spec.n)
    return build_root_system(Family.C, spec.n)


@dataclass(frozen=True)
class BasePoint:
    """Coordinate description of p_0.

    For SU, ``index_set`` lists the basis vectors of C^n spanning p_0.  For Sp,
    ``plus_indices`` are the v_j (j <= n) in p_0 and ``conj_indices`` the j with
    v_{n+j} in p_0.  All indices are 1-based.
    """

    index_set: frozenset[int] = frozenset()
    plus_indices: frozenset[int] = frozenset()
    conj_indices: frozenset[int] = frozenset()

    def ambient_indices(self, n: int) -> frozenset[int]:
        """1-based indices of the ambient coordinate vectors spanning p_0."""
        if self.index_set:
            return self.index_set
        return self.plus_indices | frozenset(n + j for j in self.conj_indices)


def base_point(spec: DomainSpec) -> BasePoint:
    require_valid(spec)
    if isinstance(spec, SUSpec):
        s = frozenset(range(1, spec.r + 1)) | frozenset(
            range(spec.p + 1, spec.p + spec.r_prime + 1)
        )
        assert len(s) == spec.k
        return BasePoint(index_set=s)
    plus = frozenset(range(1, spec.p + 1))
    conj = frozenset(range(spec.n - spec.q + 1, spec.n + 1))
    assert len(plus) == spec.p and len(conj) == spec.q
    assert not plus & conj, "base point index ranges overlap"
    return BasePoint(plus_indices=plus, conj_indices=conj)


def _type_a_pair(a: Root) -> tuple[int, int]:
    """(i, j) with a = e_i - e_j, 1-based."""
    i = a.coeffs.index(1) + 1
    j = a.coeffs.index(-1) + 1
    return i, j


def sp_shape(a: Root) -> tuple[str, int, int]:
    """Classify a type C root as ('c', j, k) for e_j - e_k, ('+', j, k) for
    e_j + e_k or ('-', j, k) for -e_j - e_k, with j <= k in the last two."""
    nz = [(i + 1, c) for i, c in enumerate(a.coeffs) if c]
    if len(nz) == 1:
        (j, c), = nz
        return ("+" if c > 0 else "-", j, j)
    (j, cj), (k, ck) = nz
    if cj > 0 and ck > 0:
        return ("+", j, k)
    if cj < 0 and ck < 0:
        return ("-", j, k)
    if cj > 0:
        return ("c", j, k)
    return ("c", k, j)


def k_roots(spec: DomainSpec) -> frozenset[Root]:
    system = root_system(spec)
    if isinstance(spec, SUSpec):
        def same_block(a: Root) -> bool:
            i, j = _type_a_pair(a)
            return (i <= spec.p) == (j <= spec.p)

        return frozenset(a for a in system if same_block(a))
    return frozenset(a for a in system if sp_shape(a)[0] == "c")


def _su_in_q0(spec: SUSpec, s: frozenset[int], a: Root) -> bool:
    i, j = _type_a_pair(a)
    return not (j in s and i not in s)


def _sp_in_q0(spec: SpSpec, a: Root) -> bool:
    n, p, q = spec.n, spec.p, spec.q
    kind, j, k = sp_shape(a)
    if kind == "c":
        return (k > p or j <= p) and (j <= n - q or k > n - q)
    if kind == "+":
        return k <= n - q or j <= p
    return j > p or k > n - q


def q0_roots(spec: DomainSpec) -> frozenset[Root]:
    """Roots of the isotropy algebra at p_0, from closed-form index rules."""
    system = root_system(spec)
    if isinstance(spec, SUSpec):
        s = base_point(spec).index_set
        return frozenset(a for a in system if _su_in_q0(spec, s, a))
    return frozenset(a for a in system if _sp_in_q0(spec, a))


@dataclass(frozen=True)
class RootPartition:
    system: RootSystem
    lambda_k: frozenset[Root]
    lambda_q0: frozenset[Root]
    lambda_u_minus: frozenset[Root]
    gamma: frozenset[Root]
    phi: frozenset[Root]

    def check(self) -> None:
        assert self.lambda_u_minus == self.lambda_k - self.lambda_q0
        assert self.gamma == self.lambda_q0 - self.lambda_k
        assert self.phi == frozenset(self.system.roots) - (self.lambda_k | self.lambda_q0)
        assert not (self.lambda_k & self.gamma or self.lambda_k & self.phi or self.gamma & self.phi)
        assert len(self.lambda_k) + len(self.gamma) + len(self.phi) == len(self.system)

    def to_json(self) -> dict[str, list[list[int]]]:
        return {
            "lambda_k": roots_to_json(self.lambda_k),
            "lambda_q0": roots_to_json(self.lambda_q0),
            "lambda_u_minus": roots_to_json(self.lambda_u_minus),
            "gamma": roots_to_json(self.gamma),
            "phi": roots_to_json(self.phi),
        }


def partition(spec: DomainSpec) -> RootPartition:
    system = root_system(spec)
    lk = k_roots(spec)
    lq = q0_roots(spec)
    part = RootPartition(
        system=system,
        lambda_k=lk,
        lambda_q0=lq,
        lambda_u_minus=lk - lq,
        gamma=lq - lk,
        phi=frozenset(system.roots) - (lk | lq),
    )
    part.check()
    return part


def is_convex_degenerate(part: RootPartition) -> bool:
    return not part.lambda_u_minus


def enumerate_specs(family: str, max_n: int) -> Iterator[DomainSpec]:
    """Every valid spec of the family with ambient size at most ``max_n``,
    in lexicographic order of parameters."""
    if family == "su":
        tuples = []
        for p in range(1, max_n):
            for pp in range(1, max_n - p + 1):
                for r, rp in itertools.product(range(p + 1), range(pp + 1)):
                    tuples.append((p, pp, r, rp))
        for t in sorted(tuples):
            spec = SUSpec(*t)
            if not validate(spec):
                yield spec
    elif family == "sp":
        for n in range(1, max_n + 1):
            for p in range(n):
                for q in range(n):
                    spec = SpSpec(n, p, q)
                    if not validate(spec):
                        yield spec
    else:
        raise ValueError(f"unknown family {family!r}")
