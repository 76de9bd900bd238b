"""Matrix realizations of sl(n, C) and sp(2n, C) used to cross-check the root combinatorics.

Everything here is computed from explicit matrices and commutators: isotropy
membership by letting e_delta act on the coordinate subspace p_0, and the
linearized boundary variety as the kernel of the matrix

    (gamma, beta) -> L([e_beta, e_gamma]),   gamma in Gamma, beta in Lambda(u^-).

The rank of that matrix is the codimension of the linearized boundary variety
inside u^-.
"""

from __future__ import annotations

import functools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

from .domains import DomainSpec, RootPartition, SpSpec, SUSpec, base_point, root_system, sp_shape
from .linalg import MatrixElement, bracket, column_space_contains, columns, rank
from .roots import Root

Number = int | Fraction


def symplectic_form(n: int) -> MatrixElement:
    """J = [[0, I_n], [-I_n, 0]], the Gram matrix of h(v_j, v_{n+k}) = delta_jk."""
    entries: dict[tuple[int, int], int] = {}
    for j in range(n):
        entries[(j, n + j)] = 1
        entries[(n + j, j)] = -1
    return MatrixElement(2 * n, entries)


def in_algebra(x: MatrixElement, family: str) -> bool:
    """Trace zero for ``"su"``; X^T J + J X = 0 for ``"sp"``."""
    if family == "su":
        return x.trace() == 0
    j = symplectic_form(x.size // 2)
    return (x.transpose() @ j + j @ x).is_zero()


@dataclass(frozen=True, eq=False)
class RootSpaceBasis:
    family: str
    n: int
    by_root: Mapping[Root, MatrixElement]
    cartan: tuple[MatrixElement, ...]
    _pivots: dict[Root, tuple[int, int]] = field(init=False, repr=False)
    _brackets: dict = field(init=False, repr=False, default_factory=dict)

    def __post_init__(self) -> None:
        pivots: dict[Root, tuple[int, int]] = {}
        owner: dict[tuple[int, int], Root] = {}
        for delta, e in self.by_root.items():
            for pos in e.entries:
                if pos in owner:
                    raise ValueError(f"root vectors for {owner[pos]} and {delta} overlap at {pos}")
                owner[pos] = delta
            pivots[delta] = min(e.entries)
            if pivots[delta][0] == pivots[delta][1]:
                raise ValueError(f"root vector for {delta} touches the diagonal")
        object.__setattr__(self, "_pivots", pivots)

    @property
    def matrix_size(self) -> int:
        return self.n if self.family == "su" else 2 * self.n

    def evaluate_root(self, delta: Root, h: MatrixElement) -> Fraction:
        """delta(H) for a diagonal H, reading the first n diagonal entries."""
        return sum((c * h[(i, i)] for i, c in enumerate(delta.coeffs)), Fraction(0))

    def coordinates(self, x: MatrixElement) -> dict[Root, Fraction]:
        """Root-space coefficients of ``x``; the remainder must be diagonal.

        Raises ValueError if ``x`` is not in the span of the root vectors plus
        diagonal matrices.
        """
        coeffs: dict[Root, Fraction] = {}
        residual = x
        for delta, pos in self._pivots.items():
            v = x[pos]
            if v:
                c = v / self.by_root[delta][pos]
                coeffs[delta] = c
                residual = residual - self.by_root[delta].scale(c)
        if not residual.is_diagonal():
            raise ValueError("matrix is not in the span of the root space basis and the diagonal")
        return coeffs

    def bracket_coordinates(self, beta: Root, gamma: Root) -> dict[Root, Fraction]:
        """Root-space coefficients of [e_beta, e_gamma], cached per basis."""
        key = (beta, gamma)
        hit = self._brackets.get(key)
        if hit is None:
            hit = self.coordinates(bracket(self.by_root[beta], self.by_root[gamma]))
            self._brackets[key] = hit
        return hit


def _su_basis(spec: SUSpec) -> RootSpaceBasis:
    n = spec.n
    by_root = {}
    for delta in root_system(spec):
        i = delta.coeffs.index(1) + 1
        j = delta.coeffs.index(-1) + 1
        by_root[delta] = MatrixElement.unit(n, i, j)
    cartan = tuple(
        MatrixElement.unit(n, i, i) - MatrixElement.unit(n, i + 1, i + 1) for i in range(1, n)
    )
    return RootSpaceBasis("su", n, by_root, cartan)


def _sp_basis(spec: SpSpec) -> RootSpaceBasis:
    n = spec.n
    size = 2 * n
    E = functools.partial(MatrixElement.unit, size)
    by_root = {}
    for delta in root_system(spec):
        kind, j, k = sp_shape(delta)
        if kind == "c":
            x = E(j, k) - E(n + k, n + j)
        elif j == k:
            x = E(j, n + j) if kind == "+" else E(n + j, j)
        elif kind == "+":
            x = E(j, n + k) + E(k, n + j)
        else:
            x = E(n + k, j) + E(n + j, k)
        by_root[delta] = x
    cartan = tuple(E(i, i) - E(n + i, n + i) for i in range(1, n + 1))
    return RootSpaceBasis("sp", n, by_root, cartan)


@functools.lru_cache(maxsize=None)
def build_basis(spec: DomainSpec) -> RootSpaceBasis:
    """Root vectors e_delta and a Cartan basis for the spec's algebra.

    Results are cached per spec; the returned object must not be mutated.
    """
    if isinstance(spec, SUSpec):
        return _su_basis(spec)
    return _sp_basis(spec)


def q0_member(delta: Root, spec: DomainSpec) -> bool:
    """Whether e_delta maps the coordinate subspace p_0 into itself."""
    basis = build_basis(spec)
    if delta not in basis.by_root:
        raise ValueError(f"{delta} is not a root of {spec}")
    x = basis.by_root[delta]
    idx = sorted(i - 1 for i in base_point(spec).ambient_indices(spec.n))
    size = x.size
    span = [[Fraction(int(i == j)) for i in range(size)] for j in idx]
    return column_space_contains(span, columns(x, idx))


@dataclass(frozen=True, eq=False)
class Functional:
    """L = sum a_alpha f_alpha, with f_alpha the dual basis to e_alpha on Phi."""

    coeffs: Mapping[Root, Fraction]

    def __post_init__(self) -> None:
        clean = {a: Fraction(c) for a, c in sorted(self.coeffs.items()) if c}
        if not clean:
            raise ValueError("functional is identically zero")
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def coordinate(cls, alpha: Root) -> "Functional":
        return cls({alpha: Fraction(1)})

    @property
    def support(self) -> frozenset[Root]:
        return frozenset(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Functional):
            return NotImplemented
        return dict(self.coeffs) == dict(other.coeffs)

    def __call__(self, coords: Mapping[Root, Fraction]) -> Fraction:
        return sum((a * coords.get(r, 0) for r, a in self.coeffs.items()), Fraction(0))


def _check_support(L: Functional, part: RootPartition) -> None:
    extra = L.support - part.phi
    if extra:
        raise ValueError(f"functional supported outside Phi: {sorted(map(str, extra))}")


def functional_matrix(L: Functional, part: RootPartition, basis: RootSpaceBasis) -> list[list[Fraction]]:
    """Rows indexed by sorted Gamma, columns by sorted Lambda(u^-)."""
    _check_support(L, part)
    betas = sorted(part.lambda_u_minus)
    return [
        [L(basis.bracket_coordinates(beta, gamma)) for beta in betas]
        for gamma in sorted(part.gamma)
    ]


def s_hat_codim(L: Functional, part: RootPartition, basis: RootSpaceBasis) -> int:
    """Codimension in u^- of {xi : L([xi, eta]) = 0 for all eta in E}."""
    return rank(functional_matrix(L, part, basis))


def _element(coeffs: Mapping[Root, Number], basis: RootSpaceBasis) -> MatrixElement:
    x = MatrixElement(basis.matrix_size)
    for r, c in sorted(coeffs.items()):
        if c:
            x = x + basis.by_root[r].scale(c)
    return x


def boundary_polynomial(
    xi: Mapping[Root, Number],
    gamma: Root,
    L: Functional,
    part: RootPartition,
    basis: RootSpaceBasis,
) -> tuple[Fraction, ...]:
    """Coefficients (by degree in t) of L(Ad(exp(t xi)) e_gamma).

    ad_xi is nilpotent for xi in u^-, so the exponential series terminates.
    Trailing zeros are stripped; the zero polynomial is ``()``.
    """
    extra = {r for r, c in xi.items() if c} - part.lambda_u_minus
    if extra:
        raise ValueError(f"xi supported outside Lambda(u^-): {sorted(map(str, extra))}")
    if gamma not in part.gamma:
        raise ValueError(f"{gamma} is not in Gamma")
    _check_support(L, part)
    x = _element(xi, basis)
    term = basis.by_root[gamma]
    coeffs: list[Fraction] = []
    # ad_x^(2s-1) = 0 when x^s = 0, and s <= matrix size
    limit = 2 * basis.matrix_size
    m = 0
    while not term.is_zero():
        if m > limit:
            raise ArithmeticError("ad(xi) is not nilpotent")
        coeffs.append(L(basis.coordinates(term)) / math.factorial(m))
        term = bracket(x, term)
        m += 1
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def first_order_value(
    xi: Mapping[Root, Number], gamma: Root, L: Functional, basis: RootSpaceBasis
) -> Fraction:
    """L([xi, e_gamma])."""
    return L(basis.coordinates(bracket(_element(xi, basis), basis.by_root[gamma])))


def transversality_check(alpha: Root, part: RootPartition, basis: RootSpaceBasis) -> bool:
    """Whether span{e_beta : beta in At(alpha)} meets the linearized boundary
    variety of f_alpha only in 0."""
    if alpha not in part.phi:
        raise ValueError(f"{alpha} is not in Phi")
    # At(alpha) computed here from the same definition, kept local to the oracle
    at = [b for b in sorted(part.lambda_u_minus) if alpha - b in part.gamma]
    if len(set(at)) != len(at):
        return False
    if not at:
        return True
    betas = sorted(part.lambda_u_minus)
    m = functional_matrix(Functional.coordinate(alpha), part, basis)
    cols = [betas.index(b) for b in at]
    restricted = [[row[c] for c in cols] for row in m]
    return rank(restricted) == len(at)


def random_functional(seed: int, part: RootPartition) -> Functional:
    """Integer coefficients uniform on [-9, 9] over sorted Phi, deterministic in ``seed``."""
    phi = sorted(part.phi)
    if not phi:
        raise ValueError("Phi is empty")
    rng = random.Random(seed)
    while True:
        vals = [rng.randint(-9, 9) for _ in phi]
        if any(vals):
            return Functional(dict(zip(phi, vals)))


def random_xi(rng: random.Random, part: RootPartition) -> dict[Root, Fraction]:
    return {b: Fraction(rng.randint(-9, 9)) for b in sorted(part.lambda_u_minus)}


def sample_escape_triple(
    rng: random.Random, part: RootPartition, basis: RootSpaceBasis, attempts: int = 200
) -> Optional[tuple[dict[Root, Fraction], Root, Functional]]:
    """Draw (xi, gamma, L) with L([xi, e_gamma]) != 0, or None if ``attempts`` draws fail."""
    if not part.phi or not part.gamma or not part.lambda_u_minus:
        return None
    gammas = sorted(part.gamma)
    for _ in range(attempts):
        xi = random_xi(rng, part)
        gamma = rng.choice(gammas)
        L = random_functional(rng.getrandbits(64), part)
        if first_order_value(xi, gamma, L, basis) != 0:
            return xi, gamma, L
    return None
