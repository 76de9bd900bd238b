"""Root systems of type A (in the gl(n) basis) and type C, with exact integer roots."""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Optional


class Family(enum.Enum):
    A = "A"
    C = "C"


@dataclass(frozen=True, order=True)
class Root:
    """Integer coefficient vector on the weights e_1, ..., e_n."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def of(cls, *coeffs: int) -> "Root":
        return cls(tuple(coeffs))

    @classmethod
    def unit(cls, n: int, terms: dict[int, int]) -> "Root":
        """Build sum(c * e_i) from a 1-based ``{i: c}`` mapping."""
        v = [0] * n
        for i, c in terms.items():
            v[i - 1] += c
        return cls(tuple(v))

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: "Root") -> "Root":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return Root(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Root") -> "Root":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return Root(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Root":
        return Root(tuple(-a for a in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs, start=1):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            terms.append(f"{sign}{mag}e{i}")
        if not terms:
            return "0"
        s = "".join(terms)
        return s[1:] if s.startswith("+") else s


def negate(a: Root) -> Root:
    return -a


def is_type_a(a: Root) -> bool:
    nz = sorted(c for c in a.coeffs if c)
    return nz == [-1, 1]


def is_type_c(a: Root) -> bool:
    nz = [c for c in a.coeffs if c]
    if len(nz) == 1:
        return abs(nz[0]) == 2
    return len(nz) == 2 and all(abs(c) == 1 for c in nz)


@dataclass(frozen=True)
class RootSystem:
    family: Family
    rank_n: int
    roots: tuple[Root, ...]
    _members: frozenset[Root] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_members", frozenset(self.roots))

    def __contains__(self, a: object) -> bool:
        return a in self._members

    def __iter__(self):
        return iter(self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def expected_size(self) -> int:
        n = self.rank_n
        return n * (n - 1) if self.family is Family.A else 2 * n * n

    def to_json(self) -> str:
        return json.dumps([r.to_json() for r in self.roots], separators=(",", ":"))


def _type_a_roots(n: int) -> Iterable[Root]:
    for i, j in itertools.permutations(range(1, n + 1), 2):
        yield Root.unit(n, {i: 1, j: -1})


def _type_c_roots(n: int) -> Iterable[Root]:
    for j, k in itertools.combinations(range(1, n + 1), 2):
        for sj in (1, -1):
            for sk in (1, -1):
                yield Root.unit(n, {j: sj, k: sk})
    for ell in range(1, n + 1):
        yield Root.unit(n, {ell: 2})
        yield Root.unit(n, {ell: -2})


def build_root_system(family: Family | str, n: int) -> RootSystem:
    """All roots of A_{n-1} (as e_i - e_j in gl(n)) or of C_n, sorted lexicographically."""
    family = Family(family)
    if family is Family.A:
        if n < 2:
            raise ValueError(f"type A needs n >= 2, got {n}")
        roots = _type_a_roots(n)
    else:
        if n < 1:
            raise ValueError(f"type C needs n >= 1, got {n}")
        roots = _type_c_roots(n)
    return RootSystem(family, n, tuple(sorted(set(roots))))


def add_root(system: RootSystem, a: Root, b: Root) -> Optional[Root]:
    """Return ``a + b`` if it is again a root of ``system``, else None."""
    for x in (a, b):
        if x not in system:
            raise ValueError(f"{x} is not a root of {system.family.value}{system.rank_n}")
    s = a + b
    return s if s in system else None


def roots_to_json(roots: Iterable[Root]) -> list[list[int]]:
    return [r.to_json() for r in sorted(roots)]
