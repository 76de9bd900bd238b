"""Root lists for Sp(2n, R) written directly as index ranges.

Used as a literal reference for the rule-based partition: each function
enumerates the stated ranges and nothing else.
"""

from __future__ import annotations

from flagbound.roots import Root


def _root(n: int, j: int, k: int, sj: int, sk: int) -> Root:
    v = [0] * n
    v[j - 1] += sj
    v[k - 1] += sk
    return Root(tuple(v))


def plus(n: int, j: int, k: int) -> Root:
    """e_j + e_k, which is 2e_j when j == k."""
    return _root(n, j, k, 1, 1)


def minus(n: int, j: int, k: int) -> Root:
    return _root(n, j, k, -1, -1)


def compact(n: int, j: int, k: int) -> Root:
    return _root(n, j, k, 1, -1)


def s_plus(n: int) -> set[Root]:
    return {plus(n, j, k) for k in range(1, n + 1) for j in range(1, k + 1)}


def s_minus(n: int) -> set[Root]:
    return {minus(n, j, k) for k in range(1, n + 1) for j in range(1, k + 1)}


def s_plus_cap_q0(n: int, p: int, q: int) -> set[Root]:
    first = {plus(n, j, k) for k in range(1, n - q + 1) for j in range(1, k + 1)}
    second = {plus(n, j, k) for j in range(1, p + 1) for k in range(n - q + 1, n + 1)}
    return first | second


def s_minus_cap_q0(n: int, p: int, q: int) -> set[Root]:
    first = {minus(n, j, k) for k in range(p + 1, n + 1) for j in range(p + 1, k + 1)}
    second = {minus(n, j, k) for j in range(1, p + 1) for k in range(n - q + 1, n + 1)}
    return first | second


def u_minus(n: int, p: int, q: int) -> set[Root]:
    first = {compact(n, j, k) for j in range(p + 1, n - q + 1) for k in range(1, p + 1)}
    second = {compact(n, j, k) for j in range(n - q + 1, n + 1) for k in range(1, n - q + 1)}
    return first | second
