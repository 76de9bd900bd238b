from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from flagbound.domains import (
    BasePoint,
    InvalidSpecError,
    SpSpec,
    SUSpec,
    base_point,
    enumerate_specs,
    is_convex_degenerate,
    k_roots,
    partition,
    q0_roots,
    validate,
)
from flagbound.roots import Root

import index_ranges as ir

R = Root.of


def test_validate_examples():
    assert validate(SUSpec(2, 1, 1, 1)) == []
    # k = 3 = n also breaks the k <= n - 1 bound here
    assert "r exceeds p" in validate(SUSpec(2, 1, 3, 0))
    assert validate(SpSpec(3, 2, 1)) == ["p+q<n violated"]


@pytest.mark.parametrize(
    "spec",
    [SUSpec(2, 1, 0, 0), SUSpec(2, 1, 2, 1), SUSpec(0, 2, 0, 1), SUSpec(2, 2, -1, 2),
     SpSpec(3, 0, 0), SpSpec(2, -1, 2), SpSpec(1, 0, 1)],
)
def test_invalid_specs_rejected(spec):
    assert validate(spec)
    with pytest.raises(InvalidSpecError):
        partition(spec)


def test_base_points():
    assert base_point(SUSpec(3, 2, 2, 1)) == BasePoint(index_set=frozenset({1, 2, 4}))
    bp = base_point(SpSpec(5, 2, 1))
    assert bp.plus_indices == {1, 2} and bp.conj_indices == {5}
    assert bp.ambient_indices(5) == {1, 2, 10}


def test_k_roots_examples():
    assert k_roots(SUSpec(2, 1, 1, 0)) == {R(1, -1, 0), R(-1, 1, 0)}
    assert k_roots(SpSpec(3, 1, 1)) == {
        Root.unit(3, {j: 1, k: -1}) for j, k in itertools.permutations(range(1, 4), 2)
    }
    assert k_roots(SUSpec(1, 1, 1, 0)) == frozenset()


def test_sp311_q0_lists():
    q0 = q0_roots(SpSpec(3, 1, 1))
    assert q0 & ir.s_plus(3) == {R(2, 0, 0), R(1, 1, 0), R(0, 2, 0), R(1, 0, 1)}
    assert q0 & ir.s_minus(3) == {R(0, -2, 0), R(0, -1, -1), R(0, 0, -2), R(-1, 0, -1)}


def test_su2111_crossing_roots_in_q0():
    # S = {1, 3}; E_ij is excluded exactly when j in S and i not in S
    crossing = {R(1, 0, -1), R(-1, 0, 1), R(0, 1, -1), R(0, -1, 1)}
    assert q0_roots(SUSpec(2, 1, 1, 1)) & crossing == {R(1, 0, -1), R(-1, 0, 1), R(0, -1, 1)}


def test_partition_sp311():
    part = partition(SpSpec(3, 1, 1))
    assert part.lambda_u_minus == {R(-1, 1, 0), R(-1, 0, 1), R(0, -1, 1)}


def test_partition_su2111():
    part = partition(SUSpec(2, 1, 1, 1))
    assert part.lambda_u_minus == {R(-1, 1, 0)}
    assert part.gamma == {R(1, 0, -1), R(-1, 0, 1), R(0, -1, 1)}
    assert part.phi == {R(0, 1, -1)}


@pytest.mark.parametrize("spec", [SUSpec(2, 1, 2, 0), SUSpec(3, 2, 0, 2), SUSpec(1, 3, 1, 0)])
def test_full_blocks_give_empty_u_minus(spec):
    part = partition(spec)
    assert part.lambda_u_minus == frozenset()
    assert is_convex_degenerate(part)


def test_convex_degenerate_examples():
    assert not is_convex_degenerate(partition(SUSpec(2, 1, 1, 1)))
    assert not is_convex_degenerate(partition(SpSpec(3, 1, 1)))


def test_json_keys_and_sorting():
    data = partition(SUSpec(2, 1, 1, 1)).to_json()
    assert list(data) == ["lambda_k", "lambda_q0", "lambda_u_minus", "gamma", "phi"]
    for roots in data.values():
        assert roots == sorted(roots)
    assert data["phi"] == [[0, 1, -1]]


def test_enumeration_sorted_and_valid():
    for fam in ("su", "sp"):
        specs = list(enumerate_specs(fam, 5))
        assert specs == sorted(specs)
        assert all(not validate(s) for s in specs)
    assert list(enumerate_specs("su", 2)) == [SUSpec(1, 1, 0, 1), SUSpec(1, 1, 1, 0)]
    assert list(enumerate_specs("sp", 1)) == []


ALL_SU = list(enumerate_specs("su", 7))
ALL_SP = list(enumerate_specs("sp", 6))


@given(st.sampled_from(ALL_SU + ALL_SP))
def test_partition_invariants(spec):
    part = partition(spec)
    assert len(part.lambda_k) + len(part.gamma) + len(part.phi) == len(part.system)
    assert part.lambda_u_minus <= part.lambda_k
    assert not part.lambda_u_minus & part.lambda_q0


@given(st.sampled_from(ALL_SU))
def test_su_u_minus_size(spec):
    part = partition(spec)
    r, rp, p, pp = spec.r, spec.r_prime, spec.p, spec.p_prime
    assert len(part.lambda_u_minus) == r * (p - r) + rp * (pp - rp)


@given(st.sampled_from(ALL_SP))
def test_sp_lists_reproduced(spec):
    n, p, q = spec.n, spec.p, spec.q
    part = partition(spec)
    assert part.lambda_q0 & ir.s_plus(n) == ir.s_plus_cap_q0(n, p, q)
    assert part.lambda_q0 & ir.s_minus(n) == ir.s_minus_cap_q0(n, p, q)
    assert part.lambda_u_minus == ir.u_minus(n, p, q)
