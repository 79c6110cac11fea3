import pytest

from opetope_kit import (
    DimensionOutOfRange,
    DimensionTooLow,
    StepRelation,
    UnknownFaceReference,
    closure,
    gamma_set,
    iota,
    is_lower_path,
    is_upper_path,
    lambda_set,
    step_minus,
    step_plus,
    two_cell,
)
from opetope_kit.relations import closed_minus, closed_plus

from helpers import brute_force_lower_reachable


def test_step_minus_two2(two2):
    assert step_minus(two2, 1).pairs == frozenset({("f1", "f2")})
    assert step_minus(two2, 0).pairs == frozenset()


def test_step_minus_dim0_empty_by_definition(fix_point):
    assert step_minus(fix_point, 0).pairs == frozenset()


def test_step_plus_two2(two2, fix_arrow):
    assert step_plus(two2, 0).pairs == frozenset(
        {("x0", "x1"), ("x1", "x2"), ("x0", "x2")})
    assert step_plus(two2, 1).pairs == frozenset({("f1", "h"), ("f2", "h")})
    assert step_plus(fix_arrow, 1).pairs == frozenset()


def test_closure_examples(two2):
    closed = closure(step_plus(two2, 0))
    assert closed.pairs == frozenset({("x0", "x1"), ("x1", "x2"), ("x0", "x2")})
    assert closure(StepRelation(0, "+", frozenset())).pairs == frozenset()
    cyclic = closure(StepRelation(0, "+", frozenset({("a", "b"), ("b", "a")})))
    assert ("a", "a") in cyclic.pairs
    assert not cyclic.is_irreflexive()


def test_closed_relation_queries(two2):
    closed = closed_plus(two2, 1)
    assert closed.contains("f1", "h")
    assert not closed.contains("h", "f1")
    assert closed.comparable("h", "f1")
    assert closed.le("f1", "f1")
    assert not closed.comparable("f1", "f2")


def test_lambda_gamma_sets(two2, fix_arrow):
    assert lambda_set(two2, 1) == frozenset({"f1", "f2"})
    assert gamma_set(two2, 1) == frozenset({"h"})
    assert lambda_set(two2, 2) == frozenset({"alpha"})
    assert lambda_set(fix_arrow, 0) == frozenset({"x"})
    with pytest.raises(DimensionOutOfRange):
        lambda_set(two2, 3)
    with pytest.raises(DimensionOutOfRange):
        gamma_set(two2, -1)


def test_lambda_gamma_partition_stratum(two2, three1, small_pops):
    for complex_ in [two2, three1] + small_pops:
        for k in range(complex_.dimension + 1):
            lam = lambda_set(complex_, k)
            gam = gamma_set(complex_, k)
            assert lam | gam == frozenset(complex_.stratum(k))
            assert not lam & gam


def test_iota(two2, two1):
    assert iota(two2, "alpha") == frozenset({"x1"})
    assert iota(two1, "alpha") == frozenset()
    with pytest.raises(DimensionTooLow):
        iota(two2, "f1")


def test_path_predicates(two2):
    assert is_upper_path(two2, ["x1", "f2", "x2"])
    assert is_lower_path(two2, ["f1", "x1", "f2"])
    assert is_lower_path(two2, ["f1"])
    assert is_upper_path(two2, ["x0"])
    assert not is_lower_path(two2, ["f1", "x0", "f2"])
    assert not is_upper_path(two2, ["x0", "f2", "x2"])
    assert not is_lower_path(two2, ["f1", "x1"])
    with pytest.raises(UnknownFaceReference):
        is_lower_path(two2, ["nope"])


def _upper_walk_pairs(complex_, k):
    """Reachability among k-faces via explicit upper paths, found by DFS
    over alternating sequences; every discovered sequence is also fed back
    through the path predicate."""
    pairs = set()
    for start in complex_.stratum(k):
        todo = [[start]]
        while todo:
            seq = todo.pop()
            tip = seq[-1]
            for w in complex_.stratum(k + 1):
                if tip in complex_.delta(w):
                    nxt = complex_.gamma(w)
                    assert is_upper_path(complex_, seq + [w, nxt])
                    if (start, nxt) not in pairs:
                        pairs.add((start, nxt))
                        todo.append(seq + [w, nxt])
    return pairs


def test_plus_closure_equals_upper_path_reachability(two2, three1, small_pops):
    for complex_ in [two2, three1] + small_pops[:30]:
        for k in range(complex_.dimension + 1):
            assert closed_plus(complex_, k).pairs == frozenset(
                _upper_walk_pairs(complex_, k))


def _lower_walk_pairs(complex_, k):
    pairs = set()
    if k == 0:
        return pairs
    for start in complex_.stratum(k):
        todo = [[start]]
        while todo:
            seq = todo.pop()
            tip = seq[-1]
            mid = complex_.gamma(tip)
            for nxt in complex_.stratum(k):
                if mid in complex_.delta(nxt):
                    assert is_lower_path(complex_, seq + [mid, nxt])
                    if (start, nxt) not in pairs:
                        pairs.add((start, nxt))
                        todo.append(seq + [mid, nxt])
    return pairs


def test_minus_closure_equals_lower_path_reachability(two2, three1, small_pops):
    for complex_ in [two2, three1] + small_pops[:30]:
        for k in range(complex_.dimension + 1):
            walked = frozenset(_lower_walk_pairs(complex_, k))
            assert closed_minus(complex_, k).pairs == walked
            assert walked == frozenset(brute_force_lower_reachable(complex_, k))


def test_step_relations_inside_stratum(small_pops):
    for complex_ in small_pops:
        for k in range(complex_.dimension + 1):
            names = set(complex_.stratum(k))
            for x, y in step_minus(complex_, k).pairs | step_plus(complex_, k).pairs:
                assert x in names and y in names


def test_iota_decompositions_on_opetopes(two2, three1):
    # on well-formed cells the middle faces split both double boundaries
    from opetope_kit import is_positive_opetope

    for complex_ in (two2, three1, two_cell(3), two_cell(4)):
        assert is_positive_opetope(complex_).passed
        for a in complex_.faces():
            if complex_.dim(a) < 2:
                continue
            dd, gd = set(), set()
            for b in complex_.delta(a):
                dd |= complex_.delta(b)
                gd.add(complex_.gamma(b))
            dg = set(complex_.delta(complex_.gamma(a)))
            gg = {complex_.gamma(complex_.gamma(a))}
            mid = iota(complex_, a)
            assert mid == frozenset(dd - dg) == frozenset(gd - gg)
            assert gd == gg | mid and not gg & mid
            assert dd == dg | mid and not dg & mid