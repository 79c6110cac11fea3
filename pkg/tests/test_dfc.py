import pytest

from opetope_kit import (
    AmbiguousCompletion,
    FaceComplex,
    InternalInvariantBroken,
    NoCompletion,
    RootedTree,
    check_acyclicity,
    check_greatest_element,
    check_oriented_thinness,
    complete_half_lozenge,
    face_tree,
    greatest_element,
    is_dfc,
    validate_rooted_tree,
)
from opetope_kit.errors import DimensionTooLow, PreconditionViolation

from helpers import (
    all_chains,
    negative_parenthesis_chains,
    positive_parenthesis_chains,
)


def test_greatest_element(two2, fix_point):
    assert greatest_element(two2) == "alpha"
    assert greatest_element(fix_point) == "x"


def test_greatest_element_missing():
    two_arrows = FaceComplex(
        {"a": 0, "b": 0, "c": 0, "f": 1, "g": 1},
        {"f": "b", "g": "c"},
        {"f": ["a"], "g": ["b"]})
    assert greatest_element(two_arrows) is None
    report = check_greatest_element(two_arrows)
    assert not report.passed


def test_lozenge_completions_two2(two2):
    loz = complete_half_lozenge(two2, "x1", "f1", "alpha")
    assert loz.right == "f2"
    assert loz.signs == ("-", "+", "-", "-")
    assert loz.sign_rule_holds

    loz = complete_half_lozenge(two2, "x2", "h", "alpha")
    assert loz.right == "f2"
    assert loz.signs == ("+", "+", "-", "+")

    loz = complete_half_lozenge(two2, "x0", "f1", "alpha")
    assert loz.right == "h"
    assert loz.signs == ("-", "-", "+", "-")


def test_lozenge_precondition(two2):
    with pytest.raises(PreconditionViolation):
        complete_half_lozenge(two2, "x0", "f2", "alpha")


def test_lozenge_no_completion(two2):
    dims, target, sources = two2.to_data()
    sources["h"] = frozenset({"x1"})
    broken = FaceComplex(dims, target, sources)
    with pytest.raises(NoCompletion):
        complete_half_lozenge(broken, "x0", "f1", "alpha")


def test_lozenge_ambiguous():
    dims = {"x": 0, "y": 0, "f": 1, "g": 1, "h": 1, "a": 2}
    target = {"f": "y", "g": "y", "h": "y", "a": "h"}
    sources = {"f": ["x"], "g": ["x"], "h": ["x"], "a": ["f", "g"]}
    broken = FaceComplex(dims, target, sources)
    with pytest.raises(AmbiguousCompletion) as err:
        complete_half_lozenge(broken, "x", "f", "a")
    assert err.value.candidates == ("g", "h")


def test_oriented_thinness_two2(two2, fix_point, fix_arrow):
    assert check_oriented_thinness(two2).passed
    assert check_oriented_thinness(fix_point).passed
    assert check_oriented_thinness(fix_arrow).passed
    assert len(list(all_chains(two2))) == 6


def test_oriented_thinness_mutation(two2):
    dims, target, sources = two2.to_data()
    sources["h"] = frozenset({"x1"})
    broken = FaceComplex(dims, target, sources)
    report = check_oriented_thinness(broken)
    assert not report.passed


def test_lozenge_completion_involution(two2, three1, tree_fixtures):
    complexes = [two2, three1] + list(tree_fixtures.values())
    for complex_ in complexes:
        for bottom, middle, top in all_chains(complex_):
            loz = complete_half_lozenge(complex_, bottom, middle, top)
            assert loz.sign_rule_holds
            back = complete_half_lozenge(complex_, bottom, loz.right, top)
            assert back.right == middle


def test_acyclicity(two2, fix_point):
    assert check_acyclicity(two2).passed
    assert check_acyclicity(fix_point).passed


def test_acyclicity_cycle_detected():
    dims = {"p": 0, "q": 0, "a": 1, "b": 1, "c": 1, "x": 2}
    target = {"a": "q", "b": "p", "c": "q", "x": "c"}
    sources = {"a": ["p"], "b": ["q"], "c": ["p"], "x": ["a", "b"]}
    broken = FaceComplex(dims, target, sources)
    report = check_acyclicity(broken)
    assert not report.passed
    assert any("cycle" in v.detail for v in report.violations)


def test_is_dfc_on_fixtures(fix_point, fix_arrow, two2, three1, tree_fixtures):
    for complex_ in [fix_point, fix_arrow, two2, three1] + list(tree_fixtures.values()):
        assert is_dfc(complex_).passed
    two_points = FaceComplex({"a": 0, "b": 0}, {}, {})
    assert not is_dfc(two_points).passed


def test_rooted_tree_example():
    tree = RootedTree(
        nodes=frozenset({"a1", "a2", "a3", "a4"}),
        arity={"a1": frozenset({"b6", "b7"}),
               "a2": frozenset({"b1", "b8"}),
               "a3": frozenset({"b2", "b3"}),
               "a4": frozenset({"b4", "b5"})},
        triplets=frozenset({("a1", "b6", "a2"), ("a1", "b7", "a4"),
                            ("a2", "b8", "a3")}),
        root="a1")
    assert validate_rooted_tree(tree).passed
    assert tree.leaves() == frozenset(
        {("a2", "b1"), ("a3", "b2"), ("a3", "b3"), ("a4", "b4"), ("a4", "b5")})
    assert tree.descending_path("a3") == ["a3", "a2", "a1"]


def test_rooted_tree_rejects_cycle_and_forest():
    cyclic = RootedTree(
        nodes=frozenset({"a", "b"}),
        arity={"a": frozenset({"s"}), "b": frozenset({"t"})},
        triplets=frozenset({("a", "s", "b"), ("b", "t", "a")}),
        root="a")
    assert not validate_rooted_tree(cyclic).passed

    forest = RootedTree(
        nodes=frozenset({"a", "b"}),
        arity={"a": frozenset({"s"}), "b": frozenset({"t"})},
        triplets=frozenset(),
        root="a")
    assert not validate_rooted_tree(forest).passed


def test_rooted_tree_rejects_double_plug():
    tree = RootedTree(
        nodes=frozenset({"a", "b", "c"}),
        arity={"a": frozenset({"s"}), "b": frozenset(), "c": frozenset()},
        triplets=frozenset({("a", "s", "b"), ("a", "s", "c")}),
        root="a")
    assert not validate_rooted_tree(tree).passed


def test_face_tree_two2(two2):
    tree = face_tree(two2, "alpha")
    assert tree.nodes == frozenset({"f1", "f2"})
    assert tree.root == "f2"
    assert tree.triplets == frozenset({("f2", "x1", "f1")})
    assert tree.leaves() == frozenset({("f1", "x0")})


def test_face_tree_dim1(fix_arrow):
    tree = face_tree(fix_arrow, "f")
    assert tree.nodes == frozenset({"x"})
    assert tree.root == "x"
    assert tree.arity["x"] == frozenset()
    assert not tree.triplets


def test_face_tree_dim0_rejected(two2):
    with pytest.raises(DimensionTooLow):
        face_tree(two2, "x0")


def test_face_tree_defensive(two2):
    dims, target, sources = two2.to_data()
    target["f1"] = "x2"  # no source then targets x1; root duplicated on x2
    broken = FaceComplex(dims, target, sources)
    with pytest.raises(InternalInvariantBroken):
        face_tree(broken, "alpha")


def test_face_tree_root_property(two2, three1, tree_fixtures):
    for complex_ in [two2, three1] + list(tree_fixtures.values()):
        for x in complex_.faces():
            if complex_.dim(x) < 2:
                continue
            tree = face_tree(complex_, x)
            anchor = complex_.gamma(complex_.gamma(x))
            roots = [y for y in tree.nodes if complex_.gamma(y) == anchor]
            assert roots == [tree.root]
            for node in tree.nodes:
                path = tree.descending_path(node)
                assert path[-1] == tree.root
                assert len(path) <= len(tree.nodes)


def test_face_tree_leaves_complement_triplets(two2, three1, tree_fixtures):
    for complex_ in [two2, three1] + list(tree_fixtures.values()):
        for x in complex_.faces():
            if complex_.dim(x) < 1:
                continue
            tree = face_tree(complex_, x)
            slots = {(a, b) for a in tree.nodes for b in tree.arity[a]}
            used = {(a, b) for a, b, _ in tree.triplets}
            assert tree.leaves() == frozenset(slots - used)


def test_parenthesis_completion_chains(two2, three1, tree_fixtures):
    """Each four-face configuration closes into exactly one bracket chain:
    climbing from a source of b by lozenge steps over a fixed bottom face
    lands on a source of the target of b, one way only."""
    for complex_ in [two2, three1] + list(tree_fixtures.values()):
        for b in complex_.faces():
            if complex_.dim(b) < 2:
                continue
            for c in sorted(complex_.delta(b)):
                if complex_.dim(c) < 1:
                    continue
                d_plus = complex_.gamma(c)
                if complex_.dim(d_plus) >= 1:
                    for e, beta in complex_.covers(d_plus):
                        chains = positive_parenthesis_chains(
                            complex_, e, beta, c, b)
                        assert len(chains) == 1, (b, c, d_plus, e)
                for d in sorted(complex_.delta(c)):
                    if complex_.dim(d) < 1:
                        continue
                    for e, beta in complex_.covers(d):
                        chains = negative_parenthesis_chains(
                            complex_, e, beta, d, c, b)
                        assert len(chains) == 1, (b, c, d, e)
