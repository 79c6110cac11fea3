"""Axioms and constructions for dendritic face complexes.

A validated face complex is *dendritic* when it has a greatest element,
every two-step chain completes to a unique lozenge obeying the sign rule,
and the sources of each face are free of one-step minus cycles.  On such a
complex the sources of any face carry a rooted tree structure whose
triplets are read off lozenges; most path and certificate algorithms in
this package walk that tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import (
    AxiomReport,
    FaceComplex,
    Violation,
    _sorted_violations,
    sign_product,
)
from .errors import (
    AmbiguousCompletion,
    DimensionTooLow,
    InternalInvariantBroken,
    LozengeError,
    NoCompletion,
    PreconditionViolation,
    SignRuleViolation,
)


# -- greatest element ----------------------------------------------------


def greatest_element(complex_: FaceComplex) -> str | None:
    """The face whose downward closure is the whole complex, or None."""
    top = complex_.stratum(complex_.dimension)
    if len(top) != 1:
        return None
    candidate = top[0]
    if len(complex_.downset(candidate)) == len(complex_):
        return candidate
    return None


def check_greatest_element(complex_: FaceComplex) -> AxiomReport:
    omega = greatest_element(complex_)
    if omega is not None:
        return AxiomReport()
    covered: set[str] = set()
    for x in complex_.stratum(complex_.dimension):
        covered |= complex_.downset(x)
    missing = sorted(set(complex_.faces()) - covered)
    if missing:
        witness = missing[0]
        detail = (f"no single face dominates every face; {witness} is not "
                  f"below any top-dimensional face")
    else:
        witness = complex_.stratum(complex_.dimension)[1]
        detail = (f"no single face dominates every face; {witness} is a "
                  f"second top-dimensional face")
    return AxiomReport((Violation("greatest-element", (witness,), detail),))


# -- lozenges ------------------------------------------------------------


@dataclass(frozen=True)
class Lozenge:
    """A completed diamond: bottom < left < top and bottom < right < top.

    ``signs`` records (alpha, beta, alpha', beta') where beta joins bottom
    to left, alpha joins left to top, and the primed pair joins through
    the right face.  The sign rule states alpha*beta == -(alpha'*beta').
    """

    top: str
    left: str
    right: str
    bottom: str
    signs: tuple[str, str, str, str]

    @property
    def sign_rule_holds(self) -> bool:
        a, b, a2, b2 = self.signs
        return sign_product(a, b) != sign_product(a2, b2)


def complete_half_lozenge(complex_: FaceComplex, bottom: str, left: str, top: str) -> Lozenge:
    """Find the unique second face between ``bottom`` and ``top``.

    Raises ``NoCompletion`` / ``AmbiguousCompletion`` when zero or several
    candidates exist and ``SignRuleViolation`` when the single candidate
    breaks the sign rule; each exception is a ready-made witness for the
    oriented-thinness check.
    """
    beta = complex_.cover_sign(bottom, left)
    alpha = complex_.cover_sign(left, top)
    if beta is None or alpha is None:
        raise PreconditionViolation(
            f"{bottom} < {left} < {top} is not a two-step chain")
    candidates = []
    for y, alpha2 in complex_.covers(top):
        if y == left:
            continue
        beta2 = complex_.cover_sign(bottom, y)
        if beta2 is not None:
            candidates.append((y, alpha2, beta2))
    if not candidates:
        raise NoCompletion(bottom, left, top)
    if len(candidates) > 1:
        raise AmbiguousCompletion(bottom, left, top, sorted(y for y, _, _ in candidates))
    right, alpha2, beta2 = candidates[0]
    signs = (alpha, beta, alpha2, beta2)
    lozenge = Lozenge(top, left, right, bottom, signs)
    if not lozenge.sign_rule_holds:
        raise SignRuleViolation(bottom, left, top, right, signs)
    return lozenge


def check_oriented_thinness(complex_: FaceComplex) -> AxiomReport:
    """Every two-step chain must complete to a unique sign-rule lozenge."""
    bad: list[Violation] = []
    for x in complex_.faces():
        if complex_.dim(x) < 2:
            continue
        for y, _ in complex_.covers(x):
            for z, _ in complex_.covers(y):
                try:
                    complete_half_lozenge(complex_, z, y, x)
                except LozengeError as err:
                    bad.append(Violation(
                        "oriented-thinness", (z, y, x), str(err)))
    return AxiomReport(_sorted_violations(bad))


def check_acyclicity(complex_: FaceComplex) -> AxiomReport:
    """Dimension-1 faces have a single source, all faces of dim >= 1 have
    at least one, and within the sources of any face the relation
    'target of one is a source of the other' has no directed cycle."""
    bad: list[Violation] = []
    for x in complex_.faces():
        if complex_.dim(x) == 0:
            continue
        sources = complex_.delta(x)
        if not sources:
            bad.append(Violation("acyclicity", (x,), f"face {x} has no sources"))
            continue
        if complex_.dim(x) == 1 and len(sources) > 1:
            bad.append(Violation(
                "acyclicity", (x,),
                f"dimension-1 face {x} has several sources"))
        if complex_.dim(x) < 2:
            continue
        edges = {y: [] for y in sources}
        for y2 in sources:
            t = complex_.gamma(y2)
            for y in sources:
                if t in complex_.delta(y):
                    edges[y2].append(y)
        cycle = _directed_cycle(edges)
        if cycle:
            bad.append(Violation(
                "acyclicity", tuple(cycle),
                f"sources of {x} contain the cycle {' -> '.join(cycle + [cycle[0]])}"))
    return AxiomReport(_sorted_violations(bad))


def _directed_cycle(edges: dict[str, list[str]]) -> list[str]:
    """A directed cycle in a small graph, or [] when acyclic."""
    state: dict[str, int] = {}
    stack: list[str] = []

    def visit(u: str) -> list[str]:
        state[u] = 1
        stack.append(u)
        for v in sorted(edges[u]):
            if state.get(v, 0) == 1:
                return stack[stack.index(v):]
            if state.get(v, 0) == 0:
                found = visit(v)
                if found:
                    return found
        stack.pop()
        state[u] = 2
        return []

    for u in sorted(edges):
        if state.get(u, 0) == 0:
            found = visit(u)
            if found:
                return found
    return []


def is_dfc(complex_: FaceComplex) -> AxiomReport:
    """Greatest element, oriented thinness and acyclicity together."""
    return AxiomReport.merge(
        check_greatest_element(complex_),
        check_oriented_thinness(complex_),
        check_acyclicity(complex_),
    )


# -- rooted trees ---------------------------------------------------------


@dataclass(frozen=True)
class RootedTree:
    """A finite rooted tree with named slots.

    Each node carries a finite arity set of slots; a triplet
    ``(parent, slot, child)`` plugs the child into one slot of the parent.
    Slots left unplugged are the leaves.  A distinguished root must be
    reachable from every node by a unique descending path.
    """

    nodes: frozenset[str]
    arity: Mapping[str, frozenset[str]]
    triplets: frozenset[tuple[str, str, str]]
    root: str

    def __post_init__(self):
        object.__setattr__(self, "nodes", frozenset(self.nodes))
        object.__setattr__(
            self, "arity",
            {a: frozenset(slots) for a, slots in dict(self.arity).items()})
        object.__setattr__(self, "triplets", frozenset(self.triplets))

    def leaves(self) -> frozenset[tuple[str, str]]:
        """The (node, slot) pairs not plugged by any triplet."""
        used = {(a, b) for a, b, _ in self.triplets}
        return frozenset(
            (a, b)
            for a in self.nodes
            for b in self.arity.get(a, ())
            if (a, b) not in used)

    def children(self, node: str) -> tuple[tuple[str, str], ...]:
        """Sorted (slot, child) pairs below ``node``."""
        return tuple(sorted((b, c) for a, b, c in self.triplets if a == node))

    def parent(self, node: str) -> tuple[str, str] | None:
        """The (parent, slot) above ``node``, or None for the root."""
        ups = [(a, b) for a, b, c in self.triplets if c == node]
        if not ups:
            return None
        if len(ups) > 1:
            raise InternalInvariantBroken(f"node {node} has several parents")
        return ups[0]

    def descending_path(self, node: str) -> list[str]:
        """Node sequence from ``node`` down to the root."""
        path = [node]
        seen = {node}
        while path[-1] != self.root:
            up = self.parent(path[-1])
            if up is None or up[0] in seen:
                raise InternalInvariantBroken(
                    f"no unique descending path from {node}")
            path.append(up[0])
            seen.add(up[0])
        return path


def validate_rooted_tree(tree: RootedTree) -> AxiomReport:
    """Triplet well-formedness plus the unique-descending-path law."""
    bad: list[Violation] = []
    if tree.root not in tree.nodes:
        bad.append(Violation("rooted-tree", (tree.root,), f"root {tree.root} is not a node"))
        return AxiomReport(_sorted_violations(bad))
    plugged: dict[tuple[str, str], str] = {}
    for a, b, c in sorted(tree.triplets):
        if a not in tree.nodes or c not in tree.nodes:
            bad.append(Violation("rooted-tree", (a, c), f"triplet ({a}, {b}, {c}) uses unknown nodes"))
            continue
        if b not in tree.arity.get(a, frozenset()):
            bad.append(Violation("rooted-tree", (a, c), f"slot {b} is not in the arity of {a}"))
            continue
        if (a, b) in plugged:
            bad.append(Violation(
                "rooted-tree", (a, b),
                f"slot {b} of {a} is plugged twice ({plugged[(a, b)]} and {c})"))
            continue
        plugged[(a, b)] = c
    if bad:
        return AxiomReport(_sorted_violations(bad))

    parents: dict[str, list[tuple[str, str]]] = {n: [] for n in tree.nodes}
    for a, b, c in tree.triplets:
        parents[c].append((a, b))
    for n in sorted(tree.nodes):
        ups = parents[n]
        if n == tree.root:
            if ups:
                bad.append(Violation(
                    "rooted-tree", (n,),
                    f"the root {n} is plugged into {sorted(a for a, _ in ups)[0]}"))
        elif len(ups) != 1:
            bad.append(Violation(
                "rooted-tree", (n,),
                f"node {n} has {len(ups)} descending paths to choose from"))
    if bad:
        return AxiomReport(_sorted_violations(bad))

    for n in sorted(tree.nodes):
        cur, seen = n, {n}
        while cur != tree.root:
            cur = parents[cur][0][0]
            if cur in seen:
                bad.append(Violation(
                    "rooted-tree", tuple(sorted(seen)),
                    f"node {n} never reaches the root (cycle through {cur})"))
                break
            seen.add(cur)
    return AxiomReport(_sorted_violations(bad))


def face_tree(complex_: FaceComplex, x: str) -> RootedTree:
    """The rooted tree carried by the sources of ``x``.

    Nodes are the sources of ``x``; the arity of a node is its own source
    set (empty for dimension-0 nodes); a child is plugged into a slot when
    its target equals that slot.  For dim(x) >= 2 the root is the unique
    source whose target is the target of the target of ``x``.  The caller
    is expected to pass a dendritic complex; on anything else the
    defensive validation fails with ``InternalInvariantBroken``.
    """
    if complex_.dim(x) < 1:
        raise DimensionTooLow(f"face {x} has dimension 0")
    nodes = complex_.delta(x)
    arity = {
        y: (complex_.delta(y) if complex_.dim(y) >= 1 else frozenset())
        for y in nodes
    }
    triplets: set[tuple[str, str, str]] = set()
    for y in nodes:
        for z in arity[y]:
            for y2 in nodes:
                if complex_.dim(y2) >= 1 and complex_.gamma(y2) == z:
                    triplets.add((y, z, y2))
    if complex_.dim(x) == 1:
        (root,) = nodes
    else:
        anchor = complex_.gamma(complex_.gamma(x))
        roots = sorted(y for y in nodes if complex_.gamma(y) == anchor)
        if len(roots) != 1:
            raise InternalInvariantBroken(
                f"{len(roots)} root candidates among sources of {x}")
        root = roots[0]
    tree = RootedTree(frozenset(nodes), arity, frozenset(triplets), root)
    report = validate_rooted_tree(tree)
    if not report.passed:
        raise InternalInvariantBroken(
            "sources of " + x + " are not a rooted tree: "
            + "; ".join(v.detail for v in report.violations))
    return tree
