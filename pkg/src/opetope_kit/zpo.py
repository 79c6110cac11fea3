"""The five axioms singling out opetopic cardinals and positive opetopes.

A validated face complex is an *opetopic cardinal* when it satisfies
globularity, strictness, disjointness and pencil linearity; it is a
*positive opetope* when additionally each stratum has exactly one face
that is not a source of the stratum above (principality).  Each check
returns a report with every violating face, in lexicographic order, so a
failing complex can be repaired or used as a counterexample.
"""

from __future__ import annotations

from collections import defaultdict

from .core import AxiomReport, FaceComplex, Violation, _sorted_violations
from .relations import closed_minus, closed_plus, closure, step_plus


def _fmt(names) -> str:
    return "{" + ", ".join(sorted(names)) + "}"


def check_globularity(complex_: FaceComplex) -> AxiomReport:
    """Faces of dim >= 2 must have boundaries that close up: the target of
    the target is the one source-target that is not a source of a source,
    and the sources of the target are the sources of sources that are not
    source-targets."""
    bad: list[Violation] = []
    for x in complex_.faces():
        if complex_.dim(x) < 2:
            continue
        dd: set[str] = set()
        gd: set[str] = set()
        for b in complex_.delta(x):
            dd |= complex_.delta(b)
            gd.add(complex_.gamma(b))
        gg = {complex_.gamma(complex_.gamma(x))}
        dg = set(complex_.delta(complex_.gamma(x)))
        if gg != gd - dd:
            bad.append(Violation(
                "globularity", (x,),
                f"target-of-target of {x} is {_fmt(gg)} but source-targets minus "
                f"source-sources is {_fmt(gd - dd)}"))
        if dg != dd - gd:
            bad.append(Violation(
                "globularity", (x,),
                f"sources-of-target of {x} are {_fmt(dg)} but source-sources minus "
                f"source-targets is {_fmt(dd - gd)}"))
    return AxiomReport(_sorted_violations(bad))


def _find_cycle(pairs: frozenset[tuple[str, str]], start: str) -> tuple[str, ...]:
    """A shortest one-step cycle through ``start``, as a node sequence."""
    succ: dict[str, list[str]] = defaultdict(list)
    for u, v in pairs:
        succ[u].append(v)
    parent: dict[str, str] = {}
    frontier = [start]
    seen = {start}
    while frontier:
        nxt = []
        for u in frontier:
            for v in sorted(succ[u]):
                if v == start:
                    path = [u]
                    while path[-1] != start and path[-1] in parent:
                        path.append(parent[path[-1]])
                    return tuple(reversed(path))
                if v not in seen:
                    seen.add(v)
                    parent[v] = u
                    nxt.append(v)
        frontier = nxt
    return (start,)


def check_strictness(complex_: FaceComplex) -> AxiomReport:
    """No stratum may carry a plus-cycle, and any two distinct faces of
    dimension 0 must be plus-comparable."""
    bad: list[Violation] = []
    for k in range(complex_.dimension + 1):
        step = step_plus(complex_, k)
        closed = closure(step)
        loops = sorted(x for x, y in closed.pairs if x == y)
        if loops:
            cycle = _find_cycle(step.pairs, loops[0])
            bad.append(Violation(
                "strictness", cycle,
                f"plus-cycle in dimension {k}: {' -> '.join(cycle + (cycle[0],))}"))
        if k == 0:
            names = complex_.stratum(0)
            for i, x in enumerate(names):
                for y in names[i + 1:]:
                    if not closed.comparable(x, y):
                        bad.append(Violation(
                            "strictness", (x, y),
                            f"dimension-0 faces {x} and {y} are not plus-comparable"))
    return AxiomReport(_sorted_violations(bad))


def check_disjointness(complex_: FaceComplex) -> AxiomReport:
    """Above dimension 0 no pair of faces may be comparable in both the
    plus and the minus order."""
    bad: list[Violation] = []
    for k in range(1, complex_.dimension + 1):
        plus = closed_plus(complex_, k)
        minus = closed_minus(complex_, k)
        names = complex_.stratum(k)
        for i, x in enumerate(names):
            for y in names[i + 1:]:
                if plus.comparable(x, y) and minus.comparable(x, y):
                    bad.append(Violation(
                        "disjointness", (x, y),
                        f"faces {x} and {y} are comparable in both orders"))
    return AxiomReport(_sorted_violations(bad))


def check_pencil_linearity(complex_: FaceComplex) -> AxiomReport:
    """For every face y, the faces one dimension up having y as target,
    and those having y as a source, must each be totally plus-ordered."""
    bad: list[Violation] = []
    for k in range(1, complex_.dimension + 1):
        plus = closed_plus(complex_, k)
        for y in complex_.stratum(k - 1):
            target_pencil = [x for x in complex_.stratum(k) if complex_.gamma(x) == y]
            source_pencil = [x for x in complex_.stratum(k) if y in complex_.delta(x)]
            for label, pencil in (("target", target_pencil), ("source", source_pencil)):
                for i, x in enumerate(pencil):
                    for x2 in pencil[i + 1:]:
                        if not plus.comparable(x, x2):
                            bad.append(Violation(
                                "pencil-linearity", (y, x, x2),
                                f"{label} pencil over {y}: {x} and {x2} are "
                                f"not plus-comparable"))
    return AxiomReport(_sorted_violations(bad))


def check_principality(complex_: FaceComplex) -> AxiomReport:
    """Each stratum must contain exactly one face that is a source of no
    face above (for the top stratum, that leaves the whole stratum)."""
    bad: list[Violation] = []
    for k in range(complex_.dimension + 1):
        used: set[str] = set()
        for w in complex_.stratum(k + 1):
            used |= complex_.delta(w)
        left = sorted(set(complex_.stratum(k)) - used)
        if len(left) != 1:
            bad.append(Violation(
                "principality", tuple(left),
                f"stratum {k} has {len(left)} non-source faces {_fmt(left)}, expected 1"))
    return AxiomReport(_sorted_violations(bad))


def is_opetopic_cardinal(complex_: FaceComplex) -> AxiomReport:
    """Globularity, strictness, disjointness and pencil linearity."""
    return AxiomReport.merge(
        check_globularity(complex_),
        check_strictness(complex_),
        check_disjointness(complex_),
        check_pencil_linearity(complex_),
    )


def is_positive_opetope(complex_: FaceComplex) -> AxiomReport:
    """An opetopic cardinal that is also principal."""
    return AxiomReport.merge(
        is_opetopic_cardinal(complex_),
        check_principality(complex_),
    )
