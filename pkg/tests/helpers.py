"""Brute-force oracles shared by the unit and acceptance tests.

Everything here is intentionally dumb: plain exhaustive searches whose
only job is to be obviously correct, so the clever implementations have
something independent to agree with.
"""

from __future__ import annotations

import itertools

from opetope_kit import FaceComplex
from opetope_kit.core import MINUS, PLUS, opposite


def all_chains(complex_: FaceComplex):
    """Every two-step chain (bottom, middle, top) of covers."""
    for top in complex_.faces():
        if complex_.dim(top) < 2:
            continue
        for middle, _ in complex_.covers(top):
            for bottom, _ in complex_.covers(middle):
                yield bottom, middle, top


def exhaustive_simple_zigzags(complex_: FaceComplex, anchor: str,
                              start: str, end: str, max_junctions: int):
    """All simple zig-zags between two sources of the anchor, found by
    exhaustive alternation, as (faces, signs) tuples."""
    sources = sorted(complex_.delta(anchor))
    found = []

    def grow(faces: list[str], signs: list[str]) -> None:
        if faces[-1] == end:
            found.append((tuple(faces), tuple(signs)))
        if len(signs) >= max_junctions:
            return
        current = faces[-1]
        steps: list[tuple[str, str]] = []
        if complex_.dim(current) >= 1:
            steps.append((PLUS, complex_.gamma(current)))
            steps.extend((MINUS, d) for d in sorted(complex_.delta(current)))
        for sign, lower in steps:
            if len(faces) >= 2 and lower == faces[-2]:
                continue  # consecutive lower faces must differ
            for nxt in sources:
                if complex_.cover_sign(lower, nxt) == opposite(sign):
                    grow(faces + [lower, nxt], signs + [sign])

    grow([start], [])
    return found


def brute_force_lower_reachable(complex_: FaceComplex, k: int):
    """Pairs joined by a minus-chain of length >= 1, by path search."""
    names = complex_.stratum(k)
    step = {}
    for x in names:
        step[x] = [x2 for x2 in names
                   if k >= 1 and complex_.gamma(x) in complex_.delta(x2)]
    reach = set()
    for x in names:
        todo = list(step[x])
        seen = set()
        while todo:
            cur = todo.pop()
            if cur in seen:
                continue
            seen.add(cur)
            reach.add((x, cur))
            todo.extend(step[cur])
    return reach


def positive_parenthesis_chains(complex_: FaceComplex, e: str, beta: str,
                                c: str, b: str):
    """All chains closing the configuration e <beta d <+ c <- b.

    A chain lists c = c0, d0, c1, d1, ..., cp, dp where every c_i is a
    source of b, every d_i is a source of c_i lying over e with sign beta,
    each following c is the face whose target is the previous d, and the
    last d is a source of the target of b.
    """
    return _parenthesis_chains(complex_, e, beta, b, start=[c], fixed_d=None)


def negative_parenthesis_chains(complex_: FaceComplex, e: str, beta: str,
                                d: str, c: str, b: str):
    """Same shape but the first lower face is forced to be ``d``."""
    return _parenthesis_chains(complex_, e, beta, b, start=[c], fixed_d=d)


def _parenthesis_chains(complex_, e, beta, b, start, fixed_d):
    target_of_b = complex_.gamma(b)
    sources_of_b = complex_.delta(b)
    out = []
    limit = 2 * len(sources_of_b) + 2

    def grow(seq):
        if len(seq) > limit:
            return
        current_c = seq[-1]
        if fixed_d is not None and len(seq) == 1:
            candidates = [fixed_d] if fixed_d in complex_.delta(current_c) else []
        else:
            candidates = [d for d in sorted(complex_.delta(current_c))
                          if complex_.cover_sign(e, d) == beta]
        for d in candidates:
            if d in complex_.delta(target_of_b):
                out.append(tuple(seq + [d]))
            for c_next in sorted(sources_of_b):
                if complex_.gamma(c_next) == d:
                    grow(seq + [d, c_next])

    grow(list(start))
    return out


def cancel_backtracks(faces: tuple[str, ...], signs: tuple[str, ...]):
    """Remove immediate retracing from a zig-zag until it is simple.

    A backtrack is a junction pair passing through the same lower face and
    returning to the same upper face; cancelling one deletes two junctions.
    """
    faces = list(faces)
    signs = list(signs)
    changed = True
    while changed:
        changed = False
        for i in range(len(signs) - 1):
            same_lower = faces[2 * i + 1] == faces[2 * i + 3]
            returns = faces[2 * i] == faces[2 * i + 4]
            if same_lower and returns:
                del faces[2 * i + 1:2 * i + 5]
                del signs[i:i + 2]
                changed = True
                break
    return tuple(faces), tuple(signs)


def predecessor_sort(complex_: FaceComplex, pairs) -> list[str]:
    """Stratum-0 faces sorted by how many faces sit strictly below them."""
    names = complex_.stratum(0)
    below = {x: sum(1 for y in names if (y, x) in pairs) for x in names}
    return sorted(names, key=lambda x: (below[x], x))


def all_relabelings(complex_: FaceComplex):
    """A deterministic batch of dimension-preserving relabelings."""
    strata = [complex_.stratum(k) for k in range(complex_.dimension + 1)]
    perms_per_stratum = [
        list(itertools.permutations(names))[:3] for names in strata]
    for combo in itertools.product(*perms_per_stratum):
        mapping = {}
        for names, perm in zip(strata, combo):
            mapping.update({old: f"r_{new}" for old, new in zip(names, perm)})
        yield mapping
