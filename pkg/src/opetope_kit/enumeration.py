"""Exhaustive enumeration of small complexes up to isomorphism.

Candidates are produced stratum by stratum.  Within one stratum the faces
are interchangeable, so assignments are drawn as sorted multisets; the
remaining overcounting (relabellings of lower strata) is removed by
canonical-form deduplication.  Every stream is therefore exhaustive, free
of isomorphic repeats, and emitted in a deterministic order with
canonical face names.

A second, deliberately naive generator walks the full labelled assignment
space and keeps whatever survives the base validator.  It exists so that
frozen census numbers never rest on the clever path alone.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterator, Mapping, Optional

from .core import FaceComplex, validate_complex_data
from .errors import BudgetTooLarge
from .iso import canonical_face_name, canonical_form, complex_from_certificate
from .relations import closed_minus, closed_plus
from .zpo import is_positive_opetope

WORK_LIMIT_ENV = "OPETOPE_KIT_WORK_LIMIT"
DEFAULT_WORK_LIMIT = 2_000_000


@dataclass(frozen=True)
class EnumerationBudget:
    """Bounds for an enumeration run.

    ``per_dim`` optionally caps individual strata on top of the global
    face budget.
    """

    max_dim: int
    max_faces_total: int
    per_dim: Optional[Mapping[int, int]] = None

    def __post_init__(self):
        if self.max_dim < 0:
            raise ValueError("max_dim must be >= 0")
        if self.max_faces_total < 1:
            raise ValueError("max_faces_total must be >= 1")
        if self.per_dim is not None:
            for k, cap in self.per_dim.items():
                if k < 0 or cap < 0:
                    raise ValueError("per-dimension caps must be >= 0")

    def cap(self, k: int) -> int:
        if self.per_dim is None:
            return self.max_faces_total
        return min(self.max_faces_total, self.per_dim.get(k, self.max_faces_total))


def resolve_work_limit(work_limit: Optional[int]) -> int:
    if work_limit is not None:
        return work_limit
    env = os.environ.get(WORK_LIMIT_ENV)
    if env:
        return int(env)
    return DEFAULT_WORK_LIMIT


class _WorkMeter:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def tick(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.limit:
            raise BudgetTooLarge(
                f"enumeration exceeded the work limit of {self.limit} candidates; "
                f"raise {WORK_LIMIT_ENV} to allow more")


def _profiles(budget: EnumerationBudget) -> list[tuple[int, ...]]:
    """All stratum-size tuples within the budget (no internal zeros)."""
    found: list[tuple[int, ...]] = []

    def grow(prefix: list[int]) -> None:
        found.append(tuple(prefix))
        k = len(prefix)
        room = budget.max_faces_total - sum(prefix)
        if k > budget.max_dim or room < 1:
            return
        for n in range(1, min(budget.cap(k), room) + 1):
            grow(prefix + [n])

    for n0 in range(1, min(budget.cap(0), budget.max_faces_total) + 1):
        grow([n0])
    return sorted(found)


def _stratum_names(profile: tuple[int, ...]) -> list[tuple[str, ...]]:
    return [tuple(canonical_face_name(k, i) for i in range(n))
            for k, n in enumerate(profile)]


def _options(below: tuple[str, ...], k: int) -> list[tuple[str, frozenset[str]]]:
    """Legal (target, sources) choices for one face of dimension k >= 1."""
    opts: list[tuple[str, frozenset[str]]] = []
    for t in below:
        others = [b for b in below if b != t]
        if k == 1:
            opts.extend((t, frozenset({s})) for s in others)
        else:
            for size in range(1, len(others) + 1):
                opts.extend(
                    (t, frozenset(combo))
                    for combo in itertools.combinations(others, size))
    return sorted(opts, key=lambda ts: (ts[0], sorted(ts[1])))


def _naive_options(below: tuple[str, ...], k: int) -> list[tuple[str, frozenset[str]]]:
    """Grading-shaped but otherwise unconstrained choices; the validator
    is expected to reject the bad ones."""
    opts: list[tuple[str, frozenset[str]]] = []
    for t in below:
        if k == 1:
            opts.extend((t, frozenset({s})) for s in below)
        else:
            for size in range(1, len(below) + 1):
                opts.extend(
                    (t, frozenset(combo))
                    for combo in itertools.combinations(below, size))
    return sorted(opts, key=lambda ts: (ts[0], sorted(ts[1])))


def _assemble(names, profile, chosen) -> FaceComplex:
    faces: dict[str, int] = {}
    target: dict[str, str] = {}
    sources: dict[str, frozenset[str]] = {}
    for k, n in enumerate(profile):
        for i in range(n):
            faces[names[k][i]] = k
    for k in range(1, len(profile)):
        for i, (t, srcs) in enumerate(chosen[k]):
            target[names[k][i]] = t
            sources[names[k][i]] = srcs
    return FaceComplex(faces, target, sources)


def _partial_opetope_ok(partial: FaceComplex, top: int) -> bool:
    """Necessary conditions once stratum ``top`` >= 1 is in place.

    Everything tested here concerns level top-1 (or the new faces), whose
    derived relations no later stratum can change, so pruning on them
    never loses a positive opetope.
    """
    level = top - 1
    used: set[str] = set()
    for w in partial.stratum(top):
        used |= partial.delta(w)
    if len(set(partial.stratum(level)) - used) != 1:
        return False
    plus = closed_plus(partial, level)
    if not plus.is_irreflexive():
        return False
    names = partial.stratum(level)
    if level == 0:
        for i, x in enumerate(names):
            for y in names[i + 1:]:
                if not plus.comparable(x, y):
                    return False
    else:
        minus = closed_minus(partial, level)
        for i, x in enumerate(names):
            for y in names[i + 1:]:
                if plus.comparable(x, y) and minus.comparable(x, y):
                    return False
        for y in partial.stratum(level - 1):
            for pencil in (
                [x for x in names if partial.gamma(x) == y],
                [x for x in names if y in partial.delta(x)],
            ):
                for i, x in enumerate(pencil):
                    for x2 in pencil[i + 1:]:
                        if not plus.comparable(x, x2):
                            return False
    if top >= 2:
        for x in partial.stratum(top):
            dd: set[str] = set()
            gd: set[str] = set()
            for b in partial.delta(x):
                dd |= partial.delta(b)
                gd.add(partial.gamma(b))
            if {partial.gamma(partial.gamma(x))} != gd - dd:
                return False
            if set(partial.delta(partial.gamma(x))) != dd - gd:
                return False
    return True


def _candidates(budget: EnumerationBudget, meter: _WorkMeter,
                opetopes_only: bool) -> Iterator[FaceComplex]:
    for profile in _profiles(budget):
        if opetopes_only and profile[-1] != 1:
            continue
        names = _stratum_names(profile)

        def fill(k: int, chosen: list) -> Iterator[FaceComplex]:
            if k == len(profile):
                meter.tick()
                yield _assemble(names, profile, chosen)
                return
            opts = _options(names[k - 1], k)
            if not opts:
                return
            for combo in itertools.combinations_with_replacement(opts, profile[k]):
                stage = chosen + [combo]
                if opetopes_only:
                    meter.tick()
                    partial = _assemble(names[:k + 1], profile[:k + 1], stage)
                    if not _partial_opetope_ok(partial, k):
                        continue
                yield from fill(k + 1, stage)

        yield from fill(1, [()])


def _collect(stream: Iterator[FaceComplex],
             keep=None) -> list[FaceComplex]:
    certs = set()
    for candidate in stream:
        if keep is not None and not keep(candidate):
            continue
        certs.add(canonical_form(candidate))
    ordered = sorted(certs, key=lambda c: (sum(c[0]), len(c[0]), c))
    return [complex_from_certificate(c) for c in ordered]


def enumerate_pops(budget: EnumerationBudget,
                   work_limit: Optional[int] = None) -> Iterator[FaceComplex]:
    """Every valid complex within the budget, once per isomorphism class.

    The stream is collected and sorted before being yielded, so the order
    is deterministic regardless of generation details.
    """
    meter = _WorkMeter(resolve_work_limit(work_limit))
    yield from _collect(_candidates(budget, meter, opetopes_only=False))


def enumerate_positive_opetopes(budget: EnumerationBudget,
                                work_limit: Optional[int] = None) -> Iterator[FaceComplex]:
    """The positive opetopes within the budget, once per class.

    Equivalent to filtering :func:`enumerate_pops` by the positive-opetope
    check; stratum-wise pruning merely shrinks the search, and the final
    filter is still the real checker.
    """
    meter = _WorkMeter(resolve_work_limit(work_limit))
    yield from _collect(
        _candidates(budget, meter, opetopes_only=True),
        keep=lambda c: is_positive_opetope(c).passed)


def naive_enumerate_pops(budget: EnumerationBudget,
                         work_limit: Optional[int] = None) -> list[FaceComplex]:
    """Independent recount: all labelled assignments, filtered afterwards.

    Unlike :func:`enumerate_pops` this does not bake the base axioms into
    the generator (beyond grading, which is structural): faces may collide
    with their own target and dimension-1 faces still get single sources
    drawn with replacement.  The validator does the rejecting.
    """
    meter = _WorkMeter(resolve_work_limit(work_limit))
    certs = set()
    for profile in _profiles(budget):
        names = _stratum_names(profile)
        spaces = []
        for k in range(1, len(profile)):
            opts = _naive_options(names[k - 1], k)
            spaces.append(list(itertools.product(opts, repeat=profile[k])))
        for assignment in itertools.product(*spaces):
            meter.tick()
            faces = {}
            target = {}
            sources = {}
            for k, n in enumerate(profile):
                for i in range(n):
                    faces[names[k][i]] = k
            for k_index, stratum_choice in enumerate(assignment):
                k = k_index + 1
                for i, (t, srcs) in enumerate(stratum_choice):
                    target[names[k][i]] = t
                    sources[names[k][i]] = srcs
            if not validate_complex_data(faces, target, sources).passed:
                continue
            certs.add(canonical_form(FaceComplex(faces, target, sources)))
    ordered = sorted(certs, key=lambda c: (sum(c[0]), len(c[0]), c))
    return [complex_from_certificate(c) for c in ordered]
