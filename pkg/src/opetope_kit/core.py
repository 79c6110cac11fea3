"""Face complexes: finitely many graded faces with signed covering data.

A face complex stores named faces, each with a dimension, and for every
face of dimension >= 1 a single *target* face together with a nonempty set
of *source* faces, all one dimension below.  The same data supports two
interchangeable readings:

* as a graded poset whose covering relation carries a sign: ``y <- x``
  when ``y`` is a source of ``x`` and ``y <+ x`` when ``y`` is the target;
* as a stack of per-dimension tables: a target function and a source
  relation from each stratum to the one below.

Construction is eager: a ``FaceComplex`` value existing means every base
axiom holds (grading, one target and at least one source per face, no face
that is both source and target of the same face, single-source faces in
dimension 1).  Everything downstream relies on that guarantee.  Instances
are immutable and safe to share between threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping

from .errors import (
    DimensionOutOfRange,
    DimensionTooHigh,
    InvalidComplex,
    PreconditionViolation,
    UnknownFaceReference,
    ZeroDimensionalFace,
)

_NAME_RE = re.compile(r"[\w']+")

MINUS = "-"
PLUS = "+"


def sign_product(a: str, b: str) -> str:
    """Multiply two signs written as '+' / '-'."""
    return PLUS if a == b else MINUS


def opposite(sign: str) -> str:
    return MINUS if sign == PLUS else PLUS


def is_valid_face_name(name: object) -> bool:
    """Face names are nonempty runs of letters, digits, ``_`` and ``'``."""
    return isinstance(name, str) and bool(_NAME_RE.fullmatch(name))


@dataclass(frozen=True)
class Violation:
    """One failed axiom with the faces that witness the failure."""

    axiom: str
    witnesses: tuple[str, ...]
    detail: str

    def to_dict(self) -> dict:
        return {
            "axiom": self.axiom,
            "witnesses": list(self.witnesses),
            "detail": self.detail,
        }


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of a validation run: passes exactly when no violations."""

    violations: tuple[Violation, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def failed_axioms(self) -> tuple[str, ...]:
        return tuple(sorted({v.axiom for v in self.violations}))

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "violations": [v.to_dict() for v in self.violations],
        }

    @staticmethod
    def merge(*reports: "AxiomReport") -> "AxiomReport":
        out: list[Violation] = []
        for rep in reports:
            out.extend(rep.violations)
        return AxiomReport(tuple(out))


def _sorted_violations(violations: list[Violation]) -> tuple[Violation, ...]:
    return tuple(sorted(violations, key=lambda v: (v.axiom, v.witnesses, v.detail)))


def _normalize_faces(faces) -> list[tuple[object, object]]:
    if isinstance(faces, Mapping):
        return sorted(faces.items(), key=lambda kv: (str(kv[0])))
    return [tuple(item) for item in faces]


def _validate(faces, target, sources):
    """Check the base axioms; return (violations, dims, target, sources)."""
    bad: list[Violation] = []
    items = _normalize_faces(faces)

    dims: dict[str, int] = {}
    for entry in items:
        if len(entry) != 2:
            bad.append(Violation("InvalidFaceName", (), f"malformed face entry {entry!r}"))
            continue
        name, dim = entry
        if not is_valid_face_name(name):
            bad.append(Violation("InvalidFaceName", (), f"bad face name {name!r}"))
            continue
        if name in dims:
            bad.append(Violation("DuplicateFace", (name,), f"face {name} declared twice"))
            continue
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
            bad.append(Violation("InvalidDimension", (name,), f"face {name} has dimension {dim!r}"))
            continue
        dims[name] = dim

    if not items:
        bad.append(Violation("EmptyComplex", (), "a complex must contain at least one face"))

    tgt: dict[str, str] = {}
    for x in sorted(target, key=str):
        t = target[x]
        if x not in dims:
            bad.append(Violation("UnknownFaceReference", (str(x),), f"target declared for unknown face {x!r}"))
            continue
        if dims[x] == 0:
            bad.append(Violation("GradingViolation", (x,), f"target declared for dimension-0 face {x}"))
            continue
        if t not in dims:
            bad.append(Violation("UnknownFaceReference", (x,), f"target of {x} is unknown face {t!r}"))
            continue
        if dims[t] != dims[x] - 1:
            bad.append(Violation(
                "GradingViolation", (t, x),
                f"target of {x} (dim {dims[x]}) is {t} of dim {dims[t]}"))
            continue
        tgt[x] = t

    src: dict[str, frozenset[str]] = {}
    for x in sorted(sources, key=str):
        entries = sources[x]
        if x not in dims:
            bad.append(Violation("UnknownFaceReference", (str(x),), f"sources declared for unknown face {x!r}"))
            continue
        if dims[x] == 0:
            bad.append(Violation("GradingViolation", (x,), f"sources declared for dimension-0 face {x}"))
            continue
        seen: set[str] = set()
        ok = True
        for y in entries:
            if y not in dims:
                bad.append(Violation("UnknownFaceReference", (x,), f"source of {x} is unknown face {y!r}"))
                ok = False
            elif y in seen:
                bad.append(Violation("DuplicateSource", (y, x), f"face {y} listed twice among sources of {x}"))
                ok = False
            else:
                seen.add(y)
                if dims[y] != dims[x] - 1:
                    bad.append(Violation(
                        "GradingViolation", (y, x),
                        f"source {y} of {x} (dim {dims[x]}) has dim {dims[y]}"))
                    ok = False
        if ok:
            src[x] = frozenset(seen)

    for x in sorted(dims, key=lambda n: (dims[n], n)):
        if dims[x] == 0:
            continue
        has_t = x in tgt
        has_s = x in src
        if x not in target:
            bad.append(Violation("MissingTarget", (x,), f"face {x} has no target"))
        if x not in sources or (has_s and not src[x]):
            bad.append(Violation("EmptySources", (x,), f"face {x} has no sources"))
        if has_t and has_s and tgt[x] in src[x]:
            bad.append(Violation(
                "SignClash", (tgt[x], x),
                f"face {tgt[x]} is both the target and a source of {x}"))
        if dims[x] == 1 and has_s and len(src[x]) > 1:
            bad.append(Violation(
                "Delta0NotFunctional", (x,),
                f"dimension-1 face {x} has {len(src[x])} sources"))

    return _sorted_violations(bad), dims, tgt, src


def validate_complex_data(faces, target, sources) -> AxiomReport:
    """Run the base-axiom validation without constructing a complex."""
    bad, _, _, _ = _validate(faces, target, sources)
    return AxiomReport(bad)


class FaceComplex:
    """An immutable, validated face complex.

    ``faces`` maps names to dimensions (or is an iterable of pairs),
    ``target`` maps each dim >= 1 face to its target and ``sources`` to its
    nonempty source set.  Raises :class:`InvalidComplex` when any base
    axiom fails; the exception carries the full report.
    """

    __slots__ = ("_dims", "_strata", "_target", "_sources", "_above", "_key", "_hash")

    def __init__(self, faces, target, sources):
        bad, dims, tgt, src = _validate(faces, target, sources)
        if bad:
            raise InvalidComplex(AxiomReport(bad))
        self._dims = dims
        strata: dict[int, tuple[str, ...]] = {}
        for k in range(max(dims.values()) + 1):
            strata[k] = tuple(sorted(n for n, d in dims.items() if d == k))
        self._strata = strata
        self._target = tgt
        self._sources = src
        above: dict[str, list[tuple[str, str]]] = {n: [] for n in dims}
        for x in sorted(tgt):
            above[tgt[x]].append((x, PLUS))
        for x in sorted(src):
            for y in sorted(src[x]):
                above[y].append((x, MINUS))
        self._above = {n: tuple(sorted(v)) for n, v in above.items()}
        self._key = (
            tuple(sorted(dims.items())),
            tuple(sorted(tgt.items())),
            tuple(sorted((x, tuple(sorted(s))) for x, s in src.items())),
        )
        self._hash = hash(self._key)

    # -- basic queries -------------------------------------------------

    def __contains__(self, name: str) -> bool:
        return name in self._dims

    def __len__(self) -> int:
        return len(self._dims)

    def __eq__(self, other) -> bool:
        return isinstance(other, FaceComplex) and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"FaceComplex({len(self)} faces, dim {self.dimension})"

    @property
    def dimension(self) -> int:
        """The largest face dimension present."""
        return max(self._strata)

    def faces(self) -> tuple[str, ...]:
        """All face names, ordered by (dimension, name)."""
        out = []
        for k in range(self.dimension + 1):
            out.extend(self._strata[k])
        return tuple(out)

    def stratum(self, k: int) -> tuple[str, ...]:
        """The sorted faces of dimension ``k`` (empty above the top)."""
        if k < 0:
            return ()
        return self._strata.get(k, ())

    def dim(self, name: str) -> int:
        self._check(name)
        return self._dims[name]

    def _check(self, name: str) -> None:
        if name not in self._dims:
            raise UnknownFaceReference(f"unknown face {name!r}")

    # -- covers --------------------------------------------------------

    def gamma(self, name: str) -> str:
        """The target of a face of dimension >= 1."""
        self._check(name)
        if self._dims[name] == 0:
            raise ZeroDimensionalFace(f"face {name} has no target")
        return self._target[name]

    def delta(self, name: str) -> frozenset[str]:
        """The source set of a face of dimension >= 1."""
        self._check(name)
        if self._dims[name] == 0:
            raise ZeroDimensionalFace(f"face {name} has no sources")
        return self._sources[name]

    def iterated_target(self, name: str, k: int) -> str:
        """Apply the target map until reaching dimension ``k``."""
        self._check(name)
        if k < 0:
            raise DimensionOutOfRange(f"dimension {k} is negative")
        if k > self._dims[name]:
            raise DimensionTooHigh(
                f"face {name} has dim {self._dims[name]} < {k}")
        x = name
        while self._dims[x] > k:
            x = self._target[x]
        return x

    def cover_sign(self, y: str, x: str) -> str | None:
        """'-' or '+' when ``y`` is covered by ``x``, else None."""
        self._check(y)
        self._check(x)
        if self._dims.get(x, 0) >= 1:
            if self._target[x] == y:
                return PLUS
            if y in self._sources[x]:
                return MINUS
        return None

    def covers(self, x: str) -> tuple[tuple[str, str], ...]:
        """Faces covered by ``x`` as sorted (face, sign) pairs."""
        self._check(x)
        if self._dims[x] == 0:
            return ()
        out = [(y, MINUS) for y in sorted(self._sources[x])]
        out.append((self._target[x], PLUS))
        return tuple(sorted(out))

    def cofaces(self, y: str) -> tuple[tuple[str, str], ...]:
        """Faces covering ``y`` as sorted (face, sign) pairs."""
        self._check(y)
        return self._above[y]

    def downset(self, x: str) -> frozenset[str]:
        """All faces reachable downward from ``x``, including ``x``."""
        self._check(x)
        seen = {x}
        todo = [x]
        while todo:
            cur = todo.pop()
            for y, _ in self.covers(cur):
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return frozenset(seen)

    # -- export / rebuild ----------------------------------------------

    def to_data(self) -> tuple[dict[str, int], dict[str, str], dict[str, frozenset[str]]]:
        """Copies of the raw (faces, target, sources) maps."""
        return dict(self._dims), dict(self._target), dict(self._sources)

    def relabel(self, mapping: Mapping[str, str]) -> "FaceComplex":
        """Rebuild the complex with faces renamed through a bijection."""
        if set(mapping) != set(self._dims):
            raise UnknownFaceReference("relabelling must cover every face exactly once")
        if len(set(mapping.values())) != len(mapping):
            raise PreconditionViolation("relabelling is not injective")
        faces = {mapping[n]: d for n, d in self._dims.items()}
        target = {mapping[x]: mapping[t] for x, t in self._target.items()}
        sources = {mapping[x]: frozenset(mapping[y] for y in s)
                   for x, s in self._sources.items()}
        return FaceComplex(faces, target, sources)


def build_complex(faces, target, sources):
    """Validate and build; returns the complex, or the failure report."""
    try:
        return FaceComplex(faces, target, sources)
    except InvalidComplex as err:
        return err.report


# -- the two presentation views ----------------------------------------


@dataclass
class HypergraphView:
    """Per-dimension tables: ``gamma[k]`` / ``delta[k]`` map the faces of
    dimension ``k + 1`` to their target / source set in dimension ``k``.
    """

    strata: dict[int, tuple[str, ...]]
    gamma: dict[int, dict[str, str]]
    delta: dict[int, dict[str, frozenset[str]]]


def to_hypergraph_view(complex_: FaceComplex) -> HypergraphView:
    """Slice a complex into its per-dimension target/source tables."""
    strata = {k: complex_.stratum(k) for k in range(complex_.dimension + 1)}
    gamma: dict[int, dict[str, str]] = {}
    delta: dict[int, dict[str, frozenset[str]]] = {}
    for k in range(complex_.dimension):
        gamma[k] = {x: complex_.gamma(x) for x in strata[k + 1]}
        delta[k] = {x: complex_.delta(x) for x in strata[k + 1]}
    return HypergraphView(strata, gamma, delta)


def from_hypergraph_view(view: HypergraphView):
    """Reassemble a complex from per-dimension tables.

    Runs the full base validation again, so malformed tables come back as
    the usual report rather than a partially built value.
    """
    faces: list[tuple[str, int]] = []
    for k in sorted(view.strata):
        faces.extend((name, k) for name in view.strata[k])
    target: dict[str, str] = {}
    sources: dict[str, frozenset[str]] = {}
    for k in sorted(view.gamma):
        target.update(view.gamma[k])
    for k in sorted(view.delta):
        sources.update(view.delta[k])
    return build_complex(faces, target, sources)


# -- morphisms ----------------------------------------------------------


@dataclass(frozen=True)
class Morphism:
    """A total face mapping between two complexes, validated separately."""

    source: FaceComplex
    target: FaceComplex
    mapping: Mapping[str, str]

    def __call__(self, name: str) -> str:
        return self.mapping[name]


def identity_morphism(complex_: FaceComplex) -> Morphism:
    return Morphism(complex_, complex_, {n: n for n in complex_.faces()})


def compose_morphisms(first: Morphism, second: Morphism) -> Morphism:
    """The morphism doing ``first`` then ``second``."""
    if first.target is not second.source and first.target != second.source:
        raise PreconditionViolation("morphisms do not compose: middle complexes differ")
    mapping = {a: second.mapping[b] for a, b in first.mapping.items()}
    return Morphism(first.source, second.target, mapping)


def validate_morphism(m: Morphism) -> AxiomReport:
    """Check the three morphism laws; structural defects raise instead.

    The mapping must be total on the source complex and land in the target
    complex (``UnknownFaceReference`` otherwise).  The report then records
    any face at which dimensions, targets, or the source-set bijection
    fail.
    """
    src, dst = m.source, m.target
    for a in m.mapping:
        if a not in src:
            raise UnknownFaceReference(f"map mentions unknown source face {a!r}")
    for a in src.faces():
        if a not in m.mapping:
            raise UnknownFaceReference(f"map is not total: missing {a!r}")
        if m.mapping[a] not in dst:
            raise UnknownFaceReference(
                f"map sends {a} to unknown face {m.mapping[a]!r}")

    bad: list[Violation] = []
    for a in src.faces():
        if src.dim(a) != dst.dim(m.mapping[a]):
            bad.append(Violation(
                "dimension-preserving", (a,),
                f"{a} has dim {src.dim(a)} but {m.mapping[a]} has dim {dst.dim(m.mapping[a])}"))
    for a in src.faces():
        if src.dim(a) == 0:
            continue
        fa = m.mapping[a]
        if dst.dim(fa) == 0:
            continue  # already reported as a dimension failure
        if dst.gamma(fa) != m.mapping[src.gamma(a)]:
            bad.append(Violation(
                "target-commuting", (a,),
                f"target of {fa} is {dst.gamma(fa)}, expected image {m.mapping[src.gamma(a)]}"))
        image = [m.mapping[y] for y in sorted(src.delta(a))]
        if len(set(image)) != len(image) or set(image) != set(dst.delta(fa)):
            bad.append(Violation(
                "source-bijective", (a,),
                f"sources of {a} do not map bijectively onto sources of {fa}"))
    return AxiomReport(_sorted_violations(bad))
