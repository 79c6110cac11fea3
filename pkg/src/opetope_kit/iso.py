"""Canonical forms and isomorphism testing for small complexes.

The canonical form of a complex is the lexicographically least encoding of
its strata and covering data over all dimension-preserving relabellings.
It is found by iterated colour refinement (on dimension, boundary colours
and coboundary colours) followed by branching over the members of the
first unresolved colour class; literally interchangeable faces are
branched only once.  Instance sizes here are tiny, so clarity wins over
asymptotics.
"""

from __future__ import annotations

from typing import Optional

from .core import MINUS, PLUS, FaceComplex

Certificate = tuple


def _refine(complex_: FaceComplex, colors: dict[str, int]) -> dict[str, int]:
    """Stable colour refinement; colour order refines the previous one."""
    faces = complex_.faces()
    ncolors = len(set(colors.values()))
    while True:
        sigs = {}
        for x in faces:
            if complex_.dim(x) >= 1:
                down = (colors[complex_.gamma(x)],
                        tuple(sorted(colors[y] for y in complex_.delta(x))))
            else:
                down = (-1, ())
            ups = complex_.cofaces(x)
            up_plus = tuple(sorted(colors[w] for w, s in ups if s == PLUS))
            up_minus = tuple(sorted(colors[w] for w, s in ups if s == MINUS))
            sigs[x] = (colors[x], down, up_plus, up_minus)
        ranking = {sig: i for i, sig in enumerate(sorted(set(sigs.values())))}
        refined = {x: ranking[sigs[x]] for x in faces}
        nrefined = len(set(refined.values()))
        if nrefined == ncolors:
            return refined
        colors, ncolors = refined, nrefined


def _individualize(complex_: FaceComplex, colors: dict[str, int], chosen: str) -> dict[str, int]:
    marked = {x: (c, 1 if x != chosen else 0) for x, c in colors.items()}
    ranking = {m: i for i, m in enumerate(sorted(set(marked.values())))}
    return _refine(complex_, {x: ranking[m] for x, m in marked.items()})


def _swap_key(complex_: FaceComplex, x: str):
    """Faces with equal keys are interchangeable by an automorphism."""
    if complex_.dim(x) >= 1:
        down = (complex_.gamma(x), complex_.delta(x))
    else:
        down = None
    return (down, complex_.cofaces(x))


def _certificate(complex_: FaceComplex, labels: dict[str, int]) -> Certificate:
    profile = tuple(len(complex_.stratum(k)) for k in range(complex_.dimension + 1))
    rows = []
    for k in range(1, complex_.dimension + 1):
        stratum = sorted(complex_.stratum(k), key=labels.__getitem__)
        rows.append(tuple(
            (labels[complex_.gamma(x)],
             tuple(sorted(labels[y] for y in complex_.delta(x))))
            for x in stratum))
    return (profile, tuple(rows))


def _search(complex_: FaceComplex, colors: dict[str, int]):
    cells: dict[int, list[str]] = {}
    for x in sorted(colors):
        cells.setdefault(colors[x], []).append(x)
    ordered = [cells[c] for c in sorted(cells)]
    target_cell = next((cell for cell in ordered if len(cell) > 1), None)
    if target_cell is None:
        labels = {x: colors[x] for x in colors}
        return _certificate(complex_, labels), labels
    best = None
    seen_keys = set()
    for x in target_cell:
        key = _swap_key(complex_, x)
        if key in seen_keys:
            continue
        seen_keys.add(key)
        result = _search(complex_, _individualize(complex_, colors, x))
        if best is None or result[0] < best[0]:
            best = result
    return best


def canonical_labeling(complex_: FaceComplex) -> tuple[Certificate, dict[str, int]]:
    """The least certificate together with one labelling realizing it."""
    initial = {x: complex_.dim(x) for x in complex_.faces()}
    return _search(complex_, _refine(complex_, initial))


def canonical_form(complex_: FaceComplex) -> Certificate:
    """A hashable value equal for exactly the isomorphic complexes."""
    return canonical_labeling(complex_)[0]


def canonical_face_name(k: int, i: int) -> str:
    """The name given to face ``i`` of dimension ``k`` in rebuilt complexes."""
    return f"x{k}_{i:02d}"


def complex_from_certificate(cert: Certificate) -> FaceComplex:
    """Rebuild the canonical representative named ``x<dim>_<index>``."""
    profile, rows = cert
    offsets = [0]
    for count in profile:
        offsets.append(offsets[-1] + count)

    def name_of(label: int) -> str:
        for k in range(len(profile)):
            if label < offsets[k + 1]:
                return canonical_face_name(k, label - offsets[k])
        raise ValueError(f"label {label} out of range")

    faces = {}
    for k, count in enumerate(profile):
        for i in range(count):
            faces[canonical_face_name(k, i)] = k
    target = {}
    sources = {}
    for k in range(1, len(profile)):
        for i, (gamma_label, delta_labels) in enumerate(rows[k - 1]):
            me = canonical_face_name(k, i)
            target[me] = name_of(gamma_label)
            sources[me] = frozenset(name_of(lbl) for lbl in delta_labels)
    return FaceComplex(faces, target, sources)


def canonical_complex(complex_: FaceComplex) -> FaceComplex:
    """The canonical representative of the isomorphism class."""
    return complex_from_certificate(canonical_form(complex_))


def are_isomorphic(left: FaceComplex, right: FaceComplex) -> Optional[dict[str, str]]:
    """A dimension- and boundary-preserving bijection, or None.

    The witness sends each face of ``left`` to the face of ``right``
    carrying the same canonical label, so it is deterministic.
    """
    cert_left, lab_left = canonical_labeling(left)
    cert_right, lab_right = canonical_labeling(right)
    if cert_left != cert_right:
        return None
    by_label = {label: face for face, label in lab_right.items()}
    return {face: by_label[label] for face, label in lab_left.items()}
