"""Homology of framed-link surgery presentations.

A surgery presentation is a symmetric integer linking matrix (framings on
the diagonal) together with named classes written in the meridian basis.
First homology of the presented manifold is the cokernel of the matrix,
computed through an exact Smith normal form that tracks the change of
basis, so named classes can be followed into the canonical decomposition
Z^rank + Z/d_1 + ... + Z/d_k (d_1 | d_2 | ...).

`cobordism_meridian_check` verifies the two-sided meridian condition for
a homology cobordism built from such a presentation: the first meridian
class must equal p times the second integrally, and after inverting p
the common class must span a free rank-one summand, so that the two
meridians differ by a positive unit of Z[1/p].
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class ClassMismatch(ValueError):
    """The tracked classes violate the meridian condition; carries evidence.

    Attributes: residual, the offending coordinate vector (or None when the
    failure is about summand shape rather than an equation).
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _find_pivot(A, t):
    """Smallest nonzero absolute value in A[t:][t:], ties row-major."""
    best = None
    for i in range(t, len(A)):
        for j in range(t, len(A[0])):
            if A[i][j] != 0 and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                best = (i, j)
    return best


def smith_normal_form(M):
    """Diagonalize an integer matrix: U * M * V = D.

    U and V are unimodular; D is diagonal, nonnegative, and its nonzero
    entries form a divisibility chain d_1 | d_2 | ... followed by zeros.
    The pivot rule (smallest nonzero absolute value, ties in row-major
    order) makes the transforms deterministic.

    Returns (U, D, V) as lists of lists.
    """
    m = len(M)
    n = len(M[0]) if m else 0
    A = [[int(x) for x in row] for row in M]
    if any(len(row) != n for row in A):
        raise ValueError("matrix rows have unequal lengths")
    U = _identity(m)
    V = _identity(n)

    def row_swap(i, k):
        A[i], A[k] = A[k], A[i]
        U[i], U[k] = U[k], U[i]

    def col_swap(j, k):
        for row in A:
            row[j], row[k] = row[k], row[j]
        for row in V:
            row[j], row[k] = row[k], row[j]

    def row_sub(i, k, q):
        # row_i -= q * row_k
        A[i] = [a - q * b for a, b in zip(A[i], A[k])]
        U[i] = [a - q * b for a, b in zip(U[i], U[k])]

    def col_sub(j, k, q):
        # col_j -= q * col_k
        for row in A:
            row[j] -= q * row[k]
        for row in V:
            row[j] -= q * row[k]

    t = 0
    while t < min(m, n):
        pivot = _find_pivot(A, t)
        if pivot is None:
            break
        row_swap(t, pivot[0])
        col_swap(t, pivot[1])
        while True:
            for i in range(t + 1, m):
                if A[i][t]:
                    row_sub(i, t, A[i][t] // A[t][t])
            left = [i for i in range(t + 1, m) if A[i][t]]
            if left:
                # a remainder smaller than the pivot surfaced; promote it
                row_swap(t, min(left, key=lambda i: (abs(A[i][t]), i)))
                continue
            for j in range(t + 1, n):
                if A[t][j]:
                    col_sub(j, t, A[t][j] // A[t][t])
            left = [j for j in range(t + 1, n) if A[t][j]]
            if left:
                col_swap(t, min(left, key=lambda j: (abs(A[t][j]), j)))
                continue
            # pivot must divide the rest of the submatrix for the chain
            bad = next(
                (i for i in range(t + 1, m)
                 if any(A[i][j] % A[t][t] for j in range(t + 1, n))),
                None,
            )
            if bad is None:
                break
            row_sub(t, bad, -1)
        t += 1
    for i in range(min(m, n)):
        if A[i][i] < 0:
            A[i] = [-x for x in A[i]]
            U[i] = [-x for x in U[i]]
    return U, A, V


class SurgeryPresentation:
    """Symmetric linking matrix plus named classes in the meridian basis."""

    def __init__(self, matrix, classes, name=None):
        self.matrix = [[int(x) for x in row] for row in matrix]
        n = len(self.matrix)
        for row in self.matrix:
            if len(row) != n:
                raise ValueError("linking matrix must be square")
        for i in range(n):
            for j in range(i):
                if self.matrix[i][j] != self.matrix[j][i]:
                    raise ValueError(
                        f"linking matrix not symmetric at ({i}, {j})"
                    )
        self.classes = {}
        for label, vector in dict(classes).items():
            vec = tuple(int(x) for x in vector)
            if len(vec) != n:
                raise ValueError(
                    f"class {label!r} has length {len(vec)}, matrix has {n}"
                )
            self.classes[str(label)] = vec
        self.name = name

    @property
    def size(self):
        return len(self.matrix)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return (
            f"SurgeryPresentation({self.size}x{self.size}{label}, "
            f"classes={sorted(self.classes)})"
        )


@dataclass(frozen=True)
class AbelianGroupDescription:
    """Canonical form Z^rank + Z/d_1 + ... + Z/d_k with tracked images.

    Class images are coordinate tuples, torsion coordinates first (in
    chain order, each reduced into [0, d_i)), then the free coordinates.
    """

    rank: int
    torsion: tuple[int, ...]
    images: dict[str, tuple[int, ...]]

    def __post_init__(self):
        for i, d in enumerate(self.torsion):
            if d < 2:
                raise ValueError(f"invariant factor {d} < 2")
            if i and self.torsion[i] % self.torsion[i - 1]:
                raise ValueError("invariant factors fail the divisibility chain")

    def describe(self):
        parts = [f"Z/{d}" for d in self.torsion] + ["Z"] * self.rank
        return " + ".join(parts) if parts else "0"


def first_homology(presentation):
    """Cokernel of the linking matrix, with class images tracked."""
    L = presentation.matrix
    n = len(L)
    U, D, _ = smith_normal_form(L)
    diag = [D[i][i] for i in range(n)]
    torsion_pos = [i for i, d in enumerate(diag) if d >= 2]
    free_pos = [i for i, d in enumerate(diag) if d == 0]
    images = {}
    for label, vector in presentation.classes.items():
        w = [sum(U[i][j] * vector[j] for j in range(n)) for i in range(n)]
        images[label] = tuple(
            [w[i] % diag[i] for i in torsion_pos] + [w[i] for i in free_pos]
        )
    return AbelianGroupDescription(
        rank=len(free_pos),
        torsion=tuple(diag[i] for i in torsion_pos),
        images=images,
    )


def localize(group, p):
    """Invert p: strip the p-primary part of every invariant factor.

    Rank is unchanged; torsion coordinates of class images are reduced
    into the surviving factors.  Idempotent; p = 1 is the identity.
    """
    if not isinstance(p, int) or p < 1:
        raise ValueError(f"need an integer p >= 1, got {p!r}")
    if p == 1:
        return group
    kept = []   # (old index, reduced factor)
    for i, d in enumerate(group.torsion):
        while d % p == 0:
            d //= p
        if d >= 2:
            kept.append((i, d))
    k = len(group.torsion)
    images = {
        label: tuple(
            [coords[i] % d for i, d in kept] + list(coords[k:])
        )
        for label, coords in group.images.items()
    }
    return AbelianGroupDescription(
        rank=group.rank,
        torsion=tuple(d for _, d in kept),
        images=images,
    )


@dataclass(frozen=True)
class MeridianCheck:
    """Successful verification of the rel-meridians condition."""

    class0: str
    class1: str
    p: int
    homology: AbelianGroupDescription
    localized: AbelianGroupDescription
    notes: tuple[str, ...]


def cobordism_meridian_check(presentation, name0, name1, p):
    """Verify that class name0 equals p times class name1, honestly.

    Two conditions, matching "homology cobordant rel meridians" over
    Z[1/p]: (i) in the integral homology of the presentation the classes
    satisfy image(name0) = p * image(name1); (ii) after inverting p the
    common class spans a free rank-one summand (torsion components zero,
    content a power of p), unless both images already vanish.  Raises
    ClassMismatch with the residual as evidence when either fails.
    """
    if not isinstance(p, int) or p < 1:
        raise ValueError(f"need an integer p >= 1, got {p!r}")
    for label in (name0, name1):
        if label not in presentation.classes:
            raise ValueError(f"presentation has no class named {label!r}")
    group = first_homology(presentation)
    w0 = group.images[name0]
    w1 = group.images[name1]
    k = len(group.torsion)
    residual = tuple(
        (a - p * b) % d if i < k else a - p * b
        for i, (a, b, d) in enumerate(
            zip(w0, w1, group.torsion + (0,) * group.rank)
        )
    )
    if any(residual):
        raise ClassMismatch(
            f"{name0} != {p} * {name1} in {group.describe()}: "
            f"residual {residual}",
            residual=residual,
        )
    localized = localize(group, p)
    v0 = localized.images[name0]
    v1 = localized.images[name1]
    notes = [f"integral check: {name0} = {p} * {name1} in {group.describe()}"]
    if any(v0) or any(v1):
        kt = len(localized.torsion)
        if any(v1[:kt]):
            raise ClassMismatch(
                f"{name1} has torsion components {v1[:kt]} after inverting "
                f"{p}; it cannot span a free summand",
                residual=v1,
            )
        content = math.gcd(*v1[kt:]) if v1[kt:] else 0
        reduced = content
        while p > 1 and reduced and reduced % p == 0:
            reduced //= p
        if reduced != 1:
            raise ClassMismatch(
                f"{name1} has content {content} after inverting {p}, not a "
                f"power of {p}; it spans a finite-index subgroup, not a "
                f"summand",
                residual=v1,
            )
        notes.append(
            f"after inverting {p}: {name1} spans a free rank-one summand "
            f"of {localized.describe()}, and {name0} = {p} * {name1} "
            f"differs from it by the unit {p}"
        )
    else:
        notes.append(
            f"both classes vanish in {localized.describe()}; "
            "condition holds trivially"
        )
    return MeridianCheck(
        class0=name0,
        class1=name1,
        p=p,
        homology=group,
        localized=localized,
        notes=tuple(notes),
    )


def satellite_cobordism_presentation(p):
    """Linking-matrix model of the satellite cobordism's middle level.

    Components: the companion K and the pattern axis P-tilde, both
    0-framed, plus the 0-framed 2-handle H that links K once (negatively,
    so the induced relation reads mu_K = +p * mu_Ptilde) and P-tilde p
    times.  Its homology is Z generated by mu_Ptilde, with mu_K mapping
    to p times the generator.
    """
    if not isinstance(p, int) or p < 1:
        raise ValueError(f"need an integer p >= 1, got {p!r}")
    return SurgeryPresentation(
        [[0, 0, -1], [0, 0, p], [-1, p, 0]],
        {"mu_K": (1, 0, 0), "mu_Ptilde": (0, 1, 0)},
        name=f"satellite-cobordism-p{p}",
    )


def presentation_from_text(text):
    """Parse the presentation file format.

    `M n` starts an n x n matrix given on the following n lines; `C name
    v1 .. vn` declares a tracked class.  `#` starts a comment.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    matrix = None
    classes = {}
    i = 0
    while i < len(lines):
        lineno, line = lines[i]
        parts = line.split()
        if parts[0] == "M":
            if matrix is not None:
                raise ValueError(f"line {lineno}: second matrix block")
            try:
                n = int(parts[1])
            except (IndexError, ValueError):
                raise ValueError(f"line {lineno}: M needs a size") from None
            rows = []
            for k in range(n):
                if i + 1 + k >= len(lines):
                    raise ValueError(f"line {lineno}: matrix needs {n} rows")
                row_lineno, row_line = lines[i + 1 + k]
                try:
                    row = [int(x) for x in row_line.split()]
                except ValueError:
                    raise ValueError(
                        f"line {row_lineno}: matrix rows are integers"
                    ) from None
                if len(row) != n:
                    raise ValueError(
                        f"line {row_lineno}: expected {n} entries, got {len(row)}"
                    )
                rows.append(row)
            matrix = rows
            i += 1 + n
        elif parts[0] == "C":
            if len(parts) < 2:
                raise ValueError(f"line {lineno}: C needs a name")
            try:
                classes[parts[1]] = [int(x) for x in parts[2:]]
            except ValueError:
                raise ValueError(
                    f"line {lineno}: class coordinates are integers"
                ) from None
            i += 1
        else:
            raise ValueError(f"line {lineno}: unknown record {parts[0]!r}")
    if matrix is None:
        raise ValueError("no matrix block (M n) found")
    return SurgeryPresentation(matrix, classes)


def presentation_to_text(presentation):
    """Serialize a presentation; round-trips through presentation_from_text."""
    lines = [f"M {presentation.size}"]
    lines.extend(" ".join(str(x) for x in row) for row in presentation.matrix)
    for label in sorted(presentation.classes):
        coords = " ".join(str(x) for x in presentation.classes[label])
        lines.append(f"C {label} {coords}".rstrip())
    return "\n".join(lines) + "\n"
