"""Legendrian front diagrams and the slice-genus bounds they certify.

A front is encoded as an ordered list of events read left to right, each
acting on the current stack of strands (position 0 on top):

    ("L", i)  left cusp inserting two strands at positions i, i+1
    ("R", i)  right cusp merging the strands at positions i, i+1
    ("X", i)  crossing swapping the strands at positions i, i+1

A closed front starts and ends with zero strands.  A front with
``seam_strands = n > 0`` lives in an annulus: it starts and ends with n
strands, and position j on the right edge is glued back to position j on
the left edge.  Annular fronts model patterns in a solid torus.

Orientations are propagated from the marked direction of segment 0
(east = rightward).  Over/under data at crossings is not recorded: the
crossing sign, the cusp up/down classification, and hence tb and rot
depend only on the horizontal directions of the strands involved:

  * a crossing is positive exactly when its two strands point in the
    same horizontal direction;
  * a left cusp counts as downward when its upper branch points west,
    a right cusp as downward when its upper branch points east.

From these, tb = writhe - (#cusps)/2 and rot = (#downward left cusps)
- (#upward right cusps).  The slice-Bennequin inequality and its
refinements through tau and s turn (tb, rot) of a front into lower
bounds for the smooth four-genus; `satellite_genus_pipeline` chains
stabilization, the satellite formulas of Ng, and those bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cabling import KnotProfile

EAST = "E"
WEST = "W"

LEFT_CUSP = "L"
RIGHT_CUSP = "R"
CROSSING = "X"

SATELLITE_FORMULA_CITATION = (
    "Ng, 'On arc index and maximal Thurston-Bennequin number', Remark 2.4"
)
SLICE_BENNEQUIN_TAU_CITATION = (
    "Plamenevskaya, 'Bounds for the Thurston-Bennequin number from Floer homology'"
)
SLICE_BENNEQUIN_S_CITATION = (
    "Plamenevskaya, 'Transverse knots and Khovanov homology'; "
    "Shumakovitch, 'Rasmussen invariant, slice-Bennequin inequality, and sliceness'"
)


class FrontError(ValueError):
    """Malformed front encoding: bad event, bad position, bad marker."""


class NonClosed(FrontError):
    """Front does not close up (strand count does not return to the seam)."""


class MultiComponent(FrontError):
    """Front traces more than one closed curve."""


class HypothesisNotMet(ValueError):
    """A pipeline hypothesis fails for the supplied data."""


@dataclass(frozen=True)
class LegendrianInvariants:
    """Classical invariants of an oriented front.

    Formula-level results (stabilize, satellite_invariants) populate only
    tb and rot; diagram-level counts stay None there.
    """

    tb: int
    rot: int
    writhe: int | None = None
    cusps: int | None = None
    down_left_cusps: int | None = None
    up_right_cusps: int | None = None


class FrontDiagram:
    """An oriented front, validated and analyzed at construction.

    Parameters
    ----------
    events : iterable of (kind, position) pairs
    seam_strands : number of strands crossing the annulus seam (0 = closed
        front in the plane)
    orient : direction of segment 0, "E" or "W"; segment 0 is the seam
        strand at position 0, or for closed fronts the upper branch of the
        first left cusp
    """

    def __init__(self, events, seam_strands=0, orient=EAST):
        if not isinstance(seam_strands, int) or seam_strands < 0:
            raise FrontError(f"seam_strands must be a nonnegative int, got {seam_strands!r}")
        if orient not in (EAST, WEST):
            raise FrontError(f"orient must be {EAST!r} or {WEST!r}, got {orient!r}")
        self.events = tuple((str(kind), int(pos)) for kind, pos in events)
        self.seam_strands = seam_strands
        self.orient = orient
        self._sweep()
        if self.is_closed:
            self._orient_components()

    def _sweep(self):
        """Run the left-to-right simulation, recording segments and features."""
        positions = list(range(self.seam_strands))
        next_id = self.seam_strands
        cusps = []       # (side, upper_seg, lower_seg)
        crossings = []   # (upper_seg, lower_seg)
        links = []       # (seg_a, seg_b, flips_direction)
        for n, (kind, pos) in enumerate(self.events):
            where = f"event {n} ({kind} {pos})"
            if pos < 0:
                raise FrontError(f"{where}: negative position")
            if kind == LEFT_CUSP:
                if pos > len(positions):
                    raise FrontError(f"{where}: position beyond {len(positions)} strands")
                upper, lower = next_id, next_id + 1
                next_id += 2
                positions[pos:pos] = [upper, lower]
                cusps.append((LEFT_CUSP, upper, lower))
                links.append((upper, lower, True))
            elif kind == RIGHT_CUSP:
                if pos > len(positions) - 2:
                    raise FrontError(f"{where}: needs two strands at {pos}, have {len(positions)}")
                upper, lower = positions[pos], positions[pos + 1]
                del positions[pos:pos + 2]
                cusps.append((RIGHT_CUSP, upper, lower))
                links.append((upper, lower, True))
            elif kind == CROSSING:
                if pos > len(positions) - 2:
                    raise FrontError(f"{where}: needs two strands at {pos}, have {len(positions)}")
                upper, lower = positions[pos], positions[pos + 1]
                crossings.append((upper, lower))
                cont_lower, cont_upper = next_id, next_id + 1
                next_id += 2
                links.append((lower, cont_lower, False))
                links.append((upper, cont_upper, False))
                positions[pos] = cont_lower
                positions[pos + 1] = cont_upper
            else:
                raise FrontError(f"{where}: unknown event kind")
        self._segment_count = next_id
        self._cusps = cusps
        self._crossings = crossings
        self._links = links
        self._right_edge = tuple(positions)
        self.is_closed = len(positions) == self.seam_strands
        if self.is_closed:
            for j in range(self.seam_strands):
                links.append((j, positions[j], False))

    def _orient_components(self):
        adjacency = [[] for _ in range(self._segment_count)]
        for a, b, flip in self._links:
            adjacency[a].append((b, flip))
            adjacency[b].append((a, flip))
        dirs = [None] * self._segment_count
        components = []
        for start in range(self._segment_count):
            if dirs[start] is not None:
                continue
            dirs[start] = self.orient if start == 0 else EAST
            component = [start]
            stack = [start]
            while stack:
                seg = stack.pop()
                for other, flip in adjacency[seg]:
                    want = _flip(dirs[seg]) if flip else dirs[seg]
                    if dirs[other] is None:
                        dirs[other] = want
                        component.append(other)
                        stack.append(other)
                    else:
                        # closed fronts have an even number of cusps per
                        # component, so 2-coloring never conflicts
                        assert dirs[other] == want
            components.append(tuple(component))
        self._dirs = dirs
        self._components = components

    @property
    def component_count(self):
        self._require_closed()
        return len(self._components)

    def _require_closed(self):
        if not self.is_closed:
            raise NonClosed(
                f"front ends with {len(self._right_edge)} strands, "
                f"seam has {self.seam_strands}"
            )

    def winding(self):
        """Net signed count of seam strands (eastward minus westward)."""
        self._require_closed()
        return sum(
            1 if self._dirs[j] == EAST else -1 for j in range(self.seam_strands)
        )

    def invariants(self):
        """Compute (tb, rot) and the raw counts behind them.

        Raises NonClosed for a front that does not close up and
        MultiComponent when it traces more than one curve.
        """
        self._require_closed()
        if len(self._components) != 1:
            raise MultiComponent(
                f"front has {len(self._components)} components, expected 1"
            )
        writhe = 0
        for upper, lower in self._crossings:
            writhe += 1 if self._dirs[upper] == self._dirs[lower] else -1
        down_left = sum(
            1 for side, upper, _ in self._cusps
            if side == LEFT_CUSP and self._dirs[upper] == WEST
        )
        up_right = sum(
            1 for side, upper, _ in self._cusps
            if side == RIGHT_CUSP and self._dirs[upper] == WEST
        )
        cusps = len(self._cusps)
        assert cusps % 2 == 0
        tb = writhe - cusps // 2
        rot = down_left - up_right
        if self.seam_strands == 0:
            assert (tb + abs(rot)) % 2 == 1
        return LegendrianInvariants(tb, rot, writhe, cusps, down_left, up_right)

    def __repr__(self):
        closure = "closed" if self.is_closed else "open"
        return (
            f"FrontDiagram({len(self.events)} events, "
            f"seam={self.seam_strands}, {closure})"
        )


def _flip(direction):
    return WEST if direction == EAST else EAST


def front_from_text(text):
    """Parse the front file format.

    One record per line: `S n` (seam strand count), `O E|W` (direction of
    segment 0), and events `L i`, `R i`, `X i`.  `#` starts a comment.
    """
    seam = 0
    orient = EAST
    events = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FrontError(f"line {lineno}: expected 'KIND VALUE', got {raw!r}")
        kind, value = parts
        if kind == "S":
            if events:
                raise FrontError(f"line {lineno}: S must precede events")
            seam = _parse_int(value, lineno)
        elif kind == "O":
            if value not in (EAST, WEST):
                raise FrontError(f"line {lineno}: O takes E or W, got {value!r}")
            orient = value
        elif kind in (LEFT_CUSP, RIGHT_CUSP, CROSSING):
            events.append((kind, _parse_int(value, lineno)))
        else:
            raise FrontError(f"line {lineno}: unknown record {kind!r}")
    return FrontDiagram(events, seam_strands=seam, orient=orient)


def _parse_int(value, lineno):
    try:
        return int(value)
    except ValueError:
        raise FrontError(f"line {lineno}: expected an integer, got {value!r}") from None


def front_to_text(front):
    """Serialize a front; round-trips through front_from_text."""
    lines = []
    if front.seam_strands:
        lines.append(f"S {front.seam_strands}")
    lines.append(f"O {front.orient}")
    lines.extend(f"{kind} {pos}" for kind, pos in front.events)
    return "\n".join(lines) + "\n"


def _interleave_down(base, n):
    """Crossings turning [u0 l0 u1 l1 ...] into [u0 .. u_{n-1} l0 .. l_{n-1}]."""
    out = []
    for i in range(1, n):
        for q in range(2 * i - 1, i - 1, -1):
            out.append((CROSSING, base + q))
    return out


def _interleave_up(base, n):
    """Inverse of _interleave_down."""
    out = []
    for i in range(n - 1, 0, -1):
        for q in range(i, 2 * i):
            out.append((CROSSING, base + q))
    return out


def _cable_block(event, n):
    kind, pos = event
    base = n * pos
    if kind == LEFT_CUSP:
        return [(LEFT_CUSP, base + 2 * j) for j in range(n)] + _interleave_down(base, n)
    if kind == RIGHT_CUSP:
        return _interleave_up(base, n) + [(RIGHT_CUSP, base)] * n
    # crossing: walk the upper block of n strands down through the lower one
    return [
        (CROSSING, base + (n - 1) - i + j) for i in range(n) for j in range(n)
    ]


def cable_front(front, n):
    """Replace every strand by n parallel copies (copy 0 on top).

    The cable of a closed front is an n-component link diagram; it becomes
    a knot only after a pattern tangle is spliced in (satellite_front).
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"need an integer n >= 1, got {n!r}")
    if n == 1:
        return front
    events = []
    for event in front.events:
        events.extend(_cable_block(event, n))
    return FrontDiagram(
        events, seam_strands=front.seam_strands * n, orient=front.orient
    )


def satellite_front(companion, pattern, splice_after=1, base=0):
    """Splice a pattern tangle into the n-copy cable of a closed front.

    The companion's events are cabled with n = pattern.seam_strands; the
    pattern's events, shifted down by `base`, are inserted after the first
    `splice_after` cabled blocks.  `base` selects which companion arc the
    pattern rides on (copies of that arc occupy positions base..base+n-1
    at the splice point); the sweep validates the choice.
    """
    if companion.seam_strands != 0:
        raise FrontError("companion must be a closed front")
    n = pattern.seam_strands
    if n < 1:
        raise FrontError("pattern must have seam_strands >= 1")
    if not 0 <= splice_after <= len(companion.events):
        raise FrontError(f"splice_after out of range: {splice_after}")
    events = []
    for idx, event in enumerate(companion.events):
        if idx == splice_after:
            events.extend((kind, pos + base) for kind, pos in pattern.events)
        events.extend(_cable_block(event, n))
    if splice_after == len(companion.events):
        events.extend((kind, pos + base) for kind, pos in pattern.events)
    return FrontDiagram(events, seam_strands=0, orient=companion.orient)


@dataclass(frozen=True)
class PatternData:
    """Invariants of a pattern in the solid torus.

    tilde_class records the declared type of the associated knot P-tilde
    (the pattern viewed in the surgered solid torus): one of "unknot",
    "Z-slice", "Z[1/p]-slice", "other".  Declared values carry citations.
    """

    name: str
    winding: int
    tb: int
    rot: int
    tilde_class: str | None = None
    tilde_citation: str | None = None

    _TILDE_CLASSES = ("unknot", "Z-slice", "Z[1/p]-slice", "other")

    def __post_init__(self):
        if self.tilde_class is not None:
            if self.tilde_class not in self._TILDE_CLASSES:
                raise ValueError(
                    f"tilde_class must be one of {self._TILDE_CLASSES}, "
                    f"got {self.tilde_class!r}"
                )
            if not (self.tilde_citation or "").strip():
                raise ValueError("a declared tilde_class requires a citation")

    @classmethod
    def from_front(cls, name, front, tilde_class=None, tilde_citation=None):
        """Read winding number and (tb, rot) off an annular front."""
        if front.seam_strands < 1:
            raise FrontError("pattern fronts need seam_strands >= 1")
        inv = front.invariants()
        return cls(
            name,
            winding=front.winding(),
            tb=inv.tb,
            rot=inv.rot,
            tilde_class=tilde_class,
            tilde_citation=tilde_citation,
        )


def stabilize(inv, direction, count=1):
    """Stabilize `count` times: tb drops by count, rot moves by +-count.

    Positive stabilization raises rot.  Diagram-level counts of the input
    are dropped (a stabilized front has two more cusps per step).
    """
    if direction not in ("positive", "negative"):
        raise ValueError(f"direction must be 'positive' or 'negative', got {direction!r}")
    if not isinstance(count, int) or count < 0:
        raise ValueError(f"count must be a nonnegative int, got {count!r}")
    step = 1 if direction == "positive" else -1
    return LegendrianInvariants(inv.tb - count, inv.rot + step * count)


def satellite_invariants(pattern, companion):
    """tb and rot of the Legendrian satellite, by the formulas of Ng.

    tb(P(K)) = w^2 tb(K) + tb(P), rot(P(K)) = w rot(K) + rot(P).  The
    companion must already have the framing the satellite is meant to use:
    for the Seifert-framed satellite, stabilize to tb = 0 first.
    """
    w = pattern.winding
    return LegendrianInvariants(
        w * w * companion.tb + pattern.tb,
        w * companion.rot + pattern.rot,
    )


@dataclass(frozen=True)
class GenusBounds:
    """Lower bounds from tb + |rot| via slice-Bennequin and refinements."""

    g4_lower: int
    tau_lower: Fraction
    s_lower: int


def genus_bounds(inv):
    """Slice-Bennequin bounds: tb + |rot| <= 2 g4 - 1, <= 2 tau - 1, <= s - 1."""
    k = inv.tb + abs(inv.rot)
    return GenusBounds(
        g4_lower=math.ceil(Fraction(k + 1, 2)),
        tau_lower=Fraction(k + 1, 2),
        s_lower=k + 1,
    )


@dataclass(frozen=True)
class SatelliteGenusReport:
    """Outcome of the stabilize-satellite-bound pipeline."""

    companion: str
    genus: int
    stabilized: LegendrianInvariants
    satellite: LegendrianInvariants
    bounds: GenusBounds
    conclusions: tuple[str, ...]


def satellite_genus_pipeline(profile, realization, pattern):
    """Bound the smooth invariants of a satellite from below.

    Given a knot with declared genus g and a Legendrian realization that
    attains tb = 2g - 1 with rot = 0, stabilize positively to
    (tb, rot) = (0, 2g - 1), form the satellite, and convert tb + |rot|
    of the result into lower bounds for g4, tau, and s.  The report
    compares the bounds against the companion's declared values and, for
    winding-one patterns whose P-tilde is unknotted, records that the
    zero surgeries on companion and satellite are Z-homology cobordant
    rel meridians.

    Raises HypothesisNotMet when the genus is missing or the realization
    does not satisfy tb = 2g - 1, rot = 0.
    """
    if not isinstance(profile, KnotProfile):
        raise TypeError(f"expected a KnotProfile, got {type(profile).__name__}")
    if profile.declared_genus is None:
        raise HypothesisNotMet(f"{profile.name}: no declared genus")
    g = profile.declared_genus.value
    if realization.tb != 2 * g - 1:
        raise HypothesisNotMet(
            f"{profile.name}: realization has tb = {realization.tb}, "
            f"the pipeline needs tb = 2g - 1 = {2 * g - 1}"
        )
    if realization.rot != 0:
        raise HypothesisNotMet(
            f"{profile.name}: realization has rot = {realization.rot}, expected 0"
        )
    stabilized = stabilize(realization, "positive", 2 * g - 1)
    sat = satellite_invariants(pattern, stabilized)
    bounds = genus_bounds(sat)
    conclusions = [
        f"satellite of {profile.name} with pattern {pattern.name}: "
        f"tb = {sat.tb}, rot = {sat.rot} ({SATELLITE_FORMULA_CITATION})",
        f"g4(satellite) >= {bounds.g4_lower} (slice-Bennequin)",
        f"tau(satellite) >= {bounds.tau_lower} ({SLICE_BENNEQUIN_TAU_CITATION})",
        f"s(satellite) >= {bounds.s_lower} ({SLICE_BENNEQUIN_S_CITATION})",
    ]
    if profile.declared_slice_genus is not None:
        upper = profile.declared_slice_genus.upper
        if upper is not None and bounds.g4_lower > upper:
            conclusions.append(
                f"g4 strictly increases: {bounds.g4_lower} > {upper} = "
                f"g4({profile.name}) ({profile.declared_slice_genus.citation})"
            )
    if profile.declared_tau is not None and bounds.tau_lower > profile.declared_tau.value:
        conclusions.append(
            f"tau strictly increases: tau(satellite) >= {bounds.tau_lower} > "
            f"{profile.declared_tau.value} = tau({profile.name}) "
            f"({profile.declared_tau.citation})"
        )
    if profile.declared_s is not None and bounds.s_lower > profile.declared_s.value:
        conclusions.append(
            f"s strictly increases: s(satellite) >= {bounds.s_lower} > "
            f"{profile.declared_s.value} = s({profile.name}) "
            f"({profile.declared_s.citation})"
        )
    if pattern.winding == 1 and pattern.tilde_class == "unknot":
        conclusions.append(
            "winding one and unknotted P-tilde: the zero surgeries on the "
            "companion and the satellite are Z-homology cobordant rel "
            f"meridians ({pattern.tilde_citation})"
        )
        if profile.topologically_slice is not None and profile.topologically_slice.value:
            conclusions.append(
                "both knots are topologically slice "
                f"({profile.topologically_slice.citation})"
            )
    return SatelliteGenusReport(
        companion=profile.name,
        genus=g,
        stabilized=stabilized,
        satellite=sat,
        bounds=bounds,
        conclusions=tuple(conclusions),
    )
