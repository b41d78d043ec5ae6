"""Box-kites: six assessors on an octahedral frame, every edge making zero.

A frame is fixed by the ambient level and a strut constant s below the
generator: the low indices other than s pair off into three struts (the
two ends of a strut XOR to s), every vertex's U-index is its L-index
XORed with generator + s, and the twelve non-strut edges must all be
DMZ.  Vertices are labeled so that the all-red sail reads A, B, C in
cyclically positive order with A the smallest of the three; opposite
ends of the struts are then F, E, D respectively.

Edge colors record the annihilation pattern: RED for edges whose
opposite-slope diagonal pairings make zero, BLUE for same-slope ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .cdp import Level, mul_basis
from .trips import cpo_orient, is_trip
from .zd import (
    BACKSLASH,
    SLASH,
    Assessor,
    Diagonal,
    diagonal_product,
    dmz_pattern,
)

RED = "RED"
BLUE = "BLUE"

LABELS = ("A", "B", "C", "D", "E", "F")
STRUT_LABEL_PAIRS = (("A", "F"), ("B", "E"), ("C", "D"))
_PARTNER = {"A": "F", "F": "A", "B": "E", "E": "B", "C": "D", "D": "C"}
EDGE_LABEL_PAIRS = tuple(
    (x, y) for i, x in enumerate(LABELS) for y in LABELS[i + 1 :] if _PARTNER[x] != y
)

#: the three squares of the octahedron, each named by its mast strut
CATAMARAN_SQUARES = (
    (("A", "F"), ("B", "C", "E", "D")),
    (("B", "E"), ("A", "C", "F", "D")),
    (("C", "D"), ("A", "B", "F", "E")),
)

ZIGZAG_SIGNATURE = "/\\/\\/\\"
TREFOIL_SIGNATURE = "///\\\\\\"
CATAMARAN_SIGNATURE = "//\\\\"

ZIGZAG = "ZIGZAG"
TREFOIL = "TREFOIL"
_SAIL_SLOTS = (("A", "B", "C"), ("A", "D", "E"), ("F", "D", "B"), ("F", "C", "E"))

TYPE_I = "I"
TYPE_II = "II"
TYPE_OTHER = "other"


class StrutCollisionError(ValueError):
    """A seed trip contains the strut constant, so two of its members
    would sit on the same strut."""


class NotZigzagError(ValueError):
    """A seed trip whose edges are not all red cannot label the frame."""


class BrokenFrameError(ValueError):
    """Some required edge of a candidate frame makes no zero."""

    def __init__(self, message: str, missing=()):
        super().__init__(message)
        self.missing = tuple(missing)


class ClassificationError(RuntimeError):
    """A sound frame failed a structural identification that every valid
    box-kite satisfies; worth studying, not silently skipping."""


class BrokenChainError(ValueError):
    """No diagonal assignment closes the requested lanyard."""


@dataclass(frozen=True, slots=True)
class BoxKite:
    """Immutable labeled frame; vertices run in label order A..F."""

    lvl: Level
    s: int
    vertices: tuple[Assessor, ...]
    edge_colors: tuple[tuple[str, str, str], ...]

    @property
    def g(self) -> int:
        return self.lvl.g

    @property
    def x(self) -> int:
        """Generator plus strut constant; every vertex has lo ^ hi = x."""
        return self.g + self.s

    def assessor(self, label: str) -> Assessor:
        return self.vertices[LABELS.index(label)]

    @property
    def zigzag_trip(self) -> tuple[int, int, int]:
        return (self.vertices[0].lo, self.vertices[1].lo, self.vertices[2].lo)

    def strut_pairs(self) -> tuple[tuple[int, int], ...]:
        """L-index pairs of the three struts, each sorted ascending."""
        out = []
        for l1, l2 in STRUT_LABEL_PAIRS:
            p, q = self.assessor(l1).lo, self.assessor(l2).lo
            out.append((min(p, q), max(p, q)))
        return tuple(sorted(out))

    def edge_color(self, l1: str, l2: str) -> str:
        key = tuple(sorted((l1, l2)))
        for e1, e2, color in self.edge_colors:
            if (e1, e2) == key:
                return color
        raise KeyError(f"{l1}-{l2} is not an edge (strut pairs have none)")

    def dump(self) -> str:
        """Deterministic text form: header, six vertices, twelve edges."""
        lines = [f"{self.lvl.n} {self.s}"]
        for label, a in zip(LABELS, self.vertices):
            lines.append(f"{label} {a.lo} {a.hi}")
        for l1, l2, color in self.edge_colors:
            lines.append(f"{l1} {l2} {color}")
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"BoxKite(n={self.lvl.n}, s={self.s}, zigzag={self.zigzag_trip})"


def _check_strut(lvl: Level, s: int) -> None:
    if lvl.n < 4:
        raise ValueError("box-kites need at least 16 dimensions")
    if not 1 <= s < lvl.g:
        raise ValueError(f"strut constant must lie in 1..{lvl.g - 1}: {s}")


def _canonical_zigzag(lvl: Level, s: int, trip) -> tuple[int, int, int]:
    seed = tuple(trip)
    if len(seed) != 3:
        raise ValueError(f"zigzag seed must have three indices: {seed!r}")
    for k in seed:
        if not 0 < k < lvl.g:
            raise ValueError(f"zigzag index {k} must lie below the generator {lvl.g}")
    t = cpo_orient(*seed, lvl)
    if s in t.indices():
        raise StrutCollisionError(
            f"trip {t.indices()} contains the strut constant {s}, so two of its "
            "members are strut-opposite"
        )
    cpo = t.cpo()
    i = cpo.index(min(cpo))
    return cpo[i:] + cpo[:i]


def _edge_survey(vertices: tuple[Assessor, ...]):
    colors: dict[tuple[str, str], str] = {}
    missing: list[tuple[str, str]] = []
    for l1, l2 in EDGE_LABEL_PAIRS:
        pat = dmz_pattern(vertices[LABELS.index(l1)], vertices[LABELS.index(l2)])
        if pat is None:
            missing.append((l1, l2))
        else:
            colors[(l1, l2)] = BLUE if pat.same_slope_zero else RED
    return colors, missing


def build_boxkite(lvl: Level, s: int, zigzag_trip) -> BoxKite:
    """Assemble and fully check the frame whose all-red sail is the seed trip.

    The trip is rotated so its smallest index leads in CPO; strut
    opposites follow by XOR with s and U-indices by XOR with g + s.
    Every one of the twelve edges is then decided by exact products: a
    frame with any silent edge is rejected as broken, and a seed whose
    own three edges are not all red is not the zigzag.
    """
    _check_strut(lvl, s)
    a, b, c = _canonical_zigzag(lvl, s, zigzag_trip)
    xval = lvl.g | s
    los = (a, b, c, c ^ s, b ^ s, a ^ s)  # A B C D E F
    vertices = tuple(Assessor(lo, lo ^ xval, lvl) for lo in los)
    colors, missing = _edge_survey(vertices)
    if missing:
        raise BrokenFrameError(
            f"{len(missing)} of 12 edges make no zero at n={lvl.n}, s={s}: {missing}",
            missing,
        )
    for pair in (("A", "B"), ("A", "C"), ("B", "C")):
        if colors[pair] != RED:
            raise NotZigzagError(
                f"seed trip {(a, b, c)} has a {colors[pair]} edge {pair}; not the zigzag"
            )
    edge_colors = tuple((l1, l2, colors[(l1, l2)]) for l1, l2 in EDGE_LABEL_PAIRS)
    return BoxKite(lvl, s, vertices, edge_colors)


@dataclass(frozen=True, slots=True)
class BrokenFrame:
    """Candidate frame whose edges did not all make zero."""

    s: int
    strut_pairs: tuple[tuple[int, int], ...]
    missing_edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True, slots=True)
class SaillessFrame:
    """Candidate frame whose edges all make zero but whose faces carry no
    trips, so no sail structure and no A..F labeling exists.

    These show up from 32 dimensions on, where low strut constants make
    every non-strut plane pair annihilate regardless of trip structure.
    """

    s: int
    strut_pairs: tuple[tuple[int, int], ...]


@dataclass(frozen=True, slots=True)
class Survey:
    kites: tuple[BoxKite, ...]
    broken: tuple[BrokenFrame, ...]
    sailless: tuple[SaillessFrame, ...]


def survey(lvl: Level, s: int) -> Survey:
    """Exhaustive hunt over strut-pair triples for one strut constant.

    Low indices other than s pair off as {x, x ^ s}; every choice of
    three pairs is a candidate frame whose twelve cross edges are tested
    exactly.  A frame becomes a box-kite when every edge annihilates and
    one of its faces is an all-red trip (the zigzag, which fixes the
    labeling).  Frames with silent edges are kept as broken-frame
    diagnostics (the raw material of hidden emanation-table cells);
    frames that fully annihilate without any trip face are kept as
    sailless diagnostics.
    """
    _check_strut(lvl, s)
    pairs = []
    seen: set[int] = set()
    for xlo in range(1, lvl.g):
        if xlo == s or xlo in seen:
            continue
        seen.update((xlo, xlo ^ s))
        pairs.append((xlo, xlo ^ s))
    xval = lvl.g | s
    kites: list[BoxKite] = []
    broken: list[BrokenFrame] = []
    sailless: list[SaillessFrame] = []
    for triple in combinations(pairs, 3):
        los = [v for pr in triple for v in pr]
        verts = {lo: Assessor(lo, lo ^ xval, lvl) for lo in los}
        silent: list[tuple[int, int]] = []
        patterns = {}
        for (p1, p2) in combinations(range(3), 2):
            for u in triple[p1]:
                for v in triple[p2]:
                    pat = dmz_pattern(verts[u], verts[v])
                    if pat is None:
                        silent.append((u, v))
                    else:
                        patterns[frozenset((u, v))] = pat
        if silent:
            broken.append(BrokenFrame(s, triple, tuple(sorted(silent))))
            continue
        zigzag = _find_zigzag(triple, patterns)
        if zigzag is None:
            sailless.append(SaillessFrame(s, triple))
            continue
        kites.append(build_boxkite(lvl, s, zigzag))
    kites.sort(key=lambda k: k.zigzag_trip)
    return Survey(tuple(kites), tuple(broken), tuple(sailless))


def _find_zigzag(triple, patterns) -> tuple[int, int, int] | None:
    """The unique all-red trip face of a fully annihilating frame.

    Returns None when the frame has no trip faces at all (a sailless
    frame).  A frame that has trip faces but not exactly one all-red
    among them would not be a box-kite anyone has described; that is
    worth a loud stop, not a skip.
    """
    trip_faces = []
    all_red = []
    for face in product(*triple):
        u, v, w = face
        if u ^ v ^ w:
            continue
        trip_faces.append(face)
        if all(not patterns[frozenset(pr)].same_slope_zero for pr in combinations(face, 2)):
            all_red.append(face)
    if not trip_faces:
        return None
    if len(all_red) != 1:
        raise ClassificationError(
            f"frame {triple}: {len(trip_faces)} trip faces but {len(all_red)} all-red"
        )
    return all_red[0]


def census(lvl: Level, s: int) -> list[BoxKite]:
    """Every box-kite for the given strut constant, canonically labeled."""
    return list(survey(lvl, s).kites)


def broken_frames(lvl: Level, s: int) -> list[BrokenFrame]:
    """Candidate frames at this strut constant with silent edges."""
    return list(survey(lvl, s).broken)


@dataclass(frozen=True, slots=True)
class Sail:
    """A face whose three assessors mutually make zero."""

    kind: str
    labels: tuple[str, str, str]
    l_trip: tuple[int, int, int]
    u_trips: tuple[tuple[int, int, int], ...]

    @property
    def slot(self) -> str:
        """Lowercase label pattern: abc, ade, fdb, or fce."""
        return "".join(self.labels).lower()

    @property
    def trips(self) -> tuple[tuple[int, int, int], ...]:
        return (self.l_trip,) + self.u_trips


def classify_sails(bk: BoxKite) -> tuple[Sail, Sail, Sail, Sail]:
    """The four sails: the all-red zigzag plus three trefoils.

    Edge colors are re-checked against the required patterns (zigzag all
    red; each trefoil blue on the two edges at its shared zigzag vertex,
    red opposite it) and all four triples per sail are verified to be
    genuine trips.  Any mismatch raises ClassificationError, since it
    would void the frame's claim to be a box-kite.
    """
    out = []
    for slot in _SAIL_SLOTS:
        kind = ZIGZAG if slot == ("A", "B", "C") else TREFOIL
        assrs = [bk.assessor(lbl) for lbl in slot]
        lo = tuple(a.lo for a in assrs)
        hi = tuple(a.hi for a in assrs)
        u_trips = ((lo[0], hi[1], hi[2]), (hi[0], lo[1], hi[2]), (hi[0], hi[1], lo[2]))
        if kind == ZIGZAG:
            wanted = {pr: RED for pr in combinations(slot, 2)}
        else:
            shared = next(lbl for lbl in slot if lbl in ("A", "B", "C"))
            wanted = {
                pr: (BLUE if shared in pr else RED) for pr in combinations(slot, 2)
            }
        for (l1, l2), want in wanted.items():
            got = bk.edge_color(l1, l2)
            if got != want:
                raise ClassificationError(
                    f"sail {slot}: edge {l1}-{l2} is {got}, expected {want}"
                )
        for t in (lo,) + u_trips:
            if not is_trip(*t, bk.lvl):
                raise ClassificationError(f"sail {slot} carries a non-trip {t}")
        out.append(Sail(kind, slot, lo, u_trips))
    return tuple(out)


@dataclass(frozen=True, slots=True)
class Lanyard:
    """Closed chain of diagonals in which every consecutive pair makes zero."""

    signature: str
    labels: tuple[str, ...]
    diagonals: tuple[Diagonal, ...]

    def distinct_diagonals(self) -> int:
        return len(set(self.diagonals))


_SLOPE_OF = {"/": SLASH, "\\": BACKSLASH}


def blue_hexagon(bk: BoxKite) -> tuple[str, ...]:
    """Vertex cycle of the six same-slope edges, found by walking.

    Starts at A and prefers the alphabetically first unvisited blue
    neighbor, so the answer is deterministic.
    """
    adj: dict[str, list[str]] = {lbl: [] for lbl in LABELS}
    for l1, l2, color in bk.edge_colors:
        if color == BLUE:
            adj[l1].append(l2)
            adj[l2].append(l1)
    for lbl in adj:
        adj[lbl].sort()
    cycle = ["A"]
    while len(cycle) < 6:
        step = [lbl for lbl in adj[cycle[-1]] if lbl not in cycle]
        if not step:
            raise ClassificationError("blue edges do not form a single hexagon")
        cycle.append(step[0])
    if "A" not in adj[cycle[-1]]:
        raise ClassificationError("blue edges do not close into a hexagon")
    return tuple(cycle)


def _default_cycle(bk: BoxKite, signature: str) -> tuple[str, ...]:
    if signature == ZIGZAG_SIGNATURE:
        return ("A", "B", "C", "A", "B", "C")
    if signature == TREFOIL_SIGNATURE:
        return ("A", "D", "E", "A", "D", "E")
    if signature == CATAMARAN_SIGNATURE:
        return ("B", "C", "E", "D")
    if set(signature) in ({"/"}, {"\\"}) and len(signature) == 6:
        return blue_hexagon(bk)
    raise ValueError(f"no default vertex cycle for signature {signature!r}; pass labels")


def trace_lanyard(bk: BoxKite, signature: str, labels: tuple[str, ...] | None = None) -> Lanyard:
    """Thread diagonals around a vertex cycle so every step makes zero.

    The signature is a cyclic slope string; it is slid against the cycle
    through every rotation until one closes, meaning each consecutive
    product, wrap included, is exactly zero.  Default cycles: the zigzag
    runs A B C twice, the trefoil A D E twice, the catamaran rounds the
    B C E D square, and a monochrome six-character signature walks the
    blue hexagon.  Raises BrokenChainError when nothing closes.
    """
    try:
        slopes = [_SLOPE_OF[ch] for ch in signature]
    except KeyError:
        raise ValueError(f"signature may contain only '/' and '\\': {signature!r}") from None
    if labels is None:
        labels = _default_cycle(bk, signature)
    labels = tuple(labels)
    if len(labels) != len(signature):
        raise ValueError(f"cycle length {len(labels)} != signature length {len(signature)}")
    verts = [bk.assessor(lbl) for lbl in labels]
    m = len(slopes)
    for r in range(m):
        diags = [Diagonal(verts[i], slopes[(i + r) % m]) for i in range(m)]
        if all(diagonal_product(diags[i], diags[(i + 1) % m]).is_zero() for i in range(m)):
            return Lanyard(signature, labels, tuple(diags))
    raise BrokenChainError(f"no rotation of {signature!r} closes over {labels}")


@dataclass(frozen=True, slots=True)
class StrutReport:
    """Orientation flags for one strut's three triplet families.

    Each pair of flags covers the family's two triplets in the order
    written in viziers_check; a flag is True when the product of the
    first two members lands positively on the third.
    """

    zig_label: str
    vent_label: str
    vz1: tuple[bool, bool]
    vz2: tuple[bool, bool]
    vz3: tuple[bool, bool]

    @property
    def fully_oriented(self) -> bool:
        return all(self.vz1) and all(self.vz2) and all(self.vz3)

    @property
    def reversed_vz1(self) -> bool:
        return not self.vz1[0]


@dataclass(frozen=True, slots=True)
class VizierReport:
    struts: tuple[StrutReport, ...]
    kite_type: str


def viziers_check(bk: BoxKite) -> VizierReport:
    """Orientation report for the strut-spanning triplet families.

    With (z, Z) a zigzag vertex's L- and U-index and (v, V) those of its
    strut opposite, the families are (v,z,S);(V,Z,S), then
    (V,z,G);(Z,v,G), then (V,v,X);(z,Z,X).  The XOR identities behind
    all six always hold and are asserted; the flags record which
    products come out positively oriented.  A kite is type I when every
    strut orients fully, type II when exactly two struts flip the first
    family.
    """
    lvl, g, s, x = bk.lvl, bk.g, bk.s, bk.x
    reports = []
    for zl, vl in STRUT_LABEL_PAIRS:
        zig, vent = bk.assessor(zl), bk.assessor(vl)
        z, z_u = zig.lo, zig.hi
        v, v_u = vent.lo, vent.hi
        assert v ^ z == s and v_u ^ z_u == s
        assert v_u ^ z == g and z_u ^ v == g
        assert v_u ^ v == x and z ^ z_u == x
        reports.append(
            StrutReport(
                zl,
                vl,
                vz1=(mul_basis(v, z, lvl).sign > 0, mul_basis(v_u, z_u, lvl).sign > 0),
                vz2=(mul_basis(v_u, z, lvl).sign > 0, mul_basis(z_u, v, lvl).sign > 0),
                vz3=(mul_basis(v_u, v, lvl).sign > 0, mul_basis(z, z_u, lvl).sign > 0),
            )
        )
    flipped = sum(r.reversed_vz1 for r in reports)
    if all(r.fully_oriented for r in reports):
        kite_type = TYPE_I
    elif flipped == 2:
        kite_type = TYPE_II
    else:
        kite_type = TYPE_OTHER
    return VizierReport(tuple(reports), kite_type)


@dataclass(frozen=True, slots=True)
class EdgeColorStats:
    red_edges: tuple[tuple[str, str], ...]
    blue_edges: tuple[tuple[str, str], ...]

    @property
    def red(self) -> int:
        return len(self.red_edges)

    @property
    def blue(self) -> int:
        return len(self.blue_edges)


def edge_color_stats(bk: BoxKite) -> EdgeColorStats:
    """Split the twelve edges by color; a sound frame shows six of each."""
    red = tuple((l1, l2) for l1, l2, c in bk.edge_colors if c == RED)
    blue = tuple((l1, l2) for l1, l2, c in bk.edge_colors if c == BLUE)
    return EdgeColorStats(red, blue)
