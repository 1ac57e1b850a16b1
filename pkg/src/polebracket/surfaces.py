"""Ribbon realizations of twisted Gauss codes and their capped surfaces.

A diagram with c crossings and f bare loops is realized as a band surface:
one square disk per crossing (and a small disk per bare loop), connected by
bands, one band per diagram arc.  A band is flipped once for every bar on
its arc (mod 2).  Capping every boundary circle of the band surface with a
disk yields the closed carrier surface; state curves drawn on the band
surface are classified against that closed surface (null-homologous,
separating, disk-bounding, Mobius-core).

Dart layout at crossing k (darts are band endpoints on disk boundaries):
    4k   over-in    4k+1 under-in    4k+2 over-out    4k+3 under-out
Counterclockwise boundary order is (oi, ui, oo, uo) at a positive crossing
and (oi, uo, oo, ui) at a negative one; the sign convention is the
determinant of (over direction, under direction), so the closure of a
positive braid generator has all-positive crossings.

Edge ids in polygon complexes (first entry keeps sorting well defined):
    ("A", d)        boundary arc of a disk across dart d, oriented with the
                    counterclockwise disk walk
    ("C", disk, i)  disk boundary corner between consecutive darts
    ("S", b, 0|1)   the two sides of band b
    cut complexes additionally use AL/AR (split dart arcs), CORE (split band
    cores), and CH (chord copies).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .cells import PolygonComplex
from .codes import Bar, TwistedGaussCode, Visit


# ---------------------------------------------------------------------------
# ribbon construction


@dataclass(frozen=True)
class RibbonComplex:
    """Band-surface presentation of a twisted Gauss code."""

    code: TwistedGaussCode
    crossing_ids: tuple[int, ...]          # sorted; disk k realizes crossing_ids[k]
    n_crossings: int
    n_free: int                            # bare-loop disks, indexed after crossings
    total_darts: int
    rotations: tuple[tuple[int, ...], ...]  # counterclockwise darts per disk
    bands: tuple[tuple[int, int, int], ...]  # (u, v, flip); core oriented u -> v
    disk_of: tuple[int, ...]               # dart -> disk
    band_at: tuple[tuple[int, int, int], ...]  # dart -> (other dart, flip, band index)

    def rotation_successor(self, d: int) -> int:
        rot = self.rotations[self.disk_of[d]]
        return rot[(rot.index(d) + 1) % len(rot)]


def _dart_in(k: int, over: bool) -> int:
    return 4 * k if over else 4 * k + 1


def _dart_out(k: int, over: bool) -> int:
    return 4 * k + 2 if over else 4 * k + 3


def build_ribbon(code: TwistedGaussCode) -> RibbonComplex:
    ids = code.crossing_ids
    kidx = {cid: k for k, cid in enumerate(ids)}
    c = len(ids)

    rotations: list[tuple[int, ...]] = []
    for cid in ids:
        k = kidx[cid]
        oi, ui, oo, uo = 4 * k, 4 * k + 1, 4 * k + 2, 4 * k + 3
        if code.sign_of(cid) > 0:
            rotations.append((oi, ui, oo, uo))
        else:
            rotations.append((oi, uo, oo, ui))

    bands: list[tuple[int, int, int]] = []
    n_free = 0
    free_rotations: list[tuple[int, ...]] = []
    for comp in code.components:
        visits = [(i, t) for i, t in enumerate(comp) if isinstance(t, Visit)]
        if not visits:
            # bare loop: a small disk with two darts and one band back to itself
            d0 = 4 * c + 2 * n_free
            d1 = d0 + 1
            flip = sum(1 for t in comp if isinstance(t, Bar)) % 2
            free_rotations.append((d0, d1))
            bands.append((d1, d0, flip))
            n_free += 1
            continue
        n = len(comp)
        for j, (pos, tok) in enumerate(visits):
            npos, ntok = visits[(j + 1) % len(visits)]
            flip = 0
            i = (pos + 1) % n
            while i != npos:
                if isinstance(comp[i], Bar):
                    flip ^= 1
                i = (i + 1) % n
            if len(visits) == 1:
                flip = sum(1 for t in comp if isinstance(t, Bar)) % 2
            u = _dart_out(kidx[tok.crossing], tok.over)
            v = _dart_in(kidx[ntok.crossing], ntok.over)
            bands.append((u, v, flip))

    rotations += free_rotations
    total = 4 * c + 2 * n_free
    disk_of = [0] * total
    for disk, rot in enumerate(rotations):
        for d in rot:
            disk_of[d] = disk
    band_at: list[tuple[int, int, int]] = [(-1, -1, -1)] * total
    for bi, (u, v, flip) in enumerate(bands):
        band_at[u] = (v, flip, bi)
        band_at[v] = (u, flip, bi)
    if any(b[0] < 0 for b in band_at):
        raise AssertionError("dart without band")

    return RibbonComplex(
        code=code,
        crossing_ids=ids,
        n_crossings=c,
        n_free=n_free,
        total_darts=total,
        rotations=tuple(rotations),
        bands=tuple(bands),
        disk_of=tuple(disk_of),
        band_at=tuple(band_at),
    )


# ---------------------------------------------------------------------------
# polygon presentation of the band surface


def _disk_face(disk: int, rot: tuple[int, ...]) -> list[tuple]:
    face = []
    for i, d in enumerate(rot):
        face.append((("A", d), 1))
        face.append((("C", disk, i), 1))
    return face


def _band_face(bi: int, band: tuple[int, int, int]) -> list[tuple]:
    u, v, flip = band
    if flip == 0:
        return [(("A", u), -1), (("S", bi, 1), 1), (("A", v), -1), (("S", bi, 0), -1)]
    return [(("A", u), -1), (("S", bi, 1), 1), (("A", v), 1), (("S", bi, 0), -1)]


def ribbon_faces(rs: RibbonComplex) -> list[list[tuple]]:
    faces = [_disk_face(disk, rot) for disk, rot in enumerate(rs.rotations)]
    faces += [_band_face(bi, b) for bi, b in enumerate(rs.bands)]
    return faces


# ---------------------------------------------------------------------------
# closed surface


@dataclass(frozen=True)
class PieceReport:
    euler: int
    orientable: bool
    genus: int        # handles if orientable, else 0
    crosscaps: int    # 0 if orientable


@dataclass(frozen=True)
class EmbeddedCurve:
    """A closed curve on the band surface running through whole bands and
    crossing each touched disk along straight chords between darts."""

    chords: tuple[tuple[int, int], ...]   # (dart, dart) with dart < dart, sorted
    band_mask: int                        # bit per band index
    flip_parity: int                      # 1 when the curve core is orientation reversing


def _classify_piece(euler: int, orientable: bool) -> PieceReport:
    if orientable:
        return PieceReport(euler, True, (2 - euler) // 2, 0)
    return PieceReport(euler, False, 0, 2 - euler)


class ClosedSurface:
    """Band surface with all boundary circles capped by disks.

    Exposes the closed-surface classification, a band-mask model of first
    homology with Z/2 coefficients, the orientation character w1, and the
    mod-2 intersection form on the chosen basis.  Instances are immutable
    after construction apart from an internal memo of disk-bounding queries.
    """

    def __init__(self, rs: RibbonComplex):
        self.ribbon = rs
        base = PolygonComplex(ribbon_faces(rs))
        self.caps = base.boundary_circles()
        faces = list(base.faces) + [list(c) for c in self.caps]
        self.complex = PolygonComplex(faces)
        if self.complex.boundary_circles():
            raise AssertionError("capping left a boundary")
        self.euler = self.complex.euler
        stats = self.complex.piece_stats()
        self.pieces = tuple(
            _classify_piece(s["euler"], s["orientable"]) for s in stats
        )
        self.orientable = all(p.orientable for p in self.pieces)

        n_disks = len(rs.rotations)
        self.disk_piece = tuple(self.complex.face_piece[d] for d in range(n_disks))
        self.band_piece = tuple(
            self.complex.face_piece[n_disks + bi] for bi in range(len(rs.bands))
        )
        self.flip_mask = 0
        for bi, (_, _, flip) in enumerate(rs.bands):
            if flip:
                self.flip_mask |= 1 << bi

        self._cap_masks = tuple(self._cap_band_mask(c) for c in self.caps)
        self._build_homology()
        self._cut_memo: dict = {}

    # -- homology --------------------------------------------------------

    def _cap_band_mask(self, circle) -> int:
        mask = 0
        count: dict[int, int] = {}
        for (e, _d) in circle:
            if e[0] == "S":
                count[e[1]] = count.get(e[1], 0) + 1
        for bi, c in count.items():
            if c % 2:
                mask |= 1 << bi
        return mask

    def _build_homology(self):
        rs = self.ribbon
        n_disks = len(rs.rotations)
        # echelon over GF(2): pivot bit -> (vector, coordinates in basis)
        rows: dict[int, tuple[int, int]] = {}

        def _reduce(vec: int, coords: int) -> tuple[int, int]:
            while vec:
                p = vec.bit_length() - 1
                row = rows.get(p)
                if row is None:
                    return vec, coords
                vec ^= row[0]
                coords ^= row[1]
            return 0, coords

        def _insert(vec: int, coords: int) -> bool:
            v, c = _reduce(vec, coords)
            if v == 0:
                return False
            rows[v.bit_length() - 1] = (v, c)
            return True

        for m in self._cap_masks:
            _insert(m, 0)

        # spanning forest of the core graph: disks as vertices, bands as edges
        parent_edge = [-1] * n_disks
        seen = [False] * n_disks
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n_disks)]
        for bi, (u, v, _f) in enumerate(rs.bands):
            adj[rs.disk_of[u]].append((rs.disk_of[v], bi))
            adj[rs.disk_of[v]].append((rs.disk_of[u], bi))
        path_mask = [0] * n_disks   # band mask of tree path to component root
        for root in range(n_disks):
            if seen[root]:
                continue
            seen[root] = True
            queue = [root]
            while queue:
                x = queue.pop()
                for y, bi in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        parent_edge[y] = bi
                        path_mask[y] = path_mask[x] ^ (1 << bi)
                        queue.append(y)

        tree = {parent_edge[x] for x in range(n_disks) if parent_edge[x] >= 0}
        basis: list[int] = []
        coords_bit = 0
        for bi, (u, v, _f) in enumerate(rs.bands):
            if bi in tree:
                continue
            cyc = (1 << bi) ^ path_mask[rs.disk_of[u]] ^ path_mask[rs.disk_of[v]]
            if _insert(cyc, 1 << coords_bit):
                basis.append(cyc)
                coords_bit += 1
        self._rows = rows
        self.h1_basis = tuple(basis)
        self.h1_dim = len(basis)
        expected = 2 * self.complex.piece_count - self.euler
        if self.h1_dim != expected:
            raise AssertionError(
                f"homology dimension {self.h1_dim}, expected {expected}"
            )
        self.w1_bits = tuple(self._w1(m) for m in basis)
        if self.orientable != all(b == 0 for b in self.w1_bits):
            raise AssertionError("orientation character disagrees with 2-coloring")
        self.intersection_form = self._build_intersection_form()

    def _w1(self, mask: int) -> int:
        return bin(mask & self.flip_mask).count("1") % 2

    def homology_class(self, curve) -> tuple[int, ...]:
        """Z/2 homology coordinates of a band cycle in the chosen basis."""
        mask = curve.band_mask if isinstance(curve, EmbeddedCurve) else int(curve)
        vec, coords = mask, 0
        while vec:
            p = vec.bit_length() - 1
            row = self._rows.get(p)
            if row is None:
                raise ValueError("band mask is not a cycle")
            vec ^= row[0]
            coords ^= row[1]
        return tuple((coords >> i) & 1 for i in range(self.h1_dim))

    # -- intersection form -------------------------------------------------

    def _strand_darts(self, mask: int) -> dict[int, list[int]]:
        per_disk: dict[int, list[int]] = {}
        for bi, (u, v, _f) in enumerate(self.ribbon.bands):
            if (mask >> bi) & 1:
                per_disk.setdefault(self.ribbon.disk_of[u], []).append(u)
                per_disk.setdefault(self.ribbon.disk_of[v], []).append(v)
        return per_disk

    @staticmethod
    def _interleaved(rot: tuple[int, ...], labels: dict[int, str]) -> int:
        # four cyclic points, two per label; the chords cross exactly when
        # the two z positions are separated by an even gap (z w z w pattern)
        seq = [labels[d] for d in rot if d in labels]
        zs = [i for i, s in enumerate(seq) if s == "z"]
        if len(zs) != 2 or len(seq) != 4:
            raise AssertionError("need two z and two w points")
        return 1 if (zs[1] - zs[0]) % 2 == 0 else 0

    def _cycle_intersection(self, mz: int, mw: int) -> int:
        rs = self.ribbon
        zd = self._strand_darts(mz)
        wd = self._strand_darts(mw)
        bit = 0
        shared = mz & mw
        # transversal disks: both cycles pass, on four distinct darts
        for disk in zd.keys() & wd.keys():
            zdarts, wdarts = zd[disk], wd[disk]
            if set(zdarts) & set(wdarts):
                continue
            if len(zdarts) != 2 or len(wdarts) != 2:
                raise AssertionError("basis cycle fails to be simple")
            labels = {d: "z" for d in zdarts}
            labels.update({d: "w" for d in wdarts})
            bit ^= self._interleaved(rs.rotations[disk], labels)
        # shared band runs: push the cycles to parallel lanes and count the
        # crossings forced at the two ends of each maximal run
        for run in self._shared_runs(shared):
            bit ^= self._run_crossing(run, mz, mw)
        return bit

    def _shared_runs(self, shared: int) -> list[list[int]]:
        """Maximal paths of bands lying on both cycles.  For simple basis
        cycles the shared set per component is a simple path."""
        rs = self.ribbon
        if not shared:
            return []
        bis = [bi for bi in range(len(rs.bands)) if (shared >> bi) & 1]
        ends: dict[int, list[int]] = {}
        for bi in bis:
            u, v, _f = rs.bands[bi]
            ends.setdefault(rs.disk_of[u], []).append(bi)
            ends.setdefault(rs.disk_of[v], []).append(bi)
        runs = []
        used: set[int] = set()
        starts = sorted(d for d, bs in ends.items() if len(bs) == 1)
        for d0 in starts:
            bi = ends[d0][0]
            if bi in used:
                continue
            run = []
            disk = d0
            while True:
                run.append(bi)
                used.add(bi)
                u, v, _f = rs.bands[bi]
                disk = rs.disk_of[v] if rs.disk_of[u] == disk else rs.disk_of[u]
                nxt = [b for b in ends[disk] if b not in used]
                if not nxt:
                    break
                bi = nxt[0]
            runs.append(run)
        if len(used) != len(bis):
            raise AssertionError("shared bands form a closed loop")
        return runs

    def _run_darts(self, run: list[int]) -> tuple[list[int], list[int]]:
        """Disk sequence and the shared darts at the two end disks."""
        rs = self.ribbon
        first, last = run[0], run[-1]
        fu, fv, _ = rs.bands[first]
        if len(run) == 1:
            return [fu, fv], [fu, fv]
        lu, lv, _ = rs.bands[last]
        second_disks = {rs.disk_of[rs.bands[run[1]][0]], rs.disk_of[rs.bands[run[1]][1]]}
        start_dart = fu if rs.disk_of[fu] not in second_disks else fv
        prev_disks = {rs.disk_of[rs.bands[run[-2]][0]], rs.disk_of[rs.bands[run[-2]][1]]}
        end_dart = lu if rs.disk_of[lu] not in prev_disks else lv
        return [start_dart, end_dart], [start_dart, end_dart]

    def _other_dart(self, mask: int, disk: int, exclude: int) -> int:
        darts = self._strand_darts(mask)[disk]
        rest = [d for d in darts if d != exclude]
        if len(rest) != 1:
            raise AssertionError("cycle not simple at divergence disk")
        return rest[0]

    def _run_crossing(self, run: list[int], mz: int, mw: int) -> int:
        rs = self.ribbon
        (start_dart, end_dart), _ = self._run_darts(run)
        flips = 0
        for bi in run:
            flips ^= rs.bands[bi][2]
        disk0 = rs.disk_of[start_dart]
        disk1 = rs.disk_of[end_dart]
        if disk0 == disk1:
            raise AssertionError("shared run closes up")
        z0 = self._other_dart(mz, disk0, start_dart)
        w0 = self._other_dart(mw, disk0, start_dart)
        z1 = self._other_dart(mz, disk1, end_dart)
        w1 = self._other_dart(mw, disk1, end_dart)
        # lanes: (left, right) at the run start; strands exit disk0, so the
        # disk walk across the shared dart meets right lane first
        lane = ("z", "w")
        labels0 = {z0: "z", w0: "w"}
        seq0 = []
        for d in rs.rotations[disk0]:
            if d == start_dart:
                seq0 += [lane[1], lane[0]]
            elif d in labels0:
                seq0.append(labels0[d])
        if flips:
            lane = (lane[1], lane[0])
        labels1 = {z1: "z", w1: "w"}
        seq1 = []
        for d in rs.rotations[disk1]:
            if d == end_dart:
                seq1 += [lane[0], lane[1]]
            elif d in labels1:
                seq1.append(labels1[d])
        total = 0
        for seq in (seq0, seq1):
            zs = [i for i, s in enumerate(seq) if s == "z"]
            if len(zs) != 2 or len(seq) != 4:
                raise AssertionError("malformed lane sequence")
            total ^= 1 if (zs[1] - zs[0]) % 2 == 0 else 0
        return total

    def _build_intersection_form(self) -> tuple[tuple[int, ...], ...]:
        n = self.h1_dim
        mat = [[0] * n for _ in range(n)]
        for i in range(n):
            mat[i][i] = self.w1_bits[i]
            for j in range(i + 1, n):
                b = self._cycle_intersection(self.h1_basis[i], self.h1_basis[j])
                mat[i][j] = mat[j][i] = b
        return tuple(tuple(r) for r in mat)

    def pairing(self, x: tuple[int, ...], y: tuple[int, ...]) -> int:
        total = 0
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                total ^= xi & yj & self.intersection_form[i][j]
        return total

    # -- curve predicates ---------------------------------------------------

    def is_mobius(self, curve: EmbeddedCurve) -> bool:
        return curve.flip_parity == 1

    def is_separating(self, curve: EmbeddedCurve) -> bool:
        return not any(self.homology_class(curve))

    def bounds_disk(self, curve: EmbeddedCurve) -> bool:
        """True when the curve bounds an embedded disk inside the capped
        surface.  Mobius cores and homologically nontrivial curves are
        rejected outright; otherwise the surface is cut along the curve and
        the pieces are inspected for a disk."""
        if curve.flip_parity:
            return False
        if any(self.homology_class(curve)):
            return False
        key = curve.chords
        hit = self._cut_memo.get(key)
        if hit is not None:
            return hit
        piece_idx = self._curve_piece(curve)
        if self.pieces[piece_idx].euler == 2:
            self._cut_memo[key] = True
            return True
        cut = cut_complex(self, _chords_by_disk(self, [curve]), _split_bands(curve))
        # a disk piece (chi 1, one boundary circle) on either side of the cut
        res = any(
            s["euler"] == 1 and s["boundary_circles"] == 1
            for s in cut.complex.piece_stats()
        )
        self._cut_memo[key] = res
        return res

    def _curve_piece(self, curve: EmbeddedCurve) -> int:
        for bi in range(len(self.ribbon.bands)):
            if (curve.band_mask >> bi) & 1:
                return self.band_piece[bi]
        raise ValueError("curve uses no bands")

    # -- reports -------------------------------------------------------------

    def report(self) -> dict:
        pieces = []
        for p in self.pieces:
            if p.orientable:
                pieces.append({"orientable": True, "genus": p.genus})
            else:
                pieces.append({"orientable": False, "crosscaps": p.crosscaps})
        return {
            "euler": self.euler,
            "orientable": self.orientable,
            "pieces": pieces,
            "h1_rank": self.h1_dim,
        }


def cap_boundaries(rs: RibbonComplex) -> ClosedSurface:
    return ClosedSurface(rs)


def homology_class(F: ClosedSurface, c) -> tuple[int, ...]:
    return F.homology_class(c)


def is_separating(F: ClosedSurface, c: EmbeddedCurve) -> bool:
    return F.is_separating(c)


def bounds_disk(F: ClosedSurface, c: EmbeddedCurve) -> bool:
    return F.bounds_disk(c)


def is_mobius(c: EmbeddedCurve) -> bool:
    return c.flip_parity == 1


# ---------------------------------------------------------------------------
# cutting along curves


@dataclass(frozen=True)
class CutComplex:
    complex: PolygonComplex
    # face index of the two sides of each chord copy: (disk, chord) -> (fa, fb)
    chord_faces: dict
    cut_edges: frozenset


def _chords_by_disk(F: ClosedSurface, curves: Iterable[EmbeddedCurve]) -> dict:
    by_disk: dict[int, list[tuple[int, int]]] = {}
    for c in curves:
        for (a, b) in c.chords:
            by_disk.setdefault(F.ribbon.disk_of[a], []).append((a, b))
    return by_disk


def _split_bands(*curves: EmbeddedCurve) -> int:
    mask = 0
    for c in curves:
        mask |= c.band_mask
    return mask


def cut_complex(F: ClosedSurface, chords_by_disk: dict, split_mask: int) -> CutComplex:
    """Polygon complex obtained from the capped surface by slicing every
    listed disk along its chords and every band in split_mask down its core.
    Chords at a crossing disk must join rotation-adjacent darts; a touched
    crossing disk carries one or two disjoint chords, a touched bare-loop
    disk carries its single chord.  Caps are retained unchanged, so the
    result is the complement of the curves in the closed surface."""
    rs = F.ribbon
    faces: list[list[tuple]] = []
    chord_faces: dict = {}
    cut_edges: set = set()

    def AL(d):
        return ("AL", d)

    def AR(d):
        return ("AR", d)

    for disk, rot in enumerate(rs.rotations):
        chords = chords_by_disk.get(disk)
        if not chords:
            faces.append(_disk_face(disk, rot))
            continue
        pos = {d: i for i, d in enumerate(rot)}
        n = len(rot)
        for (a, b) in chords:
            for d in (a, b):
                if not ((split_mask >> rs.band_at[d][2]) & 1):
                    raise ValueError("chord dart on an unsplit band")

        def corner(i):
            return ("C", disk, i)

        def succ(d):
            return rot[(pos[d] + 1) % n]

        norm = []
        for (a, b) in chords:
            if succ(a) == b:
                norm.append((a, b))
            elif succ(b) == a:
                norm.append((b, a))
            else:
                raise ValueError("chord joins non-adjacent darts")
        if len(norm) == 1 and n == 2:
            # bare-loop disk: the chord splits the bigon into two bigons
            (x, y) = norm[0]
            e1 = ("CH", disk, 0)
            e2 = ("CH", disk, 1)
            f1 = [(AL(x), 1), (corner(pos[x]), 1), (AR(y), 1), (e1, -1)]
            f2 = [(AL(y), 1), (corner(pos[y]), 1), (AR(x), 1), (e2, 1)]
            faces += [f1, f2]
            key = (disk, (min(x, y), max(x, y)))
            chord_faces[key] = (len(faces) - 2, len(faces) - 1)
            cut_edges.update((e1, e2))
            continue
        if len(norm) == 1:
            (x, y) = norm[0]
            lch = ("CH", disk, pos[x], "L")
            rch = ("CH", disk, pos[x], "R")
            lune = [(AL(x), 1), (corner(pos[x]), 1), (AR(y), 1), (lch, -1)]
            rest: list[tuple] = [(AL(y), 1), (corner(pos[y]), 1)]
            d = succ(y)
            while d != x:
                rest.append((("A", d), 1))
                rest.append((corner(pos[d]), 1))
                d = succ(d)
            rest.append((AR(x), 1))
            rest.append((rch, 1))
            faces += [lune, rest]
            key = (disk, (min(x, y), max(x, y)))
            chord_faces[key] = (len(faces) - 2, len(faces) - 1)
            cut_edges.update((lch, rch))
            continue
        if len(norm) == 2 and n == 4:
            (x0, y0), (x1, y1) = norm
            if pos[x1] == (pos[x0] + 2) % 4:
                pass
            elif pos[x0] == (pos[x1] + 2) % 4:
                (x0, y0), (x1, y1) = (x1, y1), (x0, y0)
            else:
                raise ValueError("chords overlap")
            lunes = []
            for (x, y) in ((x0, y0), (x1, y1)):
                lch = ("CH", disk, pos[x], "L")
                lunes.append([(AL(x), 1), (corner(pos[x]), 1), (AR(y), 1), (lch, -1)])
                cut_edges.update((lch, ("CH", disk, pos[x], "M")))
            mid = [
                (AL(y0), 1),
                (corner(pos[y0]), 1),
                (AR(x1), 1),
                (("CH", disk, pos[x1], "M"), 1),
                (AL(y1), 1),
                (corner(pos[y1]), 1),
                (AR(x0), 1),
                (("CH", disk, pos[x0], "M"), 1),
            ]
            faces += lunes
            mid_idx = len(faces)
            faces.append(mid)
            for i, (x, y) in enumerate(((x0, y0), (x1, y1))):
                key = (disk, (min(x, y), max(x, y)))
                chord_faces[key] = (mid_idx - 2 + i, mid_idx)
            continue
        raise ValueError("unsupported chord pattern")

    for bi, (u, v, flip) in enumerate(rs.bands):
        if not ((split_mask >> bi) & 1):
            faces.append(_band_face(bi, rs.bands[bi]))
            continue
        s0 = ("S", bi, 0)
        s1 = ("S", bi, 1)
        col = ("CORE", bi, "L")
        cor = ("CORE", bi, "R")
        if flip == 0:
            faces.append([(s0, 1), (AR(v), 1), (col, -1), (AL(u), 1)])
            faces.append([(AR(u), -1), (s1, 1), (AL(v), -1), (cor, -1)])
        else:
            faces.append([(AL(u), 1), (s0, 1), (AL(v), -1), (col, -1)])
            faces.append([(AR(u), -1), (s1, 1), (AR(v), 1), (cor, -1)])
        cut_edges.update((col, cor))

    for cap in F.caps:
        faces.append(list(cap))

    return CutComplex(PolygonComplex(faces), chord_faces, frozenset(cut_edges))


@dataclass(frozen=True)
class Region:
    euler: int
    boundary_circles: int
    i_poles: int
    o_poles: int


def regions(
    F: ClosedSurface,
    curves: Iterable[EmbeddedCurve],
    poles: Iterable[tuple[int, tuple[int, int], str]] = (),
) -> tuple[Region, ...]:
    """Complementary regions of a family of disjoint curves, with pole
    incidences.  Each pole is (disk, chord, kind); a pole on a chord is
    incident to both regions bordering that chord copy (with multiplicity
    when a region borders it from both sides)."""
    curves = list(curves)
    cut = cut_complex(F, _chords_by_disk(F, curves), _split_bands(*curves))
    stats = cut.complex.piece_stats()
    icount = [0] * len(stats)
    ocount = [0] * len(stats)
    piece_of_face = cut.complex.face_piece
    for (disk, chord, kind) in poles:
        fa, fb = cut.chord_faces[(disk, chord)]
        for f in (fa, fb):
            p = piece_of_face[f]
            if kind == "I":
                icount[p] += 1
            else:
                ocount[p] += 1
    return tuple(
        Region(s["euler"], s["boundary_circles"], icount[p], ocount[p])
        for p, s in enumerate(stats)
    )
