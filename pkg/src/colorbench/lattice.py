"""Triangular (2D) and tetrahedral (3D) color-code lattices.

The 3D lattice is carved out of the two-interleaved-cubic-lattice (bcc)
tessellation of space into "disphenoid" tetrahedra: integer points carry
colors Y/G by coordinate-parity, body centers carry R/B, and every
tetrahedron has one vertex of each color.  A distance-d code uses the
chunk of points inside four half-spaces with (111)-type normals; the
chunk surface is closed off with four far-away boundary vertices (one
per color), giving a triangulated solid tetrahedron.  The 2D triangular
lattice is the facet of the 3D one around the Y boundary vertex.

All coordinates are stored doubled so that body centers are integers.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache

COLORS = ("R", "G", "B", "Y")

# outward normals of the four facet cuts, and the base (doubled) offsets
_NORMALS = {"R": (1, 1, 1), "G": (1, -1, -1), "B": (-1, 1, -1), "Y": (-1, -1, 1)}
_BASE_OFFSET = {"R": 0, "G": 1, "B": 2, "Y": 3}
_GROWTH_ORDER = "RGBY"


def _color_of(p):
    """Color of a doubled-coordinate bcc point."""
    if p[0] % 2 == 0:
        return "Y" if (p[0] + p[1] + p[2]) % 4 == 0 else "G"
    off = (p[0] - 1) // 2 + (p[1] - 1) // 2 + (p[2] - 1) // 2
    return "R" if off % 2 else "B"


def _thresholds(d):
    c = dict(_BASE_OFFSET)
    for i in range((d - 3) // 2):
        c[_GROWTH_ORDER[i % 4]] += 4
    return c


def _dot(n, p):
    return n[0] * p[0] + n[1] * p[1] + n[2] * p[2]


def _check_distance(d):
    if d < 3 or d % 2 == 0:
        raise ValueError(f"distance must be odd and >= 3, got {d}")


@dataclass
class Chain:
    """F2 chain: a subset of the level-k simplices, stored as a bitmask."""
    level: int
    bits: int = 0

    def __xor__(self, other):
        if self.level != other.level:
            raise ValueError("cannot add chains of different levels")
        return Chain(self.level, self.bits ^ other.bits)

    def indices(self):
        b, i, out = self.bits, 0, []
        while b:
            if b & 1:
                out.append(i)
            b >>= 1
            i += 1
        return out


class ColorLattice:
    """Simplicial complex with (D+1)-colored vertices; qubits on D-simplices.

    Vertices are integers 0..nv-1; simplices[k] lists sorted vertex
    tuples.  Boundary vertices (one per color) carry no stabilizer and
    have coords None.
    """

    def __init__(self, dimension, distance, colors, coords, boundary,
                 simplices):
        self.dimension = dimension
        self.distance = distance
        self.colors = colors
        self.coords = coords
        self.boundary = boundary
        self.simplices = simplices
        self.index = [
            {s: i for i, s in enumerate(level)} for level in simplices
        ]
        self.boundary_vertex = {
            colors[v]: v for v in range(len(colors)) if boundary[v]
        }
        self._bnd_cache = {}
        self._interior_cache = {}

    # -- basic views ---------------------------------------------------

    @property
    def n_vertices(self):
        return len(self.colors)

    @property
    def qubits(self):
        return self.simplices[self.dimension]

    @property
    def n_qubits(self):
        return len(self.qubits)

    def is_interior_vertex(self, v):
        return not self.boundary[v]

    def interior_vertices(self):
        return [v for v in range(self.n_vertices) if not self.boundary[v]]

    def interior_simplices(self, k):
        """Indices of k-simplices containing at least one interior vertex."""
        if k not in self._interior_cache:
            self._interior_cache[k] = [
                i for i, s in enumerate(self.simplices[k])
                if any(not self.boundary[v] for v in s)
            ]
        return self._interior_cache[k]

    def vertex_count_by_color(self):
        out = {}
        for c in set(self.colors):
            out[c] = sum(1 for x in self.colors if x == c)
        return out

    # -- incidence -----------------------------------------------------

    def bnd(self, a, b):
        """Incidence lists of the generalized boundary map bnd_{a,b}.

        bnd(a,b)[i] = sorted tuple of b-simplex indices incident to the
        i-th a-simplex (faces of it for a > b, cofaces for a < b).
        """
        D = self.dimension
        if not (0 <= a <= D and 0 <= b <= D):
            raise ValueError(f"levels must lie in [0, {D}]")
        key = (a, b)
        if key in self._bnd_cache:
            return self._bnd_cache[key]
        if a == b:
            out = tuple((i,) for i in range(len(self.simplices[a])))
        elif a > b:
            idx = self.index[b]
            out = tuple(
                tuple(sorted(idx[f]
                             for f in itertools.combinations(s, b + 1)))
                for s in self.simplices[a]
            )
        else:
            down = self.bnd(b, a)
            lists = [[] for _ in self.simplices[a]]
            for j, faces in enumerate(down):
                for i in faces:
                    lists[i].append(j)
            out = tuple(tuple(sorted(l)) for l in lists)
        self._bnd_cache[key] = out
        return out

    def boundary_chain(self, chain: Chain, b: int) -> Chain:
        """Apply bnd_{a,b} to a chain (F2-linear)."""
        a = chain.level
        inc = self.bnd(a, b)
        out = 0
        bits = chain.bits
        i = 0
        while bits:
            if bits & 1:
                for j in inc[i]:
                    out ^= 1 << j
            bits >>= 1
            i += 1
        return Chain(b, out)

    def simplex_mask(self, k, indices):
        m = 0
        for i in indices:
            m |= 1 << i
        return Chain(k, m)

    # -- stabilizer supports --------------------------------------------

    def vertex_qubit_mask(self, v):
        """Mask over qubits of the D-simplices containing vertex v."""
        m = 0
        for j in self.bnd(0, self.dimension)[v]:
            m |= 1 << j
        return m

    def edge_qubit_mask(self, e):
        m = 0
        for j in self.bnd(1, self.dimension)[e]:
            m |= 1 << j
        return m

    def stabilizer_supports(self):
        """(X-type, Z-type) stabilizer generator supports as qubit masks.

        2D code: X and Z both on interior vertices.  3D stabilizer code:
        X on interior vertices, Z on interior edges.
        """
        xs = [self.vertex_qubit_mask(v) for v in self.interior_vertices()]
        if self.dimension == 2:
            return xs, list(xs)
        zs = [self.edge_qubit_mask(e) for e in self.interior_simplices(1)]
        return xs, zs

    # -- serialization ---------------------------------------------------

    def to_json_dict(self):
        return {
            "dimension": self.dimension,
            "distance": self.distance,
            "vertices": [
                {"color": self.colors[v], "boundary": self.boundary[v],
                 "coords": list(self.coords[v]) if self.coords[v] else None}
                for v in range(self.n_vertices)
            ],
            "simplices": {
                str(k): [list(s) for s in level]
                for k, level in enumerate(self.simplices)
            },
        }

    def dump(self, fp):
        json.dump(self.to_json_dict(), fp)

    @classmethod
    def from_json_dict(cls, obj):
        nv = len(obj["vertices"])
        colors = [v["color"] for v in obj["vertices"]]
        coords = [tuple(v["coords"]) if v["coords"] else None
                  for v in obj["vertices"]]
        boundary = [bool(v["boundary"]) for v in obj["vertices"]]
        dim = obj["dimension"]
        simplices = [
            [tuple(s) for s in obj["simplices"][str(k)]]
            for k in range(dim + 1)
        ]
        assert all(len(s) == 1 for s in simplices[0]) and nv == len(simplices[0])
        return cls(dim, obj["distance"], colors, coords, boundary, simplices)

    @classmethod
    def load(cls, fp):
        return cls.from_json_dict(json.load(fp))


# -- 3D construction ----------------------------------------------------


def _interior_points(c2):
    lim = max(c2.values()) + 6
    pts = set()
    for x in range(-lim, lim + 1):
        for y in range(-lim, lim + 1):
            if (x + y) % 2:
                continue
            # z range from the four inequalities
            for z in range(-lim, lim + 1):
                if (x + z) % 2:
                    continue
                p = (x, y, z)
                if all(_dot(_NORMALS[K], p) <= c2[K] for K in COLORS):
                    pts.add(p)
    return pts


def _cells_touching(pts):
    """All bcc disphenoids with at least one vertex in pts."""
    cells = set()
    for P in pts:
        for a in range(3):
            for s in (-2, 2):
                P2 = list(P)
                P2[a] += s
                P2 = tuple(P2)
                others = [u for u in range(3) if u != a]
                sp = s // 2
                corners = []
                for su, sv in itertools.product((-1, 1), repeat=2):
                    q = list(P)
                    q[a] += sp
                    q[others[0]] += su
                    q[others[1]] += sv
                    corners.append(tuple(q))
                for Q, Q2 in itertools.combinations(corners, 2):
                    if sum(1 for i in range(3) if Q[i] != Q2[i]) == 1:
                        cells.add(frozenset((P, P2, Q, Q2)))
    return cells


def _close_chunk(pts):
    """Interior cells plus the coning closure onto boundary vertices.

    Every deficient triangle (in exactly one cell, not all-boundary) is
    coned to the boundary vertex of its missing color; iterate until the
    only exposed triangles are the four outer all-boundary ones.
    """
    cells = {c for c in _cells_touching(pts) if c <= pts}
    simplices = set(cells)

    def fcolor(x):
        return x[1] if isinstance(x, str) else _color_of(x)

    while True:
        count = {}
        for cell in simplices:
            for f in itertools.combinations(sorted(cell, key=str), 3):
                fs = frozenset(f)
                count[fs] = count.get(fs, 0) + 1
        add = set()
        for f, cnt in count.items():
            if cnt != 1 or all(isinstance(x, str) for x in f):
                continue
            missing = (set(COLORS) - {fcolor(x) for x in f}).pop()
            cell = f | {"v" + missing}
            if cell not in simplices:
                add.add(cell)
        if not add:
            break
        simplices |= add
    return simplices


@lru_cache(maxsize=None)
def build_3d(d: int) -> ColorLattice:
    """Tetrahedral-boundary 3D color-code lattice of odd distance d."""
    _check_distance(d)
    pts = _interior_points(_thresholds(d))
    cells = _close_chunk(pts)

    # vertex numbering: interior points sorted, then boundary vertices
    interior = sorted(pts)
    vmap = {p: i for i, p in enumerate(interior)}
    nv = len(interior)
    for K in COLORS:
        vmap["v" + K] = nv
        nv += 1
    colors = [_color_of(p) for p in interior] + list(COLORS)
    coords = [p for p in interior] + [None] * 4
    boundary = [False] * len(interior) + [True] * 4

    tets = sorted({tuple(sorted(vmap[x] for x in c)) for c in cells})
    faces = sorted({f for t in tets for f in itertools.combinations(t, 3)})
    edges = sorted({e for t in tets for e in itertools.combinations(t, 2)})
    verts = [(v,) for v in range(nv)]
    return ColorLattice(3, d, colors, coords, boundary,
                        [verts, edges, faces, tets])


# -- 2D as a facet of 3D -------------------------------------------------


# in-plane integer axes for projecting each facet's coordinates
_FACET_AXES = {
    "Y": ((1, -1, 0), (1, 1, 2)),
    "R": ((1, -1, 0), (1, 1, -2)),
    "G": ((0, 1, -1), (2, 1, 1)),
    "B": ((1, 0, 1), (1, -2, -1)),
}


def extract_facet(lat: ColorLattice, K: str = "Y"):
    """2D color-code patch around boundary vertex v_K of a 3D lattice.

    Returns (patch, face_to_tet, vertex_to_parent): the facet sublattice
    as a 2D ColorLattice, plus index maps into the parent.
    """
    if lat.dimension != 3:
        raise ValueError("facet extraction needs a 3D lattice")
    vb = lat.boundary_vertex[K]
    tet_idx = lat.bnd(0, 3)[vb]
    faces3 = []
    for ti in tet_idx:
        t = lat.simplices[3][ti]
        faces3.append((tuple(v for v in t if v != vb), ti))

    pverts = sorted({v for f, _ in faces3 for v in f})
    vmap = {v: i for i, v in enumerate(pverts)}
    colors = [lat.colors[v] for v in pverts]
    boundary = [lat.boundary[v] for v in pverts]
    a1, a2 = _FACET_AXES[K]
    coords = []
    for v in pverts:
        p = lat.coords[v]
        coords.append((_dot(a1, p), _dot(a2, p)) if p is not None else None)

    faces = sorted(tuple(sorted(vmap[v] for v in f)) for f, _ in faces3)
    f2t = {}
    for f, ti in faces3:
        f2t[tuple(sorted(vmap[v] for v in f))] = ti
    edges = sorted({e for f in faces for e in itertools.combinations(f, 2)})
    verts = [(v,) for v in range(len(pverts))]
    patch = ColorLattice(2, lat.distance, colors, coords, boundary,
                         [verts, edges, faces])
    face_to_tet = [f2t[f] for f in faces]
    return patch, face_to_tet, pverts


@lru_cache(maxsize=None)
def build_2d(d: int) -> ColorLattice:
    """Triangular-boundary 2D color-code lattice of odd distance d."""
    _check_distance(d)
    patch, _, _ = extract_facet(build_3d(d), "Y")
    return patch


# -- derived structure ----------------------------------------------------


def bicolor_qubits(lat: ColorLattice):
    """Split 3D qubits into (white, black) so no same-color pair shares a face.

    The primal graph (tetrahedra adjacent through shared triangles) is
    bipartite; white is the larger class, which receives T (black gets
    T^-1) in the transversal T-gate.
    """
    if lat.dimension != 3:
        raise ValueError("bicoloring applies to 3D lattices")
    adj = [[] for _ in lat.qubits]
    by_face = {}
    for ti, t in enumerate(lat.qubits):
        for f in itertools.combinations(t, 3):
            by_face.setdefault(f, []).append(ti)
    for f, ts in by_face.items():
        if len(ts) == 2:
            adj[ts[0]].append(ts[1])
            adj[ts[1]].append(ts[0])
        elif len(ts) > 2:
            raise AssertionError("face shared by more than two tetrahedra")
    color = [-1] * len(lat.qubits)
    for start in range(len(lat.qubits)):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    raise AssertionError("primal lattice is not bipartite")
    cls0 = {i for i, c in enumerate(color) if c == 0}
    cls1 = {i for i, c in enumerate(color) if c == 1}
    return (cls0, cls1) if len(cls0) >= len(cls1) else (cls1, cls0)


class RestrictedLattice:
    """Color-restricted sublattice: vertices with colors in K, edges among them."""

    def __init__(self, parent: ColorLattice, K):
        K = frozenset(K)
        unknown = K - set(parent.colors)
        if not K or unknown:
            raise ValueError(f"bad color set {sorted(K)}")
        self.parent = parent
        self.K = K
        self.vertices = [v for v in range(parent.n_vertices)
                         if parent.colors[v] in K]
        vset = set(self.vertices)
        self.edges = []
        self.edge_index = {}
        self.adj = {v: [] for v in self.vertices}
        for ei, (u, w) in enumerate(parent.simplices[1]):
            if u in vset and w in vset:
                self.edge_index[(u, w)] = ei
                self.edges.append((u, w))
                self.adj[u].append(w)
                self.adj[w].append(u)

    def is_boundary_edge(self, u, w):
        return self.parent.boundary[u] and self.parent.boundary[w]

    def parent_edge_index(self, u, w):
        return self.edge_index[(u, w) if u < w else (w, u)]


def restrict(lat: ColorLattice, K) -> RestrictedLattice:
    return RestrictedLattice(lat, K)


# -- closed-form counts (paper appendix tables) ----------------------------


def counts_2d(d):
    """(vertices, edges, faces) closed forms for the triangular lattice."""
    return (3 * (d * d + 7) // 8, 3 * (3 * d * d + 5) // 8,
            (1 + 3 * d * d) // 4)


def counts_3d(d):
    """(vertices, edges, faces, tetrahedra) closed forms for the 3D lattice."""
    return ((d - 1) * (d + 1) * (d + 3) // 12 + 4,
            (d - 1) * (7 * d * d + 10 * d + 15) // 12 + 6,
            d ** 3 + d + 2,
            (d ** 3 + d) // 2)


def n_2d(d):
    """Physical qubits (data + syndrome ancillas) of a distance-d 2D patch."""
    return (3 * d * d - 1) // 2
