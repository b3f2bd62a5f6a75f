"""Lattice and rational polytopes with exact arithmetic.

A :class:`Polytope` is the convex hull of finitely many points with integer
or rational coordinates. Polytopes that are not full-dimensional are handled
in the coordinates of the saturated lattice parallel to their affine hull, so
that volumes, lattice points and normal forms of faces are computed with
respect to the induced lattice.

Everything is brute force on purpose: the hull is found by testing every
hyperplane through ``dim`` points, which is fine for the small polytopes
(rank <= 6, a few dozen points) that occur here.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations, permutations, product
from math import ceil, factorial, floor

from . import linalg


def _frac_point(p):
    return tuple(Fraction(x) for x in p)


def _clean(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else x


def _clean_point(p):
    return tuple(_clean(x) for x in p)


class DegeneratePolytopeError(ValueError):
    pass


class Polytope:
    """Convex hull of a finite point set.

    ``vertices`` are sorted lexicographically. Integer coordinates are kept
    as ``int``; genuinely rational ones as ``Fraction``.
    """

    def __init__(self, points, name=None, notes=()):
        pts = sorted({_clean_point(p) for p in points})
        if not pts:
            raise ValueError("a polytope needs at least one point")
        self.ambient_dim = len(pts[0])
        self.name = name
        self.notes = list(notes)
        self._input = pts
        self._setup_affine_frame()
        self._compute_hull()

    # ------------------------------------------------------------------ frame
    def _setup_affine_frame(self):
        n = self.ambient_dim
        p0 = _frac_point(self._input[0])
        diffs = [[Fraction(x) - y for x, y in zip(p, p0)] for p in self._input[1:]]
        k = linalg.rank(diffs) if diffs else 0
        self.dim = k
        self._origin = p0
        if k == n:
            self._basis = None
            return
        # saturated lattice basis of the direction space
        normals = linalg.rational_nullspace(diffs, ncols=n) if diffs else linalg.identity(n)
        normals = [linalg.primitive(v) for v in normals]
        basis = linalg.integer_kernel(normals, ncols=n) if normals else linalg.identity(n)
        self._basis = linalg.transpose(basis)  # n x k, columns are basis vectors

    def to_local(self, p):
        """Coordinates of ``p`` in the lattice frame of the affine hull."""
        p = _frac_point(p)
        if self._basis is None:
            return p
        if self.dim == 0:
            return () if p == self._origin else None
        rhs = [a - b for a, b in zip(p, self._origin)]
        x = linalg.solve_rational(self._basis, rhs)
        if x is None:
            return None
        return tuple(x)

    def to_ambient(self, q):
        if self._basis is None:
            return _clean_point(q)
        v = linalg.matvec(self._basis, q)
        return _clean_point(a + b for a, b in zip(v, self._origin))

    # ------------------------------------------------------------------- hull
    def _compute_hull(self):
        k = self.dim
        local = [self.to_local(p) for p in self._input]
        self._local_input = local
        if k == 0:
            self.vertices = [self._input[0]]
            self._halfspaces = []
            self._vertex_local = [local[0]]
            return
        halfspaces = {}
        if k == 1:
            xs = [q[0] for q in local]
            halfspaces[((1,), min(xs))] = None
            halfspaces[((-1,), -max(xs))] = None
        else:
            for subset in combinations(range(len(local)), k):
                base = local[subset[0]]
                diffs = [[a - b for a, b in zip(local[i], base)] for i in subset[1:]]
                ns = linalg.rational_nullspace(diffs, ncols=k)
                if len(ns) != 1:
                    continue
                normal = linalg.primitive(ns[0])
                vals = [linalg.dot(normal, q) for q in local]
                c = linalg.dot(normal, base)
                lo = min(vals)
                hi = max(vals)
                if lo == c:
                    halfspaces[(tuple(normal), c)] = None
                if hi == c:
                    halfspaces[(tuple(-x for x in normal), -c)] = None
        self._halfspaces = sorted(halfspaces)
        verts = []
        for p, q in zip(self._input, local):
            active = [n for n, c in self._halfspaces if linalg.dot(n, q) == c]
            if active and linalg.rank(active) == k:
                verts.append(p)
        self.vertices = sorted(verts)
        self._vertex_local = [self.to_local(v) for v in self.vertices]

    # ------------------------------------------------------------- basic info
    @property
    def is_full_dimensional(self):
        return self.dim == self.ambient_dim

    @property
    def is_lattice(self):
        return all(isinstance(x, int) for v in self.vertices for x in v)

    def halfspaces(self):
        """Facet inequalities ``<normal, x> >= rhs`` (ambient, full-dim only).

        Normals are primitive integer vectors of the dual lattice.
        """
        if not self.is_full_dimensional:
            raise DegeneratePolytopeError("facets requested for a lower-dimensional polytope")
        return [(tuple(n), _clean(c)) for n, c in self._halfspaces]

    def local_halfspaces(self):
        return [(tuple(n), c) for n, c in self._halfspaces]

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Polytope{label} dim={self.dim} in Z^{self.ambient_dim}, {len(self.vertices)} vertices>"

    def __eq__(self, other):
        return isinstance(other, Polytope) and self.vertices == other.vertices

    def __hash__(self):
        return hash(tuple(self.vertices))

    def contains(self, p, strict=False):
        q = self.to_local(p)
        if q is None:
            return False
        for n, c in self._halfspaces:
            val = linalg.dot(n, q)
            if val < c or (strict and val == c):
                return False
        return True

    def contains_origin_in_interior(self):
        return self.is_full_dimensional and self.contains([0] * self.ambient_dim, strict=True)

    # ------------------------------------------------------------------ faces
    @cached_property
    def facet_vertex_sets(self):
        """Facets as frozensets of vertex indices, aligned with the halfspaces."""
        out = []
        for n, c in self._halfspaces:
            out.append(frozenset(i for i, q in enumerate(self._vertex_local) if linalg.dot(n, q) == c))
        return out

    def _affine_rank(self, idx):
        idx = sorted(idx)
        if not idx:
            return -1
        base = self._vertex_local[idx[0]]
        diffs = [[a - b for a, b in zip(self._vertex_local[i], base)] for i in idx[1:]]
        return linalg.rank(diffs) if diffs else 0

    @cached_property
    def faces(self):
        """Dict ``dim -> sorted list of faces`` (frozensets of vertex indices).

        Includes the polytope itself at ``dim`` and excludes the empty face.
        """
        facets = set(self.facet_vertex_sets)
        found = set(facets)
        frontier = set(facets)
        while frontier:
            new = set()
            for F in frontier:
                for G in facets:
                    H = F & G
                    if H and H not in found:
                        new.add(H)
            found |= new
            frontier = new
        by_dim = {d: [] for d in range(self.dim + 1)}
        for F in found:
            by_dim[self._affine_rank(F)].append(F)
        by_dim[self.dim] = [frozenset(range(len(self.vertices)))]
        if self.dim == 0:
            by_dim[0] = [frozenset([0])]
        for d in by_dim:
            by_dim[d].sort(key=lambda F: sorted(F))
        return by_dim

    def f_vector(self):
        return tuple(len(self.faces[d]) for d in range(self.dim))

    def face_polytope(self, face):
        return Polytope([self.vertices[i] for i in sorted(face)])

    def edges(self):
        return self.faces.get(1, [])

    # ---------------------------------------------------------- triangulation
    def _subfacets(self, face, d):
        return [G for G in self.faces[d - 1] if G < face]

    def triangulation(self):
        """Pulling triangulation: tuples of vertex indices, one per simplex."""
        memo = {}

        def tri(face, d):
            key = (face, d)
            if key in memo:
                return memo[key]
            if d == 0:
                res = [(min(face),)]
            else:
                v0 = min(face)
                res = []
                for G in self._subfacets(face, d):
                    if v0 in G:
                        continue
                    for s in tri(G, d - 1):
                        res.append((v0,) + s)
            memo[key] = res
            return res

        top = self.faces[self.dim][0]
        return tri(top, self.dim)

    def _simplex_volume(self, simplex):
        base = self._vertex_local[simplex[0]]
        M = [[a - b for a, b in zip(self._vertex_local[i], base)] for i in simplex[1:]]
        return abs(linalg.determinant(M)) if M else Fraction(1)

    def normalized_volume(self):
        """Euclidean volume times ``dim!`` in the lattice of the affine hull."""
        if self.dim == 0:
            return 1
        return _clean(sum(Fraction(self._simplex_volume(s)) for s in self.triangulation()))

    def euclidean_volume(self):
        """Relative volume (in the induced lattice frame), i.e. normalized / dim!."""
        return _clean(Fraction(self.normalized_volume()) / factorial(self.dim))

    def barycenter(self):
        """Exact centroid of the solid polytope."""
        if self.dim == 0:
            return _clean_point(self.vertices[0])
        total = Fraction(0)
        acc = [Fraction(0)] * self.ambient_dim
        for s in self.triangulation():
            w = Fraction(self._simplex_volume(s))
            total += w
            for i in s:
                for j, x in enumerate(self.vertices[i]):
                    acc[j] += w * x / len(s)
        return _clean_point(a / total for a in acc)

    # ---------------------------------------------------------- lattice points
    def lattice_points(self):
        lo = [floor(min(Fraction(v[i]) for v in self.vertices)) for i in range(self.ambient_dim)]
        hi = [ceil(max(Fraction(v[i]) for v in self.vertices)) for i in range(self.ambient_dim)]
        pts = []
        for p in product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
            if self.contains(p):
                pts.append(p)
        return sorted(pts)

    def interior_lattice_points(self):
        return [p for p in self.lattice_points() if self.contains(p, strict=True)]

    def boundary_lattice_points(self):
        return [p for p in self.lattice_points() if not self.contains(p, strict=True)]

    # -------------------------------------------------------------- dualities
    def polar(self):
        """``{m : <m, p> >= -1 for all p in P}``."""
        if not self.contains_origin_in_interior():
            raise ValueError("polar needs the origin in the interior")
        verts = []
        for n, c in self._halfspaces:
            verts.append(tuple(Fraction(x) / -Fraction(c) for x in n))
        return Polytope(verts)

    def is_fano(self):
        return (self.is_lattice and self.contains_origin_in_interior()
                and all(linalg.vec_gcd(v) == 1 for v in self.vertices))

    def is_reflexive(self):
        if not (self.is_lattice and self.contains_origin_in_interior()):
            return False
        return self.polar().is_lattice

    def is_centrally_symmetric(self):
        return sorted(tuple(-x for x in v) for v in self.vertices) == self.vertices

    def facet_interior_lattice_points(self):
        """Number of lattice points in the relative interior of each facet."""
        pts = self.lattice_points()
        locals_ = [self.to_local(p) for p in pts]
        counts = []
        for i, (n, c) in enumerate(self._halfspaces):
            cnt = 0
            for q in locals_:
                if linalg.dot(n, q) != c:
                    continue
                if all(linalg.dot(m, q) > d for j, (m, d) in enumerate(self._halfspaces) if j != i):
                    cnt += 1
            counts.append(cnt)
        return counts

    # ------------------------------------------------------------- transforms
    def transform(self, A):
        """Image under the linear map ``x -> A x``."""
        return Polytope([tuple(linalg.matvec(A, v)) for v in self.vertices])

    def translate(self, t):
        return Polytope([tuple(a + b for a, b in zip(v, t)) for v in self.vertices])

    def dilate(self, k):
        return Polytope([tuple(k * x for x in v) for v in self.vertices])

    def minkowski_sum(self, other):
        return Polytope([tuple(a + b for a, b in zip(u, v))
                         for u in self.vertices for v in other.vertices])

    def lattice_automorphisms(self):
        """Linear lattice automorphisms of P (GL(n, Z) elements permuting vertices).

        Returns ``(generators, order)``.
        """
        group = automorphism_group(self)
        return group_generators(group), len(group)

    # -------------------------------------------------------------------- io
    def to_dict(self):
        return {
            "lattice_rank": self.ambient_dim,
            "vertices": [[_json_num(x) for x in v] for v in self.vertices],
            "name": self.name,
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, data):
        if "vertices" not in data:
            raise ValueError("polytope JSON needs a 'vertices' list")
        verts = [tuple(_parse_num(x) for x in v) for v in data["vertices"]]
        rank = data.get("lattice_rank")
        if rank is not None and any(len(v) != rank for v in verts):
            raise ValueError("vertex length does not match lattice_rank")
        return cls(verts, name=data.get("name"), notes=data.get("notes", ()))

    @classmethod
    def from_json(cls, path):
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    @classmethod
    def from_inequalities(cls, inequalities):
        """Polytope ``{x : <a, x> >= b}`` from a bounded H-representation."""
        ineqs = [([Fraction(x) for x in a], Fraction(b)) for a, b in inequalities]
        n = len(ineqs[0][0])
        verts = set()
        for subset in combinations(range(len(ineqs)), n):
            A = [ineqs[i][0] for i in subset]
            if linalg.rank(A) < n:
                continue
            x = linalg.solve_rational(A, [ineqs[i][1] for i in subset])
            if all(linalg.dot(a, x) >= b for a, b in ineqs):
                verts.add(tuple(x))
        if not verts:
            raise DegeneratePolytopeError("empty or unbounded inequality system")
        return cls(verts)


def _json_num(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else str(x)


def _parse_num(x):
    if isinstance(x, bool):
        raise ValueError("booleans are not coordinates")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        return _clean(Fraction(x))
    if isinstance(x, float):
        raise ValueError("floating point coordinates are not accepted")
    raise ValueError(f"bad coordinate {x!r}")


# ---------------------------------------------------------------- automorphisms
def _mat_key(A):
    return tuple(tuple(r) for r in A)


def automorphism_group(P):
    """All GL(n, Z) matrices mapping the vertex set of ``P`` onto itself."""
    if not P.is_full_dimensional:
        raise DegeneratePolytopeError("automorphisms need a full-dimensional polytope")
    n = P.ambient_dim
    verts = [tuple(v) for v in P.vertices]
    vset = set(verts)
    # pick n linearly independent vertices as a frame
    frame = []
    for v in verts:
        if linalg.rank(frame + [list(v)]) > len(frame):
            frame.append(list(v))
        if len(frame) == n:
            break
    B = linalg.transpose(frame)
    Binv = linalg.inverse_rational(B)
    # vertex "degree" (number of facets through it) is preserved
    deg = [sum(1 for F in P.facet_vertex_sets if i in F) for i in range(len(verts))]
    frame_idx = [verts.index(tuple(v)) for v in frame]
    out = {}
    for images in permutations(range(len(verts)), n):
        if any(deg[i] != deg[j] for i, j in zip(frame_idx, images)):
            continue
        C = linalg.transpose([list(verts[j]) for j in images])
        A = linalg.matmul(C, Binv)
        if any(x.denominator != 1 for row in A for x in row):
            continue
        A = [[int(x) for x in row] for row in A]
        if abs(linalg.determinant(A)) != 1:
            continue
        if all(tuple(linalg.matvec(A, v)) in vset for v in verts):
            out[_mat_key(A)] = A
    return [out[k] for k in sorted(out)]


def closure(generators, n):
    ident = _mat_key(linalg.identity(n))
    seen = {ident}
    frontier = [ident]
    gens = [_mat_key(g) for g in generators]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = _mat_key(linalg.matmul(a, g))
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return seen


def group_generators(group):
    """Small generating set chosen greedily from a finite matrix group."""
    if not group:
        return []
    n = len(group[0])
    gens = []
    span = {_mat_key(linalg.identity(n))}
    for g in group:
        if _mat_key(g) not in span:
            gens.append(g)
            span = closure(gens, n)
        if len(span) == len(group):
            break
    return gens


# ------------------------------------------------------------ polygon classes
@dataclass(frozen=True)
class PolygonClass:
    tag: str
    normal_form: tuple = field(default=())


def _cyclic_vertices(P):
    """Vertex indices of a polygon in cyclic order (via its edges)."""
    adj = {i: [] for i in range(len(P.vertices))}
    for e in P.faces[1]:
        a, b = sorted(e)
        adj[a].append(b)
        adj[b].append(a)
    order = [0]
    prev = None
    cur = 0
    while True:
        nxt = [j for j in adj[cur] if j != prev]
        if not nxt or nxt[0] == 0:
            break
        prev, cur = cur, nxt[0]
        if cur == 0:
            break
        order.append(cur)
    return order


def polygon_normal_form(P):
    """Affine unimodular normal form of a lattice polygon (any ambient rank).

    For every starting vertex and orientation the columns ``v_j - v_start``
    are put in row Hermite normal form; the lexicographic minimum is a
    complete invariant of the affine GL(2, Z) class.
    """
    if P.dim != 2:
        raise DegeneratePolytopeError("polygon normal form needs a 2-dimensional polytope")
    pts = [P.to_local(v) for v in P.vertices]
    if any(x.denominator != 1 for q in pts for x in q):
        raise ValueError("polygon normal form needs a lattice polygon")
    pts = [tuple(int(x) for x in q) for q in pts]
    cyc = [pts[i] for i in _cyclic_vertices(P)]
    m = len(cyc)
    best = None
    for seq in (cyc, cyc[::-1]):
        for s in range(m):
            rot = seq[s:] + seq[:s]
            A = [[q[0] - rot[0][0] for q in rot], [q[1] - rot[0][1] for q in rot]]
            H, _ = linalg.hermite_normal_form(A)
            key = tuple(zip(H[0], H[1]))
            if best is None or key < best:
                best = key
    return best


_POLYGON_CATALOG = {
    "unimodular_triangle": [(0, 0), (1, 0), (0, 1)],
    "standard_square": [(0, 0), (1, 0), (0, 1), (1, 1)],
    "rect_1x2": [(0, 0), (1, 0), (0, 2), (1, 2)],
    "dP6_hexagon": [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)],
    "F1_quadrilateral": [(1, 0), (1, 1), (0, 1), (-1, -1)],
}


def _catalog_forms():
    return {polygon_normal_form(Polytope(v)): tag for tag, v in _POLYGON_CATALOG.items()}


_CATALOG_CACHE = {}


def classify_polygon(P):
    """Return the :class:`PolygonClass` of a lattice polygon."""
    if not _CATALOG_CACHE:
        _CATALOG_CACHE.update(_catalog_forms())
    nf = polygon_normal_form(P)
    return PolygonClass(_CATALOG_CACHE.get(nf, "other"), nf)


def lattice_length(p, q):
    """Lattice length of the segment [p, q] between lattice points."""
    return linalg.vec_gcd([a - b for a, b in zip(p, q)])


def random_unimodular(rng, n, steps=6, bound=2):
    """Random element of GL(n, Z) as a product of elementary matrices."""
    A = linalg.identity(n)
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        k = rng.randint(-bound, bound)
        for r in range(n):
            A[r][j] += k * A[r][i]
        if rng.random() < 0.3:
            A = [[-x if c == j else x for c, x in enumerate(row)] for row in A]
        if rng.random() < 0.3:
            for r in range(n):
                A[r][i], A[r][j] = A[r][j], A[r][i]
    return A
