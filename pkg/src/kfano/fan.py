"""Cones, fans and the toric-variety queries built on them.

Conventions follow the usual toric dictionary: a cone lives in ``N_R`` and
is generated by primitive ray vectors; characters live in the dual lattice
``M``. A torus-invariant divisor ``D = sum a_rho D_rho`` has moment polytope
``P_D = {m : <m, u_rho> >= -a_rho}``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from . import grobner, linalg
from .polytope import Polytope, classify_polygon


class NotStronglyConvexError(ValueError):
    pass


class IncompleteFanError(ValueError):
    pass


def _lcm(a, b):
    from math import gcd
    return a * b // gcd(a, b)


class Cone:
    """Rational polyhedral cone generated by primitive integer rays."""

    def __init__(self, rays, ambient_rank=None):
        rays = [tuple(linalg.primitive(r)) for r in rays]
        if any(not any(r) for r in rays):
            raise ValueError("zero ray")
        self.rays = sorted(set(rays))
        self.ambient_rank = ambient_rank if ambient_rank is not None else len(self.rays[0])
        self.dim = linalg.rank(self.rays) if self.rays else 0
        if not self.is_strongly_convex():
            raise NotStronglyConvexError("cone is not strongly convex")

    def __repr__(self):
        return f"Cone({self.rays})"

    def __eq__(self, other):
        return isinstance(other, Cone) and self.rays == other.rays

    def __hash__(self):
        return hash(tuple(self.rays))

    def is_strongly_convex(self):
        if not self.rays:
            return True
        hull = Polytope([(0,) * self.ambient_rank] + self.rays)
        origin = (0,) * self.ambient_rank
        return origin in hull.vertices

    # --------------------------------------------------------- local frame
    @property
    def _frame(self):
        """Lattice basis (columns) of the saturated span of the rays."""
        if not hasattr(self, "_frame_cache"):
            n = self.ambient_rank
            if self.dim == n:
                self._frame_cache = None
            else:
                normals = [linalg.primitive(v) for v in linalg.rational_nullspace(self.rays, ncols=n)]
                basis = linalg.integer_kernel(normals, ncols=n)
                self._frame_cache = linalg.transpose(basis)
        return self._frame_cache

    def local_rays(self):
        """Rays in coordinates of the saturated lattice spanned by the cone."""
        if self._frame is None:
            return [list(r) for r in self.rays]
        return [linalg.integer_solve(self._frame, r) for r in self.rays]

    # ---------------------------------------------------------- structure
    def facet_normals(self):
        """Primitive inner normals ``u`` (in the local frame) of the facets: ``<u, r> >= 0``."""
        local = self.local_rays()
        k = self.dim
        if k == 1:
            return [[1] if local[0][0] > 0 else [-1]]
        hull = Polytope([(0,) * k] + [tuple(r) for r in local])
        return [list(n) for n, c in hull.local_halfspaces() if c == 0]

    def faces(self):
        """Faces as sorted tuples of ray indices, grouped by dimension."""
        normals = self.facet_normals()
        local = self.local_rays()
        facet_sets = [frozenset(i for i, r in enumerate(local) if linalg.dot(u, r) == 0) for u in normals]
        found = {frozenset(range(len(self.rays))), frozenset()}
        frontier = set(facet_sets)
        found |= frontier
        while frontier:
            new = set()
            for F in frontier:
                for G in facet_sets:
                    H = F & G
                    if H not in found:
                        new.add(H)
            found |= new
            frontier = new
        out = {}
        for F in found:
            d = linalg.rank([self.rays[i] for i in F]) if F else 0
            out.setdefault(d, []).append(tuple(sorted(F)))
        for d in out:
            out[d].sort()
        return out

    def is_simplicial(self):
        return len(self.rays) == self.dim

    def is_smooth(self):
        if not self.is_simplicial():
            return False
        return linalg.lattice_index(self.local_rays()) == 1

    def multiplicity(self):
        """Index of the ray lattice in the saturated span (simplicial cones)."""
        return linalg.lattice_index(self.local_rays())

    def gorenstein_functional(self):
        """Rational ``m`` in the local dual with ``<m, r> = 1`` for every ray, or None."""
        local = self.local_rays()
        m = linalg.solve_rational(local, [1] * len(local))
        return m

    def gorenstein_index(self):
        m = self.gorenstein_functional()
        if m is None:
            return None
        r = 1
        for x in m:
            r = _lcm(r, Fraction(x).denominator)
        return r

    def quotient_type(self):
        """``(r, weights)`` for a simplicial cone with cyclic group ``N / <rays>``.

        ``weights`` is the lexicographically smallest sorted weight tuple over
        all generators of the group, so ``1/3(1,1,2)`` comes back as
        ``(3, (1, 1, 2))``. Returns None for smooth or non-cyclic cones.
        """
        if not self.is_simplicial():
            return None
        B = self.local_rays()
        r = self.multiplicity()
        if r == 1:
            return None
        divisors = linalg.elementary_divisors(B)
        if divisors[-1] != r:
            return None  # not cyclic
        Binv = linalg.inverse_rational(linalg.transpose(B))
        k = len(B)
        hi = [max(0, sum(max(0, row[i]) for row in B)) for i in range(k)]
        lo = [min(0, sum(min(0, row[i]) for row in B)) for i in range(k)]
        best = None
        for p in product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
            lam = linalg.matvec(Binv, p)
            if not all(0 <= x < 1 for x in lam):
                continue
            if not any(lam):
                continue
            w = tuple(sorted(int(x * r) for x in lam))
            # order of this element is r iff gcd(r, entries) == 1
            g = r
            for x in w:
                g = linalg.vec_gcd([g, x])
            if g != 1:
                continue
            if best is None or w < best:
                best = w
        return (r, best) if best else None

    def height_one_points(self):
        """Lattice points of ``conv(0, rays)`` (Gorenstein-type cones only)."""
        local = self.local_rays()
        return Polytope([(0,) * self.dim] + [tuple(r) for r in local]).lattice_points()

    def is_canonical(self):
        m = self.gorenstein_functional()
        if m is None:
            return None
        local = self.local_rays()
        hull = Polytope([(0,) * self.dim] + [tuple(r) for r in local])
        for p in hull.lattice_points():
            h = linalg.dot(m, p)
            if any(p) and h < 1:
                return False
        return True

    def is_terminal(self):
        m = self.gorenstein_functional()
        if m is None:
            return None
        local = [tuple(r) for r in self.local_rays()]
        hull = Polytope([(0,) * self.dim] + local)
        allowed = set(local) | {(0,) * self.dim}
        return all(tuple(p) in allowed for p in hull.lattice_points())

    def report(self):
        q = self.quotient_type()
        return {
            "rays": [list(r) for r in self.rays],
            "dim": self.dim,
            "simplicial": self.is_simplicial(),
            "smooth": self.is_smooth(),
            "gorenstein_index": self.gorenstein_index(),
            "quotient_type": None if q is None else format_quotient_type(*q),
            "canonical": self.is_canonical(),
            "terminal": self.is_terminal(),
        }

    # ------------------------------------------------------------ dual cone
    def dual_generators(self):
        """Primitive generators of the dual cone (full-dimensional cones)."""
        if self.dim != self.ambient_rank:
            raise ValueError("dual-cone generators need a full-dimensional cone")
        return sorted(tuple(u) for u in self.facet_normals())

    def in_dual(self, m):
        return all(linalg.dot(m, r) >= 0 for r in self.rays)

    def dual_hilbert_basis(self):
        """Minimal generators of the monoid ``σ∨ ∩ M``."""
        gens = self.dual_generators()
        n = self.ambient_rank
        lo = [sum(min(0, g[i]) for g in gens) for i in range(n)]
        hi = [sum(max(0, g[i]) for g in gens) for i in range(n)]
        cand = []
        for p in product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
            if any(p) and self.in_dual(p):
                cand.append(p)
        basis = []
        for x in cand:
            reducible = False
            for y in cand:
                if y == x:
                    continue
                d = tuple(a - b for a, b in zip(x, y))
                if any(d) and self.in_dual(d):
                    reducible = True
                    break
            if not reducible:
                basis.append(x)
        return sorted(basis)


def dual_cone_hilbert_basis(cone):
    return cone.dual_hilbert_basis()


def format_quotient_type(r, weights):
    return f"1/{r}({','.join(str(w) for w in weights)})"


@dataclass
class ChartPresentation:
    variables: list
    degrees: list
    ideal: object

    def relations(self):
        return [str(g) for g in self.ideal.gens]


def chart_presentation(cone, names=None):
    """Affine toric chart ``Spec C[σ∨ ∩ M]`` as a quotient of a polynomial ring."""
    hb = cone.dual_hilbert_basis()
    names = names or [f"u{i}" for i in range(len(hb))]
    if len(names) != len(hb):
        raise ValueError("need one name per Hilbert-basis element")
    ideal = grobner.toric_ideal(hb, names=names)
    return ChartPresentation(list(names), hb, ideal)


# ------------------------------------------------------------------- fans
class Fan:
    """A fan given by its maximal cones (each a tuple of indices into ``rays``)."""

    def __init__(self, rays, cones, ambient_rank=None):
        self.rays = [tuple(linalg.primitive(r)) for r in rays]
        self.ambient_rank = ambient_rank or len(self.rays[0])
        self.cones = sorted(tuple(sorted(c)) for c in cones)
        self._cone_objs = [Cone([self.rays[i] for i in c], self.ambient_rank) for c in self.cones]

    def __repr__(self):
        return f"<Fan: {len(self.rays)} rays, {len(self.cones)} maximal cones>"

    def maximal_cones(self):
        return list(self._cone_objs)

    def cone_sets(self):
        return {frozenset(self.rays[i] for i in c) for c in self.cones}

    def same_as(self, other):
        return self.cone_sets() == other.cone_sets()

    def cones_of_dim(self, d):
        """All cones of dimension ``d`` as sorted tuples of global ray indices."""
        out = set()
        for c, obj in zip(self.cones, self._cone_objs):
            for face in obj.faces().get(d, []):
                local_rays = [obj.rays[i] for i in face]
                out.add(tuple(sorted(self.rays.index(r) for r in local_rays)))
        return sorted(out)

    def face_counts(self):
        """``(d_1, ..., d_n)``: number of cones of each positive dimension."""
        return tuple(len(self.cones_of_dim(d)) for d in range(1, self.ambient_rank + 1))

    def is_complete(self):
        """Every wall of a maximal cone is shared by exactly two maximal cones."""
        n = self.ambient_rank
        walls = {}
        for obj in self._cone_objs:
            if obj.dim != n:
                return False
            for face in obj.faces().get(n - 1, []):
                key = frozenset(obj.rays[i] for i in face)
                walls[key] = walls.get(key, 0) + 1
        return bool(walls) and all(v == 2 for v in walls.values())

    def is_simplicial(self):
        return all(c.is_simplicial() for c in self._cone_objs)

    def is_smooth(self):
        return all(c.is_smooth() for c in self._cone_objs)

    # ----------------------------------------------------------- divisors
    def _cartier_data(self, coeffs, integral):
        """Per-cone ``m_σ`` with ``<m_σ, u_ρ> = -a_ρ``, or None."""
        data = []
        for c in self.cones:
            A = [list(self.rays[i]) for i in c]
            b = [-coeffs[i] for i in c]
            m = linalg.solve_rational(A, b)
            if m is None:
                return None
            if any(linalg.dot(A[k], m) != b[k] for k in range(len(A))):
                return None
            if integral and self._cone_objs[0].dim == self.ambient_rank:
                if any(Fraction(x).denominator != 1 for x in m):
                    return None
            data.append(m)
        return data

    def is_cartier(self, coeffs):
        return self._cartier_data(coeffs, integral=True) is not None

    def is_q_cartier(self, coeffs):
        return self._cartier_data(coeffs, integral=False) is not None

    def is_nef(self, coeffs):
        """Nef test for a Q-Cartier divisor: each ``m_σ`` satisfies every ray inequality."""
        data = self._cartier_data(coeffs, integral=False)
        if data is None:
            raise ValueError("divisor is not Q-Cartier")
        for m in data:
            for i, u in enumerate(self.rays):
                if linalg.dot(m, u) < -coeffs[i]:
                    return False
        return True

    def is_ample(self, coeffs):
        """Strict convexity: ``m_σ`` violates no ray inequality and is strict off σ."""
        data = self._cartier_data(coeffs, integral=False)
        if data is None:
            return False
        for m, c in zip(data, self.cones):
            for i, u in enumerate(self.rays):
                val = linalg.dot(m, u)
                if i in c:
                    continue
                if val <= -coeffs[i]:
                    return False
        return True

    def moment_polytope(self, coeffs):
        n = self.ambient_rank
        ineqs = [(list(u), -a) for u, a in zip(self.rays, coeffs)]
        return Polytope.from_inequalities(ineqs)

    def picard_rank(self):
        if not self.is_complete():
            raise IncompleteFanError("Picard rank is only computed for complete fans")
        n = self.ambient_rank
        d = len(self.rays)
        nc = len(self.cones)
        # unknowns: a_1..a_d, then m_σ (n each)
        rows = []
        for k, c in enumerate(self.cones):
            for i in c:
                row = [0] * (d + n * nc)
                row[i] = 1
                for j in range(n):
                    row[d + n * k + j] = self.rays[i][j]
                rows.append(row)
        sol_dim = d + n * nc - linalg.rank(rows)
        return sol_dim - n

    def divisor_class_matrix(self):
        """Integer kernel of the ray matrix: rows are the linear relations among rays."""
        return linalg.integer_kernel(linalg.transpose(self.rays), ncols=len(self.rays))


def face_fan(P):
    """Face fan of a Fano polytope: cones over the facets."""
    if not P.is_fano():
        raise ValueError("face fan needs a Fano polytope (origin interior, primitive vertices)")
    rays = list(P.vertices)
    return Fan(rays, [tuple(sorted(F)) for F in P.facet_vertex_sets])


def normal_fan(Q):
    """Normal fan of a full-dimensional polytope: cones of inner facet normals at each vertex."""
    hs = Q.halfspaces()
    rays = [tuple(n) for n, _ in hs]
    cones = []
    for v in Q.vertices:
        cones.append(tuple(i for i, (n, c) in enumerate(hs) if linalg.dot(n, v) == c))
    return Fan(rays, cones)


# ------------------------------------------------------- singular locus
@dataclass
class SingularComponent:
    kind: str
    key: str
    source: dict = field(default_factory=dict)

    def to_dict(self):
        return {"kind": self.kind, "key": self.key, "source": self.source}


@dataclass
class SingularLocusReport:
    components: list

    def kinds(self):
        from collections import Counter
        return dict(Counter(c.kind for c in self.components))

    def keys(self):
        from collections import Counter
        return dict(Counter(c.key for c in self.components))

    def to_dict(self):
        return {"components": [c.to_dict() for c in self.components],
                "count": len(self.components)}


_POLYGON_KEYS = {
    "dP6_hexagon": "dP6_cone",
    "F1_quadrilateral": "F1_cone",
    "standard_square": "ODP",
}


def _edge_is_singular(u, v):
    return Cone([u, v]).multiplicity() > 1


def singular_locus_report(P):
    """Connected components of the singular locus of the toric variety of ``P``'s face fan.

    Torus-fixed points come from facets, torus-invariant curves from edges.
    A curve is singular when the 2-cone over its edge is not smooth; curves
    are glued through shared fixed points, and singular facets not touched by
    a singular curve become isolated points.
    """
    verts = P.vertices
    facets = P.facet_vertex_sets
    hs = P.halfspaces()
    edges = P.edges()
    sing_edges = [e for e in edges if _edge_is_singular(*[verts[i] for i in sorted(e)])]

    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for e in sing_edges:
        parent[("e", tuple(sorted(e)))] = ("e", tuple(sorted(e)))
    for fi, F in enumerate(facets):
        for e in sing_edges:
            if e <= F:
                node = ("f", fi)
                parent.setdefault(node, node)
                union(node, ("e", tuple(sorted(e))))

    components = []
    groups = {}
    for node in parent:
        groups.setdefault(find(node), []).append(node)
    for nodes in sorted(groups.values(), key=lambda ns: sorted(ns)):
        curve_edges = sorted(n[1] for n in nodes if n[0] == "e")
        points = sorted(n[1] for n in nodes if n[0] == "f")
        cones = [Cone([verts[i] for i in e]) for e in curve_edges]
        types = sorted({c.multiplicity() for c in cones})
        label = "A1" if types == [2] else "A" + "/".join(str(t - 1) for t in types)
        # a cycle: every fixed point on the component meets exactly two curves
        degree = {p: sum(1 for e in curve_edges if set(e) <= facets[p]) for p in points}
        is_cycle = len(curve_edges) >= 2 and all(d == 2 for d in degree.values()) \
            and len(points) == len(curve_edges)
        kind = "transverse_A1_curve_cycle" if is_cycle else "transverse_A1_curve"
        if label != "A1":
            kind = kind.replace("A1", "A")
        components.append(SingularComponent(kind, f"transverse_{label}", {
            "edges": [[list(verts[i]) for i in e] for e in curve_edges],
            "curves": len(curve_edges),
            "fixed_points": len(points),
            "facets": [[list(verts[i]) for i in sorted(facets[p])] for p in points],
        }))

    on_curves = {n[1] for n in parent if n[0] == "f"}
    for fi, F in enumerate(facets):
        if fi in on_curves:
            continue
        cone = Cone([verts[i] for i in F])
        if cone.is_smooth():
            continue
        fverts = [list(verts[i]) for i in sorted(F)]
        src = {"facet": fverts, "normal": list(hs[fi][0]), "rhs": hs[fi][1]}
        if cone.gorenstein_index() == 1:
            tag = classify_polygon(P.face_polytope(F)).tag if len(F) > 3 or P.dim == 3 else "other"
            key = _POLYGON_KEYS.get(tag, f"gorenstein_{tag}")
            components.append(SingularComponent("isolated_gorenstein_cone", key, src))
        else:
            q = cone.quotient_type()
            key = format_quotient_type(*q) if q else f"index_{cone.gorenstein_index()}"
            components.append(SingularComponent("isolated_quotient", key, src))
    components.sort(key=lambda c: (c.kind, c.key, str(c.source)))
    return SingularLocusReport(components)
