"""Scaffoldings: ambient smooth toric varieties and embedding equations.

A scaffolding on a Fano polytope ``P`` in ``N = Nbar + N_U`` is a list of
struts ``(D, chi)``: ``D`` a torus-invariant divisor on a shape variety ``Z``
(whose fan lives in the dual ``Mbar``) and ``chi`` in ``N_U``. The ambient
lattice is ``Div(Z) + N_U``.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from importlib import resources

from . import grobner, linalg
from .fan import Cone, normal_fan
from .polytope import Polytope


class ScaffoldingError(ValueError):
    pass


@dataclass
class Strut:
    name: str
    divisor: tuple
    chi: tuple


@dataclass
class Scaffolding:
    shape_rays: list
    struts: list
    divisor_names: list = field(default_factory=list)

    @property
    def shape_rank(self):
        return len(self.shape_rays[0])

    @property
    def unipotent_rank(self):
        return len(self.struts[0].chi) if self.struts else 0

    @classmethod
    def from_dict(cls, d):
        struts = [Strut(s["name"], tuple(s["divisor"]), tuple(s["chi"])) for s in d["struts"]]
        rays = [tuple(r) for r in d["shape_rays"]]
        names = d.get("divisor_names") or [f"x{i + 2}" for i in range(len(rays))]
        return cls(rays, struts, names)

    def to_dict(self):
        return {"shape_rays": [list(r) for r in self.shape_rays],
                "struts": [{"name": s.name, "divisor": list(s.divisor), "chi": list(s.chi)}
                           for s in self.struts],
                "divisor_names": self.divisor_names}


def load_builtin(name="mm2-10"):
    with resources.files("kfano.data").joinpath("scaffolding.json").open() as fh:
        data = json.load(fh)
    return Scaffolding.from_dict(data[name])


def strut_polytope(S, strut):
    """``P_D + chi`` in ``N``, where ``P_D = {n : <u_rho, n> >= -a_rho}`` in ``Nbar``."""
    ineqs = [(list(u), -a) for u, a in zip(S.shape_rays, strut.divisor)]
    PD = Polytope.from_inequalities(ineqs)
    return Polytope([tuple(v) + tuple(strut.chi) for v in PD.vertices])


def verify_scaffolding(S, P):
    pts = []
    for s in S.struts:
        pts.extend(strut_polytope(S, s).vertices)
    if not pts:
        return False
    hull = Polytope(pts)
    return sorted(map(tuple, hull.vertices)) == sorted(map(tuple, P.vertices))


@dataclass
class AmbientData:
    inequalities: list
    rays: list
    ray_names: list
    ray_map: list
    weights: list
    smooth: bool
    picard_rank: int
    fan: object

    def to_dict(self):
        return {
            "inequalities": [{"normal": list(a), "rhs": b} for a, b in self.inequalities],
            "rays": {n: list(r) for n, r in zip(self.ray_names, self.rays)},
            "ray_map": self.ray_map,
            "weights": self.weights,
            "smooth": self.smooth,
            "picard_rank": self.picard_rank,
        }


def _ambient_rays(S):
    k = len(S.shape_rays)
    rays, names = [], []
    for s in S.struts:
        rays.append(tuple(-a for a in s.divisor) + tuple(s.chi))
        names.append(s.name)
    for i in range(k):
        e = [0] * (k + S.unipotent_rank)
        e[i] = 1
        rays.append(tuple(e))
        names.append(S.divisor_names[i])
    return rays, names


def _in_cone_2d(v, gens):
    if not any(v):
        return True
    for g in gens:
        if g[0] * v[1] - g[1] * v[0] == 0 and linalg.dot(g, v) > 0:
            return True
    for a, b in combinations(gens, 2):
        det = a[0] * b[1] - a[1] * b[0]
        if det == 0:
            continue
        x = Fraction(v[0] * b[1] - v[1] * b[0], det)
        y = Fraction(a[0] * v[1] - a[1] * v[0], det)
        if x >= 0 and y >= 0:
            return True
    return False


def _nef_basis(fan, W0):
    """Primitive generators of the nef cone (Picard rank 2), in ``W0`` coordinates."""
    classes = [tuple(W0[r][i] for r in range(len(W0))) for i in range(len(fan.rays))]
    cands = {tuple(linalg.primitive(list(c))) for c in classes if any(c)}
    chambers = []
    for c in fan.cones:
        chambers.append([classes[i] for i in range(len(classes)) if i not in c and any(classes[i])])
    inside = [v for v in cands if all(_in_cone_2d(v, ch) for ch in chambers)]
    if len(inside) < 2:
        raise ScaffoldingError("nef cone is not two-dimensional")
    # the two angular extremes
    extremes = []
    for v in inside:
        others = [w for w in inside if w != v]
        sides = {(v[0] * w[1] - v[1] * w[0] > 0) - (v[0] * w[1] - v[1] * w[0] < 0) for w in others}
        sides.discard(0)
        if len(sides) <= 1:
            extremes.append(v)
    if len(extremes) != 2:
        raise ScaffoldingError("could not isolate the nef cone generators")
    return extremes


def ambient_from_scaffolding(S):
    rays, names = _ambient_rays(S)
    ineqs = [(list(r), -1) for r in rays[:len(S.struts)]] + [(list(r), 0) for r in rays[len(S.struts):]]
    Q = Polytope.from_inequalities(ineqs)
    if Q.dim != len(rays[0]):
        raise ScaffoldingError("Q_S is not full-dimensional")
    fan = normal_fan(Q)
    if sorted(map(tuple, fan.rays)) != sorted(rays):
        raise ScaffoldingError("some inequality of Q_S is redundant")
    order = [list(map(tuple, fan.rays)).index(r) for r in rays]
    fan = type(fan)(rays, [tuple(sorted(order.index(i) for i in c)) for c in fan.cones])
    ray_map = linalg.transpose([list(r) for r in rays])
    W0 = linalg.integer_kernel(ray_map, len(rays))
    rho = fan.picard_rank()
    if rho == 2 and len(W0) == 2:
        g1, g2 = _nef_basis(fan, W0)
        G = [[g1[0], g2[0]], [g1[1], g2[1]]]
        if abs(linalg.determinant(G)) != 1:
            raise ScaffoldingError("nef cone generators are not a lattice basis")
        Ginv = linalg.inverse_rational(G)
        W = [[int(x) for x in row] for row in linalg.matmul(Ginv, W0)]
        W.sort(reverse=True)
    else:
        W = W0
    return AmbientData([(tuple(a), b) for a, b in ineqs], rays, names, ray_map, W,
                       fan.is_smooth(), rho, fan)


@dataclass
class EmbeddingEquations:
    theta: list
    perp: list
    binomials: list
    ring: object

    def texts(self):
        return [str(b) for b in self.binomials]


def theta_matrix(S):
    """``theta = rho* + id``: ``n -> (<u_rho, nbar>)_rho + n_U``."""
    k = len(S.shape_rays)
    r = S.shape_rank
    u = S.unipotent_rank
    T = []
    for ray in S.shape_rays:
        T.append(list(ray) + [0] * u)
    for j in range(u):
        row = [0] * (r + u)
        row[r + j] = 1
        T.append(row)
    assert len(T) == k + u
    return T


def embedding_equations(S, ambient=None):
    ambient = ambient or ambient_from_scaffolding(S)
    T = theta_matrix(S)
    perp = linalg.integer_kernel(linalg.transpose(T), len(T))
    ring = grobner.PolynomialRing(ambient.ray_names)
    binoms = []
    for h in perp:
        vals = [linalg.dot(h, r) for r in ambient.rays]
        plus = tuple(max(v, 0) for v in vals)
        minus = tuple(max(-v, 0) for v in vals)
        binoms.append(ring.monomial(plus) - ring.monomial(minus))
    return EmbeddingEquations(T, [tuple(h) for h in perp], binoms, ring)


def binomials_vanish_on_torus(ambient, eqs):
    """Exact check that each binomial vanishes on the image of the torus of ``X``.

    Cox coordinates of a torus point ``theta(s)`` are the Laurent monomials
    ``s^(L theta)`` for an integral right inverse ``L`` of the ray map.
    """
    R = ambient.ray_map
    n = len(R)
    L_cols = []
    for j in range(n):
        e = [0] * n
        e[j] = 1
        y = linalg.integer_solve(R, e)
        if y is None:
            raise ScaffoldingError("ray map is not surjective")
        L_cols.append(y)
    L = linalg.transpose(L_cols)
    LT = linalg.matmul(L, eqs.theta)
    for b in eqs.binomials:
        exps = []
        for e in b.terms:
            exps.append(tuple(sum(e[i] * LT[i][j] for i in range(len(e))) for j in range(len(LT[0]))))
        if len(set(exps)) != 1 or sum(b.terms.values()) != 0:
            return False
    return True


def theta_respects_fans(S, P, ambient):
    """Every ray of the face fan of ``P`` maps into a cone of the ambient fan."""
    T = theta_matrix(S)
    cones = [Cone([ambient.fan.rays[i] for i in c]) for c in ambient.fan.cones]
    normals = [_ambient_normals(c) for c in cones]
    for v in P.vertices:
        w = linalg.matvec(T, list(v))
        if not any(all(linalg.dot(n, w) >= 0 for n in ns) for ns in normals):
            return False
    return True


def _ambient_normals(cone):
    """Inner facet normals of a full-dimensional cone."""
    rays = [list(r) for r in cone.rays]
    n = len(rays[0])
    out = []
    for sub in combinations(rays, n - 1):
        ker = linalg.integer_kernel(sub, n)
        if len(ker) != 1:
            continue
        u = ker[0]
        vals = [linalg.dot(u, r) for r in rays]
        if all(x >= 0 for x in vals):
            out.append(u)
        elif all(x <= 0 for x in vals):
            out.append([-x for x in u])
    return out


# ----------------------------------------------------------- intersections
def mixed_intersection(fan, divisors):
    """``D_1 ... D_n`` for nef divisors via inclusion-exclusion of volumes.

    ``D_1 ... D_n = sum over subsets S of (-1)^(n - |S|) vol(P_{D_S})`` where
    ``P_{D_S}`` is the moment polytope of the sum (Euclidean volume).
    """
    n = fan.ambient_rank
    if len(divisors) != n:
        raise ValueError("need one divisor per dimension")
    for D in divisors:
        if not fan.is_nef(list(D)):
            raise ScaffoldingError("mixed-volume route needs nef divisors")
    cache = {}
    total = Fraction(0)
    for k in range(1, n + 1):
        for S in combinations(range(n), k):
            coeffs = tuple(sum(divisors[i][j] for i in S) for j in range(len(fan.rays)))
            if coeffs not in cache:
                cache[coeffs] = fan.moment_polytope(list(coeffs)).euclidean_volume()
            total += (-1) ** (n - k) * cache[coeffs]
    return total


@dataclass
class AdjunctionCheck:
    minus_K_Y: tuple
    minus_K_X: tuple
    equation_classes: list
    degree: Fraction

    def to_dict(self):
        d = self.degree
        return {"minus_K_Y": list(self.minus_K_Y), "minus_K_X": list(self.minus_K_X),
                "equation_classes": [list(c) for c in self.equation_classes],
                "degree": int(d) if d.denominator == 1 else str(d)}


def _class_of(W, coeffs):
    return tuple(sum(w[i] * coeffs[i] for i in range(len(coeffs))) for w in W)


def adjunction_degree_check(ambient, eqs, representatives=None):
    """``-K_Y``, ``-K_X`` by adjunction and ``(-K_X)^dim X`` by mixed volumes.

    ``representatives`` are torus-invariant divisors (coefficient vectors)
    whose classes form the Picard basis; by default the first ray divisor
    with class ``e_j`` is used for each basis vector ``e_j``.
    """
    W = ambient.weights
    nr = len(ambient.rays)
    rank = len(W)
    mK_Y = tuple(sum(row) for row in W)
    classes = []
    for b in eqs.binomials:
        cls = {_class_of(W, e) for e in b.terms}
        if len(cls) != 1:
            raise ScaffoldingError("equation is not homogeneous")
        classes.append(cls.pop())
    mK_X = tuple(mK_Y[j] - sum(c[j] for c in classes) for j in range(rank))
    if representatives is None:
        representatives = []
        for j in range(rank):
            target = tuple(int(i == j) for i in range(rank))
            idx = next((i for i in range(nr) if _class_of(W, [int(k == i) for k in range(nr)]) == target), None)
            if idx is None:
                raise ScaffoldingError("no ray divisor represents a basis class")
            representatives.append([int(k == idx) for k in range(nr)])

    def rep(cls):
        return [sum(cls[j] * representatives[j][i] for j in range(rank)) for i in range(nr)]

    dim_X = ambient.fan.ambient_rank - len(classes)
    divisors = [rep(mK_X)] * dim_X + [rep(c) for c in classes]
    degree = mixed_intersection(ambient.fan, divisors)
    return AdjunctionCheck(mK_Y, mK_X, classes, degree)
