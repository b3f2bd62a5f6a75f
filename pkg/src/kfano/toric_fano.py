"""Invariants of toric Fano varieties read off their Fano polytope.

``P`` is always the Fano polytope in ``N`` (its face fan defines ``X``);
``P.polar()`` is the moment polytope of ``-K_X`` in ``M``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb

from . import grobner, linalg
from .fan import face_fan
from .polytope import Polytope


def anticanonical_degree(P):
    """``(-K_X)^n``: the normalized volume of the polar polytope."""
    return P.polar().normalized_volume()


def is_k_polystable(P):
    """Barycenter criterion: the polar's barycenter is the origin.

    The criterion is scale invariant, so it applies verbatim to
    non-Gorenstein ``X`` (rescale ``-K`` by the Gorenstein index).
    """
    return not any(P.polar().barycenter())


def demazure_roots(P):
    """Demazure roots of the face fan of ``P``.

    A root ``m`` pairs to ``-1`` with exactly one ray and nonnegatively with
    the others, so ``<m, v> >= -1`` for every vertex ``v``: roots are lattice
    points of the polar, which bounds the search.
    """
    rays = P.vertices
    roots = []
    for m in P.polar().lattice_points():
        vals = [linalg.dot(m, v) for v in rays]
        if sum(1 for x in vals if x == -1) == 1 and all(x >= 0 or x == -1 for x in vals):
            roots.append(tuple(m))
    return sorted(roots)


def demazure_roots_bruteforce(P, radius=None):
    """Independent oracle: search a coordinate box instead of the polar."""
    rays = P.vertices
    n = P.ambient_dim
    if radius is None:
        radius = 1 + max(abs(Fraction(x)) for v in P.polar().vertices for x in v).__ceil__()
    out = []
    for m in product(range(-radius, radius + 1), repeat=n):
        vals = [linalg.dot(m, v) for v in rays]
        if vals.count(-1) == 1 and all(x >= 0 for x in vals if x != -1):
            out.append(tuple(m))
    return sorted(out)


@dataclass
class AutStructure:
    torus_rank: int
    roots: list
    finite_order: int
    finite_generators: list
    split: bool

    def to_dict(self):
        return {
            "torus_rank": self.torus_rank,
            "roots": [list(r) for r in self.roots],
            "finite_order": self.finite_order,
            "finite_generators": self.finite_generators,
            "split": self.split,
        }

    def describe(self):
        if self.split:
            return f"T^{self.torus_rank} x| (order-{self.finite_order} group)"
        return f"T^{self.torus_rank} with {len(self.roots)} Demazure roots (not split)"


def aut_structure(P):
    roots = demazure_roots(P)
    gens, order = P.lattice_automorphisms()
    return AutStructure(P.ambient_dim, roots, order, gens, not roots)


@dataclass
class BettiProfile:
    betti: tuple
    euler: int
    face_counts: tuple = ()

    @property
    def b2(self):
        return self.betti[2]

    @property
    def b3(self):
        return self.betti[3]

    @property
    def b4(self):
        return self.betti[4]

    def to_dict(self):
        return {"betti": list(self.betti), "euler": self.euler, "face_counts": list(self.face_counts)}


def betti_3fold(fan):
    """Betti numbers of a complete toric 3-fold from the fan's face counts."""
    if fan.ambient_rank != 3:
        raise ValueError("Betti formulas are for rank-3 fans")
    d1, d2, d3 = fan.face_counts()
    if d1 - d2 + d3 != 2:
        raise ValueError("face counts violate d1 - d2 + d3 = 2; fan not complete?")
    rho = fan.picard_rank()
    b = (1, 0, rho, rho - d2 + 2 * d1 - 3, d1 - 3, 0, 1)
    chi = sum((-1) ** i * x for i, x in enumerate(b))
    if chi != d3:
        raise ArithmeticError("Euler characteristic mismatch")
    return BettiProfile(b, chi, (d1, d2, d3))


@dataclass
class AnticanonicalPresentation:
    points: list
    names: list
    ideal: object
    generated_in_degree_one: bool


def anticanonical_presentation(Qm, names=None):
    """Lattice points of a reflexive moment polytope and the toric ideal of ``Qm x {1}``."""
    if not Qm.is_reflexive():
        raise ValueError("anticanonical presentation needs a reflexive moment polytope")
    pts = Qm.lattice_points()
    names = names or [f"y{i}" for i in range(len(pts))]
    pset = set(pts)
    sums = {tuple(a + b for a, b in zip(p, q)) for p in pts for q in pts}
    double = Qm.dilate(2).lattice_points()
    gen1 = all(tuple(p) in sums for p in double)
    if not gen1:
        return AnticanonicalPresentation(pts, names, None, False)
    ideal = grobner.toric_ideal([tuple(p) + (1,) for p in pts], names=names)
    return AnticanonicalPresentation(pts, names, ideal, True)


def projective_space_degree(m):
    return (m + 1) ** m


def product_degree(n, deg_X, dim_X, deg_Y=None):
    """Anticanonical degree of ``X x Y`` with ``dim X = dim_X``, ``dim(X x Y) = n``.

    ``(-K)^n = binom(n, dim_X) * deg_X * deg_Y``. ``Y`` defaults to
    ``P^{n - dim_X}``, whose degree is ``(m + 1)^m``.
    """
    m = n - dim_X
    if m < 0:
        raise ValueError("total dimension smaller than the factor")
    if deg_Y is None:
        deg_Y = projective_space_degree(m)
    out = comb(n, dim_X) * Fraction(deg_X) * deg_Y
    return int(out) if out.denominator == 1 else out


def weight_polytope_generic_polystable(degrees):
    """True iff the origin lies in the relative interior of ``conv(degrees)``."""
    degrees = [tuple(d) for d in degrees]
    if not degrees:
        return False
    W = Polytope(degrees)
    return W.contains([0] * len(degrees[0]), strict=True)


def fano_summary(P):
    """Everything the CLI prints for a 3-dimensional Fano polytope."""
    from .fan import singular_locus_report

    fan = face_fan(P)
    info = {
        "vertices": [list(v) for v in P.vertices],
        "f_vector": list(P.f_vector()),
        "reflexive": P.is_reflexive(),
        "centrally_symmetric": P.is_centrally_symmetric(),
        "degree": _num(anticanonical_degree(P)),
        "polar_barycenter": [_num(x) for x in P.polar().barycenter()],
        "k_polystable": is_k_polystable(P),
    }
    if P.ambient_dim == 3:
        info["betti"] = betti_3fold(fan).to_dict()
        info["singular_locus"] = singular_locus_report(P).to_dict()
    else:
        info["picard_rank"] = fan.picard_rank()
    aut = aut_structure(P)
    info["automorphisms"] = {"order": aut.finite_order, "roots": len(aut.roots), "split": aut.split}
    return info


def _num(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else str(x)
