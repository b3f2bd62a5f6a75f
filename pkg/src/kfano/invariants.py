"""Torus and finite-group invariants, and local K-moduli bookkeeping.

Torus actions are diagonal (one character per variable). Finite actions
permute variables. Both act on polynomial rings or on their quotients by
invariant ideals.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product

from . import grobner, linalg


# ------------------------------------------------------------- actions
@dataclass
class TorusAction:
    weights: list  # one character per variable

    def __post_init__(self):
        self.weights = [tuple(int(x) for x in w) for w in self.weights]

    @property
    def nvars(self):
        return len(self.weights)

    @property
    def rank(self):
        if not self.weights or not self.weights[0]:
            return 0
        return linalg.rank([list(w) for w in self.weights])

    def weight_of(self, e):
        d = len(self.weights[0]) if self.weights else 0
        return tuple(sum(k * w[j] for k, w in zip(e, self.weights)) for j in range(d))

    def is_invariant_monomial(self, e):
        return not any(self.weight_of(e))


@dataclass
class FiniteAction:
    generators: list  # permutations: perm[i] = index of the image of x_i

    def __post_init__(self):
        self.generators = [tuple(g) for g in self.generators]
        for g in self.generators:
            if sorted(g) != list(range(len(g))):
                raise ValueError("finite action generators must be permutations of the variables")

    @property
    def nvars(self):
        return len(self.generators[0]) if self.generators else 0

    def elements(self, n=None):
        n = n if n is not None else self.nvars
        ident = tuple(range(n))
        seen = {ident}
        frontier = [ident]
        while frontier:
            new = []
            for h in frontier:
                for g in self.generators:
                    gh = tuple(g[h[i]] for i in range(n))
                    if gh not in seen:
                        seen.add(gh)
                        new.append(gh)
            frontier = new
        return sorted(seen)

    def order(self, n=None):
        return len(self.elements(n))

    def orbits(self, n=None):
        n = n if n is not None else self.nvars
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            for i in range(n):
                a, b = find(i), find(g[i])
                if a != b:
                    parent[max(a, b)] = min(a, b)
        groups = {}
        for i in range(n):
            groups.setdefault(find(i), []).append(i)
        return sorted(groups.values(), key=lambda o: (len(o), o[0]))

    @staticmethod
    def act(perm, f):
        ring = f.ring
        terms = {}
        for e, c in f.terms.items():
            ne = [0] * ring.nvars
            for i, k in enumerate(e):
                ne[perm[i]] += k
            terms[tuple(ne)] = c
        return grobner.Polynomial(ring, terms)

    def act_monomial(self, perm, e):
        ne = [0] * len(e)
        for i, k in enumerate(e):
            ne[perm[i]] += k
        return tuple(ne)

    def is_invariant(self, f):
        return all(self.act(g, f) == f for g in self.generators)

    def restrict(self, indices):
        pos = {v: i for i, v in enumerate(indices)}
        gens = []
        for g in self.generators:
            if any(g[v] not in pos for v in indices):
                raise ValueError("indices are not a union of orbits")
            gens.append(tuple(pos[g[v]] for v in indices))
        return FiniteAction(gens or [tuple(range(len(indices)))])


# ------------------------------------------------------ torus invariants
@dataclass
class MonomialInvariants:
    monomials: list
    bound: int
    required_bound: int
    certified: bool


def _kernel_extreme_rays(action):
    """Minimal-support nonnegative integer vectors ``e`` with ``sum e_i w_i = 0``."""
    n = action.nvars
    r = action.rank
    rays = set()
    for k in range(1, r + 2):
        for S in combinations(range(n), k):
            cols = [[action.weights[i][j] for i in S] for j in range(len(action.weights[0]))] \
                if action.weights[0] else [[0] * k]
            ker = linalg.integer_kernel(cols, k) if cols else [[1] * k]
            if len(ker) != 1:
                continue
            v = ker[0]
            if all(x < 0 for x in v):
                v = [-x for x in v]
            if not all(x > 0 for x in v):
                continue
            e = [0] * n
            for i, x in zip(S, v):
                e[i] = x
            rays.add(tuple(e))
    return sorted(rays)


def _monomials_up_to(n, bound):
    for d in range(1, bound + 1):
        for combo in combinations_with_replacement(range(n), d):
            e = [0] * n
            for i in combo:
                e[i] += 1
            yield tuple(e)


def invariant_monomial_generators(action, degree_bound=None):
    """Minimal monomial generators of the weight-zero submonoid.

    Every Hilbert-basis element lies in a half-open parallelepiped spanned by
    at most ``n - rank`` extreme rays (Caratheodory), so its degree is below
    ``(n - rank) * max|ray|``. A search up to that bound is complete.
    """
    if not isinstance(action, TorusAction):
        action = TorusAction(action)
    n = action.nvars
    rays = _kernel_extreme_rays(action)
    k = n - action.rank
    maxr = max((sum(r) for r in rays), default=0)
    required = max(maxr, k * maxr - 1) if rays else 0
    bound = required if degree_bound is None else degree_bound
    found = []
    for e in _monomials_up_to(n, bound):
        if not action.is_invariant_monomial(e):
            continue
        if any(all(a <= b for a, b in zip(g, e)) for g in found):
            continue
        found.append(e)
    found.sort(key=lambda e: (sum(e), tuple(-x for x in e)))
    return MonomialInvariants(found, bound, required, bound >= required)


def torus_invariant_dimension(action):
    if not isinstance(action, TorusAction):
        action = TorusAction(action)
    return action.nvars - action.rank


# --------------------------------------------------- finite invariants
class _Span:
    """Incremental row echelon form over Q on sparse vectors."""

    def __init__(self, key):
        self.rows = {}
        self.key = key

    def reduce(self, vec):
        vec = dict(vec)
        while vec:
            piv = max(vec, key=self.key)
            if piv not in self.rows:
                return vec, piv
            row = self.rows[piv]
            c = vec[piv]
            for m, a in row.items():
                v = vec.get(m, 0) - c * a
                if v:
                    vec[m] = v
                else:
                    vec.pop(m, None)
        return vec, None

    def add(self, vec):
        vec, piv = self.reduce(vec)
        if piv is None:
            return False
        c = vec[piv]
        self.rows[piv] = {m: Fraction(a) / c for m, a in vec.items()}
        return True

    def __len__(self):
        return len(self.rows)


@dataclass
class FiniteInvariants:
    generators: list
    bound: int
    hilbert: list
    group_order: int
    candidate_count: int

    def texts(self):
        return [str(g) for g in self.generators]


def _elementary_symmetric(ring, orbit):
    out = []
    for k in range(1, len(orbit) + 1):
        f = ring.zero()
        for S in combinations(orbit, k):
            e = [0] * ring.nvars
            for i in S:
                e[i] = 1
            f = f + ring.monomial(tuple(e))
        out.append(f)
    return out


def _nf_terms(f, gb):
    return dict(gb.normal_form(f).terms) if gb is not None else dict(f.terms)


def finite_invariant_generators(ring, action, relations=(), bound=None):
    """Generators of ``(k[x]/I)^G`` for a permutation group ``G``.

    Candidates are the elementary symmetric functions of each variable
    orbit. Generation is checked by matching, in every degree up to the
    Noether bound ``|G|``, the span of candidate products with the span of
    orbit sums (the Reynolds images) modulo ``I``; orbit sums are added as
    extra generators wherever the candidates fall short.
    """
    if not isinstance(action, FiniteAction):
        action = FiniteAction(action)
    G = action.elements(ring.nvars)
    bound = bound if bound is not None else len(G)
    gb = grobner.Ideal(list(relations), ring).gb() if relations else None
    cands = []
    for orbit in action.orbits(ring.nvars):
        cands.extend(_elementary_symmetric(ring, orbit))
    for c in cands:
        if not action.is_invariant(c):
            raise ArithmeticError("candidate is not invariant")
    gens = list(cands)
    hilbert = []
    key = ring.key
    for d in range(1, bound + 1):
        # invariants of degree d modulo I
        inv = _Span(key)
        seen = set()
        for e in grobner._monomials_of_degree(ring.nvars, d):
            if e in seen:
                continue
            orbit = {action.act_monomial(g, e) for g in G}
            seen |= orbit
            f = grobner.Polynomial(ring, {m: 1 for m in orbit})
            inv.add(_nf_terms(f, gb))
        hilbert.append(len(inv))
        span = _Span(key)
        for f in _products_of_degree(ring, gens, d):
            span.add(_nf_terms(f, gb))
        if len(span) == len(inv):
            continue
        seen = set()
        for e in grobner._monomials_of_degree(ring.nvars, d):
            if e in seen:
                continue
            orbit = {action.act_monomial(g, e) for g in G}
            seen |= orbit
            f = grobner.Polynomial(ring, {m: 1 for m in orbit})
            if span.add(_nf_terms(f, gb)):
                gens.append(f)
        if len(span) != len(inv):
            raise ArithmeticError("invariant span mismatch")
    return FiniteInvariants(gens, bound, hilbert, len(G), len(cands))


def _products_of_degree(ring, gens, d):
    degs = [g.total_degree() for g in gens]
    idx = [i for i in range(len(gens)) if 0 < degs[i] <= d]

    def rec(start, remaining, acc):
        if remaining == 0:
            yield acc
            return
        for j in range(start, len(idx)):
            i = idx[j]
            if degs[i] <= remaining:
                yield from rec(j, remaining - degs[i], acc * gens[i])

    yield from rec(0, d, ring.one())


# ---------------------------------------------------- artinian quotients
@dataclass
class ArtinianInvariants:
    basis: list
    generators: list
    presentation: object
    names: list

    @property
    def dim(self):
        return len(self.basis)

    @property
    def reduced(self):
        return self.dim == 1

    def text(self):
        rels = ", ".join(str(g) for g in self.presentation.gb()) if self.presentation else ""
        ring = "C[" + ",".join(self.names) + "]" if self.names else "C"
        return f"{ring}/({rels})" if rels else ring


def _standard_monomials(gb, n):
    lms = gb.leading_monomials()
    caps = []
    for i in range(n):
        pure = [m[i] for m in lms if all(x == 0 for j, x in enumerate(m) if j != i) and m[i] > 0]
        if not pure:
            raise ValueError("quotient is not finite-dimensional")
        caps.append(min(pure))
    out = []
    for e in product(*[range(c) for c in caps]):
        if not any(all(a <= b for a, b in zip(m, e)) for m in lms):
            out.append(tuple(e))
    return out


def artinian_fixed_subring(ring, relations, torus, finite=None, names=None):
    """``(k[x]/I)^{T x G}`` for finite-dimensional ``k[x]/I``, with a presentation."""
    if not isinstance(torus, TorusAction):
        torus = TorusAction(torus)
    finite = finite if finite is not None else FiniteAction([tuple(range(ring.nvars))])
    if not isinstance(finite, FiniteAction):
        finite = FiniteAction(finite)
    gb = grobner.Ideal(list(relations), ring).gb()
    std = _standard_monomials(gb, ring.nvars)
    zero_deg = [e for e in std if torus.is_invariant_monomial(e)]
    G = finite.elements(ring.nvars)
    span = _Span(ring.key)
    basis = []
    for e in sorted(zero_deg, key=lambda e: (sum(e), tuple(-x for x in e))):
        orbit = {finite.act_monomial(g, e) for g in G}
        f = gb.normal_form(grobner.Polynomial(ring, {m: 1 for m in orbit}))
        if not f.is_zero() and span.add(dict(f.terms)):
            basis.append(f)
    # choose algebra generators greedily by degree
    gens = []
    for f in basis:
        if f.total_degree() == 0:
            continue
        if _in_algebra(f, gens, gb, ring):
            continue
        gens.append(f)
    if names is None:
        for stem in ("t", "u", "w", "v"):
            names = [f"{stem}{i}" if len(gens) > 1 else stem for i in range(len(gens))]
            if not set(names) & set(ring.names):
                break
    if not gens:
        return ArtinianInvariants(basis, [], None, [])
    K = grobner.ring_map_kernel(grobner.PolynomialRing(names), gens, ring, gb.polys)
    return ArtinianInvariants(basis, gens, K, names)


def _in_algebra(f, gens, gb, ring):
    if not gens:
        return False
    d = f.total_degree()
    span = _Span(ring.key)
    for k in range(1, d + 1):
        for p in _products_of_degree(ring, gens, k):
            span.add(dict(gb.normal_form(p).terms))
    vec, piv = span.reduce(dict(gb.normal_form(f).terms))
    return piv is None


# ------------------------------------------------------- decompositions
@dataclass
class DecompositionCheck:
    containments: list
    intersection_equal: bool
    dimensions: list
    witness: str = ""

    @property
    def ok(self):
        return all(self.containments) and self.intersection_equal

    def to_dict(self):
        return {"containments": self.containments, "intersection_equal": self.intersection_equal,
                "dimensions": self.dimensions, "witness": self.witness}


def verify_decomposition(I, primes, budget=None):
    """Check ``I = P_1 ∩ ... ∩ P_k`` and report ``dim P_j`` (primality is not checked)."""
    contain = []
    witness = ""
    for P in primes:
        ok = True
        for g in I.gens:
            if not P.contains(g):
                ok = False
                witness = witness or f"{g} not in prime {len(contain)}"
                break
        contain.append(ok)
    inter = primes[0]
    for P in primes[1:]:
        inter = grobner.ideal_intersection(inter, P, budget)
    equal = grobner.ideal_equality(inter, I)
    if not equal and not witness:
        for g in inter.gb():
            if not I.contains(g):
                witness = f"{g} lies in the intersection but not in the ideal"
                break
    dims = [grobner.krull_dimension(P) for P in primes]
    return DecompositionCheck(contain, equal, dims, witness)


# ------------------------------------------------------ K-moduli reports
class ActionError(ValueError):
    pass


@dataclass
class BlockReport:
    variables: list
    torus_rank: int
    group_order: int
    kind: str
    component_dims: list
    reduced: bool
    details: dict = field(default_factory=dict)

    def to_dict(self):
        return {"variables": self.variables, "torus_rank": self.torus_rank,
                "group_order": self.group_order, "kind": self.kind,
                "component_dims": self.component_dims, "reduced": self.reduced,
                "details": self.details}


@dataclass
class KModuliLocalReport:
    stack_branches: int
    stack_reduced: bool
    space_components: int
    component_dims: list
    space_reduced: bool
    fat_point: str = None
    blocks: list = field(default_factory=list)

    def to_dict(self):
        return {
            "stack_branches": self.stack_branches,
            "stack_reduced": self.stack_reduced,
            "space_components": self.space_components,
            "component_dims": self.component_dims,
            "space_reduced": self.space_reduced,
            "fat_point": self.fat_point,
            "blocks": [b.to_dict() for b in self.blocks],
        }


def _matrix_closure(gens):
    n = len(gens[0]) if gens else 0
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for h in frontier:
            for g in gens:
                gh = tuple(tuple(x) for x in linalg.matmul(g, h))
                if gh not in seen:
                    seen.add(gh)
                    new.append(gh)
        frontier = new
    return seen


def variable_permutations(base, lattice_generators):
    """Permutations of base variables induced by lattice automorphisms.

    Automorphisms act on ``M`` through the transpose (which generates the
    same finite group as the contragredient action). Variables with a unique
    degree follow their degree; catalog variables of an isolated singularity
    move to the same position of the image singularity.
    """
    deg_index = {}
    for i, d in enumerate(base.degrees):
        deg_index.setdefault(tuple(Fraction(x) for x in d), []).append(i)
    src_of = {}
    for s in base.sources:
        if "dual_vertex" in s:
            dv = tuple(Fraction(x) for x in s["dual_vertex"])
            for pos, v in enumerate(s["variables"]):
                src_of[base.variables.index(v)] = (s["key"], dv, pos)
    by_src = {(s["key"], tuple(Fraction(x) for x in s["dual_vertex"])): s["variables"]
              for s in base.sources if "dual_vertex" in s}
    perms = []
    for g in lattice_generators:
        gt = linalg.transpose(g)
        perm = []
        for i, d in enumerate(base.degrees):
            if i in src_of:
                key, dv, pos = src_of[i]
                image = tuple(Fraction(x) for x in linalg.matvec(gt, list(dv)))
                target = by_src.get((key, image))
                if target is None:
                    raise ActionError("automorphism does not map singularities to singularities")
                perm.append(base.variables.index(target[pos]))
            else:
                image = tuple(Fraction(x) for x in linalg.matvec(gt, list(d)))
                cands = [j for j in deg_index.get(image, []) if j not in src_of]
                if len(cands) != 1:
                    raise ActionError(f"cannot match the variable of degree {list(d)}")
                perm.append(cands[0])
        perms.append(tuple(perm))
    return perms


def _blocks(base, torus, finite, relation_polys):
    n = base.nvars
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        a, b = find(a), find(b)
        if a != b:
            parent[max(a, b)] = min(a, b)

    for g in finite.generators:
        for i in range(n):
            union(i, g[i])
    for r in relation_polys:
        vs = sorted({i for e in r.terms for i, k in enumerate(e) if k})
        for v in vs[1:]:
            union(vs[0], v)

    def groups():
        out = {}
        for i in range(n):
            out.setdefault(find(i), []).append(i)
        return sorted(out.values())

    def rk(idx):
        rows = [list(torus.weights[i]) for i in idx]
        return linalg.rank(rows) if rows and rows[0] else 0

    changed = True
    while changed:
        changed = False
        gs = groups()
        for a, b in combinations(gs, 2):
            if rk(a + b) < rk(a) + rk(b):
                union(a[0], b[0])
                changed = True
                break
    return groups()


def kmoduli_local_report(base, aut, primes=None, budget=None):
    """Local structure of K-moduli at a point with miniversal base ``base``.

    The automorphism group ``T x G`` acts on the base variables; the
    variables split into blocks on which the torus and finite parts act
    independently, invariants are computed blockwise and multiplied out.
    ``primes`` maps a block index to prime ideals (as text in the block's
    invariant generators ``z1, z2, ...``) for positive-dimensional blocks
    with relations.
    """
    torus = TorusAction([tuple(int(x) for x in d) for d in base.degrees])
    perms = variable_permutations(base, aut.finite_generators) if aut.finite_generators else []
    finite = FiniteAction(perms or [tuple(range(base.nvars))])
    rels = base.relation_polys()
    if rels:
        I = grobner.Ideal(rels, base.ring())
        for g in finite.generators:
            for r in rels:
                if not I.contains(FiniteAction.act(g, r)):
                    raise ActionError("finite action does not preserve the relation ideal")
    blocks = _blocks(base, torus, finite, rels)
    total_rank = torus.rank
    if sum(TorusAction([torus.weights[i] for i in b]).rank for b in blocks) != total_rank:
        raise ActionError("torus action does not split over blocks")
    order = finite.order(base.nvars)
    orders = [finite.restrict(b).order() for b in blocks]
    prod_orders = 1
    for o in orders:
        prod_orders *= o
    if prod_orders != order:
        raise ActionError("finite action does not split over blocks")
    reports = []
    for bi, b in enumerate(blocks):
        names = [base.variables[i] for i in b]
        sub_ring = grobner.PolynomialRing(names)
        pos = {v: j for j, v in enumerate(b)}
        brels = []
        for r in rels:
            vs = {i for e in r.terms for i, k in enumerate(e) if k}
            if vs <= set(b):
                brels.append(grobner.Polynomial(sub_ring, {tuple(e[i] for i in b): c for e, c in r.terms.items()}))
        btorus = TorusAction([torus.weights[i] for i in b])
        bfinite = finite.restrict(b)
        reports.append(_block_report(bi, names, sub_ring, brels, btorus, bfinite,
                                     (primes or {}).get(bi), budget))
    dims = [0]
    for r in reports:
        dims = [a + c for a in dims for c in r.component_dims]
    dims.sort(reverse=True)
    stack_reduced = all(len(r.terms) == 1 and all(k <= 1 for k in next(iter(r.terms)))
                        for r in rels)
    space_reduced = all(r.reduced for r in reports)
    fat = None
    if dims == [0]:
        art = [r for r in reports if r.kind == "artinian"]
        if art:
            fat = art[0].details["presentation"]
    return KModuliLocalReport(len(base.components), stack_reduced, len(dims), dims,
                              space_reduced, fat, reports)


def _block_report(index, names, ring, rels, torus, finite, primes, budget):
    rk = torus.rank
    order = finite.order()
    if not rels:
        dim = torus_invariant_dimension(torus)
        return BlockReport(names, rk, order, "torus_quotient_domain", [dim], True,
                           {"dimension": dim})
    gb = grobner.Ideal(rels, ring).gb()
    try:
        _standard_monomials(gb, ring.nvars)
        artinian = True
    except ValueError:
        artinian = False
    if artinian:
        res = artinian_fixed_subring(ring, rels, torus, finite)
        return BlockReport(names, rk, order, "artinian", [0], res.reduced,
                           {"presentation": res.text(), "vector_space_dim": res.dim,
                            "basis": [str(f) for f in res.basis]})
    # torus invariants of the ambient polynomial ring
    mons = invariant_monomial_generators(torus)
    if not mons.certified:
        raise ArithmeticError("torus invariants not certified")
    ynames = [f"y{i}" for i in range(len(mons.monomials))]
    Ry = grobner.PolynomialRing(ynames)
    images = [ring.monomial(e) for e in mons.monomials]
    K = grobner.ring_map_kernel(Ry, images, ring, rels, budget)
    # induced permutation on the y's
    yperm = []
    mon_index = {e: i for i, e in enumerate(mons.monomials)}
    for g in finite.generators:
        yperm.append(tuple(mon_index[finite.act_monomial(g, e)] for e in mons.monomials))
    yaction = FiniteAction(yperm)
    inv = finite_invariant_generators(Ry, yaction, K.gb().polys)
    znames = [f"z{i + 1}" for i in range(len(inv.generators))]
    Rz = grobner.PolynomialRing(znames)
    Kz = grobner.ring_map_kernel(Rz, inv.generators, Ry, K.gb().polys, budget)
    details = {
        "torus_invariants": [str(f) for f in images],
        "torus_kernel": [str(g) for g in K.gb()],
        "finite_invariants": inv.texts(),
        "invariant_kernel": [str(g) for g in Kz.gb()],
    }
    if primes is None:
        raise ValueError(f"block {index} needs a prime decomposition")
    plist = [grobner.Ideal([Rz(t) for t in p], Rz) for p in primes]
    check = verify_decomposition(Kz, plist, budget)
    details["decomposition"] = check.to_dict()
    if not check.ok:
        raise ArithmeticError(f"prime decomposition failed: {check.witness}")
    dims = sorted(check.dimensions, reverse=True)
    return BlockReport(names, rk, order, "invariant_quotient", dims, check.intersection_equal, details)
