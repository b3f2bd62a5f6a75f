"""Graded deformation data of toric charts and its global assembly.

Degree convention: a hypersurface chart ``f = 0`` has
``T^1 = C[vars] / (f, df/dx_i)`` and the basis monomial ``mu`` sits in
``M``-degree ``deg(mu) - deg(f)`` (the deformation ``f + lambda*mu`` is
homogeneous when the parameter ``lambda`` has that degree).

Infinite graded pieces are described symbolically by :class:`Pattern`
objects: ``base + sum k_j step_j`` with ``k_j >= 0`` (or ``k_j`` in ``Z`` for
two-sided steps).
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from itertools import product

from . import grobner, linalg


class WindowTooSmallError(ValueError):
    """A symbolic tail cannot be certified inside the brute-force window."""


class CatalogError(KeyError):
    pass


# ------------------------------------------------------------- graded dims
def _vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _vscale(k, a):
    return tuple(k * x for x in a)


@dataclass(frozen=True)
class Pattern:
    base: tuple
    steps: tuple = ()
    two_sided: tuple = ()  # indices of steps allowed to go negative

    def solve(self, m):
        """Step coefficients reaching ``m``, or None."""
        d = _vsub(m, self.base)
        if not self.steps:
            return () if not any(d) else None
        A = linalg.transpose([list(s) for s in self.steps])
        k = linalg.solve_rational(A, list(d))
        if k is None or any(x.denominator != 1 for x in k):
            return None
        if linalg.matvec(A, k) != [Fraction(x) for x in d]:
            return None
        for i, x in enumerate(k):
            if x < 0 and i not in self.two_sided:
                return None
        return tuple(int(x) for x in k)

    def contains(self, m):
        return self.solve(m) is not None

    def points(self, window):
        ranges = []
        for i in range(len(self.steps)):
            lo = -window if i in self.two_sided else 0
            ranges.append(range(lo, window + 1))
        for ks in product(*ranges):
            p = self.base
            for k, s in zip(ks, self.steps):
                p = _vadd(p, _vscale(k, s))
            yield ks, p

    def to_dict(self):
        return {"base": list(self.base), "steps": [list(s) for s in self.steps],
                "two_sided": list(self.two_sided)}

    def describe(self):
        if not self.steps:
            return f"{list(self.base)}"
        parts = []
        for i, s in enumerate(self.steps):
            rng = "k in Z" if i in self.two_sided else "k >= 0"
            parts.append(f"k*{list(s)} ({rng})")
        return f"{list(self.base)} + " + " + ".join(parts)


class GradedDims:
    """Dimension function ``M -> N`` with finite and symbolic parts."""

    def __init__(self, explicit=None, patterns=()):
        self.explicit = {tuple(k): v for k, v in (explicit or {}).items() if v}
        self.patterns = list(patterns)

    def dim_at(self, m):
        m = tuple(m)
        d = self.explicit.get(m, 0)
        for p in self.patterns:
            if p.contains(m):
                d += 1
        return d

    def is_finite(self):
        return all(not p.steps for p in self.patterns)

    def total(self):
        if not self.is_finite():
            return None
        return sum(self.explicit.values()) + len(self.patterns)

    def support(self, window=10):
        pts = set(self.explicit)
        for p in self.patterns:
            for _, q in p.points(window):
                pts.add(q)
        return sorted(pts)

    def to_dict(self):
        return {
            "explicit": [{"degree": list(k), "dim": v} for k, v in sorted(self.explicit.items())],
            "patterns": [p.to_dict() for p in self.patterns],
        }


# ------------------------------------------------------------ chart T^1
def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _standard_classes(gens, n):
    """Classes ``(c, S)`` covering the standard monomials of a monomial ideal.

    Exponents are truncated at ``B_i`` (the largest exponent of ``x_i`` among
    the generators); the class of ``c`` is ``{e : e_i = c_i for i not in S,
    e_i >= c_i for i in S}`` where ``S`` is the set of saturated coordinates.
    """
    B = [max((g[i] for g in gens), default=0) for i in range(n)]
    out = []
    for c in product(*[range(b + 1) for b in B]):
        if any(_divides(g, c) for g in gens):
            continue
        S = tuple(i for i in range(n) if c[i] == B[i])
        out.append((c, S))
    return out


@dataclass
class ChartT1:
    names: list
    degrees: list
    equation: object
    ideal: object
    monomial_generators: list
    shift: tuple

    @property
    def nvars(self):
        return len(self.names)

    def monomial_degree(self, e):
        deg = (0,) * len(self.shift)
        for k, d in zip(e, self.degrees):
            deg = _vadd(deg, _vscale(k, d))
        return deg

    def t1_degree(self, e):
        return _vsub(self.monomial_degree(e), self.shift)

    def classes(self):
        if self.monomial_generators is None:
            raise ValueError("T^1 quotient is not monomial")
        return _standard_classes(self.monomial_generators, self.nvars)

    def graded_dims(self):
        explicit = {}
        patterns = []
        for c, S in self.classes():
            base = self.t1_degree(c)
            if not S:
                explicit[base] = explicit.get(base, 0) + 1
            else:
                steps = tuple(tuple(self.degrees[i]) for i in S)
                if linalg.rank([list(s) for s in steps]) < len(steps):
                    raise ValueError("infinite-dimensional graded piece")
                patterns.append(Pattern(base, steps))
        return GradedDims(explicit, patterns)

    def basis_in_degree(self, m):
        """Standard monomials (exponent tuples) of ``T^1`` in degree ``m``."""
        out = []
        for c, S in self.classes():
            base = self.t1_degree(c)
            if not S:
                if base == tuple(m):
                    out.append(tuple(c))
                continue
            pat = Pattern(base, tuple(tuple(self.degrees[i]) for i in S))
            k = pat.solve(tuple(m))
            if k is not None:
                e = list(c)
                for i, ki in zip(S, k):
                    e[i] += ki
                out.append(tuple(e))
        return sorted(out)

    def localize(self, var):
        return LocalizedT1(self, self.names.index(var) if isinstance(var, str) else var)

    def basis_text(self, limit=3):
        """Human-readable monomial basis, infinite families as ``z^n``."""
        out = []
        for c, S in self.classes():
            mono = "*".join(
                (n if k == 1 else f"{n}^{k}") if i not in S else f"{n}^(>={k})"
                for i, (n, k) in enumerate(zip(self.names, c)) if k or i in S)
            out.append(mono or "1")
        return out


def hypersurface_t1(f, degrees):
    """``T^1`` of the hypersurface chart ``f = 0`` with variable ``M``-degrees."""
    ring = f.ring
    degrees = [tuple(d) for d in degrees]
    if len(degrees) != ring.nvars:
        raise ValueError("need one degree per variable")
    if f.is_zero() or f.total_degree() == 0:
        raise ValueError("not a hypersurface equation")
    term_degs = {tuple(sum(k * d[j] for k, d in zip(e, degrees)) for j in range(len(degrees[0])))
                 for e in f.terms}
    if len(term_degs) != 1:
        raise ValueError("equation is not homogeneous for the given grading")
    shift = term_degs.pop()
    partials = []
    for i in range(ring.nvars):
        t = {}
        for e, c in f.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                t[tuple(ne)] = c * e[i]
        partials.append(grobner.Polynomial(ring, t))
    ideal = grobner.Ideal([f] + partials, ring)
    gb = ideal.gb()
    monomial = all(len(p.terms) == 1 for p in gb)
    mono_gens = [p.leading_monomial() for p in gb] if monomial else None
    return ChartT1(list(ring.names), degrees, f, ideal, mono_gens, shift)


class LocalizedT1:
    """``T^1`` of a chart after inverting one variable."""

    def __init__(self, chart, index):
        self.chart = chart
        self.index = index
        gens = []
        for g in chart.monomial_generators:
            h = list(g)
            h[index] = 0
            gens.append(tuple(h))
        # minimalize
        self.saturated_generators = sorted(
            {g for g in gens if not any(h != g and _divides(h, g) for h in gens)})

    def survives(self, e):
        h = list(e)
        h[self.index] = 0
        return not any(_divides(g, h) for g in self.saturated_generators)

    def graded_dims(self):
        ch = self.chart
        n = ch.nvars
        v = self.index
        patterns = []
        for c, S in _standard_classes(self.saturated_generators, n):
            if c[v] != 0:
                continue
            S = tuple(i for i in S if i != v)
            steps = (tuple(ch.degrees[v]),) + tuple(tuple(ch.degrees[i]) for i in S)
            if linalg.rank([list(s) for s in steps]) < len(steps):
                raise ValueError("infinite-dimensional graded piece after localization")
            patterns.append(Pattern(ch.t1_degree(c), steps, (0,)))
        return GradedDims({}, patterns)


def localized_chart_t1(chart, var):
    return chart.localize(var).graded_dims()


# --------------------------------------------------------------- Čech
@dataclass
class CechResult:
    h0: GradedDims
    h1: GradedDims
    window: int
    per_degree: dict = field(default_factory=dict)

    def h0_degrees(self):
        return sorted(self.h0.explicit)

    def to_dict(self):
        return {"h0": self.h0.to_dict(), "h1": self.h1.to_dict(), "window": self.window,
                "h0_total": self.h0.total(), "h1_total": self.h1.total()}


@dataclass
class CyclicCover:
    """Charts ``U_0..U_{n-1}`` in cyclic order with the variables to invert.

    ``forward[i]`` is the variable of chart ``i`` inverted on ``U_i ∩ U_{i+1}``;
    ``backward[i]`` is the variable of chart ``i`` inverted on ``U_{i-1} ∩ U_i``.
    """
    charts: list
    forward: list
    backward: list

    def overlaps(self):
        return [self.charts[i].localize(self.forward[i]) for i in range(len(self.charts))]


def _rank(M):
    return linalg.rank(M) if M and M[0] else 0


def cech_complex_at(cover, m):
    """Matrix of ``d: C^0(m) -> C^1(m)`` with ``(d a)_{i,i+1} = a_{i+1} - a_i``."""
    n = len(cover.charts)
    cols = []
    for i, ch in enumerate(cover.charts):
        for e in ch.basis_in_degree(m):
            cols.append((i, e))
    fwd = [cover.charts[i].localize(cover.forward[i]) for i in range(n)]
    bwd = [cover.charts[i].localize(cover.backward[i]) for i in range(n)]
    rows = []
    for i in range(n):
        dim = fwd[i].graded_dims().dim_at(m)
        if dim > 1:
            raise ValueError("overlap pieces of dimension > 1 are not supported")
        if dim == 1:
            rows.append(i)
    M = []
    for i in rows:
        j = (i + 1) % n
        row = []
        for (c, e) in cols:
            if c == i and fwd[i].survives(e):
                row.append(-1)
            elif c == j and bwd[j].survives(e):
                row.append(1)
            else:
                row.append(0)
        M.append(row)
    return M, len(cols), len(rows)


def _line_events(patterns, explicit):
    """Step indices along each pattern where something else starts or crosses."""
    events = []
    for p in patterns:
        ks = []
        for q in patterns:
            if q is p:
                continue
            k = p.solve(q.base)
            if k is not None:
                ks.append(max(abs(x) for x in k) if k else 0)
            # crossing of non-parallel lines
            if len(p.steps) == 1 and len(q.steps) == 1:
                A = linalg.transpose([list(p.steps[0]), [-x for x in q.steps[0]]])
                sol = linalg.solve_rational(A, list(_vsub(q.base, p.base)))
                if sol is not None and linalg.rank(A) == 2:
                    ks.append(abs(sol[0]))
        for m in explicit:
            k = p.solve(m)
            if k is not None:
                ks.append(max(abs(x) for x in k) if k else 0)
        events.append(max(ks, default=0))
    return events


def cech_h01(cover, window=10):
    """``H^0`` and ``H^1`` of ``T^1`` over a cyclic cover, degree by degree.

    All degrees with ``|k| <= window`` along every pattern are computed
    exactly. Beyond the window the configuration of patterns is constant
    along each ray (this is certified from the pattern geometry), so the
    complex there equals the one at the window boundary; that boundary
    complex must be exact, otherwise the result would be infinite.
    """
    n = len(cover.charts)
    pieces = [ch.graded_dims() for ch in cover.charts]
    pieces += [ov.graded_dims() for ov in cover.overlaps()]
    patterns = [p for g in pieces for p in g.patterns]
    explicit = {m for g in pieces for m in g.explicit}
    events = _line_events(patterns, explicit)
    if events and max(events) >= window:
        raise WindowTooSmallError(
            f"pattern events reach step {max(events)}; window {window} cannot certify the tails")
    degrees = set(explicit)
    for p in patterns:
        for _, q in p.points(window):
            degrees.add(q)
    h0, h1, per = {}, {}, {}
    for m in sorted(degrees):
        M, c0, c1 = cech_complex_at(cover, m)
        r = _rank(M)
        k0, k1 = c0 - r, c1 - r
        if k0:
            h0[m] = k0
        if k1:
            h1[m] = k1
        if c0 or c1:
            per[m] = {"c0": c0, "c1": c1, "rank": r, "matrix": M}
    # the boundary of the window stands for the whole tail
    for p in patterns:
        for ks, q in p.points(window):
            if max(abs(k) for k in ks) != window:
                continue
            if q in h0 or q in h1:
                raise WindowTooSmallError(
                    f"non-exact complex at the window boundary degree {list(q)}: infinite cohomology")
    return CechResult(GradedDims(h0), GradedDims(h1), window, per)


# ------------------------------------------------------------- catalogs
def _load_json(name):
    with resources.files("kfano.data").joinpath(name).open() as fh:
        return json.load(fh)


def singularity_catalog():
    return {e["key"]: e for e in _load_json("singularity_catalog.json")["entries"]}


def fano_catalog():
    return _load_json("fano_catalog.json")


def milnor_lookup(key, component, catalog=None):
    """Betti numbers ``(b2, b3)`` of the Milnor fibre on a base component."""
    catalog = singularity_catalog() if catalog is None else catalog
    if key not in catalog:
        raise CatalogError(f"no catalog entry for {key!r}")
    for comp in catalog[key]["components"]:
        if comp["name"] == component or comp.get("dim") == component:
            m = comp.get("milnor")
            if m is None:
                raise CatalogError(f"{key}: component {component!r} is not a smoothing")
            return {"b2": m["b2"], "b3": m["b3"]}
    raise CatalogError(f"{key}: no component {component!r}")


def reduced_euler(milnor):
    """Reduced Euler characteristic ``b2 - b3`` (``b1 = 0``, ``b_{>=4} = 0``)."""
    return milnor["b2"] - milnor["b3"]


# ------------------------------------------------------ miniversal base
@dataclass
class BaseComponent:
    dim: int
    equations: list
    choice: dict

    def to_dict(self):
        return {"dim": self.dim, "equations": self.equations,
                "choice": {str(k): v for k, v in self.choice.items()}}


@dataclass
class MiniversalBase:
    variables: list
    degrees: list
    relations: list
    components: list
    sources: list = field(default_factory=list)

    @property
    def nvars(self):
        return len(self.variables)

    def ring(self):
        return grobner.PolynomialRing(self.variables)

    def relation_polys(self):
        R = self.ring()
        return [R(r) for r in self.relations]

    def is_smooth(self):
        return not self.relations

    def component_dims(self):
        return sorted((c.dim for c in self.components), reverse=True)

    def to_dict(self):
        return {
            "variables": self.variables,
            "degrees": [list(d) for d in self.degrees],
            "relations": self.relations,
            "components": [c.to_dict() for c in self.components],
            "sources": self.sources,
        }


def _dual_vertex(component):
    src = component.source
    c = Fraction(src["rhs"])
    return tuple(Fraction(x) / -c for x in src["normal"])


def _int_vec(v):
    return tuple(int(x) if Fraction(x).denominator == 1 else Fraction(x) for x in v)


def assemble_miniversal_base(report, cech=None, catalog=None, prefix="t"):
    """Miniversal base from isolated-singularity catalog data and ``H^0(T^1_U)``.

    Isolated singularities (ordered by the dual vertex, descending) come
    first, then the unobstructed ``H^0`` degrees. Catalog relations are
    renamed into the global variables; components multiply out.
    """
    catalog = singularity_catalog() if catalog is None else catalog
    isolated = [c for c in report.components if c.kind.startswith("isolated")]
    isolated.sort(key=lambda c: _dual_vertex(c), reverse=True)
    variables, degrees, relations, sources = [], [], [], []
    factors = []
    for comp in isolated:
        if comp.key not in catalog:
            raise CatalogError(f"singularity {comp.key!r} has no catalog entry")
        entry = catalog[comp.key]
        dv = _dual_vertex(comp)
        local_names = entry["base"]["variables"]
        start = len(variables)
        rename = {}
        for j, name in enumerate(local_names):
            g = f"{prefix}{len(variables) + 1}"
            rename[name] = g
            variables.append(g)
            mult = entry["base"].get("degree_multiples", [1] * len(local_names))[j]
            degrees.append(_int_vec(_vscale(mult, dv)))
        for rel in entry["base"]["relations"]:
            relations.append(_rename(rel, rename))
        comps = []
        for bc in entry["components"]:
            comps.append((bc["name"], bc["dim"], [_rename(e, rename) for e in bc["equations"]]))
        factors.append((len(sources), comps))
        sources.append({"key": comp.key, "dual_vertex": [str(x) if Fraction(x).denominator != 1 else int(x) for x in dv],
                        "variables": variables[start:]})
    free = []
    if cech is not None:
        for m in cech.h0_degrees():
            for _ in range(cech.h0.explicit[m]):
                g = f"{prefix}{len(variables) + 1}"
                variables.append(g)
                degrees.append(tuple(m))
                free.append(g)
        sources.append({"key": "H0(T1_U)", "variables": free})
    components = []
    choices = [c for _, c in factors]
    for combo in product(*choices) if choices else [()]:
        dim = len(free) + sum(c[1] for c in combo)
        eqs = [e for c in combo for e in c[2]]
        choice = {idx: c[0] for (idx, _), c in zip(factors, combo)}
        components.append(BaseComponent(dim, eqs, choice))
    components.sort(key=lambda c: (-c.dim, sorted(c.equations)))
    return MiniversalBase(variables, degrees, relations, components, sources)


def _rename(text, mapping):
    import re
    return re.sub(r"[A-Za-z_][A-Za-z_0-9]*", lambda m: mapping.get(m.group(0), m.group(0)), text)


def transverse_t2_degree(P, edge_vertices):
    """Degree of ``H^1(C, O(-2))`` for the curve of an edge: sum of the two dual vertices."""
    hs = P.halfspaces()
    total = None
    for n, c in hs:
        if all(linalg.dot(n, v) == c for v in edge_vertices):
            dv = tuple(Fraction(x) / -Fraction(c) for x in n)
            total = dv if total is None else _vadd(total, dv)
    return _int_vec(total)


@dataclass
class QGAssembly:
    t1_degrees: list
    t2_degrees: list
    base: MiniversalBase
    consistent: bool

    def to_dict(self):
        return {"t1_degrees": [list(d) for d in self.t1_degrees],
                "t2_degrees": [list(d) for d in self.t2_degrees],
                "base": self.base.to_dict(), "consistent": self.consistent}


def qg_assemble(P, report, catalog=None):
    """QG-deformation bookkeeping for isolated Gorenstein points, quotient points and A1 curves."""
    catalog = singularity_catalog() if catalog is None else catalog
    t1, t2 = [], []
    for comp in report.components:
        if comp.kind.startswith("transverse"):
            entry = catalog.get(comp.key)
            if entry is None:
                raise CatalogError(f"singularity {comp.key!r} has no catalog entry")
            for e in comp.source["edges"]:
                for _ in range(entry.get("t2_per_curve", 0)):
                    t2.append(transverse_t2_degree(P, e))
            continue
        entry = catalog.get(comp.key)
        if entry is None:
            raise CatalogError(f"singularity {comp.key!r} has no catalog entry")
        dv = _dual_vertex(comp)
        for mult in entry.get("t1_degree_multiples", []):
            t1.append(_int_vec(_vscale(mult, dv)))
        for mult in entry.get("t2_degree_multiples", []):
            t2.append(_int_vec(_vscale(mult, dv)))
    sub = type(report)([c for c in report.components if c.kind == "isolated_gorenstein_cone"])
    base = assemble_miniversal_base(sub, None, catalog, prefix="t")
    # rename to t0, t1, ... as in the QG convention
    mapping = {v: f"t{i}" for i, v in enumerate(base.variables)}
    base = MiniversalBase([mapping[v] for v in base.variables], base.degrees,
                          [_rename(r, mapping) for r in base.relations],
                          [BaseComponent(c.dim, [_rename(e, mapping) for e in c.equations], c.choice)
                           for c in base.components],
                          [dict(s, variables=[mapping[v] for v in s["variables"]]) for s in base.sources])
    consistent = _relation_degrees_ok(base, t2)
    t1.sort(reverse=True)
    t2_sorted = sorted(t2, reverse=True)
    return QGAssembly(t1, t2_sorted, base, consistent)


def _relation_degrees_ok(base, t2):
    R = base.ring()
    t2set = {tuple(Fraction(x) for x in d) for d in t2}
    for rel in base.relation_polys():
        for e in rel.terms:
            deg = (Fraction(0),) * len(base.degrees[0])
            for k, d in zip(e, base.degrees):
                deg = _vadd(deg, _vscale(k, tuple(Fraction(x) for x in d)))
            if deg not in t2set:
                return False
    return True


def product_base(base):
    """Base of ``X x Y`` for Gorenstein smooth ``Y`` with ``T^1_Y = 0``: unchanged."""
    return MiniversalBase(list(base.variables), list(base.degrees), list(base.relations),
                          list(base.components), list(base.sources))


# --------------------------------------------------- smoothing identification
class IdentificationError(ValueError):
    pass


def identify_smoothings(betti, base, report, catalog_rows, degree, catalog=None,
                        chi_range=range(-200, 201)):
    """Map each base component to a smooth Fano family.

    ``chi(X_t) = chi(X) + chi_U + sum of reduced Milnor Euler characteristics``;
    ``chi_U`` is the (unknown) contribution of the singular curves and must be
    divisible by their number. When all Milnor fibres have ``b2 = 0`` the
    Picard rank is constant, which gives a second, independent filter.
    """
    catalog = singularity_catalog() if catalog is None else catalog
    degree = Fraction(degree)
    if not report.components:
        # already smooth: the trivial deformation is the only fibre
        return {"chi_U": 0, "identity": True, "candidates": [],
                "assignment": [{"dim": base.nvars, "family": "identity", "euler": betti.euler}]}
    candidates = [r for r in catalog_rows
                  if Fraction(r["degree"]) == degree and r.get("very_ample", True)]
    isolated_sources = {i: s for i, s in enumerate(base.sources) if s["key"] != "H0(T1_U)"}
    curves = [c for c in report.components if c.kind.startswith("transverse")]
    n_curves = sum(c.source["curves"] for c in curves)
    comp_data = []
    all_b2_zero = True
    for comp in base.components:
        chi_tilde = 0
        for idx, name in comp.choice.items():
            key = isolated_sources[idx]["key"]
            milnor = milnor_lookup(key, name, catalog)
            chi_tilde += reduced_euler(milnor)
            all_b2_zero &= milnor["b2"] == 0
        comp_data.append(chi_tilde)
    # isolated singularities that do not appear in the base (e.g. unobstructed, no choice)
    if not base.components:
        comp_data = [0]
    chi_values = {}
    for r in candidates:
        chi_values.setdefault(r["euler"], []).append(r)
    solutions = []
    if n_curves:
        for chi_u in chi_range:
            if chi_u % n_curves:
                continue
            fam = []
            for ct in comp_data:
                chi = betti.euler + chi_u + ct
                rows = chi_values.get(chi, [])
                if len(rows) != 1:
                    break
                fam.append(rows[0]["family"])
            else:
                solutions.append((chi_u, fam))
    else:
        fam = []
        for ct in comp_data:
            chi = betti.euler + ct
            rows = chi_values.get(chi, [])
            if all_b2_zero:
                rows = [r for r in rows if r["picard_rank"] == betti.b2]
            if len(rows) != 1:
                break
            fam.append(rows[0]["family"])
        else:
            solutions.append((0, fam))
    if len(solutions) != 1:
        raise IdentificationError(
            f"expected a unique consistent assignment, found {len(solutions)}: {solutions}")
    chi_u, fam = solutions[0]
    result = {
        "chi_U": chi_u,
        "assignment": [{"dim": c.dim, "family": f, "euler": betti.euler + chi_u + ct}
                       for c, f, ct in zip(base.components, fam, comp_data)] if base.components
        else [{"dim": 0, "family": fam[0], "euler": betti.euler + chi_u}],
        "candidates": sorted({r["family"] for r in candidates}),
    }
    if all_b2_zero and not n_curves:
        rank_rows = [r for r in catalog_rows if Fraction(r["degree"]) == degree
                     and r["picard_rank"] == betti.b2]
        result["picard_rank_rule"] = sorted(r["family"] for r in rank_rows)
    return result


# ---------------------------------------------------- toric cyclic covers
def _chart_of_facet(facet_rays, prefix):
    from .fan import Cone, chart_presentation

    cone = Cone(facet_rays)
    pres = chart_presentation(cone, [f"{prefix}{i}" for i in range(len(cone.dual_hilbert_basis()))])
    gens = list(pres.ideal.gb())
    if len(gens) != 1:
        raise ValueError("facet chart is not a hypersurface")
    return cone, hypersurface_t1(gens[0], pres.degrees)


def curve_cycle_cover(component):
    """Cyclic cover of a neighbourhood of a cycle of singular curves.

    Charts are the fixed-point charts along the cycle; consecutive charts meet
    in the chart of the shared curve, which is the localization at the
    Hilbert-basis character vanishing on that curve's two rays.
    """
    facets = [[tuple(v) for v in F] for F in component.source["facets"]]
    edges = [[tuple(v) for v in e] for e in component.source["edges"]]
    order = [0]
    used = set()
    while len(order) < len(facets):
        cur = set(facets[order[-1]])
        for ei, e in enumerate(edges):
            if ei in used or not set(e) <= cur:
                continue
            nxt = [j for j, F in enumerate(facets) if j != order[-1] and set(e) <= set(F)]
            if nxt and nxt[0] not in order:
                used.add(ei)
                order.append(nxt[0])
                break
        else:
            raise ValueError("singular curves do not form a cycle")
    charts, fwd, bwd = [], [], []
    for pos, fi in enumerate(order):
        _, chart = _chart_of_facet(facets[fi], "u")
        charts.append(chart)
    n = len(order)
    for pos in range(n):
        a, b = set(facets[order[pos]]), set(facets[order[(pos + 1) % n]])
        edge = a & b
        fwd.append(_vanishing_variable(charts[pos], edge))
    for pos in range(n):
        a, b = set(facets[order[pos - 1]]), set(facets[order[pos]])
        bwd.append(_vanishing_variable(charts[pos], a & b))
    return CyclicCover(charts, fwd, bwd)


def _vanishing_variable(chart, edge):
    hits = [i for i, d in enumerate(chart.degrees) if all(linalg.dot(d, r) == 0 for r in edge)]
    if len(hits) != 1:
        raise ValueError("no unique character vanishing on the shared curve")
    return hits[0]
