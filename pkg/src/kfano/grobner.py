"""Polynomials over Q, Buchberger's algorithm and the usual ideal operations.

Polynomials are sparse: a mapping from exponent tuples to nonzero
``Fraction`` coefficients, attached to a :class:`PolynomialRing` that fixes
the variable names and the monomial order. The engine is a plain
Buchberger with the normal selection strategy and the two classical
criteria; it is meant for the small, mostly binomial ideals that occur in
toric geometry, not for hard benchmarks.
"""

import heapq
import os
import re
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import gcd

from . import linalg


class BudgetExceeded(RuntimeError):
    """Raised when a Gröbner computation exceeds its step budget."""


DEFAULT_BUDGET = 5_000_000


def current_budget():
    raw = os.environ.get("KFANO_BUDGET")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ValueError(f"KFANO_BUDGET must be an integer, got {raw!r}")
    return DEFAULT_BUDGET


# ------------------------------------------------------------------- orders
def _degrevlex_key(e):
    return (sum(e),) + tuple(-x for x in reversed(e))


class MonomialOrder:
    """``lex``, ``degrevlex`` or ``block`` (degrevlex on each block, first block wins)."""

    def __init__(self, kind="degrevlex", block=None):
        if kind not in ("lex", "degrevlex", "block"):
            raise ValueError(f"unknown monomial order {kind!r}")
        if kind == "block" and not block:
            raise ValueError("block order needs the size of the first block")
        self.kind = kind
        self.block = block

    def key(self, e):
        if self.kind == "lex":
            return e
        if self.kind == "degrevlex":
            return _degrevlex_key(e)
        k = self.block
        return _degrevlex_key(e[:k]) + _degrevlex_key(e[k:])

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.kind, self.block) == (other.kind, other.block)

    def __hash__(self):
        return hash((self.kind, self.block))

    def __repr__(self):
        if self.kind == "block":
            return f"MonomialOrder('block', {self.block})"
        return f"MonomialOrder({self.kind!r})"


class PolynomialRing:
    def __init__(self, names, order="degrevlex"):
        if isinstance(names, str):
            names = names.replace(",", " ").split()
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.order = order if isinstance(order, MonomialOrder) else MonomialOrder(order)
        self.nvars = len(self.names)
        self._index = {n: i for i, n in enumerate(self.names)}

    def __repr__(self):
        return f"PolynomialRing({list(self.names)}, {self.order!r})"

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and self.names == other.names and self.order == other.order

    def __hash__(self):
        return hash((self.names, self.order))

    def key(self, e):
        return self.order.key(e)

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.monomial([0] * self.nvars)

    def monomial(self, exps, coeff=1):
        return Polynomial(self, {tuple(exps): Fraction(coeff)})

    def gen(self, name):
        i = self._index[name] if isinstance(name, str) else name
        e = [0] * self.nvars
        e[i] = 1
        return self.monomial(e)

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def index(self, name):
        return self._index[name]

    def __call__(self, text):
        return self.parse(text)

    def parse(self, text):
        return _Parser(self, text).parse()

    def with_order(self, order):
        return PolynomialRing(self.names, order)


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = {e: c if type(c) is Fraction else Fraction(c) for e, c in terms.items() if c}

    # ---- arithmetic
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring.names != self.ring.names:
                raise ValueError("polynomials live in different rings")
            return other
        return Polynomial(self.ring, {(0,) * self.ring.nvars: Fraction(other)})

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, 0) + c
        return Polynomial(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return Polynomial(self.ring, t)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # ---- structure
    def is_zero(self):
        return not self.terms

    def leading_monomial(self):
        return max(self.terms, key=self.ring.key)

    def leading_coefficient(self):
        return self.terms[self.leading_monomial()]

    def monic(self):
        if not self.terms:
            return self
        c = self.leading_coefficient()
        return Polynomial(self.ring, {e: v / c for e, v in self.terms.items()})

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self, weights=None):
        if weights is None:
            degs = {sum(e) for e in self.terms}
        else:
            degs = {tuple(linalg.matvec(linalg.transpose(weights), e)) for e in self.terms}
        return len(degs) <= 1

    def variables(self):
        used = set()
        for e in self.terms:
            used.update(i for i, x in enumerate(e) if x)
        return sorted(used)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: self.ring.key(t[0]), reverse=True)

    def substitute(self, images, ring=None):
        """Image under ``x_i -> images[i]`` (polynomials in ``ring``)."""
        ring = ring or images[0].ring
        out = ring.zero()
        cache = {}
        for e, c in self.terms.items():
            term = ring.one() * c
            for i, k in enumerate(e):
                if k:
                    if (i, k) not in cache:
                        cache[(i, k)] = images[i] ** k
                    term = term * cache[(i, k)]
            out = out + term
        return out

    def evaluate(self, point):
        total = Fraction(0)
        for e, c in self.terms.items():
            v = Fraction(c)
            for x, k in zip(point, e):
                v *= Fraction(x) ** k
            total += v
        return total

    def change_ring(self, ring, mapping=None):
        """Move to a ring containing the same variable names (or via index map)."""
        if mapping is None:
            mapping = [ring.index(n) for n in self.ring.names]
        t = {}
        for e, c in self.terms.items():
            ne = [0] * ring.nvars
            for i, k in enumerate(e):
                if k:
                    ne[mapping[i]] += k
            t[tuple(ne)] = c
        return Polynomial(ring, t)

    def primitive_integer(self):
        """Scale to coprime integer coefficients with positive leading term."""
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        ints = {e: int(c * den) for e, c in self.terms.items()}
        g = 0
        for v in ints.values():
            g = gcd(g, v)
        if ints[self.leading_monomial()] < 0:
            g = -g
        return Polynomial(self.ring, {e: Fraction(v, g) for e, v in ints.items()})

    # ---- text
    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(self.ring.names, e) if k
            )
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if mono and a == 1:
                body = mono
            elif mono:
                body = f"{a}*{mono}"
            else:
                body = str(a)
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Polynomial({self})"


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*^()/]))")


class _Parser:
    """Recursive-descent parser for ``3/2*x^2*y - (z + 1)^2`` style text."""

    def __init__(self, ring, text):
        self.ring = ring
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
            num, name, op = m.groups()
            if num is not None:
                self.tokens.append(("num", Fraction(num)))
            elif name is not None:
                if name not in ring._index:
                    raise ValueError(f"unknown variable {name!r}")
                self.tokens.append(("var", name))
            else:
                self.tokens.append(("op", "^" if op == "**" else op))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self):
        if not self.tokens:
            raise ValueError("empty polynomial")
        p = self.expr()
        if self.i != len(self.tokens):
            raise ValueError(f"trailing input in polynomial at token {self.peek()!r}")
        return p

    def expr(self):
        sign = 1
        if self.peek() in (("op", "-"), ("op", "+")):
            sign = -1 if self.take()[1] == "-" else 1
        p = self.term() * sign
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            p = p + t if op == "+" else p - t
        return p

    def term(self):
        p = self.factor()
        while self.peek() == ("op", "*"):
            self.take()
            p = p * self.factor()
        return p

    def factor(self):
        kind, val = self.take()
        if kind == "num":
            base = self.ring.one() * val
        elif kind == "var":
            base = self.ring.gen(val)
        elif (kind, val) == ("op", "("):
            base = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
        else:
            raise ValueError(f"unexpected token {val!r}")
        if self.peek() == ("op", "^"):
            self.take()
            kind, exp = self.take()
            if kind != "num" or exp.denominator != 1:
                raise ValueError("exponents must be nonnegative integers")
            base = base ** int(exp)
        return base


# ------------------------------------------------------------ Buchberger core
def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


class _Budget:
    def __init__(self, limit):
        self.limit = limit if limit is not None else current_budget()
        self.used = 0

    def spend(self, n=1):
        self.used += n
        if self.used > self.limit:
            raise BudgetExceeded(
                f"Gröbner computation exceeded its budget of {self.limit} steps "
                "(raise KFANO_BUDGET to allow more)")


def _reduce(terms, basis, key, budget, full=True):
    """Normal form of ``terms`` (dict) modulo ``basis``: list of (lm, lc, dict)."""
    f = dict(terms)
    rem = {}
    while f:
        lm = max(f, key=key)
        c = f[lm]
        for g_lm, g_lc, g in basis:
            if _divides(g_lm, lm):
                q = c / g_lc
                shift = _sub(lm, g_lm)
                for e, v in g.items():
                    ne = tuple(a + b for a, b in zip(e, shift))
                    nv = f.get(ne, 0) - q * v
                    if nv:
                        f[ne] = nv
                    else:
                        f.pop(ne, None)
                budget.spend()
                break
        else:
            rem[lm] = c
            del f[lm]
            if not full:
                rem.update(f)
                break
    return rem


def _make_monic(terms, key):
    lm = max(terms, key=key)
    c = terms[lm]
    return lm, {e: v / c for e, v in terms.items()}


def _spoly(f, g):
    f_lm, _, f_t = f
    g_lm, _, g_t = g
    L = _lcm(f_lm, g_lm)
    a = _sub(L, f_lm)
    b = _sub(L, g_lm)
    out = {}
    for e, v in f_t.items():
        ne = tuple(x + y for x, y in zip(e, a))
        out[ne] = out.get(ne, 0) + v
    for e, v in g_t.items():
        ne = tuple(x + y for x, y in zip(e, b))
        nv = out.get(ne, 0) - v
        if nv:
            out[ne] = nv
        else:
            out.pop(ne, None)
    return {e: v for e, v in out.items() if v}


def buchberger(gens, ring=None, budget=None):
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    Returns a :class:`ReducedGB`. Deterministic: the output depends only on
    the ideal and the ring's monomial order. Pairs are processed smallest
    lcm first; useless pairs are discarded with the Gebauer-Möller form of
    Buchberger's two criteria.
    """
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("need a ring when no generators are given")
        ring = gens[0].ring
    memo = {}

    def key(e):
        k = memo.get(e)
        if k is None:
            k = memo[e] = ring.key(e)
        return k

    bud = _Budget(budget)
    basis = []
    pairs = {}
    heap = []
    inputs = [g.terms for g in gens if g.terms]
    inputs.sort(key=lambda t: (key(max(t, key=key)), sorted(t.items())))

    def coprime(a, b):
        return all(x == 0 or y == 0 for x, y in zip(a, b))

    def add(terms):
        lm, t = _make_monic(terms, key)
        h = len(basis)
        basis.append((lm, Fraction(1), t))
        # B-criterion: old pairs made redundant by the new leading monomial
        for (i, j), L in list(pairs.items()):
            if (_divides(lm, L) and _lcm(basis[i][0], lm) != L
                    and _lcm(basis[j][0], lm) != L):
                del pairs[(i, j)]
        # M- and F-criteria among the new pairs
        cand = {i: _lcm(basis[i][0], lm) for i in range(h)}
        keep = {}
        by_lcm = {}
        for i, L in cand.items():
            by_lcm.setdefault(L, []).append(i)
        for L, idx in by_lcm.items():
            if any(L2 != L and _divides(L2, L) for L2 in by_lcm):
                continue
            if any(coprime(basis[i][0], lm) for i in idx):
                continue
            keep[min(idx)] = L
        for i, L in keep.items():
            pairs[(i, h)] = L
            heapq.heappush(heap, (key(L), i, h))

    for t in inputs:
        r = _reduce(t, basis, key, bud)
        if r:
            add(r)

    while heap:
        _, i, j = heapq.heappop(heap)
        if (i, j) not in pairs:
            continue
        del pairs[(i, j)]
        s = _spoly(basis[i], basis[j])
        bud.spend()
        if not s:
            continue
        r = _reduce(s, basis, key, bud)
        if r:
            add(r)
    return ReducedGB(ring, _interreduce(basis, key, bud))


def _interreduce(basis, key, bud):
    # drop elements whose leading monomial is divisible by another's
    basis = sorted(basis, key=lambda b: key(b[0]))
    minimal = []
    for b in basis:
        if not any(_divides(m[0], b[0]) for m in minimal):
            minimal.append(b)
    out = []
    for idx, b in enumerate(minimal):
        others = [m for j, m in enumerate(minimal) if j != idx]
        r = _reduce(b[2], others, key, bud)
        lm, t = _make_monic(r, key)
        out.append(t)
    return out


class ReducedGB:
    """A reduced Gröbner basis: monic, autoreduced, sorted by leading monomial."""

    def __init__(self, ring, term_dicts):
        self.ring = ring
        polys = [Polynomial(ring, t) for t in term_dicts]
        polys.sort(key=lambda p: ring.key(p.leading_monomial()))
        self.polys = polys
        self._basis = [(p.leading_monomial(), Fraction(1), p.terms) for p in polys]

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def __eq__(self, other):
        return (isinstance(other, ReducedGB) and self.ring.names == other.ring.names
                and self.ring.order == other.ring.order
                and [p.terms for p in self.polys] == [p.terms for p in other.polys])

    def leading_monomials(self):
        return [p.leading_monomial() for p in self.polys]

    def normal_form(self, f, budget=None):
        r = _reduce(f.terms, self._basis, self.ring.key, _Budget(budget))
        return Polynomial(self.ring, r)

    def contains(self, f):
        return self.normal_form(f).is_zero()

    def is_unit_ideal(self):
        return any(sum(m) == 0 for m in self.leading_monomials())

    def text(self):
        return [str(p) for p in self.polys]

    def __repr__(self):
        return f"ReducedGB({self.text()})"


# ---------------------------------------------------------------- Ideal API
class Ideal:
    """An ideal given by generators; the reduced GB is computed lazily."""

    def __init__(self, gens, ring=None):
        gens = [g for g in gens]
        if ring is None:
            if not gens:
                raise ValueError("need a ring for the zero ideal")
            ring = gens[0].ring
        self.ring = ring
        self.gens = [g for g in gens if not g.is_zero()]
        self._gb = None

    def gb(self, budget=None):
        if self._gb is None:
            self._gb = buchberger(self.gens, self.ring, budget)
        return self._gb

    def contains(self, f):
        return self.gb().contains(f)

    def __contains__(self, f):
        return self.contains(f)

    def __eq__(self, other):
        return isinstance(other, Ideal) and ideal_equality(self, other)

    __hash__ = None

    def __repr__(self):
        return f"Ideal({[str(g) for g in self.gens]})"


def normal_form(f, gb):
    if isinstance(gb, Ideal):
        gb = gb.gb()
    return gb.normal_form(f)


def ideal_membership(f, ideal):
    if not isinstance(ideal, Ideal):
        ideal = Ideal(ideal, f.ring)
    return ideal.contains(f)


def ideal_equality(I, J):
    if not isinstance(I, Ideal):
        I = Ideal(I)
    if not isinstance(J, Ideal):
        J = Ideal(J, I.ring)
    if I.ring.names != J.ring.names:
        raise ValueError("ideals in different rings")
    if I.ring.order != J.ring.order:
        J = Ideal([g.change_ring(I.ring) for g in J.gens], I.ring)
    return I.gb() == J.gb()


def ideal_contains(I, J):
    """True when every generator of J lies in I."""
    gb = I.gb()
    return all(gb.contains(g.change_ring(I.ring)) for g in J.gens)


def eliminate(ideal, drop_vars, budget=None):
    """``I ∩ k[remaining vars]`` as an :class:`Ideal` in a ring on the remaining variables."""
    ring = ideal.ring
    drop = [ring.index(v) if isinstance(v, str) else v for v in drop_vars]
    keep = [i for i in range(ring.nvars) if i not in drop]
    order_names = [ring.names[i] for i in drop] + [ring.names[i] for i in keep]
    big = PolynomialRing(order_names, MonomialOrder("block", len(drop)) if drop else "degrevlex")
    moved = [g.change_ring(big) for g in ideal.gens]
    gb = buchberger(moved, big, budget)
    small = PolynomialRing([ring.names[i] for i in keep], "degrevlex")
    k = len(drop)
    out = []
    for p in gb:
        if all(not any(e[:k]) for e in p.terms):
            out.append(Polynomial(small, {e[k:]: c for e, c in p.terms.items()}))
    return Ideal(out, small)


def ring_map_kernel(source, images, target, relations=(), budget=None):
    """Kernel of ``k[source] -> k[target]/(relations)`` sending ``x_i -> images[i]``.

    ``source`` is a :class:`PolynomialRing` (or name list); images and relations
    are polynomials in ``target``. Computed from the graph ideal by eliminating
    the target variables.
    """
    if not isinstance(source, PolynomialRing):
        source = PolynomialRing(source)
    clash = set(source.names) & set(target.names)
    if clash:
        raise ValueError(f"source and target share variable names: {sorted(clash)}")
    names = list(target.names) + list(source.names)
    big = PolynomialRing(names, MonomialOrder("block", target.nvars))
    tmap = list(range(target.nvars))
    gens = [r.change_ring(big, tmap) for r in relations]
    for i, img in enumerate(images):
        gens.append(big.gen(target.nvars + i) - img.change_ring(big, tmap))
    gb = buchberger(gens, big, budget)
    out = []
    for p in gb:
        if all(all(x == 0 for x in e[:target.nvars]) for e in p.terms):
            out.append(Polynomial(source, {e[target.nvars:]: c for e, c in p.terms.items()}))
    return Ideal(out, source)


def ideal_intersection(I, J, budget=None):
    """``I ∩ J`` via ``t·I + (1 − t)·J`` and elimination of ``t``."""
    ring = I.ring
    t = "_t"
    while t in ring.names:
        t += "_"
    big = PolynomialRing((t,) + ring.names, MonomialOrder("block", 1))
    shift = list(range(1, ring.nvars + 1))
    tv = big.gen(0)
    gens = [tv * g.change_ring(big, shift) for g in I.gens]
    gens += [(1 - tv) * g.change_ring(big, shift) for g in J.gens]
    gb = buchberger(gens, big, budget)
    out = []
    for p in gb:
        if all(e[0] == 0 for e in p.terms):
            out.append(Polynomial(ring, {e[1:]: c for e, c in p.terms.items()}))
    return Ideal(out, ring)


def saturate_by_variable(ideal, var, budget=None):
    """``I : x^∞`` via ``I + (1 − s·x)`` and elimination of ``s``."""
    ring = ideal.ring
    i = ring.index(var) if isinstance(var, str) else var
    s = "_s"
    while s in ring.names:
        s += "_"
    big = PolynomialRing((s,) + ring.names, MonomialOrder("block", 1))
    shift = list(range(1, ring.nvars + 1))
    gens = [g.change_ring(big, shift) for g in ideal.gens]
    gens.append(1 - big.gen(0) * big.gen(i + 1))
    gb = buchberger(gens, big, budget)
    out = []
    for p in gb:
        if all(e[0] == 0 for e in p.terms):
            out.append(Polynomial(ring, {e[1:]: c for e, c in p.terms.items()}))
    return Ideal(out, ring)


def _monomials_of_degree(n, d):
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        yield tuple(e)


def hilbert_function_truncated(ideal, d_max):
    """Number of standard monomials in each degree 0..d_max (standard grading).

    For homogeneous ideals this is the Hilbert function of ``k[x]/I``.
    """
    lms = ideal.gb().leading_monomials() if isinstance(ideal, Ideal) else ideal
    n = ideal.ring.nvars if isinstance(ideal, Ideal) else len(lms[0])
    out = []
    for d in range(d_max + 1):
        cnt = 0
        for e in _monomials_of_degree(n, d):
            if not any(_divides(m, e) for m in lms):
                cnt += 1
        out.append(cnt)
    return out


def krull_dimension(ideal):
    """Largest set of variables independent modulo the leading-term ideal."""
    gb = ideal.gb()
    if gb.is_unit_ideal():
        return -1
    n = ideal.ring.nvars
    supports = [frozenset(i for i, x in enumerate(m) if x) for m in gb.leading_monomials()]
    for k in range(n, -1, -1):
        for S in combinations(range(n), k):
            s = set(S)
            if not any(sup <= s for sup in supports):
                return k
    return 0


def binomial(ring, u):
    """``x^{u+} - x^{u-}`` for an integer vector ``u``."""
    pos = tuple(max(x, 0) for x in u)
    neg = tuple(max(-x, 0) for x in u)
    return Polynomial(ring, {pos: Fraction(1)}) - Polynomial(ring, {neg: Fraction(1)})


def toric_ideal(configuration, names=None, order="degrevlex", budget=None):
    """Toric ideal of a point configuration (columns = ``configuration[i]``).

    Lattice-basis binomials are saturated by every variable in turn.
    """
    pts = [list(p) for p in configuration]
    n = len(pts)
    names = names or [f"y{i}" for i in range(n)]
    ring = PolynomialRing(names, order)
    if n == 0:
        return Ideal([], ring)
    A = linalg.transpose(pts) if pts[0] else [[0] * n]
    kernel = linalg.integer_kernel(A, ncols=n)
    gens = [binomial(ring, u) for u in kernel]
    I = Ideal(gens, ring)
    if not gens:
        return I
    for i in range(n):
        I = saturate_by_variable(I, i, budget)
    return Ideal(list(I.gb()), ring)


def monomial_parametrization_vanishes(ideal, configuration):
    """Check ``f(t^{a_1}, ..., t^{a_n}) = 0`` for each generator (Laurent substitution)."""
    for g in ideal.gens:
        acc = {}
        for e, c in g.terms.items():
            m = tuple(sum(k * p[j] for k, p in zip(e, configuration)) for j in range(len(configuration[0])))
            acc[m] = acc.get(m, 0) + c
        if any(v for v in acc.values()):
            return False
    return True
