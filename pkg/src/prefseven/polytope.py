"""Weight-space geometry: constraint systems on the simplex, exact linear
programming, vertex enumeration, convex reconstruction and uniform sampling.

The exact path (LP, vertices, witnesses) runs entirely on Fractions so that
verdict boundaries (an optimum exactly 0) are unambiguous. Sampling is the
only float code.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .model import (PerformanceTable, PrefsevenError, ValidationError,
                    Violation, WeightVector)
from .rationals import format_rational, parse_rational

ZERO = Fraction(0)
ONE = Fraction(1)

DEFAULT_ENUMERATION_LIMIT = 10


class EmptyPolytopeError(PrefsevenError):
    """The constraint system has no feasible point."""

    def __init__(self, message="empty polytope", conflicts=()):
        self.conflicts = list(conflicts)
        super().__init__(message)


class DegeneratePolytopeError(PrefsevenError):
    """The region is not full-dimensional inside the sum-to-one hyperplane."""


class EnumerationLimitError(PrefsevenError):
    """Too many criteria for exhaustive vertex enumeration; use sampling."""


class UnboundedObjectiveError(PrefsevenError):
    """Defensive: objectives over subsets of the simplex are always bounded."""


@dataclass(frozen=True)
class LinearConstraint:
    """coefficients . w  <relation>  rhs, with a provenance tag.

    The strict relation "<" is accepted for diagnostics only and never enters
    polytope construction; strictness is handled at the verdict layer by sign
    tests on exact optima.
    """

    coefficients: tuple[Fraction, ...]
    relation: str
    rhs: Fraction
    tag: str = ""

    def __post_init__(self):
        if self.relation not in ("<=", ">=", "=", "<"):
            raise ValidationError(Violation(
                "constraint-relation", f"unknown relation {self.relation!r}"))
        object.__setattr__(self, "coefficients",
                           tuple(parse_rational(c) for c in self.coefficients))
        object.__setattr__(self, "rhs", parse_rational(self.rhs))

    def satisfied_by(self, point: Sequence[Fraction]) -> bool:
        lhs = sum((c * x for c, x in zip(self.coefficients, point)), ZERO)
        if self.relation == "<=":
            return lhs <= self.rhs
        if self.relation == ">=":
            return lhs >= self.rhs
        if self.relation == "=":
            return lhs == self.rhs
        return lhs < self.rhs

    def to_json(self) -> dict:
        return {
            "coefficients": [format_rational(c) for c in self.coefficients],
            "relation": self.relation,
            "rhs": format_rational(self.rhs),
            "tag": self.tag,
        }


@dataclass(frozen=True)
class Optimum:
    value: Fraction
    argument: WeightVector


@dataclass(frozen=True)
class ConvexWitness:
    """Coefficients alpha >= 0, summing to 1, over an ordered vertex list."""

    vertices: tuple[tuple[Fraction, ...], ...]
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.vertices) != len(self.coefficients):
            raise ValidationError(Violation(
                "witness-shape", "one coefficient per vertex required"))
        if any(a < 0 for a in self.coefficients):
            raise ValidationError(Violation(
                "witness-negative", "witness coefficients must be nonnegative"))
        if sum(self.coefficients, ZERO) != 1:
            raise ValidationError(Violation(
                "witness-sum", "witness coefficients must sum to 1"))

    def reconstruct(self) -> tuple[Fraction, ...]:
        dim = len(self.vertices[0])
        out = [ZERO] * dim
        for a, v in zip(self.coefficients, self.vertices):
            for j in range(dim):
                out[j] += a * v[j]
        return tuple(out)


# --------------------------------------------------------------------------
# exact linear algebra helpers

def _gauss_solve(rows, rhs):
    """Solve a square rational system; None if singular."""
    n = len(rows)
    a = [list(r) + [v] for r, v in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def _independent_rows(rows, rhs):
    """Reduce (rows | rhs) to an independent subset; None if inconsistent."""
    work = [list(r) + [v] for r, v in zip(rows, rhs)]
    keep: list[int] = []
    pivots: list[int] = []
    n = len(rows[0]) if rows else 0
    for i, row in enumerate(work):
        r = row[:]
        for k, p in zip(keep, pivots):
            if r[p] != 0:
                f = r[p]
                r = [x - f * y for x, y in zip(r, work[k])]
        piv = next((j for j in range(n) if r[j] != 0), None)
        if piv is None:
            if r[n] != 0:
                return None
            continue
        pv = r[piv]
        work[i] = [x / pv for x in r]
        keep.append(i)
        pivots.append(piv)
    return ([tuple(work[i][:n]) for i in keep], [work[i][n] for i in keep])


# --------------------------------------------------------------------------
# bounded simplex method (exact, Bland's rule)

class _Infeasible(Exception):
    pass


def _simplex_minimize(c, A, b):
    value, x = _simplex_solve([c], A, b)[0]
    return value, x


def _simplex_solve(costs, A, b):
    """Minimize each cost over A x = b, x >= 0, all exact rationals.

    Two phases, Bland's anti-cycling rule throughout. Rows already carrying
    a unit column (slacks of well-oriented inequalities) enter the initial
    basis directly, so artificials only cover the remainder. The feasibility
    phase runs once; each subsequent cost warm-starts from the previous
    optimal basis. Returns a list of (value, x) in cost order.
    """
    m = len(A)
    n = len(costs[0])
    rows = []
    rhs = []
    for i in range(m):
        if b[i] < 0:
            rows.append([-x for x in A[i]])
            rhs.append(-b[i])
        else:
            rows.append(list(A[i]))
            rhs.append(b[i])

    # seed the basis with unit columns (single nonzero equal to one)
    owner = [None] * m
    taken = set()
    for j in range(n):
        hit = None
        for i in range(m):
            v = rows[i][j]
            if v != 0:
                if v == ONE and hit is None:
                    hit = i
                else:
                    hit = None
                    break
        if hit is not None and owner[hit] is None and j not in taken:
            owner[hit] = j
            taken.add(j)

    uncovered = [i for i in range(m) if owner[i] is None]
    na = len(uncovered)
    art_of = {row: n + k for k, row in enumerate(uncovered)}
    tab = []
    basis = []
    for i in range(m):
        art = [ZERO] * na
        if i in art_of:
            art[art_of[i] - n] = ONE
        tab.append(rows[i] + art + [rhs[i]])
        basis.append(owner[i] if owner[i] is not None else art_of[i])

    def pivot(r, col):
        pr = tab[r]
        pv = pr[col]
        tab[r] = [x / pv for x in pr]
        for i in range(len(tab)):
            if i != r and tab[i][col] != 0:
                f = tab[i][col]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[r])]
        basis[r] = col

    def run(cost, active_cols):
        # cost: full-length objective; iterate Bland until no negative
        # reduced cost among active_cols
        while True:
            # reduced costs r_j = c_j - sum over basic rows of c_basis * tab
            red = list(cost)
            for i, bi in enumerate(basis):
                cb = cost[bi]
                if cb != 0:
                    row = tab[i]
                    for j in active_cols:
                        if row[j] != 0:
                            red[j] -= cb * row[j]
            basic = set(basis)
            enter = next((j for j in active_cols
                          if j not in basic and red[j] < 0), None)
            if enter is None:
                return
            leave = None
            best = None
            for i in range(len(tab)):
                a = tab[i][enter]
                if a > 0:
                    ratio = tab[i][-1] / a
                    if best is None or ratio < best or \
                            (ratio == best and basis[i] < basis[leave]):
                        best = ratio
                        leave = i
            if leave is None:
                raise UnboundedObjectiveError(
                    "objective unbounded over the feasible set")
            pivot(leave, enter)

    if na:
        phase1_cost = [ZERO] * n + [ONE] * na + [ZERO]
        run(phase1_cost, list(range(n + na)))
        obj1 = sum((phase1_cost[basis[i]] * tab[i][-1]
                    for i in range(len(tab))), ZERO)
        if obj1 != 0:
            raise _Infeasible

        # drive remaining artificials out of the basis or drop redundant rows
        for i in reversed(range(len(tab))):
            if basis[i] >= n:
                col = next((j for j in range(n) if tab[i][j] != 0), None)
                if col is None:
                    tab.pop(i)
                    basis.pop(i)
                else:
                    pivot(i, col)

    results = []
    for c in costs:
        phase2_cost = list(c) + [ZERO] * na + [ZERO]
        run(phase2_cost, list(range(n)))
        x = [ZERO] * n
        for i, bi in enumerate(basis):
            if bi < n:
                x[bi] = tab[i][-1]
        value = sum((ci * xi for ci, xi in zip(c, x)), ZERO)
        results.append((value, x))
    return results


# --------------------------------------------------------------------------

def _direction_key(coeffs):
    lead = next((c for c in coeffs if c != 0), None)
    if lead is None:
        return None
    return tuple(c / lead for c in coeffs)


def _is_nonneg_row(row) -> bool:
    """True for a normalized inequality that merely says w_j >= 0."""
    coeffs, rhs, _tag = row
    if rhs != 0:
        return False
    nz = [c for c in coeffs if c != 0]
    return len(nz) == 1 and nz[0] == -ONE


def _helmert_basis(dim: int) -> np.ndarray:
    """Orthonormal basis (dim x dim-1) of the sum-zero subspace."""
    cols = []
    for k in range(1, dim):
        v = np.zeros(dim)
        v[:k] = 1.0
        v[k] = -float(k)
        cols.append(v / np.sqrt(k * (k + 1)))
    return np.column_stack(cols)


class WeightPolytope:
    """A region of the weight simplex described by linear constraints.

    The constraint list always contains the sum-to-one equality and one
    nonnegativity row per coordinate; builders add the region-specific rows.
    Immutable apart from lazily cached vertices and feasibility.
    """

    def __init__(self, dim: int, extra: Iterable[LinearConstraint] = (),
                 names: Sequence[str] | None = None):
        if dim < 1:
            raise ValidationError(Violation("polytope-dim", "dim must be >= 1"))
        self.dim = dim
        names = list(names) if names else [f"w{j + 1}" for j in range(dim)]
        base = [LinearConstraint(tuple(ONE for _ in range(dim)), "=", ONE, "simplex")]
        for j in range(dim):
            coeff = tuple(-ONE if k == j else ZERO for k in range(dim))
            base.append(LinearConstraint(coeff, "<=", ZERO, f"nonneg:{names[j]}"))
        extra = list(extra)
        for con in extra:
            if len(con.coefficients) != dim:
                raise ValidationError(Violation(
                    "constraint-dim", f"constraint {con.tag!r} has wrong dimension"))
            if con.relation == "<":
                raise ValidationError(Violation(
                    "constraint-strict",
                    "strict inequalities cannot enter polytope construction"))
        self.constraints: tuple[LinearConstraint, ...] = tuple(base + extra)
        self._names = names
        self._vertices: tuple[tuple[Fraction, ...], ...] | None = None
        self._feasible_point: tuple[Fraction, ...] | None = None
        self._empty: bool | None = None

    # -- constraint views ---------------------------------------------------

    def _normalized_inequalities(self):
        """All inequality rows as (coeffs, rhs) meaning coeffs.w <= rhs."""
        out = []
        for con in self.constraints:
            if con.relation == "<=":
                out.append((con.coefficients, con.rhs, con.tag))
            elif con.relation == ">=":
                out.append((tuple(-c for c in con.coefficients), -con.rhs, con.tag))
        return out

    def _equalities(self):
        return [(con.coefficients, con.rhs, con.tag)
                for con in self.constraints if con.relation == "="]

    def contains(self, point: Sequence[Fraction]) -> bool:
        pt = tuple(parse_rational(x) for x in point)
        if len(pt) != self.dim:
            return False
        return all(con.satisfied_by(pt) for con in self.constraints)

    # -- feasibility and optimization ----------------------------------------

    def _lp(self, objective, extra_vars=0, margin=False):
        """Standard-form data for: objective over this polytope.

        Variables: w (dim), optional margin variable t, then slacks.
        With margin=True every inequality is tightened by t (a.w + t <= b).
        Rows that only restate w_j >= 0 are dropped unless margin is set,
        since standard form already enforces nonnegativity.
        """
        ineqs = self._normalized_inequalities()
        if not margin:
            ineqs = [row for row in ineqs if not _is_nonneg_row(row)]
        eqs = self._equalities()
        nvar = self.dim + (1 if margin else 0)
        nslack = len(ineqs)
        total = nvar + nslack
        A = []
        b = []
        for coeffs, rhs, _tag in eqs:
            A.append(list(coeffs) + [ZERO] * (total - self.dim))
            b.append(rhs)
        for i, (coeffs, rhs, _tag) in enumerate(ineqs):
            row = list(coeffs)
            if margin:
                row.append(ONE)
            row += [ONE if k == i else ZERO for k in range(nslack)]
            A.append(row)
            b.append(rhs)
        c = list(objective) + [ZERO] * (total - len(objective))
        return c, A, b, total

    def feasible_point(self) -> tuple[Fraction, ...]:
        if self._feasible_point is None:
            c, A, b, _ = self._lp([ZERO] * self.dim)
            try:
                _, x = _simplex_minimize(c, A, b)
            except _Infeasible:
                self._empty = True
                raise EmptyPolytopeError()
            self._feasible_point = tuple(x[:self.dim])
            self._empty = False
        return self._feasible_point

    def is_empty(self) -> bool:
        if self._empty is None:
            try:
                self.feasible_point()
            except EmptyPolytopeError:
                pass
        return bool(self._empty)

    def optimize(self, objective: Sequence[Fraction], direction: str = "min") -> Optimum:
        """Exact optimum of objective.w over the polytope, with its argmin/argmax."""
        obj = [parse_rational(x) for x in objective]
        if len(obj) != self.dim:
            raise ValidationError(Violation(
                "objective-dim", "objective dimension must match criteria count"))
        if direction not in ("min", "max"):
            raise ValidationError(Violation("direction", f"bad direction {direction!r}"))
        sign = ONE if direction == "min" else -ONE
        c, A, b, _ = self._lp([sign * x for x in obj])
        try:
            value, x = _simplex_minimize(c, A, b)
        except _Infeasible:
            self._empty = True
            raise EmptyPolytopeError()
        self._empty = False
        point = tuple(x[:self.dim])
        return Optimum(value=sign * value, argument=WeightVector(point))

    def optimize_span(self, objective: Sequence[Fraction]) -> tuple[Optimum, Optimum]:
        """(min, max) of objective.w with one shared feasibility phase."""
        obj = [parse_rational(x) for x in objective]
        if len(obj) != self.dim:
            raise ValidationError(Violation(
                "objective-dim", "objective dimension must match criteria count"))
        c, A, b, _ = self._lp(obj)
        try:
            (vmin, xmin), (vneg, xmax) = _simplex_solve([c, [-x for x in c]], A, b)
        except _Infeasible:
            self._empty = True
            raise EmptyPolytopeError()
        self._empty = False
        return (Optimum(value=vmin, argument=WeightVector(tuple(xmin[:self.dim]))),
                Optimum(value=-vneg, argument=WeightVector(tuple(xmax[:self.dim]))))

    def interior_point(self) -> tuple[tuple[Fraction, ...], Fraction]:
        """Point maximizing the uniform constraint margin; (point, margin).

        Zero margin means the region is flat inside the simplex hyperplane.
        """
        obj = [ZERO] * self.dim + [-ONE]
        c, A, b, _ = self._lp(obj, margin=True)
        try:
            value, x = _simplex_minimize(c, A, b)
        except _Infeasible:
            self._empty = True
            raise EmptyPolytopeError()
        self._empty = False
        return tuple(x[:self.dim]), -value

    # -- vertices ------------------------------------------------------------

    def enumerate_vertices(self, limit: int = DEFAULT_ENUMERATION_LIMIT):
        """Exact, duplicate-free, sorted vertex list (cached).

        Exhaustive active-set search: every choice of dim - #equalities
        inequalities, solved with the equalities, kept when feasible.
        """
        if self._vertices is not None:
            return self._vertices
        if self.dim > limit:
            raise EnumerationLimitError(
                f"{self.dim} criteria exceed the enumeration limit {limit}; "
                "use sampling")
        eqs = self._equalities()
        ineqs = self._normalized_inequalities()
        need = self.dim - len(eqs)
        if need > 0 and math.comb(len(ineqs), need) > 256:
            # rows whose slack never reaches zero cannot be active at any
            # vertex; pruning them shrinks the active-set search
            ineqs = [row for row in ineqs
                     if self.optimize(row[0], "max").value >= row[1]]
        keys = [_direction_key(coeffs) for coeffs, _r, _t in ineqs]
        found = set()
        for chosen in itertools.combinations(range(len(ineqs)), need):
            if len({keys[i] for i in chosen}) < need:
                continue
            rows = [list(coeffs) for coeffs, _r, _t in eqs] + \
                   [list(ineqs[i][0]) for i in chosen]
            rhs = [r for _c, r, _t in eqs] + [ineqs[i][1] for i in chosen]
            sol = _gauss_solve(rows, rhs)
            if sol is None:
                continue
            pt = tuple(sol)
            if pt in found:
                continue
            if all(con.satisfied_by(pt) for con in self.constraints):
                found.add(pt)
        if not found:
            raise EmptyPolytopeError()
        self._vertices = tuple(sorted(found))
        self._empty = False
        return self._vertices

    def convex_witness(self, point: Sequence[Fraction]) -> ConvexWitness:
        """Reconstruct a feasible point as a convex combination of vertices.

        Among all valid reconstructions this searches for the minimum-norm
        one (active-set on the exact KKT system), which picks the symmetric
        coefficients whenever the point sits symmetrically; falls back to a
        basic feasible solution if the KKT system degenerates.
        """
        pt = tuple(parse_rational(x) for x in point)
        if not self.contains(pt):
            raise ValidationError(Violation(
                "witness-infeasible", "point is not inside the polytope"))
        verts = self.enumerate_vertices()
        nv = len(verts)
        rows = [tuple(v[j] for v in verts) for j in range(self.dim)]
        rows.append(tuple(ONE for _ in range(nv)))
        rhs = list(pt) + [ONE]
        reduced = _independent_rows(rows, rhs)
        if reduced is None:
            raise ValidationError(Violation(
                "witness-infeasible", "point is outside the vertex hull"))
        e_rows, e_rhs = reduced

        coeffs = self._min_norm_witness(e_rows, e_rhs, nv)
        if coeffs is None:
            coeffs = self._bfs_witness(e_rows, e_rhs, nv)
        witness = ConvexWitness(vertices=verts, coefficients=tuple(coeffs))
        if witness.reconstruct() != pt:
            # exactness guard; the BFS route always reconstructs exactly
            coeffs = self._bfs_witness(e_rows, e_rhs, nv)
            witness = ConvexWitness(vertices=verts, coefficients=tuple(coeffs))
        return witness

    @staticmethod
    def _min_norm_witness(e_rows, e_rhs, nv):
        active: set[int] = set()
        for _round in range(nv + 1):
            free = [j for j in range(nv) if j not in active]
            if not free:
                return None
            rows_f = [[row[j] for j in free] for row in e_rows]
            gram = [[sum((a * b for a, b in zip(r1, r2)), ZERO) for r2 in rows_f]
                    for r1 in rows_f]
            mu = _gauss_solve(gram, e_rhs)
            if mu is None:
                return None
            alpha_free = [sum((rows_f[i][k] * mu[i] for i in range(len(rows_f))), ZERO)
                          for k in range(len(free))]
            neg = [(a, j) for a, j in zip(alpha_free, free) if a < 0]
            if not neg:
                out = [ZERO] * nv
                for a, j in zip(alpha_free, free):
                    out[j] = a
                return out
            worst = min(neg)[1]
            active.add(worst)
        return None

    @staticmethod
    def _bfs_witness(e_rows, e_rhs, nv):
        c = [ZERO] * nv
        _val, alpha = _simplex_minimize(c, [list(r) for r in e_rows], list(e_rhs))
        return alpha

    # -- sampling ------------------------------------------------------------

    def sample_uniform(self, n: int, seed, burn_in: int = 1000) -> np.ndarray:
        """Hit-and-run chain, asymptotically uniform over the region.

        Runs in the (dim-1)-dimensional orthonormal chart of the sum-to-one
        hyperplane, started at the max-margin interior point; 64-bit
        counter-based generator keyed by seed (an int, or a sequence mixing a
        root seed with a stream index). Deterministic per seed.
        """
        if n < 0:
            raise ValidationError(Violation("sample-count", "n must be >= 0"))
        eqs = self._equalities()
        if len(eqs) != 1:
            raise DegeneratePolytopeError(
                "sampling supports regions cut from the weight simplex only")
        start, margin = self.interior_point()
        if margin == 0:
            raise DegeneratePolytopeError(
                "region is lower-dimensional; sampling undefined")
        if n == 0:
            return np.zeros((0, self.dim))

        basis = _helmert_basis(self.dim)
        w0 = np.array([float(x) for x in start])
        ineqs = self._normalized_inequalities()
        A = np.array([[float(c) for c in coeffs] for coeffs, _r, _t in ineqs])
        b = np.array([float(r) for _c, r, _t in ineqs])
        A_u = A @ basis
        b_u = b - A @ w0

        rng = np.random.Generator(np.random.Philox(seed=seed))
        u = np.zeros(self.dim - 1)
        out = np.empty((n, self.dim))
        kept = 0
        step = 0
        while kept < n:
            v = rng.standard_normal(self.dim - 1)
            norm = np.linalg.norm(v)
            if norm == 0.0:
                continue
            v /= norm
            coef = A_u @ v
            slack = b_u - A_u @ u
            with np.errstate(divide="ignore"):
                ratios = np.where(coef != 0.0, slack / coef, np.inf)
            pos = ratios[coef > 0.0]
            negt = ratios[coef < 0.0]
            hi = pos.min() if pos.size else np.inf
            lo = negt.max() if negt.size else -np.inf
            if not np.isfinite(hi) or not np.isfinite(lo) or hi < lo:
                step += 1
                continue
            u = u + rng.uniform(lo, hi) * v
            step += 1
            if step > burn_in:
                out[kept] = w0 + basis @ u
                kept += 1
        return out


# --------------------------------------------------------------------------
# builders

def build_perturbation(central: WeightVector, r, names: Sequence[str] | None = None) -> WeightPolytope:
    """Simplex intersected with per-coordinate boxes [w_j(1-r), w_j(1+r)]."""
    if not isinstance(central, WeightVector):
        central = WeightVector(tuple(central))
    r = parse_rational(r)
    if not (0 <= r < 1):
        raise ValidationError(Violation("radius", "radius must be in [0, 1)"))
    dim = len(central)
    names = list(names) if names else [f"w{j + 1}" for j in range(dim)]
    extra = []
    for j, (cj, name) in enumerate(zip(central.values, names)):
        unit = tuple(ONE if k == j else ZERO for k in range(dim))
        neg = tuple(-c for c in unit)
        extra.append(LinearConstraint(neg, "<=", -cj * (1 - r), f"bound:{name}:lower"))
        extra.append(LinearConstraint(unit, "<=", cj * (1 + r), f"bound:{name}:upper"))
    return WeightPolytope(dim, extra, names=names)


def build_ordinal_regression(table: PerformanceTable,
                             comparisons: Sequence[tuple[str, str]]) -> WeightPolytope:
    """Simplex cut by one utility-dominance halfspace per DM comparison."""
    dim = len(table.criteria)
    names = list(table.criterion_ids)
    extra = []
    for a, b in comparisons:
        ga = table.row(a)
        gb = table.row(b)
        diff = tuple(x - y for x, y in zip(ga, gb))
        extra.append(LinearConstraint(
            tuple(-d for d in diff), "<=", ZERO, f"elicitation:{a}>={b}"))
    return WeightPolytope(dim, extra, names=names)


def conflicting_comparisons(table: PerformanceTable,
                            comparisons: Sequence[tuple[str, str]]) -> list[tuple[str, str]]:
    """Comparisons whose individual removal restores feasibility.

    Empty when the full system is feasible. Deterministic, desk-scale greedy
    diagnosis used when reporting empty elicited polytopes.
    """
    comparisons = list(comparisons)
    if not build_ordinal_regression(table, comparisons).is_empty():
        return []
    out = []
    for i, pair in enumerate(comparisons):
        rest = comparisons[:i] + comparisons[i + 1:]
        if not build_ordinal_regression(table, rest).is_empty():
            out.append(pair)
    if not out:
        # every single removal stays infeasible; report everything involved
        out = list(comparisons)
    return out
