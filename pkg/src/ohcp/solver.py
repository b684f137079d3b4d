"""Assemble and solve optimal-homologous-chain instances.

A p-chain x is homologous to the input chain c when x = c + B y for an
integer (p+1)-chain y, B the (p+1)-boundary matrix. Minimizing the weighted
1-norm of x is a linear program after the usual +-splitting of variables:
columns are ordered [x+, x-, y+, y-]. Three variants:

  L1          min sum |w_i| (x_i^+ + x_i^-)
  L0Box       same with W = I, c in {-1,0,1}^m, and x^+, x^- <= 1, which
              makes the optimum the homologous chain of minimal support
  TotalWeight adds |v_j| (y_j^+ + y_j^-) so the bounding chain is paid for
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .complexes import Chain, SimplicialComplex, boundary_matrix
from .lp import LinearProgram, LPSolution, simplex_solve
from .matrices import IntMatrix
from .tu import BudgetExceeded

VARIANTS = ("L1", "L0Box", "TotalWeight")


@dataclass
class OHCPInstance:
    K: SimplicialComplex
    p: int
    c: list                    # integer chain vector, length m
    weights: list              # rationals, length m; absolute values used
    variant: str = "L1"
    y_weights: list = None     # rationals, length n; TotalWeight only

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        m = self.K.count(self.p)
        n = self.K.count(self.p + 1)
        if len(self.c) != m:
            raise ValueError(f"chain length {len(self.c)} != {m} p-simplices")
        if len(self.weights) != m:
            raise ValueError(f"weight length {len(self.weights)} != {m}")
        self.c = [int(v) for v in self.c]
        self.weights = [Fraction(w) for w in self.weights]
        if self.variant == "L0Box":
            if any(v not in (-1, 0, 1) for v in self.c):
                raise ValueError("L0Box requires chain entries in {-1,0,1}")
            if any(abs(w) != 1 for w in self.weights):
                raise ValueError("L0Box requires identity weights")
        if self.variant == "TotalWeight":
            if self.y_weights is None or len(self.y_weights) != n:
                raise ValueError("TotalWeight requires y-weights of length "
                                 f"{n}")
            self.y_weights = [Fraction(w) for w in self.y_weights]

    @property
    def m(self):
        return self.K.count(self.p)

    @property
    def n(self):
        return self.K.count(self.p + 1)

    def boundary(self) -> IntMatrix:
        return boundary_matrix(self.K, self.p + 1)


@dataclass
class OHCPSolution:
    x_star: list               # integers if integral, else Fractions
    y_witness: list
    objective: Fraction
    integral: bool
    variant: str
    torsion_note: str = None

    def nnz(self):
        return sum(1 for v in self.x_star if v != 0)

    def y_support(self):
        return [j for j, v in enumerate(self.y_witness) if v != 0]


def _split_lp(inst: OHCPInstance, x_upper=None, y_cost=None) -> LinearProgram:
    m, n = inst.m, inst.n
    B = inst.boundary() if n else None
    N = 2 * m + 2 * n
    obj = [abs(w) for w in inst.weights] * 2
    if y_cost is None:
        obj += [Fraction(0)] * (2 * n)
    else:
        obj += [abs(v) for v in y_cost] * 2
    A = []
    for i in range(m):
        row = [Fraction(0)] * N
        row[i] = Fraction(1)
        row[m + i] = Fraction(-1)
        if n:
            for j in range(n):
                e = B[i, j]
                if e:
                    row[2 * m + j] = Fraction(-e)
                    row[2 * m + n + j] = Fraction(e)
        A.append(row)
    b = [Fraction(v) for v in inst.c]
    upper = [x_upper] * (2 * m) + [None] * (2 * n)
    return LinearProgram(objective=obj, A=A, b=b, upper=upper)


def assemble_l1(inst: OHCPInstance) -> LinearProgram:
    if inst.variant != "L1":
        raise ValueError("instance variant is not L1")
    return _split_lp(inst)


def assemble_l0(inst: OHCPInstance) -> LinearProgram:
    if inst.variant != "L0Box":
        raise ValueError("instance variant is not L0Box")
    return _split_lp(inst, x_upper=Fraction(1))


def assemble_total(inst: OHCPInstance) -> LinearProgram:
    if inst.variant != "TotalWeight":
        raise ValueError("instance variant is not TotalWeight")
    return _split_lp(inst, y_cost=inst.y_weights)


def assemble(inst: OHCPInstance) -> LinearProgram:
    return {
        "L1": assemble_l1,
        "L0Box": assemble_l0,
        "TotalWeight": assemble_total,
    }[inst.variant](inst)


def existence_check(inst: OHCPInstance) -> bool:
    """x = c, y = 0 is always feasible, so an optimum always exists (the
    candidate set with objective <= that of c is finite over the integers)."""
    m = inst.m
    x = [Fraction(v) for v in inst.c]
    lp = assemble(inst)
    xplus = [max(v, 0) for v in x]
    xminus = [max(-v, 0) for v in x]
    point = xplus + xminus + [Fraction(0)] * (2 * inst.n)
    for row, rhs in zip(lp.A, lp.b):
        if sum(r * v for r, v in zip(row, point)) != rhs:
            return False
    if inst.variant == "L0Box" and any(abs(v) > 1 for v in x):
        return False
    return True


def solve(inst: OHCPInstance) -> OHCPSolution:
    """Assemble the chosen variant, solve exactly, reconstruct x and y.

    Non-integral vertices (possible only over non-TU boundary matrices) are
    returned as-is with integral=False and a note; they are never rounded.
    """
    lp = assemble(inst)
    sol = simplex_solve(lp)
    if sol.status != "Optimal":
        raise AssertionError(f"OHCP LP came back {sol.status}; it is always "
                             "feasible and bounded")
    m, n = inst.m, inst.n
    x = [sol.x[i] - sol.x[m + i] for i in range(m)]
    y = [sol.x[2 * m + j] - sol.x[2 * m + n + j] for j in range(n)]
    B = inst.boundary() if n else None
    for i in range(m):
        by = sum(B[i, j] * y[j] for j in range(n)) if n else Fraction(0)
        if x[i] != inst.c[i] + by:
            raise AssertionError("reconstructed chain violates x = c + B y")
    integral = all(v.denominator == 1 for v in x + y)
    note = None
    if not integral:
        note = ("optimum is fractional; the boundary matrix is not totally "
                "unimodular -- run a torsion scan for a witness")
    if integral:
        x = [int(v) for v in x]
        y = [int(v) for v in y]
    return OHCPSolution(x_star=x, y_witness=y, objective=sol.objective,
                        integral=integral, variant=inst.variant,
                        torsion_note=note)


def brute_force_oracle(inst: OHCPInstance, y_bound: int,
                       budget: int = 10 ** 7) -> OHCPSolution:
    """Exhaustive oracle: try every y in [-y_bound, y_bound]^n.

    Independent of the simplex path; enumeration is vectorized with exact
    integer arithmetic (weights are cleared of denominators first). Ties
    are broken by the lexicographically smallest y.
    """
    m, n = inst.m, inst.n
    if y_bound < 0:
        raise ValueError("y_bound must be >= 0")
    count = (2 * y_bound + 1) ** n
    if count > budget:
        raise BudgetExceeded(f"{count} candidates exceed budget {budget}")
    c = np.array(inst.c, dtype=np.int64)
    if n:
        Bm = np.array(inst.boundary().data, dtype=np.int64)
        rng = np.arange(-y_bound, y_bound + 1, dtype=np.int64)
        grids = np.meshgrid(*([rng] * n), indexing="ij")
        ys = np.stack([g.ravel() for g in grids], axis=1)  # lex order
        xs = c[None, :] + ys @ Bm.T
    else:
        ys = np.zeros((1, 0), dtype=np.int64)
        xs = c[None, :]
    dens = [w.denominator for w in inst.weights]
    if inst.variant == "TotalWeight":
        dens += [v.denominator for v in inst.y_weights]
    scale = math.lcm(*dens) if dens else 1
    w_int = np.array([abs(int(w * scale)) for w in inst.weights],
                     dtype=np.int64)
    obj = np.abs(xs) @ w_int
    if inst.variant == "TotalWeight":
        v_int = np.array([abs(int(v * scale)) for v in inst.y_weights],
                         dtype=np.int64)
        obj = obj + np.abs(ys) @ v_int
    if inst.variant == "L0Box":
        ok = (np.abs(xs) <= 1).all(axis=1)
        if not ok.any():
            raise AssertionError("no {-1,0,1} chain found; y_bound too small")
        obj = np.where(ok, obj, np.iinfo(np.int64).max)
    best = int(np.argmin(obj))
    x = [int(v) for v in xs[best]]
    y = [int(v) for v in ys[best]]
    objective = Fraction(int(obj[best]), scale)
    return OHCPSolution(x_star=x, y_witness=y, objective=objective,
                        integral=True, variant=inst.variant)


def chain_from_solution(inst: OHCPInstance, sol: OHCPSolution) -> Chain:
    if not sol.integral:
        raise ValueError("cannot form an integer chain from a fractional optimum")
    return Chain.from_vector(inst.p, sol.x_star)
