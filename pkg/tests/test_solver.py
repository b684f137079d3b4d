"""OHCP assembly, exact solve, and oracle agreement."""
import random
from fractions import Fraction

import pytest

from ohcp import fixtures
from ohcp.solver import (OHCPInstance, assemble, assemble_l0, assemble_l1,
                         assemble_total, brute_force_oracle,
                         chain_from_solution, existence_check, solve)
from ohcp.tu import BudgetExceeded


def l1_instance(K, c, weights=None, **kw):
    m = K.count(1)
    if weights is None:
        weights = [1] * m
    return OHCPInstance(K=K, p=1, c=c, weights=weights, **kw)


class TestAssembly:
    def test_variable_and_constraint_counts(self):
        K = fixtures.triangle()
        inst = l1_instance(K, [1, -1, 1])
        lp = assemble_l1(inst)
        assert lp.num_vars == 2 * 3 + 2 * 1
        assert lp.num_constraints == 3

    def test_moebius_counts(self):
        K = fixtures.mobius_strip()
        inst = l1_instance(K, [0] * 12)
        lp = assemble_l1(inst)
        assert lp.num_vars == 2 * 12 + 2 * 6
        assert lp.num_constraints == 12

    def test_zero_chain_gives_zero_rhs(self):
        K = fixtures.triangle()
        lp = assemble_l1(l1_instance(K, [0, 0, 0]))
        assert all(v == 0 for v in lp.b)

    def test_l0_box_adds_bounds(self):
        K = fixtures.triangle()
        inst = l1_instance(K, [1, -1, 0], variant="L0Box")
        lp = assemble_l0(inst)
        m = 3
        assert all(lp.upper[i] == 1 for i in range(2 * m))
        assert all(lp.upper[i] is None for i in range(2 * m, lp.num_vars))

    def test_l0_rejects_large_coefficients(self):
        K = fixtures.triangle()
        with pytest.raises(ValueError):
            l1_instance(K, [2, 0, 0], variant="L0Box")

    def test_total_weight_prices_y(self):
        K = fixtures.triangle()
        inst = l1_instance(K, [1, -1, 1], variant="TotalWeight",
                           y_weights=[Fraction(7)])
        lp = assemble_total(inst)
        assert lp.objective[-2:] == [7, 7]

    def test_total_weight_zero_y_cost_matches_l1(self):
        K = fixtures.triangle()
        a = assemble(l1_instance(K, [1, 0, 0], variant="TotalWeight",
                                 y_weights=[0]))
        b = assemble(l1_instance(K, [1, 0, 0]))
        assert a.objective == b.objective and a.A == b.A


class TestSolve:
    def test_zero_chain(self):
        K = fixtures.triangle()
        sol = solve(l1_instance(K, [0, 0, 0]))
        assert sol.objective == 0 and sol.x_star == [0, 0, 0]
        assert sol.integral

    def test_boundary_chain_is_killed(self):
        K = fixtures.triangle()
        sol = solve(l1_instance(K, [1, -1, 1]))
        assert sol.objective == 0
        assert sol.y_witness in ([1], [-1])

    def test_homology_identity_holds(self):
        K = fixtures.cylinder()
        c = fixtures.ring_cycle(K, (0, 1, 2))
        inst = l1_instance(K, c)
        sol = solve(inst)
        B = inst.boundary()
        by = B.matvec(sol.y_witness)
        assert sol.x_star == [ci + bi for ci, bi in zip(c, by)]

    def test_objective_bounded_by_input_chain(self):
        rng = random.Random(5)
        K = fixtures.disk_fan(4)
        for _ in range(10):
            c = [rng.randint(-3, 3) for _ in range(K.count(1))]
            w = [Fraction(rng.randint(1, 9), rng.randint(1, 4))
                 for _ in range(K.count(1))]
            inst = l1_instance(K, c, weights=w)
            sol = solve(inst)
            assert sol.objective <= sum(abs(wi) * abs(ci)
                                        for wi, ci in zip(w, c))

    def test_weight_scaling_scales_objective(self):
        K = fixtures.cylinder()
        c = fixtures.ring_cycle(K, (0, 1, 2))
        w = [Fraction(i % 3 + 1) for i in range(K.count(1))]
        base = solve(l1_instance(K, c, weights=w)).objective
        scaled = solve(l1_instance(K, c,
                                   weights=[Fraction(5, 3) * wi for wi in w]))
        assert scaled.objective == Fraction(5, 3) * base

    def test_existence_check(self):
        K = fixtures.cylinder()
        for c in ([0] * K.count(1),
                  fixtures.ring_cycle(K, (0, 1, 2)),
                  [1] + [0] * (K.count(1) - 1)):
            assert existence_check(l1_instance(K, c))

    def test_chain_round_trip(self):
        K = fixtures.triangle()
        inst = l1_instance(K, [1, 0, 0])
        sol = solve(inst)
        chain = chain_from_solution(inst, sol)
        assert chain.to_vector(3) == sol.x_star


class TestOracle:
    def test_triangle_boundary(self):
        K = fixtures.triangle()
        inst = l1_instance(K, [1, -1, 1])
        sol = brute_force_oracle(inst, y_bound=1)
        assert sol.objective == 0
        assert sol.y_witness in ([1], [-1])

    def test_zero_chain(self):
        K = fixtures.triangle()
        assert brute_force_oracle(l1_instance(K, [0] * 3), 1).objective == 0

    def test_budget_guard(self):
        K = fixtures.mobius_strip()
        with pytest.raises(BudgetExceeded):
            brute_force_oracle(l1_instance(K, [0] * 12), 20, budget=100)

    def test_agrees_with_solver_on_random_instances(self):
        rng = random.Random(11)
        complexes = [fixtures.disk_fan(3), fixtures.disk_fan(5),
                     fixtures.tetrahedron_surface(), fixtures.cylinder()]
        for _ in range(12):
            K = rng.choice(complexes)
            m = K.count(1)
            c = [rng.randint(-2, 2) for _ in range(m)]
            w = [Fraction(rng.randint(1, 6), rng.randint(1, 3))
                 for _ in range(m)]
            inst = l1_instance(K, c, weights=w)
            sol = solve(inst)
            assert sol.integral
            bound = max([abs(v) for v in sol.y_witness] + [1]) + 1
            oracle = brute_force_oracle(inst, y_bound=bound)
            assert sol.objective == oracle.objective

    def test_l0_restricted_oracle(self):
        K = fixtures.cylinder()
        c = fixtures.ring_cycle(K, (0, 1, 2))
        inst = l1_instance(K, c, variant="L0Box")
        sol = solve(inst)
        oracle = brute_force_oracle(inst, y_bound=2)
        assert sol.integral
        assert all(v in (-1, 0, 1) for v in sol.x_star)
        assert sol.objective == oracle.objective


class TestHourglass:
    def test_l1_doubles_the_middle_ring(self):
        K, w, c = fixtures.hourglass()
        sol = solve(l1_instance(K, c, weights=w))
        assert sol.integral
        assert 2 in {abs(v) for v in sol.x_star}
        oracle = brute_force_oracle(l1_instance(K, c, weights=w), y_bound=1)
        assert sol.objective == oracle.objective

    def test_l0_box_stays_unit(self):
        K, _, c = fixtures.hourglass()
        inst = l1_instance(K, c, variant="L0Box")
        sol = solve(inst)
        assert sol.integral
        assert all(v in (-1, 0, 1) for v in sol.x_star)
        oracle = brute_force_oracle(inst, y_bound=1)
        assert sol.objective == oracle.objective
