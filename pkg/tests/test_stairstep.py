from fractions import Fraction as F

import pytest

from zigfringe import (
    EnumerationCapExceeded,
    NoFeasiblePartition,
    block_form,
    fringe_target,
    stairstep_min_t,
)
from zigfringe.stairstep import (
    ConstraintSet,
    constraints,
    make_problem,
    partitions,
    residual,
    solve_min_u,
)


def test_make_problem_extends_blocks_by_power():
    prob = make_problem("abaab", F(1, 3), F(3))
    assert (prob.q, prob.c, prob.d) == (3, 3, 1)
    assert prob.k == 2
    assert prob.alphas == (1, 2)
    assert prob.betas == (1, 1)
    assert residual(prob) == 4

    cubed = make_problem("abaab", F(1, 3), F(5, 3))
    assert cubed.d == 3
    assert cubed.k == 6
    assert cubed.alphas == (1, 2, 1, 2, 1, 2)


def test_make_problem_rejects_negative_slope():
    with pytest.raises(ValueError):
        make_problem("abaab", F(-1, 3), F(1))


def test_partitions_lex_order():
    assert list(partitions(3, 2)) == [(0, 3), (1, 2), (2, 1), (3, 0)]
    assert list(partitions(0, 3)) == [(0, 0, 0)]


def test_partitions_respect_caps():
    assert list(partitions(3, 2, caps=(1, 5))) == [(0, 3), (1, 2)]
    assert list(partitions(4, 3, caps=(1, 1, 2))) == [(1, 1, 2)]


def test_partitions_infeasible():
    with pytest.raises(NoFeasiblePartition):
        list(partitions(-1, 2))
    with pytest.raises(NoFeasiblePartition):
        list(partitions(5, 2, caps=(1, 1)))


def test_constraint_rows_frozen():
    prob = make_problem("abaab", F(1, 3), F(3))
    cs = constraints(prob, (2, 2))
    assert cs == ConstraintSet(3, ((2, 2, 1), (1, 2, 1)))


def test_constraints_validate_partition():
    prob = make_problem("abaab", F(1, 3), F(3))
    with pytest.raises(ValueError):
        constraints(prob, (1, 1, 2))
    with pytest.raises(ValueError):
        constraints(prob, (9, 0))


def test_solve_min_u_on_a_frozen_case():
    prob = make_problem("abaab", F(1, 3), fringe_target("abaab", F(1, 3)))
    caps = tuple(prob.q * b - 1 for b in prob.betas)
    parts = list(partitions(residual(prob), prob.k, caps=caps))
    assert parts == [(2, 2)]
    sol = solve_min_u(prob.q, constraints(prob, parts[0]))
    assert sol.u == F(1, 2)
    assert sum(sol.t) == 1


def test_stairstep_frozen_values():
    assert stairstep_min_t("abaab", F(1, 3), F(3)) == F(1, 2)
    assert stairstep_min_t("abaab", F(1, 3), F(3), fringe_caps=True) == F(1, 2)
    assert stairstep_min_t("ababb", F(1, 3), fringe_target("ababb", F(1, 3))) == F(5, 6)
    assert stairstep_min_t("ab", F(0), F(3)) == F(2)


def test_stairstep_erratum_cells():
    w = "abbbaabaaabbbb"
    assert stairstep_min_t(w, F(1, 6), fringe_target(w, F(1, 6)), fringe_caps=True) == F(7, 8)
    assert stairstep_min_t(w, F(1, 3), fringe_target(w, F(1, 3)), fringe_caps=True) == F(6, 7)
    w2 = "abbbaabbaaabbbb"
    assert stairstep_min_t(w2, F(1, 2), fringe_target(w2, F(1, 2)), fringe_caps=True) == F(6, 7)


def test_stairstep_caps_agree_with_branch_and_bound():
    for word in ("abaab", "ababb", "aabb"):
        for q in (2, 3, 4):
            target = fringe_target(word, F(1, q))
            capped = stairstep_min_t(word, F(1, q), target, fringe_caps=True)
            free = stairstep_min_t(word, F(1, q), target)
            assert capped == free


def test_stairstep_partition_cap():
    with pytest.raises(EnumerationCapExceeded):
        stairstep_min_t("abaab", F(1, 3), F(3), partition_cap=0)
    with pytest.raises(EnumerationCapExceeded):
        stairstep_min_t("abaab", F(1, 3), F(3), fringe_caps=True, partition_cap=0)


def test_stairstep_p_independence_of_fringe_value():
    w = "abaab"
    for q in (4, 5, 7):
        values = set()
        for p in range(1, q):
            if F(p, q).denominator != q:
                continue
            u = stairstep_min_t(w, F(p, q), fringe_target(w, F(p, q)), fringe_caps=True)
            values.add(1 - u)
        assert len(values) == 1


def test_block_power_consistency():
    bf = block_form("abaab")
    prob = make_problem("abaab", F(2, 3), F(7, 2))
    assert prob.k == bf.n * 2
    assert prob.betas == bf.betas * 2
