"""Pair canonical form under simultaneous row/column unimodular changes,
equivalence decision, hypothesis checks, and the seeded test generators."""

import random

import pytest

from pidpairs import (
    ExactMatrix,
    HypothesisError,
    INTEGERS,
    RATIONAL_POLYNOMIALS,
    canonical_pair,
    canonical_pair_matrices,
    check_pair_hypotheses,
    equivalent,
    pair_invariants,
    random_unimodular,
)
from pidpairs.normal_forms import is_unimodular
from pidpairs.selftest import perturbed_pair, random_canonical_instance

Z = INTEGERS
P = RATIONAL_POLYNOMIALS


def imat(rows, cols=None):
    return ExactMatrix.from_rows(Z, rows, cols=cols)


def test_worked_pair_diagonal_lattices():
    x1 = imat([[2, 0], [0, 1]])
    x2 = imat([[3, 0], [0, 4]])
    cf = canonical_pair(x1, x2)
    assert (cf.n, cf.m1, cf.m2, cf.t) == (2, 2, 2, 2)
    assert cf.alphas == (2, 1)
    assert cf.betas == (1, 12)
    assert cf.Y1 == imat([[2, 0], [0, 1]])
    assert cf.Y2 == imat([[1, 0], [0, 12]])
    assert cf.Q @ x1 @ cf.V1 == cf.Y1
    assert cf.Q @ x2 @ cf.V2 == cf.Y2
    assert is_unimodular(cf.Q) and is_unimodular(cf.V1) and is_unimodular(cf.V2)

    inv = pair_invariants(x1, x2)
    assert inv.n == 2 and inv.rank_sum == 2
    assert inv.q1.torsion == (12,) and inv.q1.free_rank == 0
    assert inv.q2.torsion == (2,) and inv.q2.free_rank == 0


def test_worked_pair_single_columns():
    x1 = imat([[2], [0]])
    x2 = imat([[3], [0]])
    cf = canonical_pair(x1, x2)
    assert (cf.n, cf.m1, cf.m2, cf.t) == (2, 1, 1, 1)
    assert cf.alphas == (2,) and cf.betas == (3,)
    # ambient rank exceeds the sum rank: bottom zero rows are retained
    assert cf.Y1 == imat([[2], [0]])
    assert cf.Y2 == imat([[3], [0]])

    inv = pair_invariants(x1, x2)
    assert inv.rank_sum == 1
    assert inv.q1.torsion == (3,) and inv.q2.torsion == (2,)


def test_identity_pair_is_fixed():
    I3 = ExactMatrix.identity(Z, 3)
    cf = canonical_pair(I3, I3)
    assert cf.t == 3
    assert cf.alphas == (1, 1, 1) and cf.betas == (1, 1, 1)
    assert cf.Y1 == I3 and cf.Y2 == I3


def test_disjoint_axes_pair():
    e1 = imat([[1], [0]])
    e2 = imat([[0], [1]])
    inv = pair_invariants(e1, e2)
    assert inv.rank_sum == 2
    assert inv.q1 == inv.q2
    assert inv.q1.torsion == () and inv.q1.free_rank == 1
    cf = canonical_pair(e1, e2)
    assert cf.t == 0 and cf.alphas == () and cf.betas == ()


def test_check_pair_hypotheses():
    rep = check_pair_hypotheses(imat([[2, 0], [0, 1]]), imat([[3, 0], [0, 4]]))
    assert rep.full_column_rank_1 and rep.full_column_rank_2
    assert rep.sum_pure and rep.sum_rank == 2
    assert rep.all_hold

    rep = check_pair_hypotheses(imat([[2], [0]]), imat([[0], [2]]))
    assert not rep.sum_pure
    assert not rep.all_hold

    # an empty X1 has full column rank vacuously
    rep = check_pair_hypotheses(
        ExactMatrix.zeros(Z, 2, 0), ExactMatrix.identity(Z, 2)
    )
    assert rep.full_column_rank_1 and rep.all_hold

    with pytest.raises(ValueError):
        check_pair_hypotheses(imat([[1], [0]]), ExactMatrix.identity(Z, 3))


def test_canonical_pair_hypothesis_errors():
    with pytest.raises(HypothesisError, match="X1 does not have full column rank"):
        canonical_pair(imat([[2, 4], [1, 2]]), ExactMatrix.identity(Z, 2))
    with pytest.raises(HypothesisError, match="X2 does not have full column rank"):
        canonical_pair(ExactMatrix.identity(Z, 2), imat([[0, 0], [0, 0]]))
    with pytest.raises(HypothesisError, match=r"span of \(X1 X2\) not pure"):
        canonical_pair(imat([[2], [0]]), imat([[0], [2]]))
    with pytest.raises(HypothesisError):
        pair_invariants(imat([[2], [0]]), imat([[0], [2]]))


def test_equivalent_examples():
    a = (imat([[2], [0]]), imat([[3], [0]]))
    b = (imat([[0], [2]]), imat([[0], [3]]))
    assert equivalent(a, b)
    c = (imat([[4], [0]]), imat([[3], [0]]))
    assert not equivalent(a, c)
    assert equivalent(a, a)
    with pytest.raises(ValueError):
        equivalent(a, (ExactMatrix.identity(Z, 3), ExactMatrix.identity(Z, 3)))


def test_equivalence_does_not_depend_on_generating_sets():
    # same modules, redundant generators
    a = (imat([[2], [0]]), imat([[3], [0]]))
    b = (imat([[2, 4], [0, 0]]), imat([[3, -3], [0, 0]]))
    assert equivalent(a, b)


def test_canonical_block_structure_matches_invariants():
    rng = random.Random(20)
    for _ in range(30):
        inst = random_canonical_instance(Z, rng, 5)
        cf = canonical_pair(inst.X1, inst.X2)
        assert (cf.t, cf.alphas, cf.betas) == (inst.t, inst.alphas, inst.betas)
        Y1, Y2 = canonical_pair_matrices(
            Z, cf.n, cf.m1, cf.m2, cf.t, cf.alphas, cf.betas
        )
        assert cf.Y1 == Y1 and cf.Y2 == Y2
        # canonical forms are idempotent on their own output
        again = canonical_pair(cf.Y1, cf.Y2)
        assert again.invariants_key() == cf.invariants_key()


def test_invariance_under_random_automorphisms():
    rng = random.Random(21)
    for _ in range(25):
        inst = random_canonical_instance(Z, rng, 5)
        Q = random_unimodular(Z, inst.n, rng.randrange(10**9), steps=12)
        W1 = random_unimodular(Z, inst.m1, rng.randrange(10**9), steps=12)
        W2 = random_unimodular(Z, inst.m2, rng.randrange(10**9), steps=12)
        cf = canonical_pair(Q @ inst.X1 @ W1, Q @ inst.X2 @ W2)
        assert (cf.t, cf.alphas, cf.betas) == (inst.t, inst.alphas, inst.betas)


def test_quotients_characterize_chains():
    rng = random.Random(22)
    for _ in range(25):
        inst = random_canonical_instance(Z, rng, 5)
        inv = pair_invariants(inst.X1, inst.X2)
        nonunit_betas = tuple(b for b in inst.betas if not Z.is_unit(b))
        nonunit_alphas = tuple(a for a in inst.alphas if not Z.is_unit(a))
        assert inv.q1.torsion == nonunit_betas
        assert inv.q2.torsion == tuple(reversed(nonunit_alphas))
        # rank bookkeeping: rank_sum - free1 - free2 = t
        assert inv.rank_sum - inv.q1.free_rank - inv.q2.free_rank == inst.t


def test_perturbed_pairs_are_inequivalent():
    rng = random.Random(23)
    for _ in range(20):
        inst = random_canonical_instance(Z, rng, 5, min_t=1)
        other = perturbed_pair(Z, rng, inst)
        assert not equivalent((inst.X1, inst.X2), other)


def test_polyq_pair_round_trip():
    rng = random.Random(24)
    for _ in range(6):
        inst = random_canonical_instance(P, rng, 4)
        cf = canonical_pair(inst.X1, inst.X2)
        assert (cf.t, cf.alphas, cf.betas) == (inst.t, inst.alphas, inst.betas)
        assert cf.Q @ inst.X1 @ cf.V1 == cf.Y1
        assert cf.Q @ inst.X2 @ cf.V2 == cf.Y2


def test_random_unimodular_contract():
    assert random_unimodular(Z, 3, 99, steps=0) == ExactMatrix.identity(Z, 3)
    assert random_unimodular(Z, 0, 1) == ExactMatrix.identity(Z, 0)
    U1 = random_unimodular(Z, 4, 42, steps=20)
    U2 = random_unimodular(Z, 4, 42, steps=20)
    assert U1 == U2
    assert U1 != random_unimodular(Z, 4, 43, steps=20)
    assert is_unimodular(U1)
    V = random_unimodular(P, 3, 42, steps=10)
    assert is_unimodular(V)
