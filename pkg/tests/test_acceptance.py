"""Acceptance gate: every criterion below runs at full trial count with
exact arithmetic (zero tolerance) and prints one summary line."""

import random

from oracles import int_invariant_factors
from pidpairs import (
    ExactMatrix,
    INTEGERS,
    RATIONAL_POLYNOMIALS,
    Submodule,
    canonical_pair,
    canonical_pair_matrices,
    decompose_pure_sum,
    equivalent,
    pair_invariants,
    random_unimodular,
    snf,
    solve_exact,
)
from pidpairs.normal_forms import is_unimodular
from pidpairs.selftest import (
    perturbed_pair,
    random_canonical_instance,
    random_submodule,
)

Z = INTEGERS
P = RATIONAL_POLYNOMIALS


def report(name, count, total):
    print(f"ACCEPTANCE {name}: PASS ({count}/{total})")


def test_snf_matches_minor_gcd_oracle():
    rng = random.Random(1001)
    total = 200
    for _ in range(total):
        n, m = rng.randint(1, 5), rng.randint(1, 5)
        rows = [[rng.randint(-10, 10) for _ in range(m)] for _ in range(n)]
        M = ExactMatrix.from_rows(Z, rows, cols=m)
        dec = snf(M)
        assert dec.Q @ M @ dec.V == dec.S
        assert is_unimodular(dec.Q) and is_unimodular(dec.V)
        assert list(dec.invariant_factors) == int_invariant_factors(rows)
    report("snf-oracle-equivalence", total, total)


def test_canonical_form_invariance():
    rng = random.Random(1002)
    total = 100
    for _ in range(total):
        inst = random_canonical_instance(Z, rng, 5)
        Q = random_unimodular(Z, inst.n, rng.randrange(2**32), steps=20)
        W1 = random_unimodular(Z, inst.m1, rng.randrange(2**32), steps=20)
        W2 = random_unimodular(Z, inst.m2, rng.randrange(2**32), steps=20)
        cf = canonical_pair(Q @ inst.X1 @ W1, Q @ inst.X2 @ W2)
        assert (cf.t, cf.alphas, cf.betas) == (inst.t, inst.alphas, inst.betas)
    report("canonical-invariance", total, total)


def check_reconstruction(ring, inst):
    cf = canonical_pair(inst.X1, inst.X2)
    assert cf.Q @ inst.X1 @ cf.V1 == cf.Y1
    assert cf.Q @ inst.X2 @ cf.V2 == cf.Y2
    assert is_unimodular(cf.Q) and is_unimodular(cf.V1) and is_unimodular(cf.V2)
    Y1, Y2 = canonical_pair_matrices(
        ring, cf.n, cf.m1, cf.m2, cf.t, cf.alphas, cf.betas
    )
    assert cf.Y1 == Y1 and cf.Y2 == Y2
    for later, earlier in zip(cf.alphas[1:], cf.alphas):
        assert ring.divides(later, earlier)
    for earlier, later in zip(cf.betas, cf.betas[1:]):
        assert ring.divides(earlier, later)
    for a, b in zip(cf.alphas, cf.betas):
        assert ring.is_unit(ring.gcd(a, b))


def test_reconstruction_and_block_structure():
    total = 50
    rng = random.Random(1003)
    for _ in range(total):
        check_reconstruction(Z, random_canonical_instance(Z, rng, 5))
    rng = random.Random(1004)
    for _ in range(total):
        check_reconstruction(P, random_canonical_instance(P, rng, 4))
    report("reconstruction-structure", 2 * total, 2 * total)


def test_worked_values():
    x1 = ExactMatrix.from_rows(Z, [[2, 0], [0, 1]])
    x2 = ExactMatrix.from_rows(Z, [[3, 0], [0, 4]])
    cf = canonical_pair(x1, x2)
    assert (cf.t, cf.alphas, cf.betas) == (2, (2, 1), (1, 12))
    # independent cross-check of the quotient route: coordinates of the
    # intersection diag(6,4) inside each X_i, fed to the minor-gcd oracle
    d = ExactMatrix.from_rows(Z, [[6, 0], [0, 4]])
    c1 = solve_exact(x1, d)
    c2 = solve_exact(x2, d)
    assert int_invariant_factors(c1.to_lists()) == [1, 12]
    assert int_invariant_factors(c2.to_lists()) == [1, 2]

    y1 = ExactMatrix.from_rows(Z, [[2], [0]])
    y2 = ExactMatrix.from_rows(Z, [[3], [0]])
    cf2 = canonical_pair(y1, y2)
    assert (cf2.t, cf2.alphas, cf2.betas) == (1, (2,), (3,))
    inv = pair_invariants(y1, y2)
    assert inv.rank_sum == 1
    assert (inv.q1.torsion, inv.q2.torsion) == ((3,), (2,))
    report("worked-values", 2, 2)


def test_quotient_characterization():
    rng = random.Random(1005)
    total = 100
    for _ in range(total):
        inst = random_canonical_instance(Z, rng, 5)
        inv = pair_invariants(inst.X1, inst.X2)
        assert inv.q1.torsion == tuple(b for b in inst.betas if not Z.is_unit(b))
        assert inv.q2.torsion == tuple(
            reversed([a for a in inst.alphas if not Z.is_unit(a)])
        )
    report("quotient-characterization", total, total)


def test_closure_laws():
    rng = random.Random(1006)
    total = 100
    for _ in range(total):
        n = rng.randint(0, 5)
        m1 = random_submodule(Z, rng, n, 10)
        m2 = random_submodule(Z, rng, n, 10)
        cl1, cl2 = m1.closure(), m2.closure()
        assert m1.intersect(m2).closure() == cl1.intersect(cl2)
        s = m1.sum(m2)
        assert s.closure().contains_submodule(cl1.sum(cl2))
        if s.is_pure():
            assert s == cl1.sum(cl2)
    rng = random.Random(1007)
    for _ in range(total):
        m = random_submodule(Z, rng, rng.randint(0, 5), 10)
        assert m.closure().closure() == m.closure()
    report("closure-laws", 2 * total, 2 * total)


def test_pure_sum_decomposition():
    rng = random.Random(1008)
    total = 100
    done = 0
    while done < total:
        n = rng.randint(1, 5)
        x1 = random_submodule(Z, rng, n, 8)
        x2 = random_submodule(Z, rng, n, 8)
        total_mod = x1.sum(x2)
        if not total_mod.is_pure():
            continue
        done += 1
        dbar, k1, k2 = decompose_pure_sum(x1, x2)
        assert dbar == x1.intersect(x2).closure()
        assert dbar.rank + k1.rank + k2.rank == total_mod.rank
        assert dbar.sum(k1).sum(k2) == total_mod
        for a, b in ((dbar, k1), (dbar, k2), (k1, k2)):
            assert a.intersect(b).is_zero()
        for k, x in ((k1, x1), (k2, x2)):
            assert x.contains_submodule(k) and k.is_pure()
            h = dbar.intersect(x)
            assert h.sum(k) == x and h.intersect(k).is_zero()
    report("pure-sum-decomposition", total, total)


def test_decision_procedure():
    rng = random.Random(1009)
    total = 100
    for _ in range(total):
        inst = random_canonical_instance(Z, rng, 5)
        Q = random_unimodular(Z, inst.n, rng.randrange(2**32), steps=12)
        W1 = random_unimodular(Z, inst.m1, rng.randrange(2**32), steps=12)
        W2 = random_unimodular(Z, inst.m2, rng.randrange(2**32), steps=12)
        a = (inst.X1, inst.X2)
        b = (Q @ inst.X1 @ W1, Q @ inst.X2 @ W2)
        # the decision itself runs both routes and asserts they agree;
        # re-derive the canonical route here to cross-check the verdict
        assert equivalent(a, b)
        assert canonical_pair(*a).invariants_key() == canonical_pair(*b).invariants_key()
    for _ in range(total):
        inst = random_canonical_instance(Z, rng, 5, min_t=1)
        other = perturbed_pair(Z, rng, inst)
        assert not equivalent((inst.X1, inst.X2), other)
        assert (
            canonical_pair(inst.X1, inst.X2).invariants_key()
            != canonical_pair(*other).invariants_key()
        )
    report("decision-procedure", 2 * total, 2 * total)


def test_polynomial_ring_smoke():
    rng = random.Random(1010)
    total = 20
    for _ in range(total):
        inst = random_canonical_instance(P, rng, 4)
        check_reconstruction(P, inst)
        Q = random_unimodular(P, inst.n, rng.randrange(2**32), steps=6)
        W1 = random_unimodular(P, inst.m1, rng.randrange(2**32), steps=6)
        W2 = random_unimodular(P, inst.m2, rng.randrange(2**32), steps=6)
        cf = canonical_pair(Q @ inst.X1 @ W1, Q @ inst.X2 @ W2)
        assert (cf.t, cf.alphas, cf.betas) == (inst.t, inst.alphas, inst.betas)
    report("polynomial-ring-smoke", total, total)
