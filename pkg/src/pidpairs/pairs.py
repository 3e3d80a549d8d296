"""Canonical forms and equivalence for pairs of submodules of R^n.

Two pairs of submodules (given by full-column-rank matrices X1, X2 and
X1', X2') are equivalent when a single automorphism Q of the ambient
module R^n carries the span of X1 onto the span of X1' and the span of
X2 onto the span of X2'.  When the sum of the spans is pure, each pair
is equivalent to exactly one canonical pair

    Y1 = [[A, 0],          Y2 = [[B, 0],
          [0, I],                [0, 0],
          [0, 0],                [0, I],
          [0, 0]]                [0, 0]]

where A = diag(alpha_1..alpha_t) is a descending divisor chain
(alpha_t | ... | alpha_1), B = diag(beta_1..beta_t) an ascending one,
and gcd(alpha_i, beta_i) is a unit position by position.

canonical_pair computes the canonical data with explicit witnesses
Q, V1, V2 such that Q @ X_i @ V_i = Y_i; pair_invariants reads the same
information off as module-theoretic invariants (rank of the sum plus
the isomorphism types of span(X_i) / (span(X1) ∩ span(X2)));
equivalent() decides equivalence by both routes and insists they agree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import HypothesisError
from .matrices import ExactMatrix, block_diagonal, hstack
from .normal_forms import (
    _add_row_multiple,
    _scale_row,
    _swap_rows,
    complete_to_unimodular,
    inverse_unimodular,
    is_unimodular,
    rank,
    smith_mcmillan,
    snf,
    solve_exact,
    solve_in_field,
)
from .rings import FractionField
from .submodules import QuotientInvariants, Submodule, decompose_pure_sum


@dataclass(frozen=True)
class PairHypotheses:
    """Outcome of the structural checks a pair must pass before it has
    a canonical form: each matrix of full column rank and the span of
    the stacked matrix pure in the ambient module."""

    full_column_rank_1: bool
    full_column_rank_2: bool
    sum_pure: bool
    sum_rank: int

    @property
    def all_hold(self) -> bool:
        return self.full_column_rank_1 and self.full_column_rank_2 and self.sum_pure


@dataclass(frozen=True)
class PairCanonicalForm:
    """Canonical data of a pair plus transformation witnesses.

    Q is a unimodular n x n matrix and V1, V2 are unimodular column
    operations with Q @ X1 @ V1 = Y1 and Q @ X2 @ V2 = Y2.  Two pairs
    are equivalent exactly when their (n, m1, m2, t, alphas, betas)
    agree, so invariants_key() is a complete invariant.
    """

    n: int
    m1: int
    m2: int
    t: int
    alphas: tuple
    betas: tuple
    Y1: ExactMatrix
    Y2: ExactMatrix
    Q: ExactMatrix
    V1: ExactMatrix
    V2: ExactMatrix

    def invariants_key(self):
        return (self.n, self.m1, self.m2, self.t, self.alphas, self.betas)


@dataclass(frozen=True)
class PairInvariants:
    """Equivalence invariants of a pair of submodules with pure sum:
    ambient rank, rank of the sum, and the isomorphism types of the two
    quotients by the intersection."""

    n: int
    rank_sum: int
    q1: QuotientInvariants
    q2: QuotientInvariants


def check_pair_hypotheses(X1: ExactMatrix, X2: ExactMatrix) -> PairHypotheses:
    """Check the structural hypotheses without raising; mismatched
    rings or ambient ranks are a usage error and do raise."""
    if X1.ring != X2.ring:
        raise ValueError("pair matrices are over different rings")
    if X1.rows != X2.rows:
        raise ValueError("pair matrices have different ambient ranks")
    ring = X1.ring
    stacked = snf(hstack(X1, X2))
    return PairHypotheses(
        full_column_rank_1=rank(X1) == X1.cols,
        full_column_rank_2=rank(X2) == X2.cols,
        sum_pure=all(ring.is_unit(f) for f in stacked.invariant_factors),
        sum_rank=stacked.rank,
    )


def canonical_pair_matrices(ring, n, m1, m2, t, alphas, betas):
    """Assemble the canonical matrices Y1, Y2 from canonical data."""
    if not (0 <= t <= min(m1, m2)) or m1 + m2 - t > n:
        raise ValueError("inconsistent canonical dimensions")
    if len(alphas) != t or len(betas) != t:
        raise ValueError("diagonal chains must have length t")
    y1 = [[ring.zero] * m1 for _ in range(n)]
    y2 = [[ring.zero] * m2 for _ in range(n)]
    for i, a in enumerate(alphas):
        y1[i][i] = a
    for i in range(m1 - t):
        y1[t + i][t + i] = ring.one
    for i, b in enumerate(betas):
        y2[i][i] = b
    for i in range(m2 - t):
        y2[t + (m1 - t) + i][t + i] = ring.one
    return ExactMatrix(ring, n, m1, y1), ExactMatrix(ring, n, m2, y2)


def canonical_pair(X1: ExactMatrix, X2: ExactMatrix) -> PairCanonicalForm:
    """Canonical form of a pair of full-column-rank matrices whose
    stacked span is pure; raises HypothesisError otherwise.

    The reduction follows the structure of the pair: split the sum as
    closure-of-intersection plus complements, write everything in an
    ambient basis adapted to that splitting, and diagonalize the
    remaining t x t interaction block through its fraction-field
    reduction, which yields the two coprime divisor chains.
    """
    hyp = check_pair_hypotheses(X1, X2)
    if not hyp.full_column_rank_1:
        raise HypothesisError("X1 does not have full column rank")
    if not hyp.full_column_rank_2:
        raise HypothesisError("X2 does not have full column rank")
    if not hyp.sum_pure:
        raise HypothesisError("span of (X1 X2) not pure")

    ring = X1.ring
    n, m1, m2 = X1.rows, X1.cols, X2.cols
    s1 = Submodule(n, X1)
    s2 = Submodule(n, X2)

    dbar, k1, k2 = decompose_pure_sum(s1, s2)
    t = dbar.rank
    f1 = m1 - t  # free tail of X1: rank of the complement K1
    f2 = m2 - t
    r = t + f1 + f2

    # ambient basis adapted to the splitting: intersection closure,
    # the two complements, then a completion of the (pure) sum
    three = hstack(dbar.basis, k1.basis, k2.basis)
    S = hstack(three, complete_to_unimodular(three))
    s_inv = inverse_unimodular(S)

    G1 = s_inv @ X1
    G2 = s_inv @ X2
    assert G1.take_rows(range(t + f1, n)).is_zero_matrix(), "internal: X1 outside its blocks"
    assert G2.take_rows(range(t, t + f1)).is_zero_matrix() and G2.take_rows(
        range(r, n)
    ).is_zero_matrix(), "internal: X2 outside its blocks"
    g1_hat = G1.take_rows(range(t + f1))
    g2_hat = G2.take_rows(list(range(t)) + list(range(t + f1, r)))

    # coordinates of X_i ∩ dbar in the dbar basis
    h1 = s1.intersect(dbar)
    h2 = s2.intersect(dbar)
    A1 = solve_exact(dbar.basis, h1.basis)
    B1 = solve_exact(dbar.basis, h2.basis)

    m1_target = block_diagonal(A1, ExactMatrix.identity(ring, f1))
    m2_target = block_diagonal(B1, ExactMatrix.identity(ring, f2))
    # X_i = (X_i ∩ dbar) ⊕ K_i, so g_hat and the target present the same
    # column span and the basis change between them is unimodular
    V1 = solve_exact(g1_hat, m1_target)
    V2 = solve_exact(g2_hat, m2_target)
    assert is_unimodular(V1) and is_unimodular(V2), "internal: basis change not unimodular"

    if t:
        field = FractionField(ring)
        lift = lambda M: M.map_entries(field.from_base, ring=field)  # noqa: E731
        T = solve_in_field(lift(A1), lift(B1))
        mc = smith_mcmillan(T)
        alphas, betas = mc.alphas, mc.betas
        v_alpha_inv = inverse_unimodular(mc.V1)
        v_beta_inv = inverse_unimodular(mc.V2)
        # the left factor relating (A1, B1) to the coprime factorization
        # (diag(alphas) @ V1, diag(betas) @ V2) of T is unimodular; its
        # inverse is A1 @ V1^-1 @ diag(alphas)^-1, which stays in the ring
        P = A1 @ v_alpha_inv
        qc_inv_body = []
        for i in range(t):
            row = []
            for nu in range(t):
                try:
                    row.append(ring.exact_div(P[i, nu], alphas[nu]))
                except ValueError:
                    raise AssertionError(
                        "internal: denominator left in canonical row transform"
                    ) from None
            qc_inv_body.append(row)
        qc_inv = ExactMatrix(ring, t, t, qc_inv_body)
        assert is_unimodular(qc_inv), "internal: canonical row transform not unimodular"
        qc = inverse_unimodular(qc_inv)
        assert qc @ A1 @ v_alpha_inv == ExactMatrix.diagonal(
            ring, alphas
        ), "internal: alpha chain not realized"
        assert qc @ B1 @ v_beta_inv == ExactMatrix.diagonal(
            ring, betas
        ), "internal: beta chain not realized"
        Q = block_diagonal(qc, ExactMatrix.identity(ring, n - t)) @ s_inv
        V1 = V1 @ block_diagonal(v_alpha_inv, ExactMatrix.identity(ring, f1))
        V2 = V2 @ block_diagonal(v_beta_inv, ExactMatrix.identity(ring, f2))
    else:
        alphas, betas = (), ()
        Q = s_inv

    Y1, Y2 = canonical_pair_matrices(ring, n, m1, m2, t, alphas, betas)
    assert Q @ X1 @ V1 == Y1, "internal: Y1 witness identity failed"
    assert Q @ X2 @ V2 == Y2, "internal: Y2 witness identity failed"
    return PairCanonicalForm(
        n=n,
        m1=m1,
        m2=m2,
        t=t,
        alphas=alphas,
        betas=betas,
        Y1=Y1,
        Y2=Y2,
        Q=Q,
        V1=V1,
        V2=V2,
    )


def pair_invariants(X1: ExactMatrix, X2: ExactMatrix) -> PairInvariants:
    """Equivalence invariants of the pair of spans; accepts arbitrary
    generator matrices (they are reduced to bases first)."""
    if X1.ring != X2.ring:
        raise ValueError("pair matrices are over different rings")
    if X1.rows != X2.rows:
        raise ValueError("pair matrices have different ambient ranks")
    n = X1.rows
    s1 = Submodule.from_generators(n, X1)
    s2 = Submodule.from_generators(n, X2)
    total = s1.sum(s2)
    if not total.is_pure():
        raise HypothesisError("span of (X1 X2) not pure")
    d = s1.intersect(s2)
    return PairInvariants(
        n=n,
        rank_sum=total.rank,
        q1=s1.quotient_invariants(d),
        q2=s2.quotient_invariants(d),
    )


def equivalent(pair_a, pair_b) -> bool:
    """Decide whether two pairs of spans are equivalent under a common
    ambient automorphism.

    Both the invariant route and the canonical-form route are computed;
    a disagreement would be a bug and raises, it is never reported as a
    verdict.  Pairs over different rings or ambient ranks are a usage
    error, not an inequivalence.
    """
    a1, a2 = pair_a
    b1, b2 = pair_b
    if a1.ring != b1.ring or a2.ring != b2.ring:
        raise ValueError("pairs are over different rings")
    if a1.rows != b1.rows:
        raise ValueError("pairs have different ambient ranks")

    inv_a = pair_invariants(a1, a2)
    inv_b = pair_invariants(b1, b2)
    by_invariants = inv_a == inv_b

    # reduce to bases so the canonical route sees full column rank
    n = a1.rows
    ca = canonical_pair(
        Submodule.from_generators(n, a1).basis, Submodule.from_generators(n, a2).basis
    )
    cb = canonical_pair(
        Submodule.from_generators(n, b1).basis, Submodule.from_generators(n, b2).basis
    )
    by_canonical = ca.invariants_key() == cb.invariants_key()

    if by_invariants != by_canonical:
        raise AssertionError("internal: decision routes disagree")
    return by_invariants


def random_unimodular(ring, n, seed, steps=20) -> ExactMatrix:
    """Deterministic pseudo-random unimodular n x n matrix built from
    `steps` elementary operations (transvections, swaps, unit scalings).
    steps=0 returns the identity."""
    return _random_unimodular(ring, n, random.Random(seed), steps)


def _random_unimodular(ring, n, rng, steps) -> ExactMatrix:
    U = ExactMatrix.identity(ring, n).to_lists()
    mats = [U]
    for _ in range(steps):
        if n == 0:
            break
        op = rng.randrange(3)
        if op == 0 and n >= 2:
            i = rng.randrange(n)
            j = rng.randrange(n - 1)
            if j >= i:
                j += 1
            _add_row_multiple(ring, mats, i, j, ring.random_multiplier(rng))
        elif op == 1 and n >= 2:
            i = rng.randrange(n)
            j = rng.randrange(n - 1)
            if j >= i:
                j += 1
            _swap_rows(mats, i, j)
        else:
            _scale_row(ring, mats, rng.randrange(n), ring.random_unit(rng))
    return ExactMatrix(ring, n, n, U)
