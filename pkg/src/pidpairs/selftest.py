"""Seeded self-checks runnable from the command line.

Five suites exercise the library against identities that must hold
exactly and against an internal oracle that recomputes invariant
factors from gcds of k x k minors by cofactor expansion, a route
disjoint from the elimination code.  Runs are deterministic for a
fixed configuration: every trial draws from a Random seeded with the
global seed and the suite name, and reports carry no timestamps, so
byte-identical output means byte-identical behaviour.

Failures serialize the offending matrices in the matrix-file format so
an instance can be replayed through the command line tools.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .errors import HypothesisError
from .matrices import ExactMatrix
from .normal_forms import hnf, hnf_pivots, is_unimodular, kernel_basis, snf
from .pairs import (
    _random_unimodular,
    canonical_pair,
    canonical_pair_matrices,
    equivalent,
    pair_invariants,
)
from .rings import ring_for_tag
from .submodules import Submodule, decompose_pure_sum
from .textio import format_matrix


@dataclass(frozen=True)
class SelftestConfig:
    trials: int = 100
    seed: int = 0
    ring_tag: str = "int"
    max_dim: int = 5
    max_entry: int = 10


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)


@dataclass
class SelftestReport:
    config: SelftestConfig
    suites: list

    @property
    def ok(self) -> bool:
        return all(s.failed == 0 for s in self.suites)


# ---------------------------------------------------------------------------
# random generators (also used by the test suite)


def random_matrix(ring, rng, rows, cols, bound) -> ExactMatrix:
    return ExactMatrix(
        ring,
        rows,
        cols,
        [[ring.random_element(rng, bound) for _ in range(cols)] for _ in range(rows)],
    )


def random_submodule(ring, rng, ambient_rank, bound) -> Submodule:
    gens = random_matrix(ring, rng, ambient_rank, rng.randint(0, ambient_rank + 1), bound)
    return Submodule.from_generators(ambient_rank, gens)


def _pools(ring):
    """Factor pools for divisor chains; chains are built by repeated
    multiplication so divisibility holds by construction.  The pools
    overlap on purpose, so positionwise coprimality really is enforced
    by rejection and not by disjointness."""
    if ring.tag == "int":
        return (1, 1, 2, 3), (1, 1, 2, 3, 5)
    if ring.tag == "polyq":
        x = ring.from_coeffs([0, 1])
        xm1 = ring.from_coeffs([-1, 1])
        xp1 = ring.from_coeffs([1, 1])
        return (ring.one, ring.one, x, xm1), (ring.one, ring.one, xm1, xp1)
    raise ValueError(f"no chain pools for ring {ring.tag}")


def _perturb_pool(ring):
    if ring.tag == "int":
        return (5, 7, 11, 13)
    return tuple(ring.from_coeffs([-c, 1]) for c in (3, 4, 5, 6))


def _too_big(ring, value):
    if ring.tag == "int":
        return abs(value) > 60
    return ring.degree(value) > 2


def _ascending_chain(ring, rng, t, pool):
    chain = []
    e = ring.one
    for _ in range(t):
        cand = ring.mul(e, rng.choice(pool))
        if not _too_big(ring, cand):
            e = cand
        chain.append(e)
    return chain


def random_coprime_chains(ring, rng, t):
    """Chains (alphas, betas) with alphas descending, betas ascending,
    and gcd(alphas[i], betas[i]) a unit for each position."""
    pool_a, pool_b = _pools(ring)
    for _ in range(40):
        alphas = tuple(reversed(_ascending_chain(ring, rng, t, pool_a)))
        betas = tuple(_ascending_chain(ring, rng, t, pool_b))
        if all(ring.is_unit(ring.gcd(a, b)) for a, b in zip(alphas, betas)):
            return alphas, betas
    # guaranteed-coprime fallback: alphas trivial
    return (ring.one,) * t, tuple(_ascending_chain(ring, rng, t, pool_b))


@dataclass(frozen=True)
class CanonicalInstance:
    """A pair with known canonical data: X1, X2 were produced from the
    canonical matrices by unimodular row and column transformations."""

    n: int
    m1: int
    m2: int
    t: int
    alphas: tuple
    betas: tuple
    Y1: ExactMatrix
    Y2: ExactMatrix
    X1: ExactMatrix
    X2: ExactMatrix


def random_canonical_instance(
    ring, rng, max_dim, min_t=0, steps=None
) -> CanonicalInstance:
    if steps is None:
        # polynomial entries grow fast under transvections; stay modest
        steps = 12 if ring.tag == "int" else 6
    if max_dim < max(min_t, 1):
        raise ValueError("max_dim too small to sample an instance")
    while True:
        t = rng.randint(min_t, min(2, max_dim))
        f1 = rng.randint(0, 2)
        f2 = rng.randint(0, 2)
        if t + f1 + f2 <= max_dim:
            break
    n = rng.randint(t + f1 + f2, max_dim)
    m1, m2 = t + f1, t + f2
    alphas, betas = random_coprime_chains(ring, rng, t)
    Y1, Y2 = canonical_pair_matrices(ring, n, m1, m2, t, alphas, betas)
    Q = _random_unimodular(ring, n, rng, steps)
    W1 = _random_unimodular(ring, m1, rng, max(4, steps // 2))
    W2 = _random_unimodular(ring, m2, rng, max(4, steps // 2))
    return CanonicalInstance(
        n=n,
        m1=m1,
        m2=m2,
        t=t,
        alphas=alphas,
        betas=betas,
        Y1=Y1,
        Y2=Y2,
        X1=Q @ Y1 @ W1,
        X2=Q @ Y2 @ W2,
    )


def perturbed_pair(ring, rng, inst: CanonicalInstance):
    """A pair inequivalent to inst: one diagonal entry gains a fresh
    factor, which changes the invariant chains but keeps every
    hypothesis intact.  Requires inst.t >= 1."""
    if inst.t < 1:
        raise ValueError("perturbation needs t >= 1")
    alphas, betas = inst.alphas, inst.betas
    if rng.randrange(2):
        for p in _perturb_pool(ring):
            if ring.is_unit(ring.gcd(p, betas[0])):
                alphas = (ring.mul(alphas[0], p),) + alphas[1:]
                break
    else:
        for p in _perturb_pool(ring):
            if ring.is_unit(ring.gcd(p, alphas[-1])):
                betas = betas[:-1] + (ring.mul(betas[-1], p),)
                break
    if alphas == inst.alphas and betas == inst.betas:
        raise AssertionError("perturbation pool exhausted")
    Y1, Y2 = canonical_pair_matrices(ring, inst.n, inst.m1, inst.m2, inst.t, alphas, betas)
    steps = 8 if ring.tag == "int" else 4
    Q = _random_unimodular(ring, inst.n, rng, steps)
    W1 = _random_unimodular(ring, inst.m1, rng, steps // 2)
    W2 = _random_unimodular(ring, inst.m2, rng, steps // 2)
    return Q @ Y1 @ W1, Q @ Y2 @ W2


# ---------------------------------------------------------------------------
# minor-gcd oracle


def _det_cofactor(ring, rows):
    n = len(rows)
    if n == 0:
        return ring.one
    if n == 1:
        return rows[0][0]
    total = ring.zero
    for j in range(n):
        if ring.is_zero(rows[0][j]):
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = ring.mul(rows[0][j], _det_cofactor(ring, minor))
        total = ring.add(total, term if j % 2 == 0 else ring.neg(term))
    return total


def minor_gcd_invariant_factors(ring, M: ExactMatrix):
    """Invariant factors computed as quotients of gcds of all k x k
    minors; independent of the elimination path."""
    out = []
    d_prev = ring.one
    for k in range(1, min(M.rows, M.cols) + 1):
        g = ring.zero
        for rows_idx in itertools.combinations(range(M.rows), k):
            for cols_idx in itertools.combinations(range(M.cols), k):
                sub = [[M[i, j] for j in cols_idx] for i in rows_idx]
                g = ring.gcd(g, _det_cofactor(ring, sub))
        if ring.is_zero(g):
            break
        out.append(ring.exact_div(g, d_prev))
        d_prev = g
    return tuple(out)


# ---------------------------------------------------------------------------
# suites


def _fail(detail, *named_matrices):
    parts = [detail]
    for name, m in named_matrices:
        parts.append(f"matrix {name}")
        parts.append(format_matrix(m))
    return "\n".join(parts)


def _check_chain(ring, chain, ascending):
    pairs = zip(chain, chain[1:]) if ascending else zip(chain[1:], chain)
    return all(ring.divides(a, b) for a, b in pairs)


def _trial_normal_forms(ring, rng, config):
    n = rng.randint(0, config.max_dim)
    m = rng.randint(0, config.max_dim)
    M = random_matrix(ring, rng, n, m, config.max_entry)
    dec = snf(M)
    if dec.Q @ M @ dec.V != dec.S:
        return _fail("snf witness identity failed", ("M", M))
    if not (is_unimodular(dec.Q) and is_unimodular(dec.V)):
        return _fail("snf witness not unimodular", ("M", M))
    fs = dec.invariant_factors
    if not _check_chain(ring, fs, ascending=True):
        return _fail("invariant factors do not form a chain", ("M", M))
    if any(ring.normalize_unit(f)[0] != ring.one for f in fs):
        return _fail("invariant factors not normalized", ("M", M))
    if fs != minor_gcd_invariant_factors(ring, M):
        return _fail("snf disagrees with the minor-gcd oracle", ("M", M))
    H, U = hnf(M)
    if M @ U != H or not is_unimodular(U):
        return _fail("hnf witness identity failed", ("M", M))
    pivots = hnf_pivots(H)
    prows = [p for p, _ in pivots]
    if prows != sorted(prows) or len(set(prows)) != len(prows):
        return _fail("hnf pivot rows not strictly increasing", ("M", M), ("H", H))
    for pr, pc in pivots:
        if ring.normalize_unit(H[pr, pc])[0] != ring.one:
            return _fail("hnf pivot not normalized", ("M", M), ("H", H))
        if any(not ring.is_zero(H[i, pc]) for i in range(pr + 1, n)):
            return _fail("hnf entries below a pivot", ("M", M), ("H", H))
        for k in range(pc + 1, m):
            _, rem = ring.divmod(H[pr, k], H[pr, pc])
            if H[pr, k] != rem:
                return _fail("hnf entry right of pivot not reduced", ("M", M), ("H", H))
    if len(pivots) != dec.rank:
        return _fail("hnf and snf disagree on rank", ("M", M))
    K = kernel_basis(M)
    if not (M @ K).is_zero_matrix() or K.cols != m - dec.rank:
        return _fail("kernel basis failed", ("M", M))
    return None


def _trial_closure(ring, rng, config):
    n = rng.randint(0, config.max_dim)
    M = random_submodule(ring, rng, n, config.max_entry)
    N = random_submodule(ring, rng, n, config.max_entry)
    clM, clN = M.closure(), N.closure()
    mats = (("M", M.basis), ("N", N.basis))
    if not clM.contains_submodule(M):
        return _fail("closure does not contain the module", *mats)
    if clM.rank != M.rank:
        return _fail("closure changed the rank", *mats)
    if clM.closure() != clM:
        return _fail("closure is not idempotent", *mats)
    if not clM.is_pure():
        return _fail("closure is not pure", *mats)
    if M.is_pure() != (clM == M):
        return _fail("purity does not match closure fixed point", *mats)
    if M.intersect(N).closure() != clM.intersect(clN):
        return _fail("closure does not distribute over intersection", *mats)
    s = clM.sum(clN)
    cl_sum = M.sum(N).closure()
    if not cl_sum.contains_submodule(s):
        return _fail("closure sum not inside closure of sum", *mats)
    if s.is_pure() != (cl_sum == s):
        return _fail("sum-of-closures purity criterion failed", *mats)
    return None


def _trial_decomposition(ring, rng, config):
    inst = random_canonical_instance(ring, rng, config.max_dim)
    x1 = Submodule(inst.n, inst.X1)
    x2 = Submodule(inst.n, inst.X2)
    mats = (("X1", inst.X1), ("X2", inst.X2))
    dbar, k1, k2 = decompose_pure_sum(x1, x2)
    total = x1.sum(x2)
    if dbar != x1.intersect(x2).closure():
        return _fail("first summand is not the closed intersection", *mats)
    if dbar.sum(k1).sum(k2) != total:
        return _fail("decomposition does not span the sum", *mats)
    if dbar.rank + k1.rank + k2.rank != total.rank:
        return _fail("decomposition ranks do not add up", *mats)
    for a, b in ((dbar, k1), (dbar, k2), (k1, k2)):
        if not a.intersect(b).is_zero():
            return _fail("decomposition summands overlap", *mats)
    if not (x1.contains_submodule(k1) and x2.contains_submodule(k2)):
        return _fail("complement escapes its module", *mats)
    if not (k1.is_pure() and k2.is_pure()):
        return _fail("complement is not pure", *mats)
    h1 = x1.intersect(x2.closure())
    h2 = x2.intersect(x1.closure())
    if h1.sum(k1) != x1 or h1.rank + k1.rank != x1.rank:
        return _fail("X1 does not split against its complement", *mats)
    if h2.sum(k2) != x2 or h2.rank + k2.rank != x2.rank:
        return _fail("X2 does not split against its complement", *mats)
    if h1.sum(h2) != dbar:
        return _fail("closed intersection is not H1 + H2", *mats)
    return None


def _trial_canonical(ring, rng, config):
    inst = random_canonical_instance(ring, rng, config.max_dim)
    mats = (("X1", inst.X1), ("X2", inst.X2))
    cf = canonical_pair(inst.X1, inst.X2)
    if cf.invariants_key() != (
        inst.n,
        inst.m1,
        inst.m2,
        inst.t,
        inst.alphas,
        inst.betas,
    ):
        return _fail(
            f"canonical data not invariant: got {cf.invariants_key()}, "
            f"expected {(inst.n, inst.m1, inst.m2, inst.t, inst.alphas, inst.betas)}",
            *mats,
        )
    if not (is_unimodular(cf.Q) and is_unimodular(cf.V1) and is_unimodular(cf.V2)):
        return _fail("canonical witnesses not unimodular", *mats)
    if cf.Q @ inst.X1 @ cf.V1 != cf.Y1 or cf.Q @ inst.X2 @ cf.V2 != cf.Y2:
        return _fail("canonical witness identity failed", *mats)
    if cf.Y1 != inst.Y1 or cf.Y2 != inst.Y2:
        return _fail("canonical matrices differ from the seeded ones", *mats)
    if not _check_chain(ring, cf.alphas, ascending=False):
        return _fail("alpha chain not descending", *mats)
    if not _check_chain(ring, cf.betas, ascending=True):
        return _fail("beta chain not ascending", *mats)
    if any(not ring.is_unit(ring.gcd(a, b)) for a, b in zip(cf.alphas, cf.betas)):
        return _fail("alpha and beta not coprime positionwise", *mats)
    inv = pair_invariants(inst.X1, inst.X2)
    if inv.rank_sum != inst.m1 + inst.m2 - inst.t:
        return _fail("rank of the sum disagrees with canonical t", *mats)
    non_unit_betas = tuple(b for b in cf.betas if not ring.is_unit(b))
    non_unit_alphas = tuple(a for a in reversed(cf.alphas) if not ring.is_unit(a))
    if inv.q1.torsion != non_unit_betas or inv.q1.free_rank != inst.m1 - inst.t:
        return _fail("first quotient does not match the beta chain", *mats)
    if inv.q2.torsion != non_unit_alphas or inv.q2.free_rank != inst.m2 - inst.t:
        return _fail("second quotient does not match the alpha chain", *mats)
    again = canonical_pair(cf.Y1, cf.Y2)
    if again.invariants_key() != cf.invariants_key():
        return _fail("canonical form is not idempotent", *mats)
    return None


def _trial_decision(ring, rng, config):
    inst = random_canonical_instance(ring, rng, config.max_dim, min_t=1)
    steps = 8 if ring.tag == "int" else 4
    q = _random_unimodular(ring, inst.n, rng, steps)
    w1 = _random_unimodular(ring, inst.m1, rng, steps // 2)
    w2 = _random_unimodular(ring, inst.m2, rng, steps // 2)
    twin = (q @ inst.X1 @ w1, q @ inst.X2 @ w2)
    mats = (("X1", inst.X1), ("X2", inst.X2))
    if not equivalent((inst.X1, inst.X2), twin):
        return _fail("transformed pair reported inequivalent", *mats)
    other = perturbed_pair(ring, rng, inst)
    if equivalent((inst.X1, inst.X2), other):
        return _fail(
            "perturbed pair reported equivalent",
            *mats,
            ("P1", other[0]),
            ("P2", other[1]),
        )
    return None


_SUITES = (
    ("normal-forms", _trial_normal_forms),
    ("closure-laws", _trial_closure),
    ("decomposition", _trial_decomposition),
    ("canonical-form", _trial_canonical),
    ("decision", _trial_decision),
)


def run_selftest(config: SelftestConfig) -> SelftestReport:
    ring = ring_for_tag(config.ring_tag)
    suites = []
    for name, trial in _SUITES:
        rng = random.Random(f"{config.seed}:{name}")
        result = SuiteResult(name=name)
        for index in range(config.trials):
            try:
                failure = trial(ring, rng, config)
            except (AssertionError, HypothesisError, ValueError) as e:
                failure = f"trial raised {type(e).__name__}: {e}"
            if failure is None:
                result.passed += 1
            else:
                result.failed += 1
                result.failures.append(f"trial {index}: {failure}")
        suites.append(result)
    return SelftestReport(config=config, suites=suites)


def format_report(report: SelftestReport, max_failures=3) -> str:
    cfg = report.config
    lines = [
        "selftest"
        f" ring={cfg.ring_tag} trials={cfg.trials} seed={cfg.seed}"
        f" max-dim={cfg.max_dim} max-entry={cfg.max_entry}"
    ]
    for suite in report.suites:
        lines.append(f"suite {suite.name}: {suite.passed} passed, {suite.failed} failed")
        for failure in suite.failures[:max_failures]:
            for sub in failure.splitlines():
                lines.append("  " + sub)
    total = sum(s.passed + s.failed for s in report.suites)
    lines.append(f"result: {'PASS' if report.ok else 'FAIL'} ({total} trials)")
    return "\n".join(lines)
