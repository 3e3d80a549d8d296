"""Finitely generated submodules of R^n over a PID.

A Submodule stores the ambient rank and a basis matrix whose columns
are independent; over a PID every submodule of R^n is free, so a basis
always exists and from_generators computes one by Hermite reduction.
Equality is equality of spans (mutual containment), not of bases.

The closure of a submodule M is the set of ambient vectors with some
nonzero multiple in M; it is the smallest pure (direct-summand)
submodule containing M and has the same rank.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import HypothesisError, NoSolutionError
from .matrices import ExactMatrix, hstack
from .normal_forms import (
    complete_to_unimodular,
    hnf,
    hnf_pivots,
    inverse_unimodular,
    kernel_basis,
    snf,
    solve_exact,
)


@dataclass(frozen=True)
class QuotientInvariants:
    """Isomorphism type of a finitely generated module over a PID:
    torsion invariant factors (nonunits, each dividing the next) plus a
    free rank."""

    torsion: tuple
    free_rank: int


class Submodule:
    """A submodule of R^n, represented by a basis matrix."""

    __slots__ = ("ambient_rank", "basis")

    def __init__(self, ambient_rank, basis: ExactMatrix):
        if basis.rows != ambient_rank:
            raise ValueError(
                f"basis has {basis.rows} rows, ambient rank is {ambient_rank}"
            )
        if len(hnf_pivots(hnf(basis)[0])) != basis.cols:
            raise ValueError("basis columns are not independent")
        object.__setattr__(self, "ambient_rank", ambient_rank)
        object.__setattr__(self, "basis", basis)

    def __setattr__(self, name, value):
        raise AttributeError("Submodule is immutable")

    @classmethod
    def from_generators(cls, ambient_rank, generators: ExactMatrix):
        """Span of arbitrary generator columns; reduces to a basis."""
        if generators.rows != ambient_rank:
            raise ValueError(
                f"generators have {generators.rows} rows, ambient rank is {ambient_rank}"
            )
        H, _ = hnf(generators)
        r = len(hnf_pivots(H))
        return cls(ambient_rank, H.take_cols(range(r)))

    @classmethod
    def zero(cls, ring, ambient_rank):
        return cls(ambient_rank, ExactMatrix.zeros(ring, ambient_rank, 0))

    @classmethod
    def full(cls, ring, ambient_rank):
        return cls(ambient_rank, ExactMatrix.identity(ring, ambient_rank))

    @property
    def ring(self):
        return self.basis.ring

    @property
    def rank(self):
        return self.basis.cols

    def is_zero(self):
        return self.rank == 0

    def _check_compatible(self, other):
        if not isinstance(other, Submodule):
            raise TypeError("expected a Submodule")
        if self.ambient_rank != other.ambient_rank or self.ring != other.ring:
            raise ValueError("submodules live in different ambient modules")

    def sum(self, other) -> "Submodule":
        self._check_compatible(other)
        return Submodule.from_generators(
            self.ambient_rank, hstack(self.basis, other.basis)
        )

    def intersect(self, other) -> "Submodule":
        """Intersection via the kernel of [B1 | -B2]: a kernel column
        (u, v) means B1*u = B2*v, and those common values span the
        intersection."""
        self._check_compatible(other)
        stacked = hstack(self.basis, other.basis.map_entries(self.ring.neg))
        K = kernel_basis(stacked)
        top = K.take_rows(range(self.basis.cols))
        result = Submodule.from_generators(self.ambient_rank, self.basis @ top)
        assert self.contains_submodule(result) and other.contains_submodule(result)
        return result

    def closure(self) -> "Submodule":
        """Smallest pure submodule containing this one.

        Computed as a double orthogonal complement: the kernel of B^T is
        the annihilator of the span, and the kernel of its transpose is
        the unique pure submodule with the same fraction-field span.
        Kernels of module maps are always pure, so no Smith witnesses
        (whose entries can grow large) are needed.
        """
        annihilator = kernel_basis(self.basis.transpose())
        saturated = kernel_basis(annihilator.transpose())
        result = Submodule.from_generators(self.ambient_rank, saturated)
        assert result.rank == self.rank
        return result

    def is_pure(self) -> bool:
        """Whether the submodule is a direct summand of the ambient
        module, i.e. every invariant factor of the basis is a unit."""
        ring = self.ring
        return all(ring.is_unit(f) for f in snf(self.basis).invariant_factors)

    def contains(self, vector) -> bool:
        vector = list(vector)
        if len(vector) != self.ambient_rank:
            raise ValueError("vector length does not match ambient rank")
        try:
            solve_exact(self.basis, ExactMatrix.column(self.ring, vector))
            return True
        except NoSolutionError:
            return False

    def contains_submodule(self, other) -> bool:
        self._check_compatible(other)
        try:
            solve_exact(self.basis, other.basis)
            return True
        except NoSolutionError:
            return False

    def __eq__(self, other):
        if not isinstance(other, Submodule):
            return NotImplemented
        self._check_compatible(other)
        return self.contains_submodule(other) and other.contains_submodule(self)

    __hash__ = None

    def quotient_invariants(self, other) -> QuotientInvariants:
        """Isomorphism type of self/other for a submodule other of self.

        Writing the columns of other's basis in self's basis gives a
        coordinate matrix C with B_other = B_self @ C; the quotient is
        presented by C, so its Smith form reads off the type.
        """
        self._check_compatible(other)
        try:
            C = solve_exact(self.basis, other.basis)
        except NoSolutionError:
            raise HypothesisError(
                "quotient_invariants: second module is not contained in the first"
            ) from None
        dec = snf(C)
        ring = self.ring
        torsion = tuple(f for f in dec.invariant_factors if not ring.is_unit(f))
        return QuotientInvariants(
            torsion=torsion, free_rank=self.rank - dec.rank
        )

    def __repr__(self):
        return (
            f"Submodule(rank {self.rank} of {self.ring.tag}^{self.ambient_rank},\n"
            f"{self.basis.format()})"
            if self.rank
            else f"Submodule(zero in {self.ring.tag}^{self.ambient_rank})"
        )


def decompose_pure_sum(x1: Submodule, x2: Submodule):
    """Split a pair with pure sum into closure-of-intersection and
    complements.

    Returns (dbar, k1, k2) where dbar is the closure of x1 ∩ x2 and
    k1, k2 are pure complements of dbar ∩ x_i inside x_i, satisfying
    x1 + x2 = dbar ⊕ k1 ⊕ k2.  Raises HypothesisError when x1 + x2 is
    not pure.
    """
    x1._check_compatible(x2)
    if not x1.sum(x2).is_pure():
        raise HypothesisError("span of (X1 X2) not pure")
    c1 = x1.closure()
    c2 = x2.closure()
    dbar = x1.intersect(x2).closure()
    parts = []
    for xi, other_closure in ((x1, c2), (x2, c1)):
        hi = xi.intersect(other_closure)
        # coordinates of hi inside xi span a pure submodule of R^rank(xi),
        # so they extend to a basis; the added columns span the complement
        coords = solve_exact(xi.basis, hi.basis)
        ext = complete_to_unimodular(coords)
        parts.append(Submodule.from_generators(xi.ambient_rank, xi.basis @ ext))
    return dbar, parts[0], parts[1]
