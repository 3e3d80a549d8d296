"""Walk two worked examples end to end and print every artifact.

Run from the repository root:

    python3 scripts/showcase.py
"""

from pidpairs import (
    ExactMatrix,
    INTEGERS,
    RATIONAL_POLYNOMIALS,
    Submodule,
    canonical_pair,
    equivalent,
    pair_invariants,
    random_unimodular,
)
from pidpairs.textio import format_matrix


def show(name, matrix):
    print(f"{name} =")
    for line in format_matrix(matrix).splitlines()[3:]:
        print(f"    {line}")


def integer_example():
    print("=== integer pair: diag(2,1) and diag(3,4) in Z^2 ===")
    X1 = ExactMatrix.from_rows(INTEGERS, [[2, 0], [0, 1]])
    X2 = ExactMatrix.from_rows(INTEGERS, [[3, 0], [0, 4]])
    cf = canonical_pair(X1, X2)
    print(f"common columns t = {cf.t}")
    print(f"alpha chain (divides upward) = {cf.alphas}")
    print(f"beta chain (divides downward) = {cf.betas}")
    show("Y1", cf.Y1)
    show("Y2", cf.Y2)
    assert cf.Q @ X1 @ cf.V1 == cf.Y1
    assert cf.Q @ X2 @ cf.V2 == cf.Y2
    print("witness identities Q @ Xi @ Vi == Yi verified exactly")

    inv = pair_invariants(X1, X2)
    print(f"span1 / intersection torsion = {inv.q1.torsion}")
    print(f"span2 / intersection torsion = {inv.q2.torsion}")

    # an automorphism of the ambient module cannot change any of this
    Q = random_unimodular(INTEGERS, 2, seed=7, steps=20)
    moved = canonical_pair(Q @ X1, Q @ X2)
    assert (moved.t, moved.alphas, moved.betas) == (cf.t, cf.alphas, cf.betas)
    print("canonical data unchanged under a random ambient automorphism")
    assert equivalent((X1, X2), (Q @ X1, Q @ X2))
    a = ExactMatrix.from_rows(INTEGERS, [[2], [0]])
    assert not equivalent(
        (a, ExactMatrix.from_rows(INTEGERS, [[3], [0]])),
        (a, ExactMatrix.from_rows(INTEGERS, [[5], [0]])),
    )
    print("decision procedure agrees\n")


def closure_example():
    print("=== closure of a non-pure submodule of Z^3 ===")
    gens = ExactMatrix.from_rows(INTEGERS, [[2, 0], [0, 4], [0, 0]])
    sub = Submodule.from_generators(3, gens)
    print(f"rank {sub.rank}, pure: {sub.is_pure()}")
    cl = sub.closure()
    show("closure basis", cl.basis)
    assert cl.is_pure() and cl.contains_submodule(sub)
    print("closure is pure and contains the original span\n")


def polynomial_example():
    print("=== polynomial pair over Q[x] ===")
    R = RATIONAL_POLYNOMIALS
    x = R.from_coeffs([0, 1])
    one = R.one
    X1 = ExactMatrix.from_rows(R, [[x, one], [one, R.zero]])
    X2 = ExactMatrix.from_rows(R, [[R.mul(x, x), R.zero], [R.zero, one]])
    cf = canonical_pair(X1, X2)
    print(f"t = {cf.t}")
    print(f"alphas = {[R.format_token(a) for a in cf.alphas]}")
    print(f"betas  = {[R.format_token(b) for b in cf.betas]}")
    assert cf.Q @ X1 @ cf.V1 == cf.Y1 and cf.Q @ X2 @ cf.V2 == cf.Y2
    print("witness identities verified exactly")


if __name__ == "__main__":
    integer_example()
    closure_example()
    polynomial_example()
