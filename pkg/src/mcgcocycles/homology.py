"""First homology of the surface and the symplectic structure on it.

H = H_1 of the closed genus-g surface is free abelian of rank 2g.  We fix
the ordered basis ([A_1], ..., [A_g], [B_1], ..., [B_g]) coming from the
standard generators, write classes as integer column vectors, and
represent homomorphisms H -> H by 2g x 2g integer matrices acting on
column vectors (so matrix columns are images of basis vectors).

The algebraic intersection form is x . y = x^T J y where

    J = [[0,  I],
         [-I, 0]]

in g x g blocks.  The sign convention [A_i] . [B_i] = +1 is forced by the
normalization d(alpha beta) = 1 of the turning function in
:mod:`mcgcocycles.morita` together with the product rule
d(xy) = d(x) + d(y) + [x].[y]; with the opposite sign every downstream
cocycle value would flip.

Everything here is exact integer arithmetic.  Matrices are tuples of row
tuples; vectors are flat tuples.
"""

from __future__ import annotations

from .freegroup import FreeGroup, Word

Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


def abelianize(w: Word) -> Vector:
    """Exponent-sum vector of a word in the basis A_1..A_g, B_1..B_g.

    A group homomorphism to Z^2g: multiplication goes to addition and
    inversion to negation.
    """
    counts = [0] * w.group.rank
    for c in w.letters:
        if c > 0:
            counts[c - 1] += 1
        else:
            counts[-c - 1] -= 1
    return tuple(counts)


def symplectic_form(genus: int) -> Matrix:
    """The block matrix J with upper-right +I and lower-left -I."""
    n = 2 * genus
    rows = []
    for i in range(n):
        row = [0] * n
        if i < genus:
            row[genus + i] = 1
        else:
            row[i - genus] = -1
        rows.append(tuple(row))
    return tuple(rows)


def intersection(x: Vector, y: Vector) -> int:
    """Algebraic intersection number x . y = x^T J y.

    Antisymmetric, bilinear, with [A_i] . [B_i] = +1.
    """
    if len(x) != len(y) or len(x) % 2 != 0:
        raise ValueError(f"vector lengths {len(x)}, {len(y)} do not match a genus")
    g = len(x) // 2
    return sum(x[i] * y[g + i] - x[g + i] * y[i] for i in range(g))


def dual(values: Vector) -> Vector:
    """The class h with h . v = lam(v) for the functional lam on H.

    The functional is given by its values (lam(A_1..A_g), lam(B_1..B_g));
    the Poincare dual is (lam(B_1..B_g), -lam(A_1..A_g)).
    """
    if len(values) % 2 != 0:
        raise ValueError(f"odd length {len(values)}")
    g = len(values) // 2
    return tuple(values[g:]) + tuple(-v for v in values[:g])


def induced_matrix(phi) -> Matrix:
    """Matrix of the map induced on H by an endomorphism of the free group.

    Column j is the exponent-sum vector of the image of generator j, so
    the assignment is functorial: composing endomorphisms multiplies
    matrices in the same order.
    """
    cols = [abelianize(im) for im in phi.images]
    n = len(cols)
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


# -- generic exact matrix helpers -----------------------------------------


def identity_matrix(n: int) -> Matrix:
    return tuple(
        tuple(1 if i == j else 0 for j in range(n)) for i in range(n)
    )


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    if len(a[0]) != k:
        raise ValueError("shape mismatch")
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m))
        for i in range(n)
    )


def mat_vec(m: Matrix, v: Vector) -> Vector:
    if len(m[0]) != len(v):
        raise ValueError("shape mismatch")
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def mat_neg(m: Matrix) -> Matrix:
    return tuple(tuple(-x for x in row) for row in m)


def det(m: Matrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination; exact."""
    n = len(m)
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is the Bareiss invariant
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _minor(m: Matrix, i: int, j: int) -> Matrix:
    return tuple(
        tuple(row[:j] + row[j + 1:])
        for row in (m[:i] + m[i + 1:])
    )


def adjugate(m: Matrix) -> Matrix:
    """Transposed cofactor matrix; m * adj(m) = det(m) * I."""
    n = len(m)
    return tuple(
        tuple((-1) ** (i + j) * det(_minor(m, j, i)) for j in range(n))
        for i in range(n)
    )


def invert_unimodular(m: Matrix) -> Matrix:
    """Exact inverse of an integer matrix with determinant +-1.

    Uses the adjugate, so the result is integral by construction; any
    other determinant is rejected rather than rounded.
    """
    d = det(m)
    if d not in (1, -1):
        raise ValueError(f"matrix is not unimodular: det = {d}")
    adj = adjugate(m)
    if d == 1:
        return adj
    return mat_neg(adj)


def is_symplectic(m: Matrix) -> bool:
    """Whether m^T J m == J; such matrices are automatically unimodular."""
    n = len(m)
    if n % 2 != 0 or any(len(row) != n for row in m):
        return False
    j = symplectic_form(n // 2)
    return mat_mul(mat_mul(transpose(m), j), m) == j
