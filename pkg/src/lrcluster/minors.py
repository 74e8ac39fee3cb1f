"""Exact SL_n computations: factorizations, minors, classical identities.

Matrices are tuples of tuples of ``fractions.Fraction``; no floating point
is used anywhere, so positivity decisions and the polynomial identities are
exact.  Weyl-group elements act as permutations of [1, n] (the reflection
s_i is the transposition (i, i+1)); the weight-to-index-set dictionary is
u . omega_i  ->  {u(1), ..., u(i)} sorted, which turns generalized minors
into ordinary minors with those row/column sets.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import DomainError
from .tropical import GEOMETRIC

__all__ = [
    "boundary_parameters",
    "dodgson_residual",
    "elementary_matrix",
    "group_element_from_word",
    "identity_matrix",
    "is_totally_positive_upper",
    "mat_mul",
    "minor",
    "permutation_of_word",
    "permutation_to_word",
    "plucker_residual",
    "random_sl_matrix",
    "weight_index_set",
]

Matrix = tuple[tuple[Fraction, ...], ...]


def identity_matrix(n: int) -> Matrix:
    return tuple(
        tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)
    )


def elementary_matrix(n: int, i: int, t) -> Matrix:
    """x_i(t) = I + t E_{i,i+1}, the upper elementary unipotent."""
    if not 1 <= i <= n - 1:
        raise DomainError(f"index {i} out of range [1, {n - 1}]")
    t = Fraction(t)
    return tuple(
        tuple(
            Fraction(1) if r == c else (t if (r, c) == (i - 1, i) else Fraction(0))
            for c in range(n)
        )
        for r in range(n)
    )


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def group_element_from_word(word, params, n: int) -> Matrix:
    """Product x_{i_1}(t_1) ... x_{i_m}(t_m) of elementary matrices, exact."""
    word = tuple(word)
    params = tuple(Fraction(t) for t in params)
    if len(word) != len(params):
        raise DomainError("word and parameter lengths differ")
    x = identity_matrix(n)
    for i, t in zip(word, params):
        x = mat_mul(x, elementary_matrix(n, i, t))
    return x


def _det(rows) -> Fraction:
    """Exact determinant by fraction Gaussian elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det *= m[k][k]
        inv = m[k][k]
        for i in range(k + 1, n):
            if m[i][k] != 0:
                f = m[i][k] / inv
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    return det


def minor(x: Matrix, rows, cols) -> Fraction:
    """Minor with the given 1-based row and column sets (equal size)."""
    rows, cols = tuple(rows), tuple(cols)
    n = len(x)
    for idx in (rows, cols):
        if len(idx) == 0 or len(set(idx)) != len(idx) or list(idx) != sorted(idx):
            raise DomainError("index sets must be strictly increasing and nonempty")
        if idx[0] < 1 or idx[-1] > n:
            raise DomainError("index out of range")
    if len(rows) != len(cols):
        raise DomainError("row and column sets must have equal size")
    return _det([[x[r - 1][c - 1] for c in cols] for r in rows])


def _cached_minor(x, rows, cols, cache):
    if cache is None:
        return minor(x, rows, cols)
    key = (rows, cols)
    val = cache.get(key)
    if val is None:
        val = minor(x, rows, cols)
        cache[key] = val
    return val


# ---------------------------------------------------------------------------
# Weyl group of SL_n as permutations
# ---------------------------------------------------------------------------

def permutation_of_word(n: int, word) -> tuple[int, ...]:
    """Permutation (as images of 1..n) of s_{i_1} ... s_{i_m}."""
    perm = list(range(1, n + 1))
    # Right-to-left application: the rightmost reflection acts first, so
    # build the composite by left-multiplying transpositions.
    for i in reversed(tuple(word)):
        if not 1 <= i <= n - 1:
            raise DomainError(f"letter {i} out of range [1, {n - 1}]")
        perm = [i + 1 if v == i else (i if v == i + 1 else v) for v in perm]
    return tuple(perm)


def permutation_length(perm) -> int:
    n = len(perm)
    return sum(
        1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b]
    )


def permutation_to_word(perm) -> tuple[int, ...]:
    """A reduced word for a permutation, stripping right descents."""
    perm = list(perm)
    rev = []
    while True:
        for k in range(len(perm) - 1):
            if perm[k] > perm[k + 1]:
                perm[k], perm[k + 1] = perm[k + 1], perm[k]
                rev.append(k + 1)
                break
        else:
            break
    return tuple(reversed(rev))


def _compose(p, q):
    """(p o q)(x) = p(q(x)); permutations as image tuples over 1..n."""
    return tuple(p[q[x] - 1] for x in range(1, len(p) + 1))


def _transposition(n, i):
    return tuple(
        i + 1 if v == i else (i if v == i + 1 else v) for v in range(1, n + 1)
    )


def weight_index_set(perm, i: int) -> tuple[int, ...]:
    """Index set of the weight u . omega_i: {u(1), ..., u(i)} sorted."""
    return tuple(sorted(perm[:i]))


def _ascend_check(perm, i, what):
    if perm[i - 1] > perm[i]:
        raise DomainError(f"length condition fails: l({what} s_{i}) != l({what}) + 1")


# ---------------------------------------------------------------------------
# Minor identities
# ---------------------------------------------------------------------------

def dodgson_residual(x: Matrix, u_word, v_word, i: int, cache=None) -> Fraction:
    """Condensation identity residual; exactly 0 on every SL_n matrix.

    With u, v the permutations of the given words and all generalized minors
    translated to ordinary ones, evaluates

        D_{u.i, v.i} D_{us_i.i, vs_i.i}
        - D_{us_i.i, v.i} D_{u.i, vs_i.i}
        - prod_{j adjacent to i} D_{u.j, v.j}

    (the exponent of the j factor is -a_{ji}, which is 1 for the neighbors
    of i in type A and 0 otherwise).  Requires l(u s_i) = l(u) + 1 and
    l(v s_i) = l(v) + 1.
    """
    n = len(x)
    r = n - 1
    if not 1 <= i <= r:
        raise DomainError(f"index {i} out of range [1, {r}]")
    u = permutation_of_word(n, u_word)
    v = permutation_of_word(n, v_word)
    _ascend_check(u, i, "u")
    _ascend_check(v, i, "v")
    si = _transposition(n, i)
    usi = _compose(u, si)
    vsi = _compose(v, si)

    def d(p, q, k):
        return _cached_minor(x, weight_index_set(p, k), weight_index_set(q, k), cache)

    lhs = d(u, v, i) * d(usi, vsi, i)
    rhs = d(usi, v, i) * d(u, vsi, i)
    prod = Fraction(1)
    for j in (i - 1, i + 1):
        if 1 <= j <= r:
            prod *= d(u, v, j)
    return lhs - rhs - prod


def plucker_residual(x: Matrix, w_word, i: int, j: int, cache=None) -> Fraction:
    """Three-term Plucker relation residual; exactly 0 on every SL_n matrix.

    Requires |i - j| = 1 (so a_ij = a_ji = -1) and l(w s_i s_j s_i) = l(w)+3.
    """
    n = len(x)
    r = n - 1
    if not (1 <= i <= r and 1 <= j <= r and abs(i - j) == 1):
        raise DomainError("need adjacent indices i, j with a_ij = a_ji = -1")
    w = permutation_of_word(n, w_word)
    si, sj = _transposition(n, i), _transposition(n, j)
    wsi = _compose(w, si)
    wsj = _compose(w, sj)
    wsisj = _compose(wsi, sj)
    wsjsi = _compose(wsj, si)
    if permutation_length(_compose(wsisj, si)) != permutation_length(w) + 3:
        raise DomainError("length condition fails: l(w s_i s_j s_i) != l(w) + 3")
    e = tuple(range(1, n + 1))

    def d(q, k):
        return _cached_minor(x, weight_index_set(e, k), weight_index_set(q, k), cache)

    lhs = d(wsi, i) * d(wsj, j)
    rhs = d(w, i) * d(wsisj, j) + d(wsjsi, i) * d(w, j)
    return lhs - rhs


# ---------------------------------------------------------------------------
# Total positivity
# ---------------------------------------------------------------------------

def _check_unitriangular(x: Matrix):
    n = len(x)
    for r in range(n):
        if x[r][r] != 1 or any(x[r][c] != 0 for c in range(r)):
            raise DomainError("matrix is not upper unitriangular")


def is_totally_positive_upper(x: Matrix) -> bool:
    """Positivity of every minor D_{I,J} with I <= J componentwise.

    This is the concrete SL_n form of "all non-vanishing minors on N are
    positive": for an upper-triangular matrix the minors with I <= J are
    exactly those not forced to vanish.
    """
    _check_unitriangular(x)
    n = len(x)
    import itertools
    for size in range(1, n + 1):
        subsets = list(itertools.combinations(range(1, n + 1), size))
        for I in subsets:
            for J in subsets:
                if all(a <= b for a, b in zip(I, J)):
                    if minor(x, I, J) <= 0:
                        return False
    return True


def boundary_parameters(x: Matrix, word) -> tuple[Fraction, Fraction]:
    """First and last factorization parameters of x over the given word.

    For x totally positive with factorization x = x_{i_1}(t_1)...x_{i_m}(t_m):

        t_1 = D_{w.i1, w0.i1}(x) / D_{s_{i1}w.i1, w0.i1}(x)   with w = e,
        t_m = D_{w.k, w0.k}(x) / D_{w.k, s_{i_m}w0.k}(x)      with k = i_m*.

    Raises DomainError on a vanishing denominator (x not totally positive).
    """
    word = tuple(word)
    if not word:
        raise DomainError("empty word has no boundary parameters")
    n = len(x)
    e = tuple(range(1, n + 1))
    w0 = tuple(range(n, 0, -1))
    i1, im = word[0], word[-1]
    for i in (i1, im):
        if not 1 <= i <= n - 1:
            raise DomainError(f"letter {i} out of range [1, {n - 1}]")
    im_star = n - im  # star involution of type A_{n-1}

    num1 = minor(x, weight_index_set(e, i1), weight_index_set(w0, i1))
    den1 = minor(x, weight_index_set(_transposition(n, i1), i1),
                 weight_index_set(w0, i1))
    s_im_w0 = _compose(_transposition(n, im), w0)
    num2 = minor(x, weight_index_set(e, im_star), weight_index_set(w0, im_star))
    den2 = minor(x, weight_index_set(e, im_star), weight_index_set(s_im_w0, im_star))
    if den1 == 0 or den2 == 0:
        raise DomainError("vanishing boundary minor: matrix is not totally positive")
    return num1 / den1, num2 / den2


# ---------------------------------------------------------------------------
# Random SL_n samples for identity testing
# ---------------------------------------------------------------------------

def random_sl_matrix(n: int, rng: random.Random, shears: int = 12,
                     coeff_bound: int = 3) -> Matrix:
    """A pseudo-random element of SL_n: the identity hit by random shears.

    Row operations R_a += c R_b preserve the determinant, so the result has
    determinant exactly 1 while filling all entries with rationals.
    """
    m = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(shears):
        a, b = rng.sample(range(n), 2)
        c = Fraction(rng.randint(-coeff_bound, coeff_bound),
                     rng.randint(1, coeff_bound))
        if c == 0:
            continue
        m[a] = [x + c * y for x, y in zip(m[a], m[b])]
    return tuple(tuple(row) for row in m)


def geometric_tuple_matrix(A_rank_plus_one: int, word, values) -> Matrix:
    """Convenience wrapper used by tests linking tropical and minors modules."""
    return group_element_from_word(word, values, A_rank_plus_one)


def transition_preserves_product(cartan, word_from, values, word_to, n: int) -> bool:
    """Exact check that geometric transition leaves the factored matrix fixed."""
    from .tropical import transition_values

    before = group_element_from_word(word_from, values, n)
    moved = transition_values(cartan, word_from, values, word_to, GEOMETRIC)
    after = group_element_from_word(word_to, moved, n)
    return before == after
