"""Finite root-system combinatorics.

Cartan matrices of the finite Cartan-Killing types, weights and roots in
exact integer/rational coordinates, Weyl-group words with exact length
computation, braid moves between reduced words, and positive roots.

Conventions used throughout the package:

* ``a[i][j]`` is the pairing of the i-th simple coroot with the j-th simple
  root, so for type B2 the matrix is ``[[2,-1],[-2,2]]`` with symmetrizer
  ``(2, 1)``.
* Weights are tuples of integers in the fundamental-weight basis; root
  vectors are tuples in the simple-root basis.  Conversion between the two
  is exact (rational) linear algebra with the Cartan matrix.
* Letters of words are 1-based (indices into ``[1, rank]``); positions
  inside words are 0-based offsets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError

__all__ = [
    "CartanMatrix",
    "LongestElement",
    "all_reduced_words_w0",
    "braid_neighbors",
    "cartan_matrix",
    "int_det",
    "is_finite_type_cartan",
    "is_reduced",
    "longest_element_data",
    "positive_roots",
    "reduced_word_with_boundary",
    "reflect_root",
    "reflect_weight",
    "root_to_weight_coords",
    "weight_to_root_coords",
    "word_action_on_root",
    "word_action_on_weight",
    "word_length",
]

# Smallest legal rank per series, following the usual non-redundant list
# (B1 = A1, C2 = B2, D3 = A3 are excluded as duplicates).
_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4, "E": 6, "F": 4, "G": 2}
_MAX_RANK = {"E": 8, "F": 4, "G": 2}


def _check_generalized_cartan(entries):
    """Validate conditions (1)-(2) of the Cartan-matrix definition."""
    r = len(entries)
    if r == 0 or any(len(row) != r for row in entries):
        raise DomainError("Cartan matrix must be square and non-empty")
    for i in range(r):
        for j in range(r):
            a = entries[i][j]
            if not isinstance(a, int):
                raise DomainError("Cartan entries must be integers")
            if i == j and a != 2:
                raise DomainError("diagonal Cartan entries must equal 2")
            if i != j and a > 0:
                raise DomainError("off-diagonal Cartan entries must be <= 0")
            if i != j and (a == 0) != (entries[j][i] == 0):
                raise DomainError("a_ij = 0 must imply a_ji = 0")


def _find_symmetrizer(entries):
    """Positive integers d with d_i a_ij = d_j a_ji, minimal; None if none."""
    r = len(entries)
    d = [None] * r
    for start in range(r):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(r):
                if i == j or entries[i][j] == 0:
                    continue
                ratio = Fraction(entries[i][j], entries[j][i])  # d_j / d_i
                if d[j] is None:
                    d[j] = d[i] * ratio
                    stack.append(j)
                elif d[j] != d[i] * ratio:
                    return None
    if any(x <= 0 for x in d):
        return None
    lcm_den = 1
    for x in d:
        lcm_den = lcm_den * x.denominator // _gcd(lcm_den, x.denominator)
    ints = [int(x * lcm_den) for x in d]
    g = 0
    for x in ints:
        g = _gcd(g, x)
    return tuple(x // g for x in ints)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


@dataclass(frozen=True)
class CartanMatrix:
    """A generalized Cartan matrix together with a symmetrizer.

    Finite-typeness is not required at construction; it is checked where an
    operation needs it (positive-root closure, longest element, ...).
    """

    entries: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]

    def __post_init__(self):
        _check_generalized_cartan(self.entries)
        r = len(self.entries)
        if len(self.symmetrizer) != r or any(
            not isinstance(x, int) or x <= 0 for x in self.symmetrizer
        ):
            raise DomainError("symmetrizer must be positive integers")
        for i in range(r):
            for j in range(r):
                if (
                    self.symmetrizer[i] * self.entries[i][j]
                    != self.symmetrizer[j] * self.entries[j][i]
                ):
                    raise DomainError("symmetrizer does not symmetrize the matrix")

    @classmethod
    def from_entries(cls, entries, symmetrizer=None):
        entries = tuple(tuple(int(x) for x in row) for row in entries)
        _check_generalized_cartan(entries)
        if symmetrizer is None:
            symmetrizer = _find_symmetrizer(entries)
            if symmetrizer is None:
                raise DomainError("matrix is not symmetrizable")
        return cls(entries, tuple(int(x) for x in symmetrizer))

    @property
    def rank(self) -> int:
        return len(self.entries)

    def a(self, i: int, j: int) -> int:
        """Entry a_ij with 1-based letters."""
        return self.entries[i - 1][j - 1]

    @property
    def simply_laced(self) -> bool:
        r = self.rank
        return all(
            self.entries[i][j] in (0, -1)
            for i in range(r)
            for j in range(r)
            if i != j
        )

    @property
    def finite_type(self) -> bool:
        return is_finite_type_cartan(self.entries)


def cartan_matrix(series: str, rank: int) -> CartanMatrix:
    """Standard Cartan matrix of the given Cartan-Killing series and rank.

    Raises DomainError for pairs outside the classification list (e.g. B1).
    """
    series = series.upper()
    if series not in _MIN_RANK:
        raise DomainError(f"unknown series {series!r}")
    if rank < _MIN_RANK[series] or rank > _MAX_RANK.get(series, 10**9):
        raise DomainError(f"illegal Cartan-Killing pair {series}{rank}")

    a = [[2 * (i == j) for j in range(rank)] for i in range(rank)]

    def chain(i, j):
        a[i][j] = a[j][i] = -1

    if series in ("A", "B", "C"):
        for i in range(rank - 1):
            chain(i, i + 1)
        d = [1] * rank
        if series == "B" and rank >= 2:
            # last simple root short: a_{r,r-1} = -2
            a[rank - 1][rank - 2] = -2
            d = [2] * (rank - 1) + [1]
        if series == "C":
            a[rank - 2][rank - 1] = -2
            d = [1] * (rank - 1) + [2]
    elif series == "D":
        for i in range(rank - 2):
            chain(i, i + 1)
        chain(rank - 3, rank - 1)
        d = [1] * rank
    elif series == "E":
        # Bourbaki numbering: chain 1-3-4-5-...-rank, node 2 attached to 4.
        chain(0, 2)
        for i in range(2, rank - 1):
            chain(i, i + 1)
        chain(1, 3)
        d = [1] * rank
    elif series == "F":
        chain(0, 1)
        chain(2, 3)
        a[1][2] = -1
        a[2][1] = -2
        d = [2, 2, 1, 1]
    else:  # G2, first root short
        a[0][1] = -3
        a[1][0] = -1
        d = [1, 3]

    return CartanMatrix(tuple(tuple(row) for row in a), tuple(d))


def int_det(rows) -> int:
    """Exact determinant of an integer matrix (Bareiss elimination)."""
    m = [list(row) for row in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def is_finite_type_cartan(entries) -> bool:
    """True iff every principal minor of the generalized Cartan matrix is > 0."""
    entries = tuple(tuple(int(x) for x in row) for row in entries)
    _check_generalized_cartan(entries)
    r = len(entries)
    for size in range(1, r + 1):
        for subset in itertools.combinations(range(r), size):
            sub = [[entries[i][j] for j in subset] for i in subset]
            if int_det(sub) <= 0:
                return False
    return True


# ---------------------------------------------------------------------------
# Reflection actions
# ---------------------------------------------------------------------------

def reflect_root(A: CartanMatrix, i: int, gamma):
    """s_i acting on simple-root coordinates: c'_i = c_i - sum_j a_ij c_j."""
    row = A.entries[i - 1]
    pairing = sum(row[j] * gamma[j] for j in range(A.rank))
    out = list(gamma)
    out[i - 1] -= pairing
    return tuple(out)


def reflect_weight(A: CartanMatrix, i: int, lam):
    """s_i acting on fundamental-weight coordinates: l'_j = l_j - l_i a_ji."""
    li = lam[i - 1]
    return tuple(lam[j] - li * A.entries[j][i - 1] for j in range(A.rank))


def word_action_on_root(A: CartanMatrix, word, gamma):
    """Apply s_{i_1} ... s_{i_m} (rightmost letter acts first) to root coords."""
    for i in reversed(word):
        gamma = reflect_root(A, i, gamma)
    return gamma


def word_action_on_weight(A: CartanMatrix, word, lam):
    for i in reversed(word):
        lam = reflect_weight(A, i, lam)
    return lam


def weight_to_root_coords(A: CartanMatrix, lam):
    """Solve A c = lam exactly; returns a tuple of Fractions."""
    r = A.rank
    aug = [[Fraction(A.entries[i][j]) for j in range(r)] + [Fraction(lam[i])]
           for i in range(r)]
    for col in range(r):
        piv = next(i for i in range(col, r) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col]
        aug[col] = [x / inv for x in aug[col]]
        for i in range(r):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return tuple(aug[i][r] for i in range(r))


def root_to_weight_coords(A: CartanMatrix, coords):
    """Weight coordinates of sum_j c_j alpha_j, i.e. A applied to coords."""
    r = A.rank
    return tuple(sum(A.entries[i][j] * coords[j] for j in range(r)) for i in range(r))


# ---------------------------------------------------------------------------
# Positive roots and word length
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def positive_roots(A: CartanMatrix) -> tuple[tuple[int, ...], ...]:
    """All positive roots in simple-root coordinates, sorted.

    Generated by closing the simple roots under the reflection action.  The
    closure diverges for non-finite types, so those are rejected up front.
    """
    if not A.finite_type:
        raise DomainError("positive roots requested for a non-finite-type matrix")
    r = A.rank
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for gamma in frontier:
            for i in range(1, r + 1):
                delta = reflect_root(A, i, gamma)
                if delta not in seen:
                    seen.add(delta)
                    nxt.append(delta)
        frontier = nxt
    return tuple(sorted(g for g in seen if all(c >= 0 for c in g)))


def _root_matrix(A: CartanMatrix, i: int):
    """Matrix of s_i on root coordinates (tuple of rows)."""
    r = A.rank
    rows = []
    for k in range(r):
        row = [int(k == j) for j in range(r)]
        if k == i - 1:
            for j in range(r):
                row[j] -= A.entries[i - 1][j]
        rows.append(tuple(row))
    return tuple(rows)


def _mat_mul(m1, m2):
    n = len(m1)
    return tuple(
        tuple(sum(m1[i][k] * m2[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _word_matrix(A: CartanMatrix, word):
    m = _identity(A.rank)
    for i in word:
        m = _mat_mul(m, _root_matrix(A, i))
    return m


def _apply(mat, vec):
    return tuple(sum(row[j] * vec[j] for j in range(len(vec))) for row in mat)


def _is_negative(vec) -> bool:
    """Sign of a root vector; entries of a root never mix signs."""
    for c in vec:
        if c != 0:
            return c < 0
    raise ValueError("zero vector is not a root")


def _matrix_length(A: CartanMatrix, mat) -> int:
    """Coxeter length as the number of inversions of the reflection action."""
    return sum(1 for beta in positive_roots(A) if _is_negative(_apply(mat, beta)))


def word_length(A: CartanMatrix, word) -> int:
    """Length of the Weyl-group element the word multiplies out to."""
    _check_word(A, word)
    return _matrix_length(A, _word_matrix(A, word))


def is_reduced(A: CartanMatrix, word) -> bool:
    return word_length(A, word) == len(word)


def _check_word(A: CartanMatrix, word):
    for i in word:
        if not isinstance(i, int) or not 1 <= i <= A.rank:
            raise DomainError(f"letter {i!r} out of range [1, {A.rank}]")


# ---------------------------------------------------------------------------
# Longest element
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LongestElement:
    length: int
    word: tuple[int, ...]
    star: tuple[int, ...]  # star[i-1] = i*, from w0(alpha_i) = -alpha_{i*}


@lru_cache(maxsize=None)
def longest_element_data(A: CartanMatrix) -> LongestElement:
    """Length, one reduced word, and the star involution of w0.

    The word is built greedily: repeatedly append the smallest letter i with
    w(alpha_i) still positive.  Exactly w0 has no such letter, and each step
    raises the length by one, so the word is reduced of maximal length.
    """
    if not A.finite_type:
        raise DomainError("longest element requires a finite-type Cartan matrix")
    r = A.rank
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    word = []
    mat = _identity(r)
    while True:
        for i in range(1, r + 1):
            if not _is_negative(_apply(mat, simple[i - 1])):
                word.append(i)
                mat = _mat_mul(mat, _root_matrix(A, i))
                break
        else:
            break
    m = len(word)
    assert m == len(positive_roots(A))
    star = []
    for i in range(1, r + 1):
        image = _apply(mat, simple[i - 1])
        neg = tuple(-c for c in image)
        star.append(simple.index(neg) + 1)
    return LongestElement(m, tuple(word), tuple(star))


# ---------------------------------------------------------------------------
# Braid moves
# ---------------------------------------------------------------------------

def braid_neighbors(A: CartanMatrix, word):
    """All words one braid move away from a reduced word.

    Returns a list of (position, kind, neighbor) triples where position is a
    0-based offset, kind is 2 for a commutation move (a_ij = 0) and 3 for a
    braid move i,j,i -> j,i,j (a_ij = a_ji = -1).  Neighbors of a reduced
    word are reduced of the same length.
    """
    word = tuple(word)
    _check_word(A, word)
    if not is_reduced(A, word):
        raise DomainError("braid_neighbors requires a reduced word")
    out = []
    for p in range(len(word) - 1):
        i, j = word[p], word[p + 1]
        if i != j and A.a(i, j) == 0:
            w = word[:p] + (j, i) + word[p + 2:]
            out.append((p, 2, w))
    for p in range(len(word) - 2):
        i, j, k = word[p], word[p + 1], word[p + 2]
        if i == k and i != j and A.a(i, j) == -1 and A.a(j, i) == -1:
            w = word[:p] + (j, i, j) + word[p + 3:]
            out.append((p, 3, w))
    return out


# ---------------------------------------------------------------------------
# Reduced words with prescribed boundary letters
# ---------------------------------------------------------------------------

def _word_of_matrix(A: CartanMatrix, mat):
    """A reduced word for the element with the given root-action matrix.

    Greedy descent: strip the smallest right descent until the identity is
    reached; the letters come out right-to-left.
    """
    r = A.rank
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    rev = []
    ident = _identity(r)
    while mat != ident:
        for i in range(1, r + 1):
            if _is_negative(_apply(mat, simple[i - 1])):
                rev.append(i)
                mat = _mat_mul(mat, _root_matrix(A, i))
                break
        else:  # pragma: no cover - impossible for a Weyl element
            raise DomainError("matrix is not a Weyl-group element")
    return tuple(reversed(rev))


def reduced_word_with_boundary(A: CartanMatrix, first: int | None = None,
                               last: int | None = None):
    """A reduced word for w0 with a prescribed first and/or last letter.

    Every letter occurs as the first (and as the last) letter of some
    reduced word of w0 in finite type.  Requesting both at once can be
    unsatisfiable (exactly when last* == first and the length exceeds 1);
    that case raises DomainError.
    """
    data = longest_element_data(A)
    if first is not None:
        _check_word(A, (first,))
    if last is not None:
        _check_word(A, (last,))
    w0 = _word_matrix(A, data.word)
    if first is None and last is None:
        return data.word
    if first is not None and last is None:
        rest = _word_of_matrix(A, _mat_mul(_root_matrix(A, first), w0))
        return (first,) + rest
    if first is None:
        rest = _word_of_matrix(A, _mat_mul(w0, _root_matrix(A, last)))
        return rest + (last,)
    if data.length == 1:
        if first == last:
            return data.word
        raise DomainError("rank-1 w0 has a single one-letter word")
    mid = _mat_mul(_root_matrix(A, first), _mat_mul(w0, _root_matrix(A, last)))
    if _matrix_length(A, mid) != data.length - 2:
        raise DomainError(
            f"no reduced word of w0 starts with {first} and ends with {last}"
        )
    return (first,) + _word_of_matrix(A, mid) + (last,)


# ---------------------------------------------------------------------------
# Exhaustive enumeration (small ranks; tests and exhaustive modes)
# ---------------------------------------------------------------------------

_ALL_WORDS_CACHE: dict = {}


def all_reduced_words_w0(A: CartanMatrix) -> tuple[tuple[int, ...], ...]:
    """Every reduced word for w0, by left-descent recursion.  Small ranks only."""
    key = A
    if key in _ALL_WORDS_CACHE:
        return _ALL_WORDS_CACHE[key]
    r = A.rank
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    memo = {}

    def rec(mat):
        if mat in memo:
            return memo[mat]
        if mat == _identity(r):
            return ((),)
        words = []
        for i in range(1, r + 1):
            # i is a left descent iff w^{-1}(alpha_i) < 0 iff alpha_i occurs
            # as the image of a negative root, i.e. row check via inverse;
            # equivalently l(s_i w) < l(w).  Use the matrix product test.
            smat = _mat_mul(_root_matrix(A, i), mat)
            if _matrix_length(A, smat) < _matrix_length(A, mat):
                for tail in rec(smat):
                    words.append((i,) + tail)
        memo[mat] = tuple(words)
        return memo[mat]

    result = rec(_word_matrix(A, longest_element_data(A).word))
    _ALL_WORDS_CACHE[key] = result
    return result
