"""Classical type-A combinatorics: partitions and the Littlewood-Richardson rule.

The LR coefficient is computed by direct backtracking over skew semistandard
fillings whose reverse reading word (rows read right to left, top to bottom)
is a lattice word.  This formulation is deliberately close to brute force so
it can serve as the classical oracle for the tropical multiplicity engine.

Also houses the dictionary between dominant sl_{r+1} weights and partitions
(l_1, ..., l_r) <-> (lambda_j = sum_{k >= j} l_k), including the column
padding needed to compare GL partitions of different sizes.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError

__all__ = [
    "lr_coefficient",
    "lr_from_weights",
    "normalize_partition",
    "partition_to_weight",
    "schur_dimension",
    "schur_product_expansion",
    "weight_to_partition",
]


def normalize_partition(parts) -> tuple[int, ...]:
    """Validate weak decrease and nonnegativity; trim trailing zeros."""
    parts = tuple(int(p) for p in parts)
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise DomainError(f"{parts} is not weakly decreasing")
    if parts and parts[-1] < 0:
        raise DomainError(f"{parts} has negative parts")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def lr_coefficient(lam, nu, mu) -> int:
    """Number of LR skew tableaux of shape mu/lam and content nu.

    Returns 0 whenever |mu| != |lam| + |nu| or lam is not contained in mu.
    """
    lam = normalize_partition(lam)
    nu = normalize_partition(nu)
    mu = normalize_partition(mu)
    if sum(mu) != sum(lam) + sum(nu):
        return 0
    if len(lam) > len(mu) or any(l > m for l, m in zip(lam, mu)):
        return 0
    if not nu:
        return 1  # mu == lam is forced by the size check

    nrows = len(mu)
    lam_pad = lam + (0,) * (nrows - len(lam))
    # Cells in reverse reading order: row by row, right to left.
    cells = [
        (r, c)
        for r in range(nrows)
        for c in range(mu[r] - 1, lam_pad[r] - 1, -1)
    ]
    nvals = len(nu)
    counts = [0] * nvals
    values = {}

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        total = 0
        for v in range(1, nvals + 1):
            if counts[v - 1] >= nu[v - 1]:
                continue
            # lattice: every prefix must keep #v <= #(v-1)
            if v > 1 and counts[v - 1] >= counts[v - 2]:
                continue
            if c + 1 < mu[r] and v > values[(r, c + 1)]:
                continue  # rows weakly increase left to right
            if r > 0 and c >= lam_pad[r - 1] and v <= values[(r - 1, c)]:
                continue  # columns strictly increase downwards
            values[(r, c)] = v
            counts[v - 1] += 1
            total += fill(idx + 1)
            counts[v - 1] -= 1
            del values[(r, c)]
        return total

    return fill(0)


def _partitions_of(total, max_len, max_part):
    """Partitions of `total` with at most max_len parts, parts <= max_part."""
    if total == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions_of(total - first, max_len - 1, first):
            yield (first,) + rest


def schur_product_expansion(lam, nu, n: int) -> dict[tuple[int, ...], int]:
    """Expansion of s_lam * s_nu in the Schur basis of Lambda_n.

    Keys are the partitions mu with at most n parts and positive coefficient.
    """
    lam = normalize_partition(lam)
    nu = normalize_partition(nu)
    if len(lam) > n or len(nu) > n:
        raise DomainError("partitions must have at most n parts")
    total = sum(lam) + sum(nu)
    max_part = (lam[0] if lam else 0) + (nu[0] if nu else 0)
    out = {}
    for mu in _partitions_of(total, n, max_part):
        c = lr_coefficient(lam, nu, mu)
        if c:
            out[mu] = c
    return out


def schur_dimension(lam, n: int) -> int:
    """s_lam(1, ..., 1) with n ones, by the Weyl dimension formula for GL_n."""
    lam = normalize_partition(lam)
    if len(lam) > n:
        return 0
    full = lam + (0,) * (n - len(lam))
    dim = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            dim *= Fraction(full[i] - full[j] + j - i, j - i)
    assert dim.denominator == 1
    return int(dim)


# ---------------------------------------------------------------------------
# Dictionary with dominant sl_{r+1} weights
# ---------------------------------------------------------------------------

def weight_to_partition(coords) -> tuple[int, ...]:
    """Dominant weight (l_1, ..., l_r) -> partition lambda_j = sum_{k>=j} l_k."""
    coords = tuple(int(c) for c in coords)
    if any(c < 0 for c in coords):
        raise DomainError("weight must be dominant")
    return normalize_partition(
        tuple(sum(coords[j:]) for j in range(len(coords)))
    )


def partition_to_weight(parts, rank: int) -> tuple[int, ...]:
    """Partition with at most rank+1 parts -> sl_{rank+1} weight coordinates."""
    parts = normalize_partition(parts)
    if len(parts) > rank + 1:
        raise DomainError(f"partition has more than {rank + 1} parts")
    full = parts + (0,) * (rank + 1 - len(parts))
    return tuple(full[i] - full[i + 1] for i in range(rank))


def lr_from_weights(rank: int, lam_w, nu_w, mu_w) -> int:
    """Tensor multiplicity for sl_{rank+1} via the classical LR rule.

    The three dominant weights are translated to partitions; mu is padded
    with full columns of height rank+1 so its size matches |lam| + |nu|
    (the partition representing an sl weight is only defined modulo such
    columns).  Returns 0 when no padding can match the sizes.
    """
    lam = weight_to_partition(lam_w)
    nu = weight_to_partition(nu_w)
    mu = weight_to_partition(mu_w)
    deficit = sum(lam) + sum(nu) - sum(mu)
    if deficit < 0 or deficit % (rank + 1):
        return 0
    cols = deficit // (rank + 1)
    mu_padded = tuple(p + cols for p in mu + (0,) * (rank + 1 - len(mu)))
    return lr_coefficient(lam, nu, mu_padded)
