"""Assumption-free brute force over prime fields, used to validate the engine.

The oracle never reasons about isotropy or orbits.  It enumerates every
nonzero element a of the algebra (subject to the q^dim cap), computes the
left ideal A a as the row space of all products 1_g * a (local units put a
itself in that span), keeps the ideals that are minimal under inclusion and
sums them into the socle, which is then verified to be closed under right
multiplication.  Semiprimeness is likewise decided by exhaustively searching
for an absolute zero divisor, i.e. a nonzero a with a * 1_g * a = 0 for
every g.

Everything runs on integer numpy arrays mod p, processed in enumeration
order in bounded chunks; chunking does not affect any result.  The engine
(socle module) deliberately shares no linear algebra with this module.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import AlgebraElement, SteinbergAlgebra
from .fields import PrimeField
from .limits import check_enum_size
from .socle import LeftIdeal


def _require_prime_field(algebra: SteinbergAlgebra) -> int:
    if not isinstance(algebra.field, PrimeField):
        raise ValueError("the oracle works over prime fields only")
    return algebra.field.p


def _action_arrays(algebra: SteinbergAlgebra) -> tuple[np.ndarray, np.ndarray]:
    left = np.array(algebra.left_action_table, dtype=np.int64)
    right = np.array(algebra.right_action_table, dtype=np.int64)
    return left, right


def _composable_triples(algebra: SteinbergAlgebra) -> list[tuple[int, int, int]]:
    gpd = algebra.groupoid
    idx = gpd.index
    return [
        (idx[a], idx[b], idx[c])
        for (a, b), c in gpd.compose.items()
    ]


def _vector_chunks(q: int, n: int, total: int, chunk_rows: int):
    """All nonzero coefficient vectors in lexicographic order by canonical
    basis order (first coordinate most significant), yielded in chunks."""
    powers = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    start = 1
    while start < total:
        stop = min(start + chunk_rows, total)
        indices = np.arange(start, stop, dtype=np.int64)
        yield (indices[:, None] // powers[None, :]) % q
        start = stop


def _line_chunks(q: int, n: int, chunk_rows: int):
    """One coefficient vector per scalar line, in the order induced by the
    full enumeration of _vector_chunks.

    Scaling a vector by a nonzero constant never changes the cyclic ideal it
    generates, so it suffices to visit the vectors whose leading nonzero
    coordinate is 1.  Those are the integers in [q**m, 2*q**m), and the first
    vector of any scalar line in the full order is of this form (rescaling
    the leading digit to 1 can only shrink the integer value), so the first
    recorded generator per ideal is the same as under full enumeration.
    """
    powers = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    for m in range(n):
        start = q**m
        stop = 2 * start
        while start < stop:
            upper = min(start + chunk_rows, stop)
            indices = np.arange(start, upper, dtype=np.int64)
            yield (indices[:, None] // powers[None, :]) % q
            start = upper


def _chunk_rows_for(n: int) -> int:
    return max(256, (1 << 21) // max(n * n, 1))


def _hash_vector(length: int) -> np.ndarray:
    out = np.empty(length, dtype=np.uint64)
    x = 0x9E3779B97F4A7C15
    for i in range(length):
        x = (x * 6364136223846793005 + 1442695040888963407) % (1 << 64)
        out[i] = x | 1
    return out


def _batched_rref(mats: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Reduced row echelon form of a stack of matrices over GF(p).

    Returns (ranks, reduced) where reduced[i] holds the canonical echelon
    rows of mats[i] on top and zero rows below.  Pivoting is leftmost column
    first, then smallest row index, matching the engine's convention.
    """
    mats = np.mod(mats, p)
    count, rows, cols = mats.shape
    inverses = np.zeros(p, dtype=np.int64)
    for v in range(1, p):
        inverses[v] = pow(v, p - 2, p)
    rank = np.zeros(count, dtype=np.int64)
    row_index = np.arange(rows, dtype=np.int64)
    for col in range(cols):
        column = mats[:, :, col]
        eligible = (column != 0) & (row_index[None, :] >= rank[:, None])
        found = eligible.any(axis=1)
        if not found.any():
            continue
        sel = np.nonzero(found)[0]
        k = len(sel)
        pivot_rows = eligible[sel].argmax(axis=1)
        dest_rows = rank[sel]
        ar = np.arange(k)
        sub = mats[sel]
        swap_a = sub[ar, dest_rows].copy()
        sub[ar, dest_rows] = sub[ar, pivot_rows]
        sub[ar, pivot_rows] = swap_a
        pivot_values = sub[ar, dest_rows, col]
        sub[ar, dest_rows] = (sub[ar, dest_rows] * inverses[pivot_values][:, None]) % p
        factors = sub[:, :, col].copy()
        factors[ar, dest_rows] = 0
        sub = (sub - factors[:, :, None] * sub[ar, dest_rows][:, None, :]) % p
        mats[sel] = sub
        rank[sel] += 1
    return rank, mats


def _left_products(chunk: np.ndarray, left: np.ndarray, p: int) -> np.ndarray:
    """stack[i, g, :] is the coefficient vector of 1_g * a_i."""
    count, n = chunk.shape
    n_g = left.shape[0]
    stack = np.zeros((count, n_g, n), dtype=np.int64)
    for g in range(n_g):
        targets = left[g]
        defined = targets >= 0
        stack[:, g, targets[defined]] = chunk[:, defined]
    return np.mod(stack, p)


def _right_products(chunk: np.ndarray, right: np.ndarray, p: int) -> np.ndarray:
    count, n = chunk.shape
    n_g = right.shape[0]
    stack = np.zeros((count, n_g, n), dtype=np.int64)
    for g in range(n_g):
        targets = right[g]
        defined = targets >= 0
        stack[:, g, targets[defined]] = chunk[:, defined]
    return np.mod(stack, p)


def _reduce_mod_basis(vec: np.ndarray, basis: np.ndarray, p: int) -> np.ndarray:
    v = vec.copy() % p
    for row in basis:
        pivots = np.nonzero(row)[0]
        if len(pivots) == 0:
            continue
        lead = pivots[0]
        if v[lead]:
            v = (v - v[lead] * row) % p
    return v

def _subspace_leq(small: np.ndarray, large: np.ndarray, p: int) -> bool:
    return all(not _reduce_mod_basis(row, large, p).any() for row in small)


def _enumerate_ideals(
    algebra: SteinbergAlgebra, products, max_enum: int | None
) -> list[tuple[bytes, np.ndarray, np.ndarray]]:
    """All distinct cyclic ideal subspaces, in first-generator order.

    Returns triples (canonical bytes, echelon rows, first generator vector).
    """
    p = _require_prime_field(algebra)
    n = algebra.dim
    check_enum_size(p, n, max_enum)
    hash_vec = _hash_vector(algebra.dim * n)
    seen: dict[bytes, tuple[np.ndarray, np.ndarray]] = {}
    for chunk in _line_chunks(p, n, _chunk_rows_for(n)):
        stacks = products(chunk)
        ranks, reduced = _batched_rref(stacks, p)
        # Zero rows pad every reduced matrix, so whole-matrix bytes are a
        # canonical key.  Deduplicate in bulk on a 64-bit hash of the rows,
        # keeping first occurrences; a full comparison against each hash
        # representative catches collisions and falls back to exact keys.
        flat = reduced.reshape(chunk.shape[0], -1)
        hashes = flat.astype(np.uint64) @ hash_vec
        _, first_indices, inverse = np.unique(
            hashes, return_index=True, return_inverse=True
        )
        if (flat != flat[first_indices[inverse]]).any():
            _, first_indices = np.unique(flat, axis=0, return_index=True)
        for i in sorted(int(ix) for ix in first_indices):
            key = flat[i].tobytes()
            if key not in seen:
                seen[key] = (reduced[i, : ranks[i]].copy(), chunk[i].copy())
    return [(key, rows, gen) for key, (rows, gen) in seen.items()]


def _minimal_among(
    ideals: list[tuple[bytes, np.ndarray, np.ndarray]], p: int
) -> list[tuple[bytes, np.ndarray, np.ndarray]]:
    survivors = []
    for key, rows, gen in ideals:
        is_minimal = True
        for _, other_rows, _ in ideals:
            if other_rows.shape[0] < rows.shape[0] and _subspace_leq(other_rows, rows, p):
                is_minimal = False
                break
        if is_minimal:
            survivors.append((key, rows, gen))
    survivors.sort(key=lambda t: (t[1].shape[0], t[0]))
    return survivors


def _ideal_from_rows(
    algebra: SteinbergAlgebra, rows: np.ndarray, generator: np.ndarray, two_sided=False
) -> LeftIdeal:
    basis = tuple(algebra.from_vector([int(c) for c in row]) for row in rows)
    gen = algebra.from_vector([int(c) for c in generator])
    return LeftIdeal(
        algebra=algebra,
        generators=(gen,),
        basis=basis,
        dimension=len(basis),
        two_sided=two_sided,
    )


def oracle_minimal_ideals(
    algebra: SteinbergAlgebra, max_enum: int | None = None
) -> list[LeftIdeal]:
    """Every minimal left ideal, by full enumeration of cyclic left ideals.

    Each returned ideal records the first enumerated generator; the list is
    sorted by dimension and then by canonical basis, so it is deterministic
    and independent of chunk sizes.
    """
    p = _require_prime_field(algebra)
    left, _ = _action_arrays(algebra)
    ideals = _enumerate_ideals(algebra, lambda c: _left_products(c, left, p), max_enum)
    return [
        _ideal_from_rows(algebra, rows, gen)
        for _, rows, gen in _minimal_among(ideals, p)
    ]


def _socle_rows(algebra: SteinbergAlgebra, ideals: list[LeftIdeal], p: int) -> np.ndarray:
    if not ideals:
        return np.zeros((0, algebra.dim), dtype=np.int64)
    stacked = np.array(
        [[int(c) for c in b.to_vector()] for ideal in ideals for b in ideal.basis],
        dtype=np.int64,
    )
    ranks, reduced = _batched_rref(stacked[None, :, :], p)
    return reduced[0, : ranks[0]]


def oracle_socle(
    algebra: SteinbergAlgebra,
    max_enum: int | None = None,
    minimal: list[LeftIdeal] | None = None,
) -> LeftIdeal:
    """The sum of all minimal left ideals, verified two-sided.

    Pass minimal= to reuse an oracle_minimal_ideals result instead of
    enumerating a second time.
    """
    p = _require_prime_field(algebra)
    if minimal is None:
        minimal = oracle_minimal_ideals(algebra, max_enum)
    rows = _socle_rows(algebra, minimal, p)
    left, right = _action_arrays(algebra)
    if rows.shape[0]:
        left_images = _left_products(rows, left, p).reshape(-1, algebra.dim)
        right_images = _right_products(rows, right, p).reshape(-1, algebra.dim)
        for image in np.concatenate([left_images, right_images]):
            if _reduce_mod_basis(image, rows, p).any():
                raise RuntimeError("socle failed the two-sided closure check")
    ideal = LeftIdeal(
        algebra=algebra,
        generators=tuple(i.generators[0] for i in minimal),
        basis=tuple(algebra.from_vector([int(c) for c in row]) for row in rows),
        dimension=int(rows.shape[0]),
        two_sided=True,
    )
    return ideal


def oracle_minimal_right_ideals(
    algebra: SteinbergAlgebra, max_enum: int | None = None
) -> list[LeftIdeal]:
    """Mirror enumeration for right ideals a A (rows are the products a * 1_g)."""
    p = _require_prime_field(algebra)
    _, right = _action_arrays(algebra)
    ideals = _enumerate_ideals(algebra, lambda c: _right_products(c, right, p), max_enum)
    return [
        _ideal_from_rows(algebra, rows, gen, two_sided=False)
        for _, rows, gen in _minimal_among(ideals, p)
    ]


def oracle_right_socle(
    algebra: SteinbergAlgebra,
    max_enum: int | None = None,
    minimal: list[LeftIdeal] | None = None,
) -> LeftIdeal:
    p = _require_prime_field(algebra)
    if minimal is None:
        minimal = oracle_minimal_right_ideals(algebra, max_enum)
    rows = _socle_rows(algebra, minimal, p)
    return LeftIdeal(
        algebra=algebra,
        generators=tuple(i.generators[0] for i in minimal),
        basis=tuple(algebra.from_vector([int(c) for c in row]) for row in rows),
        dimension=int(rows.shape[0]),
        two_sided=True,
    )


@dataclass
class SemiprimeReport:
    semiprime: bool
    witness: AlgebraElement | None

    def __bool__(self) -> bool:
        return self.semiprime


def oracle_is_semiprime(
    algebra: SteinbergAlgebra, max_enum: int | None = None
) -> SemiprimeReport:
    """Search every nonzero a for the absolute zero divisor property
    a * A * a = 0; the witness is the first such a in enumeration order."""
    p = _require_prime_field(algebra)
    n = algebra.dim
    total = check_enum_size(p, n, max_enum)
    _, right = _action_arrays(algebra)
    triples = _composable_triples(algebra)
    n_g = right.shape[0]
    for chunk in _vector_chunks(p, n, total, _chunk_rows_for(n)):
        count = chunk.shape[0]
        candidates = np.ones(count, dtype=bool)
        for g in range(n_g):
            if not candidates.any():
                break
            targets = right[g]
            defined = targets >= 0
            shifted = np.zeros_like(chunk)  # a * 1_g
            shifted[:, targets[defined]] = chunk[:, defined]
            conv = np.zeros_like(chunk)  # (a * 1_g) * a
            for i, j, k in triples:
                conv[:, k] += shifted[:, i] * chunk[:, j]
            conv %= p
            candidates &= ~conv.any(axis=1)
        if candidates.any():
            first = int(np.argmax(candidates))
            witness = algebra.from_vector([int(c) for c in chunk[first]])
            return SemiprimeReport(semiprime=False, witness=witness)
    return SemiprimeReport(semiprime=True, witness=None)
