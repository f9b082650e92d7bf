"""The lattice attached to a finite abelian group.

A vector of length N = |P| indexed by the group elements lies in the lattice
exactly when its coordinates sum to zero and the group-weighted sum of its
coordinates is the identity; equivalently, read as a divisor supported on the
group, it is principal. For cyclic groups this is the classical sublattice of
A_{N-1} cut out by sum(i * x_i) = 0 mod N.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .errors import BadSize, InternalInconsistency, LengthMismatch, NotInAn, OracleBoundExceeded
from .exact import det_bareiss, int_rank, row_echelon_int
from .groups import AbelianGroup

Vector = tuple[int, ...]

SVP_ORACLE_MAX_DIM = 12


@dataclass(frozen=True)
class GramReport:
    """Exact Gram matrix of a vector list and its exact determinant."""

    gram: tuple[tuple[int, ...], ...]
    det: int


@dataclass(frozen=True)
class Lattice:
    group: AbelianGroup

    @property
    def dim(self) -> int:
        """Ambient dimension N = |P|; the lattice itself has rank N - 1."""
        return self.group.order

    @property
    def rank(self) -> int:
        return self.dim - 1

    def contains(self, v: Vector) -> bool:
        """Membership: zero coordinate sum and group-weighted sum equal to identity."""
        g = self.group
        if len(v) != g.order:
            raise LengthMismatch(f"expected length {g.order}, got {len(v)}")
        if sum(v) != 0:
            return False
        wa = wb = 0
        for c, (a, b) in zip(v, g.elements()):
            wa += c * a
            wb += c * b
        return wa % g.m == 0 and wb % g.n == 0

    def minimal_distance_sq(self) -> int:
        """Squared minimal distance: 4 for N >= 4, 6 for N = 3, 8 for N = 2.

        At oracle-friendly sizes the closed form is cross-checked once per
        group shape against the exhaustive short-vector search.
        """
        N = self.dim
        if N < 2:
            raise BadSize("the lattice needs a group of order at least 2")
        closed = 8 if N == 2 else 6 if N == 3 else 4
        if N <= SVP_ORACLE_MAX_DIM:
            _check_oracle_minimum(self.group.m, self.group.n, closed)
        return closed

    def minimal_vectors(self) -> list[Vector]:
        """All minimal vectors, sorted lexicographically.

        For N >= 4 these are e_P + e_Q - e_R - e_S over unordered pairs
        {P, Q} != {R, S} of distinct elements with P + Q = R + S (distinct
        pairs with equal sum are automatically disjoint); for N = 2 and 3
        the short explicit lists.
        """
        g = self.group
        N = g.order
        if N < 2:
            raise BadSize("the lattice needs a group of order at least 2")
        if N == 2:
            return [(-2, 2), (2, -2)]
        if N == 3:
            base = [(-2, 1, 1), (1, -2, 1), (1, 1, -2)]
            out3 = base + [tuple(-c for c in v) for v in base]
            return sorted(out3)
        elems = g.elements()
        by_sum: dict[tuple[int, int], list[tuple[int, int]]] = {}
        for i in range(N):
            for j in range(i + 1, N):
                by_sum.setdefault(g.add(elems[i], elems[j]), []).append((i, j))
        out: list[Vector] = []
        for pairs in by_sum.values():
            for pos in pairs:
                for neg in pairs:
                    if pos == neg:
                        continue
                    v = [0] * N
                    v[pos[0]] = v[pos[1]] = 1
                    v[neg[0]] = v[neg[1]] = -1
                    out.append(tuple(v))
        out.sort()
        return out

    def count_minimal_vectors(self) -> int:
        """Number of minimal vectors, by the same pair-sum enumeration as
        minimal_vectors but without materializing the vectors."""
        g = self.group
        N = g.order
        if N < 2:
            raise BadSize("the lattice needs a group of order at least 2")
        if N == 2:
            return 2
        if N == 3:
            return 6
        elems = g.elements()
        class_sizes: dict[tuple[int, int], int] = {}
        for i in range(N):
            for j in range(i + 1, N):
                s = g.add(elems[i], elems[j])
                class_sizes[s] = class_sizes.get(s, 0) + 1
        return sum(k * (k - 1) for k in class_sizes.values())

    def svp_oracle(self, norm_sq_bound: int, *, max_dim: int = SVP_ORACLE_MAX_DIM) -> list[Vector]:
        """Every nonzero lattice vector with squared norm <= the bound, sorted.

        Depth-first search over integer coordinates with partial-norm pruning
        and the zero-sum constraint; independent of the pair-sum
        characterization used by minimal_vectors.
        """
        g = self.group
        N = g.order
        if N > max_dim:
            raise OracleBoundExceeded(f"N = {N} exceeds the oracle bound {max_dim}")
        if N < 2:
            raise BadSize("the lattice needs a group of order at least 2")
        bound = int(norm_sq_bound)
        if bound < 0:
            return []
        elems = g.elements()
        avals = [a for a, _ in elems]
        bvals = [b for _, b in elems]
        m, n = g.m, g.n
        out: list[Vector] = []
        coords = [0] * N

        def dfs(i: int, norm: int, total: int, wa: int, wb: int) -> None:
            if i == N - 1:
                x = -total
                nn = norm + x * x
                if 0 < nn <= bound and (wa + x * avals[i]) % m == 0 and (wb + x * bvals[i]) % n == 0:
                    coords[i] = x
                    out.append(tuple(coords))
                return
            top = isqrt(bound - norm)
            for x in range(-top, top + 1):
                nn = norm + x * x
                # the remaining coordinates must cancel the running sum, and
                # each unit of cancellation costs at least 1 in squared norm
                if nn + abs(total + x) > bound:
                    continue
                coords[i] = x
                dfs(i + 1, nn, total + x, wa + x * avals[i], wb + x * bvals[i])

        dfs(0, 0, 0, 0, 0)
        return sorted(out)

    def determinant_sq(self) -> int:
        """Exact squared determinant N^3 (the determinant itself is N^{3/2})."""
        N = self.dim
        if N < 2:
            raise BadSize("the lattice needs a group of order at least 2")
        return N**3

    def index_in_An(self) -> int:
        """Index [A_{N-1} : L] = N, cross-checked against the determinant ratio."""
        N = self.dim
        ratio_sq, rem = divmod(self.determinant_sq(), N)  # det(A_{N-1})^2 = N
        index = isqrt(ratio_sq)
        if rem != 0 or index * index != ratio_sq or index != N:
            raise InternalInconsistency("determinant ratio does not give a square index")
        return index


@lru_cache(maxsize=None)
def _check_oracle_minimum(m: int, n: int, expected: int) -> bool:
    lat = Lattice(AbelianGroup(m, n))
    found = lat.svp_oracle(expected)
    if not found or min(sum(c * c for c in v) for v in found) != expected:
        raise InternalInconsistency(
            f"oracle minimum disagrees with the closed form {expected} for shape ({m}, {n})"
        )
    return True


def divisor_degree(v: Vector) -> int:
    """Degree of the divisor a zero-sum vector encodes: the sum of its positive entries."""
    if sum(v) != 0:
        raise NotInAn("coordinates must sum to zero")
    return sum(c for c in v if c > 0)


def gram_matrix(vectors: list[Vector]) -> list[list[int]]:
    k = len(vectors)
    if k and any(len(v) != len(vectors[0]) for v in vectors):
        raise LengthMismatch("vectors must all have the same length")
    return [[sum(a * b for a, b in zip(vectors[i], vectors[j])) for j in range(k)] for i in range(k)]


def gram_report(vectors: list[Vector]) -> GramReport:
    """Exact integer Gram matrix and its exact determinant."""
    gram = gram_matrix(vectors)
    return GramReport(tuple(tuple(row) for row in gram), det_bareiss(gram))


def span_rank(vectors: list[Vector]) -> int:
    """Rank over the rationals of the span of the vectors."""
    return int_rank([list(v) for v in vectors])


def index_from_generators(vectors: list[Vector]) -> int:
    """Index in A_{N-1} of the sublattice the vectors generate, by Hermite normal form.

    Vectors are rewritten in the standard basis e_{i-1} - e_i of A_{N-1}
    (coordinates are prefix sums), echelonized exactly, and the index is the
    product of the pivots. Returns 0 when the span has deficient rank.
    """
    if not vectors:
        raise ValueError("need at least one generator")
    N = len(vectors[0])
    coords = []
    for v in vectors:
        if len(v) != N:
            raise LengthMismatch("vectors must all have the same length")
        if sum(v) != 0:
            raise NotInAn("generators must lie in A_{N-1}")
        prefix = []
        acc = 0
        for c in v[:-1]:
            acc += c
            prefix.append(acc)
        coords.append(prefix)
    echelon = row_echelon_int(coords)
    if len(echelon) < N - 1:
        return 0
    index = 1
    for r, row in enumerate(echelon):
        index *= row[r]
    return index
