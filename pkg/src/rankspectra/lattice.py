"""The lattice of q-cycles of the dual q-matroid, and its Betti tables.

The nodes are the q-cycles of M*, ordered by inclusion and ranked by
nullity.  Moebius values on the lattice, and on its collapsed versions
(all nodes of rank <= l identified with the bottom), stand in for the
graded Betti numbers of the associated simplicial-complex resolutions:
the (l, i, j) entry aggregates (-1)^i mu^(l)(0, P) over nodes P of rank
l + i and dimension j, which is nonnegative for geometric lattices.
"""

from __future__ import annotations

from .errors import StructuralError
from .linalg import DEFAULT_SUBSPACE_CAP
from .qmatroid import QMatroid


class CycleLattice:
    """q-cycles of M* ordered by inclusion; rank of a node = its nullity."""

    def __init__(self, matroid: QMatroid, nodes, nullities):
        self.matroid = matroid
        self.n = matroid.n
        self.q = matroid.q
        self.k = matroid.full_rank
        order = sorted(range(len(nodes)),
                       key=lambda i: (nullities[i], nodes[i].dim, nodes[i].rows))
        self.nodes = [nodes[i] for i in order]
        self.nullity = [nullities[i] for i in order]
        self.dims = [X.dim for X in self.nodes]
        size = len(self.nodes)
        # strictly-below relation as index sets (desk-scale lattices)
        self.below = [
            frozenset(
                j for j in range(size)
                if j != i and self.nodes[i].contains(self.nodes[j])
            )
            for i in range(size)
        ]
        self._mobius = {}
        self._validate()

    # -- structure checks ----------------------------------------------

    def _validate(self):
        if not self.nodes or self.nodes[0].dim != 0 or self.nullity[0] != 0:
            raise StructuralError("lattice must have the zero subspace as unique bottom")
        if sum(1 for r in self.nullity if r == 0) != 1:
            raise StructuralError("more than one rank-0 node")
        size = len(self.nodes)
        # Jordan-Dedekind: every covering step raises the rank by exactly one
        for i in range(size):
            for j in self.below[i]:
                is_cover = not any(
                    t in self.below[i] and j in self.below[t] for t in range(size)
                )
                if is_cover and self.nullity[i] != self.nullity[j] + 1:
                    raise StructuralError(
                        "Jordan-Dedekind violated between nodes of ranks "
                        f"{self.nullity[j]} and {self.nullity[i]}"
                    )
        # meet well-defined: common lower bounds have a unique maximum
        for i in range(size):
            below_i = self.below[i] | {i}
            for j in range(i + 1, size):
                common = below_i & (self.below[j] | {j})
                maximal = [
                    t for t in common
                    if not any(t in self.below[u] for u in common)
                ]
                if len(maximal) != 1:
                    raise StructuralError("lattice meet is not unique")
        if max(self.nullity) != self.k:
            raise StructuralError(
                f"lattice height {max(self.nullity)} differs from rank {self.k}"
            )

    # -- Moebius functions ----------------------------------------------

    def mobius_bottom(self, node_index: int, l: int = 0) -> int:
        """mu of the l-collapsed lattice from the bottom to a node.

        Nodes of rank <= l are identified with the bottom (mu = 1 there);
        the recursion runs over surviving nodes in increasing rank order.
        """
        if not (0 <= l <= self.k):
            raise StructuralError(f"elongation level {l} out of range")
        if self.nullity[node_index] <= l:
            return 1
        key = (node_index, l)
        value = self._mobius.get(key)
        if value is None:
            acc = -1  # collapsed bottom contributes mu = 1
            for j in self.below[node_index]:
                if self.nullity[j] > l:
                    acc -= self.mobius_bottom(j, l)
            self._mobius[key] = value = acc
        return value

    def __len__(self):
        return len(self.nodes)


class BettiTable:
    """Map (l, i, j) -> nonnegative integer, j the q-cycle dimension.

    Carries the convention entry (l, 0, 0) = 1 for every elongation level,
    so that the degree-0 weight polynomial comes out as 1.
    """

    def __init__(self, n: int, q: int, k: int, entries: dict):
        self.n = n
        self.q = q
        self.k = k
        self.entries = dict(entries)
        for l in range(k + 1):
            self.entries.setdefault((l, 0, 0), 1)

    def get(self, l: int, i: int, j: int) -> int:
        if l < 0:
            return 0
        return self.entries.get((l, i, j), 0)

    def classical_grading(self, j: int) -> int:
        """[j] = q^{n-1} + ... + q^{n-j}."""
        return sum(self.q ** (self.n - t) for t in range(1, j + 1))

    def phi(self, l: int, j: int) -> int:
        """Alternating sum over the homological index at fixed (l, j)."""
        return sum(
            (-1) ** i * v for (ll, i, jj), v in self.entries.items()
            if ll == l and jj == j
        )

    def min_nonzero_dim(self, i: int, l: int = 0):
        dims = [j for (ll, ii, j), v in self.entries.items()
                if ll == l and ii == i and v != 0]
        return min(dims) if dims else None

    def to_records(self):
        recs = [
            {"l": l, "i": i, "j_dim": j,
             "j_classical": self.classical_grading(j), "value": v}
            for (l, i, j), v in self.entries.items()
        ]
        recs.sort(key=lambda r: (r["l"], r["i"], r["j_dim"]))
        return recs

    def __eq__(self, other):
        return isinstance(other, BettiTable) and (
            self.n, self.q, self.k) == (other.n, other.q, other.k) and {
            key: v for key, v in self.entries.items() if v
        } == {key: v for key, v in other.entries.items() if v}


def build_cycle_lattice(M: QMatroid, cap: int | None = DEFAULT_SUBSPACE_CAP) -> CycleLattice:
    """Lattice of q-cycles of M* (the caller passes the primal matroid)."""
    dual = M.dual()
    cycles = dual.qcycles(cap=cap)
    nodes = [X for X, _ in cycles]
    nullities = [eta for _, eta in cycles]
    return CycleLattice(M, nodes, nullities)


def virtual_betti_table(L: CycleLattice) -> BettiTable:
    """Aggregate signed Moebius values into the (l, i, j) Betti table.

    Every node P with rank > l contributes (-1)^(rank-l) mu^(l)(0, P) to
    entry (l, rank - l, dim P); geometric-lattice sign alternation makes
    each contribution nonnegative, which is asserted.
    """
    entries: dict[tuple[int, int, int], int] = {}
    for l in range(L.k + 1):
        for idx in range(len(L.nodes)):
            r = L.nullity[idx]
            if r <= l:
                continue
            i = r - l
            value = (-1) ** i * L.mobius_bottom(idx, l)
            if value < 0 or (l == 0 and value == 0):
                raise StructuralError(
                    f"Moebius sign alternation failed at node dim={L.dims[idx]}, "
                    f"rank={r}, l={l}: signed value {value}"
                )
            key = (l, i, L.dims[idx])
            entries[key] = entries.get(key, 0) + value
    return BettiTable(L.n, L.q, L.k, entries)
