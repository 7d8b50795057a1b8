"""q-Matroids: rank functions on the subspace lattice of F_q^n.

A q-matroid is a pair (F_q^n, rho) where rho is bounded by dimension,
monotone and submodular.  The two sources used here are Gabidulin
rank-metric codes (rho(U) = rank of G Y^T over the extension field) and
the uniform q-matroid rho(X) = min(dim X, k).  Duality, conullity,
q-flats, q-cycles and restriction are all derived from the rank oracle,
which is memoized per canonical subspace.
"""

from __future__ import annotations

from .errors import InputError
from .fields import FieldTower
from .linalg import (
    DEFAULT_SUBSPACE_CAP,
    GF,
    Subspace,
    all_subspaces,
    enumerate_subspaces,
    mat_mul,
    mat_rank,
    rank_support,
)


class GabidulinCode:
    """A k-dimensional F_{q^m}-linear code in F_{q^m}^n, given by a generator matrix.

    ``tower`` must contain the designated base level F_q and, one extension
    step above it, the code field F_{q^m}.  The generator matrix must have
    full rank k over F_{q^m}; degenerate inputs are rejected.
    """

    def __init__(self, tower: FieldTower, q_level: int, code_level: int, generator):
        q_level = tower._idx(q_level)
        code_level = tower._idx(code_level)
        if code_level <= q_level:
            raise InputError("code level must lie above the base level")
        self.tower = tower
        self.q_level = q_level
        self.code_level = code_level
        self.gf_q = GF(tower, q_level)
        self.gf_code = GF(tower, code_level)
        self.G = tuple(tuple(int(x) for x in row) for row in generator)
        self.k = len(self.G)
        self.n = len(self.G[0]) if self.G else 0
        if any(len(row) != self.n for row in self.G):
            raise InputError("ragged generator matrix")
        if any(not (0 <= x < self.gf_code.size) for row in self.G for x in row):
            raise InputError("generator entry out of range for the code field")
        if self.k and mat_rank(self.gf_code, self.G) != self.k:
            raise InputError("generator matrix does not have full rank")

    @property
    def q(self) -> int:
        return self.gf_q.size

    @property
    def m(self) -> int:
        return self.tower.ext_degree(self.code_level, self.q_level)

    @property
    def Q(self) -> int:
        return self.gf_code.size

    @classmethod
    def mrd(cls, tower: FieldTower, q_level: int, code_level: int, anchors, k: int):
        """Gabidulin construction: rows (a_j^{q^i}) for i = 0..k-1.

        The anchors must be linearly independent over F_q and m >= n >= k.
        """
        anchors = tuple(int(a) for a in anchors)
        n = len(anchors)
        m = tower.ext_degree(code_level, q_level)
        if not (k <= n <= m):
            raise InputError(f"MRD construction needs k <= n <= m, got k={k}, n={n}, m={m}")
        gf_q = GF(tower, q_level)
        support = rank_support(tower, code_level, q_level, anchors, gf_q)
        if support.dim != n:
            raise InputError("MRD anchors must be linearly independent over the base field")
        rows = []
        row = anchors
        for _ in range(k):
            rows.append(row)
            row = tuple(
                tower.frobenius(a, code_level, q_level) for a in row
            )
        return cls(tower, q_level, code_level, rows)

    def codeword(self, message):
        """Word u . G for a message over the code field (or an extension of it)."""
        gf = self.gf_code
        return mat_mul(gf, (tuple(message),), self.G)[0]

    def qmatroid(self) -> "QMatroid":
        return qmatroid_from_code(self)

    def __repr__(self):
        return f"GabidulinCode(q={self.q}, m={self.m}, n={self.n}, k={self.k})"


class QMatroid:
    """Ambient (n, q) with a memoized rank oracle on canonical subspaces."""

    def __init__(self, gf: GF, n: int, rank_fn, name: str = ""):
        self.gf = gf
        self.n = n
        self.q = gf.size
        self._rank_fn = rank_fn
        self._memo: dict[Subspace, int] = {}
        self.name = name

    # -- rank and derived functions ------------------------------------

    def rank(self, X: Subspace) -> int:
        value = self._memo.get(X)
        if value is None:
            value = self._rank_fn(X)
            self._memo[X] = value
        return value

    @property
    def full_space(self) -> Subspace:
        return Subspace.full(self.gf, self.n)

    @property
    def full_rank(self) -> int:
        return self.rank(self.full_space)

    def nullity(self, X: Subspace) -> int:
        return X.dim - self.rank(X)

    def dual_rank(self, X: Subspace) -> int:
        return X.dim + self.rank(X.complement()) - self.full_rank

    def conullity(self, X: Subspace) -> int:
        """dim X - rho*(X) = rho(E) - rho(X^perp); dim of the subcode inside X."""
        return self.full_rank - self.rank(X.complement())

    def dual(self) -> "QMatroid":
        return QMatroid(self.gf, self.n, self.dual_rank, name=f"dual({self.name})")

    # -- flats and cycles ----------------------------------------------

    def is_qflat(self, F: Subspace) -> bool:
        """True iff adjoining any outside line strictly increases the rank."""
        rF = self.rank(F)
        for line in enumerate_subspaces(self.gf, self.n, 1, cap=None):
            if F.contains(line):
                continue
            if self.rank(F.sum(line)) == rF:
                return False
        return True

    def qflats(self, cap: int | None = DEFAULT_SUBSPACE_CAP):
        return [X for X in all_subspaces(self.gf, self.n, cap=cap) if self.is_qflat(X)]

    def is_qcycle(self, X: Subspace) -> bool:
        """Minimal among subspaces of its nullity.

        Nullity drops by at most one per codimension step, so X is minimal
        iff every codimension-1 subspace of X has the same rank as X (for
        nullity 0 only the zero subspace qualifies).
        """
        eta = self.nullity(X)
        if eta == 0:
            return X.dim == 0
        rX = self.rank(X)
        for hyper in enumerate_subspaces(self.gf, self.n, X.dim - 1, ambient=X, cap=None):
            if self.rank(hyper) != rX:
                return False
        return True

    def qcycles(self, cap: int | None = DEFAULT_SUBSPACE_CAP):
        """All q-cycles with their nullities, by increasing (dimension, basis)."""
        out = []
        for X in all_subspaces(self.gf, self.n, cap=cap):
            if self.is_qcycle(X):
                out.append((X, self.nullity(X)))
        return out

    # -- restriction ----------------------------------------------------

    def restrict(self, U: Subspace) -> "QMatroid":
        """q-Matroid on the chart of U whose conullity agrees with this one.

        The chart is the RREF basis of U; conullity (and hence every
        downstream lattice quantity) is chart-independent.
        """
        s = U.dim
        gf = self.gf

        def restricted_conullity(V: Subspace) -> int:
            return self.conullity(U.embed_subspace(V))

        def rho(W: Subspace) -> int:
            # rho_U = double dual within the chart: conullity pins rho*_U,
            # and rho_U(W) = dim W + rho*_U(W^perp) - rho*_U(chart).
            def rho_star(V: Subspace) -> int:
                return V.dim - restricted_conullity(V)

            full = Subspace.full(gf, s)
            return W.dim + rho_star(W.complement()) - rho_star(full)

        return QMatroid(gf, s, rho, name=f"{self.name}|U")

    # -- axiom verification ---------------------------------------------

    def verify_axioms(self, cap: int | None = DEFAULT_SUBSPACE_CAP) -> dict:
        """Check (P1) on all subspaces and (P2), (P3) on all pairs.

        Returns {"ok": bool, "violation": description-or-None}.
        """
        subs = list(all_subspaces(self.gf, self.n, cap=cap))
        for X in subs:
            r = self.rank(X)
            if not (0 <= r <= X.dim):
                return {"ok": False, "violation": {
                    "axiom": "P1", "X": X.serialize(), "rank": r}}
        for X in subs:
            rX = self.rank(X)
            for Y in subs:
                if X.dim <= Y.dim and Y.contains(X):
                    if rX > self.rank(Y):
                        return {"ok": False, "violation": {
                            "axiom": "P2", "X": X.serialize(), "Y": Y.serialize()}}
        for i, X in enumerate(subs):
            for Y in subs[i:]:
                lhs = self.rank(X.sum(Y)) + self.rank(X.intersect(Y))
                if lhs > self.rank(X) + self.rank(Y):
                    return {"ok": False, "violation": {
                        "axiom": "P3", "X": X.serialize(), "Y": Y.serialize()}}
        return {"ok": True, "violation": None}


def qmatroid_from_code(code: GabidulinCode) -> QMatroid:
    """rho(U) = rank over F_{q^m} of G Y^T, Y the RREF basis of U."""
    gf_q = GF(code.tower, code.q_level)
    gf_code = code.gf_code
    G = code.G

    def rho(U: Subspace) -> int:
        if U.dim == 0:
            return 0
        # base-field encodings embed into the code field unchanged
        Yt = tuple(zip(*U.rows))
        return mat_rank(gf_code, mat_mul(gf_code, G, Yt))

    return QMatroid(gf_q, code.n, rho, name="code")


def uniform_qmatroid(k: int, n: int, q: int) -> QMatroid:
    """U(k, n): rho(X) = min(dim X, k)."""
    if not (0 <= k <= n):
        raise InputError(f"uniform q-matroid needs 0 <= k <= n, got k={k}, n={n}")
    gf = GF.of_order(q)
    return QMatroid(gf, n, lambda X: min(X.dim, k), name=f"U({k},{n})")
