"""Brute-force ground truth, independent of the lattice pipeline.

Everything here recomputes spectra and structure from first principles:
codeword enumeration over extension fields, subcode enumeration, the
classical matroid on projective points, and a subset inclusion-exclusion
form of the weight polynomial.  The oracles share only the field and
linear-algebra layers with the fast pipeline, on purpose.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from itertools import product

import numpy as np

from . import _kernels
from .errors import InputError, ResourceLimitError, StructuralError
from .linalg import (
    DEFAULT_SUBSPACE_CAP,
    GF,
    Subspace,
    enumerate_subspaces,
    gaussian_binomial,
    rank_support,
)
from .qmatroid import GabidulinCode, QMatroid
from .spectra import WeightPolynomial

DEFAULT_CODEWORD_CAP = 1 << 24
_BITMASK_GROUND_LIMIT = 31


def _extension_setup(code: GabidulinCode, r: int):
    """Tower containing F_{Q^r} one step above the code field."""
    if r < 1:
        raise InputError(f"extension degree must be >= 1, got {r}")
    if r == 1:
        return code.tower, code.code_level
    if code.code_level != code.tower.top_level:
        raise InputError("extension requires the code field at the top of its tower")
    tower = code.tower.extend(code.tower.find_irreducible(r, code.code_level))
    return tower, tower.top_level


def brute_spectrum(code: GabidulinCode, r: int = 1,
                   cap: int = DEFAULT_CODEWORD_CAP,
                   threads: int = 1,
                   use_numba: bool | None = None):
    """Rank-weight distribution of the r-th extension code by full enumeration.

    Every message of F_{Q^r}^k is encoded and the GF(q) rank of its
    codeword expansion tallied.  Binary base fields go through the packed
    bit kernels; other characteristics take a scalar path.
    """
    tower, ext_level = _extension_setup(code, r)
    Qt = tower.sizes[ext_level]
    total = Qt**code.k
    if total > cap:
        raise ResourceLimitError(
            f"enumeration of {total} codewords exceeds cap {cap}",
            required=total, cap=cap,
        )
    n = code.n
    if code.k == 0:
        return [1] + [0] * n
    if code.q == 2 and n <= 64:
        mtilde = tower.ext_degree(ext_level, code.q_level)
        contrib = np.zeros((code.k, Qt, n), dtype=np.uint64)
        for t in range(code.k):
            for v in range(Qt):
                for j in range(n):
                    contrib[t, v, j] = tower.mul(v, code.G[t][j], ext_level)
        if threads <= 1:
            counts = _kernels.spectrum_counts(contrib, mtilde, use_numba=use_numba)
        else:
            bounds = [total * t // threads for t in range(threads + 1)]
            with ThreadPoolExecutor(max_workers=threads) as pool:
                parts = pool.map(
                    lambda se: _kernels.spectrum_counts(
                        contrib, mtilde, se[0], se[1], use_numba=use_numba),
                    zip(bounds, bounds[1:]),
                )
                counts = sum(parts)
        return [int(c) for c in counts]
    counts = [0] * (n + 1)
    G = code.G
    for message in product(range(Qt), repeat=code.k):
        word = [0] * n
        for t, u in enumerate(message):
            if u == 0:
                continue
            for j in range(n):
                word[j] = tower.add(word[j], tower.mul(u, G[t][j], ext_level), ext_level)
        counts[rank_support(tower, ext_level, code.q_level, word).dim] += 1
    return counts


def brute_higher(code: GabidulinCode, i: int,
                 cap: int = DEFAULT_SUBSPACE_CAP):
    """A^(i)_w by enumerating i-dimensional subcodes.

    The rank support of a subcode is the sum of the supports of any basis
    (entrywise scaling acts invertibly on the expansion rows), so only
    basis codewords are expanded.
    """
    if not (0 <= i <= code.k):
        raise InputError(f"subcode dimension {i} out of range")
    n = code.n
    if i == 0:
        return [1] + [0] * n
    gf_code = code.gf_code
    counts = [0] * (n + 1)
    for D in enumerate_subspaces(gf_code, code.k, i, cap=cap):
        support = Subspace.zero(code.gf_q, n)
        for message in D.rows:
            word = code.codeword(message)
            support = support.sum(
                rank_support(code.tower, code.code_level, code.q_level, word))
        counts[support.dim] += 1
    return counts


class ClassicalMatroid:
    """Matroid on the projective points of the ambient space of a q-matroid.

    Ground set: the one-dimensional subspaces in enumeration order, as
    bitmask positions; rank of a point set = q-matroid rank of its span.
    """

    def __init__(self, M: QMatroid, seed: int = 0):
        self.M = M
        self.points = list(enumerate_subspaces(M.gf, M.n, 1, cap=None))
        size = len(self.points)
        if size > _BITMASK_GROUND_LIMIT:
            raise ResourceLimitError(
                f"classical ground set of {size} points exceeds the bitmask limit",
                required=size, cap=_BITMASK_GROUND_LIMIT,
            )
        self.size = size
        self.full_mask = (1 << size) - 1
        self._span_memo = {0: Subspace.zero(M.gf, M.n)}
        self._rank_memo = {0: 0}
        self.full_rank = self.rank(self.full_mask)
        self._spot_check_axioms(seed)

    def _span(self, mask: int) -> Subspace:
        span = self._span_memo.get(mask)
        if span is None:
            t = (mask & -mask).bit_length() - 1
            span = self._span(mask ^ 1 << t).sum(self.points[t])
            self._span_memo[mask] = span
        return span

    def rank(self, mask: int) -> int:
        value = self._rank_memo.get(mask)
        if value is None:
            value = self.M.rank(self._span(mask))
            self._rank_memo[mask] = value
        return value

    def dual_rank(self, mask: int) -> int:
        return bin(mask).count("1") + self.rank(self.full_mask ^ mask) - self.full_rank

    def dual_nullity(self, mask: int) -> int:
        return bin(mask).count("1") - self.dual_rank(mask)

    def closure(self, mask: int) -> int:
        r = self.rank(mask)
        out = mask
        for t in range(self.size):
            if not (mask >> t & 1) and self.rank(mask | 1 << t) == r:
                out |= 1 << t
        return out

    def flats(self):
        """All flats, found as closures grown point by point from the bottom."""
        found = {self.closure(0)}
        frontier = list(found)
        while frontier:
            nxt = []
            for F in frontier:
                for t in range(self.size):
                    if F >> t & 1:
                        continue
                    G = self.closure(F | 1 << t)
                    if G not in found:
                        found.add(G)
                        nxt.append(G)
            frontier = nxt
        return sorted(found)

    def dual_cycles(self):
        """Sets minimal among subsets of their dual nullity, with that nullity.

        Equivalent single-deletion test: every one-element deletion keeps
        the dual rank (so the nullity drops).  Full subset scan.
        """
        out = []
        for mask in range(self.full_mask + 1):
            if mask == 0:
                out.append((0, 0))
                continue
            r = self.dual_rank(mask)
            if bin(mask).count("1") == r:
                continue
            ok = True
            for t in range(self.size):
                if mask >> t & 1 and self.dual_rank(mask ^ 1 << t) != r:
                    ok = False
                    break
            if ok:
                out.append((mask, self.dual_nullity(mask)))
        return out

    def _spot_check_axioms(self, seed: int, pairs: int = 200):
        rng = random.Random(seed)
        for _ in range(pairs):
            A = rng.randrange(self.full_mask + 1)
            B = rng.randrange(self.full_mask + 1)
            rA, rB = self.rank(A), self.rank(B)
            if not (0 <= rA <= bin(A).count("1")):
                raise StructuralError(f"classical rank bound fails on {A:b}")
            if self.rank(A | B) < max(rA, rB):
                raise StructuralError("classical rank not monotone")
            if self.rank(A | B) + self.rank(A & B) > rA + rB:
                raise StructuralError(
                    f"classical submodularity fails on {A:b}, {B:b}")


def build_classical_matroid(M: QMatroid, seed: int = 0) -> ClassicalMatroid:
    return ClassicalMatroid(M, seed=seed)


def verify_lattice_isomorphism(M: QMatroid,
                               cap: int | None = DEFAULT_SUBSPACE_CAP) -> dict:
    """Match q-structure against the classical matroid on projective points.

    Checks that flats are exactly the point sets of q-flats, that the
    dual's minimal-in-nullity sets are exactly the flat complements with
    the expected cardinalities, and that mapping a dual q-cycle X to the
    complement of the points of X-perp is a rank- and order-preserving
    bijection onto them.  Any mismatch raises with a witness.
    """
    cl = build_classical_matroid(M)
    n, q = M.n, M.q
    point_index = {P: t for t, P in enumerate(cl.points)}

    def point_mask(X: Subspace) -> int:
        mask = 0
        for P, t in point_index.items():
            if X.contains(P):
                mask |= 1 << t
        return mask

    qflats = M.qflats(cap=cap)
    flat_masks = {point_mask(F): F for F in qflats}
    classical_flats = set(cl.flats())
    if set(flat_masks) != classical_flats:
        raise StructuralError(
            "flats of the classical matroid do not match the q-flats: "
            f"{sorted(classical_flats)} vs {sorted(flat_masks)}"
        )
    grading = [sum(q ** (n - t) for t in range(1, j + 1)) for j in range(n + 1)]
    dual_cycles = {mask: eta for mask, eta in cl.dual_cycles()}
    complements = {cl.full_mask ^ mask for mask in flat_masks}
    if set(dual_cycles) != complements:
        raise StructuralError("dual cycles are not the flat complements")
    for mask, F in flat_masks.items():
        card = bin(cl.full_mask ^ mask).count("1")
        if card != grading[n - F.dim]:
            raise StructuralError(
                f"flat complement of dim-{F.dim} q-flat has size {card}, "
                f"expected {grading[n - F.dim]}"
            )
    dual = M.dual()
    qcycles = dual.qcycles(cap=cap)
    mapping = {}
    for X, eta in qcycles:
        image = cl.full_mask ^ point_mask(X.complement())
        if image not in dual_cycles:
            raise StructuralError(
                f"q-cycle image {image:b} is not a classical dual cycle")
        if dual_cycles[image] != eta:
            raise StructuralError(
                f"nullity mismatch on q-cycle of dim {X.dim}: "
                f"{eta} vs {dual_cycles[image]}"
            )
        mapping[X] = image
    if len(mapping) != len(dual_cycles):
        raise StructuralError(
            f"{len(mapping)} q-cycles vs {len(dual_cycles)} classical dual cycles")
    cycles = [X for X, _ in qcycles]
    for X in cycles:
        for Y in cycles:
            if X.contains(Y) != (mapping[X] & mapping[Y] == mapping[Y]):
                raise StructuralError(
                    "inclusion order not preserved by the cycle correspondence")
    return {
        "ok": True,
        "flats": len(flat_masks),
        "cycles": len(mapping),
        "points": cl.size,
    }


def inclusion_exclusion_poly(M: QMatroid, U: Subspace,
                             max_points: int = 15) -> WeightPolynomial:
    """Weight-polynomial contribution of one subspace via subset alternation.

    Signed sum over all subsets of the projective points of U, exponent
    the dual nullity in the classical matroid of the restriction to U,
    with a global sign fixed by the parity of the point count.
    """
    s = U.dim
    if s == 0:
        return WeightPolynomial([1])
    restricted = M.restrict(U)
    cl = build_classical_matroid(restricted)
    if cl.size > max_points:
        raise ResourceLimitError(
            f"{cl.size} points exceed the inclusion-exclusion limit",
            required=cl.size, cap=max_points,
        )
    coeffs = [0] * (restricted.full_rank + 1)
    global_sign = (-1) ** cl.size
    for mask in range(cl.full_mask + 1):
        sign = global_sign * (-1) ** bin(mask).count("1")
        coeffs[cl.dual_nullity(mask)] += sign
    return WeightPolynomial(coeffs)
