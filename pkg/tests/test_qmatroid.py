import pytest

from rankspectra import (
    GabidulinCode,
    InputError,
    Subspace,
    all_subspaces,
    enumerate_subspaces,
    prime_field,
    uniform_qmatroid,
)


def test_generator_must_be_full_rank(tower16):
    with pytest.raises(InputError):
        GabidulinCode(tower16, 0, 1, [[1, 2, 3, 4], [2, 4, 6, 8]])


def test_code_parameters(example_code):
    assert (example_code.q, example_code.m, example_code.n, example_code.k) == (2, 4, 4, 3)
    assert example_code.Q == 16


def test_mrd_construction_rows(tower16, mrd_code):
    # second row applies x -> x^2 entrywise
    assert mrd_code.G[0] == (1, 2, 4, 8)
    assert mrd_code.G[1] == tuple(tower16.frobenius(a, 1, 0) for a in (1, 2, 4, 8))


def test_mrd_rejects_dependent_anchors(tower16):
    with pytest.raises(InputError):
        GabidulinCode.mrd(tower16, 0, 1, [1, 2, 4, 7], 2)  # 7 = 1 + 2 + 4


def test_full_rank_is_k(example_matroid):
    assert example_matroid.full_rank == 3


def test_rank_monotone_bounded(example_matroid):
    M = example_matroid
    for X in all_subspaces(M.gf, M.n):
        assert 0 <= M.rank(X) <= min(X.dim, M.full_rank)


def test_axioms_example_code(example_matroid):
    assert example_matroid.verify_axioms()["ok"]


@pytest.mark.parametrize("k,n,q", [(0, 3, 2), (1, 3, 2), (2, 4, 2), (2, 3, 3), (3, 3, 3)])
def test_axioms_uniform(k, n, q):
    assert uniform_qmatroid(k, n, q).verify_axioms()["ok"]


def test_axioms_dual(uniform24):
    assert uniform24.dual().verify_axioms()["ok"]


def test_dual_involution(example_matroid):
    M = example_matroid
    dd = M.dual().dual()
    for X in all_subspaces(M.gf, M.n):
        assert dd.rank(X) == M.rank(X)


def test_conullity_counts_subcode(example_code, example_matroid):
    # eta*(X) = dim of the subcode supported inside X; check against words
    from rankspectra import rank_support
    M = example_matroid
    code = example_code
    full = Subspace.full(M.gf, 4)
    assert M.conullity(full) == 3
    from itertools import product
    for X in enumerate_subspaces(M.gf, 4, 2):
        inside = 0
        for message in product(range(16), repeat=3):
            word = code.codeword(message)
            if X.contains(rank_support(code.tower, 1, 0, word)):
                inside += 1
        assert 16 ** M.conullity(X) == inside
        break  # one subspace suffices at this cost


def test_uniform_qflats(uniform24):
    # dims < k are q-flats, dims in [k, n) are not, the full space is
    M = uniform24
    for X in all_subspaces(M.gf, 4):
        expected = X.dim < 2 or X.dim == 4
        assert M.is_qflat(X) == expected


def test_uniform_dual_qcycles(uniform24):
    # q-cycles of U(2,4)*: {0}, all 15 dim-3 subspaces, and the full space
    dual = uniform24.dual()
    cycles = dual.qcycles()
    by_dim = {}
    for X, eta in cycles:
        by_dim.setdefault(X.dim, []).append(eta)
    assert sorted(by_dim) == [0, 3, 4]
    assert by_dim[0] == [0]
    assert by_dim[3] == [1] * 15
    assert by_dim[4] == [2]


def test_zero_cycle_unique(example_matroid):
    dual = example_matroid.dual()
    nullity0 = [X for X, eta in dual.qcycles() if eta == 0]
    assert len(nullity0) == 1 and nullity0[0].dim == 0


def test_restriction_preserves_conullity(example_matroid):
    M = example_matroid
    for U in enumerate_subspaces(M.gf, 4, 3):
        MU = M.restrict(U)
        for V in all_subspaces(M.gf, 3):
            embedded = U.embed_subspace(V)
            assert V.dim - MU.dual_rank(V) == M.conullity(embedded)
        break


def test_restriction_is_qmatroid(example_matroid):
    M = example_matroid
    U = next(enumerate_subspaces(M.gf, 4, 3))
    assert M.restrict(U).verify_axioms()["ok"]


def test_uniform_requires_valid_params():
    with pytest.raises(InputError):
        uniform_qmatroid(5, 4, 2)
