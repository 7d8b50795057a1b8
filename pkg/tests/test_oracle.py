import pytest

from rankspectra import (
    GabidulinCode,
    ResourceLimitError,
    build_cycle_lattice,
    enumerate_subspaces,
    gaussian_binomial,
    higher_spectra,
    uniform_qmatroid,
    virtual_betti_table,
    weight_distribution,
    weight_poly_mobius,
    weight_polys_betti,
)
from rankspectra.oracle import (
    ClassicalMatroid,
    brute_higher,
    brute_spectrum,
    inclusion_exclusion_poly,
    verify_lattice_isomorphism,
)


def test_brute_spectrum_example_r1(example_code):
    assert brute_spectrum(example_code, 1) == [1, 15, 420, 2460, 1200]


def test_brute_spectrum_scalar_path_matches(example_code):
    # force the generic element-wise path by pretending q is not 2:
    # compare instead against a small r=1 run with the kernel disabled
    fast = brute_spectrum(example_code, 1, use_numba=True)
    slow = brute_spectrum(example_code, 1, use_numba=False)
    assert fast == slow


def test_brute_spectrum_threads(example_code):
    single = brute_spectrum(example_code, 1, threads=1)
    multi = brute_spectrum(example_code, 1, threads=3)
    assert single == multi


def test_brute_spectrum_cap(example_code):
    with pytest.raises(ResourceLimitError) as err:
        brute_spectrum(example_code, 2, cap=1000)
    assert err.value.required == 16**6


def test_brute_spectrum_mrd(mrd_code):
    from rankspectra import mrd_closed_form
    assert brute_spectrum(mrd_code, 1) == mrd_closed_form(4, 2, 2, 4)


def test_brute_spectrum_char3():
    tower = __import__("rankspectra").prime_field(3).extend([1, 0, 1])
    code = GabidulinCode(tower, 0, 1, [[1, 3]])
    counts = brute_spectrum(code, 1)
    assert sum(counts) == 9
    assert counts[0] == 1


def test_brute_higher_example(example_code, example_table):
    polys = weight_polys_betti(example_table)
    rows = higher_spectra(polys, 16, 3)
    assert brute_higher(example_code, 0) == rows[0]
    assert brute_higher(example_code, 1) == rows[1]
    assert brute_higher(example_code, 2) == rows[2]


def test_brute_higher_totals(example_code):
    for i in range(4):
        assert sum(brute_higher(example_code, i)) == gaussian_binomial(3, i, 16)


def test_brute_higher_mrd(mrd_code):
    # the d+1 column of the top row is the full Gaussian count
    assert brute_higher(mrd_code, 2) == [0, 0, 0, 0, 1]


def test_classical_matroid_ranks(uniform24):
    cl = ClassicalMatroid(uniform24)
    assert cl.size == 15
    assert cl.rank(0) == 0
    assert cl.full_rank == 2
    assert cl.rank(0b11) == 2


def test_classical_matroid_closure_flats(uniform24):
    cl = ClassicalMatroid(uniform24)
    flats = cl.flats()
    # rank-1 flats are the 15 singletons; plus the empty set and everything
    singles = [F for F in flats if bin(F).count("1") == 1]
    assert len(singles) == 15
    assert 0 in flats and cl.full_mask in flats
    assert len(flats) == 17


def test_classical_dual_cycles_uniform(uniform24):
    cl = ClassicalMatroid(uniform24)
    cycles = cl.dual_cycles()
    sizes = sorted(bin(mask).count("1") for mask, _ in cycles)
    assert sizes == [0] + [14] * 15 + [15]


def test_lattice_isomorphism_uniform(uniform24):
    report = verify_lattice_isomorphism(uniform24)
    assert report["ok"] and report["flats"] == 17


def test_lattice_isomorphism_example(example_matroid):
    report = verify_lattice_isomorphism(example_matroid)
    assert report["ok"]
    assert report["cycles"] == 46


def test_inclusion_exclusion_zero_space(example_matroid):
    U = next(enumerate_subspaces(example_matroid.gf, 4, 0))
    assert inclusion_exclusion_poly(example_matroid, U).coeffs == (1,)


@pytest.mark.parametrize("s", [0, 1, 2])
def test_inclusion_exclusion_matches_mobius(example_matroid, s):
    M = example_matroid
    total = [0] * 4
    for U in enumerate_subspaces(M.gf, 4, s):
        for e, c in enumerate(inclusion_exclusion_poly(M, U).coeffs):
            total[e] += c
    while total and total[-1] == 0:
        total.pop()
    assert tuple(total) == weight_poly_mobius(M, s).coeffs


def test_inclusion_exclusion_aggregate_value(example_matroid):
    M = example_matroid
    value = 0
    for U in enumerate_subspaces(M.gf, 4, 2):
        value += inclusion_exclusion_poly(M, U)(16)
    assert value == 420


def test_oracle_agreement_uniform_codes(tower16, mrd_code):
    M = mrd_code.qmatroid()
    polys = weight_polys_betti(virtual_betti_table(build_cycle_lattice(M)))
    assert brute_spectrum(mrd_code, 1) == weight_distribution(polys, 16)
