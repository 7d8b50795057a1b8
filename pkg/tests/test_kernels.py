import numpy as np
import pytest

from rankspectra import _kernels
from rankspectra.oracle import brute_spectrum


def _toy_contrib():
    # k=2, S=4, n=3: arbitrary but fixed bit patterns
    rng = np.random.default_rng(11)
    contrib = rng.integers(0, 16, size=(2, 4, 3), dtype=np.uint64)
    contrib[:, 0, :] = 0  # scalar 0 contributes nothing
    return contrib


def test_numpy_matches_reference():
    contrib = _toy_contrib()
    ref = _kernels._spectrum_odometer(
        contrib, 4, 0, 16, np.zeros(4, dtype=np.int64))
    out = _kernels.spectrum_counts(contrib, 4, use_numba=False)
    assert list(out) == list(ref)


@pytest.mark.skipif(not _kernels.HAS_NUMBA, reason="numba not installed")
def test_numba_matches_numpy():
    contrib = _toy_contrib()
    fast = _kernels.spectrum_counts(contrib, 4, use_numba=True)
    slow = _kernels.spectrum_counts(contrib, 4, use_numba=False)
    assert list(fast) == list(slow)


def test_range_partition_merges():
    contrib = _toy_contrib()
    whole = _kernels.spectrum_counts(contrib, 4, use_numba=False)
    parts = sum(
        _kernels.spectrum_counts(contrib, 4, start, stop, use_numba=False)
        for start, stop in [(0, 5), (5, 11), (11, 16)]
    )
    assert list(parts) == list(whole)


def test_empty_range():
    contrib = _toy_contrib()
    assert list(_kernels.spectrum_counts(contrib, 4, 3, 3)) == [0, 0, 0, 0]


def test_out_of_bounds_range():
    contrib = _toy_contrib()
    with pytest.raises(ValueError):
        _kernels.spectrum_counts(contrib, 4, 0, 17)


def test_total_count_conserved():
    contrib = _toy_contrib()
    out = _kernels.spectrum_counts(contrib, 4, use_numba=False)
    assert int(out.sum()) == 16


def test_env_flag_disables_numba(monkeypatch):
    monkeypatch.setenv("RANKSPECTRA_NO_NUMBA", "1")
    assert not _kernels.numba_enabled()
    monkeypatch.delenv("RANKSPECTRA_NO_NUMBA")
    assert _kernels.numba_enabled() == _kernels.HAS_NUMBA


def test_brute_spectrum_env_fallback(example_code, monkeypatch):
    baseline = brute_spectrum(example_code, 1)
    monkeypatch.setenv("RANKSPECTRA_NO_NUMBA", "1")
    assert brute_spectrum(example_code, 1) == baseline
