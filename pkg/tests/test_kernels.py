import random

import numpy as np
import pytest

from ghgeo import kernels
from ghgeo.kernels import reference


def random_int_metric(rng, n, top=50):
    """Integer distance matrix from shortest-path closure."""
    d = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            w = rng.randint(1, top)
            d[i][j] = d[j][i] = w
    for k in range(n):
        for i in range(n):
            for j in range(n):
                via = d[i][k] + d[k][j]
                if i != j and via < d[i][j]:
                    d[i][j] = d[j][i] = via
    return d


def as_array(mat):
    return np.ascontiguousarray(np.array(mat, dtype=np.int64))


BACKENDS = ["numpy", "numba"]


@pytest.fixture(params=BACKENDS)
def backend(request):
    return kernels.get(request.param)


class TestEnvSelection:
    def test_default_prefers_numba(self, monkeypatch):
        monkeypatch.delenv("GHG_BACKEND", raising=False)
        assert kernels.backend_name() == "numba"

    def test_auto(self, monkeypatch):
        monkeypatch.setenv("GHG_BACKEND", "auto")
        assert kernels.backend_name() == "numba"

    @pytest.mark.parametrize("name", ["numpy", "numba"])
    def test_explicit(self, monkeypatch, name):
        monkeypatch.setenv("GHG_BACKEND", name)
        assert kernels.backend_name() == name

    def test_case_and_spaces_ignored(self, monkeypatch):
        monkeypatch.setenv("GHG_BACKEND", "  NumPy ")
        assert kernels.backend_name() == "numpy"

    def test_garbage_rejected(self, monkeypatch):
        monkeypatch.setenv("GHG_BACKEND", "fortran")
        with pytest.raises(ValueError):
            kernels.backend_name()


class TestThreadCap:
    def test_default_is_one(self, monkeypatch):
        monkeypatch.delenv("GHG_THREADS", raising=False)
        assert kernels.thread_cap() == 1

    def test_explicit(self, monkeypatch):
        monkeypatch.setenv("GHG_THREADS", "4")
        assert kernels.thread_cap() == 4

    @pytest.mark.parametrize("raw", ["0", "-2", "two", "1.5"])
    def test_invalid_rejected(self, monkeypatch, raw):
        monkeypatch.setenv("GHG_THREADS", raw)
        with pytest.raises(ValueError):
            kernels.thread_cap()


class TestDistortionPairs:
    def test_matches_reference(self, backend):
        rng = random.Random(100)
        for _ in range(20):
            m, n = rng.randint(1, 6), rng.randint(1, 6)
            xd = random_int_metric(rng, m)
            yd = random_int_metric(rng, n)
            k = rng.randint(max(m, n), m + n + 2)
            pi = [rng.randrange(m) for _ in range(k)]
            pj = [rng.randrange(n) for _ in range(k)]
            want = reference.distortion_pairs(xd, yd, pi, pj)
            got = backend.distortion_pairs(
                as_array(xd),
                as_array(yd),
                np.array(pi, dtype=np.int64),
                np.array(pj, dtype=np.int64),
            )
            assert int(got) == want

    def test_single_pair_is_zero(self, backend):
        got = backend.distortion_pairs(
            as_array([[0]]),
            as_array([[0]]),
            np.array([0], dtype=np.int64),
            np.array([0], dtype=np.int64),
        )
        assert int(got) == 0


class TestBruteMinDistortion:
    def test_value_and_witness_match_reference(self, backend):
        rng = random.Random(200)
        for _ in range(15):
            m, n = rng.randint(1, 3), rng.randint(1, 3)
            xd = random_int_metric(rng, m)
            yd = random_int_metric(rng, n)
            want = reference.brute_min_distortion(xd, yd)
            got = backend.brute_min_distortion(as_array(xd), as_array(yd))
            assert int(got[0]) == want[0]
            assert [int(v) for v in got[1]] == list(want[1])
            assert [int(v) for v in got[2]] == list(want[2])

    def test_identical_spaces_give_zero(self, backend):
        xd = random_int_metric(random.Random(7), 3)
        best, f, g = backend.brute_min_distortion(as_array(xd), as_array(xd))
        assert int(best) == 0
        # first-witness semantics: the identity assignment wins ties
        assert [int(v) for v in f] == [0, 1, 2]
        assert [int(v) for v in g] == [0, 1, 2]


class TestTriangleSlack:
    def test_matches_reference_on_violations(self, backend):
        rng = random.Random(300)
        for _ in range(20):
            n = rng.randint(3, 7)
            d = random_int_metric(rng, n)
            # break one triangle deliberately
            d[0][n - 1] = d[n - 1][0] = d[0][n - 1] + d[0][1] + d[1][n - 1] + 1
            want = reference.triangle_slack(d)
            got = backend.triangle_slack(as_array(d))
            assert int(got[0]) == want[0]
            assert (int(got[1]), int(got[2]), int(got[3])) == (want[1], want[2], want[3])

    def test_valid_metric_has_nonnegative_slack(self, backend):
        d = random_int_metric(random.Random(9), 6)
        slack, i, j, k = backend.triangle_slack(as_array(d))
        assert int(slack) >= 0
        assert i != j and j != k and i != k


def test_backends_agree_with_each_other():
    rng = random.Random(400)
    numpy_k = kernels.get("numpy")
    numba_k = kernels.get("numba")
    for _ in range(5):
        m, n = rng.randint(2, 3), rng.randint(2, 3)
        xd = as_array(random_int_metric(rng, m))
        yd = as_array(random_int_metric(rng, n))
        a = numpy_k.brute_min_distortion(xd, yd)
        b = numba_k.brute_min_distortion(xd, yd)
        assert int(a[0]) == int(b[0])
        assert [int(v) for v in a[1]] == [int(v) for v in b[1]]
        assert [int(v) for v in a[2]] == [int(v) for v in b[2]]
