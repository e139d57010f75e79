import numpy as np

from fibdir.sequences import delta_exact
from fibdir.table import sequence_table
from fibdir.zeckendorf import classify_d, trailing_zeros, zeck_encode


def test_table_matches_scalar_api():
    tab = sequence_table(3000)
    for n in range(1, 3001):
        w = zeck_encode(n)
        assert int(tab.bits[n]) == w.bits
        assert int(tab.tz[n]) == trailing_zeros(w)
        assert int(tab.d[n]) == classify_d(w)


def test_table_delta_floats():
    tab = sequence_table(2000)
    ref = np.array([float(delta_exact(n).delta) for n in range(1, 2001)])
    assert np.allclose(tab.delta[1:2001], ref, rtol=1e-14, atol=0)
