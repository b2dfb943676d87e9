from __future__ import annotations

import pytest

from tpnlie import make_tensor_trunc, make_truncated_poly


@pytest.fixture(scope="session")
def w4():
    """Q[t]/(t^4) with the Euler derivation and its bracket."""
    return make_truncated_poly(4)


@pytest.fixture(scope="session")
def tp22():
    """Q[s,t]/(s^2, t^2) with the two diagonal derivations."""
    return make_tensor_trunc(2, 2)
