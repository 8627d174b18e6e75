import os
import random
from fractions import Fraction

import pytest

# Keep a developer's MAHLERKIT_* settings out of the suite before config imports
for _name in list(os.environ):
    if _name.startswith("MAHLERKIT_"):
        del os.environ[_name]
os.environ.setdefault("LOG_LEVEL", "WARNING")


@pytest.fixture(autouse=True)
def _seeded():
    """Every test sees the same random stream."""
    random.seed(20240601)
    yield


@pytest.fixture
def rng() -> random.Random:
    return random.Random(7)


@pytest.fixture
def poly():
    """Build a rational polynomial from integer coefficients, lowest degree first."""
    from mahlerkit.exactalg import UniPoly

    def _make(*coeffs):
        return UniPoly.of([Fraction(c) for c in coeffs])

    return _make
