from __future__ import annotations

import pytest

from g2kit import build_cayley_frame, build_standard_frame


@pytest.fixture(scope="session")
def standard():
    return build_standard_frame()


@pytest.fixture(scope="session")
def cayley():
    return build_cayley_frame()


@pytest.fixture(scope="session", params=["standard", "cayley"])
def frame(request, standard, cayley):
    return standard if request.param == "standard" else cayley
