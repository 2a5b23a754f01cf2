import random
import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from knotatoms.cli import load_diagram  # noqa: E402
from knotatoms.corpus import load_corpus  # noqa: E402
from knotatoms.diagram import parse_gauss, parse_pd  # noqa: E402

settings.register_profile("knotatoms", deadline=None, derandomize=True)
settings.load_profile("knotatoms")

TREFOIL_PD = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
KINK_PD = "X(1,2,2,1)"
VIRTUAL_TREFOIL = "O1+O2+U1+U2+"
HOPF_PD = "X(4,1,3,2) X(2,3,1,4)"


@pytest.fixture
def trefoil():
    return parse_pd(TREFOIL_PD)


@pytest.fixture
def kink():
    return parse_pd(KINK_PD)


@pytest.fixture
def virtual_trefoil():
    return parse_gauss(VIRTUAL_TREFOIL)


@pytest.fixture
def hopf():
    return parse_pd(HOPF_PD)


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def corpus_diagrams(corpus):
    return [(e, load_diagram(e.code, e.format)) for e in corpus]


@pytest.fixture
def rng():
    return random.Random(20261016)
