import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from duoidal.arith import QQ, FieldSpec
from duoidal.corpus import cyclic_group_algebra, sweedler, sweedler_r0, sweedler_r_lambda
from duoidal.monad_em import SeparatelyOpmonoidalData

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("suite", max_examples=25, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("suite")

F3 = FieldSpec.prime(3)
F5 = FieldSpec.prime(5)


@pytest.fixture(scope="session")
def qc2():
    return cyclic_group_algebra(2, QQ, "qc2")


@pytest.fixture(scope="session")
def f3c2():
    return cyclic_group_algebra(2, F3, "f3c2")


@pytest.fixture(scope="session")
def h4():
    return sweedler(QQ, "sweedler")


@pytest.fixture(scope="session")
def r0(h4):
    return sweedler_r0(h4)


@pytest.fixture(scope="session")
def r1(h4):
    return sweedler_r_lambda(h4, 1)


@pytest.fixture(scope="session")
def S_qc2(qc2):
    return SeparatelyOpmonoidalData.from_bialgebra(qc2)


@pytest.fixture(scope="session")
def S_h4(h4):
    return SeparatelyOpmonoidalData.from_bialgebra(h4)
