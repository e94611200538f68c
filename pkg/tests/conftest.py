import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from powerclass.perm import Permutation
from powerclass.groups import generate


def cyc(degree, *cycles):
    return Permutation.from_cycles(degree, cycles)


def make_d8():
    return generate(4, [cyc(4, (0, 1, 2, 3)), cyc(4, (0, 2))], label="D8")


def make_q8():
    # a of order 4, b with b^2 = a^2, b^-1 a b = a^-1 (regular on 8 points)
    a = Permutation([1, 2, 3, 0, 7, 4, 5, 6])
    b = Permutation([4, 5, 6, 7, 2, 3, 0, 1])
    return generate(8, [a, b], label="Q8")


def make_s3():
    return generate(3, [cyc(3, (0, 1, 2)), cyc(3, (0, 1))], label="S3")


def make_s4():
    return generate(4, [cyc(4, (0, 1, 2, 3)), cyc(4, (0, 1))], label="S4")


def make_a4():
    return generate(4, [cyc(4, (0, 1, 2)), cyc(4, (0, 1), (2, 3))], label="A4")


def make_a5():
    return generate(5, [cyc(5, (0, 1, 2)), cyc(5, (0, 1, 2, 3, 4))], label="A5")


def make_v4():
    return generate(4, [cyc(4, (0, 1), (2, 3)), cyc(4, (0, 2), (1, 3))], label="V4")


def make_c4xc2():
    return generate(6, [cyc(6, (0, 1, 2, 3)), cyc(6, (4, 5))], label="C4xC2")


def make_c4xc4():
    return generate(8, [cyc(8, (0, 1, 2, 3)), cyc(8, (4, 5, 6, 7))], label="C4xC4")


def make_c12():
    return generate(12, [cyc(12, tuple(range(12)))], label="C12")


@pytest.fixture(scope="session")
def d8():
    return make_d8()


@pytest.fixture(scope="session")
def q8():
    return make_q8()


@pytest.fixture(scope="session")
def s3():
    return make_s3()


@pytest.fixture(scope="session")
def s4():
    return make_s4()


@pytest.fixture(scope="session")
def a4():
    return make_a4()


@pytest.fixture(scope="session")
def a5():
    return make_a5()


@pytest.fixture(scope="session")
def c4xc4():
    return make_c4xc4()
