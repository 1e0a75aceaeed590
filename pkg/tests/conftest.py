import random

import pytest

from qbpd.diagram import Diagram, diagram_from_text
from qbpd.perm import Permutation, make_permutation
from qbpd.polyring import Poly


def random_poly(rng: random.Random, n: int, terms: int = 6, maxexp: int = 2) -> Poly:
    width = 3 * n - 1
    data = {}
    for _ in range(terms):
        key = tuple(rng.randint(0, maxexp) for _ in range(width))
        data[key] = data.get(key, 0) + rng.randint(-5, 5)
    return Poly(n, data)


def cycle_up(t: int, k: int, n: int) -> Permutation:
    """The cycle (t, t+1, ..., t+k) in cycle notation, as an element of S_n."""
    images = list(range(1, n + 1))
    for j in range(t, t + k):
        images[j - 1] = j + 1
    images[t + k - 1] = t
    return make_permutation(images)


def cycle_down(t: int, k: int, n: int) -> Permutation:
    """The cycle (t, t+k, t+k-1, ..., t+1), as an element of S_n."""
    images = list(range(1, n + 1))
    images[t - 1] = t + k
    for j in range(t + 1, t + k + 1):
        images[j - 1] = j - 1
    return make_permutation(images)


# The non-example grid: the pipe entering on row 3 moves rightward through
# (2,2) and (2,3) on its way to the south edge.
NON_EXAMPLE_TEXT = """\
5
RHSRH
VRJVR
VNHCC
VRHCC
VVRCC
"""

# A diagram of 2143 whose only weight cell is the SW corner at (1,2); its
# binomial weight is -q1 and it cancels the +q1 domino diagram completely.
MINUS_Q1_2143_TEXT = """\
4
RSRH
VNCH
VRJR
VVRC
"""


@pytest.fixture
def non_example() -> Diagram:
    return diagram_from_text(NON_EXAMPLE_TEXT)


@pytest.fixture
def minus_q1_2143() -> Diagram:
    return diagram_from_text(MINUS_Q1_2143_TEXT)
