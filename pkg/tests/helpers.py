"""Shared generators of valid family parameters."""

import random
from math import gcd

from hypothesis import assume, strategies as st

from simptoric.family import FamilyParams


def _gh_solvable(q, a, d):
    return any((q - a * g) % d == 0 and q - a * g >= d for g in range(1, q // a + 1))


@st.composite
def family_params(draw, max_n=5):
    """Random parameters satisfying conditions (I)-(III)."""
    n = draw(st.integers(3, max_n))
    p = draw(st.sampled_from([2, 3, 5]))
    ell = draw(st.integers(1, 2))
    q = p**ell
    a = draw(st.integers(1, q - 1))
    d = draw(st.integers(1, q - a))
    assume(gcd(a, d) == 1 and _gh_solvable(q, a, d))
    b = draw(st.lists(st.integers(0, 3), min_size=n - 2, max_size=n - 2))
    c = draw(st.lists(st.integers(1, 10).filter(lambda x: x % p), min_size=n - 2, max_size=n - 2))
    return FamilyParams(n, p, ell, a, d, tuple(b), tuple(c))


def random_instances(count, seed):
    """``count`` seeded valid instances, n in {3,4,5}, p in {2,3,5}, l <= 2, c <= 10."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.choice((3, 4, 5))
        p = rng.choice((2, 3, 5))
        ell = rng.randint(1, 2)
        q = p**ell
        a = rng.randint(1, q - 1)
        d = rng.randint(1, q - a)
        if gcd(a, d) != 1 or not _gh_solvable(q, a, d):
            continue
        b = tuple(rng.randint(0, 3) for _ in range(n - 2))
        c = tuple(rng.choice([x for x in range(1, 11) if x % p]) for _ in range(n - 2))
        out.append(FamilyParams(n, p, ell, a, d, b, c))
    return out
