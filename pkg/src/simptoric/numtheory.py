"""Integer certificates for the auxiliary equations of the toric family.

Every solver returns a small frozen dataclass whose ``check`` method
re-evaluates the defining identity with Python integers.  Search
conventions are fixed (smallest exponent first, then smallest first
multiplier) so that certificates are reproducible.
"""

from dataclasses import dataclass
from math import gcd

from .errors import ConditionIIFailure, ConditionIIIFailure, SearchExhausted

# solve_hk never needs more than m = ell in practice; the cap only
# documents termination.
HK_EXTRA_EXPONENT = 16


def ext_gcd(a, b):
    """Return ``(g, x, y)`` with ``g = gcd(a, b) >= 1`` and ``a*x + b*y = g``."""
    if a == 0 and b == 0:
        raise ValueError("ext_gcd(0, 0) is undefined")
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def p_adic_val(x, p):
    """Largest ``e`` with ``p**e`` dividing ``x``."""
    if x < 1:
        raise ValueError(f"p_adic_val needs x >= 1, got {x}")
    if p < 2:
        raise ValueError(f"p_adic_val needs p >= 2, got {p}")
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e


@dataclass(frozen=True)
class GHCert:
    g: int
    h: int

    def check(self, p, ell, a, d):
        return self.g >= 1 and self.h >= 1 and a * self.g + d * self.h == p**ell


@dataclass(frozen=True)
class GijCert:
    g_ij: int
    g_ji: int
    r_ij: int
    m_ij: int

    def check(self, c_i, c_j, p, ell):
        return (
            min(self.g_ij, self.g_ji, self.r_ij) >= 1
            and self.m_ij >= ell
            and self.g_ij % p != 0
            and self.g_ji % p != 0
            and c_i * self.g_ij + c_j * self.g_ji == self.r_ij * p**self.m_ij
        )


@dataclass(frozen=True)
class HiCert:
    h_i: int
    k_i: int
    r_i: int
    m_i: int
    s_i: int
    t_i: int

    def check(self, c_i, a, d, p, ell):
        return (
            min(self.h_i, self.k_i, self.r_i) >= 1
            and self.m_i >= ell
            and min(self.s_i, self.t_i) >= 0
            and self.h_i % p != 0
            and self.k_i % p != 0
            and c_i * self.h_i + self.k_i == self.r_i * p**self.m_i
            and a * self.s_i + d * self.t_i == self.k_i
        )


@dataclass(frozen=True)
class DijCert:
    d_ij: int
    d_ji: int

    def check(self, c_i, c_j):
        return c_i * self.d_ij - c_j * self.d_ji == gcd(c_i, c_j)


def solve_gh(p, ell, a, d):
    """Lexicographically smallest positive ``(g, h)`` with ``a*g + d*h == p**ell``.

    Solved in O(1) big-integer operations: ``g`` is fixed modulo ``d`` by
    the equation, so only its least positive representative is a
    candidate.
    """
    if ell < 1 or a < 1 or d < 1:
        raise ValueError("solve_gh needs ell, a, d >= 1")
    if gcd(a, d) != 1:
        raise ConditionIIFailure(a, d)
    target = p**ell
    if d == 1:
        g = 1
    else:
        g = (target * pow(a, -1, d)) % d or d
    rest = target - a * g
    if rest < d:
        raise ConditionIIIFailure(p, ell, a, d)
    return GHCert(g, rest // d)


def solve_gij(c_i, c_j, p, ell):
    """Certificate for ``c_i*g_ij + c_j*g_ji = r_ij * p**m_ij``.

    Both multipliers are kept coprime to ``p``.  The smallest exponent
    ``m_ij = ell`` always admits a solution: with ``g_ij = 1`` the partner
    ``g_ji = -c_i / c_j mod p**ell`` is a unit.
    """
    if c_i % p == 0 or c_j % p == 0:
        raise ValueError(f"p={p} must not divide c_i={c_i} or c_j={c_j}")
    m = ell
    modulus = p**m
    for g_ij in range(1, modulus + 1):
        if g_ij % p == 0:
            continue
        g_ji = (-c_i * g_ij * pow(c_j, -1, modulus)) % modulus
        if g_ji == 0 or g_ji % p == 0:
            continue
        r = (c_i * g_ij + c_j * g_ji) // modulus
        return GijCert(g_ij, g_ji, r, m)
    raise SearchExhausted(f"no G certificate for c=({c_i},{c_j}), p={p}")  # unreachable


def _nonneg_split(k, a, d):
    """Nonnegative ``(s, t)`` with ``a*s + d*t == k`` and ``t`` minimal, or None."""
    for t in range(0, k // d + 1):
        rem = k - d * t
        if rem % a == 0:
            return rem // a, t
    return None


def solve_hk(c_i, a, d, p, ell):
    """Certificate for ``c_i*h_i + k_i = r_i*p**m_i`` and ``a*s_i + d*t_i = k_i``.

    Order of search: smallest ``m_i >= ell``, then smallest ``h_i`` coprime to
    ``p``, then smallest admissible ``k_i`` in its residue class, then the
    split with smallest ``t_i``.
    """
    if c_i % p == 0:
        raise ValueError(f"p={p} divides c_i={c_i}")
    if gcd(a, d) != 1:
        raise ConditionIIFailure(a, d)
    # every k >= (a-1)(d-1) is a nonnegative combination of a and d
    frobenius_bound = (a - 1) * (d - 1)
    for m in range(ell, ell + HK_EXTRA_EXPONENT + 1):
        modulus = p**m
        for h in range(1, modulus + 1):
            if h % p == 0:
                continue
            k = (-c_i * h) % modulus
            if k == 0:
                continue
            while True:
                split = _nonneg_split(k, a, d)
                if split is not None:
                    s, t = split
                    r = (c_i * h + k) // modulus
                    return HiCert(h, k, r, m, s, t)
                if k > frobenius_bound:
                    break  # unreachable by the Frobenius bound
                k += modulus
    raise SearchExhausted(
        f"no H certificate for c={c_i}, a={a}, d={d}, p={p} with m <= {ell + HK_EXTRA_EXPONENT}"
    )


def solve_dij(c_i, c_j):
    """Integers with ``c_i*d_ij - c_j*d_ji == gcd(c_i, c_j)``, ``d_ij`` least positive."""
    if c_i < 1 or c_j < 1:
        raise ValueError("solve_dij needs positive inputs")
    g, x, _ = ext_gcd(c_i, c_j)
    step = c_j // g
    d_ij = x % step or step
    d_ji = (c_i * d_ij - g) // c_j
    return DijCert(d_ij, d_ji)
