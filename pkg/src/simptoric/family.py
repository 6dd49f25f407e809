"""Parameters of the toric family, its binomial systems and rank bounds."""

from dataclasses import asdict, dataclass, field
from math import comb, gcd

from sympy import isprime

from .errors import ConditionIFailure, ConditionIIFailure, ValidationError
from .numtheory import DijCert, GHCert, GijCert, HiCert, solve_dij, solve_gh, solve_gij, solve_hk
from .finitefield import FieldElement
from .toric import Binomial, build_matrix, in_ideal


@dataclass(frozen=True)
class FamilyParams:
    n: int
    p: int
    ell: int
    a: int
    d: int
    b: tuple
    c: tuple

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(self.b))
        object.__setattr__(self, "c", tuple(self.c))
        if self.n < 3:
            raise ValidationError(f"n must be >= 3, got {self.n}")
        if not isprime(self.p):
            raise ValidationError(f"p must be prime, got {self.p}")
        if min(self.ell, self.a, self.d) < 1:
            raise ValidationError("ell, a, d must be positive")
        if len(self.b) != self.n - 2 or len(self.c) != self.n - 2:
            raise ValidationError(f"b and c need n-2 = {self.n - 2} entries")
        if any(x < 0 for x in self.b):
            raise ValidationError("b entries must be nonnegative")
        if any(x < 1 for x in self.c):
            raise ValidationError("c entries must be positive")

    @property
    def q(self):
        """``p**ell``, the exponent of ``u_{n-1}`` in ``x_{n-1}``."""
        return self.p**self.ell

    def to_dict(self):
        return {"n": self.n, "p": self.p, "l": self.ell, "a": self.a, "d": self.d,
                "b": list(self.b), "c": list(self.c)}

    @classmethod
    def from_dict(cls, data):
        return cls(data["n"], data["p"], data.get("l", data.get("ell")), data["a"], data["d"],
                   tuple(data["b"]), tuple(data["c"]))


@dataclass(frozen=True)
class CertificateSet:
    gh: GHCert
    gij: dict  # (i, j) -> GijCert, 1-based, i < j
    hi: dict  # i -> HiCert
    dij: dict  # (i, j) -> DijCert

    def check(self, params):
        P = params
        ok = self.gh.check(P.p, P.ell, P.a, P.d)
        ok &= all(cert.check(P.c[i - 1], P.c[j - 1], P.p, P.ell) for (i, j), cert in self.gij.items())
        ok &= all(cert.check(P.c[i - 1], P.a, P.d, P.p, P.ell) for i, cert in self.hi.items())
        ok &= all(cert.check(P.c[i - 1], P.c[j - 1]) for (i, j), cert in self.dij.items())
        return ok

    def to_dict(self):
        return {
            "gh": asdict(self.gh),
            "gij": {f"{i},{j}": asdict(v) for (i, j), v in sorted(self.gij.items())},
            "hi": {str(i): asdict(v) for i, v in sorted(self.hi.items())},
            "dij": {f"{i},{j}": asdict(v) for (i, j), v in sorted(self.dij.items())},
        }

    @classmethod
    def from_dict(cls, data):
        pair = lambda key: tuple(int(x) for x in key.split(","))  # noqa: E731
        return cls(
            GHCert(**data["gh"]),
            {pair(k): GijCert(**v) for k, v in data["gij"].items()},
            {int(k): HiCert(**v) for k, v in data["hi"].items()},
            {pair(k): DijCert(**v) for k, v in data["dij"].items()},
        )


def pairs(params):
    m = params.n - 2
    return [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)]


def validate(params):
    """Check conditions (I)-(III) and solve every auxiliary certificate."""
    P = params
    for i, ci in enumerate(P.c, start=1):
        if ci % P.p == 0:
            raise ConditionIFailure(i, ci, P.p)
    if gcd(P.a, P.d) != 1:
        raise ConditionIIFailure(P.a, P.d)
    gh = solve_gh(P.p, P.ell, P.a, P.d)
    gij = {(i, j): solve_gij(P.c[i - 1], P.c[j - 1], P.p, P.ell) for i, j in pairs(P)}
    hi = {i: solve_hk(P.c[i - 1], P.a, P.d, P.p, P.ell) for i in range(1, P.n - 1)}
    dij = {(i, j): solve_dij(P.c[i - 1], P.c[j - 1]) for i, j in pairs(P)}
    certs = CertificateSet(gh, gij, hi, dij)
    assert certs.check(P), "solver returned an invalid certificate"
    return certs


# variable indices (0-based) in the 2n-vector (x_1..x_n, y_1..y_n)
def X(params, k):
    return k - 1


def Y(params, k):
    return params.n + k - 1


def build_F(params, gh):
    P, n = params, params.n
    out = []
    for i in range(1, n - 1):
        out.append(Binomial.from_maps(
            {Y(P, i): P.q},
            {X(P, i): P.q * P.b[i - 1], X(P, n - 1): P.c[i - 1]},
            2 * n, f"F{i}"))
    out.append(Binomial.from_maps({Y(P, n - 1): P.a}, {X(P, n): P.d}, 2 * n, f"F{n - 1}"))
    out.append(Binomial.from_maps(
        {Y(P, n): P.q},
        {X(P, n - 1): 1, X(P, n): gh.g, Y(P, n - 1): gh.h},
        2 * n, f"F{n}"))
    return out


def build_G(params, gij):
    P, n = params, params.n
    out = []
    for i, j in pairs(P):
        cert = gij[(i, j)]
        out.append(Binomial.from_maps(
            {Y(P, i): cert.g_ij, Y(P, j): cert.g_ji},
            {X(P, i): P.b[i - 1] * cert.g_ij, X(P, j): P.b[j - 1] * cert.g_ji,
             X(P, n - 1): cert.r_ij * P.p ** (cert.m_ij - P.ell)},
            2 * n, f"G{i},{j}"))
    return out


def build_H(params, hi):
    P, n = params, params.n
    out = []
    for i in range(1, n - 1):
        cert = hi[i]
        out.append(Binomial.from_maps(
            {Y(P, i): cert.h_i, Y(P, n): cert.k_i},
            {X(P, i): P.b[i - 1] * cert.h_i, X(P, n - 1): cert.r_i * P.p ** (cert.m_i - P.ell),
             X(P, n): cert.s_i, Y(P, n - 1): cert.t_i},
            2 * n, f"H{i}"))
    return out


@dataclass
class EquationSystem:
    params: FamilyParams
    F: list
    G: list
    H: list
    certs: CertificateSet = field(repr=False)

    def all(self):
        return self.F + self.G + self.H

    def by_label(self, label):
        for b in self.all():
            if b.label == label:
                return b
        raise KeyError(label)

    def to_dict(self):
        n = self.params.n
        return {
            "params": self.params.to_dict(),
            "certificates": self.certs.to_dict(),
            "F": [b.to_dict(n) for b in self.F],
            "G": [b.to_dict(n) for b in self.G],
            "H": [b.to_dict(n) for b in self.H],
        }

    @classmethod
    def from_dict(cls, data):
        params = FamilyParams.from_dict(data["params"])
        n = params.n
        parse = lambda items: [Binomial.from_dict(x, n) for x in items]  # noqa: E731
        return cls(params, parse(data["F"]), parse(data["G"]), parse(data["H"]),
                   CertificateSet.from_dict(data["certificates"]))

    def __eq__(self, other):
        if not isinstance(other, EquationSystem):
            return NotImplemented
        labels = lambda s: [b.label for b in s.all()]  # noqa: E731
        return (self.params == other.params and self.certs == other.certs
                and self.all() == other.all() and labels(self) == labels(other))


def build_system(params, certs=None):
    """Validate ``params`` and assemble the F, G and H binomials."""
    certs = certs or validate(params)
    system = EquationSystem(params, build_F(params, certs.gh), build_G(params, certs.gij),
                            build_H(params, certs.hi), certs)
    A = build_matrix(params)
    bad = [b.label for b in system.all() if not in_ideal(b, A)]
    if bad:
        raise AssertionError(f"generated binomials outside the toric ideal: {bad}")
    return system


@dataclass(frozen=True)
class RankReport:
    n: int
    bar_char_p: int
    bar_char_other: int
    ara_char_p: int
    ara_other_low: int
    ara_other_high: int
    ara_other_exact: int = None  # known only for n == 3

    def to_dict(self):
        return asdict(self)


def rank_report(params_or_n):
    """Known binomial and arithmetical ranks of the variety.

    In characteristic p both ranks equal the codimension n.  Otherwise
    ``bar = 4`` for n = 3 and ``2n - 2 + C(n-2, 2)`` for n >= 4, and the
    arithmetical rank lies in ``[2n-2, 2n]``; for n = 3 it is exactly 4.
    """
    n = params_or_n if isinstance(params_or_n, int) else params_or_n.n
    if n < 3:
        raise ValueError("the family needs n >= 3")
    bar_other = 4 if n == 3 else 2 * n - 2 + comb(n - 2, 2)
    return RankReport(
        n=n,
        bar_char_p=n,
        bar_char_other=bar_other,
        ara_char_p=n,
        ara_other_low=2 * n - 2,
        ara_other_high=2 * n,
        ara_other_exact=4 if n == 3 else None,
    )


def phi_codes(params, ctx, u):
    """Parametrization on raw codes of ``ctx``; returns a tuple of 2n codes."""
    P, n = params, params.n
    mul, pw = ctx.mul, ctx.pow
    u_last, u_n = u[n - 2], u[n - 1]
    xs = list(u[: n - 2]) + [pw(u_last, P.q), pw(u_n, P.a)]
    ys = [mul(pw(u[i], P.b[i]), pw(u_last, P.c[i])) for i in range(n - 2)]
    ys += [pw(u_n, P.d), mul(u_last, u_n)]
    return tuple(xs + ys)


def phi(params, u):
    """Point ``(u_1,..,u_{n-2}, u_{n-1}^{p^l}, u_n^a, .., u_n^d, u_{n-1} u_n)``."""
    if len(u) != params.n:
        raise ValueError(f"phi needs {params.n} parameters")
    ctx = u[0].ctx
    if any(x.ctx != ctx for x in u):
        raise ValueError("parameters must lie in one field")
    return [FieldElement(ctx, c) for c in phi_codes(params, ctx, [x.code for x in u])]
