"""Exponent matrix of the monomial parametrization and its integer kernel.

Variables are indexed ``0..n-1`` for ``x_1..x_n`` and ``n..2n-1`` for
``y_1..y_n``.  A binomial ``M - M'`` lies in the toric ideal exactly when
its exponent difference is in the kernel of the exponent matrix.
"""

import random
from dataclasses import dataclass, field

from .numtheory import ext_gcd


def var_name(k, n):
    return f"x{k + 1}" if k < n else f"y{k - n + 1}"


def var_index(name, n):
    kind, idx = name[0], int(name[1:])
    if kind not in "xy" or not 1 <= idx <= n:
        raise ValueError(f"bad variable name {name!r} for n={n}")
    return idx - 1 if kind == "x" else n + idx - 1


@dataclass(frozen=True)
class ExponentMatrix:
    n: int
    entries: tuple  # n rows of 2n ints

    @property
    def ncols(self):
        return 2 * self.n

    def column(self, k):
        return tuple(row[k] for row in self.entries)

    def apply(self, v):
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.entries)

    def in_kernel(self, v):
        return not any(self.apply(v))

    def rank(self):
        return column_echelon(self.entries)[2]

    def tolist(self):
        return [list(row) for row in self.entries]


def build_matrix(params):
    """Columns of the parametrization exponents, one row per parameter u_k."""
    n = params.n
    cols = []
    unit = lambda k: [1 if r == k else 0 for r in range(n)]  # noqa: E731
    for i in range(n - 2):
        cols.append(unit(i))
    cols.append([params.p**params.ell if r == n - 2 else 0 for r in range(n)])
    cols.append([params.a if r == n - 1 else 0 for r in range(n)])
    for i in range(n - 2):
        col = [0] * n
        col[i] += params.b[i]
        col[n - 2] += params.c[i]
        cols.append(col)
    cols.append([params.d if r == n - 1 else 0 for r in range(n)])
    cols.append([1 if r in (n - 2, n - 1) else 0 for r in range(n)])
    entries = tuple(tuple(col[r] for col in cols) for r in range(n))
    return ExponentMatrix(n, entries)


def column_echelon(rows):
    """Unimodular column reduction ``A U = [H | 0]``.

    Returns ``(H, U, rank)`` with ``H`` and ``U`` as lists of rows.  The
    last ``ncols - rank`` columns of ``U`` span the integer kernel of ``A``.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    H = [list(r) for r in rows]
    U = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def colop(j, k, a, b, c, d):
        # (col_j, col_k) <- (a*col_j + b*col_k, c*col_j + d*col_k), det = ±1
        for mat in (H, U):
            for row in mat:
                x, y = row[j], row[k]
                row[j], row[k] = a * x + b * y, c * x + d * y

    pivot = 0
    for r in range(nrows):
        if pivot == ncols:
            break
        for k in range(pivot + 1, ncols):
            x, y = H[r][pivot], H[r][k]
            if y == 0:
                continue
            g, s, t = ext_gcd(x, y)
            colop(pivot, k, s, t, -y // g, x // g)
        if H[r][pivot] != 0:
            if H[r][pivot] < 0:
                for mat in (H, U):
                    for row in mat:
                        row[pivot] = -row[pivot]
            pivot += 1
    return H, U, pivot


@dataclass(frozen=True)
class LatticeVector:
    v: tuple

    def __iter__(self):
        return iter(self.v)

    def __len__(self):
        return len(self.v)

    def __getitem__(self, k):
        return self.v[k]

    def scaled(self, t):
        return LatticeVector(tuple(t * x for x in self.v))


def kernel_basis(A):
    """Basis of the integer lattice ``{v : A v = 0}``."""
    _, U, rank = column_echelon(A.entries)
    return [LatticeVector(tuple(U[i][j] for i in range(A.ncols))) for j in range(rank, A.ncols)]


def random_kernel_vectors(basis, count, rng=None, spread=3):
    """Nonzero small combinations of the basis, coefficients in [-spread, spread]."""
    rng = rng or random.Random(0)
    out = []
    dim = len(basis[0])
    while len(out) < count:
        coef = [rng.randint(-spread, spread) for _ in basis]
        v = tuple(sum(c * b[k] for c, b in zip(coef, basis)) for k in range(dim))
        if any(v):
            out.append(LatticeVector(v))
    return out


@dataclass(frozen=True)
class Binomial:
    """``M - M'`` with ``M`` = ``plus`` and ``M'`` = ``minus``.

    Exponents are stored sparsely as sorted ``(var, exp)`` pairs with
    positive exponents; the supports are disjoint.
    """

    nvars: int
    plus: tuple
    minus: tuple
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.plus == self.minus:
            raise ValueError("a binomial needs two distinct monomials")
        for part in (self.plus, self.minus):
            for k, e in part:
                if not 0 <= k < self.nvars or e <= 0:
                    raise ValueError(f"bad exponent entry {(k, e)}")
        if {k for k, _ in self.plus} & {k for k, _ in self.minus}:
            raise ValueError("monomial supports must be disjoint")

    @classmethod
    def from_maps(cls, plus, minus, nvars, label=""):
        """Build from ``{var_index: exponent}`` maps; zero exponents are dropped."""
        clean = lambda m: tuple(sorted((k, e) for k, e in m.items() if e))  # noqa: E731
        return cls(nvars, clean(plus), clean(minus), label)

    def support(self, side):
        return {k for k, _ in (self.plus if side == "plus" else self.minus)}

    def evaluate(self, point):
        """Value at a point given as a sequence of ``FieldElement``."""
        return _monomial(point, self.plus) - _monomial(point, self.minus)

    def vanishes_at(self, point):
        return _monomial(point, self.plus) == _monomial(point, self.minus)

    def to_dict(self, n):
        return {
            "label": self.label,
            "plus": {var_name(k, n): e for k, e in self.plus},
            "minus": {var_name(k, n): e for k, e in self.minus},
        }

    @classmethod
    def from_dict(cls, data, n):
        plus = {var_index(k, n): e for k, e in data["plus"].items()}
        minus = {var_index(k, n): e for k, e in data["minus"].items()}
        return cls.from_maps(plus, minus, 2 * n, data.get("label", ""))

    def pretty(self, n):
        def mono(part):
            if not part:
                return "1"
            return "*".join(var_name(k, n) + (f"^{e}" if e > 1 else "") for k, e in part)
        name = f"{self.label} = " if self.label else ""
        return f"{name}{mono(self.plus)} - {mono(self.minus)}"


def _monomial(point, part):
    acc = point[0].ctx.one
    for k, e in part:
        acc = acc * point[k] ** e
    return acc


def vec_of_binomial(b):
    v = [0] * b.nvars
    for k, e in b.plus:
        v[k] += e
    for k, e in b.minus:
        v[k] -= e
    return LatticeVector(tuple(v))


def binomial_of_vec(v, label=""):
    plus = {k: x for k, x in enumerate(v) if x > 0}
    minus = {k: -x for k, x in enumerate(v) if x < 0}
    return Binomial.from_maps(plus, minus, len(v), label)


def in_ideal(b, A):
    """Lattice criterion: the exponent difference lies in ``ker A``."""
    return A.in_kernel(vec_of_binomial(b).v)


def iter_monic_kernel(A, i, D, exclude=()):
    """Yield kernel vectors whose positive part is ``t * e_{y_i}`` with ``1 <= t <= D``.

    ``i`` is 1-based among ``y_1..y_{n-1}``; columns in ``exclude`` are
    kept out of the negative part.  The negative part ``w >= 0``
    solves ``A w = t * A e_{y_i}``; since every column of ``A`` is
    nonnegative and nonzero, the candidates are finite and enumerated by a
    bounded depth-first search.
    """
    n = A.n
    yi = n + i - 1
    target_col = A.column(yi)
    others = [k for k in range(A.ncols) if k != yi and k not in exclude]
    cols = [A.column(k) for k in others]
    last_touch = [-1] * n
    for pos, col in enumerate(cols):
        for r in range(n):
            if col[r]:
                last_touch[r] = pos

    def dfs(pos, rem, w):
        if pos == len(cols):
            if not any(rem):
                yield tuple(w)
            return
        col = cols[pos]
        bound = min((rem[r] // col[r] for r in range(n) if col[r]), default=0)
        for val in range(bound + 1):
            new = [rem[r] - val * col[r] for r in range(n)]
            if any(new[r] and last_touch[r] <= pos for r in range(n)):
                continue
            w.append(val)
            yield from dfs(pos + 1, new, w)
            w.pop()

    for t in range(1, D + 1):
        for w in dfs(0, [t * x for x in target_col], []):
            v = [0] * A.ncols
            v[yi] = t
            for k, val in zip(others, w):
                v[k] = -val
            yield LatticeVector(tuple(v))


def monic_kernel_search(A, i, D):
    return list(iter_monic_kernel(A, i, D))


def integer_multiple(v, base):
    """``t`` with ``v == t * base``, or None."""
    t = None
    for x, y in zip(v, base):
        if y == 0:
            if x != 0:
                return None
            continue
        if x % y:
            return None
        if t is None:
            t = x // y
        elif t != x // y:
            return None
    return t
