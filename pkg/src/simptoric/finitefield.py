"""Exact arithmetic in GF(q0**m).

Elements are encoded as integers ``code = sum(c_k * q0**k)`` where
``c_0..c_{m-1}`` are the coefficients of the element as a polynomial in a
root of the context modulus.  ``FieldElement`` wraps a code together with
its ``FieldCtx``; hot loops work on raw codes through the ``FieldCtx``
methods.

Fields with at most ``TABLE_LIMIT`` elements carry exp/log tables with
respect to the stored generator, which makes multiplication, powering and
discrete logarithms table lookups.  Larger fields fall back to polynomial
arithmetic and Pohlig-Hellman logarithms (baby-step giant-step in each
prime-order subgroup).
"""

from functools import lru_cache
from math import gcd, isqrt

import numpy as np
from sympy import factorint, isprime
from sympy.ntheory.modular import crt

from .errors import NoSuchRootOfUnity

TABLE_LIMIT = 1 << 20
SCAN_LIMIT = 10_000


# -- polynomials over GF(q0): coefficient lists, lowest degree first ---------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a, b, q0):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([v % q0 for v in out])


def _poly_divmod(a, f, q0):
    """Quotient and remainder of ``a`` by a nonzero polynomial ``f``."""
    a = _trim(list(a))
    df = len(f) - 1
    if len(a) - 1 < df:
        return [], a
    inv_lead = pow(f[-1], -1, q0)
    quot = [0] * (len(a) - df)
    while len(a) - 1 >= df and a:
        shift = len(a) - 1 - df
        coef = a[-1] * inv_lead % q0
        quot[shift] = coef
        for k, fk in enumerate(f):
            a[shift + k] = (a[shift + k] - coef * fk) % q0
        _trim(a)
    return _trim(quot), a


def _poly_mod(a, f, q0):
    return _poly_divmod(a, f, q0)[1]


def _poly_mulmod(a, b, f, q0):
    return _poly_mod(_poly_mul(a, b, q0), f, q0)


def _poly_powmod(a, e, f, q0):
    result = [1]
    base = _poly_mod(a, f, q0)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, q0)
        base = _poly_mulmod(base, base, f, q0)
        e >>= 1
    return result


def _poly_sub(a, b, q0):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % q0 for x, y in zip(a, b)])


def _poly_gcd(a, b, q0):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, q0)
    return a


def is_irreducible(f, q0):
    """Rabin's irreducibility test for a polynomial over GF(q0)."""
    f = _trim(list(f))
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = [0, 1]
    if _poly_sub(_poly_powmod(x, q0**m, f, q0), x, q0):
        return False
    for r in factorint(m):
        h = _poly_sub(_poly_powmod(x, q0 ** (m // r), f, q0), x, q0)
        if len(_poly_gcd(f, h, q0)) != 1:
            return False
    return True


def _digits(code, q0, m):
    out = []
    for _ in range(m):
        code, r = divmod(code, q0)
        out.append(r)
    return out


def _encode(digits, q0):
    code = 0
    for c in reversed(digits):
        code = code * q0 + c
    return code


# -- field context ------------------------------------------------------------

class FieldCtx:
    """Descriptor of GF(q0**m) with a fixed modulus and generator.

    Construct through :func:`make_field`; contexts are cached so equal
    arguments give the same object.  Equality and hashing use
    ``(char, degree, modulus)`` so contexts survive pickling.
    """

    def __init__(self, q0, m, modulus, generator, use_tables):
        self.char = q0
        self.degree = m
        self.modulus = tuple(modulus)
        self.order = q0**m
        self.generator = generator
        self.has_tables = use_tables
        self._unit_order = self.order - 1
        self._unit_factorization = factorint(self._unit_order) if self._unit_order > 1 else {}
        self._unit_factors = tuple(self._unit_factorization)
        self._bsgs = {}
        if use_tables:
            self._build_tables()

    # identity -------------------------------------------------------------
    def _key(self):
        return (self.char, self.degree, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"GF({self.char}^{self.degree})" if self.degree > 1 else f"GF({self.char})"

    def __getstate__(self):
        state = dict(self.__dict__)
        state["_bsgs"] = {}
        for key in ("_exp", "_log"):
            state.pop(key, None)
        return state

    def __setstate__(self, state):
        self.__dict__.update(state)
        if self.has_tables:
            self._exp = self.exp_table.tolist()
            self._log = self.log_table.tolist()

    def descriptor(self):
        return {
            "char": self.char,
            "degree": self.degree,
            "order": self.order,
            "modulus": list(self.modulus),
            "generator": self.generator,
        }

    # tables ----------------------------------------------------------------
    def _build_tables(self):
        q0, m, n = self.char, self.degree, self._unit_order
        # matrix of multiplication by the generator on coefficient vectors
        gen = _digits(self.generator, q0, m)
        basis = [[0] * k + [1] for k in range(m)]
        mult = np.array(
            [_digits(_encode(_poly_mulmod(gen, b, list(self.modulus), q0), q0), q0, m) for b in basis],
            dtype=np.int64,
        ).T
        block = max(1, isqrt(n))
        first = np.zeros((block, m), dtype=np.int64)
        vec = np.zeros(m, dtype=np.int64)
        vec[0] = 1
        for k in range(block):
            first[k] = vec
            vec = mult @ vec % q0
        step = np.eye(m, dtype=np.int64)
        for _ in range(block):
            step = mult @ step % q0
        weights = q0 ** np.arange(m, dtype=np.int64)
        chunks = []
        cur = first
        for _ in range(-(-n // block)):
            chunks.append(cur @ weights)
            cur = cur @ step.T % q0
        exp = np.concatenate(chunks)[:n]
        log = np.full(self.order, -1, dtype=np.int64)
        log[exp] = np.arange(n, dtype=np.int64)
        if (log[1:] < 0).any():
            raise ValueError(f"{self.generator} does not generate {self!r}")
        self.exp_table = exp
        self.log_table = log
        self._exp = exp.tolist()
        self._log = log.tolist()

    # raw code arithmetic ---------------------------------------------------
    def add(self, a, b):
        q0 = self.char
        if self.degree == 1:
            return (a + b) % q0
        out, w = 0, 1
        while a or b:
            a, x = divmod(a, q0)
            b, y = divmod(b, q0)
            out += ((x + y) % q0) * w
            w *= q0
        return out

    def neg(self, a):
        q0 = self.char
        if self.degree == 1:
            return -a % q0
        out, w = 0, 1
        while a:
            a, x = divmod(a, q0)
            out += (-x % q0) * w
            w *= q0
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def _polymul(self, a, b):
        q0, m = self.char, self.degree
        prod = _poly_mulmod(_digits(a, q0, m), _digits(b, q0, m), list(self.modulus), q0)
        return _encode(prod, q0)

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self.has_tables:
            return self._exp[(self._log[a] + self._log[b]) % self._unit_order]
        if self.degree == 1:
            return a * b % self.char
        return self._polymul(a, b)

    def pow(self, a, e):
        if e == 0:
            return 1
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 0
        if self.has_tables:
            return self._exp[(self._log[a] * e) % self._unit_order]
        e %= self._unit_order
        if self.degree == 1:
            return pow(a, e, self.char)
        q0, m = self.char, self.degree
        return _encode(_poly_powmod(_digits(a, q0, m), e, list(self.modulus), q0), q0)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self!r}")
        return self.pow(a, -1)

    def log(self, a):
        """Discrete logarithm of a nonzero code with respect to the generator."""
        if a == 0:
            raise ValueError("log(0) is undefined")
        if self.has_tables:
            return self._log[a]
        return self._bsgs_log(a)

    def exp(self, k):
        if self.has_tables:
            return self._exp[k % self._unit_order]
        return self.pow(self.generator, k % self._unit_order)

    def _bsgs_log(self, a):
        """Pohlig-Hellman over the prime factors of ``|F|-1``, BSGS per prime."""
        n = self._unit_order
        residues, moduli = [], []
        for r, e in self._unit_factorization.items():
            re_ = r**e
            gr = self.pow(self.generator, n // r)
            # gr has order r; lift the log of a^(n / r^e) one r-adic digit at a time
            h = self.pow(a, n // re_)
            g_e = self.pow(self.generator, n // re_)
            x = 0
            for k in range(e):
                probe = self.mul(h, self.pow(g_e, -x))
                digit = self._subgroup_log(self.pow(probe, re_ // r ** (k + 1)), gr, r)
                x += digit * r**k
            residues.append(x)
            moduli.append(re_)
        if not moduli:
            return 0
        return int(crt(moduli, residues)[0]) % n

    def _subgroup_log(self, a, g, r):
        """Log of ``a`` to base ``g`` of prime order ``r`` (baby-step giant-step)."""
        table = self._bsgs.get(r)
        if table is None:
            width = isqrt(r) + 1
            baby, cur = {}, 1
            for j in range(width):
                baby.setdefault(cur, j)
                cur = self.mul(cur, g)
            table = self._bsgs[r] = (width, baby, self.inv(cur))
        width, baby, giant = table
        cur = a
        for i in range(width + 1):
            j = baby.get(cur)
            if j is not None:
                return (i * width + j) % r
            cur = self.mul(cur, giant)
        raise ValueError(f"{a} is not a power of {g} in {self!r}")

    def element_order(self, a):
        """Multiplicative order of a nonzero code."""
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        n = self._unit_order
        if self.has_tables:
            return n // gcd(self._log[a], n)
        order = n
        for r in self._unit_factors:
            while order % r == 0 and self.pow(a, order // r) == 1:
                order //= r
        return order

    def frobenius_fixed(self, a, k):
        """True when ``a`` lies in the subfield GF(q0**k)."""
        return self.pow(a, self.char**k) == a

    # element-level helpers ----------------------------------------------------
    def __call__(self, value):
        """Element from an int code or a coefficient list."""
        if isinstance(value, FieldElement):
            if value.ctx != self:
                raise ValueError(f"element of {value.ctx!r} used in {self!r}")
            return value
        if isinstance(value, (list, tuple)):
            if len(value) > self.degree:
                raise ValueError("too many coefficients")
            return FieldElement(self, _encode([v % self.char for v in value], self.char))
        value = int(value)
        if self.degree == 1:
            return FieldElement(self, value % self.char)
        if not 0 <= value < self.order:
            raise ValueError(f"code {value} out of range for {self!r}")
        return FieldElement(self, value)

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    def elements(self):
        return [FieldElement(self, c) for c in range(self.order)]


class FieldElement:
    __slots__ = ("ctx", "code")

    def __init__(self, ctx, code):
        self.ctx = ctx
        self.code = code

    @property
    def coeffs(self):
        return tuple(_digits(self.code, self.ctx.char, self.ctx.degree))

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.ctx != self.ctx:
                raise ValueError(f"field mismatch: {self.ctx!r} vs {other.ctx!r}")
            return other.code
        if isinstance(other, int):
            return self.ctx(other).code
        raise TypeError(f"cannot combine a field element with {type(other).__name__}")

    def __add__(self, other):
        b = self._other(other)
        return FieldElement(self.ctx, self.ctx.add(self.code, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return FieldElement(self.ctx, self.ctx.sub(self.code, b))

    def __rsub__(self, other):
        b = self._other(other)
        return FieldElement(self.ctx, self.ctx.sub(b, self.code))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.code))

    def __mul__(self, other):
        b = self._other(other)
        return FieldElement(self.ctx, self.ctx.mul(self.code, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return FieldElement(self.ctx, self.ctx.mul(self.code, self.ctx.inv(b)))

    def __pow__(self, e):
        return FieldElement(self.ctx, self.ctx.pow(self.code, e))

    def inv(self):
        return FieldElement(self.ctx, self.ctx.inv(self.code))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.ctx == other.ctx and self.code == other.code
        if isinstance(other, int):
            return self.code == self.ctx(other).code
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.code))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        if self.ctx.degree == 1:
            return f"{self.code}"
        return f"{self.ctx!r}{list(self.coeffs)}"


# -- construction ---------------------------------------------------------------

def _least_irreducible(q0, m):
    for low in range(q0**m):
        f = _digits(low, q0, m) + [1]
        if is_irreducible(f, q0):
            return f
    raise ValueError(f"no irreducible polynomial of degree {m} over GF({q0})")  # unreachable


@lru_cache(maxsize=None)
def make_field(q0, m=1, use_tables=None):
    """Deterministic GF(q0**m): least irreducible monic modulus, least generator.

    Moduli are ordered by the code of their lower coefficients, generators
    by element code.  ``use_tables`` defaults to ``order <= TABLE_LIMIT``.
    """
    if not isinstance(q0, int) or q0 < 2 or not isprime(q0):
        raise ValueError(f"characteristic must be prime, got {q0}")
    if m < 1:
        raise ValueError(f"degree must be >= 1, got {m}")
    order = q0**m
    if use_tables is None:
        use_tables = order <= TABLE_LIMIT
    modulus = _least_irreducible(q0, m)
    probe = FieldCtx(q0, m, modulus, 1, use_tables=False)
    n = order - 1
    generator = None
    for cand in range(1, order):
        if all(probe.pow(cand, n // r) != 1 for r in probe._unit_factors):
            generator = cand
            break
    return FieldCtx(q0, m, modulus, generator, use_tables)


def field_of_order(q):
    """GF(q) for a prime power ``q``."""
    f = factorint(q)
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    (q0, m), = f.items()
    return make_field(q0, m)


def nth_roots(x, n, method="auto"):
    """All ``y`` in the field of ``x`` with ``y**n == x``, sorted by code.

    ``method`` is ``"scan"`` (test every element), ``"dlog"`` (solve in
    the exponent of the generator) or ``"auto"`` (scan small fields).
    """
    if n < 1:
        raise ValueError("root order must be positive")
    ctx = x.ctx
    if x.code == 0:
        return [ctx.zero]
    if method == "auto":
        method = "scan" if ctx.order <= SCAN_LIMIT else "dlog"
    if method == "scan":
        return [FieldElement(ctx, y) for y in range(1, ctx.order) if ctx.pow(y, n) == x.code]
    if method != "dlog":
        raise ValueError(f"unknown method {method!r}")
    units = ctx.order - 1
    g = gcd(n, units)
    lx = ctx.log(x.code)
    if lx % g:
        return []
    step = units // g
    base = (lx // g) * pow(n // g, -1, step) % step if step > 1 else 0
    return sorted((FieldElement(ctx, ctx.exp(base + k * step)) for k in range(g)), key=lambda e: e.code)


def primitive_root_of_unity(ctx, order):
    """``generator ** ((|F|-1)/order)``, an element of exact order ``order``."""
    if order < 1:
        raise ValueError("order must be positive")
    units = ctx.order - 1
    if units % order:
        raise NoSuchRootOfUnity(f"{ctx!r} has no primitive {order}-th root of unity")
    return FieldElement(ctx, ctx.exp(units // order))


@lru_cache(maxsize=None)
def _embedding_image(source, target):
    """Code in ``target`` of the least root of ``source.modulus``."""
    ratio = (target.order - 1) // (source.order - 1)
    f = list(source.modulus)
    candidates = [0] + [target.exp(k * ratio) for k in range(source.order - 1)]
    for beta in sorted(candidates):
        acc = 0
        for coef in reversed(f):
            acc = target.add(target.mul(acc, beta), coef % target.char)
        if acc == 0:
            return beta
    raise ValueError(f"{source!r} does not embed in {target!r}")  # unreachable


def embed(x, target):
    """Image of ``x`` under the fixed embedding of its field into ``target``."""
    src = x.ctx
    if src == target:
        return x
    if src.char != target.char or target.degree % src.degree:
        raise ValueError(f"{src!r} is not a subfield of {target!r}")
    if src.degree == 1:
        return FieldElement(target, x.code)
    beta = _embedding_image(src, target)
    acc = 0
    for coef in reversed(x.coeffs):
        acc = target.add(target.mul(acc, beta), coef)
    return FieldElement(target, acc)
