"""Finite-field checks of the defining systems.

Zero sets are enumerated by brute force, vectorized with numpy over the
discrete logarithms of the coordinates and split into chunks indexed by
the first two coordinates.  Membership of a point in the variety over the
algebraic closure is decided by the finite root search that the
parametrization forces (``membership_oracle``).
"""

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from itertools import product
from math import gcd, lcm

import numpy as np
from sympy.ntheory import n_order

from .errors import BudgetError, SearchExhausted
from .family import X, Y, build_system, pairs, phi, phi_codes
from .finitefield import FieldElement, embed, field_of_order, make_field, nth_roots, primitive_root_of_unity
from .numtheory import p_adic_val, solve_dij
from .toric import (build_matrix, integer_multiple, iter_monic_kernel, kernel_basis,
                    random_kernel_vectors, var_name, vec_of_binomial)

DEFAULT_BUDGET = 10**8
BUDGET_ENV = "SIMPTORIC_BUDGET"
MAX_EXTENSION_DEGREE = 64
BLOCK = 1 << 18
IN_V, NOT_IN_V = "InV", "NotInV"


def default_budget():
    return int(os.environ.get(BUDGET_ENV, DEFAULT_BUDGET))


@dataclass(frozen=True)
class PointSet:
    field: object
    points: frozenset

    def __len__(self):
        return len(self.points)

    def __contains__(self, pt):
        return tuple(pt) in self.points

    def __iter__(self):
        return iter(sorted(self.points))

    def __le__(self, other):
        return self.points <= other.points


@dataclass
class VerificationReport:
    check: str
    passed: bool
    instance: dict
    fields: list = dc_field(default_factory=list)
    data: dict = dc_field(default_factory=dict)
    counterexamples: list = dc_field(default_factory=list)
    skipped: list = dc_field(default_factory=list)
    timings: dict = dc_field(default_factory=dict)

    def to_dict(self):
        return {
            "check": self.check,
            "passed": self.passed,
            "instance": self.instance,
            "fields": self.fields,
            "data": self.data,
            "counterexamples": self.counterexamples,
            "skipped": self.skipped,
            "timings": self.timings,
        }


# -- zero-set enumeration ---------------------------------------------------------

def _compile(system, ctx):
    units = ctx.order - 1
    compiled = []
    for b in system:
        sides = []
        for part in (b.plus, b.minus):
            idx = np.array([k for k, _ in part], dtype=np.int64)
            exps = np.array([e % units if units > 1 else 0 for _, e in part], dtype=np.int64)
            sides.append((idx, exps))
        compiled.append(sides)
    return compiled


_WORKER = {}


def _init_worker(compiled, ctx, nvars):
    _WORKER.update(compiled=compiled, ctx=ctx, nvars=nvars)


def _scan_prefix(prefix, compiled=None, ctx=None, nvars=None):
    """Zero points whose leading coordinates equal ``prefix``."""
    if compiled is None:
        compiled, ctx, nvars = _WORKER["compiled"], _WORKER["ctx"], _WORKER["nvars"]
    Q = ctx.order
    units = max(Q - 1, 1)
    logs = ctx.log_table
    rest = nvars - len(prefix)
    total = Q**rest
    found = []
    for start in range(0, total, BLOCK):
        idx = np.arange(start, min(total, start + BLOCK), dtype=np.int64)
        pts = np.empty((idx.size, nvars), dtype=np.int64)
        pts[:, : len(prefix)] = prefix
        for k in range(rest):
            pts[:, nvars - 1 - k] = idx % Q
            idx = idx // Q
        zero = pts == 0
        lg = logs[pts]
        alive = np.ones(pts.shape[0], dtype=bool)
        for sides in compiled:
            vals = []
            for var, exps in sides:
                if var.size:
                    z = zero[:, var].any(axis=1)
                    s = (lg[:, var] * exps).sum(axis=1) % units
                else:
                    z = np.zeros(pts.shape[0], dtype=bool)
                    s = np.zeros(pts.shape[0], dtype=np.int64)
                vals.append((z, s))
            (z1, s1), (z2, s2) = vals
            alive &= (z1 & z2) | (~z1 & ~z2 & (s1 == s2))
            if not alive.any():
                break
        found.extend(map(tuple, pts[alive].tolist()))
    return found


def zero_set(system, ctx, n, budget=None, jobs=1):
    """All points of ``ctx**(2n)`` where every binomial of ``system`` vanishes."""
    budget = default_budget() if budget is None else budget
    nvars = 2 * n
    if ctx.order**nvars > budget:
        raise BudgetError(
            f"|{ctx!r}|^{nvars} = {ctx.order ** nvars} points exceeds the budget {budget}; "
            f"raise it with --budget or ${BUDGET_ENV}"
        )
    if not ctx.has_tables:
        raise BudgetError(f"{ctx!r} is too large for table-based enumeration")
    compiled = _compile(system, ctx)
    prefixes = list(product(range(ctx.order), repeat=min(2, nvars)))
    if jobs > 1:
        with ProcessPoolExecutor(jobs, initializer=_init_worker, initargs=(compiled, ctx, nvars)) as ex:
            chunks = list(ex.map(_scan_prefix, prefixes, chunksize=max(1, len(prefixes) // (4 * jobs))))
    else:
        chunks = [_scan_prefix(pre, compiled, ctx, nvars) for pre in prefixes]
    return PointSet(ctx, frozenset(pt for chunk in chunks for pt in chunk))


def image_set(params, ctx, budget=None):
    """``{phi(u) : u in ctx**n}``."""
    budget = default_budget() if budget is None else budget
    if ctx.order**params.n > budget:
        raise BudgetError(f"|{ctx!r}|^{params.n} exceeds the budget {budget}")
    return PointSet(ctx, frozenset(phi_codes(params, ctx, u)
                                   for u in product(range(ctx.order), repeat=params.n)))


# -- membership oracle ----------------------------------------------------------------

@dataclass
class MembershipVerdict:
    status: str
    witness_params: tuple = None  # FieldElements of ``field``
    extension_degree: int = None
    field: object = None
    reason: str = ""
    transcript: list = dc_field(default_factory=list)
    adjusted: dict = dc_field(default_factory=dict)
    in_base_field: bool = None

    @property
    def in_v(self):
        return self.status == IN_V

    def to_dict(self):
        return {
            "status": self.status,
            "witness_params": None if self.witness_params is None else [u.code for u in self.witness_params],
            "extension_degree": self.extension_degree,
            "field": None if self.field is None else self.field.descriptor(),
            "reason": self.reason,
            "transcript": self.transcript,
            "adjusted": self.adjusted,
            "in_base_field": self.in_base_field,
        }


def _strip_char(N, char):
    return N // char ** p_adic_val(N, char)


def _structural_mismatch(params, xs, ys):
    """A zero pattern no parameter choice can produce, or ''."""
    n = params.n
    if xs[n - 2] == 0:
        if any(ys[i] for i in range(n - 2)) or ys[n - 1]:
            return "x_{n-1} = 0 forces y_1..y_{n-2} and y_n to vanish"
    if xs[n - 1] == 0 and (ys[n - 2] or ys[n - 1]):
        return "x_n = 0 forces y_{n-1} and y_n to vanish"
    for i in range(n - 2):
        if xs[i] == 0 and params.b[i] >= 1 and ys[i]:
            return f"x_{i + 1} = 0 with b_{i + 1} >= 1 forces y_{i + 1} = 0"
    return ""


def extension_degree(ctx, params, x_last, x_n):
    """Smallest degree M (multiple of ``ctx.degree``) holding every needed root.

    A nonzero ``x`` of order ``o`` has a full set of ``N'`` distinct N-th
    roots in GF(q0**M) once ``N' * o`` divides ``q0**M - 1``, where ``N'``
    is ``N`` with its characteristic part removed.
    """
    need = 1
    for x, N in ((x_last, params.q), (x_n, params.a)):
        if x:
            need = lcm(need, _strip_char(N, ctx.char) * ctx.element_order(x))
    if need == 1:
        return ctx.degree
    step = n_order(ctx.order % need, need) if need > 1 else 1
    M = ctx.degree * step
    if M > MAX_EXTENSION_DEGREE:
        raise SearchExhausted(f"root search needs GF({ctx.char}^{M}), above the cap {MAX_EXTENSION_DEGREE}")
    return M


def membership_oracle(point, params, base_field=None):
    """Decide whether ``point`` lies on the variety over the algebraic closure.

    ``u_i = x_i`` for ``i <= n-2`` is forced; ``u_{n-1}`` runs over the
    ``p^l``-th roots of ``x_{n-1}`` and ``u_n`` over the ``a``-th roots of
    ``x_n`` in an extension large enough to hold all of them.  Every
    candidate is pushed through the parametrization and compared with the
    point.
    """
    n = params.n
    if base_field is None:
        base_field = point[0].ctx
    codes = [p.code if isinstance(p, FieldElement) else base_field(p).code for p in point]
    if len(codes) != 2 * n:
        raise ValueError(f"point needs {2 * n} coordinates")
    xs, ys = codes[:n], codes[n:]
    reason = _structural_mismatch(params, xs, ys)
    if reason:
        return MembershipVerdict(NOT_IN_V, extension_degree=base_field.degree, field=base_field, reason=reason)

    M = extension_degree(base_field, params, xs[n - 2], xs[n - 1])
    big = make_field(base_field.char, M)
    target = tuple(embed(FieldElement(base_field, c), big).code for c in codes)
    roots_last = nth_roots(FieldElement(big, target[n - 2]), params.q)
    roots_n = nth_roots(FieldElement(big, target[n - 1]), params.a)
    for x, N, roots in ((target[n - 2], params.q, roots_last), (target[n - 1], params.a, roots_n)):
        expected = 1 if x == 0 else _strip_char(N, big.char)
        if len(roots) != expected:
            raise AssertionError(f"root search incomplete in {big!r}: {len(roots)} of {expected}")

    fixed = list(target[: n - 2])
    transcript = []
    for ul in roots_last:
        for un in roots_n:
            img = phi_codes(params, big, fixed + [ul.code, un.code])
            miss = next((k for k in range(2 * n) if img[k] != target[k]), None)
            transcript.append({"u_n-1": ul.code, "u_n": un.code,
                               "mismatch": None if miss is None else var_name(miss, n)})
            if miss is None:
                u = tuple(FieldElement(big, c) for c in fixed + [ul.code, un.code])
                in_base = all(big.frobenius_fixed(x.code, base_field.degree) for x in u)
                return MembershipVerdict(
                    IN_V, u, M, big, "parametrization matched", transcript,
                    adjusted={"u_n-1": ul != roots_last[0], "u_n": un != roots_n[0]},
                    in_base_field=in_base,
                )
    return MembershipVerdict(NOT_IN_V, None, M, big, "no root candidate reproduces the point", transcript)


def _verdict_sound(verdict, params, point_codes, base_field):
    """Independent re-evaluation of an InV verdict through FieldElement arithmetic."""
    big = verdict.field
    img = phi(params, list(verdict.witness_params))
    return [x.code for x in img] == [embed(FieldElement(base_field, c), big).code for c in point_codes]


def _oracle_task(args):
    pt, params, ctx = args
    v = membership_oracle(pt, params, ctx)
    return pt, v.status, v.extension_degree, v.in_base_field, v.adjusted, (
        _verdict_sound(v, params, pt, ctx) if v.in_v else None)


# -- propositions ----------------------------------------------------------------------

def _instance(params):
    return params.to_dict()


def check_prop1(params, k_list, budget=None, jobs=1):
    """Char-p check: zero set of F_1..F_n equals the image over each GF(p^k)."""
    system = build_system(params)
    rep = VerificationReport("prop1_char_p", True, _instance(params))
    for k in k_list:
        ctx = make_field(params.p, k)
        rep.fields.append(ctx.descriptor())
        surjective = gcd(params.a, ctx.order - 1) == 1
        entry = {"k": k, "field_order": ctx.order, "a_power_surjective": surjective}
        t0 = time.perf_counter()
        try:
            Z = zero_set(system.F, ctx, params.n, budget, jobs)
        except BudgetError as exc:
            rep.skipped.append({"k": k, "reason": str(exc)})
            continue
        t1 = time.perf_counter()
        I = image_set(params, ctx, budget)
        t2 = time.perf_counter()
        entry.update(zero_set_size=len(Z), image_size=len(I), image_in_zero_set=I <= Z,
                     equal=Z.points == I.points)
        rep.timings[f"k={k}"] = {"zero_set": t1 - t0, "image": t2 - t1}
        if not entry["image_in_zero_set"]:
            rep.passed = False
            rep.counterexamples += [{"k": k, "kind": "image point off zero set", "point": list(pt)}
                                    for pt in sorted(I.points - Z.points)[:10]]
        if surjective:
            if not entry["equal"]:
                rep.passed = False
                rep.counterexamples += [{"k": k, "kind": "zero-set point outside image", "point": list(pt)}
                                        for pt in sorted(Z.points - I.points)[:10]]
        else:
            rep.skipped.append({"k": k, "reason": f"gcd(a={params.a}, {ctx.order}-1) != 1: "
                                                  "a-th power map not surjective; equality not asserted"})
        rep.data[f"k={k}"] = entry
    return rep


def check_prop2(params, q, budget=None, jobs=1):
    """Char-not-p check: every zero of F, G, H over GF(q) lies on V over the closure."""
    system = build_system(params)
    ctx = field_of_order(q)
    if ctx.char == params.p:
        raise ValueError(f"q={q} has characteristic p={params.p}")
    rep = VerificationReport("prop2_char_other", True, _instance(params), [ctx.descriptor()])
    t0 = time.perf_counter()
    Z = zero_set(system.all(), ctx, params.n, budget, jobs)
    t1 = time.perf_counter()
    tasks = [(pt, params, ctx) for pt in sorted(Z.points)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(jobs) as ex:
            results = list(ex.map(_oracle_task, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = [_oracle_task(t) for t in tasks]
    t2 = time.perf_counter()
    counts = {IN_V: 0, NOT_IN_V: 0}
    via_ext, degrees, adjusted, unsound = 0, {}, {"u_n-1": 0, "u_n": 0}, 0
    for pt, status, M, in_base, adj, sound in results:
        counts[status] += 1
        if status == NOT_IN_V:
            rep.counterexamples.append({"kind": "zero-set point not on V", "point": list(pt)})
            continue
        degrees[M] = degrees.get(M, 0) + 1
        via_ext += not in_base
        for key in adjusted:
            adjusted[key] += bool(adj.get(key))
        unsound += not sound
    image_ok = None
    if ctx.order**params.n <= (default_budget() if budget is None else budget):
        image_ok = image_set(params, ctx, budget) <= Z
    t3 = time.perf_counter()
    rep.passed = counts[NOT_IN_V] == 0 and unsound == 0 and image_ok is not False
    rep.data = {
        "q": q,
        "system_size": len(system.all()),
        "zero_set_size": len(Z),
        "verdicts": counts,
        "in_v_via_extension": via_ext,
        "extension_degrees": {str(k): v for k, v in sorted(degrees.items())},
        "adjusted_roots": adjusted,
        "unsound_verdicts": unsound,
        "image_in_zero_set": image_ok,
    }
    rep.timings = {"zero_set": t1 - t0, "oracle": t2 - t1, "image": t3 - t2}
    return rep


def check_image_in_zero_set(params, ctx, samples=1000, seed=0, system=None):
    """Every generated binomial vanishes at ``phi(u)`` for random ``u``."""
    system = system or build_system(params)
    rng = random.Random(seed)
    rep = VerificationReport("image_in_zero_set", True, _instance(params), [ctx.descriptor()])
    for _ in range(samples):
        u = [ctx(rng.randrange(ctx.order)) for _ in range(params.n)]
        pt = phi(params, u)
        for b in system.all():
            if not b.vanishes_at(pt):
                rep.passed = False
                rep.counterexamples.append({"u": [x.code for x in u], "binomial": b.label})
    rep.data = {"samples": samples, "seed": seed, "binomials": len(system.all())}
    return rep


# -- witness points ----------------------------------------------------------------------

@dataclass
class WitnessCertificate:
    kind: str
    indices: tuple
    field: object
    eta: int
    point: tuple
    vanishing: list
    nonvanishing: dict
    membership: MembershipVerdict
    required_vanishing: list
    required_nonvanishing_family: str
    conditions: dict
    notes: dict = dc_field(default_factory=dict)

    @property
    def ok(self):
        return (all(lbl in self.vanishing for lbl in self.required_vanishing)
                and any(lbl.startswith(self.required_nonvanishing_family) for lbl in self.nonvanishing)
                and self.membership.status == NOT_IN_V)

    def to_dict(self):
        return {
            "kind": self.kind,
            "indices": list(self.indices),
            "field": self.field.descriptor(),
            "eta": self.eta,
            "point": list(self.point),
            "vanishing": self.vanishing,
            "nonvanishing": self.nonvanishing,
            "membership": self.membership.to_dict(),
            "required_vanishing": self.required_vanishing,
            "conditions": self.conditions,
            "notes": self.notes,
            "ok": self.ok,
        }


def _evaluate_all(system, ctx, codes):
    pt = [FieldElement(ctx, c) for c in codes]
    vanishing, nonvanishing = [], {}
    for b in system.all():
        val = b.evaluate(pt)
        if val.code == 0:
            vanishing.append(b.label)
        else:
            nonvanishing[b.label] = val.code
    return vanishing, nonvanishing


def witness_F(params, i, q):
    """Point killing F_i and F_n but off the variety (needs p^l | q - 1)."""
    n = params.n
    if not 1 <= i <= n - 2:
        raise ValueError(f"index i must lie in 1..{n - 2}")
    ctx = field_of_order(q)
    eta = primitive_root_of_unity(ctx, params.q)
    system = build_system(params)
    codes = [0] * (2 * n)
    for k in (X(params, i), X(params, n - 1), X(params, n), Y(params, n - 1), Y(params, n)):
        codes[k] = 1
    codes[Y(params, i)] = eta.code
    vanishing, nonvanishing = _evaluate_all(system, ctx, codes)
    core = {X(params, n - 1), X(params, n), Y(params, n - 1), Y(params, n)}
    near = core | {X(params, i), Y(params, i)}
    conditions = {}
    for b in system.all():
        if b.label in (f"F{i}", f"F{n}"):
            continue
        tags = []
        for side in ("plus", "minus"):
            supp = b.support(side)
            if supp <= core:
                tags.append(f"{side}:a")
            if not supp <= near:
                tags.append(f"{side}:b")
        conditions[b.label] = tags
    return WitnessCertificate(
        "F", (i,), ctx, eta.code, tuple(codes), vanishing, nonvanishing,
        membership_oracle(codes, params, ctx), [f"F{i}", f"F{n}"], "H", conditions,
    )


def _pair_point(params, i, j, ctx, eta, e_i, e_j):
    n = params.n
    codes = [0] * (2 * n)
    for k in (X(params, i), X(params, j), X(params, n - 1)):
        codes[k] = 1
    codes[Y(params, i)] = (eta**e_i).code
    codes[Y(params, j)] = (eta**e_j).code
    return codes


def witness_pair(params, i, j, q):
    """Point killing F_i and F_j but off the variety (n >= 4, p^l | q - 1).

    The point has ``y_i = eta^e_i``, ``y_j = eta^e_j``.  It lies on the
    variety iff some ``k`` has ``e_i = k c_i`` and ``e_j = k c_j`` mod p^l,
    i.e. iff ``c_j e_i == c_i e_j`` mod p^l.  The exponents therefore come
    from ``c_j e_i - c_i e_j = gcd(c_i, c_j)``, which p does not divide.
    The stored pair ``(d_ij, d_ji)`` with ``c_i d_ij - c_j d_ji = gcd``
    does not rule the congruence out in general (c = (7, 9), p = 5); the
    point it gives is examined too and reported under ``notes``.
    """
    n = params.n
    if n < 4:
        raise ValueError("pairwise witnesses need n >= 4")
    if not 1 <= i < j <= n - 2:
        raise ValueError(f"need 1 <= i < j <= {n - 2}")
    ctx = field_of_order(q)
    eta = primitive_root_of_unity(ctx, params.q)
    system = build_system(params)
    swapped = solve_dij(params.c[j - 1], params.c[i - 1])
    e_i, e_j = swapped.d_ij, swapped.d_ji
    codes = _pair_point(params, i, j, ctx, eta, e_i, e_j)
    vanishing, nonvanishing = _evaluate_all(system, ctx, codes)
    local = {X(params, i), X(params, j), Y(params, i), Y(params, j)}
    conditions = {
        b.label: [side for side in ("plus", "minus") if b.support(side) <= local]
        for b in system.all() if b.label not in (f"F{i}", f"F{j}")
    }
    lit = system.certs.dij[(i, j)]
    lit_codes = _pair_point(params, i, j, ctx, eta, lit.d_ij, lit.d_ji)
    notes = {
        "exponents": [e_i, e_j],
        "stored_dij": [lit.d_ij, lit.d_ji],
        "stored_dij_point": lit_codes,
        "stored_dij_point_status": membership_oracle(lit_codes, params, ctx).status,
    }
    return WitnessCertificate(
        "pair", (i, j), ctx, eta.code, tuple(codes), vanishing, nonvanishing,
        membership_oracle(codes, params, ctx), [f"F{i}", f"F{j}"], "G", conditions, notes,
    )


# -- lattice lemmas ----------------------------------------------------------------------

def _sign(x):
    return (x > 0) - (x < 0)


def check_lemma1(params, samples=1000, seed=0):
    """Sign laws of kernel vectors (support laws of binomials in the ideal).

    (i)   x_i in supp(M) iff y_i in supp(M'); asserted in both directions
          when b_i >= 1.  When b_i = 0 the x_i column of the exponent
          matrix is a unit vector in its own row, so every kernel vector has
          v[x_i] = 0: the forward direction holds vacuously and the reverse
          direction fails whenever v[y_i] != 0.  Those events are counted,
          and v[x_i] = 0 is asserted instead.
    (ii)  a positive (negative) entry among x_n, y_{n-1}, y_n forces a
          negative (positive) entry among the other two.
    (iii) same for x_{n-1} against y_1..y_{n-2}, y_n.
    """
    n = params.n
    A = build_matrix(params)
    basis = kernel_basis(A)
    vecs = random_kernel_vectors(basis, samples, random.Random(seed))
    rep = VerificationReport("lemma1", True, _instance(params))
    failures = {"i": 0, "ii": 0, "iii": 0}
    degenerate_reverse = 0
    triple = [X(params, n), Y(params, n - 1), Y(params, n)]
    partners = [Y(params, k) for k in range(1, n - 1)] + [Y(params, n)]
    for vec in vecs:
        v = vec.v
        bad = []
        for i in range(1, n - 1):
            xv, yv = v[X(params, i)], v[Y(params, i)]
            if params.b[i - 1] >= 1:
                if (xv or yv) and _sign(xv) != -_sign(yv):
                    bad.append(("i", i))
            else:
                if xv != 0:
                    bad.append(("i", i))
                elif yv != 0:
                    degenerate_reverse += 1
        for s in triple:
            if v[s] and not any(_sign(v[t]) == -_sign(v[s]) for t in triple if t != s):
                bad.append(("ii", var_name(s, n)))
        xl = v[X(params, n - 1)]
        if xl and not any(_sign(v[t]) == -_sign(xl) for t in partners):
            bad.append(("iii", None))
        for law, where in bad:
            failures[law] += 1
            if len(rep.counterexamples) < 10:
                rep.counterexamples.append({"law": law, "where": where, "vector": list(v)})
    rep.passed = not any(failures.values())
    rep.data = {
        "samples": samples,
        "seed": seed,
        "kernel_rank": len(basis),
        "failures": failures,
        "reverse_law_i_inapplicable_b0": degenerate_reverse,
    }
    return rep


def check_lemma2(params, D):
    """Monic kernel vectors in y_i are multiples of vec(F_i), i = 1..n-1.

    For ``i <= n-2`` the claim relies on ``y_k`` vanishing at the point
    ``u_i = u_{n-1} = 1``, others 0, which needs ``b_k >= 1`` for every
    ``k != i``.  Where some ``b_k = 0`` the search first runs with those
    ``y_k`` barred from the second monomial (the claim that still holds),
    then records one explicit monic binomial using them.
    """
    if D < params.q or D < params.a:
        raise ValueError("D must be at least p^l and a")
    n = params.n
    A = build_matrix(params)
    system = build_system(params)
    rep = VerificationReport("lemma2", True, _instance(params))
    per_index = {}
    for i in range(1, n):
        base = vec_of_binomial(system.F[i - 1]).v
        degenerate = [Y(params, k) for k in range(1, n - 1)
                      if i <= n - 2 and k != i and params.b[k - 1] == 0]
        found, bad = [], []
        for v in iter_monic_kernel(A, i, D, exclude=degenerate):
            t = integer_multiple(v.v, base)
            (found if t is not None and t > 0 else bad).append(v)
        expected = D // base[Y(params, i)]
        entry = {"monic_vectors": len(found) + len(bad), "multiples_found": len(found),
                 "multiples_expected": expected, "excluded": [var_name(k, n) for k in degenerate]}
        if bad or len(found) != expected:
            rep.passed = False
            rep.counterexamples += [{"i": i, "vector": list(v.v)} for v in bad[:10]]
        if degenerate:
            extra = next((v for v in iter_monic_kernel(A, i, D) if integer_multiple(v.v, base) is None), None)
            entry["degenerate_example"] = None if extra is None else list(extra.v)
        per_index[str(i)] = entry
    rep.data = {"D": D, "indices": per_index}
    return rep
