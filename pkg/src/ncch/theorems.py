"""Mechanical verification of the symmetric-determinant identities.

Each check builds instances from a :class:`CheckConfig`, evaluates the two
sides of an identity along separate code paths, and returns a
:class:`VerificationReport`.  Symbolic (free-algebra) instances use one
generator per matrix entry, so a pass there is a polynomial identity.
"""
from __future__ import annotations

import functools
import random
import string
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import singledispatch
from math import factorial
from typing import Any, Callable, Iterable, Iterator

from . import exprparse, perm
from . import matrix as ncmatrix
from . import tpoly
from .freealg import FreeAlgebra, is_commutator_sum
from .grassmann import GrassmannAlgebra, chain_product, random_element
from .matrix import MatrixRing, RingMatrix
from .rings import QQ, RationalField, Ring, commutator, engel, leibniz_expand, left_normed
from .tpoly import TPolyRing

RING_KINDS = ("free", "grassmann", "rational", "u2")


@dataclass(frozen=True)
class CheckConfig:
    """ring: ``free``, ``grassmann:K`` (``grassmann`` alone means K = 2n), ``rational`` or ``u2``."""

    ring: str = "free"
    n: int = 2
    trials: int = 1
    seed: int = 0
    max_len: int = 2
    terms: int = 3

    @property
    def kind(self) -> str:
        return self.ring.split(":", 1)[0].strip().lower()

    @property
    def rank(self) -> int:
        _, _, k = self.ring.partition(":")
        return int(k) if k else 2 * self.n

    def validate(self) -> None:
        if self.kind not in RING_KINDS:
            raise ValueError(f"unknown ring {self.ring!r}; expected one of free, grassmann:K, rational, u2")
        if self.kind == "grassmann":
            _, _, k = self.ring.partition(":")
            if k and not k.strip().isdigit():
                raise ValueError(f"bad Grassmann rank in {self.ring!r}")
            if self.rank < 1 or not 0 <= self.max_len <= self.rank:
                raise ValueError(f"need rank >= 1 and 0 <= max_len <= rank, got {self.ring!r}, max_len={self.max_len}")
        elif ":" in self.ring:
            raise ValueError(f"ring {self.kind!r} takes no parameter")
        perm.check_n(self.n)
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if self.terms < 0:
            raise ValueError(f"terms must be >= 0, got {self.terms}")

    def label(self) -> str:
        return f"grassmann:{self.rank}" if self.kind == "grassmann" else self.kind


@dataclass
class Counterexample:
    trial: int
    instance: Any
    lhs: str
    rhs: str
    detail: str = ""

    def to_dict(self) -> dict:
        return {"trial": self.trial, "detail": self.detail, "instance": self.instance, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class VerificationReport:
    check: str
    status: str  # pass | fail | error
    ring: str
    n: int
    trials: int
    seed: int
    counterexample: Counterexample | None = None
    error: str | None = None
    millis: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        out = {
            "schema": 1,
            "check": self.check,
            "status": self.status,
            "ring": self.ring,
            "n": self.n,
            "trials": self.trials,
            "seed": self.seed,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample.to_dict()
        if self.error is not None:
            out["error"] = self.error
        out["millis"] = round(self.millis, 3)
        return out


# -- instances -----------------------------------------------------------

def entry_names(n: int) -> list[str]:
    """a, b, c, ... row by row for n <= 4; a1_1, a1_2, ... beyond."""
    if n <= 4:
        return list(string.ascii_lowercase[: n * n])
    return [f"a{i + 1}_{j + 1}" for i in range(n) for j in range(n)]


def generic_matrix(n: int) -> RingMatrix:
    """n x n matrix of distinct free generators."""
    alg = FreeAlgebra(entry_names(n))
    gens = alg.gens
    return RingMatrix(alg, [gens[i * n: (i + 1) * n] for i in range(n)])


def trial_rng(seed: int, trial: int, salt: str = "") -> random.Random:
    return random.Random(f"ncch:{seed}:{trial}:{salt}")


U2 = MatrixRing(2, QQ, upper=True)


def make_ring(cfg: CheckConfig) -> Ring:
    kind = cfg.kind
    if kind == "free":
        return FreeAlgebra(entry_names(cfg.n))
    if kind == "grassmann":
        return GrassmannAlgebra(cfg.rank)
    if kind == "rational":
        return QQ
    return U2


def random_scalar(cfg: CheckConfig, rng: random.Random):
    """One random ring element for the non-symbolic ring kinds."""
    kind = cfg.kind
    if kind == "grassmann":
        return random_element(cfg.rank, cfg.max_len, min(cfg.terms, 2 ** cfg.rank), rng)
    if kind == "rational":
        return Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    if kind == "u2":
        x = [Fraction(rng.randint(-3, 3)) for _ in range(3)]
        return RingMatrix(QQ, [[x[0], x[1]], [Fraction(0), x[2]]])
    raise ValueError(f"no random elements for ring {cfg.ring!r}")


def random_matrix(cfg: CheckConfig, rng: random.Random) -> RingMatrix:
    ring = make_ring(cfg)
    n = cfg.n
    return RingMatrix(ring, [[random_scalar(cfg, rng) for _ in range(n)] for _ in range(n)])


def random_invertible(n: int, rng: random.Random) -> RingMatrix:
    while True:
        P = RingMatrix(QQ, [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)])
        if ncmatrix.rational_det(P) != 0:
            return P


def effective_trials(cfg: CheckConfig, symbolic_repeats: bool = False) -> int:
    if cfg.kind == "free" and not symbolic_repeats:
        return 1
    return cfg.trials


def instances(cfg: CheckConfig, symbolic_repeats: bool = False) -> Iterator[tuple[int, RingMatrix, random.Random]]:
    """(trial, A, rng) triples; free rings give the generic matrix."""
    for trial in range(effective_trials(cfg, symbolic_repeats)):
        rng = trial_rng(cfg.seed, trial)
        if cfg.kind == "free":
            yield trial, generic_matrix(cfg.n), rng
        else:
            yield trial, random_matrix(cfg, rng), rng


# -- commutator-span membership ---------------------------------------------

@singledispatch
def in_commutator_span(ring: Ring, x) -> bool:
    raise TypeError(f"no [R,R] membership test for {ring!r}")


@in_commutator_span.register
def _(ring: FreeAlgebra, x):
    return is_commutator_sum(x)


@in_commutator_span.register
def _(ring: GrassmannAlgebra, x):
    # [E,E] is spanned by the even blades of length >= 2
    return not x.odd_part() and 0 not in x.terms


@in_commutator_span.register
def _(ring: RationalField, x):
    return x == 0


@in_commutator_span.register
def _(ring: MatrixRing, x):
    if ring.base != QQ:
        raise TypeError(f"no [R,R] membership test for {ring!r}")
    if ring.upper:
        return all(x.rows[i][i] == 0 for i in range(ring.n))
    return ncmatrix.trace(x) == 0


@in_commutator_span.register
def _(ring: TPolyRing, x):
    return all(in_commutator_span(ring.base, c) for c in x.coeffs)


# -- serialization ------------------------------------------------------------

def show(x) -> str:
    if isinstance(x, str):
        return x
    if isinstance(x, RingMatrix):
        try:
            return exprparse.format_matrix(x).replace("\n", "; ")
        except TypeError:
            return repr(x)
    try:
        return exprparse.format_element(x)
    except TypeError:
        return repr(x)


def document(A: RingMatrix) -> str:
    try:
        return exprparse.format_document(A)
    except TypeError:
        return repr(A)


def element_instance(ring: Ring, **elements) -> dict:
    out = {"ring": exprparse.ring_decl(ring)}
    out.update({k: show(v) for k, v in elements.items()})
    return out


def mismatch(trial: int, instance, lhs, rhs, detail: str = "") -> Counterexample:
    if isinstance(instance, RingMatrix):
        instance = document(instance)
    return Counterexample(trial, instance, show(lhs), show(rhs), detail)


# -- registry -----------------------------------------------------------------

@dataclass
class CheckSpec:
    name: str
    func: Callable[[CheckConfig], VerificationReport]
    rings: tuple
    default: CheckConfig
    symbolic_repeats: bool = False


CHECKS: dict[str, CheckSpec] = {}


class CheckError(ValueError):
    """Configuration a check cannot run on."""


def register(name: str, rings=RING_KINDS, default: CheckConfig = CheckConfig(), symbolic_repeats=False):
    def deco(body):
        @functools.wraps(body)
        def run(cfg: CheckConfig) -> VerificationReport:
            start = time.perf_counter()
            cx = error = None
            try:
                cfg.validate()
                if cfg.kind not in rings:
                    raise CheckError(f"check {name!r} needs ring kind in {list(rings)}, got {cfg.ring!r}")
                cx = body(cfg)
                status = "pass" if cx is None else "fail"
            except Exception as e:  # reports capture every failure mode
                status, error = "error", f"{type(e).__name__}: {e}"
            try:
                label = cfg.label()
            except Exception:
                label = cfg.ring
            trials = cx.trial + 1 if cx is not None else (0 if error else effective_trials(cfg, symbolic_repeats))
            return VerificationReport(
                check=name,
                status=status,
                ring=label,
                n=cfg.n,
                trials=trials,
                seed=cfg.seed,
                counterexample=cx,
                error=error,
                millis=(time.perf_counter() - start) * 1000,
            )

        CHECKS[name] = CheckSpec(name, run, tuple(rings), default, symbolic_repeats)
        return run

    return deco


# -- checks ---------------------------------------------------------------

@register("trace_sdet", default=CheckConfig("free", 2))
def check_trace_sdet(cfg: CheckConfig):
    """tr(A A*) = sdet(A) = tr(A* A), plus tau-rho/alpha-beta agreement."""
    for trial, A, _ in instances(cfg):
        lam = ncmatrix.sdet(A)
        star = ncmatrix.sadj(A)
        right = ncmatrix.trace(A * star)
        left = ncmatrix.trace(star * A)
        if right != lam:
            return mismatch(trial, A, right, lam, "tr(A A*) != sdet(A)")
        if left != lam:
            return mismatch(trial, A, left, lam, "tr(A* A) != sdet(A)")
        other = ncmatrix.sdet(A, "tau-rho")
        if other != lam:
            return mismatch(trial, A, other, lam, "tau-rho sdet != alpha-beta sdet")
        if cfg.kind == "rational":
            expected = factorial(cfg.n) * ncmatrix.rational_det(A)
            if lam != expected:
                return mismatch(trial, A, lam, expected, "sdet(A) != n! det(A)")
    return None


def displayed_2x2_parts(A: RingMatrix):
    """The displayed 2x2 commutator parts, built directly from commutators of the entries."""
    (a, b), (c, d) = A.rows
    C = RingMatrix(A.ring, [
        [-commutator(a, d) + commutator(c, b), 2 * commutator(d, b)],
        [2 * commutator(a, c), commutator(a, d) - commutator(c, b)],
    ])
    D = RingMatrix(A.ring, [
        [commutator(a, d) + commutator(c, b), 2 * commutator(b, a)],
        [2 * commutator(c, d), -commutator(a, d) - commutator(c, b)],
    ])
    return C, D


@register("commutator_parts", default=CheckConfig("free", 2))
def check_commutator_parts(cfg: CheckConfig):
    """Entries of C, D and of every C(i), D(i) lie in [R,R]; traces vanish; C(n) = D(n) = 0."""
    zero = None
    for trial, A, _ in instances(cfg):
        ring = A.ring
        zero = ring.zero
        parts = ncmatrix.commutator_parts(A)
        data = tpoly.poly_commutator_parts(A)
        named = [("C", parts.C), ("D", parts.D)]
        named += [(f"C({i})", m) for i, m in enumerate(data.C)]
        named += [(f"D({i})", m) for i, m in enumerate(data.D)]
        for label, M in named:
            for i, j, x in M.entries():
                if not in_commutator_span(ring, x):
                    return mismatch(trial, A, x, "an element of [R,R]", f"{label}[{i},{j}] not a commutator sum")
            tr = ncmatrix.trace(M)
            if tr != zero:
                return mismatch(trial, A, tr, zero, f"tr({label}) != 0")
        n = A.n
        if data.C[n] or data.D[n]:
            return mismatch(trial, A, data.C[n], data.D[n], "C(n), D(n) not both zero")
        if cfg.kind == "free" and n == 2:
            C, D = displayed_2x2_parts(A)
            if parts.C != C:
                return mismatch(trial, A, parts.C, C, "C differs from the displayed 2x2 matrix")
            if parts.D != D:
                return mismatch(trial, A, parts.D, D, "D differs from the displayed 2x2 matrix")
    return None


def bracket_matrix(lam, A: RingMatrix) -> RingMatrix:
    """[[lam, a_ij]] entrywise."""
    return A.map(lambda a: commutator(lam, a))


@register("thm23", default=CheckConfig("free", 2))
def check_thm23(cfg: CheckConfig):
    """A C - D A = [[lambda, a_ij]] with lambda = sdet(A)."""
    for trial, A, _ in instances(cfg):
        parts = ncmatrix.commutator_parts(A)
        lhs = A * parts.C - parts.D * A
        rhs = bracket_matrix(ncmatrix.sdet(A, "tau-rho"), A)
        if lhs != rhs:
            return mismatch(trial, A, lhs, rhs, "AC - DA != [[lambda, a_ij]]")
    return None


def pairwise_products_vanish(M: RingMatrix):
    """First (i, j, k, l, product) with M[i,j] M[k,l] != 0, else None."""
    entries = list(M.entries())
    for i, j, x in entries:
        for k, l, y in entries:
            prod = x * y
            if prod:
                return i, j, k, l, prod
    return None


GRADED = ("grassmann", "rational")


@register("thm23_engel2", rings=GRADED, default=CheckConfig("grassmann:4", 2, trials=5))
def check_thm23_engel2(cfg: CheckConfig):
    """Over an Engel-index-2 ring with 1/2: entry products of AC - DA vanish and (AC - DA)^2 = 0."""
    for trial, A, _ in instances(cfg):
        parts = ncmatrix.commutator_parts(A)
        M = A * parts.C - parts.D * A
        bad = pairwise_products_vanish(M)
        if bad:
            i, j, k, l, prod = bad
            return mismatch(trial, A, prod, 0, f"(AC-DA)[{i},{j}] * (AC-DA)[{k},{l}] != 0")
        sq = M * M
        if sq:
            return mismatch(trial, A, sq, 0, "(AC-DA)^2 != 0")
    return None


def odd_matrix(A: RingMatrix) -> RingMatrix:
    return A.map(A.ring.odd_part)


@register("thm25", rings=GRADED, default=CheckConfig("grassmann:6", 2, trials=5))
def check_thm25(cfg: CheckConfig):
    """A C - D A = 2 lambda_1 A_1 for a GL-graded ring."""
    for trial, A, _ in instances(cfg):
        parts = ncmatrix.commutator_parts(A)
        lhs = A * parts.C - parts.D * A
        lam1 = A.ring.odd_part(ncmatrix.sdet(A, "tau-rho"))
        rhs = odd_matrix(A).lmul(2 * lam1)
        if lhs != rhs:
            return mismatch(trial, A, lhs, rhs, "AC - DA != 2 lambda_1 A_1")
    return None


@register("thm22", rings=GRADED, default=CheckConfig("grassmann:6", 2, trials=10))
def check_thm22_instance(cfg: CheckConfig):
    """Engel index 2 (k = 1, d = 2): [y1, x][y2, x] = 0 and [r1 r2, x, x] = 2 [r1, x][r2, x]."""
    ring = make_ring(cfg)
    for trial in range(cfg.trials):
        rng = trial_rng(cfg.seed, trial, "thm22")
        x, y1, y2, r1, r2 = (random_scalar(cfg, rng) for _ in range(5))
        inst = element_instance(ring, x=x, y1=y1, y2=y2, r1=r1, r2=r2)
        lhs = commutator(y1, x) * commutator(y2, x)
        if lhs != ring.zero:
            return Counterexample(trial, inst, show(lhs), "0", "[y1,x][y2,x] != 0")
        expanded = left_normed([r1 * r2, x, x])
        via_leibniz = leibniz_expand([r1, r2], [x, x])
        if expanded != via_leibniz:
            return Counterexample(trial, inst, show(expanded), show(via_leibniz), "(**) expansion fails")
        step = 2 * (commutator(r1, x) * commutator(r2, x))
        if expanded != step:
            return Counterexample(trial, inst, show(expanded), show(step), "[r1 r2,x,x] != 2[r1,x][r2,x]")
    return None


def leibniz_symbols(s: int, m: int):
    alg = FreeAlgebra([f"r{i + 1}" for i in range(s)] + [f"x{i + 1}" for i in range(m)])
    gens = alg.gens
    return alg, list(gens[:s]), list(gens[s:])


def _product(xs):
    out = xs[0]
    for x in xs[1:]:
        out = out * x
    return out


@register("leibniz", default=CheckConfig("free", 2), symbolic_repeats=False)
def check_leibniz(cfg: CheckConfig):
    """[r1 ... rs, x1, ..., xm] = sum over (H1, ..., Hs) of [r1, H1] ... [rs, Hs], s <= 3, m <= 3."""
    for trial in range(effective_trials(cfg)):
        rng = trial_rng(cfg.seed, trial, "leibniz")
        for s in range(1, 4):
            for m in range(0, 4):
                if cfg.kind == "free":
                    ring, rs, xs = leibniz_symbols(s, m)
                else:
                    ring = make_ring(cfg)
                    rs = [random_scalar(cfg, rng) for _ in range(s)]
                    xs = [random_scalar(cfg, rng) for _ in range(m)]
                lhs = left_normed([_product(rs)] + xs)
                rhs = leibniz_expand(rs, xs)
                if lhs != rhs:
                    named = {f"r{i + 1}": r for i, r in enumerate(rs)}
                    named.update({f"x{i + 1}": x for i, x in enumerate(xs)})
                    return Counterexample(trial, element_instance(ring, **named), show(lhs), show(rhs), f"s={s}, m={m}")
    return None


@register("domokos", default=CheckConfig("free", 2, trials=3), symbolic_repeats=True)
def check_domokos(cfg: CheckConfig):
    """(P A P^-1)* = P A* P^-1 and sdet(P A P^-1) = sdet(A) for invertible rational P."""
    for trial, A, rng in instances(cfg, symbolic_repeats=True):
        P = random_invertible(cfg.n, trial_rng(cfg.seed, trial, "P"))
        B = ncmatrix.conjugate(P, A)
        detail = f"P = {show(P)}"
        lhs, rhs = ncmatrix.sdet(B), ncmatrix.sdet(A)
        if lhs != rhs:
            return mismatch(trial, A, lhs, rhs, f"sdet(PAP^-1) != sdet(A); {detail}")
        lhs, rhs = ncmatrix.sadj(B), ncmatrix.conjugate(P, ncmatrix.sadj(A))
        if lhs != rhs:
            return mismatch(trial, A, lhs, rhs, f"(PAP^-1)* != P A* P^-1; {detail}")
    return None


def _check_ch(cfg: CheckConfig, side: str):
    evaluate = tpoly.ch_left_eval if side == "left" else tpoly.ch_right_eval
    for trial, A, _ in instances(cfg):
        data = tpoly.poly_commutator_parts(A)
        value = evaluate(A, data)
        if value:
            return mismatch(trial, A, value, 0, f"{side} Cayley-Hamilton evaluation is not zero")
        if cfg.kind == "rational":
            nf = factorial(cfg.n)
            classical = ncmatrix.rational_charpoly(A)
            mu = [nf * c for c in classical]
            if list(data.mu) != mu:
                return mismatch(trial, A, show(data.p), str(mu), "p(t) != n! det(tI - A)")
            if any(data.C) or any(data.D):
                return mismatch(trial, A, "C(i), D(i)", "0", "nonzero commutator coefficients over Q")
    return None


def check_ch(cfg: CheckConfig, side: str = "left") -> VerificationReport:
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return CHECKS[f"ch_{side}"].func(cfg)


@register("ch_left", default=CheckConfig("free", 2))
def check_ch_left(cfg: CheckConfig):
    """Sum (mu_i I + C(i)) A^i = 0."""
    return _check_ch(cfg, "left")


@register("ch_right", default=CheckConfig("free", 2))
def check_ch_right(cfg: CheckConfig):
    """Sum A^i (mu_i I + D(i)) = 0."""
    return _check_ch(cfg, "right")


def thm31_sides(A: RingMatrix, data: tpoly.CharPolyData, i: int):
    lhs = tpoly.telescoped_coefficient(A, data, i)
    _, p1 = tpoly.graded_split_poly(data.p)
    mu1 = p1.coeff(i + 1)
    rhs = odd_matrix(A).lmul(-2 * mu1)
    return lhs, rhs


@register("thm31", rings=GRADED, default=CheckConfig("grassmann:6", 2, trials=5))
def check_thm31(cfg: CheckConfig):
    """C(i) - D(i) - A C(i+1) + D(i+1) A = -2 mu_{i+1}^(1) A_1 for -1 <= i <= n."""
    for trial, A, _ in instances(cfg):
        data = tpoly.poly_commutator_parts(A)
        for i in range(-1, cfg.n + 1):
            lhs, rhs = thm31_sides(A, data, i)
            if lhs != rhs:
                return mismatch(trial, A, lhs, rhs, f"coefficient identity fails at i={i}")
    return None


@register("thm31_corollary", rings=GRADED, default=CheckConfig("grassmann:6", 2, trials=5))
def check_thm31_corollary(cfg: CheckConfig):
    """Each telescoped coefficient matrix has vanishing entry products and squares to zero."""
    for trial, A, _ in instances(cfg):
        data = tpoly.poly_commutator_parts(A)
        for i in range(-1, cfg.n + 1):
            M = tpoly.telescoped_coefficient(A, data, i)
            bad = pairwise_products_vanish(M)
            if bad:
                a, b, c, d, prod = bad
                return mismatch(trial, A, prod, 0, f"i={i}: entry product M[{a},{b}] M[{c},{d}] != 0")
            sq = M * M
            if sq:
                return mismatch(trial, A, sq, 0, f"i={i}: M^2 != 0")
    return None


@register("u2_remark", rings=("u2",), default=CheckConfig("u2", 2, trials=20))
def check_u2_remark(cfg: CheckConfig):
    """U_2(Q): [X,Y][Z,W] = 0, yet [E12, E11, ..., E11] = +-E12 for k = 1..5."""
    for trial in range(cfg.trials):
        rng = trial_rng(cfg.seed, trial, "u2")
        X, Y, Z, W = (random_scalar(cfg, rng) for _ in range(4))
        prod = commutator(X, Y) * commutator(Z, W)
        if prod:
            return Counterexample(trial, element_instance(U2, X=X, Y=Y, Z=Z, W=W), show(prod), "0", "[X,Y][Z,W] != 0")
    e12, e11 = U2.unit(0, 1), U2.unit(0, 0)
    for k in range(1, 6):
        value = engel(e12, e11, k)
        expected = e12 * (-1) ** k
        if value != expected or not value:
            return Counterexample(0, element_instance(U2, x=e12, y=e11), show(value), show(expected), f"k={k}")
    return None


@register("grassmann_chain", rings=("grassmann",), default=CheckConfig("grassmann:8", 2))
def check_grassmann_chain(cfg: CheckConfig):
    """[v1,v2][v3,v4]...[v_{2d-1},v_{2d}] = 2^d v1 ... v_{2d} != 0 for 1 <= d <= rank/2 (at most 4)."""
    for d in range(1, min(cfg.rank // 2, 4) + 1):
        value = chain_product(d)
        alg = GrassmannAlgebra(2 * d)
        expected = alg.blade(tuple(range(1, 2 * d + 1)), 2 ** d)
        if value != expected or not value:
            return Counterexample(0, {"ring": f"grassmann {2 * d}", "d": str(d)}, show(value), show(expected), f"d={d}")
    return None


def probe_thm24(A: RingMatrix, d: int) -> bool:
    """Try one exponent d: (AC - DA)^d = 0 and all d-fold entry products vanish.

    The exponent in the general statement is existential; a False here for a
    small d refutes nothing.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    parts = ncmatrix.commutator_parts(A)
    M = A * parts.C - parts.D * A
    if M ** d:
        return False
    entries = [x for _, _, x in M.entries()]
    frontier = list(entries)
    for _ in range(d - 1):
        frontier = list({x * y for x in frontier for y in entries})
    return not any(frontier)


# -- suites -----------------------------------------------------------------

def configure(name: str, ring: str | None = None, n: int | None = None, trials: int | None = None,
              seed: int | None = None) -> CheckConfig:
    """Check defaults overridden by whatever is given."""
    cfg = CHECKS[name].default
    changes = {k: v for k, v in dict(ring=ring, n=n, trials=trials, seed=seed).items() if v is not None}
    return replace(cfg, **changes)


def default_suite(seed: int = 0, trials: int | None = None) -> list[tuple[str, CheckConfig]]:
    def c(ring, n, t=1):
        return CheckConfig(ring, n, trials if trials is not None else t, seed)

    return [
        ("trace_sdet", c("free", 2)),
        ("trace_sdet", c("free", 3)),
        ("trace_sdet", c("grassmann:6", 3, 5)),
        ("trace_sdet", c("rational", 4, 5)),
        ("commutator_parts", c("free", 2)),
        ("commutator_parts", c("free", 3)),
        ("commutator_parts", c("grassmann:6", 3, 3)),
        ("commutator_parts", c("rational", 3, 5)),
        ("thm23", c("free", 3)),
        ("thm23", c("grassmann:6", 3, 5)),
        ("thm23_engel2", c("grassmann:4", 2, 5)),
        ("thm23_engel2", c("grassmann:6", 3, 5)),
        ("thm25", c("grassmann:6", 2, 5)),
        ("thm25", c("grassmann:8", 3, 5)),
        ("thm22", c("grassmann:6", 2, 10)),
        ("leibniz", c("free", 2)),
        ("domokos", c("free", 2, 3)),
        ("domokos", c("grassmann:6", 3, 3)),
        ("ch_left", c("free", 2)),
        ("ch_right", c("free", 2)),
        ("ch_left", c("grassmann:6", 3, 3)),
        ("ch_right", c("grassmann:6", 3, 3)),
        ("ch_left", c("rational", 3, 5)),
        ("thm31", c("grassmann:6", 2, 5)),
        ("thm31", c("grassmann:8", 3, 3)),
        ("thm31_corollary", c("grassmann:6", 2, 5)),
        ("thm31_corollary", c("grassmann:8", 3, 3)),
        ("u2_remark", c("u2", 2, 20)),
        ("grassmann_chain", c("grassmann:8", 2)),
    ]


def run_suite(items: Iterable[tuple[str, CheckConfig]]) -> list[VerificationReport]:
    """Run (check name, config) pairs in order; errors land in the reports."""
    reports = []
    for name, cfg in items:
        spec = CHECKS.get(name)
        if spec is None:
            reports.append(VerificationReport(name, "error", cfg.ring, cfg.n, 0, cfg.seed,
                                              error=f"unknown check {name!r}"))
            continue
        reports.append(spec.func(cfg))
    return reports


def all_passed(reports: Iterable[VerificationReport]) -> bool:
    return all(r.passed for r in reports)
