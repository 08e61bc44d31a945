"""All-genus one-hole invariants from the quantum-invariant side.

The chain for a winding number m and framing tau:

1. ``cal_z_cleared`` -- the denominator-cleared colored-invariant sum
   {m}{m tau} * Z_m, assembled term by term so every intermediate value
   is a Laurent polynomial (never a generic rational-function sum).
2. ``g_m_cleared``  -- Moebius/Adams combination over divisors of m.
3. ``lmov_one_hole`` -- exact division by {m}{m tau}/{1}^2 followed by
   the z^2-basis rewrite; all resulting entries must be integers.

tau = 0 degenerates: the per-part ratio {m nu_i tau}/{m tau} is replaced
by its algebraic limit (quantum_ratio handles the base-0 case), which
collapses Z_m to {m}_a / {m}^2 and switches the divisor to {m}^2/{1}^2.

``g_mu_general`` runs the same pipeline for an arbitrary partition mu
(a conjectural statement for l(mu) >= 2, so failures are reported, not
raised), via characters and the log on the power-sum partition algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .arith import divisors, gaussian_binomial, moebius
from .genus0 import TheoremViolation
from .partitions import (
    Partition,
    kappa,
    mn_character,
    partitions_of,
    parts_gcd,
    scale_down,
    z_factor,
)
from .qa import (
    ExactDivisionError,
    LaurentQA,
    RationalQ,
    RationalQA,
    ZBasisError,
    ZBasisTable,
    exact_div,
    quantum_int,
    quantum_prod,
    quantum_ratio,
    to_z_basis,
)

# ---------------------------------------------------------------------------
# colored invariants of the trivial knot
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _row_numerator(n: int) -> LaurentQA:
    # product over i of (a^(1/2) q^((i-1)/2) - a^(-1/2) q^(-(i-1)/2))
    if n == 0:
        return LaurentQA.one()
    prev = _row_numerator(n - 1)
    i = n - 1
    factor = LaurentQA({(i, 1): 1, (-i, -1): -1})
    return prev * factor


@lru_cache(maxsize=None)
def _row_denominator(n: int) -> LaurentQA:
    # product over i of (q^(i/2) - q^(-i/2))
    return quantum_prod(range(1, n + 1))


def unknot_row(n: int) -> RationalQA:
    """Row-colored invariant W_n(q, a); W_0 = 1."""
    if n < 0:
        raise ValueError("unknot_row needs n >= 0")
    num = RationalQA.from_laurent(_row_numerator(n))
    den = RationalQ.from_laurent(_row_denominator(n))
    return num.div_rational(den)


def framed_row(n: int, tau: int) -> RationalQA:
    """Framed row invariant (-1)^(n tau) q^(n(n-1) tau / 2) W_n."""
    sign = (-1) ** ((n * tau) % 2)
    twist = RationalQ.monomial(n * (n - 1) * tau, sign)
    return unknot_row(n).mul_rational(twist)


@dataclass
class CheckReport:
    name: str
    params: dict
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)  # soft observations, never failing

    @property
    def ok(self) -> bool:
        return not self.failures


@lru_cache(maxsize=None)
def _recursion_pair(n: int) -> tuple:
    # tau-independent cores of the two recursion sides at step n
    lead0 = LaurentQA({(2 * (n + 1), 0): 1, (0, 0): -1})  # q^(n+1) - 1
    hook0 = LaurentQA({(2 * n + 1, 1): 1, (1, -1): -1})  # a^(1/2)q^(n+1/2) - a^(-1/2)q^(1/2)
    return lead0 * _row_numerator(n + 1), hook0 * (_row_numerator(n) * quantum_int(n + 1))


def verify_recursion(tau: int, max_n: int) -> CheckReport:
    """Exact check of the framed row recursion for all n < max_n:

    (-1)^tau (q^(n+1) - 1) H_{n+1}
        - (a^(1/2) q^(n+1/2) - a^(-1/2) q^(1/2)) q^(n tau) H_n = 0,

    verified after clearing the manifestly nonzero denominator
    prod_{i<=n+1} {i}, so both sides stay Laurent polynomials.
    """
    if max_n < 1:
        raise ValueError("verify_recursion needs max_n >= 1")
    rep = CheckReport("framed-row-recursion", {"tau": tau, "max_n": max_n})
    for n in range(0, max_n):
        p, r = _recursion_pair(n)
        sign_l = (-1) ** ((tau + (n + 1) * tau) % 2)
        sign_r = (-1) ** ((n * tau) % 2)
        lhs = p.scale(sign_l).shift(du=n * (n + 1) * tau)
        rhs = r.scale(sign_r).shift(du=2 * n * tau + n * (n - 1) * tau)
        if lhs != rhs:
            rep.failures.append({"n": n})
    return rep


# ---------------------------------------------------------------------------
# the one-hole generating functions
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def cal_z_cleared(m: int, tau: int) -> LaurentQA:
    """Denominator-cleared partition sum: {m}{m tau} Z_m for tau != 0,
    and its degenerate substitute {m}^2 Z_m = {m}_a at tau = 0."""
    if m < 1:
        raise ValueError("cal_z_cleared needs m >= 1")
    if tau == 0:
        return quantum_int(m, "a")
    total = LaurentQA.zero()
    for nu in partitions_of(m):
        term = LaurentQA.one()
        for p in nu:
            term = term * quantum_ratio(m * tau, p) * quantum_int(p, "a")
        total = total + term.scale(Fraction(1, z_factor(nu)))
    return total.scale((-1) ** ((m * tau) % 2))


def _cleared_divisor(m: int, tau: int) -> LaurentQA:
    # {m}{m tau}/{1}^2, with {m}^2/{1}^2 at tau = 0
    first = quantum_ratio(m, 1)
    second = quantum_ratio(m, 1) if tau == 0 else quantum_ratio(m * tau, 1)
    return first * second


def cal_z(m: int, tau: int) -> RationalQA:
    """Z_m(q, a) as an a-graded rational function of q."""
    cleared = cal_z_cleared(m, tau)
    div = _cleared_divisor(m, tau) * quantum_int(1) * quantum_int(1)
    return RationalQA.from_laurent(cleared).div_rational(RationalQ.from_laurent(div))


def cal_z_gaussian(m: int, tau: int) -> LaurentQA:
    """Gaussian-binomial closed form of {m}{m tau} Z_m, valid for tau >= 1.

    Independent cross-check route: sum over j + k = m of
    (-1)^j q^((j(j-1) - (m tau - 1) m)/2) a^((k-j)/2) qbin(m tau, j) qbin(m tau + k - 1, k).
    The sign (-1)^j comes from expanding prod_s (1 - q^(c_s) a^(-1/2) x)
    over prod_s (1 - q^(c_s) a^(1/2) x) with exp(sum u^j / j) = 1/(1-u).
    """
    if tau < 1:
        raise ValueError("cal_z_gaussian needs tau >= 1")
    if m < 1:
        raise ValueError("cal_z_gaussian needs m >= 1")
    mt = m * tau
    total = LaurentQA.zero()
    for j in range(0, m + 1):
        k = m - j
        if j > mt:
            continue
        bj = gaussian_binomial(mt, j)
        bk = gaussian_binomial(mt + k - 1, k) if k else [1]
        term: dict = {}
        base_u = j * (j - 1) - (mt - 1) * m
        for dj, cj in enumerate(bj):
            if not cj:
                continue
            for dk, ck in enumerate(bk):
                if not ck:
                    continue
                key = (base_u + 2 * (dj + dk), k - j)
                term[key] = term.get(key, 0) + cj * ck
        sgn = (-1) ** (j % 2)
        total = total + LaurentQA(term).scale(sgn)
    return total.scale((-1) ** ((m * tau) % 2))


def g_m_cleared(m: int, tau: int) -> LaurentQA:
    """{m}{m tau} g_m as a Laurent polynomial ({m}^2 g_m at tau = 0)."""
    total = LaurentQA.zero()
    for d in divisors(m):
        mu = moebius(d)
        if mu:
            total = total + cal_z_cleared(m // d, tau).adams(d).scale(mu)
    return total


def g_m(m: int, tau: int) -> RationalQA:
    """g_m(q, a) = sum over d | m of moebius(d) Z_{m/d}(q^d, a^d)."""
    total = RationalQA.zero()
    for d in divisors(m):
        mu = moebius(d)
        if mu:
            total = total + cal_z(m // d, tau).adams(d).scale(mu)
    return total


@dataclass
class OneHoleTable:
    """Integer table n_{m,g,Q}(tau), keyed by (g, two_q)."""

    m: int
    tau: int
    table: ZBasisTable

    def json_obj(self) -> dict:
        return {"m": self.m, "tau": self.tau, "entries": self.table.rows()}

    def entries(self) -> dict:
        return dict(self.table.entries)


def z2_g_m(m: int, tau: int) -> LaurentQA:
    """z^2 g_m as a Laurent polynomial, via exact division."""
    cleared = g_m_cleared(m, tau)
    divisor = _cleared_divisor(m, tau)
    try:
        return exact_div(cleared, divisor)
    except ExactDivisionError as e:
        raise TheoremViolation(
            f"{{m}}{{m tau}} g_m not divisible by its cyclotomic core "
            f"(m={m}, tau={tau})"
        ) from e


def lmov_one_hole(m: int, tau: int) -> OneHoleTable:
    """Certified integer one-hole table for winding m and framing tau."""
    f = z2_g_m(m, tau)
    try:
        table = to_z_basis(f)
    except ZBasisError as e:
        raise TheoremViolation(
            f"z^2 g_m outside Q[z^2, a^(+-1/2)] (m={m}, tau={tau})"
        ) from e
    if not table.is_integral():
        raise TheoremViolation(
            f"non-integer one-hole invariant at m={m}, tau={tau}: {table.entries}"
        )
    return OneHoleTable(m, tau, table)


# ---------------------------------------------------------------------------
# the matrix M and the general-partition pipeline
# ---------------------------------------------------------------------------


def m_matrix(lam: Partition, mu: Partition) -> LaurentQA:
    """Pairing matrix entry: sum over classes nu of
    chi_lam(nu) chi_mu(nu) / z_nu * prod_j (q^(-nu_j/2) - q^(nu_j/2))."""
    if sum(lam) != sum(mu):
        raise ValueError("m_matrix needs |lam| = |mu|")
    total = LaurentQA.zero()
    for nu in partitions_of(sum(lam)):
        c = mn_character(lam, nu) * mn_character(mu, nu)
        if not c:
            continue
        prod = quantum_prod(nu).scale((-1) ** (len(nu) % 2))
        total = total + prod.scale(Fraction(c, z_factor(nu)))
    return total


@lru_cache(maxsize=None)
def _phi(nu: Partition, sigma: Partition, tau: int) -> LaurentQA:
    # sum over lam of chi_lam(nu) chi_lam(sigma) q^(kappa_lam tau / 2)
    d: dict = {}
    for lam in partitions_of(sum(nu)):
        c = mn_character(lam, nu) * mn_character(lam, sigma)
        if c:
            u = kappa(lam) * tau
            d[(u, 0)] = d.get((u, 0), 0) + c
    return LaurentQA(d)


@lru_cache(maxsize=None)
def cal_z_partition(nu: Partition, tau: int) -> RationalQA:
    """Character-transformed colored invariant for cycle type nu."""
    total = RationalQA.zero()
    size = sum(nu)
    for sigma in partitions_of(size):
        phi = _phi(nu, sigma, tau)
        if phi.is_zero():
            continue
        num = phi * quantum_prod(sigma, "a")
        den = quantum_prod(sigma)
        term = RationalQA.from_laurent(num).div_rational(
            RationalQ.from_laurent(den)
        )
        total = total + term.scale(Fraction(1, z_factor(sigma)))
    return total.scale((-1) ** ((size * tau) % 2))


def _multiset_decompositions(mu: Partition):
    """Unordered decompositions of mu into nonempty sub-partitions.

    Yields (blocks, ordered_count) with blocks a sorted tuple of partitions
    whose multiset union is mu and ordered_count the number of ordered
    tuples realizing that block multiset.
    """
    from math import factorial

    def splits(parts: tuple):
        # all ways to split a sorted multiset of ints into (first-anchored
        # nonempty block, rest)
        if not parts:
            yield ()
            return
        first, rest = parts[0], parts[1:]
        seen = set()
        for mask in range(1 << len(rest)):
            block = (first,) + tuple(rest[i] for i in range(len(rest)) if mask >> i & 1)
            block = tuple(sorted(block, reverse=True))
            remaining = tuple(rest[i] for i in range(len(rest)) if not mask >> i & 1)
            key = (block, remaining)
            if key in seen:
                continue
            seen.add(key)
            for tail in splits(remaining):
                yield (block,) + tail

    seen_blocks = set()
    for blocks in splits(tuple(sorted(mu, reverse=True))):
        canon = tuple(sorted(blocks))
        if canon in seen_blocks:
            continue
        seen_blocks.add(canon)
        n = len(canon)
        mult: dict = {}
        for b in canon:
            mult[b] = mult.get(b, 0) + 1
        count = factorial(n)
        for a in mult.values():
            count //= factorial(a)
        yield canon, count


def f_mu(mu: Partition, tau: int) -> RationalQA:
    """Connected (log) coefficient of the partition-sum expansion at mu."""
    if not mu:
        raise ValueError("f_mu needs a nonempty partition")
    total = RationalQA.zero()
    for blocks, count in _multiset_decompositions(mu):
        n = len(blocks)
        term = RationalQA.one()
        for b in blocks:
            term = term * cal_z_partition(b, tau).scale(Fraction(1, z_factor(b)))
        total = total + term.scale(Fraction((-1) ** (n - 1) * count, n))
    return total


@dataclass
class GeneralHoleResult:
    mu: Partition
    tau: int
    rational: RationalQA  # z^2 * z_mu * g-hat_mu
    table: ZBasisTable | None
    report: CheckReport


def g_mu_general(mu: Partition, tau: int) -> GeneralHoleResult:
    """Conjectural integer table for an arbitrary partition mu.

    Computes g-hat_mu = sum over d | mu of (moebius(d)/d) adams_d of
    (F_{mu/d} / {mu/d}), then z^2 z_mu g-hat_mu, and attempts the z^2-basis
    rewrite.  Failures are reported, not raised: only the single-row case
    is a theorem.
    """
    mu = tuple(sorted(mu, reverse=True))
    if not mu:
        raise ValueError("g_mu_general needs a nonempty partition")
    rep = CheckReport("general-one-hole", {"mu": mu, "tau": tau})
    ghat = RationalQA.zero()
    for d in divisors(parts_gcd(mu)):
        mo = moebius(d)
        if not mo:
            continue
        scaled = scale_down(mu, d)
        fhat = f_mu(scaled, tau).div_rational(
            RationalQ.from_laurent(quantum_prod(scaled))
        )
        ghat = ghat + fhat.adams(d).scale(Fraction(mo, d))
    z2 = RationalQ.from_laurent(quantum_int(1) * quantum_int(1))
    target = ghat.mul_rational(z2).scale(z_factor(mu))
    laurent = target.as_laurent()
    if laurent is None:
        rep.failures.append({"mu": mu, "reason": "denominator did not clear"})
        return GeneralHoleResult(mu, tau, target, None, rep)
    try:
        table = to_z_basis(laurent)
    except ZBasisError as e:
        rep.failures.append({"mu": mu, "reason": f"z-basis: {e}"})
        return GeneralHoleResult(mu, tau, target, None, rep)
    if not table.is_integral():
        rep.failures.append({"mu": mu, "reason": "non-integer entries"})
    return GeneralHoleResult(mu, tau, target, table, rep)
