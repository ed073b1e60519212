"""Independent oracles for the relative class number h-(K), K = Q(zeta_p).

The workhorse is the Maillet determinant: the matrix of least positive
residues of a * b^(-1) mod p for 1 <= a, b <= (p-1)/2 has determinant
+- p^((p-3)/2) * h-(K).  Three views of it live here:

  * exact_hminus      -- fraction-free Bareiss elimination, exact integers;
                         the forced divisibility by p^((p-3)/2) doubles as
                         a built-in self-test.
  * hminus_valuation  -- h-adic elimination that extracts only the h-adic
                         valuation of the determinant (p^((p-3)/2) is an
                         h-adic unit for h != p), scaling to large p.
  * analytic_hminus   -- the classical character-sum product formula in
                         extended-precision complex arithmetic, used as a
                         cross-check only, never as ground truth.

irregular_index covers the h = p case through Kummer's criterion: p divides
h-(K) exactly when p divides the numerator of some Bernoulli number B_k,
k even, 2 <= k <= p-3.  Bernoulli numbers are computed as exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

import mpmath
import numpy as np

from .errors import ConsistencyError, ParameterError
from .primes import require_odd_prime
from .stickelberger import smallest_primitive_root

DEFAULT_EXACT_BOUND = 300
DEFAULT_ANALYTIC_BOUND = 200
DEFAULT_IRREGULAR_BOUND = 600
DEFAULT_VALUATION_PRECISION = 8
DEFAULT_VALUATION_PRECISION_CAP = 256

_INT64_PRODUCT_LIMIT = 2**62


@dataclass(frozen=True)
class MailletMatrix:
    p: int
    entries: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return (self.p - 1) // 2


@dataclass(frozen=True)
class HMinusResult:
    p: int
    value: int
    det: int
    exponent_check: bool


@dataclass(frozen=True)
class ValuationResult:
    p: int
    h: int
    valuation: int
    precision_used: int


def _maillet_rows(p: int) -> list[list[int]]:
    m = (p - 1) // 2
    inv = [0] * p
    for b in range(1, p):
        inv[b] = pow(b, p - 2, p)
    return [[(a * inv[b]) % p for b in range(1, m + 1)] for a in range(1, m + 1)]


def maillet_matrix(p: int) -> MailletMatrix:
    """Matrix of least positive residues of a * b^(-1) mod p, a,b <= (p-1)/2."""
    require_odd_prime(p)
    return MailletMatrix(p=p, entries=tuple(tuple(row) for row in _maillet_rows(p)))


def _bareiss_det(rows: list[list[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [row[:] for row in rows]
    n = len(a)
    sign = 1
    denom = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (piv * row_i[j] - aik * row_k[j]) // denom
            row_i[k] = 0
        denom = piv
    return sign * a[n - 1][n - 1]


@lru_cache(maxsize=None)
def _maillet_det(p: int) -> int:
    return _bareiss_det(_maillet_rows(p))


def exact_hminus(p: int, bound: int = DEFAULT_EXACT_BOUND) -> HMinusResult:
    """h-(K) as |det(Maillet)| / p^((p-3)/2), all arithmetic exact.

    The division must be exact and the quotient positive; anything else
    means the matrix or the elimination is broken, not the input.
    """
    require_odd_prime(p)
    if p > bound:
        raise ParameterError(f"p={p} exceeds exact-determinant bound {bound}")
    det = _maillet_det(p)
    value, rem = divmod(abs(det), p ** ((p - 3) // 2))
    if rem != 0:
        raise ConsistencyError(
            f"det(Maillet({p})) not divisible by {p}^({(p - 3) // 2})"
        )
    if value < 1:
        raise ConsistencyError(f"Maillet matrix for p={p} is singular")
    return HMinusResult(p=p, value=value, det=det, exponent_check=True)


# ---------------------------------------------------------------------------
# h-adic valuation of the determinant
# ---------------------------------------------------------------------------
#
# Entries are carried as residues modulo h**prec; prec starts at the working
# precision W and shrinks by the pivot's valuation at each column, so a run
# succeeds exactly when W exceeds the valuation of the determinant.  Pivot
# choice is the minimal-valuation entry in the column, ties broken by the
# first (smallest-index) row, making the result deterministic.  When a whole
# column vanishes modulo h**prec the precision is exhausted: the caller
# doubles W and restarts.

def _valuation_attempt_python(rows, h: int, W: int):
    n = len(rows)
    a = [row[:] for row in rows]
    prec = W
    total = 0
    for col in range(n):
        hp = h**prec
        best_e = prec
        best_r = -1
        for r in range(col, n):
            x = a[r][col] % hp
            if x:
                e = 0
                while x % h == 0:
                    x //= h
                    e += 1
                if e < best_e:
                    best_e, best_r = e, r
                    if e == 0:
                        break
        if best_r < 0:
            return None  # precision exhausted
        if best_r != col:
            a[col], a[best_r] = a[best_r], a[col]
        e = best_e
        total += e
        prec -= e
        hn = h**prec
        he = h**e
        piv = a[col]
        uinv = pow((piv[col] % hp) // he, -1, hn)
        for i in range(col + 1, n):
            row_i = a[i]
            t = ((row_i[col] // he) * uinv) % hn
            if t:
                for j in range(col, n):
                    row_i[j] = (row_i[j] - t * piv[j]) % hn
            else:
                row_i[col] %= hn
    return total


def _valuation_attempt_numpy(rows, h: int, W: int):
    n = len(rows)
    a = np.array(rows, dtype=np.int64)
    a %= h**W
    prec = W
    total = 0
    for col in range(n):
        hp = h**prec
        x = a[col:, col] % hp
        nz = np.nonzero(x)[0]
        if nz.size == 0:
            return None
        y = x[nz].copy()
        e = np.zeros(nz.size, dtype=np.int64)
        while True:
            mask = y % h == 0
            if not mask.any():
                break
            y[mask] //= h
            e[mask] += 1
        k = int(np.argmin(e))
        ev = int(e[k])
        r = int(nz[k]) + col
        if r != col:
            a[[col, r]] = a[[r, col]]
        total += ev
        prec -= ev
        hn = h**prec
        piv = a[col] % hp
        uinv = pow(int(piv[col]) // h**ev, -1, hn)
        if col + 1 < n:
            t = ((a[col + 1 :, col] // h**ev) * uinv) % hn
            a[col + 1 :] = (a[col + 1 :] - t[:, None] * piv[None, :]) % hn
    return total


def hminus_valuation(
    p: int,
    h: int,
    precision: int = DEFAULT_VALUATION_PRECISION,
    precision_cap: int = DEFAULT_VALUATION_PRECISION_CAP,
) -> ValuationResult:
    """h-adic valuation of h-(p) for h != p, via determinant elimination."""
    require_odd_prime(p)
    require_odd_prime(h, "h")
    if h == p:
        raise ParameterError("h must differ from p; use irregular_index for h = p")
    rows = _maillet_rows(p)
    W = precision
    while W <= precision_cap:
        if h ** (2 * W) <= _INT64_PRODUCT_LIMIT:
            val = _valuation_attempt_numpy(rows, h, W)
        else:
            val = _valuation_attempt_python(rows, h, W)
        if val is not None:
            return ValuationResult(p=p, h=h, valuation=val, precision_used=W)
        W *= 2
    raise ParameterError(
        f"valuation too large: exceeds precision cap {precision_cap} for p={p}, h={h}"
    )


# ---------------------------------------------------------------------------
# analytic cross-check
# ---------------------------------------------------------------------------

def analytic_hminus(p: int, bound: int = DEFAULT_ANALYTIC_BOUND) -> float:
    """Floating approximation of h-(K) from the odd-character product formula.

    h- = 2p * prod over odd chi of (-B_{1,chi} / 2),  B_{1,chi} =
    (1/p) sum_a a chi(a).  Characters are realized through a primitive
    root g: chi_j(g^k) = omega^(jk) with omega = exp(2 pi i / (p-1)),
    and chi_j is odd exactly for odd j.
    """
    require_odd_prime(p)
    if p > bound:
        raise ParameterError(f"p={p} exceeds analytic bound {bound}")
    g = smallest_primitive_root(p)
    n = p - 1
    forward = [1] * n
    for k in range(1, n):
        forward[k] = (forward[k - 1] * g) % p
    with mpmath.workdps(50 + p // 3):
        omega = mpmath.expjpi(mpmath.mpf(2) / n)
        powers = [mpmath.mpc(1)]
        for _ in range(1, n):
            powers.append(powers[-1] * omega)
        total = mpmath.mpf(2 * p)
        for j in range(1, n, 2):
            s = mpmath.mpc(0)
            for k in range(n):
                s += forward[k] * powers[(j * k) % n]
            total *= -s / (2 * p)
        return float(mpmath.re(total))


# ---------------------------------------------------------------------------
# Bernoulli numbers and Kummer's criterion
# ---------------------------------------------------------------------------

_bernoulli_even_cache: list[Fraction] = [Fraction(1)]  # B_0


def _ensure_bernoulli(m: int) -> list[Fraction]:
    """Extend the cache so B_{2j} is available for all j <= m."""
    cache = _bernoulli_even_cache
    if len(cache) > m:
        return cache
    work = list(cache)
    for mm in range(len(work), m + 1):
        n = 2 * mm
        # Sum C(n+1, k) B_k = 0 with B_1 = -1/2; odd B_k vanish for k >= 3.
        s = Fraction(n + 1, -2)
        for j in range(mm):
            s += comb(n + 1, 2 * j) * work[j]
        work.append(-s / (n + 1))
    globals()["_bernoulli_even_cache"] = work
    return work


def bernoulli_even(k: int) -> Fraction:
    """Exact Bernoulli number B_k for even k >= 0."""
    if k < 0 or k % 2:
        raise ParameterError(f"k must be even and nonnegative, got {k}")
    return _ensure_bernoulli(k // 2)[k // 2]


def irregular_index(p: int, bound: int = DEFAULT_IRREGULAR_BOUND) -> int:
    """Number of even k in [2, p-3] with p dividing the numerator of B_k.

    Positive exactly when p is irregular, i.e. when p divides h-(K).
    p never divides a denominator here (von Staudt-Clausen needs
    (p-1) | k, impossible for k <= p-3), so the numerator test is clean.
    """
    require_odd_prime(p)
    if p > bound:
        raise ParameterError(f"p={p} exceeds irregularity bound {bound}")
    m_max = (p - 3) // 2
    cache = _ensure_bernoulli(m_max)
    return sum(1 for j in range(1, m_max + 1) if cache[j].numerator % p == 0)
