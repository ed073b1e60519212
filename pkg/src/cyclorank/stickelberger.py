"""Power tables, the integer polynomials P and Q, and the predictor D(X).

For an odd prime p and a primitive root v, the table v_n = v**n mod p
(normalized into [1, p-1]) determines

    P(X) = sum_{i=0}^{p-2} v_{-i} X**i,

which satisfies the exact integer identity

    P(X) (X - v) = p Q(X) + v (X**(p-1) - 1),

forcing Q's coefficients q_i = (v_{-(i-1)} - v * v_{-i}) / p to be integers
with q_0 = 0.  verify_identity checks that identity exactly; compute_D
takes the monic gcd of (P reduced mod h) with X**((p-1)/2) + 1, switching
the operand to Q when h = p.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ConsistencyError, ParameterError
from .ffpoly import Factorization, ModPoly, factorize, poly_gcd, reduce
from .intpoly import IntPoly
from .primes import distinct_prime_factors, is_odd_prime, require_odd_prime

DEFAULT_ROOT_ENUMERATION_BOUND = 1000


@dataclass(frozen=True)
class PowerTable:
    """Both directions of the power table of a primitive root v mod p.

    forward[n] = v**n mod p and inverse[n] = v**(-n) mod p for
    n = 0 .. p-2, every entry normalized into [1, p-1].
    """

    p: int
    v: int
    forward: tuple[int, ...]
    inverse: tuple[int, ...]


@dataclass(frozen=True)
class DxResult:
    """compute_D output: the monic predictor polynomial and its factorization."""

    p: int
    h: int
    v: int
    dee: ModPoly
    degree: int
    factorization: Factorization


def _is_primitive_root(v: int, p: int) -> bool:
    if not 2 <= v <= p - 1:
        return False
    return all(pow(v, (p - 1) // q, p) != 1 for q in distinct_prime_factors(p - 1))


@lru_cache(maxsize=None)
def smallest_primitive_root(p: int) -> int:
    """Least v >= 2 of multiplicative order exactly p-1 mod p."""
    require_odd_prime(p)
    qs = distinct_prime_factors(p - 1)
    for v in range(2, p):
        if all(pow(v, (p - 1) // q, p) != 1 for q in qs):
            return v
    raise ConsistencyError(f"no primitive root found mod {p}")  # unreachable for prime p


def all_primitive_roots(p: int, bound: int = DEFAULT_ROOT_ENUMERATION_BOUND) -> list[int]:
    """All primitive roots mod p, ascending; p capped to keep enumeration cheap."""
    require_odd_prime(p)
    if p > bound:
        raise ParameterError(f"p={p} exceeds root enumeration bound {bound}")
    qs = distinct_prime_factors(p - 1)
    return [v for v in range(2, p) if all(pow(v, (p - 1) // q, p) != 1 for q in qs)]


@lru_cache(maxsize=None)
def build_power_table(p: int, v: int) -> PowerTable:
    require_odd_prime(p)
    if not _is_primitive_root(v, p):
        raise ParameterError(f"v={v} is not a primitive root mod {p}")
    forward = [1] * (p - 1)
    inverse = [1] * (p - 1)
    vinv = pow(v, -1, p)
    for n in range(1, p - 1):
        forward[n] = (forward[n - 1] * v) % p
        inverse[n] = (inverse[n - 1] * vinv) % p
    return PowerTable(p=p, v=v, forward=tuple(forward), inverse=tuple(inverse))


def build_P(table: PowerTable) -> IntPoly:
    """P(X) with coefficient of X**i equal to v_{-i}; degree p-2."""
    return IntPoly(table.inverse)


def build_Q(table: PowerTable) -> IntPoly:
    """Q(X) with q_i = (v_{-(i-1)} - v * v_{-i}) / p and zero constant term."""
    p, v, inv = table.p, table.v, table.inverse
    coeffs = [0] * (p - 1)
    for i in range(1, p - 1):
        num = inv[i - 1] - v * inv[i]
        q, r = divmod(num, p)
        if r:
            raise ConsistencyError(
                f"Q coefficient {i} not integral for p={p}, v={v}: {num}/{p}"
            )
        coeffs[i] = q
    return IntPoly(coeffs)


def verify_identity(table: PowerTable) -> bool:
    """Exact check of P(X)(X - v) == p*Q(X) + v*(X**(p-1) - 1)."""
    p, v = table.p, table.v
    lhs = build_P(table) * IntPoly((-v, 1))
    rhs = p * build_Q(table) + v * (IntPoly.monomial(p - 1) - IntPoly((1,)))
    return lhs == rhs


def compute_D(p: int, h: int, v: int | None = None, seed: int = 0) -> DxResult:
    """Monic gcd of the reduced operand with X**((p-1)/2) + 1 over F_h.

    The operand is P for h != p and Q for h = p.  Reduction mod h may drop
    the operand's degree below p-2 (h can divide leading coefficients);
    gcd semantics are unaffected.
    """
    require_odd_prime(p)
    if not is_odd_prime(h):
        raise ParameterError(f"h must be an odd prime, got {h!r}")
    if v is None:
        v = smallest_primitive_root(p)
    table = build_power_table(p, v)
    operand = build_Q(table) if h == p else build_P(table)
    m = (p - 1) // 2
    cyclo_half = ModPoly(h, (1,) + (0,) * (m - 1) + (1,))  # X**m + 1
    dee = poly_gcd(reduce(operand, h), cyclo_half)
    return DxResult(
        p=p,
        h=h,
        v=v,
        dee=dee,
        degree=len(dee.coeffs) - 1,
        factorization=factorize(dee, seed=seed),
    )
