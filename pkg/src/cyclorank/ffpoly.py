"""Exact univariate polynomial arithmetic over the prime field F_h.

A polynomial is a dense sequence of residues in [0, h) stored ascending by
degree with trailing zeros stripped, so the zero polynomial is the empty
tuple and the degree of zero is the NEG_INF marker rather than a number.
The modulus h must be an odd prime small enough for native words; input
coefficients may be arbitrary-precision integers and are reduced on entry.

Internally the heavy loops (division, gcd, factorization) run on plain
lists; ModPoly is an immutable wrapper that validates once at the edges.
Factorization uses squarefree decomposition, then distinct-degree
splitting, then randomized Cantor-Zassenhaus equal-degree splitting, which
is overkill for the low-degree gcds this package mostly produces but is
needed for the property tests to mean anything.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import ParameterError
from .intpoly import NEG_INF, IntPoly
from .primes import is_odd_prime

__all__ = [
    "ModPoly",
    "Factorization",
    "reduce",
    "poly_gcd",
    "factorize",
    "is_squarefree",
]


# ---------------------------------------------------------------------------
# raw coefficient-list arithmetic (ascending degree, normalized)
# ---------------------------------------------------------------------------

def _strip(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _sub(f: Sequence[int], g: Sequence[int], h: int) -> list[int]:
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = (out[i] - c) % h
    return _strip(out)


def _mul(f: Sequence[int], g: Sequence[int], h: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _strip([c % h for c in out])


def _scale(f: Sequence[int], a: int, h: int) -> list[int]:
    return _strip([(a * c) % h for c in f])


def _divmod(f: Sequence[int], g: Sequence[int], h: int) -> tuple[list[int], list[int]]:
    """Quotient and remainder of f by nonzero g, working in place on a copy."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f)
    dg = len(g) - 1
    if len(rem) - 1 < dg:
        return [], _strip(rem)
    inv = pow(g[-1], -1, h)
    quo = [0] * (len(rem) - dg)
    for top in range(len(rem) - 1, dg - 1, -1):
        c = rem[top]
        if c:
            c = (c * inv) % h
            quo[top - dg] = c
            for i in range(dg):
                rem[top - dg + i] = (rem[top - dg + i] - c * g[i]) % h
        rem[top] = 0
    return _strip(quo), _strip(rem)


def _rem(f: Sequence[int], g: Sequence[int], h: int) -> list[int]:
    return _divmod(f, g, h)[1]


def _quo(f: Sequence[int], g: Sequence[int], h: int) -> list[int]:
    return _divmod(f, g, h)[0]


def _monic(f: Sequence[int], h: int) -> list[int]:
    if not f:
        return []
    if f[-1] == 1:
        return list(f)
    return _scale(f, pow(f[-1], -1, h), h)


def _gcd(f: Sequence[int], g: Sequence[int], h: int) -> list[int]:
    a, b = list(f), list(g)
    while b:
        a, b = b, _rem(a, b, h)
    return _monic(a, h)


def _deriv(f: Sequence[int], h: int) -> list[int]:
    return _strip([(i * c) % h for i, c in enumerate(f)][1:])


def _pow_mod(f: Sequence[int], e: int, g: Sequence[int], h: int) -> list[int]:
    """f**e mod g by square-and-multiply; e may be a huge integer."""
    result = [1]
    base = _rem(f, g, h)
    while e:
        if e & 1:
            result = _rem(_mul(result, base, h), g, h)
        e >>= 1
        if e:
            base = _rem(_mul(base, base, h), g, h)
    return result


def _pth_root(f: Sequence[int], h: int) -> list[int]:
    # f = g(X^h) implies f = g(X)^h over F_h; c^(1/h) = c by Fermat.
    return _strip(list(f[::h]))


# ---------------------------------------------------------------------------
# public immutable types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ModPoly:
    """Polynomial over F_h: odd prime modulus plus normalized coefficients."""

    modulus: int
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.modulus, int) or not is_odd_prime(self.modulus):
            raise ParameterError(f"modulus must be an odd prime, got {self.modulus!r}")
        coeffs = [c % self.modulus for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def degree(self):
        """Degree, or the NEG_INF marker for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _wrap(self, raw: list[int]) -> "ModPoly":
        return ModPoly(self.modulus, tuple(raw))

    def _check_same_modulus(self, other: "ModPoly") -> None:
        if self.modulus != other.modulus:
            raise ParameterError(
                f"modulus mismatch: {self.modulus} vs {other.modulus}"
            )

    def __add__(self, other: "ModPoly") -> "ModPoly":
        self._check_same_modulus(other)
        return self._wrap(_sub(self.coeffs, _scale(other.coeffs, -1, self.modulus), self.modulus))

    def __sub__(self, other: "ModPoly") -> "ModPoly":
        self._check_same_modulus(other)
        return self._wrap(_sub(self.coeffs, other.coeffs, self.modulus))

    def __mul__(self, other: Union["ModPoly", int]) -> "ModPoly":
        if isinstance(other, int):
            return self._wrap(_scale(self.coeffs, other, self.modulus))
        self._check_same_modulus(other)
        return self._wrap(_mul(self.coeffs, other.coeffs, self.modulus))

    __rmul__ = __mul__

    def __divmod__(self, other: "ModPoly") -> tuple["ModPoly", "ModPoly"]:
        self._check_same_modulus(other)
        q, r = _divmod(self.coeffs, other.coeffs, self.modulus)
        return self._wrap(q), self._wrap(r)

    def __mod__(self, other: "ModPoly") -> "ModPoly":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "ModPoly") -> "ModPoly":
        return divmod(self, other)[0]

    def monic(self) -> "ModPoly":
        return self._wrap(_monic(self.coeffs, self.modulus))

    def derivative(self) -> "ModPoly":
        return self._wrap(_deriv(self.coeffs, self.modulus))

    def __call__(self, x: int) -> int:
        y = 0
        for c in reversed(self.coeffs):
            y = (y * x + c) % self.modulus
        return y

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        # (degree, ascending coefficients lexicographically); zero sorts first
        return (len(self.coeffs), self.coeffs)


@dataclass(frozen=True)
class Factorization:
    """Complete factorization unit * prod(factor**multiplicity)."""

    factors: tuple[tuple[ModPoly, int], ...]
    unit: int

    def expand(self) -> ModPoly:
        """Multiply the factorization back out (round-trip check)."""
        if not self.factors:
            modulus = None
        else:
            modulus = self.factors[0][0].modulus
        if modulus is None:
            raise ParameterError("cannot expand a factorization with no factors and no modulus")
        acc = [self.unit % modulus]
        for poly, mult in self.factors:
            for _ in range(mult):
                acc = _mul(acc, poly.coeffs, modulus)
        return ModPoly(modulus, tuple(acc))

    def expand_over(self, modulus: int) -> ModPoly:
        if self.factors:
            return self.expand()
        return ModPoly(modulus, (self.unit,))

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.factors)

    @property
    def degree_profile(self) -> tuple[tuple[int, int], ...]:
        """(degree, multiplicity) per factor, in emission order."""
        return tuple((len(f.coeffs) - 1, m) for f, m in self.factors)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def reduce(f: Union[IntPoly, Iterable[int]], h: int) -> ModPoly:
    """Coefficient-wise reduction of an integer polynomial into F_h[X].

    Trailing zeros are stripped after reduction, so the degree can drop
    when h divides leading coefficients.
    """
    if not isinstance(h, int) or not is_odd_prime(h):
        raise ParameterError(f"modulus must be an odd prime, got {h!r}")
    coeffs = f.coeffs if isinstance(f, IntPoly) else tuple(f)
    return ModPoly(h, coeffs)


def poly_gcd(a: ModPoly, b: ModPoly) -> ModPoly:
    """Monic greatest common divisor by the Euclidean algorithm."""
    a._check_same_modulus(b)
    if a.is_zero and b.is_zero:
        raise ParameterError("gcd(0, 0) is undefined")
    return a._wrap(_gcd(a.coeffs, b.coeffs, a.modulus))


def is_squarefree(f: ModPoly) -> bool:
    """True iff gcd(f, f') is constant, f' the formal derivative.

    A nonzero polynomial with zero derivative is a perfect h-th power over
    F_h and correctly reports False here (unless it is itself constant).
    """
    if f.is_zero:
        raise ParameterError("squarefreeness of the zero polynomial is undefined")
    g = _gcd(f.coeffs, _deriv(f.coeffs, f.modulus), f.modulus)
    return len(g) == 1


def factorize(f: ModPoly, seed: int = 0) -> Factorization:
    """Factor f into monic irreducibles with multiplicities.

    The equal-degree stage flips seeded random coins, but factors are
    emitted sorted by (degree, ascending-coefficient lex order), so the
    output is identical for every seed; the seed only pins the internal
    search path for reproducibility.
    """
    if f.is_zero:
        raise ParameterError("cannot factor the zero polynomial")
    h = f.modulus
    unit = f.leading_coefficient
    work = _monic(f.coeffs, h)
    rng = random.Random(seed)
    found: dict[tuple[int, ...], int] = {}
    for part, mult in _squarefree_decomposition(work, h):
        for prod, d in _distinct_degree_split(part, h):
            for irr in _equal_degree_split(prod, d, h, rng):
                key = tuple(irr)
                found[key] = found.get(key, 0) + mult
    factors = sorted(found.items(), key=lambda kv: (len(kv[0]), kv[0]))
    return Factorization(
        factors=tuple((ModPoly(h, c), m) for c, m in factors),
        unit=unit,
    )


def _squarefree_decomposition(f: list[int], h: int) -> list[tuple[list[int], int]]:
    """Monic f -> [(g_i, e_i)] with f = prod g_i**e_i, each g_i squarefree."""
    out: list[tuple[list[int], int]] = []
    e = 1
    while len(f) > 1:
        d = _deriv(f, h)
        if not d:
            f = _pth_root(f, h)
            e *= h
            continue
        g = _gcd(f, d, h)
        w = _quo(f, g, h)
        i = 1
        while len(w) > 1:
            y = _gcd(w, g, h)
            z = _quo(w, y, h)
            if len(z) > 1:
                out.append((z, i * e))
            w = y
            g = _quo(g, y, h)
            i += 1
        if len(g) > 1:
            f = _pth_root(g, h)
            e *= h
        else:
            break
    return out


def _distinct_degree_split(f: list[int], h: int) -> list[tuple[list[int], int]]:
    """Monic squarefree f -> [(product of irreducibles of degree d, d)]."""
    out = []
    x = [0, 1]
    frob = list(x)
    d = 0
    while len(f) - 1 > 2 * d:
        d += 1
        frob = _pow_mod(frob, h, f, h)  # X**(h**d) mod f
        g = _gcd(f, _sub(frob, x, h), h)
        if len(g) > 1:
            out.append((g, d))
            f = _quo(f, g, h)
            frob = _rem(frob, f, h)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _equal_degree_split(f: list[int], d: int, h: int, rng: random.Random) -> list[list[int]]:
    """Cantor-Zassenhaus: split a product of degree-d irreducibles over odd h."""
    n = len(f) - 1
    if n == d:
        return [f]
    half = (h**d - 1) // 2
    while True:
        r = [rng.randrange(h) for _ in range(n)]
        r = _strip(r)
        if len(r) < 2:
            continue
        g = _gcd(f, r, h)
        if 1 < len(g) < len(f):
            break
        s = _pow_mod(r, half, f, h)
        g = _gcd(f, _sub(s, [1], h), h)
        if 1 < len(g) < len(f):
            break
    return _equal_degree_split(g, d, h, rng) + _equal_degree_split(_quo(f, g, h), d, h, rng)
