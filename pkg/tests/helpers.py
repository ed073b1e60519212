"""Shared test utilities.

The polynomial routines here are deliberately naive re-implementations,
independent of the package internals, so they can serve as brute-force
oracles for gcd/factorization results.  Coefficient lists are ascending,
trailing zeros stripped, exactly like the package representation.
"""

from __future__ import annotations

import io
from contextlib import redirect_stderr, redirect_stdout
from itertools import product

from cyclorank.cli import run


def run_cli(argv):
    """Invoke the CLI in-process; returns (exit_code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = run(list(argv))
    return code, out.getvalue(), err.getvalue()


# ---------------------------------------------------------------------------
# independent polynomial arithmetic (oracle side)
# ---------------------------------------------------------------------------

def o_strip(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def o_mul(f, g, h):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % h
    return o_strip(out)


def o_divmod(f, g, h):
    rem = list(f)
    dg = len(g) - 1
    if len(rem) - 1 < dg:
        return [], o_strip(rem)
    inv = pow(g[-1], -1, h)
    quo = [0] * (len(rem) - dg)
    for top in range(len(rem) - 1, dg - 1, -1):
        c = (rem[top] * inv) % h
        quo[top - dg] = c
        if c:
            for i in range(dg + 1):
                rem[top - dg + i] = (rem[top - dg + i] - c * g[i]) % h
    return o_strip(quo), o_strip(rem)


def o_divides(g, f, h):
    return o_divmod(f, g, h)[1] == []


def monic_polys(h, degree):
    """All monic polynomials of exact degree `degree` over F_h."""
    for lower in product(range(h), repeat=degree):
        yield list(lower) + [1]


def monic_irreducibles(h, max_degree):
    """All monic irreducibles of degree 1..max_degree by trial division."""
    irreducibles = []
    for d in range(1, max_degree + 1):
        smaller = [q for q in irreducibles if len(q) - 1 <= d // 2]
        for candidate in monic_polys(h, d):
            if not any(o_divides(q, candidate, h) for q in smaller):
                irreducibles.append(candidate)
    return irreducibles


def oracle_factorize(f, h):
    """Complete factorization of nonzero f by trial division.

    Divides by every monic irreducible of degree <= deg(f)/2; whatever is
    left of positive degree must itself be irreducible.  Returns
    (unit, sorted [(coeff_tuple, multiplicity)]).
    """
    f = o_strip(f)
    assert f, "oracle_factorize needs a nonzero polynomial"
    unit = f[-1]
    work = o_mul(f, [pow(unit, -1, h)], h)
    factors = {}
    for q in monic_irreducibles(h, (len(work) - 1) // 2):
        while len(work) > 1 and o_divides(q, work, h):
            work = o_divmod(work, q, h)[0]
            factors[tuple(q)] = factors.get(tuple(q), 0) + 1
    if len(work) > 1:
        factors[tuple(work)] = factors.get(tuple(work), 0) + 1
    return unit, sorted(factors.items(), key=lambda kv: (len(kv[0]), kv[0]))
