"""Exact univariate polynomial arithmetic over Z and Q.

Polynomials are tuples of coefficients in ascending order (index = power),
normalized so the last entry is nonzero; the zero polynomial is ().

The toolkit covers what certified spectral classification needs:
Sturm-sequence root counting and isolation, Cauchy bounds, reciprocal
transforms, cyclotomic recognition, and irreducible factorization of monic
integer polynomials (rational-root fast path, sympy for degree >= 4).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


def normalize(coeffs) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(p) -> int:
    """Degree, with the convention deg 0 = -1."""
    return len(p) - 1


def leading(p):
    return p[-1]


def is_monic(p) -> bool:
    return bool(p) and p[-1] == 1


def add(p, q):
    n = max(len(p), len(q))
    return normalize([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def neg(p):
    return tuple(-c for c in p)


def sub(p, q):
    return add(p, neg(q))


def mul(p, q):
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return normalize(out)


def scale(p, c):
    if c == 0:
        return ()
    return tuple(x * c for x in p)


def evaluate(p, x):
    """Horner evaluation; exact for int/Fraction arguments."""
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p):
    return normalize([i * c for i, c in enumerate(p)][1:])


def divmod_exact(p, q):
    """Polynomial division over Q. Returns (quotient, remainder) as Fraction tuples."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in p]
    qlead = Fraction(q[-1])
    dq = degree(q)
    quot = [Fraction(0)] * max(len(p) - dq, 1)
    while len(rem) - 1 >= dq and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < dq:
            break
        f = rem[-1] / qlead
        k = len(rem) - 1 - dq
        quot[k] = f
        for i, c in enumerate(q):
            rem[k + i] -= f * Fraction(c)
        rem.pop()
    return normalize(quot), normalize(rem)


def div_exact_int(p, q):
    """Divide integer polynomials, requiring an exact integer quotient."""
    quot, rem = divmod_exact(p, q)
    if rem:
        raise ValueError("inexact polynomial division")
    out = []
    for c in quot:
        if c.denominator != 1:
            raise ValueError("quotient not integral")
        out.append(int(c))
    return normalize(out)


def primitive_int(p):
    """Clear denominators and content, preserving sign: returns an integer
    polynomial that is a positive rational multiple of p."""
    if not p:
        return ()
    from math import gcd, lcm

    fracs = [Fraction(c) for c in p]
    den = 1
    for f in fracs:
        den = lcm(den, f.denominator)
    ints = [int(f * den) for f in fracs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return tuple(c // g for c in ints)


def poly_gcd(p, q):
    """Monic gcd over Q, returned as a primitive integer polynomial."""
    a, b = tuple(Fraction(c) for c in p), tuple(Fraction(c) for c in q)
    while b:
        _, r = divmod_exact(a, b)
        a, b = b, r
    if not a:
        return ()
    return primitive_int(a)


def squarefree_part(p):
    """p with repeated roots collapsed to simple ones (primitive integer output)."""
    g = poly_gcd(p, derivative(p))
    if degree(g) <= 0:
        return primitive_int(p)
    quot, rem = divmod_exact(p, g)
    assert not rem
    return primitive_int(quot)


def reverse(p):
    """Coefficient reversal x^deg * p(1/x); trims trailing zeros of the input first."""
    return normalize(tuple(reversed(p)))


def is_self_reciprocal(p) -> bool:
    return normalize(p) == reverse(p)


def negate_variable(p):
    """p(-x), sign-normalized to keep the result monic when p is monic."""
    q = tuple(c if i % 2 == 0 else -c for i, c in enumerate(p))
    if q and q[-1] < 0:
        q = neg(q)
    return normalize(q)


def cauchy_bound(p) -> int:
    """Integer B with every real root of p strictly inside (-B, B)."""
    lead = abs(p[-1])
    m = max(abs(c) for c in p[:-1]) if len(p) > 1 else 0
    b = 1 + (m + lead - 1) // lead  # ceil(m / lead) + 1
    return max(b, 2)


# ---------------------------------------------------------------------------
# Sturm machinery


def sturm_chain(p):
    """Sturm chain of the squarefree part of p, as primitive integer polys."""
    s0 = squarefree_part(p)
    chain = [s0]
    s1 = normalize(derivative(s0))
    if s1:
        chain.append(primitive_int(s1))
    while degree(chain[-1]) > 0:
        _, r = divmod_exact(chain[-2], chain[-1])
        if not r:
            break
        chain.append(primitive_int(neg(r)))
    return chain


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sign_variations_at(chain, x) -> int:
    signs = [_sign(evaluate(s, x)) for s in chain]
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sign_variations_at_inf(chain, positive: bool) -> int:
    signs = []
    for s in chain:
        lead = _sign(s[-1])
        if not positive and degree(s) % 2 == 1:
            lead = -lead
        signs.append(lead)
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots_between(p, a, b) -> int:
    """Number of distinct real roots in the open interval (a, b).

    Endpoints must not be roots of p; pass a=None / b=None for -inf / +inf.
    """
    chain = sturm_chain(p)
    if a is not None and evaluate(chain[0], a) == 0:
        raise ValueError("left endpoint is a root; strip it first")
    if b is not None and evaluate(chain[0], b) == 0:
        raise ValueError("right endpoint is a root; strip it first")
    va = sign_variations_at(chain, a) if a is not None else sign_variations_at_inf(chain, False)
    vb = sign_variations_at(chain, b) if b is not None else sign_variations_at_inf(chain, True)
    return va - vb


def count_real_roots(p) -> int:
    return count_real_roots_between(p, None, None)


def strip_root(p, r):
    """Divide out (x - r) as often as possible; returns (reduced, multiplicity)."""
    mult = 0
    while p and evaluate(p, r) == 0:
        p = div_exact_int(p, (-r, 1))
        mult += 1
    return p, mult


def isolate_extreme_root(p, side: str):
    """Isolating interval (lo, hi) for the largest (side='max') or smallest
    (side='min') real root of p, as Fractions. The interval is open, contains
    exactly one distinct root of p, and that root is the requested extreme one.

    Requires p to have at least one real root.
    """
    sf = squarefree_part(p)
    chain = sturm_chain(sf)
    bound = cauchy_bound(sf)
    lo, hi = Fraction(-bound), Fraction(bound)

    def count(a, b):
        return sign_variations_at(chain, a) - sign_variations_at(chain, b)

    total = count(lo, hi)
    if total == 0:
        raise ValueError("polynomial has no real roots")
    if total == 1:
        return lo, hi
    while True:
        mid = (lo + hi) / 2
        while evaluate(sf, mid) == 0:
            mid = (mid + hi) / 2  # finitely many roots, so this terminates
        upper = count(mid, hi)
        lower = count(lo, mid)
        if side == "max":
            if upper > 0:
                lo = mid
                if upper == 1:
                    return lo, hi
            else:
                hi = mid
                if lower == 1:
                    return lo, hi
        else:
            if lower > 0:
                hi = mid
                if lower == 1:
                    return lo, hi
            else:
                lo = mid
                if upper == 1:
                    return lo, hi


def refine_isolating_interval(p, lo, hi, width):
    """Shrink an isolating interval of a simple root by sign bisection until
    hi - lo < width. The initial interval must bracket a sign change."""
    flo = evaluate(p, lo)
    fhi = evaluate(p, hi)
    if flo == 0 or fhi == 0:
        raise ValueError("endpoints must not be roots")
    assert (flo > 0) != (fhi > 0), "interval must bracket a sign change"
    while hi - lo >= width:
        mid = (lo + hi) / 2
        fmid = evaluate(p, mid)
        if fmid == 0:
            # exact rational root: return a tight straddle
            eps = width / 4
            return mid - eps, mid + eps
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
    return lo, hi


# ---------------------------------------------------------------------------
# Cyclotomic recognition


@lru_cache(maxsize=None)
def cyclotomic(m: int):
    """The m-th cyclotomic polynomial, coefficients ascending."""
    if m == 1:
        return (-1, 1)
    # x^m - 1 divided by the product of cyclotomic(d) over proper divisors d
    p = tuple([-1] + [0] * (m - 1) + [1])
    for d in range(1, m):
        if m % d == 0:
            p = div_exact_int(p, cyclotomic(d))
    return p


@lru_cache(maxsize=None)
def _cyclotomic_orders_of_degree(d: int) -> tuple:
    """All m with phi(m) = d. Uses phi(m) >= sqrt(m/2), so m <= 2 d^2."""

    def phi(m):
        result, k, mm = 1, 2, m
        while k * k <= mm:
            if mm % k == 0:
                pk = 1
                while mm % k == 0:
                    mm //= k
                    pk *= k
                result *= pk - pk // k
            k += 1
        if mm > 1:
            result *= mm - 1
        return result

    return tuple(m for m in range(1, 2 * d * d + 2) if phi(m) == d)


def cyclotomic_index(p):
    """m such that p is the m-th cyclotomic polynomial, else None."""
    p = normalize(p)
    d = degree(p)
    if d < 1 or not is_monic(p):
        return None
    for m in _cyclotomic_orders_of_degree(d):
        if cyclotomic(m) == p:
            return m
    return None


def is_cyclotomic(p) -> bool:
    return cyclotomic_index(p) is not None


def strip_cyclotomic_factors(p):
    """Factor out every cyclotomic divisor of a monic integer polynomial.

    Returns (residual, factors) where factors is a list of (m, multiplicity)
    and residual has no cyclotomic divisors. One pass over all candidate
    orders suffices because factorization over Q is unique.
    """
    p = normalize(p)
    factors = []
    dmax = degree(p)
    for deg_f in range(1, dmax + 1):
        if deg_f > degree(p):
            break
        for m in _cyclotomic_orders_of_degree(deg_f):
            phi_m = cyclotomic(m)
            mult = 0
            while degree(p) >= deg_f:
                quot, rem = divmod_exact(p, phi_m)
                if rem:
                    break
                p = primitive_int(quot)
                mult += 1
            if mult:
                factors.append((m, mult))
    return p, sorted(factors)


# ---------------------------------------------------------------------------
# Reciprocal-pair transform


def trace_transform(p):
    """For a self-reciprocal p of even degree 2m, the degree-m polynomial G
    with p(x) = x^m * G(x + 1/x).

    Uses x^k + x^-k = P_k(y): P_0 = 2, P_1 = y, P_{k+1} = y P_k - P_{k-1}.
    """
    p = normalize(p)
    d = degree(p)
    if d % 2 != 0 or not is_self_reciprocal(p):
        raise ValueError("trace transform needs a self-reciprocal even-degree polynomial")
    m = d // 2
    pk_prev, pk = (2,), (0, 1)
    g = (p[m],)
    for k in range(1, m + 1):
        g = add(g, scale(pk, p[m + k]))
        pk_prev, pk = pk, sub(mul((0, 1), pk), pk_prev)
    return g


# ---------------------------------------------------------------------------
# Factorization of monic integer polynomials


def _integer_roots(p):
    """Integer roots of a monic integer polynomial (they divide the constant term)."""
    p = normalize(p)
    if not p or p[0] == 0:
        # x divides p; callers here always have nonzero constant term
        raise ValueError("zero constant term not supported")
    c0 = abs(p[0])
    roots = []
    divisors = set()
    d = 1
    while d * d <= c0:
        if c0 % d == 0:
            divisors.update((d, c0 // d))
        d += 1
    for r in sorted(divisors):
        for cand in (r, -r):
            if evaluate(p, cand) == 0:
                roots.append(cand)
    return roots


def factor_monic(p):
    """Irreducible factorization over Q of a monic integer polynomial.

    Returns a list of (factor, multiplicity), factors monic with integer
    coefficients, sorted by (degree, coefficients). Degree <= 3 residuals are
    resolved by rational-root stripping; higher degrees go through sympy.
    """
    p = normalize(p)
    if not is_monic(p):
        raise ValueError("factor_monic expects a monic polynomial")
    if degree(p) == 0:
        return []
    factors = {}
    while p[0] == 0:
        p = normalize(p[1:])
        factors[(0, 1)] = factors.get((0, 1), 0) + 1
    if degree(p) == 0:
        return sorted(factors.items(), key=lambda kv: (degree(kv[0]), kv[0]))
    for r in _integer_roots(p):
        p, mult = strip_root(p, r)
        if mult:
            factors[(-r, 1)] = mult
    d = degree(p)
    if d == 0:
        pass
    elif d in (1, 2, 3):
        # no rational roots remain, so degree <= 3 residuals are irreducible
        factors[p] = factors.get(p, 0) + 1
    else:
        from sympy import Poly, symbols

        x = symbols("x")
        _, flist = Poly(list(reversed(p)), x, domain="ZZ").factor_list()
        for fac, mult in flist:
            coeffs = tuple(int(c) for c in reversed(fac.all_coeffs()))
            factors[coeffs] = factors.get(coeffs, 0) + mult
    return sorted(factors.items(), key=lambda kv: (degree(kv[0]), kv[0]))
