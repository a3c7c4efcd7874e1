"""Local standard bases and colengths of ideals in Q[[x, y]].

Monomials are compared in a local order: smaller total degree means a
*larger* monomial (so 1 is the largest of all), with ties broken by x-degree
(x above y). Leading terms are therefore the lowest-degree corners of a
series, which is what makes Mora's normal form terminate where ordinary
division would not.

Two independent colength computations live here on purpose:

* ``standard_basis`` + ``colength`` count the staircase of the leading ideal
  computed by Mora's tangent cone algorithm (exact, complete);
* ``colength_oracle`` computes the codimension of a degree-truncated ideal by
  integer Gaussian elimination, certifying exactness via stability at two
  consecutive caps.

They share no code beyond the Polynomial type, so agreement is meaningful.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import NonIsolatedSingularityError, NotAGermError, ZeroIdealError
from .polynomials import Polynomial

Exponent = tuple[int, int]
IntTerms = dict[Exponent, int]

#: Sentinel returned by ``colength`` for ideals of infinite colength.
INFINITE = object()

#: Sentinel returned by ``colength_oracle`` when truncation did not stabilize.
UNSTABLE = object()

# Hard ceiling on reduction steps inside one normal form; hitting it means a
# diverging computation (non-reduced or otherwise degenerate input).
_REDUCTION_STEP_LIMIT = 10**6


def _order_key(mono: Exponent) -> tuple[int, int]:
    # smaller key = larger monomial in the local order
    i, j = mono
    return (i + j, -i)


class LocalOrder:
    """The negative-degree monomial order with lex tie break (x above y)."""

    @staticmethod
    def key(mono: Exponent) -> tuple[int, int]:
        return _order_key(mono)

    @staticmethod
    def greater(a: Exponent, b: Exponent) -> bool:
        """True when monomial ``a`` is strictly larger than ``b``."""
        return _order_key(a) < _order_key(b)

    @staticmethod
    def leading_monomial(p: "Polynomial | IntTerms") -> Exponent:
        terms = p.terms if isinstance(p, Polynomial) else p
        return min(terms, key=_order_key)


LOCAL_ORDER = LocalOrder()


# -- integer term-dict helpers ----------------------------------------------


def _to_int_terms(p: Polynomial) -> IntTerms:
    """Clear denominators and content; the result spans the same ideal."""
    terms = p.terms
    lcm_den = 1
    for c in terms.values():
        lcm_den = lcm_den * c.denominator // gcd(lcm_den, c.denominator)
    out = {k: int(c * lcm_den) for k, c in terms.items()}
    return _content_normalize(out)


def _content_normalize(terms: IntTerms) -> IntTerms:
    """Divide by the gcd of all coefficients and make the leading one positive."""
    if not terms:
        return terms
    g = 0
    for c in terms.values():
        g = gcd(g, c)
        if g == 1:
            break
    if g > 1:
        terms = {k: c // g for k, c in terms.items()}
    if terms[min(terms, key=_order_key)] < 0:
        terms = {k: -c for k, c in terms.items()}
    return terms


def _to_polynomial(terms: IntTerms) -> Polynomial:
    return Polynomial({k: Fraction(c) for k, c in terms.items()})


def _ord_of(terms: IntTerms) -> int:
    return min(i + j for i, j in terms)


def _ecart(terms: IntTerms) -> int:
    # gap between the highest and lowest total degree present
    return max(i + j for i, j in terms) - _ord_of(terms)


def _divides(a: Exponent, b: Exponent) -> bool:
    return a[0] <= b[0] and a[1] <= b[1]


def _cancel_leading(h: IntTerms, g: IntTerms) -> IntTerms:
    """One exact reduction step: kill the leading term of h with a multiple of g."""
    lmh = min(h, key=_order_key)
    lmg = min(g, key=_order_key)
    di, dj = lmh[0] - lmg[0], lmh[1] - lmg[1]
    a, b = g[lmg], h[lmh]
    out = {k: a * c for k, c in h.items()}
    for (i, j), c in g.items():
        k = (i + di, j + dj)
        v = out.get(k, 0) - b * c
        if v:
            out[k] = v
        elif k in out:
            del out[k]
    return _content_normalize(out)


# -- truncation oracle (independent of the standard basis machinery) --------


def colength_oracle(generators: Iterable[Polynomial], degree_cap: int):
    """Codimension of the span of all truncated monomial multiples.

    Computes the codimension at ``degree_cap - 1`` and ``degree_cap``; if the
    two agree the common value is the exact colength (the quotient staircase
    is a lower set, so its counting function is constant in the cap exactly
    once every staircase monomial lies below it). Returns UNSTABLE otherwise;
    an infinite colength never stabilizes.
    """
    if degree_cap < 2:
        raise ValueError("degree_cap must be at least 2")
    polys = [p for p in generators if isinstance(p, Polynomial) and not p.is_zero()]
    low = _truncated_codimension(polys, degree_cap - 1)
    high = _truncated_codimension(polys, degree_cap)
    return high if low == high else UNSTABLE


def _truncated_codimension(polys: Sequence[Polynomial], cap: int) -> int:
    pivots: dict[Exponent, IntTerms] = {}
    for p in polys:
        base = _to_int_terms(p)
        shift_budget = cap - _ord_of(base)
        if shift_budget < 0:
            continue
        multipliers = [
            (i, j)
            for d in range(shift_budget + 1)
            for i in range(d, -1, -1)
            for j in (d - i,)
        ]
        for (mi, mj) in multipliers:
            row: IntTerms = {}
            for (i, j), c in base.items():
                if i + mi + j + mj <= cap:
                    row[(i + mi, j + mj)] = c
            row = _content_normalize(row)
            while row:
                lead = min(row, key=_order_key)
                pivot = pivots.get(lead)
                if pivot is None:
                    pivots[lead] = row
                    break
                row = _cancel_leading(row, pivot)
    n_columns = (cap + 1) * (cap + 2) // 2
    return n_columns - len(pivots)


# -- Mora standard bases -----------------------------------------------------


@dataclass(frozen=True)
class StandardBasis:
    """A standard basis together with the minimal exponents of its leading ideal."""

    generators: tuple[Polynomial, ...]
    leading_exponents: frozenset[Exponent]
    order: LocalOrder


def _mora_normal_form(f: IntTerms, reducers: list[IntTerms]) -> IntTerms:
    """Mora's weak normal form of f against the reducer list.

    Reducers whose ecart exceeds the current remainder's are avoided when a
    better one exists; when none exists the remainder itself joins the local
    reducer pool, which is what forces termination in the local order.
    """
    pool = [(r, min(r, key=_order_key), _ecart(r)) for r in reducers]
    h = f
    steps = 0
    while h:
        lmh = min(h, key=_order_key)
        best = None
        best_rank = None
        for idx, (r, lm, ec) in enumerate(pool):
            if not _divides(lm, lmh):
                continue
            # prefer small ecart, then the smallest leading monomial (lowest
            # degree first), then first inserted; preferring low-degree
            # reducers keeps coefficient growth tame
            rank = (ec, lm[0] + lm[1], lm[0], idx)
            if best_rank is None or rank < best_rank:
                best_rank = rank
                best = (r, ec)
        if best is None:
            return h
        reducer, reducer_ecart = best
        if reducer_ecart > _ecart(h):
            pool.append((h, lmh, _ecart(h)))
        h = _cancel_leading(h, reducer)
        steps += 1
        if steps > _REDUCTION_STEP_LIMIT:
            raise RuntimeError("normal form did not terminate within the step limit")
    return h


def _s_polynomial(f: IntTerms, g: IntTerms) -> IntTerms:
    lmf = min(f, key=_order_key)
    lmg = min(g, key=_order_key)
    lcm = (max(lmf[0], lmg[0]), max(lmf[1], lmg[1]))
    a, b = f[lmf], g[lmg]
    out: IntTerms = {}
    for (i, j), c in f.items():
        k = (i + lcm[0] - lmf[0], j + lcm[1] - lmf[1])
        out[k] = out.get(k, 0) + b * c
    for (i, j), c in g.items():
        k = (i + lcm[0] - lmg[0], j + lcm[1] - lmg[1])
        v = out.get(k, 0) - a * c
        if v:
            out[k] = v
        elif k in out:
            del out[k]
    return _content_normalize(out)


def standard_basis(generators: Iterable[Polynomial]) -> StandardBasis:
    """Complete the generators to a standard basis for the local order.

    Buchberger-style completion using Mora normal forms. Pairs are processed
    in increasing order of the total degree of the lcm of leading monomials,
    which keeps the run deterministic.
    """
    basis: list[IntTerms] = []
    for p in generators:
        if not p.is_zero():
            basis.append(_to_int_terms(p))
    if not basis:
        raise ZeroIdealError("all generators are zero")
    # a unit generator spans the whole local ring; Mora reduction by a unit
    # never halts early, so short-circuit instead of completing
    if any(_ord_of(g) == 0 for g in basis):
        return StandardBasis(
            generators=(Polynomial({(0, 0): 1}),),
            leading_exponents=frozenset([(0, 0)]),
            order=LOCAL_ORDER,
        )

    def pair_key(i: int, j: int) -> tuple[int, int, int, int]:
        lmi = min(basis[i], key=_order_key)
        lmj = min(basis[j], key=_order_key)
        lcm = (max(lmi[0], lmj[0]), max(lmi[1], lmj[1]))
        return (lcm[0] + lcm[1], lcm[0], i, j)

    queue: list[tuple[tuple[int, int, int, int], int, int]] = []
    for j in range(len(basis)):
        for i in range(j):
            heapq.heappush(queue, (pair_key(i, j), i, j))

    while queue:
        _, i, j = heapq.heappop(queue)
        s = _s_polynomial(basis[i], basis[j])
        if not s:
            continue
        remainder = _mora_normal_form(s, basis)
        if not remainder:
            continue
        basis.append(remainder)
        new = len(basis) - 1
        for k in range(new):
            heapq.heappush(queue, (pair_key(k, new), k, new))

    # keep one generator per minimal leading exponent
    lead = [min(g, key=_order_key) for g in basis]
    keep: list[int] = []
    for idx, lm in enumerate(lead):
        redundant = False
        for kdx, other in enumerate(lead):
            if kdx == idx:
                continue
            if _divides(other, lm) and (other != lm or kdx < idx):
                redundant = True
                break
        if not redundant:
            keep.append(idx)
    kept = [basis[idx] for idx in keep]
    return StandardBasis(
        generators=tuple(_to_polynomial(g) for g in kept),
        leading_exponents=frozenset(lead[idx] for idx in keep),
        order=LOCAL_ORDER,
    )


def colength(basis: StandardBasis):
    """Number of monomials outside the leading ideal; INFINITE if unbounded.

    Finite exactly when the leading ideal contains a pure power of x and a
    pure power of y.
    """
    exponents = basis.leading_exponents
    x_powers = [i for (i, j) in exponents if j == 0]
    y_powers = [j for (i, j) in exponents if i == 0]
    if not x_powers or not y_powers:
        return INFINITE
    count = 0
    for column in range(min(x_powers)):
        count += min(j for (i, j) in exponents if i <= column)
    return count


def _require_germ(f: Polynomial) -> None:
    if f.is_zero():
        raise NotAGermError("the zero polynomial defines no germ")
    if f(0, 0) != 0:
        raise NotAGermError("the polynomial does not vanish at the origin")


def _align_tangent_cone(f: Polynomial) -> Polynomial:
    """Shear a single-direction tangent cone onto the y-axis.

    Both colengths below are invariant under invertible linear substitutions,
    and Mora reduction behaves far better (no coefficient blow-up through
    long cancellation chains) when the initial form is a pure power of y.
    Germs whose tangent cone already spreads over several directions are
    returned unchanged.
    """
    from math import comb

    m = f.order()
    if m < 2:
        return f
    init = f.initial_form()
    top = init.coefficient(0, m)
    if top == 0:
        if len(init) == 1 and init.coefficient(m, 0) != 0:
            # pure power of x: swap the variables
            return f.swap_variables()
        return f
    t = -init.coefficient(1, m - 1) / (top * m)
    if t == 0:
        return f
    pure = Polynomial({(k, m - k): top * comb(m, k) * (-t) ** k for k in range(m + 1)})
    if pure == init:
        return f.substitute_linear(((1, 0), (t, 1)))
    return f


def milnor_number(f: Polynomial) -> int:
    """Colength of the ideal of both partial derivatives; requires it finite."""
    _require_germ(f)
    fx, fy = _align_tangent_cone(f).partials()
    value = colength(standard_basis([fx, fy]))
    if value is INFINITE:
        raise NonIsolatedSingularityError("the critical locus is not isolated")
    return value


def tjurina_number(f: Polynomial) -> int:
    """Colength of the ideal of f and both partial derivatives."""
    _require_germ(f)
    g = _align_tangent_cone(f)
    gx, gy = g.partials()
    value = colength(standard_basis([g, gx, gy]))
    if value is INFINITE:
        raise NonIsolatedSingularityError("the singular locus is not isolated")
    return value
