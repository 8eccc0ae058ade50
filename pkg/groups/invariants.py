"""Spanning and generating sets of diagonal invariants.

reynolds_generators sums each monomial's orbit, which spans every
graded piece of the invariant ring and works for any group we can
enumerate.  polarized_generators is the short generating set available
for S_n, G(m,1,n) and the dihedral groups G(m,m,2).

"""
import logging
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Dict, List, Tuple

from exact_arith.cyclo import cyclo_reduce
from groups.groups import DEFAULT_MAX_ORDER, GroupSpec, enumerate_elements
from harmonics.poly import ExponentMatrix, Poly, compositions, monomial_basis

logger = logging.getLogger('groups.invariants')

POLICIES = ('polarized', 'reynolds')


class UnsupportedGroupError(ValueError):
    pass


def monomials_of_total_degree(r: int, n: int, k: int) -> List[ExponentMatrix]:
    "Every r x n exponent matrix with entries summing to k, lexicographically ascending."
    monomials = [A for d in compositions(k, r) for A in monomial_basis(r, n, d)]
    return sorted(monomials, key=ExponentMatrix.flat)


def orbit_sum(g: GroupSpec, A: ExponentMatrix, cap: int = DEFAULT_MAX_ORDER) -> Poly:
    """sum over w of X^A evaluated at X w, with cyclotomic integer coefficients."""
    r, n = A.shape
    counts: Dict[ExponentMatrix, List[int]] = {}
    for w in enumerate_elements(g, cap):
        power, B = w.act_on_monomial(A)
        counts.setdefault(B, [0] * g.m)[power] += 1
    return Poly(r, n, {B: cyclo_reduce(tally, g.m) for B, tally in counts.items()}, g.m)


@lru_cache(maxsize=None)
def _orbit_sums(g: GroupSpec, r: int, k: int, cap: int) -> Tuple[Poly, ...]:
    seen = set()
    found = {}
    for A in monomials_of_total_degree(r, g.n, k):
        if A in seen:
            continue
        total = orbit_sum(g, A, cap)
        seen.update(w.act_on_monomial(A)[1] for w in enumerate_elements(g, cap))
        if total and total not in found:
            found[total] = None
    logger.debug('%s, r=%d: %d orbit sums in total degree %d', g, r, len(found), k)
    return tuple(found)


def reynolds_generators(g: GroupSpec, r: int, max_tdeg: int, cap: int = DEFAULT_MAX_ORDER) -> List[Poly]:
    """Orbit sums spanning the invariants of each total degree 1..max_tdeg.

    Orbits are represented by their lexicographically smallest exponent
    matrix, and orbit sums that cancel to zero are dropped.

    """
    return [f for k in range(1, max_tdeg + 1) for f in _orbit_sums(g, r, k, cap)]


def _power_sum(r: int, n: int, a: Tuple[int, ...], order: int, coeff=1) -> Poly:
    "sum_j X_j^a, the column exponent a placed in each coordinate in turn."
    terms = {}
    for j in range(n):
        columns = [(0,) * r] * n
        columns[j] = a
        terms[ExponentMatrix.from_columns(columns)] = coeff
    return Poly(r, n, terms, order)


def _column_exponents(r: int, total: int) -> Tuple[Tuple[int, ...], ...]:
    return compositions(total, r)


def _multinomial(a) -> int:
    return factorial(sum(a)) // prod(factorial(x) for x in a)


def _dihedral_generators(r: int, m: int) -> List[Poly]:
    """Coefficients in t of (sum_i x_i1 t_i)**m + (sum_i x_i2 t_i)**m and of
    (sum_i x_i1 t_i)(sum_i x_i2 t_i).

    """
    gens = [_power_sum(r, 2, a, m, _multinomial(a)) for a in _column_exponents(r, m)]
    for i, k in product(range(r), repeat=2):
        if i > k:
            continue
        terms = {}
        for first, second in {(i, k), (k, i)}:
            rows = [[0, 0] for _ in range(r)]
            rows[first][0] += 1
            rows[second][1] += 1
            terms[ExponentMatrix(rows)] = 1
        gens.append(Poly(r, 2, terms, m))
    return gens


def polarized_generators(g: GroupSpec, r: int) -> List[Poly]:
    """A finite generating set of the diagonal invariant ideal.

    S_n: the polarized power sums sum_j X_j^a with 1 <= |a| <= n.
    G(m,1,n): the same with |a| in m, 2m, ..., nm.
    G(m,m,2): the two polarized expressions above.

    """
    if g.family == 'symmetric':
        return [_power_sum(r, g.n, a, 1) for k in range(1, g.n + 1) for a in _column_exponents(r, k)]
    if g.p == 1:
        return [_power_sum(r, g.n, a, g.m)
                for k in range(1, g.n + 1)
                for a in _column_exponents(r, k * g.m)]
    if g.n == 2 and g.p == g.m:
        return _dihedral_generators(r, g.m)
    raise UnsupportedGroupError(
        f'no polarized generators for {g.canonical_name}; use the reynolds policy')


def generators(g: GroupSpec, r: int, policy: str, max_tdeg: int, cap: int = DEFAULT_MAX_ORDER) -> List[Poly]:
    "Generators of total degree at most max_tdeg under the named policy."
    if policy == 'polarized':
        return [f for f in polarized_generators(g, r) if f.tdeg() <= max_tdeg]
    if policy == 'reynolds':
        return reynolds_generators(g, r, max_tdeg, cap)
    raise ValueError(f'unknown generator policy {policy!r}')


def supports_polarized(g: GroupSpec) -> bool:
    return g.family in ('symmetric', 'cyclic', 'full') or (g.n == 2 and g.p == g.m)


def resolve_policy(g: GroupSpec, policy: str) -> str:
    "auto means polarized where available, reynolds otherwise."
    if policy == 'auto':
        return 'polarized' if supports_polarized(g) else 'reynolds'
    if policy not in POLICIES:
        raise ValueError(f'unknown generator policy {policy!r}')
    if policy == 'polarized' and not supports_polarized(g):
        raise UnsupportedGroupError(
            f'no polarized generators for {g.canonical_name}; use the reynolds policy')
    return policy
