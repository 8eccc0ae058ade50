"""Diagonally harmonic polynomials, one multidegree at a time.

The harmonic component of multidegree d is the common kernel of the
operators f(d/dX) for the invariant generators f, restricted to the
polynomials of multidegree d.  Each component is an independent exact
linear algebra problem, which the series drivers run largest-first,
optionally in a process pool, and merge in sorted order.

"""
from __future__ import annotations

import asyncio
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from more_itertools import distinct_permutations
from sympy.polys.domains import QQ

from exact_arith.cyclo import CycloNum
from exact_arith.linalg import ExactMatrix, NotInSpanError, kernel_basis, rank, solve_many_in_span
from groups.groups import (DEFAULT_MAX_ORDER, GroupElement, GroupSpec, conjugacy_representatives,
                           degree_bound)
from groups.invariants import UnsupportedGroupError, generators, resolve_policy
from harmonics.poly import ExponentMatrix, Poly, differentiate, monomial_basis, monomial_count
from harmonics.series import FROBENIUS, HILBERT, GradedSeries
from symfunc.characters import sn_character
from symfunc.partitions import Partition, hook_length_dimension, partitions_of, z_value

logger = logging.getLogger('harmonics.engine')

ENGINE_VERSION = 'harm-1'

DEFAULT_MAX_MATRIX_ENTRIES = 50_000_000

__all__ = ['ENGINE_VERSION', 'ComponentJob', 'ConsistencyError', 'HarmonicComponent', 'Limits',
           'ResourceCapError', 'component_dimension', 'degree_bound', 'frobenius_series',
           'harmonic_component', 'hilbert_series', 'ideal_component_rank', 'ideal_spanning_set']


class ResourceCapError(ValueError):
    def __init__(self, message, multidegree=None):
        super().__init__(message)
        self.multidegree = multidegree


    def __reduce__(self):
        return (self.__class__, (str(self), self.multidegree))


class ConsistencyError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Limits:
    max_group_order: int = DEFAULT_MAX_ORDER
    max_matrix_entries: int = DEFAULT_MAX_MATRIX_ENTRIES
    elimination: str = 'exact'


@dataclass(frozen=True)
class ComponentJob:
    """One unit of work: a component dimension, or its S_n
    multiplicities when kind is frobenius.

    """
    group: GroupSpec
    r: int
    policy: str
    multidegree: Tuple[int, ...]
    kind: str = HILBERT

    def size(self) -> int:
        return monomial_count(self.group.n, self.multidegree)


def _below(e: Sequence[int], d: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(e, d))


def _operators(g: GroupSpec, r: int, d: Tuple[int, ...], policy: str, limits: Limits) -> List[Poly]:
    "Generators that can act nontrivially on multidegree d."
    if not sum(d):
        return []
    gens = generators(g, r, policy, sum(d), limits.max_group_order)
    return [f for f in gens if any(_below(e, d) for e in f.multidegrees())]


def operator_matrix(gens: Sequence[Poly], columns: Sequence[ExponentMatrix], order: int,
                    limits: Limits = Limits(), multidegree=None) -> ExactMatrix:
    """Stack f(d/dX) X^A over all generators f and monomials A.

    Column c holds the image of columns[c]; rows are indexed by
    (generator, resulting monomial) in order of first appearance.

    """
    rows = {}
    entries = {}
    for c, A in enumerate(columns):
        for gi, f in enumerate(gens):
            for B, coeff in f.terms.items():
                derived = differentiate(B, A)
                if derived is None:
                    continue
                factor, C = derived
                key = (rows.setdefault((gi, C), len(rows)), c)
                value = coeff * factor
                entries[key] = entries[key] + value if key in entries else value
        if len(entries) > limits.max_matrix_entries:
            logger.warning('operator matrix at %s exceeds %d entries', multidegree, limits.max_matrix_entries)
            raise ResourceCapError(
                f'operator matrix at multidegree {multidegree} exceeds {limits.max_matrix_entries} entries',
                multidegree)
    return ExactMatrix(len(rows), len(columns), entries, order)


def _prepare(g: GroupSpec, r: int, d, policy: str, limits: Limits):
    d = tuple(d)
    if len(d) != r:
        raise ValueError(f'multidegree {d} for {r} sets of variables')
    policy = resolve_policy(g, policy)
    columns = monomial_basis(r, g.n, d)
    matrix = operator_matrix(_operators(g, r, d, policy, limits), columns, g.m, limits, d)
    return d, policy, columns, matrix


@dataclass(frozen=True)
class HarmonicComponent:
    """A basis of the harmonics of one multidegree.

    vectors are coefficient vectors over monomials, in the reduced
    echelon form returned by kernel_basis.

    """
    group: GroupSpec
    r: int
    multidegree: Tuple[int, ...]
    policy: str
    monomials: Tuple[ExponentMatrix, ...]
    vectors: Tuple[Tuple[CycloNum, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.vectors)


    def basis(self) -> List[Poly]:
        return [Poly(self.r, self.group.n, dict(zip(self.monomials, v)), self.group.m) for v in self.vectors]


    def as_matrix(self) -> ExactMatrix:
        return ExactMatrix.from_columns(self.vectors, len(self.monomials), self.group.m)


    def act(self, w: GroupElement, vector: Sequence[CycloNum]) -> Tuple[CycloNum, ...]:
        "The coefficient vector of w applied to the polynomial with coefficients vector."
        index = {A: i for i, A in enumerate(self.monomials)}
        result = [CycloNum.zero(self.group.m)] * len(self.monomials)
        for A, coeff in zip(self.monomials, vector):
            if not coeff:
                continue
            power, B = w.act_on_monomial(A)
            value = coeff * CycloNum.zeta(self.group.m, power) if power else coeff
            result[index[B]] = result[index[B]] + value
        return tuple(result)


def harmonic_component(g: GroupSpec, r: int, d, policy='auto', limits: Limits = Limits()) -> HarmonicComponent:
    start = time.perf_counter()
    d, policy, columns, matrix = _prepare(g, r, d, policy, limits)
    vectors = kernel_basis(matrix, limits.elimination)
    logger.info('%s r=%d d=%s: %dx%d, %d nonzeros, dim %d, %.3fs',
                g, r, d, matrix.rows, matrix.cols, matrix.nnz(), len(vectors), time.perf_counter() - start)
    return HarmonicComponent(g, r, d, policy, tuple(columns), tuple(vectors))


def _dimension_with_stats(g: GroupSpec, r: int, d, policy, limits: Limits):
    start = time.perf_counter()
    d, policy, columns, matrix = _prepare(g, r, d, policy, limits)
    dimension = len(columns) - rank(matrix, limits.elimination)
    elapsed = time.perf_counter() - start
    logger.info('%s r=%d d=%s: %dx%d, %d nonzeros, dim %d, %.3fs',
                g, r, d, matrix.rows, matrix.cols, matrix.nnz(), dimension, elapsed)
    return dimension, {'rows': matrix.rows, 'cols': matrix.cols, 'nnz': matrix.nnz(),
                       'seconds': round(elapsed, 3)}


def component_dimension(g: GroupSpec, r: int, d, policy='auto', limits: Limits = Limits()) -> int:
    return _dimension_with_stats(g, r, d, policy, limits)[0]


def frobenius_component(g: GroupSpec, r: int, d, policy='auto',
                        limits: Limits = Limits()) -> Dict[Partition, int]:
    """Multiplicities of the S_n-irreducibles in the component at d.

    Traces come from re-expressing w applied to each basis vector in
    the basis itself, for one w per cycle type.

    """
    if g.family != 'symmetric':
        raise UnsupportedGroupError(f'Frobenius series are only computed for S_n, not {g}')
    component = harmonic_component(g, r, d, policy, limits)
    if not component.vectors:
        return {}
    basis = component.as_matrix()
    traces = {}
    for mu, w in conjugacy_representatives(g.n):
        images = [component.act(w, v) for v in component.vectors]
        try:
            coefficients = solve_many_in_span(basis, images)
        except NotInSpanError as error:
            raise ConsistencyError(
                f'{mu} does not preserve the harmonics at {component.multidegree}') from error
        traces[mu] = sum((coefficients[k][k] for k in range(component.dimension)),
                         CycloNum.zero(g.m)).to_rational()

    multiplicities = {}
    for lam in partitions_of(g.n):
        value = sum((QQ(sn_character(lam, mu)) * trace / z_value(mu) for mu, trace in traces.items()), QQ.zero)
        if value.denominator != 1 or value < 0:
            raise ConsistencyError(f'multiplicity {value} of {lam} at {component.multidegree}')
        if value:
            multiplicities[lam] = int(value)
    total = sum(hook_length_dimension(lam) * mult for lam, mult in multiplicities.items())
    if total != component.dimension:
        raise ConsistencyError(
            f'multiplicities account for {total} of {component.dimension} dimensions at {component.multidegree}')
    return multiplicities


def _run_job(job: ComponentJob, limits: Limits):
    if job.kind == FROBENIUS:
        start = time.perf_counter()
        payload = frobenius_component(job.group, job.r, job.multidegree, job.policy, limits)
        return job, payload, {'seconds': round(time.perf_counter() - start, 3)}
    dimension, stats = _dimension_with_stats(job.group, job.r, job.multidegree, job.policy, limits)
    return job, dimension, stats


async def _gather(pending: List[ComponentJob], limits: Limits, workers: int):
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        tasks = [loop.run_in_executor(pool, _run_job, job, limits) for job in pending]
        return await asyncio.gather(*tasks)


def run_jobs(jobs: Iterable[ComponentJob], limits: Limits = Limits(), workers: int = 1, store=None):
    """Payloads for every job, consulting and feeding store if given.

    store needs lookup(job) -> payload or None and record(job, payload,
    stats).  Only this process writes to it.

    """
    results = {}
    pending = []
    for job in jobs:
        cached = store.lookup(job) if store is not None else None
        if cached is not None:
            results[job] = cached
        else:
            pending.append(job)
    pending.sort(key=lambda job: (-job.size(), job.multidegree))
    if workers > 1 and len(pending) > 1:
        computed = asyncio.run(_gather(pending, limits, workers))
    else:
        computed = [_run_job(job, limits) for job in pending]
    for job, payload, stats in computed:
        results[job] = payload
        if store is not None:
            store.record(job, payload, stats)
    return results


def sorted_multidegrees(r: int, max_tdeg: int) -> List[Tuple[int, ...]]:
    "One weakly decreasing representative per S_r orbit, by total degree."
    return [lam.padded(r) for k in range(max_tdeg + 1) for lam in partitions_of(k, max_parts=r)]


def _series(kind, g: GroupSpec, r: int, policy, limits: Limits, jobs: int, store, max_tdeg):
    if r < 1:
        raise ValueError('a series needs at least one set of variables')
    policy = resolve_policy(g, policy)
    bound = degree_bound(g)
    top = bound if max_tdeg is None else max_tdeg
    work = [ComponentJob(g, r, policy, d, kind) for d in sorted_multidegrees(r, top)]
    guard = None
    if top >= bound:
        guard = ComponentJob(g, r, policy, (top + 1,) + (0,) * (r - 1), HILBERT)
        work.append(guard)
    results = run_jobs(work, limits, jobs, store)

    if guard is not None and results[guard]:
        raise ConsistencyError(f'nonzero harmonics of total degree {top + 1} for {g}, above the bound {bound}')
    entries = {}
    for job in sorted(work, key=lambda job: job.multidegree):
        if job is guard or not results[job]:
            continue
        if sum(job.multidegree) > bound:
            raise ConsistencyError(f'nonzero harmonics at {job.multidegree} for {g}, above the bound {bound}')
        for d in distinct_permutations(job.multidegree):
            entries[tuple(d)] = results[job]
    return GradedSeries(kind, g, r, entries, policy, None if top >= bound else top)


def hilbert_series(g: GroupSpec, r: int, policy='auto', limits: Limits = Limits(), jobs: int = 1,
                   store=None, max_tdeg: Optional[int] = None) -> GradedSeries:
    """Dimensions of every harmonic component, through the degree bound.

    Only weakly decreasing multidegrees are computed; the others follow
    by S_r symmetry.  One extra component just above the bound must
    vanish.

    """
    return _series(HILBERT, g, r, policy, limits, jobs, store, max_tdeg)


def frobenius_series(g: GroupSpec, r: int, policy='auto', limits: Limits = Limits(), jobs: int = 1,
                     store=None, max_tdeg: Optional[int] = None) -> GradedSeries:
    if g.family != 'symmetric':
        raise UnsupportedGroupError(f'Frobenius series are only computed for S_n, not {g}')
    return _series(FROBENIUS, g, r, policy, limits, jobs, store, max_tdeg)


def ideal_spanning_set(gens: Sequence[Poly], r: int, n: int, d) -> List[Poly]:
    "X^B f for every generator f and monomial X^B of complementary multidegree."
    products = []
    for f in gens:
        for e in f.multidegrees():
            rest = tuple(di - ei for di, ei in zip(d, e))
            if min(rest) < 0:
                continue
            part = Poly(r, n, {A: c for A, c in f.terms.items() if A.multidegree() == e}, f.order)
            for B in monomial_basis(r, n, rest):
                products.append(Poly(r, n, {A.plus(B): c for A, c in part.terms.items()}, f.order))
    return products


def ideal_component_rank(gens: Sequence[Poly], r: int, n: int, d, order: int = 1, method='exact') -> int:
    "Dimension of the multidegree-d part of the ideal generated by gens."
    rows = {A: i for i, A in enumerate(monomial_basis(r, n, tuple(d)))}
    entries = {}
    products = ideal_spanning_set(gens, r, n, tuple(d))
    for c, f in enumerate(products):
        for A, coeff in f.with_order(order).terms.items():
            entries[(rows[A], c)] = coeff
    return rank(ExactMatrix(len(rows), len(products), entries, order), method)
