"""The verification suites.

Each Check computes an (expected, computed) pair; equal values pass.
Required checks that disagree fail the suite, optional ones and
findings only warn.  Series are computed once per suite run and shared
between checks through a Context.

"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from functools import partial
from typing import Callable, Dict, List, Optional, Tuple

from sympy import expand

from groups.groups import GroupSpec, GroupTooLargeError, degree_bound, parse_group, poincare_polynomial
from groups.invariants import polarized_generators
from harmonics.engine import (ENGINE_VERSION, ConsistencyError, Limits, ResourceCapError, frobenius_series,
                              harmonic_component, hilbert_series, ideal_component_rank, ideal_spanning_set,
                              sorted_multidegrees)
from harmonics.poly import monomial_count, scalar_product
from symfunc.partitions import Partition, partitions_of
from symfunc.qanalog import q_factorial, qbinomial
from symfunc.symfunc import SymFunc, change_basis, kostka, symfunc_from_terms
from symfunc.sympoly import evaluate_schur_expansion
from universal import reference
from universal.approx import (agrees_to_degree, coinvariant_ring_series, low_degree_approx,
                              low_degree_hilbert_symbolic, missing_terms)
from universal.closed_forms import closed_form, dihedral_s_form
from universal.extract import UniversalityError, dimension_polynomial, extract_universal, h_expansion
from universal.frobenius import catalan_check, mh_form, multiplicity_polynomials, universal_frobenius
from universal.report import (DERIVED, FAIL, PASS, PUBLISHED, SKIP, TRIVIAL, WARN, CheckResult,
                              VerificationReport)

logger = logging.getLogger('universal.checks')

QUICK = 'quick'
FULL = 'full'
SUITES = (QUICK, FULL)
BOTH = (QUICK, FULL)


def symmetric(n):
    return GroupSpec(1, 1, n)


class Context:
    "Series shared between the checks of one run."

    def __init__(self, limits: Limits = Limits(), jobs: int = 1, store=None):
        self.limits = limits
        self.jobs = jobs
        self.store = store
        self._hilbert = {}
        self._frobenius = {}
        self._universal = {}
        self._tables = {}


    def hilbert(self, g: GroupSpec, r: int, policy='auto'):
        key = (g, r, policy)
        if key not in self._hilbert:
            self._hilbert[key] = hilbert_series(g, r, policy, self.limits, self.jobs, self.store)
        return self._hilbert[key]


    def frobenius(self, n: int, r: int):
        if (n, r) not in self._frobenius:
            self._frobenius[(n, r)] = frobenius_series(symmetric(n), r, 'auto', self.limits, self.jobs,
                                                       self.store)
        return self._frobenius[(n, r)]


    def universal(self, g: GroupSpec):
        if g not in self._universal:
            lower = self.hilbert(g, g.n - 1) if g.n > 1 else None
            self._universal[g] = extract_universal(g, self.hilbert(g, g.n), lower)
        return self._universal[g]


    def table(self, n: int):
        if n not in self._tables:
            self._tables[n] = universal_frobenius(n, self.frobenius(n, n), self.frobenius(n, n - 1))
        return self._tables[n]


@dataclass(frozen=True)
class Check:
    id: str
    description: str
    provenance: str
    compute: Callable[[Context], Tuple[object, object]]
    required: bool = True
    suites: Tuple[str, ...] = BOTH
    stretch: bool = False
    finding: bool = False
    record_only: bool = False
    note: str = ''


def _coefficients(poly) -> Dict[int, int]:
    "A univariate sympy Poly as degree -> integer coefficient."
    return {k: int(c) for (k,), c in sorted(poly.as_dict().items())}


def _h_text(f: SymFunc) -> str:
    return str(change_basis(f, 'h'))


def _rows_text(rows) -> Dict[str, str]:
    return {str(Partition(lam)): str(change_basis(row, 's')) for lam, row in rows}


# Computations.  Each returns (expected, computed).

def coinvariant_dimension(name, context):
    g = parse_group(name)
    series = context.hilbert(g, 1)
    return ((_coefficients(poincare_polynomial(g)), g.order),
            (_coefficients(series.poincare()), series.total_dimension()))


def set_dimension(n, r, expected, context):
    return expected, context.hilbert(symmetric(n), r).total_dimension()


def two_sets_against_expansion(n, context):
    expected = evaluate_schur_expansion(reference.sn_h_expansion(n), 2)
    series = context.hilbert(symmetric(n), 2)
    return ((str(expected.as_expr()), reference.TWO_SET_DIMENSIONS[n]),
            (str(series.as_sympoly().as_expr()), series.total_dimension()))


def sn_expansion(n, context):
    u = context.universal(symmetric(n))
    return _h_text(reference.sn_h_expansion(n)), str(SymFunc('h', h_expansion(u)))


def sn_h_positivity(n, context):
    coefficients = h_expansion(context.universal(symmetric(n)))
    weights = {}
    for mu, c in coefficients.items():
        weights[mu.weight] = weights.get(mu.weight, 0) + c
    return ((True, _coefficients(q_factorial(n))),
            (all(c >= 0 for c in coefficients.values()), dict(sorted(weights.items()))))


def frobenius_table(n, context):
    return (_rows_text(reference.sn_frobenius_table(n).items()),
            _rows_text(context.table(n).rows()))


def s3_mh_form(context):
    expected = {str(Partition(nu)): _h_text(f) for nu, f in reference.s3_mh_form().items()}
    computed = {str(nu): _h_text(f) for nu, f in mh_form(context.table(3)).items()}
    return expected, computed


def one_variable_frobenius(n, context):
    series = context.frobenius(n, 1)
    expected, computed = {}, {}
    for nu in partitions_of(n):
        expected[str(nu)] = _coefficients(qbinomial(n, nu))
        by_degree = {}
        for lam in partitions_of(n):
            k = kostka(lam, nu)
            for (degree,), mult in series.entries.items():
                value = k * mult.get(lam, 0)
                if value:
                    by_degree[degree] = by_degree.get(degree, 0) + value
        computed[str(nu)] = dict(sorted(by_degree.items()))
    return expected, computed


def sn_dimension_polynomial(n, context):
    u = context.universal(symmetric(n))
    return (str(reference.dimension_formula(n)),
            str(expand(dimension_polynomial(u, reference.R).as_expr())))


def sn_multiplicities(n, context):
    expected = {str(Partition(lam)): str(reference.multiplicity_formula(n, lam)) for lam in partitions_of(n)}
    computed = {str(lam): str(expand(poly.as_expr()))
                for lam, poly in multiplicity_polynomials(context.table(n)).items()}
    return expected, computed


def catalan(n, r, context):
    return reference.CATALAN[(n, r)], catalan_check(context.table(n), r)


def family_closed_form(name, context):
    g = parse_group(name)
    return _h_text(closed_form(g)), str(SymFunc('h', h_expansion(context.universal(g))))


def dihedral_schur_form(m, context):
    g = GroupSpec(m, m, 2)
    return str(dihedral_s_form(m)), str(context.universal(g).as_symfunc())


def dihedral_three_is_s3(context):
    return _h_text(reference.sn_h_expansion(3)), _h_text(closed_form(GroupSpec(3, 3, 2)))


def orthogonality(name, r, context):
    g = parse_group(name)
    gens = polarized_generators(g, r)
    failures = []
    for d in sorted_multidegrees(r, degree_bound(g)):
        component = harmonic_component(g, r, d, limits=context.limits)
        products = ideal_spanning_set(gens, r, g.n, d)
        if any(scalar_product(f, h) for h in component.basis() for f in products):
            failures.append(d)
        elif ideal_component_rank(gens, r, g.n, d, g.m, context.limits.elimination) + component.dimension \
                != monomial_count(g.n, d):
            failures.append(d)
    return [], failures


def restriction(name, r, context):
    g = parse_group(name)
    return context.hilbert(g, r - 1).entries, context.hilbert(g, r).restrict().entries


def set_symmetry(name, r, context):
    return True, context.hilbert(parse_group(name), r).is_symmetric()


def frobenius_hilbert(n, r, context):
    return context.hilbert(symmetric(n), r).entries, context.frobenius(n, r).to_hilbert().entries


def policy_agreement(name, r, context):
    g = parse_group(name)
    return context.hilbert(g, r, 'polarized').entries, context.hilbert(g, r, 'reynolds').entries


def vanishing(name, r, context):
    g = parse_group(name)
    bound = degree_bound(g)
    series = hilbert_series(g, r, limits=context.limits, jobs=context.jobs, store=context.store,
                            max_tdeg=bound + 2)
    return bound, max(sum(d) for d in series.entries)


def approximation_matches(n, context):
    approximation = low_degree_approx(n, n)
    return True, agrees_to_degree(approximation, dict(context.table(n).rows()), n)


def approximation_formula(context):
    expected = {str(Partition(mu)): str(expand(value)) for mu, value in reference.LOW_DEGREE_HILBERT.items()}
    computed = {str(mu): str(expand(value)) for mu, value in low_degree_hilbert_symbolic(3).items()}
    return expected, computed


def approximation_missing(context):
    expected = {str(Partition(lam)): str(symfunc_from_terms('s', terms))
                for lam, terms in reference.N4_APPROX_MISSING.items()}
    missing = missing_terms(low_degree_approx(4, 4), reference.sn_frobenius_table(4))
    return expected, {str(lam): str(f) for lam, f in missing.items()}


def free_module(n, context):
    series = coinvariant_ring_series(n, 1, n)
    expected = {str(lam): str(evaluate_schur_expansion(row, 1).as_expr()) for lam, row in context.table(n).rows()}
    computed = {str(lam): str(poly.as_expr()) for lam, poly in series.quotient.items()}
    return expected, computed


def cyclic_limit(m, context):
    printed = sum((SymFunc.basis_element('h', (j,) if j else ()) for j in range(m + 1)), SymFunc.zero('h'))
    return _h_text(printed), str(SymFunc('h', h_expansion(context.universal(GroupSpec(m, 1, 1)))))


def printed_degree_bound(n, r, context):
    series = context.hilbert(symmetric(n), r)
    return n * (r * n + r - 2) // 2, max(sum(d) for d in series.entries)


def positivity_scope(name, context):
    g = parse_group(name)
    lower = context.hilbert(g, g.n - 1)
    u = extract_universal(g, context.hilbert(g, g.n), lower, assert_positive=False)
    return True, u.is_schur_positive()


def record_only(context):
    return str(symfunc_from_terms('h', reference.S6_DEGREE_NINE)), None


def _group_checks():
    checks = []
    for names, suites in [(['S2', 'S3', 'C2', 'C3', 'C4', 'I2(3)', 'I2(4)', 'B2'], BOTH),
                          (['S4', 'C5', 'C6', 'I2(5)', 'I2(6)', 'G(3,1,2)'], (FULL,))]:
        for name in names:
            checks.append(Check(f'coinvariants-{name}', f'one set of variables for {name}: Poincare polynomial and |W|',
                                PUBLISHED, partial(coinvariant_dimension, name), suites=suites))
    for n, suites in [(2, BOTH), (3, BOTH), (4, (FULL,))]:
        checks.append(Check(f'two-sets-S{n}', f'dimension for S{n} in two sets is (n+1)^(n-1)', PUBLISHED,
                            partial(set_dimension, n, 2, reference.TWO_SET_DIMENSIONS[n]), suites=suites))
    checks.append(Check('three-sets-S3', 'dimension for S3 in three sets is 2^n (n+1)^(n-2)', PUBLISHED,
                        partial(set_dimension, 3, 3, reference.THREE_SET_DIMENSIONS[3])))
    checks.append(Check('three-sets-S4', 'dimension for S4 in three sets is 2^n (n+1)^(n-2)', PUBLISHED,
                        partial(set_dimension, 4, 3, reference.THREE_SET_DIMENSIONS[4]), required=False,
                        suites=(FULL,), note='conjectural value'))
    checks.append(Check('three-sets-S4-quick', 'dimension for S4 in three sets is 2^n (n+1)^(n-2)', PUBLISHED,
                        partial(set_dimension, 4, 3, reference.THREE_SET_DIMENSIONS[4]), required=False,
                        suites=(QUICK,), stretch=True, note='conjectural value'))
    checks.append(Check('two-sets-S5', 'S5 in two sets matches the published expansion (1296)', PUBLISHED,
                        partial(two_sets_against_expansion, 5), required=False, stretch=True))
    return checks


def _universal_checks():
    checks = []
    for n, suites in [(2, BOTH), (3, BOTH), (4, (FULL,))]:
        checks.append(Check(f'h-expansion-S{n}', f'universal h-expansion of S{n}', PUBLISHED,
                            partial(sn_expansion, n), suites=suites))
        checks.append(Check(f'h-positivity-S{n}', f'h-coefficients of S{n} are nonnegative and sum to [n]!_t',
                            DERIVED, partial(sn_h_positivity, n), suites=suites))
        checks.append(Check(f'dimension-polynomial-S{n}', f'dimension of S{n} harmonics as a polynomial in r',
                            PUBLISHED, partial(sn_dimension_polynomial, n), suites=suites))
    for n, suites in [(2, BOTH), (3, BOTH), (4, (FULL,))]:
        checks.append(Check(f'one-variable-frobenius-S{n}', f'S{n} in one set: m_nu coefficients are q-multinomials',
                            PUBLISHED, partial(one_variable_frobenius, n), suites=suites))
    for n, suites in [(3, BOTH), (4, (FULL,))]:
        checks.append(Check(f'frobenius-table-S{n}', f'universal Frobenius table of S{n}', PUBLISHED,
                            partial(frobenius_table, n), suites=suites))
        checks.append(Check(f'multiplicities-S{n}', f'multiplicities of S{n} irreducibles at 1^r', PUBLISHED,
                            partial(sn_multiplicities, n), suites=suites))
    checks.append(Check('mh-form-S3', 'm_lam(w) form of the S3 table', PUBLISHED, s3_mh_form))
    for n, r, suites in [(3, 2, BOTH), (3, 3, BOTH), (4, 2, (FULL,))]:
        checks.append(Check(f'catalan-S{n}-r{r}', f'alternating row of S{n} at r = {r}', DERIVED,
                            partial(catalan, n, r), suites=suites))
    return checks


def _closed_form_checks():
    checks = []
    for names, suites in [(['C2', 'C3', 'C4', 'I2(3)', 'I2(4)', 'B2'], BOTH),
                          (['C5', 'C6', 'I2(5)', 'I2(6)', 'G(3,1,2)'], (FULL,))]:
        for name in names:
            checks.append(Check(f'closed-form-{name}', f'closed form of {name} equals the engine', PUBLISHED,
                                partial(family_closed_form, name), suites=suites))
    for m, suites in [(3, BOTH), (4, BOTH), (5, (FULL,)), (6, (FULL,))]:
        checks.append(Check(f'dihedral-s-form-I2({m})', f'Schur form of I2({m})', PUBLISHED,
                            partial(dihedral_schur_form, m), suites=suites))
    checks.append(Check('dihedral-three-is-S3', 'closed form of I2(3) equals the S3 expansion', TRIVIAL,
                        dihedral_three_is_s3))
    return checks


def _structural_checks():
    checks = []
    for name, r, suites in [('S3', 1, BOTH), ('S3', 2, BOTH), ('I2(4)', 2, (FULL,))]:
        checks.append(Check(f'orthogonality-{name}-r{r}', f'harmonics of {name} are orthogonal to the ideal',
                            DERIVED, partial(orthogonality, name, r), suites=suites))
    for name, r, suites in [('S3', 3, BOTH), ('I2(4)', 2, BOTH), ('S4', 4, (FULL,))]:
        checks.append(Check(f'restriction-{name}-r{r}', f'{name}: dropping a set of variables', DERIVED,
                            partial(restriction, name, r), suites=suites))
        checks.append(Check(f'symmetry-{name}-r{r}', f'{name}: series symmetric in the sets', DERIVED,
                            partial(set_symmetry, name, r), suites=suites))
    checks.append(Check('frobenius-hilbert-S3-r2', 'Frobenius series of S3 gives the Hilbert series', DERIVED,
                        partial(frobenius_hilbert, 3, 2)))
    for name, r, suites in [('S3', 2, BOTH), ('I2(4)', 2, BOTH), ('B2', 2, (FULL,))]:
        checks.append(Check(f'policy-agreement-{name}-r{r}', f'{name}: polarized and Reynolds generators agree',
                            DERIVED, partial(policy_agreement, name, r), suites=suites))
    for name, r in [('S3', 2), ('I2(4)', 2)]:
        checks.append(Check(f'vanishing-{name}-r{r}', f'{name}: nothing above the Jacobian degree', DERIVED,
                            partial(vanishing, name, r)))
    return checks


def _approximation_checks():
    return [
        Check('approximation-S3', 'approximation matches S3 in q-degree <= 3', PUBLISHED,
              partial(approximation_matches, 3), required=False, finding=True),
        Check('approximation-S4', 'approximation matches S4 in q-degree <= 4', PUBLISHED,
              partial(approximation_matches, 4), required=False, finding=True, suites=(FULL,)),
        Check('approximation-hilbert-formula', 'coefficients of H^n/h_n[H] as polynomials in n', PUBLISHED,
              approximation_formula),
        Check('approximation-missing-S4', 'terms of the S4 table missed by the approximation', PUBLISHED,
              approximation_missing, suites=(FULL,)),
        Check('free-module-S3', 'coinvariant quotient in one set equals the S3 table', PUBLISHED,
              partial(free_module, 3)),
    ]


def _findings():
    return [
        Check('finding-cyclic-limit', 'cyclic formula with the printed upper limit', PUBLISHED,
              partial(cyclic_limit, 3), required=False, finding=True,
              note='implemented with upper limit m - 1'),
        Check('finding-degree-bound', 'printed r-dependent degree bound against the largest degree found',
              PUBLISHED, partial(printed_degree_bound, 3, 2), required=False, finding=True,
              note='the engine uses the Jacobian degree'),
        Check('finding-positivity-G(4,2,2)', 'Schur positivity outside the proven families', DERIVED,
              partial(positivity_scope, 'G(4,2,2)'), required=False, finding=True,
              note='reported, not asserted'),
        Check('finding-positivity-D3', 'Schur positivity outside the proven families', DERIVED,
              partial(positivity_scope, 'D3'), required=False, finding=True, suites=(FULL,),
              note='reported, not asserted'),
        Check('record-S6-degree-nine', 'degree 9 part of the S6 h-expansion', PUBLISHED, record_only,
              required=False, record_only=True, note='not desk-scale; recorded only'),
    ]


def all_checks() -> List[Check]:
    return (_group_checks() + _universal_checks() + _closed_form_checks() + _structural_checks()
            + _approximation_checks() + _findings())


def select(suite: str, stretch: bool = False) -> List[Check]:
    if suite not in SUITES:
        raise ValueError(f'unknown suite {suite!r}')
    return [check for check in all_checks() if suite in check.suites and (stretch or not check.stretch)]


def run_check(check: Check, context: Context) -> CheckResult:
    start = time.perf_counter()
    expected = computed = None
    note = check.note
    try:
        expected, computed = check.compute(context)
    except (ResourceCapError, GroupTooLargeError) as error:
        status = FAIL if check.required else WARN
        note = f'resource cap: {error}'
    except (UniversalityError, ConsistencyError) as error:
        status = FAIL if check.required else WARN
        note = str(error)
    else:
        if check.record_only:
            status = SKIP
        elif expected == computed:
            status = PASS
        elif check.finding or not check.required:
            status = WARN
        else:
            status = FAIL
    elapsed = time.perf_counter() - start
    logger.info('%s %s in %.2fs', check.id, status, elapsed)
    return CheckResult(check.id, check.description, expected, computed, status, check.provenance,
                       check.required, note, elapsed)


def run_suite(suite: str, context: Optional[Context] = None, stretch: bool = False,
              version_id: str = 'unknown', checks: Optional[List[Check]] = None) -> VerificationReport:
    context = context or Context()
    report = VerificationReport(suite, ENGINE_VERSION, version_id)
    for check in checks if checks is not None else select(suite, stretch):
        report.results.append(run_check(check, context))
    return report
