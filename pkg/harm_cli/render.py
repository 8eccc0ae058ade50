"""Text, JSON and LaTeX output for the management commands.

Each *_context function builds the template context for one command;
its 'document' entry is what the JSON format prints.

"""
import json

from django.template.loader import render_to_string
from sympy.polys.domains import QQ

from groups.groups import GroupSpec
from harmonics.series import GradedSeries
from symfunc.partitions import Partition, partitions_of
from symfunc.symfunc import SymFunc, change_basis, principal_specialization
from symfunc.sympoly import schur_expand

FORMATS = ('text', 'json', 'latex')

_EXTENSIONS = {'text': 'txt', 'latex': 'tex'}


def coefficient_value(coeff):
    "An int when integral, otherwise the fraction as a string."
    coeff = QQ.convert(coeff)
    if coeff.denominator == 1:
        return int(coeff.numerator)
    return f'{coeff.numerator}/{coeff.denominator}'


def term_list(f: SymFunc):
    return [{'mu': list(mu), 'coeff': coefficient_value(c)} for mu, c in f.items()]


def group_document(g: GroupSpec):
    return {'m': g.m, 'p': g.p, 'n': g.n}


def _series_rows(series: GradedSeries):
    return [(d, series.dimension(d)) for d in series.multidegrees()]


def hilbert_context(series: GradedSeries):
    hilbert = series.to_hilbert()
    schur = schur_expand(hilbert.as_sympoly())
    hform = change_basis(schur, 'h')
    rows = _series_rows(hilbert)
    return {
        'group': series.group,
        'sets': series.r,
        'policy': series.policy,
        'max_tdeg': series.max_tdeg,
        'rows': rows,
        'total': hilbert.total_dimension(),
        'schur': schur,
        'hform': hform,
        'document': {
            'group': group_document(series.group),
            'sets': series.r,
            'policy': series.policy,
            'hilbert': [{'degree': list(d), 'dim': dim} for d, dim in rows],
            'schur': term_list(schur),
            'h': term_list(hform),
        },
    }


def universal_context(series: GradedSeries, expansion, h_terms, dimension):
    context = hilbert_context(series)
    schur = expansion.as_symfunc()
    hform = SymFunc('h', h_terms)
    context.update({
        'schur': schur,
        'hform': hform,
        'coefficients': list(schur.items()),
        'dimension': dimension.as_expr(),
        'certified': expansion.certified,
        'certified_rank': expansion.certified_rank,
        'one_variable': expansion.one_variable().as_expr(),
    })
    context['document'].update({
        'schur': term_list(schur),
        'h': term_list(hform),
        'dimension_polynomial': str(dimension.as_expr()),
        'certified': expansion.certified,
    })
    return context


def _multiplicities(entry):
    return SymFunc('s', {Partition(lam): mult for lam, mult in entry.items()})


def frobenius_context(series: GradedSeries, table=None, mh=None, positivity=None):
    rows = [(d, _multiplicities(series.entries[d])) for d in series.multidegrees()]
    universal_rows = table.rows() if table is not None else []
    context = {
        'group': series.group,
        'sets': series.r,
        'policy': series.policy,
        'max_tdeg': series.max_tdeg,
        'rows': rows,
        'table': universal_rows,
        'certified': table.certified if table is not None else False,
        'mh': list((mh or {}).items()),
        'positivity': positivity or {},
        'document': {
            'group': group_document(series.group),
            'sets': series.r,
            'policy': series.policy,
            'frobenius': [{'degree': list(d), 'multiplicities': term_list(row)} for d, row in rows],
        },
    }
    if table is not None:
        context['document']['universal'] = [{'lam': list(lam), 'schur': term_list(row)}
                                             for lam, row in universal_rows]
        context['document']['certified'] = table.certified
    if mh is not None:
        context['document']['mh'] = [{'nu': list(nu), 'h': term_list(f)} for nu, f in context['mh']]
    if positivity:
        context['document']['h_positive'] = [{'lam': list(lam), 'positive': ok}
                                             for lam, ok in positivity.items()]
    return context


def closed_form_context(g: GroupSpec, hform: SymFunc, sform=None):
    context = {
        'group': g,
        'hform': hform,
        'sform': sform,
        'one_variable': principal_specialization(hform).as_expr(),
        'document': {
            'group': group_document(g),
            'h': term_list(hform),
            'schur': term_list(sform if sform is not None else change_basis(hform, 's')),
        },
    }
    return context


def approx_context(approximation, coinvariants=None):
    n = approximation.n
    monomial_rows = [(lam, change_basis(approximation.monomial_form[lam], 'h')) for lam in partitions_of(n)]
    schur_rows = [(lam, approximation.schur_form[lam]) for lam in partitions_of(n)]
    context = {
        'n': n,
        'degree': approximation.bound,
        'monomial_rows': monomial_rows,
        'schur_rows': schur_rows,
        'coinvariants': coinvariants,
        'document': {
            'n': n,
            'degree': approximation.bound,
            'monomial': [{'lam': list(lam), 'h': term_list(f)} for lam, f in monomial_rows],
            'schur': [{'lam': list(lam), 's': term_list(f)} for lam, f in schur_rows],
        },
    }
    if coinvariants is not None:
        dimensions = coinvariants.dimensions()
        context['dimensions'] = sorted(dimensions.items())
        context['document']['sets'] = coinvariants.r
        context['document']['dimensions'] = [{'degree': k, 'dim': v} for k, v in sorted(dimensions.items())]
    return context


def render(template: str, context, fmt: str) -> str:
    if fmt == 'json':
        return json.dumps(context['document'], sort_keys=True, indent=2)
    if fmt not in _EXTENSIONS:
        raise ValueError(f'unknown format {fmt!r}')
    return render_to_string(f'harm_cli/{template}.{_EXTENSIONS[fmt]}', context, using='jinja2')
