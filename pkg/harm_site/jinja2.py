from jinja2 import Environment
from sympy import latex

from symfunc.symfunc import partition_subscript, render_latex, render_text


def monomial_text(d):
    "q1^2 q3 for the multidegree (2, 0, 1)."
    factors = [f'q{i}' if k == 1 else f'q{i}^{k}' for i, k in enumerate(d, start=1) if k]
    return ' '.join(factors) or '1'


def monomial_tex(d):
    factors = [f'q_{{{i}}}' if k == 1 else f'q_{{{i}}}^{{{k}}}' for i, k in enumerate(d, start=1) if k]
    return ''.join(factors) or '1'


def _series(rows, monomial, times):
    pieces = []
    for d, dim in rows:
        if not any(d):
            pieces.append(str(dim))
        elif dim == 1:
            pieces.append(monomial(d))
        else:
            pieces.append(f'{dim}{times}{monomial(d)}')
    return ' + '.join(pieces) or '0'


def series_text(rows):
    "(multidegree, dim) rows as 1 + 2 q1 + 2 q2 + ..."
    return _series(rows, monomial_text, ' ')


def series_tex(rows):
    return _series(rows, monomial_tex, '\\,')


def symfunc_text(f, name=None):
    return render_text(f, name)


def symfunc_tex(f, name=None):
    return render_latex(f, name)


def partition_text(lam):
    return '[' + ','.join(str(part) for part in lam) + ']'


def environment(**options):
    env = Environment(**options)
    env.filters.update({
        'partition_sub': partition_subscript,
        'partition_text': partition_text,
        'monomial_text': monomial_text,
        'monomial_tex': monomial_tex,
        'series_text': series_text,
        'series_tex': series_tex,
        'symfunc_text': symfunc_text,
        'symfunc_tex': symfunc_tex,
        'sympy_tex': latex,
    })
    return env
