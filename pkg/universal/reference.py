"""Published values the verification harness compares against.

Symmetric functions are given as (partition, coefficient) pairs and
built with symfunc_from_terms, so the tables stay readable.

"""
from sympy import Rational, Symbol, binomial, expand

from symfunc.symfunc import symfunc_from_terms

R = Symbol('r')
N = Symbol('n')

SN_H_EXPANSIONS = {
    1: [((), 1)],
    2: [((), 1), ((1,), 1)],
    3: [((), 1), ((1,), 2), ((2,), 1), ((1, 1), 1), ((3,), 1)],
    4: [((), 1), ((1,), 3), ((2,), 2), ((1, 1), 3), ((3,), 2), ((2, 1), 3), ((1, 1, 1), 1),
        ((4,), 1), ((3, 1), 4), ((5,), 2), ((4, 1), 1), ((6,), 1)],
    5: [((), 1), ((1,), 4), ((2,), 3), ((1, 1), 6), ((3,), 3), ((2, 1), 8), ((1, 1, 1), 4),
        ((4,), 2), ((3, 1), 9), ((2, 2), 2), ((2, 1, 1), 6), ((1, 1, 1, 1), 1),
        ((5,), 3), ((4, 1), 4), ((3, 2), 5), ((3, 1, 1), 10),
        ((6,), 1), ((5, 1), 9), ((4, 2), 1), ((4, 1, 1), 5), ((3, 3), 4),
        ((7,), 2), ((6, 1), 9), ((5, 2), 2), ((5, 1, 1), 1), ((4, 3), 1),
        ((8,), 4), ((7, 1), 4), ((6, 2), 1), ((9,), 3), ((8, 1), 1), ((10,), 1)],
}

# Degree 9 part of the n = 6 expansion, for the record; a negative
# coefficient appears.  Never recomputed by the default suites.
S6_DEGREE_NINE = [((9,), -1), ((8, 1), 18), ((7, 2), 2), ((6, 3), 17), ((5, 4), 7),
                  ((7, 1, 1), 28), ((6, 2, 1), 12), ((5, 3, 1), 5), ((4, 4, 1), 1),
                  ((6, 1, 1, 1), 1)]

# Universal multigraded Frobenius tables: row lam of S_lam(w) -> its
# Schur expansion in the q-alphabet.
SN_FROBENIUS = {
    2: {(2,): [((), 1)],
        (1, 1): [((1,), 1)]},
    3: {(3,): [((), 1)],
        (2, 1): [((2,), 1), ((1,), 1)],
        (1, 1, 1): [((3,), 1), ((1, 1), 1)]},
    4: {(4,): [((), 1)],
        (3, 1): [((3,), 1), ((2,), 1), ((1,), 1)],
        (2, 2): [((4,), 1), ((2, 1), 1), ((2,), 1)],
        (2, 1, 1): [((5,), 1), ((4,), 1), ((3, 1), 1), ((3,), 1), ((2, 1), 1), ((1, 1), 1)],
        (1, 1, 1, 1): [((6,), 1), ((4, 1), 1), ((3, 1), 1), ((1, 1, 1), 1)]},
}

# m_lam(w) coefficients of the n = 3 table, in the h basis of q.
S3_MH_FORM = {
    (3,): [((), 1)],
    (2, 1): [((), 1), ((1,), 1), ((2,), 1)],
    (1, 1, 1): [((), 1), ((1,), 2), ((2,), 1), ((3,), 1), ((1, 1), 1)],
}

MULTIPLICITIES = {
    2: {(2,): 1, (1, 1): R},
    3: {(3,): 1,
        (2, 1): R * (R + 3) / 2,
        (1, 1, 1): R * (R**2 + 6 * R - 1) / 6},
    4: {(4,): 1,
        (3, 1): R * (R**2 + 6 * R + 11) / 6,
        (2, 2): R * (R + 1) * (R**2 + 13 * R + 10) / 24,
        (2, 1, 1): R * (R + 3) * (R**3 + 27 * R**2 + 74 * R - 12) / 120,
        (1, 1, 1, 1): R * (R**5 + 39 * R**4 + 295 * R**3 + 645 * R**2 - 296 * R + 36) / 720},
}


def _c(top, k):
    return binomial(top, k).expand(func=True)


DIMENSIONS = {
    1: 1,
    2: 1 + R,
    3: (1 + R)**2 + _c(R + 1, 2) + _c(R + 2, 3),
    4: ((1 + R)**3 + 2 * _c(R + 1, 2) + 3 * R * _c(R + 1, 2) + 2 * _c(R + 2, 3)
        + 4 * R * _c(R + 2, 3) + _c(R + 3, 4) + R * _c(R + 3, 4) + 2 * _c(R + 4, 5) + _c(R + 5, 6)),
}

# h-coefficients of H^n / h_n[H] up to degree 3, valid for n >= 3.
LOW_DEGREE_HILBERT = {
    (): 1,
    (1,): N - 1,
    (2,): N - 2,
    (1, 1): (N - 1) * (N - 2) / 2,
    (2, 1): (N - 1) * (N - 3),
    (3,): N - 2,
    (1, 1, 1): (N - 1) * (N - 2) * (N - 3) / 6,
}

# n = 4, truncation 4: the approximation loses exactly these table terms.
N4_APPROX_MISSING = {
    (2, 1, 1): [((5,), 1)],
    (1, 1, 1, 1): [((4, 1), 1), ((6,), 1)],
}

CATALAN = {(3, 2): 5, (4, 2): 14, (3, 3): 13}

TWO_SET_DIMENSIONS = {n: (n + 1)**(n - 1) for n in range(2, 6)}
THREE_SET_DIMENSIONS = {n: 2**n * (n + 1)**(n - 2) for n in range(2, 5)}


def sn_h_expansion(n):
    return symfunc_from_terms('h', SN_H_EXPANSIONS[n])


def sn_frobenius_table(n):
    return {lam: symfunc_from_terms('s', row) for lam, row in SN_FROBENIUS[n].items()}


def s3_mh_form():
    return {lam: symfunc_from_terms('h', row) for lam, row in S3_MH_FORM.items()}


def dimension_formula(n):
    return expand(DIMENSIONS[n])


def multiplicity_formula(n, lam):
    return expand(Rational(1) * MULTIPLICITIES[n][tuple(lam)])
