"""Closed-form universal Hilbert series, all h-positive: cyclic groups,
dihedral groups and G(m,1,2).

"""
from groups.groups import GroupSpec
from symfunc.symfunc import SymFunc, h, s


class UnsupportedFamilyError(ValueError):
    pass


def _h_sum(indices, coeff=1):
    return sum((h(k, coeff=coeff) if k else h(coeff=coeff) for k in indices), SymFunc.zero('h'))


def cyclic(m: int) -> SymFunc:
    "C_m: h_0 + h_1 + ... + h_{m-1}."
    return _h_sum(range(m))


def dihedral(m: int) -> SymFunc:
    "I_2(m), m >= 3: 1 + 2h_1 + h_11 + h_2 + 2(h_3 + ... + h_{m-1}) + h_m."
    if m < 3:
        raise UnsupportedFamilyError(f'the dihedral formula needs m >= 3, not {m}')
    return h() + h(1, coeff=2) + h(1, 1) + h(2) + _h_sum(range(3, m), 2) + h(m)


def dihedral_s_form(m: int) -> SymFunc:
    "The same series as 1 + s_11 + s_m + 2(s_1 + ... + s_{m-1})."
    if m < 3:
        raise UnsupportedFamilyError(f'the dihedral formula needs m >= 3, not {m}')
    return s() + s(1, 1) + s(m) + sum((s(k, coeff=2) for k in range(1, m)), SymFunc.zero('s'))


def full_rank_two(m: int) -> SymFunc:
    "G(m,1,2)."
    head = _h_sum(range(m))
    middle = sum((h(m + k, coeff=k + 1) for k in range(m)), SymFunc.zero('h'))
    tail = sum((h(2 * m - 1 + k, coeff=m - k) for k in range(1, m)), SymFunc.zero('h'))
    return head * head + middle + tail


def closed_form(g: GroupSpec) -> SymFunc:
    if g.n == 1 and g.p == 1:
        return cyclic(g.m)
    if g.n == 2 and g.p == 1:
        return full_rank_two(g.m)
    if g.family == 'dihedral' and g.m >= 3:
        return dihedral(g.m)
    raise UnsupportedFamilyError(f'no closed form for {g.canonical_name}')


def s_form(g: GroupSpec):
    "The Schur form when one is published, else None."
    if g.family == 'dihedral' and g.m >= 3:
        return dihedral_s_form(g.m)
    return None
