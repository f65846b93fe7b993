"""Closed forms against naive literal evaluation and against the DP oracle.

The implementations update binomial factors incrementally inside their
k-loops; the naive oracles here evaluate every binomial and factorial from
scratch with math.comb / math.factorial, so a slip in either route breaks
the comparison.
"""

from fractions import Fraction
from math import comb
from math import factorial as mfact

import pytest

from rwl import formulas
from rwl.formulas import FormulaId, evaluate
from rwl.graphs import grid_graph, king_graph
from rwl.walks import count_labelings_dp, count_labelings_started_at


def naive_grid2(n):
    s = sum(
        Fraction(n * comb(2 * (n - 1), 2 * k) + comb(2 * n - 1, 2 * k), comb(n - 1, k))
        for k in range(n)
    )
    return 2 ** (n - 1) * mfact(n - 1) * s


def naive_a087923(n):
    s = sum(
        Fraction(
            comb(2 * (n - 1), 2 * k) * (2 * (k + 1) * (n - k) - 1),
            comb(n - 1, k) * (2 * k + 1),
        )
        for k in range(n)
    )
    return 2 ** n * mfact(n - 1) * s


def naive_a087547_sum(n):
    return mfact(n - 1) * sum(
        Fraction(comb(2 * n - 1, 2 * k), comb(n - 1, k)) for k in range(n)
    )


def naive_bala_lhs(n):
    return sum(
        Fraction(2 ** k * comb(n + k, k), (2 * k + 1) * comb(2 * k, k)) for k in range(n)
    )


def naive_bala_rhs(n):
    return Fraction(comb(2 * n, n), 2 ** n) * sum(
        Fraction(2 ** k, (2 * k + 1) * comb(2 * k, k)) for k in range(n)
    )


def naive_bala_product(n):
    return Fraction(mfact(2 * n), mfact(n) * 2 ** n) * sum(
        Fraction(2 ** k * mfact(k) ** 2, mfact(2 * k + 1)) for k in range(n)
    )


def naive_bala_factorial(n):
    return sum(
        Fraction(2 ** (k - 1) * mfact(k - 1) * mfact(n + k - 1), mfact(2 * k - 1))
        for k in range(1, n + 1)
    )


def naive_a182525(n):
    return mfact(n) * sum(Fraction(comb(2 * n, 2 * k), comb(n, k)) for k in range(n + 1))


def test_incremental_sums_match_naive_evaluation():
    for n in range(1, 61):
        assert formulas.grid2_labelings(n) == naive_grid2(n)
        assert formulas.a087923(n) == naive_a087923(n)
        assert formulas.a087547_from_sum(n) == naive_a087547_sum(n)
        assert formulas.bala_identity_lhs(n) == naive_bala_lhs(n)
        assert formulas.bala_identity_rhs(n) == naive_bala_rhs(n)
        assert formulas.a087547_bala_product(n) == naive_bala_product(n)
        assert formulas.a087547_bala_factorial(n) == naive_bala_factorial(n)
        assert formulas.a182525(n) == naive_a182525(n)


def test_elementary_family_counts():
    assert formulas.complete_labelings(3) == 6
    assert formulas.path_labelings(7) == 64
    assert formulas.cycle_labelings(4) == 16


def test_king2_spot_values():
    assert [formulas.king2_labelings(n) for n in (1, 2, 3)] == [2, 24, 480]
    assert [formulas.king2_first_column_starts(n) for n in (1, 2, 3)] == [2, 12, 120]


def test_grid2_spot_values():
    assert [formulas.grid2_labelings(n) for n in (1, 2, 3, 4)] == [2, 16, 208, 3584]
    assert [formulas.a087923(n) for n in (1, 2, 3)] == [2, 16, 208]


def test_a087547_spot_values():
    assert [formulas.a087547_from_recursion(n) for n in (1, 2, 3, 4, 5)] == [1, 4, 22, 160, 1464]
    assert [formulas.a087547_from_sum(n) for n in (1, 2, 3, 4)] == [1, 4, 22, 160]


def test_bala_identity_spot_values():
    assert formulas.bala_identity_lhs(1) == 1
    assert formulas.bala_identity_rhs(1) == 1
    assert formulas.bala_identity_lhs(2) == 2
    assert formulas.bala_identity_rhs(2) == 2
    assert formulas.bala_identity_lhs(3) == Fraction(11, 3)
    assert formulas.bala_identity_rhs(3) == Fraction(11, 3)


def test_bala_forms_spot_values():
    for n, want in ((1, 1), (2, 4), (4, 160)):
        assert formulas.a087547_bala_product(n) == want
        assert formulas.a087547_bala_factorial(n) == want


def test_a182525_spot_values():
    assert [formulas.a182525(n) for n in (0, 1, 2, 3)] == [1, 2, 10, 72]


def test_identity_rewritings():
    # the two published A087547 forms are the identity sides scaled by n!
    for n in range(1, 61):
        n_fact = formulas.factorial(n)
        assert n_fact * formulas.bala_identity_lhs(n) == formulas.a087547_bala_factorial(n)
        assert n_fact * formulas.bala_identity_rhs(n) == formulas.a087547_bala_product(n)


def test_bala_product_equals_sum_form_to_500():
    for n in range(1, 501):
        assert formulas.a087547_bala_product(n) == formulas.a087547_from_sum(n)


def test_closed_forms_match_dp_small():
    for n in range(1, 6):
        assert formulas.king2_labelings(n) == count_labelings_dp(king_graph(2, n))
        assert formulas.grid2_labelings(n) == count_labelings_dp(grid_graph(2, n))


def test_king2_first_column_matches_dp():
    # first column of the 2 x n board holds vertices 0 and n (row-major)
    for n in range(1, 6):
        g = king_graph(2, n)
        started = count_labelings_started_at(g, 0) + count_labelings_started_at(g, n)
        assert formulas.king2_first_column_starts(n) == started


def test_domain_validation():
    with pytest.raises(ValueError):
        formulas.cycle_labelings(2)
    with pytest.raises(ValueError):
        formulas.complete_labelings(0)
    with pytest.raises(ValueError):
        formulas.grid2_labelings(0)
    with pytest.raises(ValueError):
        formulas.a182525(-1)


def test_integer_formulas_return_ints():
    for n in range(1, 40):
        for fn in (
            formulas.grid2_labelings,
            formulas.a087923,
            formulas.a087547_from_sum,
            formulas.a182525,
        ):
            assert isinstance(fn(n), int)


def test_formula_id_dispatch():
    direct = {
        FormulaId.COMPLETE: formulas.complete_labelings,
        FormulaId.PATH: formulas.path_labelings,
        FormulaId.CYCLE: formulas.cycle_labelings,
        FormulaId.KING2: formulas.king2_labelings,
        FormulaId.KING2_FIRST_COLUMN: formulas.king2_first_column_starts,
        FormulaId.GRID2: formulas.grid2_labelings,
        FormulaId.GRID2_A087923: formulas.a087923,
        FormulaId.A087547_SUM: formulas.a087547_from_sum,
        FormulaId.A087547_RECURSION: formulas.a087547_from_recursion,
        FormulaId.BALA_LHS: formulas.bala_identity_lhs,
        FormulaId.BALA_RHS: formulas.bala_identity_rhs,
        FormulaId.BALA_PRODUCT: formulas.a087547_bala_product,
        FormulaId.BALA_FACTORIAL: formulas.a087547_bala_factorial,
        FormulaId.A182525: formulas.a182525,
    }
    assert set(direct) == set(FormulaId)
    for fid, fn in direct.items():
        assert evaluate(fid, 5) == fn(5)
