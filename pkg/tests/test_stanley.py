from itertools import product

import pytest

from jacklr.algebra import RatFunc1, UniPoly
from jacklr.horn import classify_cases, enumerate_minimal
from jacklr.jack import ALPHA, g_coeff, oracle_c, transpose_check
from jacklr.partitions import Partition, conjugate
from jacklr.stanley import (
    PRINTED_ASSIGNMENTS,
    DivisionNumbers,
    FormulaError,
    c_from_assignment,
    division_numbers,
    evaluate_d,
    evaluate_d_anchors,
    evaluate_d_boxes,
    g_from_assignment,
    hook_assignment,
    minimal_path_check,
    parse_grid,
    reduce_3to2,
    render_assignment,
    stanley_g_product,
    table_row,
    verify_triple,
)

A = UniPoly.gen()
PIERI = ((4, 2, 2), (3, 2, 1), (1, 1))
BIG = ((8, 7, 4), (6, 3), (5, 5))


def test_division_numbers_examples():
    dn = division_numbers(*PIERI, 4)
    assert dn.rows() == {"lambda": [[0, 0, 0], [1, 0], [0]], "mu": [[0, 0], [0]], "nu": [[0, 0], [1]]}
    dn = division_numbers(*BIG, 4)
    assert dn.rows() == {"lambda": [[3, 2, 0], [1, 2], [3]], "mu": [[2, 3], [2]], "nu": [[0, 0], [4]]}
    assert dn.balance() == (11, 11)


def test_identity_triples():
    for lam in [(3,), (2, 1), (3, 2), (4, 2, 1), (2, 2, 2)]:
        for case in classify_cases(lam, lam, ()):
            dn = division_numbers(lam, lam, (), case)
            assert evaluate_d(lam, lam, (), dn) == 1
            if case != 4:
                assert dn == DivisionNumbers.zero()
            else:
                # row 4 flips as many λ boxes as μ boxes; the ratios cancel
                assert dn.is_balanced() and dn.nu == (0, 0, 0)


def test_bad_convention_rejected():
    with pytest.raises(ValueError):
        division_numbers(*PIERI, 4, convention="sideways")


def test_out_of_range_is_an_error():
    # a triple whose canonical row produces a count outside its strip
    with pytest.raises(FormulaError):
        division_numbers((3, 3, 2), (3, 1), (3, 1), 6)


def test_amended_rows_differ_only_on_8_and_9():
    for case in range(1, 19):
        same = table_row(case, "printed") == table_row(case, "amended")
        assert same == (case not in (8, 9))


def test_evaluate_examples():
    assert evaluate_d(*PIERI, division_numbers(*PIERI, 4)) == 2 * ALPHA / (1 + ALPHA)
    assert evaluate_d(*BIG, division_numbers(*BIG, 4)) == oracle_c(*BIG)
    assert evaluate_d((2, 1), (1,), (1,), DivisionNumbers.zero()) == RatFunc1(1)


def test_g_examples():
    g = 32 * A**5 * (3 + 2 * A) * (1 + 2 * A) ** 2 * (2 + A) ** 2 * (2 + 3 * A)
    assert stanley_g_product(*PIERI, division_numbers(*PIERI, 4)) == g
    assert stanley_g_product((1,), (1,), (), DivisionNumbers.zero()) == A


def test_printed_assignments_match_oracle():
    for triple, grids in PRINTED_ASSIGNMENTS.items():
        assert c_from_assignment(*triple, grids) == oracle_c(*triple)
        assert g_from_assignment(*triple, grids) == g_coeff(*triple)


def test_printed_grid_rendering():
    text = render_assignment(PRINTED_ASSIGNMENTS[BIG])
    assert text.startswith("ulllullu / uullull / ulll")
    assert parse_grid("ulll/ uull /") == ["ulll", "uull"]


def test_table_grid_differs_from_printed_but_agrees():
    ours = hook_assignment(*BIG, division_numbers(*BIG, 4))
    assert ours != PRINTED_ASSIGNMENTS[BIG]
    assert c_from_assignment(*BIG, ours) == c_from_assignment(*BIG, PRINTED_ASSIGNMENTS[BIG])


def test_pieri_printed_grid_is_a_table_row():
    grids = {r: hook_assignment(*PIERI, division_numbers(*PIERI, r)) for r in classify_cases(*PIERI)}
    assert PRINTED_ASSIGNMENTS[PIERI] in grids.values()


def test_six_ways_for_the_five_row_example():
    lam, mu, nu = (2, 2, 2, 1, 1), (2, 1, 1), (2, 1, 1)
    base = {"lambda": ["ll", "ll", "u?", "l", "?"], "mu": ["u?", "l", "?"], "nu": ["u?", "l", "?"]}
    slots = [(k, i, j) for k, rows in base.items() for i, r in enumerate(rows) for j, ch in enumerate(r) if ch == "?"]
    assert len(slots) == 6
    target = g_coeff(lam, mu, nu, 5)
    good = []
    for fill in product("ul", repeat=6):
        grids = {k: [list(r) for r in v] for k, v in base.items()}
        for (k, i, j), ch in zip(slots, fill):
            grids[k][i][j] = ch
        grids = {k: ["".join(r) for r in v] for k, v in grids.items()}
        if g_from_assignment(lam, mu, nu, grids) == target:
            good.append(fill)
    assert len(good) == 6
    assert all(f.count("l") == 1 for f in good)


def test_row_pieri_example_grid():
    lam, mu, nu = (3, 3, 1, 1), (3, 2, 1), (2,)
    grids = {"lambda": ["lll", "lul", "l", "l"], "mu": ["uuu", "ul", "u"], "nu": ["uu"]}
    assert g_from_assignment(lam, mu, nu, grids) == g_coeff(lam, mu, nu, 4)
    assert c_from_assignment(lam, mu, nu, grids) == oracle_c(lam, mu, nu, 4)


def test_verify_examples():
    rep = verify_triple(*PIERI)
    assert rep.match_c and rep.match_g and rep.balance == (1, 1)
    rep = verify_triple(*BIG)
    assert rep.match_c and rep.balance == (11, 11)
    rep = verify_triple((3, 2, 1), (2, 1), (2, 1))
    assert not rep.minimal and rep.lr == 2 and rep.division is None and rep.match_c is None


def test_reduce_examples():
    red = reduce_3to2(*PIERI)
    assert red == ((3, 1, 1), (2, 1), (1, 1))
    assert oracle_c(*red) == oracle_c(*PIERI)
    assert reduce_3to2((3, 2), (2,), (1, 1)) == ((3, 2), (2,), (1, 1))
    # full columns of μ and ν removed together; the coefficient is unchanged
    red = reduce_3to2((3, 3, 3), (1, 1, 1), (2, 2, 2))
    assert red == ((), (), ())
    assert oracle_c((3, 3, 3), (1, 1, 1), (2, 2, 2)) == oracle_c(*red) == 1


def test_reduce_preserves_coefficient():
    for lam, mu, nu in enumerate_minimal(8):
        assert oracle_c(*reduce_3to2(lam, mu, nu)) == oracle_c(lam, mu, nu)


def test_minimal_path_examples():
    assert minimal_path_check((3, 2, 1), (2, 1), (1, 1), (1,))
    assert minimal_path_check((3, 2, 1), (2, 1), (2, 1), ())


def test_minimal_path_on_case_2_triples():
    seen = 0
    for lam, mu, nu in enumerate_minimal(8):
        if classify_cases(lam, mu, nu)[0] != 2 or nu.part(2) <= nu.part(3):
            continue
        zeta = Partition(x - (1 if i < 2 else 0) for i, x in enumerate(nu.padded(3)))
        assert minimal_path_check(lam, mu, zeta, (1, 1))
        seen += 1
    assert seen


def test_both_paths_agree_and_specialize_to_one():
    for lam, mu, nu in enumerate_minimal(9):
        for case in classify_cases(lam, mu, nu):
            try:
                dn = division_numbers(lam, mu, nu, case)
            except FormulaError:
                continue
            a = evaluate_d_anchors(lam, mu, nu, dn)
            assert a == evaluate_d_boxes(lam, mu, nu, dn)
            assert a(1) == 1


def test_transpose_duality_small_conjugates():
    for lam, mu, nu in enumerate_minimal(9):
        k = len(conjugate(lam))
        if k <= 4:
            assert transpose_check(lam, mu, nu, 3, max(k, 1)), (lam, mu, nu)


def test_factorization_first_column_family():
    # λ_i = μ_i + ν_1: peel the first block of ν off row i
    seen = 0
    for lam, mu, nu in enumerate_minimal(10):
        L, M, N = (x.padded(3) for x in (lam, mu, nu))
        eps = Partition((N[0] - N[1],))
        zeta = Partition((N[1], N[1], N[2]))
        for i in range(3):
            if L[i] != M[i] + N[0]:
                continue
            k = list(L)
            k[i] -= eps.weight
            kappa = Partition(k)
            assert oracle_c(kappa, mu, zeta, 3) * oracle_c(lam, kappa, eps, 3) == oracle_c(lam, mu, nu, 3)
            seen += 1
    assert seen > 1000


def test_factorization_last_column_family():
    # λ_i = μ_i + ν_3: the intermediate shape adds ν_3 to row i and ν_2 elsewhere
    seen = 0
    for lam, mu, nu in enumerate_minimal(10):
        L, M, N = (x.padded(3) for x in (lam, mu, nu))
        eps = Partition((N[0] - N[1],))
        zeta = Partition((N[1], N[1], N[2]))
        for i in range(3):
            if L[i] != M[i] + N[2]:
                continue
            kappa = Partition(M[j] + (N[2] if j == i else N[1]) for j in range(3))
            assert oracle_c(kappa, mu, zeta, 3) * oracle_c(lam, kappa, eps, 3) == oracle_c(lam, mu, nu, 3)
            seen += 1
    assert seen > 1000


@pytest.mark.slow
def test_every_applicable_row_matches_oracle():
    failures = []
    for lam, mu, nu in enumerate_minimal(8):
        rep = verify_triple(lam, mu, nu, all_cases=True)
        for case, (status, _) in rep.case_results.items():
            if status != "match":
                failures.append((lam, mu, nu, case, status))
    assert not failures, f"{len(failures)} failing rows, first: {failures[:5]}"


def test_main_sweep_weight_6():
    for lam, mu, nu in enumerate_minimal(6):
        rep = verify_triple(lam, mu, nu)
        assert rep.match_c and rep.match_g and rep.paths_agree, (lam, mu, nu)


def test_plus_convention_fails_somewhere():
    bad = [t for t in enumerate_minimal(6) if not verify_triple(*t, convention="plus").match_c]
    assert bad
