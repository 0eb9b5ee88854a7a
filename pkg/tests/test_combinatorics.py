from itertools import permutations
from math import comb

import pytest

from dqsym.combinatorics import (
    compositions,
    composition_from_descents,
    composition_order_index,
    concat,
    conjugate,
    convolution,
    convolution_split,
    descent_composition,
    descent_set,
    descent_set_minus,
    finer_refinements,
    format_word,
    i_decomposition,
    initially_dominated_factorization,
    is_finer,
    lattice_interval,
    mirror,
    near_concat,
    parse_composition,
    parse_word,
    permutations_with_descents,
    permutations_with_saillance,
    saillance_classes,
    saillance_composition,
    standardize,
    statistic_D,
    word_left_dend,
    word_right_dend,
)

from conftest import brute_convolution, std_by_counting


def P(s):
    return tuple(int(c) for c in str(s))


@pytest.mark.parametrize("w, expected", [
    ((1, 2, 3), (1, 2, 3)),
    ((1, 2, 1), (1, 3, 2)),
    ((2, 1, 2), (2, 1, 3)),
    ((), ()),
])
def test_standardize(w, expected):
    assert standardize(w) == expected


def test_standardize_matches_counting_and_is_idempotent():
    for n in range(6):
        for sigma in permutations(range(1, n + 1)):
            assert standardize(sigma) == sigma
    for w in [(3, 3, 1, 2, 1), (5, 2, 5, 5), (1,), (9, 4, 9, 4, 1)]:
        assert standardize(w) == std_by_counting(w)


@pytest.mark.parametrize("alpha, beta, expected", [
    ((1,), (1,), {(1, 2), (2, 1)}),
    ((), (2, 1), {(2, 1)}),
    ((1,), (1, 2), {(1, 2, 3), (2, 1, 3), (3, 1, 2)}),
])
def test_convolution_examples(alpha, beta, expected):
    assert convolution(alpha, beta) == expected


def test_convolution_matches_brute_force():
    for n in range(6):
        for k in range(n + 1):
            for a in permutations(range(1, k + 1)):
                for b in permutations(range(1, n - k + 1)):
                    split = dict(convolution_split(a, b))
                    assert split == brute_convolution(a, b)


def test_convolution_sizes_exhaustive():
    for n in range(8):
        for k in range(n + 1):
            alphas = list(permutations(range(1, k + 1)))
            betas = list(permutations(range(1, n - k + 1)))
            # all pairs up to 6; spot the diagonal ends at 7
            pairs = [(a, b) for a in alphas for b in betas] if n < 7 else list(zip(alphas, betas))
            for a, b in pairs:
                gammas = [g for g, _ in convolution_split(a, b)]
                assert len(gammas) == len(set(gammas)) == comb(n, k)
                for g in gammas:
                    assert standardize(g[:k]) == a and standardize(g[k:]) == b


def test_word_dendriform():
    assert word_left_dend((3, 1), (2,)) == (3, 1, 2)
    assert word_right_dend((3, 1), (2,)) is None
    assert word_right_dend((1,), (2, 1)) == (1, 2, 1)
    assert word_left_dend((1,), (2, 1)) is None
    # equal maxima: both conditions hold as printed
    assert word_left_dend((2,), (2,)) == word_right_dend((2,), (2,)) == (2, 2)
    with pytest.raises(ValueError):
        word_left_dend((), (1,))


@pytest.mark.parametrize("sigma, expected", [
    (P(1234), (4,)), (P(132), (2, 1)), (P(3142), (1, 2, 1)), ((), ()),
])
def test_descent_composition(sigma, expected):
    assert descent_composition(sigma) == expected


@pytest.mark.parametrize("w, expected", [
    (P(312), [P(312)]),
    (P(3142), [P(31), P(42)]),
    (P(123), [(1,), (2,), (3,)]),
])
def test_initially_dominated_factorization(w, expected):
    assert initially_dominated_factorization(w) == expected


def test_factorization_rejects_repeated_letters():
    with pytest.raises(ValueError):
        initially_dominated_factorization((2, 1, 2))


def test_factorization_properties_exhaustive():
    for n in range(1, 8):
        for sigma in permutations(range(1, n + 1)):
            factors = initially_dominated_factorization(sigma)
            assert sum(factors, ()) == sigma
            for f in factors:
                assert all(f[0] > x for x in f[1:])
            leaders = [f[0] for f in factors]
            assert leaders == sorted(leaders)


@pytest.mark.parametrize("sigma, expected", [
    (P(2431), (1, 3)), (P(2134), (2, 1, 1)), (P(12345), (1, 1, 1, 1, 1)),
])
def test_saillance_composition(sigma, expected):
    assert saillance_composition(sigma) == expected


# saillance classes of S_3 and S_4, listed by hand
SAILLANCE_3 = {
    "3": ["312", "321"], "21": ["213"], "12": ["132", "231"], "111": ["123"],
}
SAILLANCE_4 = {
    "4": ["4123", "4132", "4213", "4231", "4312", "4321"],
    "31": ["3124", "3214"],
    "22": ["2143", "3142", "3241"],
    "211": ["2134"],
    "13": ["1423", "1432", "2413", "2431", "3412", "3421"],
    "121": ["1324", "2314"],
    "112": ["1243", "1342", "2341"],
    "1111": ["1234"],
}


@pytest.mark.parametrize("n, table", [(3, SAILLANCE_3), (4, SAILLANCE_4)])
def test_saillance_tables(n, table):
    classes = saillance_classes(n)
    assert [format_word(J) for J in classes] == list(table)
    for J, perms in classes.items():
        assert sorted(format_word(s) for s in perms) == table[format_word(J)]


def test_class_enumerators():
    assert set(permutations_with_saillance((2, 2))) == {P(2143), P(3142), P(3241)}
    assert set(permutations_with_saillance((3, 1))) == {P(3124), P(3214)}
    assert permutations_with_descents((5,)) == (P(12345),)
    for n in range(1, 7):
        for classes in (saillance_classes(n), {I: permutations_with_descents(I) for I in compositions(n)}):
            seen = [s for perms in classes.values() for s in perms]
            assert len(seen) == len(set(seen)) == len(list(permutations(range(1, n + 1))))


def test_last_factor_rule():
    """S(s) = (l1..lp) iff the prefix before the last factor has saillance (l1..l_{p-1}) and is followed by n."""
    for n in range(1, 8):
        for sigma in permutations(range(1, n + 1)):
            S = saillance_composition(sigma)
            for L in compositions(n):
                m = sum(L[:-1])
                rhs = saillance_composition(standardize(sigma[:m])) == L[:-1] and sigma[m] == n
                assert (S == L) == rhs


def test_descent_sets():
    assert descent_set((2, 1, 1)) == {2, 3}
    assert descent_set_minus((2, 1, 1)) == {1, 2}
    assert descent_set((4,)) == set() and descent_set_minus((4,)) == set()
    assert descent_set((1, 1, 1)) == {1, 2}
    assert descent_set_minus((1, 1, 1)) == {0, 1}
    for n in range(1, 9):
        for I in compositions(n):
            assert composition_from_descents(descent_set(I), n) == I
            assert len(descent_set(I)) == len(I) - 1


def test_mirror_and_conjugate():
    assert mirror((3, 2)) == (2, 3)
    assert conjugate((2, 3)) == (1, 1, 2, 1)
    assert conjugate((5,)) == (1, 1, 1, 1, 1)
    assert conjugate(conjugate((2, 1, 3))) == (2, 1, 3)
    for n in range(1, 8):
        comps = compositions(n)
        for I in comps:
            assert mirror(mirror(I)) == I
            assert conjugate(conjugate(I)) == I
        for I in comps:
            for J in comps:
                assert is_finer(I, J) == is_finer(conjugate(J), conjugate(I))


def test_finer_refinements():
    assert set(finer_refinements((1, 1, 2, 1))) == {(1, 1, 2, 1), (1, 1, 1, 1, 1)}
    assert finer_refinements((1, 1, 1)) == [(1, 1, 1)]
    assert set(finer_refinements((3,))) == {(3,), (2, 1), (1, 2), (1, 1, 1)}
    for n in range(1, 7):
        for I in compositions(n):
            assert len(finer_refinements(I)) == 2 ** (n - len(I))


def test_concat_operations():
    assert concat((2, 1), (3,)) == (2, 1, 3)
    assert near_concat((2, 1), (3,)) == (2, 4)
    assert concat((4,), ()) == (4,)
    with pytest.raises(ValueError):
        near_concat((), (1,))


def test_i_decomposition_examples():
    assert i_decomposition((3, 2, 4, 3, 2, 5), (6, 2, 2, 4, 1, 4)) == [
        (3, 2, 1), (2,), (1, 1), (2, 2), (1,), (4,)]
    assert i_decomposition((2, 1, 3), (2, 1, 3)) == [(2,), (1,), (3,)]
    assert i_decomposition((4,), (1, 1, 1, 1)) == [(1,)] * 4


def test_i_decomposition_rejoins_exhaustive():
    for n in range(1, 9):
        comps = compositions(n)
        for I in comps:
            cuts = sorted(descent_set(I))
            for J in comps:
                blocks = i_decomposition(J, I)
                assert [sum(b) for b in blocks] == list(I)
                acc = blocks[0]
                for cut, b in zip(cuts, blocks[1:]):
                    acc = concat(acc, b) if cut in descent_set(J) else near_concat(acc, b)
                assert acc == J


def test_statistic_D():
    assert statistic_D((6, 2, 2, 4, 1, 4), (3, 2, 4, 3, 2, 5)) == 8
    assert statistic_D((4,), (1, 1, 1, 1)) == 3
    for n in range(1, 8):
        for I in compositions(n):
            assert statistic_D(I, I) == 0
            for J in compositions(n):
                d = statistic_D(I, J)
                assert 0 <= d <= n - len(I)
                # zero exactly when J has no descent strictly inside a block of I
                assert (d == 0) == (descent_set(J) <= descent_set(I))


def test_lattice_interval():
    assert set(lattice_interval((2, 2), (1, 1, 2))) == {(2, 2), (1, 1, 2)}
    assert lattice_interval((4,), (4,)) == [(4,)]
    assert set(lattice_interval((1, 2), (1, 1, 1))) == {(1, 2), (1, 1, 1)}
    assert set(lattice_interval((1, 1, 1), (1, 2))) == {(1, 2), (1, 1, 1)}
    assert len(lattice_interval((5,), (1, 1, 1, 1, 1))) == 16
    with pytest.raises(ValueError):
        lattice_interval((1, 2), (2, 1))


def test_composition_order_index():
    assert composition_order_index((3,)) == 0
    assert composition_order_index((2, 1)) == 1
    assert composition_order_index((1, 2, 1)) == 5
    assert [format_word(I) for I in compositions(3)] == ["3", "21", "12", "111"]
    assert [format_word(I) for I in compositions(4)] == [
        "4", "31", "22", "211", "13", "121", "112", "1111"]


def test_literals():
    assert parse_word("312") == (3, 1, 2)
    assert parse_word("10,2,1") == (10, 2, 1)
    assert parse_composition("2,1,1") == (2, 1, 1)
    assert format_word((10, 2)) == "10,2"
    for bad in ["", "1a", "0,1", "1,,2"]:
        with pytest.raises(ValueError):
            parse_word(bad)
