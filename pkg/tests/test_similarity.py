import pytest

from edstrings.core import CapExceeded, EDString, enumerate_language, parse_eds
from edstrings.generate import random_eds
from edstrings.oracles import (brute_lcsubsequence, brute_lcsubstring,
                               brute_ms, lcs_length)
from edstrings.similarity import (longest_common_subsequence,
                                  longest_common_substring,
                                  matching_statistics)

T1 = parse_eds("{AC,A,TGCT}{,CA}")
T2 = parse_eds("{T,}{GCA,AC}")


def test_ms_running_example():
    assert matching_statistics(T1, T2) == [3, 2]


def test_ms_disjoint_alphabets():
    t1 = parse_eds("{ab}{ba,a}")
    t2 = parse_eds("{cd,dc}")
    assert matching_statistics(t1, t2) == [0, 0]


def test_ms_against_oracle():
    for seed in range(150):
        t1 = random_eds(seed * 2, n_range=(1, 4), seg_size_range=(1, 3),
                        len_range=(1, 3), alphabet=2, eps_prob=0.2)
        t2 = random_eds(seed * 2 + 1, n_range=(1, 4), seg_size_range=(1, 3),
                        len_range=(1, 3), alphabet=2, eps_prob=0.2)
        assert matching_statistics(t1, t2) == brute_ms(t1, t2)


def test_ms_monotone_under_segment_growth():
    for seed in range(50):
        t1 = random_eds(seed * 2, n_range=(1, 3), alphabet=2)
        t2 = random_eds(seed * 2 + 1, n_range=(1, 3), alphabet=2)
        base = matching_statistics(t1, t2)
        grown = list(t2.segments)
        grown[0] = grown[0] + ("ab",)
        bigger = matching_statistics(t1, EDString(tuple(grown)))
        assert all(b >= a for a, b in zip(base, bigger))


def test_lcs_identical_singleton():
    length, s = longest_common_substring(parse_eds("{ABC}"),
                                         parse_eds("{ABC}"))
    assert (length, s) == (3, "ABC")


def test_lcs_running_example():
    length, s = longest_common_substring(T1, T2)
    want, _ = brute_lcsubstring(T1, T2)
    assert length == want >= 3
    assert any(s in x for x in enumerate_language(T1))
    assert any(s in x for x in enumerate_language(T2))


def test_lcs_inside_single_variants():
    # the common factor never touches an explicit state on either side
    length, s = longest_common_substring(parse_eds("{xABCx}"),
                                         parse_eds("{yABCy}"))
    assert (length, s) == (3, "ABC")


def test_lcs_against_oracle():
    for seed in range(150):
        t1 = random_eds(seed * 2, n_range=(1, 4), seg_size_range=(1, 3),
                        len_range=(1, 3), alphabet=2, eps_prob=0.2)
        t2 = random_eds(seed * 2 + 1, n_range=(1, 4), seg_size_range=(1, 3),
                        len_range=(1, 3), alphabet=2, eps_prob=0.2)
        length, s = longest_common_substring(t1, t2)
        assert length == brute_lcsubstring(t1, t2)[0]
        assert len(s) == length
        assert any(s in x for x in enumerate_language(t1))
        assert any(s in x for x in enumerate_language(t2))


def test_lcseq_classic_pair():
    assert longest_common_subsequence(parse_eds("{AB}"),
                                      parse_eds("{BA}"))[0] == 1


def test_lcseq_singletons_match_classic_dp():
    for seed in range(60):
        t1 = random_eds(seed * 2, n_range=(1, 1), seg_size_range=(1, 1),
                        len_range=(1, 8), alphabet=2, eps_prob=0.0)
        t2 = random_eds(seed * 2 + 1, n_range=(1, 1), seg_size_range=(1, 1),
                        len_range=(1, 8), alphabet=2, eps_prob=0.0)
        a = t1.segments[0][0]
        b = t2.segments[0][0]
        assert longest_common_subsequence(t1, t2)[0] == lcs_length(a, b)


def test_lcseq_against_oracle_and_symmetry():
    for seed in range(100):
        t1 = random_eds(seed * 2, n_range=(1, 3), seg_size_range=(1, 3),
                        len_range=(1, 3), alphabet=2, eps_prob=0.2)
        t2 = random_eds(seed * 2 + 1, n_range=(1, 3), seg_size_range=(1, 3),
                        len_range=(1, 3), alphabet=2, eps_prob=0.2)
        length, s = longest_common_subsequence(t1, t2)
        assert length == brute_lcsubsequence(t1, t2)
        assert length == longest_common_subsequence(t2, t1)[0]
        assert len(s) == length
        assert max(lcs_length(s, x) for x in enumerate_language(t1)) == length
        assert max(lcs_length(s, x) for x in enumerate_language(t2)) == length


def test_lcseq_budget():
    t1 = parse_eds("{" + "a" * 60 + "}")
    t2 = parse_eds("{" + "b" * 60 + "}")
    with pytest.raises(CapExceeded):
        longest_common_subsequence(t1, t2, budget=100)
