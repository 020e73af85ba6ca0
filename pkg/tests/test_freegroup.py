import itertools

import pytest
from hypothesis import given
from hypothesis.strategies import lists, sampled_from, tuples

from zigzag import PairClass
from zigzag.errors import CaseMismatchError, ZetaPreconditionError
from zigzag.poly import Poly
from zigzag.words import zeta_word, zeta_classes, zeta_product, syllable_sequences, predicted_length
from zigzag.words import certify_free_family, repair_shift, find_free_family, reduce_word


class TestZetaWord:
    def test_closed_of_length_four(self, carpet_seed):
        word = zeta_word(carpet_seed, 1)
        assert len(word) == 4
        assert word.is_closed()
        assert [l.center for l in word] == [0, 1, 1, 0]

    def test_classes(self, carpet_seed):
        classes = zeta_classes(carpet_seed, 2)
        assert classes[1] == carpet_seed.swapped()
        assert classes[2].same_representative(PairClass(carpet_seed.P.shift(2), carpet_seed.Q))

    def test_zero_parameter(self, carpet_seed):
        with pytest.raises(ZetaPreconditionError) as e:
            zeta_word(carpet_seed, 0)
        assert e.value.condition == "a = 0"

    def test_symmetric_pair(self):
        pair = PairClass(Poly([-2, 0, 1]), Poly([-2, 0, 1]))
        with pytest.raises(ZetaPreconditionError) as e:
            zeta_word(pair, 1)
        assert e.value.witness is not None

    def test_conjugate_classes_are_distinct(self, carpet_seed):
        classes = [PairClass(carpet_seed.Q.shift(a), carpet_seed.P) for a in range(11)]
        for i, j in itertools.combinations(range(11), 2):
            assert classes[i] != classes[j]

    def test_needs_case_i(self, self_swap_pair):
        with pytest.raises(CaseMismatchError):
            zeta_word(self_swap_pair, 1)

    def test_product_reverses_syllables(self, carpet_seed):
        word = zeta_product(carpet_seed, [(2, -1), (1, 1)])
        assert len(word) == 8
        assert word.is_closed()
        assert list(word)[:4] == list(zeta_word(carpet_seed, 2).inverse())


class TestSyllables:
    def test_freely_reduced(self):
        seqs = list(syllable_sequences([1, 2], 2))
        assert len(seqs) == 4 + 4 * 3
        assert ((1, 1), (1, -1)) not in seqs
        assert ((1, 1), (1, 1)) in seqs

    @pytest.mark.parametrize("syllables,length", [
        ([(1, 1)], 4),
        ([(2, 1), (1, 1)], 8),
        ([(2, -1), (1, 1)], 6),
        ([(2, 1), (1, -1)], 8),
        ([(1, -1), (2, 1), (3, -1), (1, 1)], 12),
    ])
    def test_predicted_length(self, syllables, length):
        assert predicted_length(syllables) == length

    @given(lists(tuples(sampled_from([1, 2, 3]), sampled_from([1, -1])), min_size = 1, max_size = 3)
           .filter(lambda s: all(not (x[0] == y[0] and x[1] == -y[1]) for x, y in zip(s, s[1:]))))
    def test_prediction_matches_reduction(self, syllables):
        base = PairClass(Poly([-2, 0, 1]), Poly([-3, 0, 1]))
        assert reduce_word(zeta_product(base, syllables)).length == predicted_length(syllables)


class TestCertifyFreeFamily:
    def test_certified(self, carpet_seed):
        cert = certify_free_family(carpet_seed, [0, 1, 2, 3], max_syllables = 2)
        assert cert.ok
        assert cert.failure is None
        assert cert.shift == 0
        assert cert.unexpected_lengths == 0
        assert cert.words_checked == 6 + 6 * 5
        assert cert.min_length == 4
        # three zeta cycles, three conjugate junctions, two for each of the three parameter pairs
        assert len(cert.checks) == 3 + 3 + 2 * 3

    @pytest.mark.slow
    def test_certified_full(self, carpet_seed):
        cert = certify_free_family(carpet_seed, range(11), max_syllables = 3)
        assert cert.ok
        assert cert.unexpected_lengths == 0
        assert cert.words_checked == 20 + 20 * 19 + 20 * 19 * 19
        assert cert.min_length == 4
        assert len(cert.checks) == 10 + 10 + 2 * 45

    def test_missing_zero(self, carpet_seed):
        cert = certify_free_family(carpet_seed, [1, 2])
        assert not cert.ok
        assert cert.failure.condition == "family contains 0"

    def test_duplicates(self, carpet_seed):
        cert = certify_free_family(carpet_seed, [0, 1, 1])
        assert cert.failure.condition == "distinct parameters"
        assert cert.failure.a == 1

    def test_degenerate_cycle(self):
        base = PairClass(Poly([-2, 0, 1]), Poly([-2, 0, 1]))
        cert = certify_free_family(base, [0, 1, 2, 3], max_syllables = 1)
        assert not cert.ok
        assert cert.failure.condition.startswith("zeta cycle: ")
        assert cert.failure.witness is not None

    def test_case_mismatch(self, self_swap_pair):
        with pytest.raises(CaseMismatchError):
            certify_free_family(self_swap_pair, [0, 1])

    def test_bad_arguments(self, carpet_seed):
        with pytest.raises(ValueError):
            certify_free_family(carpet_seed, [0, 1], max_syllables = -1)
        with pytest.raises(ValueError):
            certify_free_family(carpet_seed, [0, 1], jobs = 0)

    def test_json(self, carpet_seed):
        out = certify_free_family(carpet_seed, [0, 1], max_syllables = 1).to_json()
        assert out['ok'] is True
        assert out['family'] == ["0/1", "1/1"]
        assert out['shift'] == "0/1"
        assert out['failure'] is None
        assert out['spot_reduction']['lengths'] == {"4" : 2}
        assert all(c['isomorphic'] is False for c in out['checks'])

    def test_failure_json(self, carpet_seed):
        out = certify_free_family(carpet_seed, [1]).to_json()
        assert out['ok'] is False
        assert out['failure'] == {'condition' : "family contains 0", 'a' : None, 'b' : None, 'witness' : None}


class TestRepairShift:
    def test_repairs(self):
        base = PairClass(Poly([-2, 0, 1]), Poly([-2, 0, 1]))
        cert = repair_shift(base, [0, 1, 2, 3], max_syllables = 1)
        assert cert.ok
        assert cert.shift == 4
        assert cert.base.same_representative(PairClass(base.P, base.Q.shift(4)))

    def test_already_certified(self, carpet_seed):
        cert = repair_shift(carpet_seed, [0, 1], max_syllables = 1)
        assert cert.ok and cert.shift == 0

    def test_parameter_failures_are_not_repaired(self, carpet_seed):
        cert = repair_shift(carpet_seed, [1, 2])
        assert cert.failure.condition == "family contains 0"
        assert cert.shift == 0

    def test_gives_up(self):
        base = PairClass(Poly([-2, 0, 1]), Poly([-2, 0, 1]))
        cert = repair_shift(base, [0, 1, 2, 3], max_shift = 2, max_syllables = 1)
        assert not cert.ok
        assert cert.shift == 2


class TestFindFreeFamily:
    # Roots 1 and 2: a = 1, 2 hit a root of P and P(w + 3) ~ P(-w).
    ROOTS_1_2 = PairClass(Poly([2, -3, 1]), Poly([-3, 0, 1]))

    def test_carpet(self, carpet_seed):
        cert = find_free_family(carpet_seed, size = 3, max_syllables = 1)
        assert cert.ok
        assert cert.family == [0, 1, 2, 3]
        assert cert.shift == 0

    def test_skips_bad_parameters(self):
        assert not certify_free_family(self.ROOTS_1_2, [0, 1, 2, 3], max_syllables = 1).ok
        cert = find_free_family(self.ROOTS_1_2, size = 3, max_syllables = 1)
        assert cert.ok
        assert cert.family == [0, 4, 5, 6]

    def test_gives_up(self):
        cert = find_free_family(self.ROOTS_1_2, size = 3, max_parameter = 4, max_shift = 0, max_syllables = 1)
        assert not cert.ok
        assert cert.family == [0, 4]
        assert cert.failure.condition == "3 parameters up to 4"

    def test_bad_arguments(self, carpet_seed, self_swap_pair):
        with pytest.raises(CaseMismatchError):
            find_free_family(self_swap_pair)
        with pytest.raises(ValueError):
            find_free_family(carpet_seed, size = 0)
