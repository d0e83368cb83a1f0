"""Straight/offsetting mergers and normalization."""

import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from oracles import all_parenthesizations, unit_expansion_merge, weighted_std_two
from probdyn import (
    AlphaEvidence,
    BinaryEvidence,
    MergeState,
    Partition,
    WeightedBinarySet,
    accord,
    normalize,
    opd_merge,
    scale_by_truth_probability,
    spd_merge,
)
from probdyn.errors import (
    DegenerateError,
    NegativeCredenceError,
    PartitionMismatchError,
    RangeError,
    ZeroTotalCredenceError,
)

THREE = Partition(("x", "y", "z"))
TOL_EQ = 1e-12

credences = st.floats(0.1, 10.0)
probs = st.floats(0.0, 1.0)
binaries = st.builds(BinaryEvidence, credences, probs)


class TestSpdMerge:
    def test_identical_pair(self):
        assert spd_merge([BinaryEvidence(1, 0.6), BinaryEvidence(1, 0.6)]) == BinaryEvidence(2, 0.6)

    def test_counter_evidence_cancels(self):
        k, p1 = 1.7, 0.35
        out = spd_merge([BinaryEvidence(k, p1), BinaryEvidence(-k, p1), BinaryEvidence(2.5, 0.8)])
        assert out == BinaryEvidence(2.5, 0.8)

    def test_unit_decomposition_value(self):
        credence, p = unit_expansion_merge([(2, 1, Fraction("0.9")), (1, 1, Fraction("0.3"))])
        assert (credence, p) == (3, Fraction(7, 10))
        out = spd_merge([BinaryEvidence(2, 0.9), BinaryEvidence(1, 0.3)])
        assert out.credence == 3.0
        assert out.p == pytest.approx(0.7, abs=TOL_EQ)

    def test_zero_total(self):
        with pytest.raises(ZeroTotalCredenceError):
            spd_merge([BinaryEvidence(1, 0.2), BinaryEvidence(-1, 0.7)])

    def test_partition_mismatch(self):
        a = AlphaEvidence.make(1, (0.2, 0.3, 0.5), THREE)
        b = AlphaEvidence.make(1, (0.2, 0.8), ("x", "y"))
        with pytest.raises(PartitionMismatchError):
            spd_merge([a, b])

    def test_zero_weight_intermediate(self):
        # (e1 + (-e1)) has zero credence; accumulating through it is harmless
        e1 = AlphaEvidence.make(2, (0.1, 0.2, 0.7), THREE)
        e2 = AlphaEvidence.make(-2, (0.1, 0.2, 0.7), THREE)
        e3 = AlphaEvidence.make(1, (0.5, 0.25, 0.25), THREE)
        zero = MergeState.of(e1) + MergeState.of(e2)
        assert not zero.extractable()
        assert (zero + MergeState.of(e3)).to_evidence() == e3

    def test_multicell(self):
        out = spd_merge(
            [AlphaEvidence.make(1, (0.2, 0.3, 0.5), THREE), AlphaEvidence.make(3, (0.6, 0.3, 0.1), THREE)]
        )
        assert out.credence == 4.0
        assert out.probs == pytest.approx((0.5, 0.3, 0.2), abs=TOL_EQ)


@given(st.lists(binaries, min_size=1, max_size=5))
def test_spd_parenthesizations_and_permutations_agree(evs):
    states = [MergeState.of(e) for e in evs]
    expected = spd_merge(evs)
    for perm in itertools.permutations(states):
        for total in all_parenthesizations(list(perm), lambda a, b: a + b):
            got = BinaryEvidence.from_alpha(total.to_evidence())
            assert got == expected


@given(st.lists(st.tuples(st.integers(1, 12), st.integers(1, 12), probs), min_size=1, max_size=6))
def test_spd_matches_unit_expansion(triples):
    oracle_k, oracle_p = unit_expansion_merge(triples)
    out = spd_merge([BinaryEvidence(r / s, p) for r, s, p in triples])
    assert out.credence == pytest.approx(float(oracle_k), rel=TOL_EQ)
    assert abs(out.p - float(oracle_p)) <= TOL_EQ


@given(credences, probs, st.integers(1, 12), st.integers(1, 12))
def test_equivalence_theorem(k, p, m, n):
    assume(m <= n)
    e = BinaryEvidence(k, p)
    scaled = scale_by_truth_probability(e, m / n)
    copies = spd_merge([BinaryEvidence(k / n, p)] * m)
    assert scaled.credence == pytest.approx(copies.credence, rel=TOL_EQ, abs=TOL_EQ)
    assert abs(scaled.p - copies.p) <= TOL_EQ


class TestScaleByTruthProbability:
    def test_half(self):
        d = AlphaEvidence.make(4, (0.2, 0.3, 0.5), THREE)
        assert scale_by_truth_probability(d, 0.5) == AlphaEvidence(2.0, d.dist)

    def test_identity_and_zero(self):
        d = AlphaEvidence.make(4, (0.2, 0.3, 0.5), THREE)
        assert scale_by_truth_probability(d, 1.0) == d
        assert scale_by_truth_probability(d, 0.0).credence == 0.0

    def test_range(self):
        with pytest.raises(RangeError):
            scale_by_truth_probability(BinaryEvidence(1, 0.5), 1.5)


class TestNormalize:
    def test_equicredible_fixed_point(self):
        out = normalize(WeightedBinarySet(("x", "y"), ((1.3, 0.2), (1.3, 0.8))))
        assert out.credence == 1.3
        assert out.probs == (0.2, 0.8)

    def test_unequal_credences(self):
        out = normalize(WeightedBinarySet(("x", "y"), ((2, 0.5), (1, 0.5))))
        assert out.credence == pytest.approx(1.5, abs=TOL_EQ)
        assert out.probs == pytest.approx((2 / 3, 1 / 3), abs=TOL_EQ)

    def test_certain_cell(self):
        out = normalize(WeightedBinarySet(("x", "y"), ((1, 0.0), (3, 1.0))))
        assert out.credence == 3.0
        assert out.probs == (0.0, 1.0)

    def test_degenerate(self):
        with pytest.raises(DegenerateError):
            normalize(WeightedBinarySet(("x", "y"), ((0, 0.5), (2, 0.0))))

    def test_result_is_distribution(self):
        out = normalize(WeightedBinarySet(THREE, ((1, 0.9), (2, 0.9), (0.5, 0.4))))
        assert math.fsum(out.probs) == pytest.approx(1.0, abs=1e-15)


@given(st.lists(st.tuples(credences, probs), min_size=2, max_size=4), st.randoms())
def test_normalize_permutation_invariant(entries, rnd):
    assume(sum(k * q for k, q in entries) > 1e-6)
    labels = tuple(f"c{j}" for j in range(len(entries)))
    base = normalize(WeightedBinarySet(labels, tuple(entries)))
    order = list(range(len(entries)))
    rnd.shuffle(order)
    shuffled = normalize(
        WeightedBinarySet(tuple(labels[j] for j in order), tuple(entries[j] for j in order))
    )
    assert shuffled.credence == pytest.approx(base.credence, rel=TOL_EQ)
    for pos, j in enumerate(order):
        assert abs(shuffled.probs[pos] - base.probs[j]) <= TOL_EQ


class TestAccord:
    def test_total_cancellation(self):
        r = accord([BinaryEvidence(2, 0), BinaryEvidence(2, 1)])
        assert (r.sigma, r.lam) == (0.5, 0.0)

    def test_unanimity(self):
        r = accord([BinaryEvidence(2, 0.3), BinaryEvidence(5, 0.3)])
        assert (r.sigma, r.lam) == (0.0, 1.0)

    def test_pair_value(self):
        r = accord([BinaryEvidence(1, 0.2), BinaryEvidence(1, 0.6)])
        assert r.pbar == pytest.approx(0.4, abs=TOL_EQ)
        assert r.sigma == pytest.approx(0.2, abs=TOL_EQ)
        assert r.lam == pytest.approx(weighted_std_two(1, 0.2, 1, 0.6), abs=TOL_EQ)
        assert r.lam == pytest.approx(0.6, abs=TOL_EQ)

    def test_rejects_negative(self):
        with pytest.raises(NegativeCredenceError):
            accord([BinaryEvidence(-1, 0.2), BinaryEvidence(2, 0.6)])

    def test_rejects_zero_total(self):
        with pytest.raises(ZeroTotalCredenceError):
            accord([BinaryEvidence(0, 0.2)])


@given(credences, probs, credences, probs)
def test_accord_matches_pairwise_closed_form(k1, p1, k2, p2):
    r = accord([BinaryEvidence(k1, p1), BinaryEvidence(k2, p2)])
    assert r.lam == pytest.approx(weighted_std_two(k1, p1, k2, p2), abs=1e-12)


class TestOpdMerge:
    def test_cancellation(self):
        out = opd_merge([BinaryEvidence(3, 0), BinaryEvidence(3, 1)])
        assert out == BinaryEvidence(0.0, 0.5)

    def test_agreement_is_spd(self):
        assert opd_merge([BinaryEvidence(1.5, 0.3), BinaryEvidence(1.5, 0.3)]) == BinaryEvidence(3.0, 0.3)

    def test_pair_value(self):
        out = opd_merge([BinaryEvidence(1, 0.2), BinaryEvidence(1, 0.6)])
        assert out.credence == pytest.approx(1.2, abs=TOL_EQ)
        assert out.p == pytest.approx(0.4, abs=TOL_EQ)

    def test_not_pairwise_associative(self):
        # collapsing a pair first loses the dispersion the multiset still sees
        a, b, c = BinaryEvidence(1, 0), BinaryEvidence(1, 1), BinaryEvidence(1, 0.5)
        nested = opd_merge([opd_merge([a, b]), c])
        flat = opd_merge([a, b, c])
        assert nested != flat
        assert opd_merge([c, b, a]).credence == pytest.approx(flat.credence, abs=TOL_EQ)


@given(st.lists(binaries, min_size=1, max_size=6))
def test_opd_bounds(evs):
    out = opd_merge(evs)
    r = accord(evs)
    assert 0.0 <= r.lam <= 1.0
    assert not r.clamped
    assert out.credence <= math.fsum(e.credence for e in evs) * (1 + 1e-15)


@given(st.lists(probs, min_size=2, max_size=6), credences, credences)
def test_equicredible_closed_form(ps, k, k_other):
    a = accord([BinaryEvidence(k, p) for p in ps])
    b = accord([BinaryEvidence(k_other, p) for p in ps])
    n = len(ps)
    mean = math.fsum(ps) / n
    var = math.fsum(p * p for p in ps) / n - mean * mean
    assert a.lam == pytest.approx(b.lam, abs=TOL_EQ)
    assert a.pbar == pytest.approx(mean, abs=TOL_EQ)
    assert a.lam == pytest.approx(1 - 2 * math.sqrt(max(var, 0.0)), abs=1e-7)
