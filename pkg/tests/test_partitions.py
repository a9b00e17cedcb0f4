import pytest

from enorbits.errors import InvalidQ, OutOfRange, ParseError, SizeMismatch
from enorbits.partitions import (
    Bipartition,
    EnhancedPartition,
    Partition,
    allowed_q,
    bipartition_of,
    cohomology_total_dim,
    dim_enhanced_orbit,
    dim_orbit,
    dominance_leq,
    enhanced_number,
    enhanced_number_vector,
    enhanced_partitions_of,
    fiber_dim,
    ic_summand_support,
    lower,
    lowerings,
    parse_enhanced,
    partitions_of,
    semismall_check,
)


def P(*parts):
    return Partition(tuple(parts))


def L(text):
    return parse_enhanced(text)


class TestPartition:
    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            P(1, 2)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            P(2, 0)

    def test_groups(self):
        assert P(3, 2, 2, 1).groups == ((3, 1), (2, 2), (1, 1))

    def test_part_padding(self):
        lam = P(2, 1)
        assert lam.part(1) == 2
        assert lam.part(3) == 0
        with pytest.raises(OutOfRange):
            lam.part(0)

    def test_transpose(self):
        assert P(3, 1).transpose() == P(2, 1, 1)
        assert P(1, 1, 1).transpose() == P(3)
        assert P(2, 2, 1).transpose() == P(3, 2)

    def test_transpose_involution(self):
        for n in range(1, 11):
            for lam in partitions_of(n):
                assert lam.transpose().transpose() == lam

    def test_str(self):
        assert str(P(2, 1)) == "2,1"
        assert str(Partition(())) == "-"


class TestDominance:
    def test_examples(self):
        assert dominance_leq(P(2, 2), P(3, 1))
        assert not dominance_leq(P(3, 1), P(2, 2))
        assert dominance_leq(P(2, 1, 1), P(2, 1, 1))

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            dominance_leq(P(2), P(2, 1))

    def test_transpose_antiisomorphism(self):
        for n in range(1, 11):
            ps = partitions_of(n)
            for mu in ps:
                for lam in ps:
                    assert dominance_leq(mu, lam) == dominance_leq(
                        lam.transpose(), mu.transpose()
                    )


class TestMarkers:
    def test_allowed_q(self):
        assert allowed_q(P(2, 1)) == {0, 1, 2}
        assert allowed_q(P(2, 2)) == {0, 2}
        assert allowed_q(P(1, 1, 1)) == {0, 3}

    def test_lowerings(self):
        assert lowerings(P(2, 1)) == [
            (0, P(2, 1)),
            (1, P(1, 1)),
            (2, P(1)),
        ]
        assert lowerings(P(3)) == [(0, P(3)), (1, P(2))]
        assert lowerings(P(1, 1)) == [(0, P(1, 1)), (2, Partition(()))]

    def test_lowerings_are_valid(self):
        for n in range(1, 10):
            for lam in partitions_of(n):
                lows = lowerings(lam)
                assert len(lows) == len(lam.groups) + 1
                for q, mu in lows:
                    assert mu.n == n - q

    def test_lower_invalid_q(self):
        with pytest.raises(InvalidQ):
            lower(P(2, 2), 1)

    def test_enhanced_partition_validation(self):
        with pytest.raises(InvalidQ):
            EnhancedPartition(P(2, 2), 1)
        with pytest.raises(InvalidQ):
            EnhancedPartition(Partition(()), 0)


class TestParsing:
    def test_round_trip(self):
        for text in ["3,2,2,1[1]", "2,1[0]", "1,1[2]", "5[1]"]:
            assert str(parse_enhanced(text)) == text

    def test_whitespace(self):
        assert parse_enhanced(" 2 , 1 [ 1 ] ") == L("2,1[1]")

    def test_bad_marker_lists_allowed(self):
        with pytest.raises(ParseError) as e:
            parse_enhanced("2,2[1]")
        assert "[0, 2]" in str(e.value)

    def test_garbage(self):
        for text in ["", "2,1", "[1]", "1,2[0]", "a,b[0]", "2,1[x]"]:
            with pytest.raises(ParseError):
                parse_enhanced(text)


class TestEnumeration:
    def test_counts(self):
        assert [len(partitions_of(n)) for n in range(7)] == [1, 1, 2, 3, 5, 7, 11]
        assert len(enhanced_partitions_of(2)) == 4
        assert len(enhanced_partitions_of(3)) == 7
        assert len(enhanced_partitions_of(4)) == 12

    def test_enhanced_count_formula(self):
        for n in range(1, 10):
            expected = sum(len(lam.groups) + 1 for lam in partitions_of(n))
            assert len(enhanced_partitions_of(n)) == expected

    def test_canonical_order(self):
        assert [str(lq) for lq in enhanced_partitions_of(2)] == [
            "2[0]",
            "2[1]",
            "1,1[0]",
            "1,1[2]",
        ]


class TestEnhancedNumbers:
    def test_examples(self):
        assert enhanced_number_vector(L("2,1[0]")) == (2, 3, 3, 3)
        assert enhanced_number_vector(L("2,1[1]")) == (1, 3, 3, 3)
        assert enhanced_number_vector(L("1,1,1[3]")) == (0, 1, 2, 3)

    def test_zero_matrix_with_vector(self):
        # w != 0 class: values k + 1 until saturation
        assert enhanced_number_vector(L("1,1,1[0]")) == (1, 2, 3, 3)

    def test_range(self):
        with pytest.raises(OutOfRange):
            enhanced_number(L("2,1[0]"), -1)
        with pytest.raises(OutOfRange):
            enhanced_number(L("2,1[0]"), 4)

    def test_monotone_and_terminal(self):
        for n in range(1, 10):
            for lq in enhanced_partitions_of(n):
                vec = enhanced_number_vector(lq)
                assert vec[-1] == n
                assert all(a <= b for a, b in zip(vec, vec[1:]))

    def test_injective_for_fixed_partition(self):
        for n in range(1, 11):
            for lam in partitions_of(n):
                vecs = [
                    enhanced_number_vector(EnhancedPartition(lam, q))
                    for q in sorted(allowed_q(lam))
                ]
                assert len(set(vecs)) == len(vecs)

    def test_not_injective_across_partitions(self):
        # the invariant vector alone does not separate labels
        assert enhanced_number_vector(L("2[1]")) == enhanced_number_vector(
            L("1,1[0]")
        )


class TestDimensions:
    def test_dim_orbit(self):
        assert dim_orbit(P(1, 1, 1)) == 0
        assert dim_orbit(P(3)) == 6
        assert dim_orbit(P(2, 1)) == 4

    def test_dim_orbit_even(self):
        for n in range(1, 9):
            for lam in partitions_of(n):
                assert dim_orbit(lam) % 2 == 0

    def test_dim_enhanced(self):
        assert dim_enhanced_orbit(L("2,1[0]")) == 7
        assert dim_enhanced_orbit(L("2,1[2]")) == 5
        assert dim_enhanced_orbit(L("1,1,1,1[4]")) == 0

    def test_fiber_dim(self):
        assert fiber_dim(P(4)) == 0
        assert fiber_dim(P(1, 1, 1)) == 3
        assert fiber_dim(P(2, 1)) == 1

    def test_cohomology(self):
        assert cohomology_total_dim(P(1, 1, 1)) == 6
        assert cohomology_total_dim(P(3)) == 1
        assert cohomology_total_dim(P(2, 1)) == 3

    def test_bipartition(self):
        assert str(bipartition_of(L("2,1[1]"))) == "1,1|1"
        assert str(bipartition_of(L("3[0]"))) == "3|-"
        assert str(bipartition_of(L("1,1[2]"))) == "-|1,1"

    def test_bipartition_sizes(self):
        for n in range(1, 9):
            for lq in enhanced_partitions_of(n):
                bp = bipartition_of(lq)
                assert isinstance(bp, Bipartition)
                assert bp.n == n


class TestSheafData:
    def test_semismall(self):
        for n in range(1, 11):
            assert semismall_check(n)

    def test_ic_support(self):
        entries = ic_summand_support(2)
        assert [(str(lq), s) for lq, s in entries] == [("2[0]", 4), ("1,1[0]", 2)]
        assert [(str(lq), s) for lq, s in ic_summand_support(1)] == [("1[0]", 1)]
        shifts = sorted(s for _, s in ic_summand_support(3))
        assert shifts == [3, 7, 9]

    def test_ic_support_is_marker_zero(self):
        for n in range(1, 8):
            entries = ic_summand_support(n)
            assert len(entries) == len(partitions_of(n))
            assert all(lq.q == 0 for lq, _ in entries)
