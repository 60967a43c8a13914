"""
Tests for set partitions and glued sets
"""

import pytest

from species_operads.core.errors import DisjointnessError, DomainError, PartitionError
from species_operads.core.labels import Bijection, FiniteSet
from species_operads.core.partitions import (
    Partition,
    glue_partitions,
    glue_sets,
    set_partitions,
)


class TestGlueSets:
    """Test S ⊔_s T"""

    def setup_method(self):
        """Setup S = {1,2,3}"""
        self.S = FiniteSet.of("1", "2", "3")

    def test_replaces_label_by_set(self):
        """Test s is replaced by every label of T"""
        assert glue_sets(self.S, "2", FiniteSet.of("a", "b")) == FiniteSet.of("1", "3", "a", "b")

    def test_inserted_set_may_reuse_s(self):
        """Test T may contain the label s itself"""
        assert glue_sets(self.S, "2", FiniteSet.of("2", "a")) == FiniteSet.of("1", "2", "3", "a")

    def test_overlap_rejected(self):
        """Test labels shared by S ∖ {s} and T raise DisjointnessError"""
        with pytest.raises(DisjointnessError):
            glue_sets(self.S, "2", FiniteSet.of("3", "a"))

    def test_s_must_belong_to_S(self):
        """Test a composition point outside S raises DomainError"""
        with pytest.raises(DomainError):
            glue_sets(self.S, "x", FiniteSet.of("a"))


class TestPartition:
    """Test Partition validation and helpers"""

    def test_blocks_sorted_by_minimal_label(self):
        """Test block order is canonical"""
        pi = Partition.of(["3"], ["2", "1"])

        assert pi.blocks == (FiniteSet.of("1", "2"), FiniteSet.of("3"))
        assert str(pi) == "{{1,2},{3}}"

    def test_overlapping_blocks_rejected(self):
        """Test blocks sharing a label raise PartitionError"""
        with pytest.raises(PartitionError):
            Partition.of(["1", "2"], ["2", "3"])

    def test_empty_block_rejected(self):
        """Test empty blocks raise PartitionError"""
        with pytest.raises(PartitionError):
            Partition((FiniteSet(()),))

    def test_block_of(self):
        """Test finding the block of a label"""
        pi = Partition.of(["1", "2"], ["3"])

        assert pi.block_of("2") == FiniteSet.of("1", "2")
        with pytest.raises(DomainError):
            pi.block_of("9")

    def test_relabel(self):
        """Test pushing a bijection through the blocks"""
        pi = Partition.of(["1", "2"], ["3"])
        sigma = Bijection.from_mapping({"1": "c", "2": "a", "3": "b"})

        assert pi.relabel(sigma) == Partition.of(["a", "c"], ["b"])

    def test_glue_partitions_merges_designated_block(self):
        """Test the block of s merges with the designated block"""
        pi = Partition.of(["1", "2"], ["3"])
        rho = Partition.of(["a"], ["b", "c"])

        glued = glue_partitions(pi, "2", rho, FiniteSet.of("a"))

        assert glued == Partition.of(["1", "a"], ["3"], ["b", "c"])

    def test_glue_partitions_requires_block_of_rho(self):
        """Test the designated block must be a block of rho"""
        pi = Partition.of(["1", "2"])
        rho = Partition.of(["a", "b"])

        with pytest.raises(PartitionError):
            glue_partitions(pi, "2", rho, FiniteSet.of("a"))


class TestSetPartitions:
    """Test exhaustive enumeration of set partitions"""

    @pytest.mark.parametrize("n,bell", [(1, 1), (2, 2), (3, 5), (4, 15), (5, 52)])
    def test_bell_numbers(self, n, bell):
        """Test the number of partitions of an n-set is the Bell number"""
        ground = FiniteSet(tuple(str(i) for i in range(1, n + 1)))
        partitions = list(set_partitions(ground))

        assert len(partitions) == bell
        assert len(set(partitions)) == bell
        assert all(p.ground == ground for p in partitions)

    def test_empty_set_has_one_partition(self):
        """Test the empty set has exactly the empty partition"""
        assert list(set_partitions(FiniteSet(()))) == [Partition(())]
