"""
Tests for the edge-list composition oracle
"""

import pytest

from species_operads.core.errors import DisjointnessError, OperadNotFoundError
from species_operads.lawcheck.oracle import brute_force_oracle_compose
from species_operads.operads.registry import get_registry
from species_operads.trees.rooted import parse_tree_expr


class TestOracle:
    """Test the oracle against the recursive compositions"""

    def setup_method(self):
        """Setup the registry"""
        self.registry = get_registry()

    @pytest.mark.parametrize("kind", ["nap", "prelie"])
    def test_non_planar(self, kind):
        """Test NAP and Pre-Lie agree with the recursive version"""
        u, v = parse_tree_expr("1(2(3,4))"), parse_tree_expr("a(b)")

        expected = self.registry.get(kind).compose(u, "2", v)

        assert brute_force_oracle_compose(kind, u, "2", v) == expected

    def test_shuffle_mag(self):
        """Test the oracle yields one term per shuffle"""
        u = parse_tree_expr("1(2(3,4))", planar=True)
        v = parse_tree_expr("a(b(c))", planar=True)

        result = brute_force_oracle_compose("shmag", u, "2", v)

        assert len(result) == 3
        assert result == self.registry.get("shmag").compose(u, "2", v)

    def test_disjointness(self):
        """Test overlapping trees are refused"""
        with pytest.raises(DisjointnessError):
            brute_force_oracle_compose("nap", parse_tree_expr("1(2)"), "2", parse_tree_expr("1"))

    def test_unknown_kind(self):
        """Test kinds without an oracle list the available ones"""
        with pytest.raises(OperadNotFoundError) as excinfo:
            brute_force_oracle_compose("com", parse_tree_expr("1"), "1", parse_tree_expr("a"))

        assert "Available oracles" in str(excinfo.value)
