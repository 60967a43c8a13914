"""
Tests for the NAP, Pre-Lie, Mag and shuffle-Mag compositions
"""

import pytest

from species_operads.core.errors import (
    DisjointnessError,
    DomainError,
    SelectorMismatchError,
)
from species_operads.core.labels import Bijection, FiniteSet
from species_operads.core.lincomb import LinComb
from species_operads.lawcheck.checker import R_ALPHABET, S_ALPHABET, T_ALPHABET, labels_from
from species_operads.operads.mag import mag_compose
from species_operads.operads.nap import nap_asso_suppl, nap_compose, root_swap
from species_operads.operads.prelie import prelie_compose
from species_operads.operads.registry import get_registry
from species_operads.operads.shuffle_mag import shuffle_mag_compose
from species_operads.operads.shuffles import enumerate_multi_shuffles, shuffle_count
from species_operads.trees.rooted import parse_tree_expr


def tree(text: str):
    return parse_tree_expr(text)


def planar(text: str):
    return parse_tree_expr(text, planar=True)


PAIRS = [(a, b) for a in range(1, 4) for b in range(1, 3)]
TRIPLES = [(a, b, c) for a, b in PAIRS for c in range(1, 3)]
ALPHABETS = (S_ALPHABET, T_ALPHABET, R_ALPHABET)


def pair_instances(name: str, a: int, b: int):
    """Every (u, s, v) with u over a labels from S_ALPHABET and v over b from T_ALPHABET"""
    op = get_registry().get(name)
    for u in op.basis(labels_from(S_ALPHABET, a)):
        for v in op.basis(labels_from(T_ALPHABET, b)):
            for s in sorted(u.vertices):
                yield u, s, v


class TestNAP:
    """Test the NAP composition"""

    def setup_method(self):
        """Setup the registered operad"""
        self.nap = get_registry().get("nap")

    def test_branches_move_to_root_of_inserted_tree(self):
        """Test u ∘_s v hangs the branches of s below the root of v"""
        result = nap_compose(tree("1(2(3,4))"), "2", tree("a(b(c))"))

        assert result == tree("1(a(3,4,b(c)))")

    def test_compose_at_root(self):
        """Test composing at the root replaces the whole tree"""
        assert nap_compose(tree("1(2)"), "1", tree("a")) == tree("a(2)")

    def test_compose_at_leaf(self):
        """Test composing at a leaf just substitutes the tree"""
        assert nap_compose(tree("1(2)"), "2", tree("a(b)")) == tree("1(a(b))")

    def test_operad_returns_single_term(self):
        """Test the operad wraps the tree in a linear combination"""
        result = self.nap.compose(tree("1(2)"), "2", tree("a"))

        assert result == LinComb.of(tree("1(a)"))

    def test_unit(self):
        """Test the unit is a single vertex"""
        assert self.nap.unit("s") == tree("s")

    def test_dimension(self):
        """Test dim NAP[{1,2,3}] = 9"""
        assert self.nap.dimension(FiniteSet.of("1", "2", "3")) == 9

    def test_empty_basis(self):
        """Test the species is positive"""
        assert self.nap.basis(FiniteSet(())) == []

    def test_composition_point_must_exist(self):
        """Test composing at an absent label raises DomainError"""
        with pytest.raises(DomainError):
            self.nap.compose(tree("1(2)"), "9", tree("a"))

    def test_labels_must_be_disjoint(self):
        """Test overlapping label sets raise DisjointnessError"""
        with pytest.raises(DisjointnessError):
            self.nap.compose(tree("1(2)"), "2", tree("1"))

    def test_planar_operand_rejected(self):
        """Test NAP refuses planar trees"""
        with pytest.raises(SelectorMismatchError):
            self.nap.compose(planar("1(2)"), "2", tree("a"))

    def test_compose_many(self):
        """Test composing at several labels in one call"""
        x = tree("1(2,3)")
        result = self.nap.compose_many(x, {"2": tree("a(b)"), "3": tree("c")})

        assert result == LinComb.of(tree("1(a(b),c)"))

    def test_compose_many_unknown_label(self):
        """Test every insertion point must be a label of x"""
        with pytest.raises(DomainError):
            self.nap.compose_many(tree("1"), {"2": tree("a")})

    def test_relabel_lincomb(self):
        """Test relabeling extends linearly"""
        x = LinComb({tree("1(2)"): 2})
        sigma = Bijection.from_mapping({"1": "2", "2": "1"})

        assert self.nap.relabel_lincomb(x, sigma) == LinComb({tree("2(1)"): 2})


class TestRootExchange:
    """Test the exchange identity for NAP"""

    def test_sides_agree(self):
        """Test both sides of (t∘_s u)∘_{root u} v = φ((t∘_s v)∘_{root v} u)"""
        lhs, rhs = nap_asso_suppl(tree("1(2(3))"), "2", tree("a(b)"), tree("x(y)"))

        assert lhs == rhs
        assert lhs == tree("1(x(3,b,y))")

    def test_root_swap(self):
        """Test the relabeling renames one label and fixes the rest"""
        sigma = root_swap(FiniteSet.of("1", "a"), "a", "x")

        assert sigma.mapping == {"1": "1", "a": "x"}

    @pytest.mark.parametrize("a,b,c", TRIPLES)
    def test_sides_agree_everywhere(self, a, b, c):
        """Test the exchange identity on every t, s, u, v within the sizes"""
        nap = get_registry().get("nap")
        count = 0
        for t, s, u in pair_instances("nap", a, b):
            for v in nap.basis(labels_from(R_ALPHABET, c)):
                lhs, rhs = nap_asso_suppl(t, s, u, v)
                assert lhs == rhs, (t, s, u, v)
                count += 1

        sizes = zip(ALPHABETS, (a, b, c))
        dims = [nap.dimension(labels_from(alphabet, n)) for alphabet, n in sizes]
        assert count == dims[0] * dims[1] * dims[2] * a


class TestPreLie:
    """Test the Pre-Lie composition"""

    def test_sum_over_attachment_maps(self):
        """Test one term per map from the branches of s to the vertices of v"""
        result = prelie_compose(tree("1(2(3,4))"), "2", tree("a(b)"))

        assert result == LinComb.sum_of(
            [
                tree("1(a(3,4,b))"),
                tree("1(a(3,b(4)))"),
                tree("1(a(4,b(3)))"),
                tree("1(a(b(3,4)))"),
            ]
        )

    @pytest.mark.parametrize(
        "u,s,v",
        [
            ("1(2(3,4))", "2", "a(b)"),
            ("1(2,3)", "1", "a(b,c)"),
            ("1", "1", "a(b)"),
            ("1(2(3),4)", "2", "a(b(c))"),
        ],
    )
    def test_total_multiplicity(self, u, s, v):
        """Test the number of terms counted with multiplicity is |Ver(v)|^|In(s,u)|"""
        u_tree, v_tree = tree(u), tree(v)
        result = prelie_compose(u_tree, s, v_tree)

        assert result.total_multiplicity() == len(v_tree) ** len(u_tree.children_of(s))

    @pytest.mark.parametrize("a,b", PAIRS)
    def test_total_multiplicity_everywhere(self, a, b):
        """Test |Ver(v)|^|In(s,u)| terms with multiplicity on every instance within the sizes"""
        for u, s, v in pair_instances("prelie", a, b):
            result = prelie_compose(u, s, v)

            assert result.total_multiplicity() == len(v) ** len(u.children_of(s)), (u, s, v)

    def test_leaf_composition_has_one_term(self):
        """Test composing at a leaf has no branches to move"""
        assert prelie_compose(tree("1(2)"), "2", tree("a(b)")) == LinComb.of(tree("1(a(b))"))


class TestMag:
    """Test the Mag composition"""

    def test_inserted_children_come_first(self):
        """Test the root of v keeps its children left of the branches of s"""
        result = mag_compose(planar("1(2(3,4))"), "2", planar("a(b)"))

        assert str(result) == "1(a(b,3,4))"

    def test_position_among_siblings_kept(self):
        """Test the inserted tree takes the place of s"""
        assert str(mag_compose(planar("1(2,5)"), "2", planar("a"))) == "1(a,5)"
        assert str(mag_compose(planar("1(5,2)"), "2", planar("a"))) == "1(5,a)"


class TestShuffleMag:
    """Test the shuffle composition △"""

    def setup_method(self):
        """Setup the registered operad"""
        self.shmag = get_registry().get("shmag")

    def test_one_term_per_shuffle(self):
        """Test 1(2(3,4)) △_2 a(b(c)) has three terms"""
        result = shuffle_mag_compose(planar("1(2(3,4))"), "2", planar("a(b(c))"))

        assert result == LinComb.sum_of(
            [
                planar("1(a(3,4,b(c)))"),
                planar("1(a(3,b(c),4))"),
                planar("1(a(b(c),3,4))"),
            ]
        )

    def test_canonical_text(self):
        """Test the result prints in canonical order"""
        result = self.shmag.compose(planar("1(2(3,4))"), "2", planar("a(b(c))"))

        assert self.shmag.format_lincomb(result) == (
            "1(a(3,4,b(c))) + 1(a(3,b(c),4)) + 1(a(b(c),3,4))"
        )

    def test_no_branches_gives_one_term(self):
        """Test shuffling with an empty sequence"""
        result = shuffle_mag_compose(planar("1(2)"), "2", planar("a(b)"))

        assert result == LinComb.of(planar("1(a(b))"))

    @pytest.mark.parametrize("a,b", PAIRS)
    def test_agrees_with_mag_without_two_branch_lists(self, a, b):
        """Test △ and the Mag composition agree when s or the root of v has no branches"""
        checked = 0
        for u, s, v in pair_instances("shmag", a, b):
            if u.children_of(s) and v.children:
                continue
            assert shuffle_mag_compose(u, s, v) == LinComb.of(mag_compose(u, s, v)), (u, s, v)
            checked += 1

        assert checked > 0

    def test_iterated_root_composition_is_multinomial(self):
        """Test composing at the root twice gives every shuffle of three branch lists"""
        once = self.shmag.compose(planar("1(2,3)"), "1", planar("a(b,c)"))
        twice = self.shmag.compose_lincomb(once, "a", LinComb.of(planar("x(y,w)")))

        expected = LinComb.sum_of(
            [
                planar(f"x({','.join(shuffle.sequence)})")
                for shuffle in enumerate_multi_shuffles(("2", "3"), ("b", "c"), ("y", "w"))
            ]
        )
        assert len(twice) == shuffle_count(2, 2, 2) == 90
        assert twice == expected
        assert twice.total_multiplicity() == 90

    def test_parse_lincomb(self):
        """Test operands may be linear combinations"""
        x = self.shmag.parse_lincomb("2*1(2) - 2(1)")

        assert x.coefficient(planar("1(2)")) == 2
        assert x.coefficient(planar("2(1)")) == -1


class TestCom:
    """Test the commutative operad"""

    def setup_method(self):
        """Setup the registered operad"""
        self.com = get_registry().get("com")

    def test_compose(self):
        """Test composition glues the label sets"""
        x = self.com.parse("{1,2}")
        y = self.com.parse("{a}")

        assert self.com.format_lincomb(self.com.compose(x, "2", y)) == "{1,a}"

    def test_parse_canonicalizes(self):
        """Test label order in the text does not matter"""
        assert self.com.format(self.com.parse("{2, 1}")) == "{1,2}"

    def test_dimension_one(self):
        """Test one element per nonempty set"""
        assert self.com.dimension(FiniteSet.of("1", "2", "3")) == 1

    def test_has_no_roots(self):
        """Test com elements have no root label"""
        with pytest.raises(TypeError):
            self.com.root(self.com.unit("1"))
