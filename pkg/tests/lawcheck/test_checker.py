"""
Tests for the exhaustive law checker
"""

import pytest

from species_operads.core.errors import (
    BoundsTooLargeError,
    InvalidBaseOperadError,
    SelectorMismatchError,
)
from species_operads.composition.operad import CompositionOperad
from species_operads.composition.operations import _compose_blocks
from species_operads.core.labels import FiniteSet, vertex_key
from species_operads.core.lincomb import LinComb
from species_operads.lawcheck.checker import (
    LawChecker,
    check_axiom,
    check_composition_operad,
    check_eq1,
    check_oracle,
    check_reduction,
    embed_singletons,
    labels_from,
)
from species_operads.lawcheck.types import OPERAD_AXIOMS, Bounds, Law, Verdict
from species_operads.operads.base import root_graft
from species_operads.operads.nap import NAPOperad
from species_operads.operads.registry import get_registry, resolve_operad
from species_operads.trees.rooted import parse_tree_expr

SMALL = Bounds(max_s=2, max_t=2, max_r=2, max_instances=500_000)


class DoubledNAP(NAPOperad):
    """NAP with every composition doubled, which breaks the unit laws"""

    name = "doubled-nap"

    def compose_trees(self, u, s, v):
        return super().compose_trees(u, s, v).scale(2)


def _graft_below_last_block(u, s, v):
    if not v.children:
        return LinComb.of(root_graft(u, s, v))
    target = max((b for b in v.vertices if b != v.root), key=vertex_key)
    return LinComb.of(u.replace_subtree(s, v.attach({target: u.find(s).children})))


class MisplacedBranchBox(CompositionOperad):
    """□ over com that hangs the branches of C_s below the last non-root block of y"""

    def __init__(self):
        super().__init__("box", get_registry().get("com"))
        self.name = "misplaced-box:com"

    def compose(self, x, s, y):
        return _compose_blocks(x, s, y, self.q, _graft_below_last_block)


class TestOperadAxioms:
    """The four tree operads satisfy every axiom"""

    @pytest.mark.parametrize("operad", ["nap", "prelie", "mag", "shmag", "com"])
    @pytest.mark.parametrize("law", OPERAD_AXIOMS)
    def test_axiom_holds(self, operad, law):
        """Test each axiom on each operad at small bounds"""
        report = check_axiom(law, operad, SMALL)

        assert report.verdict == Verdict.HOLDS
        assert report.witness is None
        assert report.instances > 0

    @pytest.mark.slow
    @pytest.mark.parametrize("operad", ["nap", "prelie", "mag", "shmag"])
    def test_full_bounds(self, operad):
        """Test all axioms at |S| ≤ 3, |T| ≤ 2, |R| ≤ 2"""
        reports = LawChecker(get_registry().get(operad), Bounds(3, 2, 2)).check_all()

        assert [r.verdict for r in reports] == [Verdict.HOLDS] * len(OPERAD_AXIOMS)

    def test_broken_operad_caught(self):
        """Test a wrong composition produces a counterexample"""
        report = LawChecker(DoubledNAP(), SMALL).check(Law.U2)

        assert report.verdict == Verdict.COUNTEREXAMPLE
        assert report.unexpected
        assert report.witness.lhs.startswith("2*")
        assert set(report.witness.inputs) == {"x", "s"}


class TestRootExchange:
    """The exchange identity separates the four tree operads"""

    @pytest.mark.parametrize("operad", ["nap", "shmag"])
    def test_holds(self, operad):
        """Test NAP and Mag with △ satisfy the identity"""
        assert check_eq1(operad, SMALL).verdict == Verdict.HOLDS

    @pytest.mark.parametrize("operad", ["prelie", "mag"])
    def test_counterexample(self, operad):
        """Test Pre-Lie and Mag with ∘ violate the identity"""
        report = check_eq1(operad, SMALL, expected=Verdict.COUNTEREXAMPLE)

        assert report.verdict == Verdict.COUNTEREXAMPLE
        assert not report.unexpected
        assert set(report.witness.inputs) == {"t", "s", "u", "v"}
        assert report.witness.lhs != report.witness.rhs

    def test_requires_roots(self):
        """Test com has no roots to exchange"""
        with pytest.raises(SelectorMismatchError):
            check_eq1("com", SMALL)


class TestCompositionOperads:
    """(NAP∘q, □) and (Mag∘q, ◇) are operads"""

    @pytest.mark.parametrize("kind", ["box", "diamond"])
    @pytest.mark.parametrize("q", ["com", "nap", "shmag"])
    def test_axioms_hold(self, kind, q):
        """Test all axioms with |S|, |T|, |R| ≤ 2 and glued size at most 4"""
        bounds = Bounds(max_s=2, max_t=2, max_r=2, max_total=4)

        reports = check_composition_operad(kind, q, bounds)

        assert [r.law for r in reports] == list(OPERAD_AXIOMS)
        assert all(r.verdict == Verdict.HOLDS for r in reports)
        assert all(r.subject == f"{kind}:{q}" for r in reports)

    @pytest.mark.slow
    @pytest.mark.parametrize("kind", ["box", "diamond"])
    @pytest.mark.parametrize("q", ["com", "nap", "shmag"])
    def test_axioms_hold_total_four(self, kind, q):
        """Test all axioms with |S| ≤ 3 and glued size at most 4"""
        reports = check_composition_operad(kind, q, Bounds(3, 2, 2, max_total=4))

        assert all(r.verdict == Verdict.HOLDS for r in reports)

    def test_associativity_composes_two_non_units(self):
        """Test default bounds give A1 instances where neither inserted element is a unit"""
        checker = LawChecker(resolve_operad("box:com"), Bounds(3, 2, 2, max_total=4))

        sizes = {
            (len(inputs["y"].ground), len(inputs["z"].ground))
            for inputs, _, _ in checker.instances(Law.A1)
        }
        assert (2, 2) in sizes

    def test_misplaced_branches_caught_by_associativity(self):
        """Test a □ that only misbehaves when y has a non-root block fails A2 but not U1, U2"""
        checker = LawChecker(MisplacedBranchBox(), Bounds(3, 2, 2, max_total=4))

        assert checker.check(Law.U1).verdict == Verdict.HOLDS
        assert checker.check(Law.U2).verdict == Verdict.HOLDS
        report = checker.check(Law.A2)
        assert report.verdict == Verdict.COUNTEREXAMPLE
        assert report.witness.lhs != report.witness.rhs

    def test_invalid_base_operad(self):
        """Test q is checked before the composite"""
        with pytest.raises(InvalidBaseOperadError):
            check_composition_operad("box", DoubledNAP(), Bounds(max_s=2, max_t=1, max_r=1))


class TestReductionAndOracle:
    """Cross-checks against NAP, Mag △ and the edge-list oracle"""

    @pytest.mark.parametrize("kind", ["box", "diamond"])
    def test_reduction(self, kind):
        """Test singleton blocks over com reduce □ to NAP and ◇ to Mag △"""
        report = check_reduction(kind, SMALL)

        assert report.law == Law.RED
        assert report.verdict == Verdict.HOLDS

    @pytest.mark.parametrize("operad", ["nap", "prelie", "mag", "shmag"])
    def test_oracle(self, operad):
        """Test the recursive and edge-list compositions agree"""
        report = check_oracle(operad, Bounds(3, 2, 2))

        assert report.law == Law.ORACLE
        assert report.verdict == Verdict.HOLDS

    def test_oracle_needs_tree_operad(self):
        """Test com has no oracle"""
        with pytest.raises(SelectorMismatchError):
            check_oracle("com", SMALL)

    def test_embed_singletons(self):
        """Test a labeled tree becomes a block tree over com"""
        element = embed_singletons(parse_tree_expr("1(2)"))

        assert element.root_block == FiniteSet.of("1")
        assert len(element.partition) == 2


class TestChecker:
    """Test checker plumbing"""

    def setup_method(self):
        """Setup a checker for NAP"""
        self.checker = LawChecker(get_registry().get("nap"), Bounds(3, 2, 2))

    def test_estimate(self):
        """Test U1 visits every element over |S| ≤ 3"""
        assert self.checker.estimate(Law.U1) == 1 + 2 + 9

    def test_estimate_matches_count(self):
        """Test the A2 estimate is the exact instance count"""
        report = self.checker.check(Law.A2)

        assert report.instances == self.checker.estimate(Law.A2)

    def test_guard(self):
        """Test checks above the instance cap are refused"""
        checker = LawChecker(get_registry().get("nap"), Bounds(3, 2, 2, max_instances=10))

        with pytest.raises(BoundsTooLargeError):
            checker.check(Law.A1)

    def test_allow_large(self):
        """Test the cap can be lifted"""
        bounds = Bounds(2, 1, 1, max_instances=1, allow_large=True)

        assert LawChecker(get_registry().get("nap"), bounds).check(Law.U2).verdict == Verdict.HOLDS

    def test_non_operad_law(self):
        """Test RED and ORACLE have no generic instances"""
        with pytest.raises(ValueError):
            self.checker.instances(Law.RED)

    def test_labels_from(self):
        """Test alphabets are cut to size and too-large sizes refused"""
        assert labels_from(("a", "b", "c"), 2) == FiniteSet.of("a", "b")
        with pytest.raises(BoundsTooLargeError):
            labels_from(("a",), 2)

    def test_report_bounds(self):
        """Test reports record the bounds they ran with"""
        report = self.checker.check(Law.U1)

        assert report.bounds == {"max_s": 3, "max_t": 2, "max_r": 2, "max_total": None}

    def test_unit_instance(self):
        """Test the left unit composes at the star label"""
        op = get_registry().get("nap")
        x = parse_tree_expr("1(2)")

        assert op.compose(op.unit("s"), "s", x) == LinComb.of(x)
