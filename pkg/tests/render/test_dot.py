"""
Tests for DOT rendering
"""

from species_operads.core.lincomb import LinComb
from species_operads.operads.registry import get_registry, resolve_operad
from species_operads.render.dot import element_to_dot, lincomb_to_dot, tree_to_dot
from species_operads.trees.rooted import parse_tree_expr


class TestTreeToDot:
    """Test single tree digraphs"""

    def test_non_planar_tree(self):
        """Test the full digraph of a small tree"""
        dot = tree_to_dot(parse_tree_expr("1(2,3)"))

        assert dot == "\n".join(
            [
                'digraph "tree" {',
                "  rankdir=BT;",
                "  node [shape=circle];",
                '  "v_1" [label="1"];',
                '  "v_2" [label="2"];',
                '  "v_3" [label="3"];',
                '  "v_1" -> "v_2";',
                '  "v_1" -> "v_3";',
                "}",
            ]
        )

    def test_planar_keeps_order(self):
        """Test planar trees ask for ordered children"""
        dot = tree_to_dot(parse_tree_expr("1(3,2)", planar=True))

        assert "  ordering=out;" in dot
        assert dot.index('"v_1" -> "v_3"') < dot.index('"v_1" -> "v_2"')

    def test_graph_label(self):
        """Test the caption is quoted"""
        dot = tree_to_dot(parse_tree_expr("1"), name="t", graph_label="-1/2")

        assert dot.startswith('digraph "t" {')
        assert '  label="-1/2";' in dot


class TestLinCombToDot:
    """Test digraphs for linear combinations"""

    def test_zero(self):
        """Test the zero combination is an empty labeled digraph"""
        nap = get_registry().get("nap")

        assert lincomb_to_dot(nap, LinComb.zero()) == 'digraph "zero" {\n  label="0";\n}'

    def test_one_graph_per_term(self):
        """Test the three shuffle terms give three digraphs"""
        shmag = get_registry().get("shmag")
        x = shmag.compose(shmag.parse("1(2(3,4))"), "2", shmag.parse("a(b(c))"))

        dot = lincomb_to_dot(shmag, x)

        assert dot.count("digraph") == 3
        assert 'digraph "term1"' in dot
        assert 'digraph "term3"' in dot
        assert '  label="1";' in dot

    def test_composition_blocks(self):
        """Test block vertices are named after their labels and show q-values"""
        box = resolve_operad("box:com")
        x = box.parse("[{1,a}]([{3}])")

        dot = element_to_dot(box, x, "x")

        assert '"B_1_a" [label="{1,a}"];' in dot
        assert '"B_1_a" -> "B_3";' in dot

    def test_non_tree_element(self):
        """Test com elements render as a single box"""
        com = get_registry().get("com")

        dot = element_to_dot(com, com.parse("{1,2}"), "x", "2")

        assert 'shape=box, label="{1,2}"' in dot
        assert '  label="2";' in dot
