"""
DOT output: one digraph per term of a linear combination.

Roots are drawn at the bottom (rankdir=BT) and planar trees keep their
children order with ordering=out.
"""

from typing import Any, Callable, List

from ..composition.element import CompositionElement
from ..core.labels import FiniteSet
from ..core.lincomb import LinComb
from ..core.text import format_coefficient
from ..operads.base import Operad
from ..trees.rooted import TreeBase


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _vertex_name(vertex: Any) -> str:
    if isinstance(vertex, FiniteSet):
        return "B_" + "_".join(vertex.labels)
    return f"v_{vertex}"


def tree_to_dot(
    tree: TreeBase,
    name: str = "tree",
    graph_label: str = "",
    vertex_label: Callable[[Any], str] = str,
) -> str:
    """
    Render one tree as a DOT digraph, edges pointing from parent to child.

    Args:
        tree: Planar or non-planar tree, with label or block vertices
        name: Graph name
        graph_label: Caption drawn under the graph (the coefficient)
        vertex_label: Text of each vertex
    """
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;"]
    if tree.planar:
        lines.append("  ordering=out;")
    if graph_label:
        lines.append(f"  label={_quote(graph_label)};")
    lines.append("  node [shape=circle];")
    for vertex in tree.preorder():
        lines.append(f"  {_quote(_vertex_name(vertex))} [label={_quote(vertex_label(vertex))}];")
    for subtree in tree.subtrees():
        for child in subtree.children:
            lines.append(
                f"  {_quote(_vertex_name(subtree.label))} -> {_quote(_vertex_name(child.label))};"
            )
    lines.append("}")
    return "\n".join(lines)


def element_to_dot(operad: Operad, element: Any, name: str, graph_label: str = "") -> str:
    """Render one basis element of any operad"""
    if isinstance(element, CompositionElement):
        values = element.value_map()
        q = getattr(operad, "q")
        return tree_to_dot(
            element.tree,
            name,
            graph_label,
            lambda block: q.format(values[block]),
        )
    if isinstance(element, TreeBase):
        return tree_to_dot(element, name, graph_label)
    lines = [
        f"digraph {_quote(name)} {{",
        f"  label={_quote(graph_label)};" if graph_label else "",
        f"  {_quote('element')} [shape=box, label={_quote(operad.format(element))}];",
        "}",
    ]
    return "\n".join(line for line in lines if line)


def lincomb_to_dot(operad: Operad, x: LinComb) -> str:
    """
    One digraph per term, in canonical term order, labeled by its coefficient.

    The zero combination renders as an empty digraph.
    """
    if not x:
        return 'digraph "zero" {\n  label="0";\n}'
    terms = sorted(x.items(), key=lambda item: operad.format(item[0]))
    graphs: List[str] = []
    for index, (element, coefficient) in enumerate(terms, start=1):
        graphs.append(
            element_to_dot(operad, element, f"term{index}", format_coefficient(coefficient))
        )
    return "\n\n".join(graphs)
