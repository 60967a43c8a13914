"""
Independent implementation of the four tree compositions.

Trees are flattened to edge lists (child, parent, position), the edges at the
composition point are rewritten, and the result is rebuilt from the edge
list. The law checker compares these results with the recursive grafting in
the operad modules.
"""

from collections import Counter, defaultdict
from itertools import permutations, product
from typing import Dict, List, Tuple

from ..core.errors import DisjointnessError, DomainError, OperadNotFoundError
from ..core.labels import vertex_key
from ..core.lincomb import LinComb
from ..trees.rooted import TreeBase, Vertex

Edge = Tuple[Vertex, Vertex, Tuple[int, ...]]


def _flatten(tree: TreeBase) -> List[Edge]:
    return [(child, parent, (0, position)) for child, parent, position in tree.edges()]


def _rebuild(cls, root: Vertex, edges: List[Edge]) -> TreeBase:
    children: Dict[Vertex, List[Tuple[Tuple[int, ...], Vertex]]] = defaultdict(list)
    for child, parent, position in edges:
        children[parent].append((position, child))
    ordered = {parent: [child for _, child in sorted(items)] for parent, items in children.items()}
    return cls.from_children_map(root, ordered)


def _split(u: TreeBase, s: Vertex, v: TreeBase):
    """Edges of u away from s, the branch tops of s and the new root"""
    if s not in u:
        raise DomainError(f"Vertex {s} is not in {u.to_expr()}")
    if (u.vertices - {s}) & v.vertices:
        raise DisjointnessError(f"{u.to_expr()} and {v.to_expr()} share vertices")
    kept: List[Edge] = []
    branch_tops: List[Vertex] = []
    for child, parent, position in u.edges():
        if parent == s:
            branch_tops.append(child)
        elif child == s:
            kept.append((v.root, parent, (0, position)))
        else:
            kept.append((child, parent, (0, position)))
    root = v.root if u.root == s else u.root
    return kept + _flatten(v), branch_tops, root


def oracle_root_graft(u: TreeBase, s: Vertex, v: TreeBase) -> LinComb:
    """NAP and Mag: branches of s go after the root children of v"""
    edges, tops, root = _split(u, s, v)
    edges += [(top, v.root, (1, index)) for index, top in enumerate(tops)]
    return LinComb.of(_rebuild(type(u), root, edges))


def oracle_prelie(u: TreeBase, s: Vertex, v: TreeBase) -> LinComb:
    edges, tops, root = _split(u, s, v)
    targets = sorted(v.vertices, key=vertex_key)
    counts: Counter = Counter()
    for choice in product(targets, repeat=len(tops)):
        extra = [(top, target, (1, index)) for index, (top, target) in enumerate(zip(tops, choice))]
        counts[_rebuild(type(u), root, edges + extra)] += 1
    return LinComb(counts)


def _keeps_order(order: Tuple[Vertex, ...], sequence: List[Vertex]) -> bool:
    members = set(sequence)
    return [vertex for vertex in order if vertex in members] == sequence


def oracle_shuffle_mag(u: TreeBase, s: Vertex, v: TreeBase) -> LinComb:
    """Filter all orderings of the root branches down to the shuffles"""
    edges, tops, root = _split(u, s, v)
    own = list(v.root_children)
    base = [edge for edge in edges if edge[1] != v.root or edge[0] not in own]
    terms = []
    for order in permutations(own + tops):
        if _keeps_order(order, own) and _keeps_order(order, tops):
            extra = [(vertex, v.root, (0, index)) for index, vertex in enumerate(order)]
            terms.append(_rebuild(type(u), root, base + extra))
    return LinComb.sum_of(terms)


ORACLES = {
    "nap": oracle_root_graft,
    "mag": oracle_root_graft,
    "prelie": oracle_prelie,
    "shmag": oracle_shuffle_mag,
}


def brute_force_oracle_compose(kind: str, t: TreeBase, s: Vertex, u: TreeBase) -> LinComb:
    """
    Compose two trees by edge-list surgery.

    Args:
        kind: One of nap, prelie, mag, shmag
        t: Outer tree
        s: Composition point
        u: Inserted tree

    Raises:
        OperadNotFoundError: If kind has no oracle
    """
    if kind not in ORACLES:
        raise OperadNotFoundError(
            f"No oracle for '{kind}'. Available oracles: {', '.join(ORACLES)}"
        )
    return ORACLES[kind](t, s, u)
