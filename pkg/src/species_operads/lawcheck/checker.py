"""
Exhaustive law checking.

Every check enumerates all basis elements and composition points within the
bounds, in increasing size order, compares both sides of the law exactly and
records the first failure as the witness.
"""

import logging
import time
from itertools import permutations
from math import factorial
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

from ..composition.element import CompositionElement
from ..composition.operad import CompositionOperad
from ..core.errors import (
    BoundsTooLargeError,
    InvalidBaseOperadError,
    SelectorMismatchError,
)
from ..core.labels import Bijection, FiniteSet
from ..core.lincomb import LinComb
from ..core.partitions import glue_sets
from ..operads.base import Operad
from ..operads.com import ComElement
from ..operads.nap import root_swap
from ..operads.registry import get_registry
from ..trees.rooted import TreeBase
from .oracle import ORACLES, brute_force_oracle_compose
from .types import OPERAD_AXIOMS, Bounds, Law, LawReport, Verdict, Witness

logger = logging.getLogger(__name__)

# Disjoint label alphabets for the outer element, the inserted elements and
# the relabeled copies used by naturality.
S_ALPHABET = tuple(str(i) for i in range(1, 10))
T_ALPHABET = ("a", "b", "c", "d", "e", "f")
R_ALPHABET = ("x", "y", "z", "w", "v")
S_PRIME_ALPHABET = ("p", "q", "r", "j", "k", "l")
T_PRIME_ALPHABET = ("m", "n", "o", "g", "h", "i")
STAR = "s"

Instance = Tuple[Dict[str, Any], LinComb, LinComb]


def labels_from(alphabet: Tuple[str, ...], n: int) -> FiniteSet:
    """
    The first n labels of an alphabet.

    Raises:
        BoundsTooLargeError: If the alphabet is shorter than n
    """
    if n > len(alphabet):
        raise BoundsTooLargeError(
            f"Size {n} exceeds the {len(alphabet)}-letter alphabet {','.join(alphabet)}"
        )
    return FiniteSet(alphabet[:n])


def _run(
    law: Law,
    subject: str,
    instances: Iterator[Instance],
    format_value: Callable[[Any], str],
    format_result: Callable[[LinComb], str],
    bounds: Bounds,
    expected: Verdict,
) -> LawReport:
    logger.info(f"Checking {law.value} for {subject}")
    start = time.perf_counter()
    count = 0
    witness: Optional[Witness] = None
    for inputs, lhs, rhs in instances:
        count += 1
        if lhs != rhs:
            witness = Witness(
                inputs={role: format_value(value) for role, value in inputs.items()},
                lhs=format_result(lhs),
                rhs=format_result(rhs),
            )
            break
    elapsed_ms = (time.perf_counter() - start) * 1000
    report = LawReport(
        law=law,
        subject=subject,
        instances=count,
        verdict=Verdict.COUNTEREXAMPLE if witness else Verdict.HOLDS,
        witness=witness,
        expected=expected,
        elapsed_ms=elapsed_ms,
        bounds=bounds.to_dict(),
    )
    if report.unexpected:
        logger.warning(f"Unexpected verdict: {report.summary()}")
    else:
        logger.info(report.summary())
    return report


class LawChecker:
    """
    Runs the operad laws against one operad within size bounds.

    Example:
        ```python
        checker = LawChecker(get_registry().get("nap"), Bounds())
        report = checker.check(Law.A1)
        assert report.verdict == Verdict.HOLDS
        ```
    """

    def __init__(self, operad: Operad, bounds: Optional[Bounds] = None):
        self.operad = operad
        self.bounds = bounds or Bounds.from_env()

    # Size tuples

    def _singles(self) -> Iterator[int]:
        return (a for a in range(1, self.bounds.max_s + 1) if self.bounds.fits(a))

    def _pairs(self) -> Iterator[Tuple[int, int]]:
        return (
            (a, b)
            for a in range(1, self.bounds.max_s + 1)
            for b in range(1, self.bounds.max_t + 1)
            if self.bounds.fits(a, b)
        )

    def _triples(self) -> Iterator[Tuple[int, int, int]]:
        return (
            (a, b, c)
            for a in range(1, self.bounds.max_s + 1)
            for b in range(1, self.bounds.max_t + 1)
            for c in range(1, self.bounds.max_r + 1)
            if self.bounds.fits(a, b, c)
        )

    def _dim(self, alphabet: Tuple[str, ...], n: int) -> int:
        return self.operad.dimension(labels_from(alphabet, n))

    def estimate(self, law: Law) -> int:
        """Number of instances a check will evaluate"""
        d = self._dim
        if law == Law.A1:
            return sum(
                d(S_ALPHABET, a) * d(T_ALPHABET, b) * d(R_ALPHABET, c) * a * (a - 1)
                for a, b, c in self._triples()
            )
        if law == Law.A2:
            return sum(
                d(S_ALPHABET, a) * d(T_ALPHABET, b) * d(R_ALPHABET, c) * a * b
                for a, b, c in self._triples()
            )
        if law == Law.EQ1:
            return sum(
                d(S_ALPHABET, a) * d(T_ALPHABET, b) * d(R_ALPHABET, c) * a
                for a, b, c in self._triples()
            )
        if law == Law.N1:
            return sum(
                d(S_ALPHABET, a) * d(T_ALPHABET, b) * a * factorial(a) * factorial(b)
                for a, b in self._pairs()
            )
        if law == Law.N2:
            return (self.bounds.max_s + self.bounds.max_t) ** 2
        if law == Law.U1:
            return sum(d(S_ALPHABET, a) for a in self._singles())
        return sum(d(S_ALPHABET, a) * d(T_ALPHABET, b) * a for a, b in self._pairs())

    def guard(self, law: Law) -> None:
        """
        Refuse checks estimated above the instance cap.

        Raises:
            BoundsTooLargeError: Unless allow_large is set
        """
        if self.bounds.allow_large:
            return
        estimate = self.estimate(law)
        if estimate > self.bounds.max_instances:
            raise BoundsTooLargeError(
                f"{law.value} on {self.operad.name} would check about {estimate} instances, "
                f"above the cap of {self.bounds.max_instances}. Lower the bounds or pass "
                f"--allow-large"
            )

    # Instance generators

    def _basis(self, alphabet: Tuple[str, ...], n: int) -> List[Any]:
        return self.operad.basis(labels_from(alphabet, n))

    def _a1(self) -> Iterator[Instance]:
        op = self.operad
        for a, b, c in self._triples():
            if a < 2:
                continue
            for x in self._basis(S_ALPHABET, a):
                for y in self._basis(T_ALPHABET, b):
                    for z in self._basis(R_ALPHABET, c):
                        for s in op.ground(x):
                            for s2 in op.ground(x):
                                if s == s2:
                                    continue
                                lhs = op.compose_lincomb(op.compose(x, s, y), s2, LinComb.of(z))
                                rhs = op.compose_lincomb(op.compose(x, s2, z), s, LinComb.of(y))
                                yield {"x": x, "s": s, "y": y, "s'": s2, "z": z}, lhs, rhs

    def _a2(self) -> Iterator[Instance]:
        op = self.operad
        for a, b, c in self._triples():
            for x in self._basis(S_ALPHABET, a):
                for y in self._basis(T_ALPHABET, b):
                    for z in self._basis(R_ALPHABET, c):
                        for s in op.ground(x):
                            for t in op.ground(y):
                                lhs = op.compose_lincomb(op.compose(x, s, y), t, LinComb.of(z))
                                rhs = op.compose_lincomb(LinComb.of(x), s, op.compose(y, t, z))
                                yield {"x": x, "s": s, "y": y, "t": t, "z": z}, lhs, rhs

    def _n1(self) -> Iterator[Instance]:
        op = self.operad
        for a, b in self._pairs():
            source_s = labels_from(S_ALPHABET, a)
            source_t = labels_from(T_ALPHABET, b)
            target_s = labels_from(S_PRIME_ALPHABET, a).labels
            target_t = labels_from(T_PRIME_ALPHABET, b).labels
            sigma1s = [Bijection.between(source_s, image) for image in permutations(target_s)]
            sigma2s = [Bijection.between(source_t, image) for image in permutations(target_t)]
            for x in self._basis(S_ALPHABET, a):
                for y in self._basis(T_ALPHABET, b):
                    for s in op.ground(x):
                        composite = op.compose(x, s, y)
                        for sigma1 in sigma1s:
                            moved_x = op.relabel(x, sigma1)
                            rest = sigma1.restrict(source_s.without(s))
                            for sigma2 in sigma2s:
                                lhs = op.compose(moved_x, sigma1(s), op.relabel(y, sigma2))
                                rhs = op.relabel_lincomb(composite, rest.union(sigma2))
                                inputs = {
                                    "x": x,
                                    "s": s,
                                    "y": y,
                                    "sigma1": str(sigma1),
                                    "sigma2": str(sigma2),
                                }
                                yield inputs, lhs, rhs

    def _n2(self) -> Iterator[Instance]:
        op = self.operad
        labels = (
            labels_from(S_ALPHABET, self.bounds.max_s).labels
            + labels_from(T_ALPHABET, self.bounds.max_t).labels
        )
        for first in labels:
            for second in labels:
                sigma = Bijection(((first, second),))
                lhs = LinComb.of(op.relabel(op.unit(first), sigma))
                rhs = LinComb.of(op.unit(second))
                yield {"s1": first, "s2": second}, lhs, rhs

    def _u1(self) -> Iterator[Instance]:
        op = self.operad
        for a in self._singles():
            for x in self._basis(S_ALPHABET, a):
                yield {"x": x, "star": STAR}, op.compose(op.unit(STAR), STAR, x), LinComb.of(x)

    def _u2(self) -> Iterator[Instance]:
        op = self.operad
        for a in self._singles():
            for x in self._basis(S_ALPHABET, a):
                for s in op.ground(x):
                    yield {"x": x, "s": s}, op.compose(x, s, op.unit(s)), LinComb.of(x)

    def _eq1(self) -> Iterator[Instance]:
        op = self.operad
        for a, b, c in self._triples():
            for t in self._basis(S_ALPHABET, a):
                for u in self._basis(T_ALPHABET, b):
                    for v in self._basis(R_ALPHABET, c):
                        root_u, root_v = op.root(u), op.root(v)
                        for s in op.ground(t):
                            lhs = op.compose_lincomb(op.compose(t, s, u), root_u, LinComb.of(v))
                            inner = op.compose_lincomb(op.compose(t, s, v), root_v, LinComb.of(u))
                            ground = glue_sets(
                                glue_sets(op.ground(t), s, op.ground(v)), root_v, op.ground(u)
                            )
                            rhs = op.relabel_lincomb(inner, root_swap(ground, root_u, root_v))
                            yield {"t": t, "s": s, "u": u, "v": v}, lhs, rhs

    def instances(self, law: Law) -> Iterator[Instance]:
        generators = {
            Law.A1: self._a1,
            Law.A2: self._a2,
            Law.N1: self._n1,
            Law.N2: self._n2,
            Law.U1: self._u1,
            Law.U2: self._u2,
            Law.EQ1: self._eq1,
        }
        if law not in generators:
            raise ValueError(
                f"{law.value} is not an operad law; use check_reduction or check_oracle"
            )
        if law == Law.EQ1 and not self.operad.has_roots:
            raise SelectorMismatchError(
                f"EQ1 needs an operad with rooted basis elements, not '{self.operad.name}'"
            )
        return generators[law]()

    def format_value(self, value: Any) -> str:
        return value if isinstance(value, str) else self.operad.format(value)

    def check(self, law: Law, expected: Verdict = Verdict.HOLDS) -> LawReport:
        """
        Check one law exhaustively.

        Raises:
            BoundsTooLargeError: If the estimate exceeds the instance cap
            SelectorMismatchError: For EQ1 on an operad without roots
        """
        instances = self.instances(law)
        self.guard(law)
        return _run(
            law,
            self.operad.name,
            instances,
            self.format_value,
            self.operad.format_lincomb,
            self.bounds,
            expected,
        )

    def check_all(self, laws=OPERAD_AXIOMS) -> List[LawReport]:
        return [self.check(law) for law in laws]


def _resolve(operad) -> Operad:
    return get_registry().resolve(operad) if isinstance(operad, str) else operad


def check_axiom(
    law: Law,
    operad,
    bounds: Optional[Bounds] = None,
    expected: Verdict = Verdict.HOLDS,
) -> LawReport:
    """
    Check one operad axiom.

    Args:
        law: One of A1, A2, N1, N2, U1, U2 (or EQ1)
        operad: Operad instance or selector such as "nap" or "box:com"
        bounds: Size limits, from the environment when omitted
        expected: Verdict the caller expects
    """
    return LawChecker(_resolve(operad), bounds).check(law, expected)


def check_eq1(operad, bounds: Optional[Bounds] = None, expected: Verdict = Verdict.HOLDS) -> LawReport:
    """Check the root exchange identity (t∘_s u)∘_{root u} v = φ((t∘_s v)∘_{root v} u)"""
    return check_axiom(Law.EQ1, operad, bounds, expected)


def check_composition_operad(kind: str, q, bounds: Optional[Bounds] = None) -> List[LawReport]:
    """
    Check all operad axioms for (NAP∘q, □) or (Mag∘q, ◇).

    q is checked first; the composite suite only runs on a valid q.

    Args:
        kind: "box" or "diamond"
        q: Operad instance or selector
        bounds: Base bounds; the composite run adds the total-size cap

    Raises:
        InvalidBaseOperadError: If q fails one of its own axioms
    """
    q = _resolve(q)
    bounds = bounds or Bounds.from_env()
    q_bounds = bounds.composite() if isinstance(q, CompositionOperad) else bounds
    failures = [
        report
        for report in LawChecker(q, q_bounds).check_all()
        if report.verdict != Verdict.HOLDS
    ]
    if failures:
        first = failures[0]
        raise InvalidBaseOperadError(
            f"Operad '{q.name}' fails {', '.join(r.law.value for r in failures)}; "
            f"first witness: {first.witness.to_dict() if first.witness else None}"
        )
    composite = CompositionOperad(kind, q)
    return LawChecker(composite, bounds.composite()).check_all()


def embed_singletons(tree: TreeBase) -> CompositionElement:
    """View a labeled tree as a composite element with singleton blocks over com"""
    return CompositionElement(
        tree.map_vertices(lambda label: FiniteSet.of(label)),
        tuple(
            (FiniteSet.of(label), ComElement(FiniteSet.of(label))) for label in tree.vertices
        ),
    )


def _pair_instances(op: Operad, bounds: Bounds, evaluate) -> Iterator[Instance]:
    checker = LawChecker(op, bounds)
    for a, b in checker._pairs():
        for x in op.basis(labels_from(S_ALPHABET, a)):
            for y in op.basis(labels_from(T_ALPHABET, b)):
                for s in op.ground(x):
                    lhs, rhs = evaluate(x, s, y)
                    yield {"x": x, "s": s, "y": y}, lhs, rhs


def check_reduction(kind: str, bounds: Optional[Bounds] = None) -> LawReport:
    """
    With singleton blocks over com, □ must agree with NAP and ◇ with Mag △.

    Args:
        kind: "box" or "diamond"
    """
    bounds = bounds or Bounds.from_env()
    registry = get_registry()
    tree_op = registry.get("nap" if kind == "box" else "shmag")
    composite = CompositionOperad(kind, registry.get("com"))
    checker = LawChecker(tree_op, bounds)
    checker.guard(Law.U2)

    def evaluate(x, s, y):
        lhs = composite.compose(embed_singletons(x), s, embed_singletons(y))
        rhs = tree_op.compose(x, s, y).map(embed_singletons)
        return lhs, rhs

    return _run(
        Law.RED,
        composite.name,
        _pair_instances(tree_op, bounds, evaluate),
        checker.format_value,
        composite.format_lincomb,
        bounds,
        Verdict.HOLDS,
    )


def check_oracle(operad, bounds: Optional[Bounds] = None) -> LawReport:
    """
    Compare a tree operad's composition with the edge-list oracle on every
    instance within the bounds.

    Raises:
        SelectorMismatchError: If the operad has no oracle
    """
    op = _resolve(operad)
    if op.name not in ORACLES:
        raise SelectorMismatchError(
            f"No oracle for '{op.name}'. Available: {', '.join(ORACLES)}"
        )
    bounds = bounds or Bounds.from_env()
    checker = LawChecker(op, bounds)
    checker.guard(Law.U2)

    def evaluate(x, s, y):
        return op.compose(x, s, y), brute_force_oracle_compose(op.name, x, s, y)

    return _run(
        Law.ORACLE,
        op.name,
        _pair_instances(op, bounds, evaluate),
        checker.format_value,
        op.format_lincomb,
        bounds,
        Verdict.HOLDS,
    )
