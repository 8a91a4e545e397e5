"""Labeled graphs defining generalized Baumslag-Solitar (GBS) groups.

A labeled graph is a finite connected multigraph whose edges carry a
direction and a nonzero integer label at each end.  With a maximal subtree
fixed, the group is generated by one ``g_v`` per vertex and one ``t_e`` per
non-tree edge, subject to

* ``g_{e(1)}^{l+} = g_{e(-1)}^{l-}``            for tree edges,
* ``t_e^-1 g_{e(1)}^{l+} t_e = g_{e(-1)}^{l-}``  for the others,

where ``e(1)`` is the ``from`` end carrying ``l+`` and ``e(-1)`` the ``to``
end carrying ``l-``.

All vertex groups are commensurable.  We measure them against ``g_root``
with rational weights ``w`` satisfying ``l+ w(e(1)) = l- w(e(-1))`` on the
tree; the modular homomorphism on ``t_e`` is then the ratio of the two
measured edge subgroups.
"""

from __future__ import annotations

import enum
import json
import math
import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterator, Mapping

from .errors import DomainError, InternalError, ParseError, PreconditionError
from .words import GroupWord

__all__ = [
    "Edge",
    "LabeledGraph",
    "SpanningData",
    "Kind",
    "Classification",
    "ModularClass",
    "ModularImage",
    "RadicalData",
    "XElement",
    "XkElement",
    "maximal_subtree",
    "spanning_data",
    "elementary_collapse",
    "collapsible_ends",
    "is_reduced",
    "normalize_signs",
    "is_tree_positive",
    "reduce",
    "prepare",
    "classify",
    "modular_image",
    "cyclic_radical",
    "generators",
    "relations",
    "tau_images",
    "tau_evaluate",
    "chi_k_map",
    "tau_k_evaluate",
    "x_multiply",
    "x_inverse",
    "xk_multiply",
]


@dataclass(frozen=True)
class Edge:
    id: str
    src: str
    dst: str
    label_src: int
    label_dst: int

    @property
    def is_loop(self) -> bool:
        return self.src == self.dst

    def end(self, eps: int) -> str:
        return self.src if eps == 1 else self.dst

    def label(self, eps: int) -> int:
        return self.label_src if eps == 1 else self.label_dst

    def to_json(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "from": self.src,
            "to": self.dst,
            "label_from": self.label_src,
            "label_to": self.label_dst,
        }


@dataclass(frozen=True)
class LabeledGraph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        if not self.vertices:
            raise DomainError("a labeled graph needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise DomainError("duplicate vertex ids")
        if len({e.id for e in self.edges}) != len(self.edges):
            raise DomainError("duplicate edge ids")
        vset = set(self.vertices)
        for e in self.edges:
            if e.src not in vset or e.dst not in vset:
                raise DomainError(f"edge {e.id} has an endpoint outside the vertex set")
            if e.label_src == 0 or e.label_dst == 0:
                raise DomainError(f"edge {e.id} has a zero label")
        if len(_component(self, self.vertices[0])) != len(self.vertices):
            raise DomainError("labeled graph is not connected")

    @classmethod
    def from_json(cls, data: str | Mapping[str, Any]) -> LabeledGraph:
        try:
            if isinstance(data, str):
                data = json.loads(data)
            vertices = data["vertices"]
            if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
                raise ParseError("'vertices' must be a list of strings")
            edges = []
            for item in data.get("edges", []):
                fields = (item["id"], item["from"], item["to"])
                labels = (item["label_from"], item["label_to"])
                if not all(isinstance(f, str) for f in fields):
                    raise ParseError("edge id, from and to must be strings")
                if not all(isinstance(x, int) and not isinstance(x, bool) for x in labels):
                    raise ParseError("edge labels must be integers")
                edges.append(Edge(*fields, *labels))
            return cls(tuple(vertices), tuple(edges))
        except (KeyError, TypeError, json.JSONDecodeError) as exc:
            raise ParseError(f"malformed graph JSON: {exc}") from exc
        except DomainError as exc:
            raise ParseError(str(exc)) from exc

    def to_json(self) -> dict[str, Any]:
        return {"vertices": list(self.vertices), "edges": [e.to_json() for e in self.edges]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def edge(self, edge_id: str) -> Edge:
        for e in self.edges:
            if e.id == edge_id:
                return e
        raise KeyError(edge_id)

    def ends(self) -> Iterator[tuple[Edge, int]]:
        for e in self.edges:
            yield e, 1
            yield e, -1

    def labels(self) -> list[int]:
        return [e.label(eps) for e, eps in self.ends()]


def _component(G: LabeledGraph, start: str) -> set[str]:
    adj: dict[str, list[str]] = {v: [] for v in G.vertices}
    for e in G.edges:
        adj[e.src].append(e.dst)
        adj[e.dst].append(e.src)
    seen, todo = {start}, [start]
    while todo:
        for w in adj[todo.pop()]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


@dataclass(frozen=True)
class SpanningData:
    tree: frozenset[str]
    root: str
    weights: Mapping[str, Fraction] = field(hash=False)

    def non_tree_edges(self, G: LabeledGraph) -> list[Edge]:
        return [e for e in G.edges if e.id not in self.tree]


def spanning_data(G: LabeledGraph, tree: frozenset[str], root: str) -> SpanningData:
    """Weights for a given maximal subtree, propagated from ``w(root) = 1``."""
    tree_edges = [e for e in G.edges if e.id in tree]
    if len(tree_edges) != len(G.vertices) - 1 or any(e.is_loop for e in tree_edges):
        raise DomainError("edge set is not a maximal subtree")
    weights = {root: Fraction(1)}
    pending = deque([root])
    while pending:
        v = pending.popleft()
        for e in tree_edges:
            if e.src == v and e.dst not in weights:
                weights[e.dst] = weights[v] * e.label_src / e.label_dst
                pending.append(e.dst)
            elif e.dst == v and e.src not in weights:
                weights[e.src] = weights[v] * e.label_dst / e.label_src
                pending.append(e.src)
    if len(weights) != len(G.vertices):
        raise DomainError("edge set is not a maximal subtree")
    return SpanningData(frozenset(tree), root, weights)


def maximal_subtree(G: LabeledGraph, root: str | None = None) -> SpanningData:
    """Breadth-first maximal subtree from ``root`` (first vertex by default)."""
    root = G.vertices[0] if root is None else root
    seen, tree = {root}, set()
    pending = deque([root])
    while pending:
        v = pending.popleft()
        for e in G.edges:
            if e.is_loop or v not in (e.src, e.dst):
                continue
            other = e.dst if e.src == v else e.src
            if other not in seen:
                seen.add(other)
                tree.add(e.id)
                pending.append(other)
    return spanning_data(G, frozenset(tree), root)


def elementary_collapse(G: LabeledGraph, edge_id: str, eps: int) -> LabeledGraph:
    """Contract the non-loop edge ``edge_id`` whose ``eps`` end carries a label of absolute value 1.

    The vertex ``e(eps)`` is absorbed into ``e(-eps)`` and every other label at
    ``e(eps)`` is multiplied by ``l(eps) * l(-eps)``.
    """
    e = G.edge(edge_id)
    if e.is_loop:
        raise PreconditionError(f"edge {edge_id} is a loop")
    if abs(e.label(eps)) != 1:
        raise PreconditionError(f"edge {edge_id} has label {e.label(eps)} at end {eps:+d}, not +-1")
    gone, keep = e.end(eps), e.end(-eps)
    factor = e.label(eps) * e.label(-eps)
    edges = []
    for f in G.edges:
        if f.id == edge_id:
            continue
        src, dst, ls, ld = f.src, f.dst, f.label_src, f.label_dst
        if src == gone:
            src, ls = keep, ls * factor
        if dst == gone:
            dst, ld = keep, ld * factor
        edges.append(Edge(f.id, src, dst, ls, ld))
    return LabeledGraph(tuple(v for v in G.vertices if v != gone), tuple(edges))


def collapsible_ends(G: LabeledGraph) -> list[tuple[str, int]]:
    """``(edge id, end)`` pairs admitting an elementary collapse, sorted."""
    found = [(e.id, eps) for e, eps in G.ends() if not e.is_loop and abs(e.label(eps)) == 1]
    return sorted(found, key=lambda item: (item[0], -item[1]))


def is_reduced(G: LabeledGraph) -> bool:
    return not collapsible_ends(G)


def reduce(G: LabeledGraph, rng: random.Random | None = None) -> LabeledGraph:
    """Collapse until reduced; the smallest ``(edge id, end)`` each step, or a random one with ``rng``."""
    while True:
        options = collapsible_ends(G)
        if not options:
            return G
        edge_id, eps = rng.choice(options) if rng is not None else options[0]
        G = elementary_collapse(G, edge_id, eps)


def normalize_signs(G: LabeledGraph, S: SpanningData) -> LabeledGraph:
    """Apply admissible sign changes making every label on a tree edge positive.

    Walking the tree away from the root: an edge whose parent-side label is
    negative has its generator inverted (both ends flip), then a negative
    child-side label is fixed by inverting the child's vertex generator.
    """
    edges = {e.id: e for e in G.edges}
    order = list(G.edges)

    def flip_edge(eid: str) -> None:
        e = edges[eid]
        edges[eid] = Edge(e.id, e.src, e.dst, -e.label_src, -e.label_dst)

    def flip_vertex(v: str) -> None:
        for eid, e in list(edges.items()):
            ls = -e.label_src if e.src == v else e.label_src
            ld = -e.label_dst if e.dst == v else e.label_dst
            edges[eid] = Edge(e.id, e.src, e.dst, ls, ld)

    seen = {S.root}
    pending = deque([S.root])
    while pending:
        v = pending.popleft()
        for f in order:
            e = edges[f.id]
            if e.id not in S.tree or v not in (e.src, e.dst):
                continue
            child = e.dst if e.src == v else e.src
            if child in seen:
                continue
            seen.add(child)
            parent_eps = 1 if e.src == v else -1
            if e.label(parent_eps) < 0:
                flip_edge(e.id)
            if edges[e.id].label(-parent_eps) < 0:
                flip_vertex(child)
            pending.append(child)
    return LabeledGraph(G.vertices, tuple(edges[e.id] for e in order))


def is_tree_positive(G: LabeledGraph, S: SpanningData) -> bool:
    return all(e.label_src > 0 and e.label_dst > 0 for e in G.edges if e.id in S.tree)


def prepare(G: LabeledGraph, rng: random.Random | None = None) -> tuple[LabeledGraph, SpanningData]:
    """Reduce, choose a maximal subtree and make the graph positive on it."""
    R = reduce(G, rng)
    S = maximal_subtree(R)
    R = normalize_signs(R, S)
    return R, spanning_data(R, S.tree, S.root)


class Kind(enum.Enum):
    INFINITE_CYCLIC = "InfiniteCyclic"
    BS_1_1 = "BS_1_1"
    BS_1_MINUS1 = "BS_1_minus1"
    SOLVABLE_BS1N = "SolvableBS1n"
    NON_SOLVABLE = "NonSolvable"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    n: int | None = None

    @property
    def elementary(self) -> bool:
        return self.kind in (Kind.INFINITE_CYCLIC, Kind.BS_1_1, Kind.BS_1_MINUS1)

    def __str__(self) -> str:
        if self.kind is Kind.SOLVABLE_BS1N:
            return f"{self.kind.value}({self.n})"
        return self.kind.value


def classify(G: LabeledGraph) -> Classification:
    """Isomorphism type of the group of a reduced graph, as far as solvability goes.

    A single vertex is Z; a single vertex with one loop carrying a unit label
    at one end is BS(1,n); every other reduced graph is declared non-solvable.
    """
    if not is_reduced(G):
        raise PreconditionError("classify needs a reduced graph")
    if len(G.vertices) == 1 and not G.edges:
        return Classification(Kind.INFINITE_CYCLIC)
    if len(G.vertices) == 1 and len(G.edges) == 1:
        e = G.edges[0]
        n = None
        # t^-1 g^(+-1) t = g^l  and  t g^(+-1) t^-1 = g^l  both give BS(1, +-l)
        if abs(e.label_src) == 1:
            n = e.label_dst * e.label_src
        elif abs(e.label_dst) == 1:
            n = e.label_src * e.label_dst
        if n == 1:
            return Classification(Kind.BS_1_1, 1)
        if n == -1:
            return Classification(Kind.BS_1_MINUS1, -1)
        if n is not None:
            return Classification(Kind.SOLVABLE_BS1N, n)
    return Classification(Kind.NON_SOLVABLE)


class ModularClass(enum.Enum):
    TRIVIAL = "Trivial"
    PLUS_MINUS_ONE = "PlusMinusOne"
    OTHER = "Other"


@dataclass(frozen=True)
class ModularImage:
    """Images of the stable letters ``t_e`` under the modular homomorphism."""

    edge_ids: tuple[str, ...]
    generators: tuple[Fraction, ...]

    @property
    def classification(self) -> ModularClass:
        if all(q == 1 for q in self.generators):
            return ModularClass.TRIVIAL
        if all(abs(q) == 1 for q in self.generators):
            return ModularClass.PLUS_MINUS_ONE
        return ModularClass.OTHER

    def delta(self, edge_id: str) -> Fraction:
        return self.generators[self.edge_ids.index(edge_id)]


def modular_image(G: LabeledGraph, S: SpanningData) -> ModularImage:
    """``Delta(t_e) = (l- w(e(-1))) / (l+ w(e(1)))`` for each non-tree edge."""
    if is_reduced(G) and classify(G).kind is Kind.INFINITE_CYCLIC:
        raise PreconditionError("the modular homomorphism is undefined for the infinite cyclic group")
    w = S.weights
    pairs = [
        (e.id, (e.label_dst * w[e.dst]) / (e.label_src * w[e.src]))
        for e in S.non_tree_edges(G)
    ]
    return ModularImage(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))


@dataclass(frozen=True)
class RadicalData:
    """Indices ``mu(v) = [G_v : C]`` of the cyclic radical ``C`` and their lcm ``mu``."""

    radical_exponent: Mapping[str, int] = field(hash=False)
    mu: int


def cyclic_radical(G: LabeledGraph, S: SpanningData) -> RadicalData:
    """Cyclic radical of a reduced, tree-positive, non-solvable graph with ``Im Delta`` in ``{1, -1}``.

    The radical is the intersection of all edge subgroups.  Measured in units of
    ``g_root`` the edge subgroup at an end is generated by ``|l w|``; the
    intersection is generated by ``L``, the least rational that is an integer
    multiple of every such value, i.e. lcm of numerators over gcd of
    denominators.  Then ``mu(v) = L / w(v)``.
    """
    if classify(G).kind is not Kind.NON_SOLVABLE:
        raise PreconditionError("the cyclic radical data is defined here for non-solvable groups only")
    if modular_image(G, S).classification is ModularClass.OTHER:
        raise PreconditionError("Im Delta must lie in {1, -1}")
    if not is_tree_positive(G, S):
        raise PreconditionError("graph must be positive on the maximal subtree")
    values = [abs(e.label(eps) * S.weights[e.end(eps)]) for e, eps in G.ends()]
    num = math.lcm(*(q.numerator for q in values))
    den = math.gcd(*(q.denominator for q in values))
    level = Fraction(num, den)
    exps = {}
    for v in G.vertices:
        m = level / abs(S.weights[v])
        if m.denominator != 1 or m < 1:
            raise InternalError(f"non-integral radical index {m} at vertex {v}")
        exps[v] = int(m)
    mu = math.lcm(*exps.values())
    if math.prod(abs(x) for x in G.labels()) % mu:
        raise InternalError(f"mu = {mu} does not divide the product of labels")
    return RadicalData(exps, mu)


def generators(G: LabeledGraph, S: SpanningData) -> list[str]:
    return [f"g.{v}" for v in G.vertices] + [f"t.{e.id}" for e in S.non_tree_edges(G)]


def relations(G: LabeledGraph, S: SpanningData) -> list[tuple[GroupWord, GroupWord]]:
    """Defining relations as ``(lhs, rhs)`` word pairs."""
    out = []
    for e in G.edges:
        lhs = GroupWord([(f"g.{e.src}", e.label_src)])
        rhs = GroupWord([(f"g.{e.dst}", e.label_dst)])
        if e.id not in S.tree:
            t = f"t.{e.id}"
            lhs = GroupWord([(t, -1)]) + lhs + GroupWord([(t, 1)])
        out.append((lhs, rhs))
    return out


@dataclass(frozen=True)
class XElement:
    """``a_1^e1 a_-1^em1 z^l`` in ``X = Z x| A`` where ``a_q^-1 z a_q = z^q``."""

    e1: int
    em1: int
    l: int


def x_multiply(x: XElement, y: XElement) -> XElement:
    sign = -1 if y.em1 % 2 else 1
    return XElement(x.e1 + y.e1, x.em1 + y.em1, x.l * sign + y.l)


def x_inverse(x: XElement) -> XElement:
    sign = -1 if x.em1 % 2 else 1
    return XElement(-x.e1, -x.em1, -x.l * sign)


def _x_power(x: XElement, e: int) -> XElement:
    if e < 0:
        x, e = x_inverse(x), -e
    out = XElement(0, 0, 0)
    for _ in range(e):
        out = x_multiply(out, x)
    return out


@dataclass(frozen=True)
class XkElement:
    """``b^b z_k^j`` in the finite quotient ``X_k`` (``z_k`` of order ``mu*k``)."""

    b: int
    j: int


def xk_multiply(x: XkElement, y: XkElement, modulus: int) -> XkElement:
    sign = -1 if y.b else 1
    return XkElement((x.b + y.b) % 2, (x.j * sign + y.j) % modulus)


def tau_images(G: LabeledGraph, S: SpanningData, R: RadicalData, M: ModularImage) -> dict[str, XElement]:
    """``g_v -> z^(mu/mu(v))`` and ``t_e -> a_{Delta(t_e)}``."""
    images = {f"g.{v}": XElement(0, 0, R.mu // R.radical_exponent[v]) for v in G.vertices}
    for eid, q in zip(M.edge_ids, M.generators):
        if q == 1:
            images[f"t.{eid}"] = XElement(1, 0, 0)
        elif q == -1:
            images[f"t.{eid}"] = XElement(0, 1, 0)
        else:
            raise PreconditionError(f"Delta(t.{eid}) = {q} is not +-1")
    return images


def _as_word(G: LabeledGraph, S: SpanningData, word: GroupWord | str) -> GroupWord:
    if isinstance(word, str):
        return GroupWord.parse(word, generators(G, S))
    allowed = set(generators(G, S))
    for sym, _ in word:
        if sym not in allowed:
            raise ParseError(f"unknown generator {sym!r}")
    return word


def tau_evaluate(
    G: LabeledGraph, S: SpanningData, R: RadicalData, M: ModularImage, word: GroupWord | str
) -> XElement:
    images = tau_images(G, S, R, M)
    out = XElement(0, 0, 0)
    for sym, exp in _as_word(G, S, word):
        out = x_multiply(out, _x_power(images[sym], exp))
    return out


def chi_k_map(x: XElement, mu: int, k: int) -> XkElement:
    """``a_1^m a_-1^n z^l -> b^n z_k^l``."""
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    return XkElement(x.em1 % 2, x.l % (mu * k))


def tau_k_evaluate(
    G: LabeledGraph, S: SpanningData, R: RadicalData, M: ModularImage, word: GroupWord | str, k: int
) -> XkElement:
    """Evaluate ``word`` directly in ``X_k`` via ``g_v -> z_k^(mu/mu(v))``, ``t_e -> 1 or b``."""
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    modulus = R.mu * k
    images = {f"g.{v}": XkElement(0, (R.mu // R.radical_exponent[v]) % modulus) for v in G.vertices}
    for eid, q in zip(M.edge_ids, M.generators):
        images[f"t.{eid}"] = XkElement(0 if q == 1 else 1, 0)
    out = XkElement(0, 0)
    for sym, exp in _as_word(G, S, word):
        img = images[sym]
        if exp < 0:
            img = XkElement(img.b, (-img.j * (-1 if img.b else 1)) % modulus)
            exp = -exp
        for _ in range(exp):
            out = xk_multiply(out, img, modulus)
    return out
