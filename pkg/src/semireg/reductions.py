"""NAE-SAT data model, hardness-instance constructions, and the gadget
reduction framework.

The clause gadgets the reductions rely on are supplied as data files, not
code: the builder validates each file against every structural constraint
the construction needs (bipartiteness, port arity, final degree sets) and
refuses nonconforming ones, so the checkable skeleton of the reduction is
preserved without inventing gadget internals.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import BudgetError, GadgetError, ParseError
from .families import EdgePartition
from .graph import Graph, classify, complete_bipartite, cycle, disjoint_union, parse_graph, path, star


@dataclass(frozen=True)
class NaeFormula:
    """Monotone CNF with clause sizes 2 and 3 over variables 0..num_vars-1."""

    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for cl in self.clauses:
            if len(cl) not in (2, 3):
                raise ValueError(f"clause size {len(cl)} not in {{2, 3}}")
            for x in cl:
                if not 0 <= x < self.num_vars:
                    raise ValueError(f"variable {x} out of range")

    @property
    def is_cubic_monotone(self) -> bool:
        """True when every variable occurs in exactly three clauses."""
        count = [0] * self.num_vars
        for cl in self.clauses:
            for x in cl:
                count[x] += 1
        return all(c == 3 for c in count)


def parse_nae(text: str) -> NaeFormula:
    """One clause per line, space-separated variable ids."""
    clauses = []
    top = -1
    for i, line in enumerate(text.splitlines()):
        if not line.strip():
            continue
        lineno = i + 1
        ids = []
        for tok in line.split():
            try:
                x = int(tok)
            except ValueError:
                raise ParseError(f"line {lineno}: bad variable token {tok!r}") from None
            if x < 0:
                raise ParseError(f"line {lineno}: negated literal {x} in monotone formula")
            ids.append(x)
            top = max(top, x)
        if len(ids) not in (2, 3):
            raise ParseError(f"line {lineno}: clause size {len(ids)} not in {{2, 3}}")
        clauses.append(tuple(ids))
    return NaeFormula(top + 1, tuple(clauses))


def nae_bruteforce(formula: NaeFormula) -> Optional[tuple[bool, ...]]:
    """An assignment making every clause contain both values, or None.

    An empty clause list is vacuously satisfiable.  Repeated variables in
    a clause are kept: a clause over a single variable can never be split.
    """
    n = formula.num_vars
    if n > 24:
        raise BudgetError(f"{n} variables exceed the brute-force budget of 24")
    masks = []
    for cl in formula.clauses:
        mask = 0
        for x in cl:
            mask |= 1 << x
        masks.append(mask)
    # a clause is split iff its variables are neither all false nor all
    # true: 0 < (a & mask) < mask; a one-variable mask can never satisfy it
    for a in range(1 << n):
        if all(0 < (a & mk) < mk for mk in masks):
            return tuple(bool(a >> i & 1) for i in range(n))
    return None


def widen_degree_set(g: Graph) -> Graph:
    """Attach fixed components to a 3-regular graph so that the result's
    degree set is exactly {1, ..., 9}.

    The companions are a 4-cycle, a 5-path, K_{9,9}, and the stars with 4
    through 8 leaves, appended in that order after the input.
    """
    deg = g.degrees()
    if g.n == 0 or set(deg) != {3}:
        raise ValueError("input must be 3-regular")
    pieces = [g, cycle(4), path(5), complete_bipartite(9, 9)]
    pieces.extend(star(i) for i in range(4, 9))
    return disjoint_union(pieces)


def _label_sums(g: Graph, labels: Sequence[int]) -> list[int]:
    if len(labels) != g.m:
        raise ValueError("one label per edge required")
    if any(lab not in (1, 2) for lab in labels):
        raise ValueError("labels must be 1 or 2")
    sums = [0] * g.n
    for e, (u, v) in enumerate(g.edges):
        sums[u] += labels[e]
        sums[v] += labels[e]
    return sums


def is_additive_coloring(g: Graph, labels: Sequence[int]) -> bool:
    """Do the incident {1,2} label sums differ across every edge?

    Defined here for 3-regular graphs, where this is equivalent to the
    induced two-part split being locally irregular part by part.
    """
    if set(g.degrees()) != {3}:
        raise ValueError("input must be 3-regular")
    sums = _label_sums(g, labels)
    return all(sums[u] != sums[v] for u, v in g.edges)


def partition_from_labels(g: Graph, labels: Sequence[int]) -> EdgePartition:
    """Two-part split by label value: label 1 -> part 0, label 2 -> part 1."""
    if len(labels) != g.m or any(lab not in (1, 2) for lab in labels):
        raise ValueError("labels must be 1 or 2, one per edge")
    return EdgePartition(2, tuple(lab - 1 for lab in labels))


# ---------------------------------------------------------------------------
# gadget framework
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Gadget:
    name: str
    graph: Graph
    ports: dict[str, int]


@dataclass(frozen=True)
class GadgetSet:
    gadgets: dict[str, Gadget]

    def get(self, name: str) -> Gadget:
        if name not in self.gadgets:
            raise GadgetError(f"missing gadget {name!r}")
        return self.gadgets[name]


@dataclass(frozen=True)
class ReductionResult:
    graph: Graph
    variable_vertices: tuple[int, ...]
    clause_ports: tuple[int, ...]


@dataclass(frozen=True)
class _VariantRules:
    clause3_gadget: str
    clause3_port: str
    clause2_gadget: str
    clause2_port: str
    base_gadgets: tuple[str, ...]
    extra_bases: tuple[Graph, ...]
    allowed_degrees: frozenset[int]


def _variant_rules(variant: str) -> _VariantRules:
    if variant == "thm2":
        return _VariantRules(
            clause3_gadget="H", clause3_port="a",
            clause2_gadget="I", clause2_port="b",
            base_gadgets=("B",),
            extra_bases=(complete_bipartite(1, 6), complete_bipartite(3, 6)),
            allowed_degrees=frozenset({1, 3, 6}),
        )
    if variant == "thm3iii":
        return _VariantRules(
            clause3_gadget="F", clause3_port="a",
            clause2_gadget="D", clause2_port="b",
            base_gadgets=("P",),
            extra_bases=(),
            allowed_degrees=frozenset({2, 3, 4, 6}),
        )
    raise ValueError(f"unknown reduction variant {variant!r}")


def variant_gadget_names(variant: str) -> tuple[str, ...]:
    rules = _variant_rules(variant)
    return rules.base_gadgets + (rules.clause3_gadget, rules.clause2_gadget)


def parse_gadget(name: str, text: str) -> Gadget:
    """Edge-list format with trailing "port <name> <vertex-id>" lines."""
    lines = text.splitlines()
    graph_lines = []
    port_lines = []
    for i, line in enumerate(lines):
        if line.split() and line.split()[0] == "port":
            port_lines.append((i + 1, line))
        else:
            graph_lines.append(line)
    graph = parse_graph("\n".join(graph_lines))
    ports: dict[str, int] = {}
    for lineno, line in port_lines:
        fields = line.split()
        if len(fields) != 3:
            raise ParseError(f"line {lineno}: port line must be 'port name vertex'")
        try:
            vid = int(fields[2])
        except ValueError:
            raise ParseError(f"line {lineno}: port vertex must be an integer") from None
        ports[fields[1]] = vid
    gadget = Gadget(name, graph, ports)
    _validate_gadget(gadget)
    return gadget


def _validate_gadget(gadget: Gadget) -> None:
    if not classify(gadget.graph).is_bipartite:
        raise GadgetError(f"gadget {gadget.name!r} is not bipartite")
    for pname, vid in gadget.ports.items():
        if not 0 <= vid < gadget.graph.n:
            raise GadgetError(
                f"gadget {gadget.name!r}: port {pname!r} vertex {vid} out of range"
            )


def load_gadget_set(directory: str, variant: str) -> GadgetSet:
    """Load the variant's gadgets from ``<name>.gadget`` files."""
    gadgets = {}
    for name in variant_gadget_names(variant):
        filepath = os.path.join(directory, f"{name}.gadget")
        if not os.path.exists(filepath):
            raise GadgetError(f"missing gadget {name!r}: no file {filepath}")
        with open(filepath, encoding="utf-8") as fh:
            gadgets[name] = parse_gadget(name, fh.read())
    return GadgetSet(gadgets)


def build_reduction(formula: NaeFormula, gadgets: GadgetSet, variant: str) -> ReductionResult:
    """Assemble the hardness instance for a cubic monotone formula.

    Fixed base components first, one clause gadget per clause, one vertex
    per variable, and clause-port-to-variable edges; the result must come
    out bipartite with degrees inside the variant's allowed set, otherwise
    the gadget data is rejected.
    """
    if not formula.is_cubic_monotone:
        raise ValueError("formula must be cubic monotone (every variable in 3 clauses)")
    rules = _variant_rules(variant)

    n = 0
    edges: list[tuple[int, int]] = []

    def append_graph(g: Graph) -> int:
        nonlocal n
        base = n
        edges.extend((u + base, v + base) for u, v in g.edges)
        n += g.n
        return base

    for name in rules.base_gadgets:
        append_graph(gadgets.get(name).graph)
    for g in rules.extra_bases:
        append_graph(g)

    clause_ports = []
    for cl in formula.clauses:
        gname, pname = (
            (rules.clause3_gadget, rules.clause3_port)
            if len(cl) == 3
            else (rules.clause2_gadget, rules.clause2_port)
        )
        gadget = gadgets.get(gname)
        if pname not in gadget.ports:
            raise GadgetError(f"gadget {gname!r} lacks port {pname!r}")
        base = append_graph(gadget.graph)
        clause_ports.append(base + gadget.ports[pname])

    variable_vertices = tuple(range(n, n + formula.num_vars))
    n += formula.num_vars
    for port, cl in zip(clause_ports, formula.clauses):
        edges.extend((port, variable_vertices[x]) for x in cl)

    graph = Graph(n, tuple(edges))
    if not classify(graph).is_bipartite:
        raise GadgetError("gadget data yields a non-bipartite instance")
    degs = set(graph.degrees())
    if not degs <= rules.allowed_degrees:
        raise GadgetError(
            f"gadget data yields degrees {sorted(degs - rules.allowed_degrees)} "
            f"outside {sorted(rules.allowed_degrees)}"
        )
    return ReductionResult(graph, variable_vertices, tuple(clause_ports))


def extract_assignment(
    g: Graph, p: EdgePartition, variable_vertices: Sequence[int]
) -> tuple[bool, ...]:
    """Read a truth assignment off a two-part split: a variable is true
    when all edges at its vertex lie in part 0.

    A variable vertex with incident edges in both parts violates the
    construction's structure and is reported by id.
    """
    if p.k != 2 or len(p.part) != g.m:
        raise ValueError("need a two-part partition covering the graph")
    incident: dict[int, set[int]] = {v: set() for v in variable_vertices}
    for e, (u, v) in enumerate(g.edges):
        if u in incident:
            incident[u].add(p.part[e])
        if v in incident:
            incident[v].add(p.part[e])
    out = []
    for v in variable_vertices:
        parts = incident[v]
        if len(parts) != 1:
            raise ValueError(f"variable vertex {v} has incident edges in both parts")
        out.append(parts == {0})
    return tuple(out)
