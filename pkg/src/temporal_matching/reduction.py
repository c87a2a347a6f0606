"""Hardness instances: 3-CNF satisfiability encoded as gamma-matching.

For a formula with n variables and m clauses and any gamma >= 2, the
constructed link stream admits a gamma-matching of size (2m+1)*n + m
exactly when the formula is satisfiable.  Per variable x the stream carries
a three-vertex spine (x-, x=, x+) linked at every instant, whose full
packing forces a true/false choice, plus per clause index i a pair of
gadget vertices (x++_i, x--_i) linked to x+ / x- during the window
[i*gamma + 1, (i+1)*gamma].  A single collector vertex c is linked, in the
same window, to x++_i for positive occurrences of x in clause i and to
x--_i for negative ones; the matching can serve clause i only through a
literal whose spine made the corresponding side available.

These instances are adversarial inputs for the exact solver and end-to-end
correctness checks of the whole pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .core import GammaEdge, GammaMatching, LinkStream

__all__ = [
    "CnfFormula",
    "ReductionInstance",
    "parse_dimacs",
    "reduce_formula",
    "assignment_to_matching",
]

CLAUSE_VERTEX = "c"


def _base(x: int) -> str:
    return f"x{x}="


def _pos(x: int) -> str:
    return f"x{x}+"


def _neg(x: int) -> str:
    return f"x{x}-"


def _pos_gadget(x: int, i: int) -> str:
    return f"x{x}++{i}"


def _neg_gadget(x: int, i: int) -> str:
    return f"x{x}--{i}"


@dataclass(frozen=True, init=False)
class CnfFormula:
    """A CNF formula with clauses of size one to three.

    Clauses are tuples of DIMACS-style signed literals (variable indices
    start at 1, negative means negated).  No clause may mention the same
    variable twice, so tautological clauses are rejected.
    """

    variable_count: int
    clauses: tuple[tuple[int, ...], ...]

    def __init__(self, variable_count: int, clauses: Iterable[Iterable[int]]):
        if variable_count < 1:
            raise ValueError(f"need at least one variable, got {variable_count}")
        normalized = tuple(tuple(int(lit) for lit in clause) for clause in clauses)
        for clause in normalized:
            if not 1 <= len(clause) <= 3:
                raise ValueError(f"clause size must be 1..3, got {clause}")
            seen = set()
            for lit in clause:
                var = abs(lit)
                if lit == 0 or var > variable_count:
                    raise ValueError(f"literal {lit} out of range in {clause}")
                if var in seen:
                    raise ValueError(f"variable {var} occurs twice in clause {clause}")
                seen.add(var)
        object.__setattr__(self, "variable_count", variable_count)
        object.__setattr__(self, "clauses", normalized)

    @property
    def clause_count(self) -> int:
        return len(self.clauses)

    def is_satisfied_by(self, assignment: Mapping[int, bool]) -> bool:
        return all(
            any(assignment[abs(lit)] == (lit > 0) for lit in clause)
            for clause in self.clauses
        )


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF text ("p cnf <vars> <clauses>" plus 0-terminated
    clause lines; "c ..." comments allowed)."""
    variable_count = None
    declared_clauses = None
    clauses: list[list[int]] = []
    pending: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            fields = line.split()
            if len(fields) != 4 or fields[1] != "cnf":
                raise ValueError(f"line {lineno}: malformed problem line {line!r}")
            variable_count = int(fields[2])
            declared_clauses = int(fields[3])
            continue
        if variable_count is None:
            raise ValueError(f"line {lineno}: clause before problem line")
        for token in line.split():
            lit = int(token)
            if lit == 0:
                clauses.append(pending)
                pending = []
            else:
                pending.append(lit)
    if pending:
        clauses.append(pending)  # tolerate a missing final terminator
    if variable_count is None:
        raise ValueError("missing problem line")
    if declared_clauses is not None and declared_clauses != len(clauses):
        raise ValueError(
            f"problem line declares {declared_clauses} clauses, found {len(clauses)}"
        )
    return CnfFormula(variable_count, clauses)


@dataclass(frozen=True)
class ReductionInstance:
    """The constructed stream plus the matching size that encodes SAT."""

    stream: LinkStream
    gamma: int
    target: int
    formula: CnfFormula

    def spine_vertices(self, x: int) -> tuple[str, str, str]:
        return _neg(x), _base(x), _pos(x)

    def gadget_vertices(self, x: int, i: int) -> tuple[str, str]:
        return _neg_gadget(x, i), _pos_gadget(x, i)

    @property
    def clause_vertex(self) -> str:
        return CLAUSE_VERTEX


def reduce_formula(formula: CnfFormula, gamma: int) -> ReductionInstance:
    """Construct the link stream whose maximum gamma-matching size decides
    satisfiability of ``formula``.

    Requires gamma >= 2 (with gamma = 1 the matching problem is not hard
    and the spine windows would degenerate).  The stream spans
    T = [0, (m+1)*gamma - 1], has 3n + 2nm + 1 vertices, and the answer
    threshold is target = (2m+1)*n + m.
    """
    if gamma < 2:
        raise ValueError(f"the construction needs gamma >= 2, got {gamma}")
    n = formula.variable_count
    m = formula.clause_count
    t_last = (m + 1) * gamma - 1

    vertices = {CLAUSE_VERTEX}
    edges: list[tuple[int, str, str]] = []
    for x in range(1, n + 1):
        vertices.update((_neg(x), _base(x), _pos(x)))
        for t in range(t_last + 1):
            edges.append((t, _base(x), _pos(x)))
            edges.append((t, _base(x), _neg(x)))
        for i in range(m):
            vertices.update((_pos_gadget(x, i), _neg_gadget(x, i)))
            for t in range(i * gamma + 1, (i + 1) * gamma + 1):
                edges.append((t, _pos(x), _pos_gadget(x, i)))
                edges.append((t, _neg(x), _neg_gadget(x, i)))
    for i, clause in enumerate(formula.clauses):
        for lit in clause:
            x = abs(lit)
            gadget = _pos_gadget(x, i) if lit > 0 else _neg_gadget(x, i)
            for t in range(i * gamma + 1, (i + 1) * gamma + 1):
                edges.append((t, CLAUSE_VERTEX, gadget))

    stream = LinkStream(edges, vertices=vertices, time_interval=(0, t_last))
    target = (2 * m + 1) * n + m
    return ReductionInstance(stream=stream, gamma=gamma, target=target, formula=formula)


def assignment_to_matching(
    instance: ReductionInstance, assignment: Mapping[int, bool]
) -> GammaMatching:
    """The explicit target-size matching induced by a satisfying assignment.

    True variables pack the x=/x+ spine and park x- on its gadgets; false
    variables do the opposite.  Each clause is served through its
    lowest-index satisfying variable, whose gadget vertex is free for the
    collector exactly because the spine went the other way.
    """
    formula = instance.formula
    if not formula.is_satisfied_by(assignment):
        raise ValueError("assignment does not satisfy formula")
    gamma = instance.gamma
    m = formula.clause_count
    members: list[GammaEdge] = []
    for x in range(1, formula.variable_count + 1):
        spine_mate = _pos(x) if assignment[x] else _neg(x)
        parked = _neg(x) if assignment[x] else _pos(x)
        for i in range(m + 1):
            members.append(GammaEdge(i * gamma, _base(x), spine_mate, gamma))
        for i in range(m):
            gadget = _neg_gadget(x, i) if assignment[x] else _pos_gadget(x, i)
            members.append(GammaEdge(i * gamma + 1, parked, gadget, gamma))
    for i, clause in enumerate(formula.clauses):
        witness = min(
            abs(lit) for lit in clause if assignment[abs(lit)] == (lit > 0)
        )
        gadget = (
            _pos_gadget(witness, i) if assignment[witness] else _neg_gadget(witness, i)
        )
        members.append(GammaEdge(i * gamma + 1, CLAUSE_VERTEX, gadget, gamma))
    return GammaMatching(members)
