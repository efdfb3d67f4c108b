"""Immutable discrete Bayesian networks over binary variables.

A network is a DAG of binary variables, each carrying a role (norm, desire,
action) and an agent side (actor, judge, shared) so two-agent models stay
self-documenting. Every variable owns one conditional probability table
storing P(child = 1) per full parent assignment.

Row order is the portability contract: with parents (P1, ..., Pk) declared
in that order, the row index is the binary number b1 b2 ... bk where the
first declared parent supplies the most significant bit. A CPT with parents
(D1, N) therefore stores rows for (D1=0,N=0), (D1=0,N=1), (D1=1,N=0),
(D1=1,N=1) in that order.

Networks are immutable after construction and safe to share across threads;
all inference entry points are pure functions of their arguments.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping

from .errors import NetworkDefinitionError, UnknownVariableError

#: Default clamping bound applied by :meth:`Cpt.build`.
CLAMP_EPSILON = 1e-6

SCHEMA_VERSION = "1"


class Role(str, Enum):
    NORM = "norm"
    DESIRE = "desire"
    ACTION = "action"


class AgentSide(str, Enum):
    ACTOR = "actor"
    JUDGE = "judge"
    SHARED = "shared"


@dataclass(frozen=True)
class Variable:
    """A named binary variable with its role in the two-agent setting."""

    name: str
    role: Role
    agent: AgentSide

    def __post_init__(self) -> None:
        if not self.name:
            raise NetworkDefinitionError("variable name must be nonempty")
        if self.role is Role.NORM and self.agent is not AgentSide.SHARED:
            raise NetworkDefinitionError(
                f"norm variable {self.name!r} must be shared, not {self.agent.value}"
            )


@dataclass(frozen=True)
class Cpt:
    """Conditional probability table: P(child = 1) for each parent assignment.

    The plain constructor stores rows verbatim (used when parsing serialized
    networks, so round-trips are value-identical). Use :meth:`build` for new
    tables; it applies the standard clamping into [epsilon, 1 - epsilon].
    """

    child: str
    parents: tuple[str, ...]
    rows: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parents", tuple(self.parents))
        object.__setattr__(self, "rows", tuple(float(p) for p in self.rows))
        if len(set(self.parents)) != len(self.parents):
            raise NetworkDefinitionError(f"duplicate parents in CPT for {self.child!r}")
        if self.child in self.parents:
            raise NetworkDefinitionError(f"{self.child!r} cannot be its own parent")
        expected = 1 << len(self.parents)
        if len(self.rows) != expected:
            raise NetworkDefinitionError(
                f"CPT for {self.child!r} needs {expected} rows, got {len(self.rows)}"
            )
        for p in self.rows:
            if not 0.0 <= p <= 1.0:
                raise NetworkDefinitionError(
                    f"CPT for {self.child!r} has probability {p!r} outside [0, 1]"
                )

    @classmethod
    def build(
        cls,
        child: str,
        parents: Iterable[str],
        rows: Iterable[float],
        epsilon: float = CLAMP_EPSILON,
    ) -> "Cpt":
        """Construct a table with every row clamped into [epsilon, 1 - epsilon].

        epsilon=0 keeps deterministic rows intact; posteriors and rejection
        sampling can then encounter genuinely impossible evidence, which is
        reported as a typed error rather than NaN.
        """
        if not 0.0 <= epsilon < 0.5:
            raise NetworkDefinitionError(f"epsilon {epsilon!r} must lie in [0, 0.5)")
        raw = [float(p) for p in rows]
        for p in raw:
            if not 0.0 <= p <= 1.0:
                raise NetworkDefinitionError(
                    f"CPT for {child!r} has probability {p!r} outside [0, 1]"
                )
        clamped = tuple(min(max(p, epsilon), 1.0 - epsilon) for p in raw)
        return cls(child, tuple(parents), clamped)

    def row_index(self, assignment: Mapping[str, int]) -> int:
        """Row index selected by an assignment covering all parents."""
        index = 0
        for parent in self.parents:
            try:
                bit = assignment[parent]
            except KeyError:
                raise IncompleteAssignmentError(
                    f"assignment for CPT of {self.child!r} is missing parent {parent!r}"
                ) from None
            index = (index << 1) | (1 if bit else 0)
        return index

    def row_bits(self, index: int) -> tuple[int, ...]:
        """Parent bits for a row index, first parent first."""
        k = len(self.parents)
        return tuple((index >> (k - 1 - i)) & 1 for i in range(k))

    def p_one(self, assignment: Mapping[str, int]) -> float:
        """P(child = 1) under the given parent assignment."""
        return self.rows[self.row_index(assignment)]


class IncompleteParent(NetworkDefinitionError):
    def __init__(self, child: str, parent: str) -> None:
        super().__init__(f"assignment for CPT of {child!r} is missing parent {parent!r}")


@dataclass(frozen=True, eq=False)
class NormNetwork:
    """A DAG of binary variables with one CPT per variable.

    Construction validates unique names, declared parents, exactly one CPT
    per variable, and acyclicity; the topological order is fixed at build
    time (declaration order breaks ties) so downstream elimination and
    sampling are deterministic.
    """

    variables: tuple[Variable, ...]
    cpts: tuple[Cpt, ...]
    _by_name: dict = field(init=False, repr=False, default=None)
    _cpt_by_child: dict = field(init=False, repr=False, default=None)
    _children: dict = field(init=False, repr=False, default=None)
    _order: tuple = field(init=False, repr=False, default=None)

    def __post_init__(self) -> None:
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "cpts", tuple(self.cpts))
        names = [v.name for v in self.variables]
        if len(set(names)) != len(names):
            raise NetworkDefinitionError(f"duplicate variable names in {names}")
        by_name = {v.name: v for v in self.variables}

        cpt_by_child: dict[str, Cpt] = {}
        for cpt in self.cpts:
            if cpt.child not in by_name:
                raise NetworkDefinitionError(f"CPT child {cpt.child!r} is not declared")
            if cpt.child in cpt_by_child:
                raise NetworkDefinitionError(f"two CPTs declared for {cpt.child!r}")
            for parent in cpt.parents:
                if parent not in by_name:
                    raise NetworkDefinitionError(
                        f"CPT for {cpt.child!r} references undeclared parent {parent!r}"
                    )
            cpt_by_child[cpt.child] = cpt
        missing = [n for n in names if n not in cpt_by_child]
        if missing:
            raise NetworkDefinitionError(f"variables without a CPT: {missing}")

        children: dict[str, list[str]] = {n: [] for n in names}
        for cpt in self.cpts:
            for parent in cpt.parents:
                children[parent].append(cpt.child)

        # Kahn's algorithm; scanning declaration order keeps the result stable.
        indegree = {n: len(cpt_by_child[n].parents) for n in names}
        order: list[str] = []
        emitted: set[str] = set()
        while len(order) < len(names):
            progressed = False
            for n in names:
                if n not in emitted and indegree[n] == 0:
                    order.append(n)
                    emitted.add(n)
                    for child in children[n]:
                        indegree[child] -= 1
                    progressed = True
            if not progressed:
                cyclic = sorted(n for n in names if n not in emitted)
                raise NetworkDefinitionError(f"parent relations contain a cycle: {cyclic}")

        object.__setattr__(self, "_by_name", by_name)
        object.__setattr__(self, "_cpt_by_child", cpt_by_child)
        object.__setattr__(self, "_children", {n: tuple(c) for n, c in children.items()})
        object.__setattr__(self, "_order", tuple(order))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(v.name for v in self.variables)

    def variable(self, name: str) -> Variable:
        try:
            return self._by_name[name]
        except KeyError:
            raise UnknownVariableError(f"unknown variable {name!r}") from None

    def cpt(self, name: str) -> Cpt:
        try:
            return self._cpt_by_child[name]
        except KeyError:
            raise UnknownVariableError(f"unknown variable {name!r}") from None

    def parents(self, name: str) -> tuple[str, ...]:
        return self.cpt(name).parents

    def children(self, name: str) -> tuple[str, ...]:
        self.variable(name)
        return self._children[name]

    def topological_order(self) -> tuple[str, ...]:
        return self._order

    # -- serialization -------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "variables": [
                {"name": v.name, "role": v.role.value, "agent": v.agent.value}
                for v in self.variables
            ],
            "cpts": [
                {
                    "child": cpt.child,
                    "parents": list(cpt.parents),
                    "rows": [
                        {
                            "parent_bits": "".join(str(b) for b in cpt.row_bits(i)),
                            "p_child_1": p,
                        }
                        for i, p in enumerate(cpt.rows)
                    ],
                }
                for cpt in self.cpts
            ],
        }

    @classmethod
    def from_dict(cls, doc: Mapping) -> "NormNetwork":
        try:
            variables = tuple(
                Variable(v["name"], Role(v["role"]), AgentSide(v["agent"]))
                for v in doc["variables"]
            )
            cpts = []
            for c in doc["cpts"]:
                parents = tuple(c["parents"])
                rows: list[float | None] = [None] * (1 << len(parents))
                for row in c["rows"]:
                    bits = row["parent_bits"]
                    if len(bits) != len(parents) or any(ch not in "01" for ch in bits):
                        raise NetworkDefinitionError(
                            f"bad parent_bits {bits!r} for CPT of {c['child']!r}"
                        )
                    index = int(bits, 2) if bits else 0
                    if rows[index] is not None:
                        raise NetworkDefinitionError(
                            f"duplicate row {bits!r} for CPT of {c['child']!r}"
                        )
                    rows[index] = float(row["p_child_1"])
                if any(r is None for r in rows):
                    raise NetworkDefinitionError(
                        f"CPT of {c['child']!r} is missing rows"
                    )
                cpts.append(Cpt(c["child"], parents, tuple(rows)))
        except (KeyError, TypeError, ValueError) as exc:
            raise NetworkDefinitionError(f"malformed network document: {exc}") from exc
        return cls(variables, tuple(cpts))

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "NormNetwork":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise NetworkDefinitionError(f"invalid network JSON: {exc}") from exc
        return cls.from_dict(doc)


#: A (possibly partial) assignment of binary values to variables.
Assignment = Mapping[str, int]
