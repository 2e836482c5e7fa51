"""
Proof traces - the tree of steps that justifies a verdict
Every node serializes to {kind, equation, context, premises, children, justification}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from deduct.solver import DeductOutcome
from engine.goals import Goal
from lang.printer import pretty_print
from lang.syntax import Equation


@dataclass
class ProofNode:
    goal: Goal
    children: list[ProofNode] = field(default_factory=list)

    kind = "node"

    @property
    def complete(self) -> bool:
        return all(c.complete for c in self.children)

    def justification(self) -> dict:
        return {}

    def walk(self) -> Iterator[ProofNode]:
        yield self
        for child in self.children:
            yield from child.walk()

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "equation": pretty_print(self.goal.target),
            "context": [[name, str(t)] for name, t in self.goal.context],
            "premises": [pretty_print(p) for p in self.goal.premises],
            "children": [c.to_json() for c in self.children],
            "justification": self.justification(),
        }


@dataclass
class DeductStep(ProofNode):
    outcome: DeductOutcome | None = None

    kind = "deduct"

    @property
    def complete(self) -> bool:
        return self.outcome is not None and self.outcome.proved

    def justification(self) -> dict:
        return self.outcome.to_json() if self.outcome is not None else {}


@dataclass
class InductionStep(ProofNode):
    variable: str = ""
    route: str = "f1"
    cases: list[dict] = field(default_factory=list)

    kind = "induction"

    def justification(self) -> dict:
        return {"variable": self.variable, "route": self.route, "cases": self.cases}


@dataclass
class TacticStep(ProofNode):
    tactic: int = 1
    extracted: str = ""
    variable: str = ""
    lemma: Equation | None = None
    definition: str = ""

    kind = "tactic"

    @property
    def complete(self) -> bool:
        return len(self.children) == 2 and super().complete

    def justification(self) -> dict:
        return {
            "tactic": self.tactic,
            "extracted": self.extracted,
            "variable": self.variable,
            "lemma": pretty_print(self.lemma) if self.lemma is not None else None,
            "definition": self.definition,
        }


@dataclass
class Failure(ProofNode):
    reason: str = ""

    kind = "failure"

    @property
    def complete(self) -> bool:
        return False

    def justification(self) -> dict:
        return {"reason": self.reason}


def count_nodes(root: ProofNode) -> dict[str, int]:
    counts = {"lemma_count": 0, "induction_count": 0, "tactic1_count": 0, "tactic2_count": 0}
    for node in root.walk():
        if isinstance(node, InductionStep):
            counts["induction_count"] += 1
        elif isinstance(node, TacticStep):
            counts["lemma_count"] += 1
            counts[f"tactic{node.tactic}_count"] += 1
    return counts


def render_text(node: ProofNode, indent: int = 0) -> list[str]:
    """Human-readable proof outline"""
    pad = "  " * indent
    head = f"{pad}{pretty_print(node.goal.target)}"
    if isinstance(node, DeductStep):
        lines = [f"{head}  [by deduction]"]
    elif isinstance(node, InductionStep):
        lines = [f"{head}  [induction on {node.variable}, {node.route}]"]
    elif isinstance(node, TacticStep):
        lines = [f"{head}  [tactic {node.tactic}: lemma {pretty_print(node.lemma)}]"]
        if node.definition:
            lines += [pad + "  " + line for line in node.definition.splitlines()]
    elif isinstance(node, Failure):
        lines = [f"{head}  [failed: {node.reason}]"]
    else:
        lines = [head]
    for child in node.children:
        lines += render_text(child, indent + 1)
    return lines
