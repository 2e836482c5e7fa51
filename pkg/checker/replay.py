"""
Trace replay - re-check a JSON proof report step by step
Only the recorded spec text and equation texts are trusted as input; every
deduction, induction case and lemma rewrite is recomputed and compared.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

from deduct.normalize import FALSE, TRUE, Normalizer
from lang.errors import ProverError, ReplayError, SpecError
from lang.parser import parse_equation, parse_spec, parse_term
from lang.syntax import CtorApp, Equation, Spec, Term, Type, Var
from rewrite.matching import L2R, R2L, rewrite_all, rewrite_at
from rewrite.substitution import replace_subterm, substitute

logger = logging.getLogger(__name__)


@dataclass
class ReplayResult:
    ok: bool
    complete: bool
    errors: list[str] = field(default_factory=list)
    nodes: int = 0


class TraceChecker:
    def __init__(self, spec: Spec):
        self.spec = spec
        self.normalize = Normalizer(spec)
        self.errors: list[str] = []
        self.nodes = 0
        self.complete = True

    def equation(self, text: str) -> Equation:
        return parse_equation(text, self.spec)

    def check(self, node: dict, path: str = "root",
              expected: Equation | None = None, premises: list[Equation] | None = None) -> None:
        self.nodes += 1
        try:
            eq = self.equation(node["equation"])
            have = [self.equation(p) for p in node["premises"]]
            if expected is not None and not _same(eq, expected):
                raise ReplayError(f"goal {node['equation']} does not follow from its parent")
            if premises is not None and have != premises:
                raise ReplayError("premises differ from the ones in scope")
            if premises is None and have:
                raise ReplayError("the root goal cannot have premises")
            context = {name: Type(t) for name, t in node.get("context", [])}
            kind = node["kind"]
            if kind == "deduct":
                self._deduct(node, eq, have)
            elif kind == "induction":
                self._induction(node, eq, have, context, path)
            elif kind == "tactic":
                self._tactic(node, eq, have, path)
            elif kind == "failure":
                self.complete = False
            else:
                raise ReplayError(f"unknown node kind {kind}")
        except (ProverError, KeyError, IndexError, TypeError, ValueError) as exc:
            self.errors.append(f"{path}: {exc}")

    # ----- deduction -----

    def _deduct(self, node: dict, eq: Equation, premises: list[Equation]) -> None:
        just = node["justification"]
        if just.get("status") != "proved":
            self.complete = False
            return
        rules = {}
        for premise, text in zip(premises, node["premises"]):
            rules[text] = self.normalize.equation(premise)
        self._replay_steps(self.normalize(eq.lhs), self.normalize(eq.rhs), just["steps"], rules)

    def _replay_steps(self, lhs: Term, rhs: Term, steps: list, rules: dict) -> None:
        for step in steps:
            if "split" in step:
                cond = parse_term(step["split"], self.spec)
                for value, key in ((TRUE, "then"), (FALSE, "else")):
                    self._replay_steps(self.normalize(replace_subterm(lhs, cond, value)),
                                       self.normalize(replace_subterm(rhs, cond, value)), step[key], rules)
                return
            rule = rules.get(step["premise"])
            if rule is None:
                raise ReplayError(f"premise {step['premise']} is not in scope")
            side = lhs if step["side"] == "lhs" else rhs
            rewritten = rewrite_at(rule, step["direction"], side, tuple(step["position"]))
            if rewritten is None:
                raise ReplayError(f"{step['premise']} does not apply at {step['position']}")
            if step["side"] == "lhs":
                lhs = self.normalize(rewritten)
            else:
                rhs = self.normalize(rewritten)
        if lhs != rhs:
            raise ReplayError("deduction steps do not reach syntactic equality")

    # ----- induction -----

    def _induction(self, node: dict, eq: Equation, premises: list[Equation],
                   context: dict[str, Type], path: str) -> None:
        just = node["justification"]
        var = just["variable"]
        env = dict(context)
        env.update(eq.env)
        adt = self.spec.adt_of(env[var])
        if var not in eq.env:
            premises = [p for p in premises if var in p.env or not _mentions(p, var)]
        rest = tuple(b for b in eq.binders if b[0] != var)
        cases = just["cases"]
        if [c["ctor"] for c in cases] != [c.name for c in adt.constructors]:
            raise ReplayError("induction cases do not cover the constructors")
        if len(node["children"]) < len(cases):
            self.complete = False
        for info, child in zip(cases, node["children"]):
            ctor = self.spec.ctor(info["ctor"])
            names = info["fields"]
            rec_index = adt.recursive_index(ctor)
            pattern = CtorApp(ctor.name, tuple(Var(n) for n in names))
            binders = rest + tuple((n, t) for i, (n, t) in enumerate(zip(names, ctor.fields)) if i != rec_index)
            case = Equation(binders, self.normalize(substitute(eq.lhs, {var: pattern})),
                            self.normalize(substitute(eq.rhs, {var: pattern})))
            case_premises = list(premises)
            if rec_index is not None:
                rec = Var(names[rec_index])
                ih = Equation(rest, substitute(eq.lhs, {var: rec}), substitute(eq.rhs, {var: rec}))
                case_premises.append(ih)
                side = info.get("ih_side")
                if side == "L":
                    case = Equation(binders, self.normalize(rewrite_all(ih, L2R, case.lhs)[0]), case.rhs)
                elif side == "R":
                    case = Equation(binders, case.lhs, self.normalize(rewrite_all(ih, R2L, case.rhs)[0]))
            if "generalized" in info:
                child_eq = self.equation(child["equation"])
                back = {name: parse_term(text, self.spec) for name, text in info["generalized"].items()}
                if (substitute(child_eq.lhs, back), substitute(child_eq.rhs, back)) != case.sides():
                    raise ReplayError(f"case {ctor.name}: generalization does not instantiate back")
                case = child_eq
            self.check(child, f"{path}/{ctor.name}", case, case_premises)

    # ----- lemma tactics -----

    def _tactic(self, node: dict, eq: Equation, premises: list[Equation], path: str) -> None:
        just = node["justification"]
        lemma = self.equation(just["lemma"])
        children = node["children"]
        if children:
            self.check(children[0], f"{path}/lemma", lemma, premises)
        if len(children) < 2:
            self.complete = False
            return
        lhs, _ = rewrite_all(lemma, R2L, eq.lhs)
        rhs, _ = rewrite_all(lemma, R2L, eq.rhs)
        self.check(children[1], f"{path}/rewritten", eq.with_sides(lhs, rhs), premises + [lemma])


def _same(first: Equation, second: Equation) -> bool:
    return first.sides() == second.sides() and first.env == second.env


def _mentions(eq: Equation, name: str) -> bool:
    return name in eq.free_vars()


def replay_report(report: dict) -> ReplayResult:
    try:
        spec = parse_spec(report["spec"])
    except (SpecError, KeyError) as exc:
        return ReplayResult(False, False, [f"spec: {exc}"])
    checker = TraceChecker(spec)
    trace = report.get("trace")
    if trace is None:
        return ReplayResult(False, False, ["report has no trace"])
    root_goal = spec.goal
    checker.check(trace, "root", root_goal, None)
    ok = not checker.errors
    logger.info("replayed %d nodes: %d errors", checker.nodes, len(checker.errors))
    return ReplayResult(ok, ok and checker.complete, checker.errors, checker.nodes)


def replay_file(path: str | Path) -> ReplayResult:
    with open(path, encoding="utf-8") as handle:
        return replay_report(json.load(handle))
