"""
Lemma synthesis - assemble a fresh CSR f* from per-constructor solutions
The lemma states that f* applied to the other free variables of ps and then v equals ps;
it is validated on fresh random tests before it is returned.
"""
from __future__ import annotations

import logging
import re
from typing import Mapping

import numpy as np

from config.prover_config import ProverConfig
from deduct.normalize import Normalizer
from evaluation.falsifier import falsify
from lang.errors import FuelExhausted, NotFound, SynthesisFailed
from lang.printer import pretty_print
from lang.syntax import Branch, CsrApp, CsrDef, Equation, Spec, Term, Type, Var
from rewrite.substitution import substitute
from synth.enumerator import enumerate_solution
from synth.tasks import make_tasks, prefix_params

logger = logging.getLogger(__name__)

SYNTH_PREFIX = "f_"


def next_csr_name(spec: Spec) -> str:
    taken = spec.global_names()
    numbers = [int(m.group(1)) for n in taken if (m := re.fullmatch(r"f_(\d+)", n))]
    k = max(numbers, default=0) + 1
    while f"{SYNTH_PREFIX}{k}" in taken:
        k += 1
    return f"{SYNTH_PREFIX}{k}"


def _positional(csr: CsrDef, normalizer: Normalizer) -> tuple:
    """Bodies with parameters, binders and the result variable renamed by position"""
    rename = {name: Var(f"_p{i}") for i, (name, _) in enumerate(csr.params)}
    rename[csr.result_var] = Var("_r")
    out = []
    for branch in csr.branches:
        local = dict(rename)
        local.update({b: Var(f"_b{i}") for i, b in enumerate(branch.binders)})
        out.append((branch.ctor, normalizer(substitute(branch.body, local))))
    return tuple(sorted(out, key=lambda x: x[0]))


def same_csr(first: CsrDef, second: CsrDef, normalizer: Normalizer) -> bool:
    if [t for _, t in first.params] != [t for _, t in second.params]:
        return False
    if first.return_type != second.return_type:
        return False
    return _positional(first, normalizer) == _positional(second, normalizer)


def find_equivalent(csr: CsrDef, spec: Spec, normalizer: Normalizer | None = None) -> CsrDef | None:
    normalizer = normalizer or Normalizer(spec)
    for existing in spec.csrs:
        if same_csr(csr, existing, normalizer):
            return existing
    return None


def synthesize_csr(ps: Term, v: str, spec: Spec, env: Mapping[str, Type], config: ProverConfig,
                   rng: np.random.Generator) -> tuple[CsrDef, Equation, Spec]:
    """The CSR f*, the lemma f* vs v = ps and the spec extended with f* (unchanged when
    an existing CSR already computes f*)"""
    task_rng, check_rng = rng.spawn(2)
    tasks = make_tasks(ps, v, spec, env, config, task_rng)
    branches = []
    result_var = "r"
    for task in tasks:
        try:
            body = enumerate_solution(task, spec, config.synth_size, config.max_candidates)
        except NotFound as exc:
            raise SynthesisFailed(f"no {task.kind} case for {task.ctor}: {exc}") from exc
        if task.result_var is not None:
            result_var = task.result_var
        branches.append(Branch(task.ctor, task.field_names, body, task.recursive_binder))

    # Every comb task shares one result name; rename stragglers
    fixed = []
    for task, branch in zip(tasks, branches):
        if task.result_var is not None and task.result_var != result_var:
            branch = Branch(branch.ctor, branch.binders,
                            substitute(branch.body, {task.result_var: Var(result_var)}),
                            branch.recursive_binder)
        fixed.append(branch)

    prefix = prefix_params(ps, v, env)
    params = prefix + ((v, env[v]),)
    candidate = CsrDef(next_csr_name(spec), params, tuple(fixed), result_var, tasks[0].output_type)
    existing = find_equivalent(candidate, spec)
    if existing is not None:
        logger.info("synthesized function coincides with %s", existing.name)
        csr, new_spec = existing, spec
    else:
        csr, new_spec = candidate, spec.with_csr(candidate)
        logger.info("synthesized %s", pretty_print(candidate).replace("\n", " "))

    lhs = CsrApp(csr.name, tuple(Var(n) for n, _ in params))
    lemma = Equation(params, lhs, ps)
    try:
        cex = falsify(lemma, new_spec, config.synth_validation_tests, check_rng,
                      size_bound=config.size_bound, int_range=config.int_range)
    except FuelExhausted as exc:
        raise SynthesisFailed("validation ran out of fuel") from exc
    if cex is not None:
        raise SynthesisFailed(f"lemma {pretty_print(lemma)} fails on {cex.describe()}")
    return csr, lemma, new_spec
