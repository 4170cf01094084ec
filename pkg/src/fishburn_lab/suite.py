"""Named verification tasks and a deterministic (optionally parallel) runner."""

from concurrent.futures import ProcessPoolExecutor

from . import congruences as cg
from . import cyclotomic as cy
from .residues import primes_between

CHECKS = {
    "known-congruences": cg.verify_known_congruences,
    "xi-ascent-oracle": cg.verify_xi_against_ascent,
    "theorem1": cg.verify_theorem1,
    "lemma5": cg.verify_lemma5,
    "strengthened-lemma5": cg.verify_strengthened_lemma5,
    "classification": cg.verify_classification,
    "prime-power": cg.scan_prime_power,
    "a-conjecture": cg.verify_a_conjecture,
    "a-printed": cg.verify_a_printed,
    "residue-sets": cg.verify_printed_sets,
    "lucas-vanishing": cg.verify_lucas_vanishing,
    "lemma2": cy.verify_lemma2,
    "lemma4": cy.verify_lemma4,
    "eq214": cy.verify_component_vanishing,
    "bernoulli": cy.verify_bernoulli_crosscheck,
    "stabilization": cy.verify_stabilization,
}

# checks that accept the coefficient cache
_CACHED = {"known-congruences", "theorem1", "prime-power", "a-conjecture"}


def suite_tasks():
    """The full battery at acceptance scale, as (check name, kwargs) pairs."""
    tasks = [
        ("residue-sets", {}),
        ("known-congruences", {"n_max": 200}),
        ("xi-ascent-oracle", {"max_n": 10}),
        ("a-printed", {}),
        ("a-conjecture", {"n_max": 40}),
        ("classification", {"p_max": 1000, "density_max": 10000}),
        ("lucas-vanishing", {"p_max": 100}),
        ("lemma2", {"trials": 50, "max_n": 5, "seed": 0}),
        ("lemma4", {"p": 3, "n": 4, "max_N": 3}),
        ("lemma4", {"p": 5, "n": 9, "max_N": 3}),
        ("prime-power", {"p": 5, "j": 2, "n_max": 20}),
    ]
    tasks += [("theorem1", {"p": p, "n_max": 100}) for p in primes_between(2, 50)]
    for p in (5, 7, 11):
        tasks += [("lemma5", {"p": p, "n": n}) for n in range(1, 6)]
        tasks += [("strengthened-lemma5", {"p": p, "n": n}) for n in range(1, 5)]
        tasks.append(("eq214", {"p": p, "max_j": 3}))
    for p in (5, 7):
        tasks.append(("bernoulli", {"p": p, "max_order": 2}))
        tasks.append(("stabilization", {"p": p, "max_r": 2}))
    return tasks


def run_task(name, kwargs, cache=None):
    fn = CHECKS[name]
    if name in _CACHED and cache is not None:
        kwargs = dict(kwargs, cache=cache)
    return fn(**kwargs)


def _run_packed(args):
    return run_task(*args)


def run_tasks(tasks, jobs=1, cache=None):
    """Run every task and return reports sorted by (claim_id, parameters)."""
    packed = [(name, kw, cache) for name, kw in tasks]
    if jobs <= 1 or len(packed) <= 1:
        reports = [_run_packed(t) for t in packed]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_packed, packed))
    return sorted(reports, key=lambda r: r.sort_key())
