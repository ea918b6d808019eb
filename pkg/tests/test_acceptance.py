"""Acceptance criteria 1-6.  Each test prints one ``ACCEPTANCE <n> PASS|FAIL`` line.

The lines are also collected and repeated in pytest's terminal summary, so
they show up without ``-s``.
"""

import json
import subprocess
import sys
import time
from pathlib import Path

import pytest

from skewverify.checks import RunContext, run_check
from skewverify.field_tower import PI
from skewverify.residue import (
    F2,
    F7,
    F8,
    mu_in_Fq,
    poly_over,
    reduce_f_at_residue,
    reduce_minpoly_mod,
    roots,
    total_ramification_witness,
)

DATA = Path(__file__).resolve().parent.parent / "data"
ACCEPTANCE_LINES: list[str] = []

IDENTITY_SUITE = [
    "rel_u_cubed", "rel_commutation", "rel_f_sigma", "rel_inner_theta", "rel_inner_u",
    "rel_d_fixed", "rel_norm_lambda", "norm_pi_is_7", "t_central",
]
RESIDUE_SUITE = ["minpoly_irred_mod2", "minpoly_cube_mod7", "f_rootless_mod2", "f_rootless_modpi"]
PROPERTY_SUITE = [
    "d_ring_axioms", "homomorphism_sigma_tilde", "sigma_cubed_inner", "automorphism_orders",
    "norm_multiplicativity", "valuation_axioms", "series_inverse", "tame_delta_residue",
]


def report(n: int, ok: bool, summary: str) -> None:
    line = f"ACCEPTANCE {n} {'PASS' if ok else 'FAIL'}: {summary}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def run_cli(*args: str) -> tuple[int, dict, float]:
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "skewverify", *args, "--format", "json"],
        capture_output=True, text=True, check=False,
    )
    elapsed = time.perf_counter() - start
    return proc.returncode, json.loads(proc.stdout), elapsed


@pytest.fixture(scope="module")
def full_run():
    """One end-to-end ``skewverify all`` at seed 0, 100 trials, precision 12."""
    return run_cli("all", "--seed", "0", "--trials", "100", "--precision", "12")


def test_criterion_1_exact_identities():
    start = time.perf_counter()
    ctx = RunContext(seed=0, trials=100)
    results = [run_check(n, ctx=ctx) for n in IDENTITY_SUITE]
    elapsed = time.perf_counter() - start
    failed = [r.name for r in results if not r.passed]
    norm_exact = PI.norm() == 7 and str(PI.norm()) == "7"
    ok = not failed and norm_exact and elapsed < 5.0
    report(1, ok, f"{len(results) - len(failed)}/{len(results)} exact identities in {elapsed:.2f} s (limit 5 s)"
           + (f"; failed {failed}" if failed else ""))
    assert ok


def test_criterion_2_residue_suite():
    ctx = RunContext()
    failed = [n for n in RESIDUE_SUITE if not run_check(n, ctx=ctx).passed]
    m2, m7 = reduce_minpoly_mod(2), reduce_minpoly_mod(7)
    f2, fpi = reduce_f_at_residue("two"), reduce_f_at_residue("pi")
    facts = {
        "minpoly mod 2 = x³+x²+1": m2 == poly_over(F2, 1, 1, 0, 1),
        "rootless over F2 (2 candidates)": len(list(F2.elements())) == 2 and not roots(m2, F2),
        "minpoly mod 7 = (x−2)³": m7 == poly_over(F7, 1, -6, 12, -8),
        "unique witness r = 2 (7 candidates)": len(list(F7.elements())) == 7 and total_ramification_witness(7) == 2,
        "f at (2) rootless over F8 (8 candidates)": len(list(F8.elements())) == 8 and not roots(f2, F8),
        "f at (π) = x³−3x+1": fpi == poly_over(F7, 1, 0, -3, 1),
        "f at (π) rootless over F7": not roots(fpi, F7),
    }
    bad = [k for k, v in facts.items() if not v] + failed
    ok = not bad
    report(2, ok, f"{len(facts)} residue facts and {len(RESIDUE_SUITE)} checks" + (f"; failed {bad}" if bad else ""))
    assert ok


def test_criterion_3_root_of_unity_predicates():
    values = {(3, 7): mu_in_Fq(3, 7), (9, 7): mu_in_Fq(9, 7), (3, 2): mu_in_Fq(3, 2)}
    ok = values == {(3, 7): True, (9, 7): False, (3, 2): False}
    report(3, ok, "mu_in_Fq(3,7) = {}, mu_in_Fq(9,7) = {}, mu_in_Fq(3,2) = {}".format(*values.values()))
    assert ok


def test_criterion_4_property_suites(full_run):
    _, doc, _ = full_run
    status = {c["name"]: c["status"] for c in doc["checks"]}
    failed = [n for n in PROPERTY_SUITE if status.get(n) != "pass"]
    settings_ok = doc["seed"] == 0 and doc["trials"] == 100 and doc["precision"] == 12
    ok = settings_ok and not failed
    report(4, ok, f"{len(PROPERTY_SUITE) - len(failed)}/{len(PROPERTY_SUITE)} property suites at seed 0, "
           f"100 trials, precision 12" + (f"; failed {failed}" if failed else ""))
    assert ok


def test_criterion_5_negative_controls():
    code_l, doc_l, _ = run_cli("all", "--constants", str(DATA / "lambda_one.json"))
    code_d, doc_d, _ = run_cli("all", "--constants", str(DATA / "d_one.json"))
    st_l = {c["name"]: c["status"] for c in doc_l["checks"]}
    st_d = {c["name"]: c["status"] for c in doc_d["checks"]}
    detected = {
        "λ:=1 rel_u_cubed fails": st_l["rel_u_cubed"] == "fail",
        "λ:=1 rel_norm_lambda fails": st_l["rel_norm_lambda"] == "fail",
        "λ:=1 exit nonzero": code_l != 0,
        "d:=1 t_central fails": st_d["t_central"] == "fail",
        "d:=1 exit nonzero": code_d != 0,
    }
    missed = [k for k, v in detected.items() if not v]
    ok = not missed
    report(5, ok, f"λ:=1 exit {code_l}, d:=1 exit {code_d}" + (f"; missed {missed}" if missed else ""))
    assert ok


def test_criterion_6_full_run(full_run):
    code, doc, elapsed = full_run
    failed = [c["name"] for c in doc["checks"] if c["status"] != "pass"]
    ok = code == 0 and doc["all_passed"] and elapsed < 60.0
    report(6, ok, f"`all` exit {code}, {len(doc['checks']) - len(failed)}/{len(doc['checks'])} checks "
           f"in {elapsed:.1f} s (limit 60 s)" + (f"; failed {failed}" if failed else ""))
    assert ok
