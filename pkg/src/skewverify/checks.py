"""Registry of named verification checks and report assembly.

Each check is a function ``(ctx, rng) -> (passed, detail)``.  ``rng`` is a
``random.Random`` seeded from (global seed, check name), so results do not
depend on which other checks run or in what order.
"""

from __future__ import annotations

import json
import random
import time
from collections.abc import Callable
from dataclasses import asdict, dataclass, field
from functools import cached_property

from .algebra import (
    D_ONE,
    D_THETA,
    D_U,
    RELATION_LABELS,
    U_CUBED,
    DElem,
    aut_inverse_apply,
    d_inv,
    relation_sides,
)
from .field_tower import ALPHA, F_THETA, PI, THETA, LElem
from .laurent import TwistedLaurentRing, XadicValue, check_t_central, make_t, ts_inv
from .overrides import ConstantsOverride
from .randoms import (
    nonzero,
    random_d,
    random_k,
    random_l,
    random_rational,
    random_series,
    random_uniformizer,
)
from .residue import (
    F2,
    F7,
    F8,
    delta_residue,
    mu_in_Fq,
    poly_over,
    reduce_f_at_residue,
    reduce_minpoly_mod,
    roots,
    tame_delta_residue,
    total_ramification_witness,
)

PASS, FAIL, ERROR = "pass", "fail", "error"
TEXT_DETAIL_LIMIT = 300  # full details are kept in the JSON report


class UnknownCheckError(KeyError):
    pass


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str
    elapsed_ms: float
    anchor: str

    @property
    def passed(self) -> bool:
        return self.status == PASS


@dataclass
class RunContext:
    """Shared, lazily built objects for one verification run."""

    constants: ConstantsOverride = field(default_factory=ConstantsOverride)
    seed: int = 0
    trials: int = 100
    precision: int = 12

    @cached_property
    def aut(self):
        return self.constants.outer_aut(verify=False)

    @cached_property
    def witness(self):
        return self.constants.witness()

    @cached_property
    def ring(self) -> TwistedLaurentRing:
        return TwistedLaurentRing(self.aut, self.witness, self.precision)

    @cached_property
    def relations(self):
        return relation_sides(self.aut, self.witness)

    def rng_for(self, name: str) -> random.Random:
        return random.Random(f"{self.seed}:{name}")


CheckFn = Callable[[RunContext, random.Random], tuple[bool, str]]


@dataclass(frozen=True)
class Check:
    name: str
    anchor: str
    fn: CheckFn


_REGISTRY: dict[str, Check] = {}


def check(name: str, anchor: str):
    def register(fn: CheckFn) -> CheckFn:
        if name in _REGISTRY:
            raise ValueError(f"duplicate check {name}")
        _REGISTRY[name] = Check(name, anchor, fn)
        return fn

    return register


def _relation(key: str):
    def run(ctx: RunContext, rng) -> tuple[bool, str]:
        lhs, rhs = ctx.relations[key]
        if lhs == rhs:
            return True, f"{RELATION_LABELS[key]} holds exactly"
        return False, f"{RELATION_LABELS[key]} fails: lhs = {lhs}; rhs = {rhs}"

    return run


for _name, _key in [
    ("rel_u_cubed", "R1"),
    ("rel_commutation", "R2"),
    ("rel_f_sigma", "R3"),
    ("rel_inner_theta", "R4"),
    ("rel_inner_u", "R5"),
    ("rel_d_fixed", "R6"),
    ("rel_norm_lambda", "R7"),
]:
    check(_name, RELATION_LABELS[_key])(_relation(_key))


@check("norm_pi_is_7", "π = α² − α − 2 has N_{K/Q}(π) = 7")
def _norm_pi(ctx, rng):
    n = PI.norm()
    return n == 7, f"N(π) = {n}"


@check("minpoly_irred_mod2", "α³ + α² − 2α − 1 is irreducible mod 2, so 2 is inert in K")
def _minpoly_mod2(ctx, rng):
    poly = reduce_minpoly_mod(2)
    expected = poly_over(F2, 1, 1, 0, 1)
    rts = roots(poly, F2)
    ok = poly == expected and not rts
    return ok, f"minpoly mod 2 = {poly}; roots among 2 candidates: {[str(r) for r in rts]}"


@check("minpoly_cube_mod7", "minpoly ≡ (x − 2)³ mod 7, so 7 is totally ramified in K")
def _minpoly_mod7(ctx, rng):
    poly = reduce_minpoly_mod(7)
    r = total_ramification_witness(7)
    ok = r == 2 and poly == poly_over(F7, 1, 1, 5, 6)
    return ok, f"minpoly mod 7 = {poly}; unique witness r = {r} among 7 candidates"


@check("f_rootless_mod2", "f has no root modulo (2): (2) is inert in L/K")
def _f_mod2(ctx, rng):
    poly = reduce_f_at_residue("two")
    rts = roots(poly, F8)
    return not rts, f"f mod (2) = {poly} over F_8; roots among 8 candidates: {[str(r) for r in rts]}"


@check("f_rootless_modpi", "f has no root modulo (π): (π) is inert in L/K")
def _f_modpi(ctx, rng):
    poly = reduce_f_at_residue("pi")
    rts = roots(poly, F7)
    ok = poly == poly_over(F7, 1, 0, -3, 1) and not rts
    return ok, f"f mod (π) = {poly} over F_7; roots among 7 candidates: {[str(r) for r in rts]}"


@check("mu_9_not_in_F7", "no primitive 9th root of unity in F_7 (9 ∤ 6)")
def _mu9(ctx, rng):
    v = mu_in_Fq(9, 7)
    return v is False, f"mu_in_Fq(9, 7) = {v}"


@check("mu_3_not_in_F2", "no primitive cube root of unity in F_2 (3 ∤ 1)")
def _mu3_f2(ctx, rng):
    v = mu_in_Fq(3, 2)
    return v is False, f"mu_in_Fq(3, 2) = {v}"


@check("mu_3_in_F7", "F_7 contains a primitive cube root of unity (3 | 6)")
def _mu3_f7(ctx, rng):
    v = mu_in_Fq(3, 7)
    return v is True, f"mu_in_Fq(3, 7) = {v}"


@check("t_central", "t = d⁻¹x³ commutes with θ, u, x and constants")
def _t_central(ctx, rng):
    results = check_t_central(ctx.ring, rng, samples=20)
    failed = [k for k, ok in results.items() if not ok]
    if failed:
        return False, f"t fails to commute in {', '.join(failed)}"
    return True, "C1 (θ), C2 (u), C3 (x), C4 (20 random constants) all commute exactly"


@check("valuation_axioms", "x-adic valuation: v(ab) = v(a) + v(b), v(a+b) ≥ min(v(a), v(b))")
def _valuation(ctx, rng):
    ring = ctx.ring
    for trial in range(ctx.trials):
        a = random_series(rng, ring, ctx.precision)
        b = random_series(rng, ring, ctx.precision)
        va, vb = a.valuation(), b.valuation()
        vab = (a * b).valuation()
        if vab != va + vb:
            return False, f"trial {trial}: v(ab) = {vab} but v(a) + v(b) = {va + vb}"
        for s in (a + b, a - b):
            vs = s.valuation()
            if vs < min(va, vb) or (va != vb and vs != min(va, vb)):
                return False, f"trial {trial}: v(a±b) = {vs} with v(a) = {va}, v(b) = {vb}"
        # a + b with equal leading exponents may cancel
        c = a - ring.monomial(a.coeffs[a.min_exponent], a.min_exponent)
        if c.valuation() <= va:
            return False, f"trial {trial}: removing the leading term did not raise the valuation"
        if a.in_valuation_ring() != (va >= XadicValue(0)) or a.in_maximal_ideal() != (va >= XadicValue(1)):
            return False, f"trial {trial}: B_v / M_v membership disagrees with v(a) = {va}"
    if ring.zero().valuation() != XadicValue(None):
        return False, "v(0) is not infinite"
    return True, f"{ctx.trials} random pairs at precision {ctx.precision}"


@check("automorphism_orders", "σ and φ have exact order 3; f(θ) = f(φ(θ)) = 0")
def _orders(ctx, rng):
    if ALPHA.sigma(1) == ALPHA or THETA.phi(1) == THETA:
        return False, "σ or φ is the identity on the generator"
    for trial in range(ctx.trials):
        a, l = random_k(rng), random_l(rng)
        if a.sigma(1).sigma(1).sigma(1) != a:
            return False, f"σ³(a) ≠ a for a = {a}"
        if l.phi(1).phi(1).phi(1) != l:
            return False, f"φ³(l) ≠ l for l = {l}"
        if any(a.coeffs[1:]) and a.sigma(1) == a:
            return False, f"σ fixes the irrational element {a}"
    lift = LElem.coerce
    if F_THETA.evaluate(THETA, lift) or F_THETA.evaluate(THETA.phi(1), lift):
        return False, "θ or φ(θ) is not a root of f"
    return True, f"checked on {ctx.trials} random elements of K and of L"


@check("field_axioms", "K and L are fields: ring laws and inverses")
def _field_axioms(ctx, rng):
    for gen, label in ((random_k, "K"), (random_l, "L")):
        for trial in range(ctx.trials):
            a, b, c = gen(rng), gen(rng), gen(rng)
            if (a * b) * c != a * (b * c) or a * b != b * a or a * (b + c) != a * b + a * c:
                return False, f"{label}: ring law fails on trial {trial}"
            if a and a * a.inverse() != 1:
                return False, f"{label}: a·a⁻¹ ≠ 1 for a = {a}"
    return True, f"{ctx.trials} triples in each of K and L"


@check("norm_multiplicativity", "N_{K/Q} and N_{L/K} are multiplicative")
def _norms(ctx, rng):
    for trial in range(ctx.trials):
        a, b = random_k(rng), random_k(rng)
        if (a * b).norm() != a.norm() * b.norm():
            return False, f"K: N(ab) ≠ N(a)N(b) on trial {trial}"
        l, m = random_l(rng), random_l(rng)
        if (l * m).norm() != l.norm() * m.norm():
            return False, f"L: N(lm) ≠ N(l)N(m) on trial {trial}"
    if (PI.sigma(1) / PI).norm() != 1:
        return False, "N_{K/Q}(σ(π)/π) ≠ 1"
    return True, f"{ctx.trials} pairs in each of K and L; N(σ(π)/π) = 1"


@check("d_ring_axioms", "D = L ⊕ Lu ⊕ Lu² is an associative, noncommutative ring")
def _d_axioms(ctx, rng):
    if D_U * D_THETA == D_THETA * D_U:
        return False, "u·θ = θ·u"
    for trial in range(ctx.trials):
        a, b, c = random_d(rng), random_d(rng), random_d(rng)
        if (a * b) * c != a * (b * c):
            return False, f"associativity fails on trial {trial}"
        if a * (b + c) != a * b + a * c or (a + b) * c != a * c + b * c:
            return False, f"distributivity fails on trial {trial}"
    return True, f"{ctx.trials} random triples; u·θ ≠ θ·u"


@check("homomorphism_sigma_tilde", "σ̃ is a ring homomorphism of D extending σ")
def _hom(ctx, rng):
    s = ctx.aut
    if s.apply(DElem(ALPHA)) != DElem(ALPHA.sigma(1)):
        return False, "σ̃ does not restrict to σ on K"
    for trial in range(ctx.trials):
        a, b = random_d(rng), random_d(rng)
        if s.apply(a + b) != s.apply(a) + s.apply(b):
            return False, f"additivity fails on trial {trial}"
        if s.apply(a * b) != s.apply(a) * s.apply(b):
            return False, f"multiplicativity fails on trial {trial}"
    return True, f"{ctx.trials} random pairs"


@check("sigma_cubed_inner", "σ̃³ = Inn(d) on all of D")
def _cubed(ctx, rng):
    s, w = ctx.aut, ctx.witness
    for trial in range(ctx.trials):
        a = random_d(rng)
        if s.apply(a, 3) != w.conjugate(a):
            return False, f"σ̃³(a) ≠ d·a·d⁻¹ on trial {trial}"
    return True, f"{ctx.trials} random elements"


@check("aut_inverse", "σ̃⁻¹ = σ̃²∘Inn(d⁻¹) is a two-sided inverse")
def _aut_inverse(ctx, rng):
    s, w = ctx.aut, ctx.witness
    for trial in range(ctx.trials):
        a = random_d(rng)
        if s.apply(aut_inverse_apply(s, w, a)) != a or aut_inverse_apply(s, w, s.apply(a)) != a:
            return False, f"σ̃∘σ̃⁻¹ ≠ id on trial {trial}"
    return True, f"{ctx.trials} random elements"


@check("norm_chain", "σ̃(u)³ = N_{L/K}(λ)·2π, so the norm identity and σ̃(u)³ = σ(2π) agree")
def _norm_chain(ctx, rng):
    lam = ctx.aut.lam
    U = ctx.aut.u_image
    chain = U * U * U == DElem(lam.norm() * U_CUBED)
    r1 = ctx.relations["R1"][0] == ctx.relations["R1"][1]
    r7 = ctx.relations["R7"][0] == ctx.relations["R7"][1]
    if not chain:
        return False, "σ̃(u)³ ≠ N(λ)·2π"
    if r1 != r7:
        return False, f"independent evaluations disagree: R1 = {r1}, R7 = {r7}"
    return True, f"σ̃(u)³ = N(λ)·2π; R1 and R7 agree ({r1})"


@check("division_evidence", "D is a division algebra: nonzero elements invert")
def _division(ctx, rng):
    for trial in range(ctx.trials):
        a = nonzero(random_d, rng)
        inv = d_inv(a)
        if a * inv != D_ONE or inv * a != D_ONE:
            return False, f"d_inv is not two-sided on trial {trial}"
    w = ctx.witness
    if w.d * w.d_inverse != D_ONE or w.d_inverse * w.d != D_ONE:
        return False, "d·d⁻¹ ≠ 1"
    return True, f"{ctx.trials} random nonzero elements, no singular system"


@check("series_inverse", "nonzero twisted Laurent series are invertible")
def _series_inverse(ctx, rng):
    ring = ctx.ring
    n = max(1, ctx.trials // 2)
    for trial in range(n):
        a = random_series(rng, ring, ctx.precision)
        inv = ts_inv(a)
        if a * inv != ring.one or inv * a != ring.one:
            return False, f"a·a⁻¹ ≠ 1 to precision on trial {trial}"
        if inv.valuation().exponent != -a.valuation().exponent:
            return False, f"v(a⁻¹) ≠ −v(a) on trial {trial}"
    return True, f"{n} random series at precision {ctx.precision}"


@check("centre_series", "rational series in t lie in the centre")
def _centre(ctx, rng):
    ring = ctx.ring
    t = make_t(ring)
    n = max(1, ctx.trials // 10)
    for trial in range(n):
        z = ring.zero()
        tp = ring.one
        for i in range(3):
            z = z + tp * random_rational(rng)
            tp = tp * t
        if rng.random() < 0.5:
            z = z + ts_inv(t) * random_rational(rng)
        y = random_series(rng, ring, ctx.precision)
        if z * y != y * z:
            return False, f"Σ c_i t^i does not commute with a random series on trial {trial}"
    return True, f"{n} random rational series in t against random series"


@check("tame_delta_residue", "for a tame totally ramified cyclic E/F, residues of σ(a)/a are primitive n-th roots")
def _tame_delta(ctx, rng):
    n_samples = max(1, ctx.trials // 2)
    details = []
    for n in (2, 3, 6):
        zeta = F7.root_of_unity(n)
        seen = {tame_delta_residue(7, n, random_uniformizer(rng, F7), zeta) for _ in range(n_samples)}
        if len(seen) != 1:
            return False, f"n = {n}: residue depends on the uniformizer: {sorted(map(str, seen))}"
        (value,) = seen
        if value.multiplicative_order() != n:
            return False, f"n = {n}: residue {value} is not a primitive {n}-th root of unity"
        details.append(f"n={n}: {value}")
    zeta = F7.root_of_unity(3)
    for trial in range(max(1, ctx.trials // 5)):
        a = random_uniformizer(rng, F7)
        i, j = rng.randrange(3), rng.randrange(3)
        lhs = delta_residue(a, zeta ** (i + j))
        rhs = delta_residue(a, zeta**i) * delta_residue(a, zeta**j)
        if lhs != rhs:
            return False, f"cocycle rule fails for σ^{i}, σ^{j} on trial {trial}"
    return True, f"{n_samples} uniformizers per n ({', '.join(details)}); cocycle rule holds"


def list_checks() -> list[tuple[str, str]]:
    return [(c.name, c.anchor) for c in _REGISTRY.values()]


def run_check(name: str, seed: int = 0, trials: int = 100, *, ctx: RunContext | None = None) -> CheckResult:
    if name not in _REGISTRY:
        raise UnknownCheckError(f"unknown check: {name}")
    entry = _REGISTRY[name]
    if ctx is None:
        ctx = RunContext(seed=seed, trials=trials)
    start = time.perf_counter()
    try:
        passed, detail = entry.fn(ctx, ctx.rng_for(name))
        status = PASS if passed else FAIL
    except Exception as exc:  # noqa: BLE001 - every failure mode is reported
        status, detail = ERROR, f"{type(exc).__name__}: {exc}"
    elapsed = (time.perf_counter() - start) * 1000
    return CheckResult(name, status, detail, round(elapsed, 3), entry.anchor)


def run_all(seed: int = 0, trials: int = 100, fmt: str = "text", *, precision: int = 12,
            constants: ConstantsOverride | None = None) -> tuple[str, int]:
    """Run every check; returns (rendered report, exit code 0 iff all pass)."""
    ctx = RunContext(constants or ConstantsOverride(), seed, trials, precision)
    results = [run_check(name, ctx=ctx) for name in _REGISTRY]
    code = 0 if all(r.passed for r in results) else 1
    return render(results, fmt, ctx), code


def render(results: list[CheckResult], fmt: str, ctx: RunContext) -> str:
    if fmt == "json":
        doc = {
            "seed": ctx.seed,
            "trials": ctx.trials,
            "precision": ctx.precision,
            "constants": ctx.constants.source or "built-in",
            "all_passed": all(r.passed for r in results),
            "checks": [asdict(r) for r in results],
        }
        return json.dumps(doc, indent=2, ensure_ascii=False)
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    width = max(len(r.name) for r in results)
    lines = []
    for r in results:
        lines.append(f"{r.status.upper():5}  {r.name:<{width}}  {r.elapsed_ms:9.1f} ms  {r.anchor}")
        if not r.passed:
            detail = r.detail if len(r.detail) <= TEXT_DETAIL_LIMIT else r.detail[:TEXT_DETAIL_LIMIT] + " …"
            lines.append(f"       -> {detail}")
    n_pass = sum(r.passed for r in results)
    lines.append(f"{n_pass}/{len(results)} checks passed")
    return "\n".join(lines)
