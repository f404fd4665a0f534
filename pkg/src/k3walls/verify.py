"""Property suites behind the ``verify`` subcommand.

Each check is a pure function of its ranges and a fixed seed, so results are
identical regardless of worker count or scheduling.  Checks are grouped by
the module whose invariants they exercise; ``run_checks`` executes a set of
suites on a thread pool and returns results in canonical name order.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import chains, hbn, lattice, stability, strata, tableaux
from .errors import DomainError

THREADS_ENV = "K3WALLS_THREADS"
SUITES = ("lattice", "stability", "strata", "hbn", "tableaux", "chains")


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def _surfaces(max_g, max_k):
    return [
        lattice.SurfaceParams(g, k)
        for g in range(3, max_g + 1)
        for k in range(2, max_k + 1)
    ]


def _random_vector(rng, bound):
    return lattice.MukaiVector(*(rng.randint(-bound, bound) for _ in range(4)))


# ---------------------------------------------------------------- lattice

def check_lattice_bilinearity(max_g, max_k, budget=300):
    rng = random.Random(20240801)
    for params in _surfaces(min(max_g, 6), min(max_k, 4)):
        for _ in range(budget // 10):
            u, v, w = (_random_vector(rng, 10**6) for _ in range(3))
            a, b = rng.randint(-50, 50), rng.randint(-50, 50)
            if lattice.mukai_pairing(params, u, v) != lattice.mukai_pairing(params, v, u):
                return CheckResult("lattice.bilinearity", False, f"symmetry fails at {u}, {v}")
            left = lattice.mukai_pairing(params, a * u + b * v, w)
            right = a * lattice.mukai_pairing(params, u, w) + b * lattice.mukai_pairing(params, v, w)
            if left != right:
                return CheckResult("lattice.bilinearity", False, f"linearity fails at {u}, {v}, {w}")
    return CheckResult("lattice.bilinearity", True, "random symmetric bilinearity")


def check_lattice_discriminant(max_g, max_k, budget=500):
    rng = random.Random(20240802)
    for params in _surfaces(min(max_g, 6), min(max_k, 4)):
        for _ in range(budget // 10):
            v = _random_vector(rng, 10**6)
            if lattice.discriminant(params, v) != lattice.square(params, v) + 2 * v.r * v.r:
                return CheckResult("lattice.discriminant", False, f"identity fails at {v}")
    return CheckResult("lattice.discriminant", True, "discriminant matches pairing plus 2r^2")


def check_lattice_signature(max_g, max_k, budget=None):
    for params in _surfaces(max_g, max_k):
        if lattice.gram_signature(params) != (2, 2):
            return CheckResult("lattice.signature", False, f"signature off at {params}")
    return CheckResult("lattice.signature", True, "Gram signature (2,2) on the whole grid")


def check_lattice_pencil_spherical(max_g, max_k, budget=100):
    for params in _surfaces(max_g, max_k):
        for e in range(budget + 1):
            u = lattice.line_bundle_vector(e)
            if lattice.square(params, u) != -2:
                return CheckResult("lattice.pencil_spherical", False, f"square off at e={e}")
    return CheckResult("lattice.pencil_spherical", True, "pencil powers are spherical")


# -------------------------------------------------------------- stability

def check_stability_slope_scaling(max_g, max_k, budget=200):
    rng = random.Random(20240803)
    for params in _surfaces(min(max_g, 5), min(max_k, 4)):
        sp = stability.StabilityParams(params, Fraction(1, rng.randint(3, 30)))
        for _ in range(budget // 10):
            v = _random_vector(rng, 40)
            pt = stability.StabilityPoint(Fraction(rng.randint(-3, 3), 7), Fraction(rng.randint(0, 9), 5))
            n = rng.randint(1, 9)
            if stability.slope(sp, pt, v) != stability.slope(sp, pt, n * v):
                return CheckResult("stability.slope_scaling", False, f"scaling fails at {v}, n={n}")
    return CheckResult("stability.slope_scaling", True, "slope invariant under positive scaling")


def check_stability_rank_zero_slope(max_g, max_k, budget=200):
    rng = random.Random(20240804)
    for params in _surfaces(min(max_g, 5), min(max_k, 4)):
        sp = stability.StabilityParams(params, Fraction(1, rng.randint(3, 30)))
        for _ in range(budget // 10):
            v = lattice.MukaiVector(0, rng.randint(0, 5), rng.randint(-5, 5), rng.randint(-9, 9))
            im = sp.pic_dot_h_eps(v.x, v.y)
            if im == 0:
                continue
            expected = Fraction(v.s) / im
            for _ in range(3):
                pt = stability.StabilityPoint(Fraction(rng.randint(-4, 4), 5), Fraction(rng.randint(0, 12), 7))
                re, im2 = stability.central_charge(sp, pt, v)
                if stability.slope(sp, pt, v) != expected or -re != expected * im2:
                    return CheckResult("stability.rank_zero_slope", False, f"slope off at {v}")
    return CheckResult("stability.rank_zero_slope", True, "rank-0 slopes are point-independent")


def check_stability_wall_monotone(max_g, max_k, budget=None):
    for params in _surfaces(min(max_g, 6), min(max_k, 4)):
        for s in (-1, -2, -3):
            v = lattice.MukaiVector(0, 1, 0, s)
            sp = stability.StabilityParams(params, stability.default_epsilon(params, v) / 2)
            ws = [stability.wall_on_axis(sp, v, lattice.line_bundle_vector(e)).w for e in range(1, 7)]
            if any(a >= b for a, b in zip(ws, ws[1:])):
                return CheckResult(
                    "stability.wall_monotone", False, f"walls not increasing in e at {params}, s={s}"
                )
    return CheckResult("stability.wall_monotone", True, "pencil walls increase with e")


def check_stability_lemma_key(max_g, max_k, budget=12):
    fractions = (Fraction(1, 2), Fraction(3, 4), Fraction(9, 10))
    for params in _surfaces(min(max_g, 8), min(max_k, 5)):
        for m in range(5):
            eps_m = stability.epsilon_threshold(params, m)
            for frac in fractions:
                hits = stability.lemma_key_scan(params, m, eps_m * frac, box=budget)
                if hits:
                    return CheckResult(
                        "stability.lemma_key",
                        False,
                        f"violations {hits[:3]} at {params}, m={m}, eps={eps_m * frac}",
                    )
    return CheckResult("stability.lemma_key", True, "no two-value violations in the scan box")


# ----------------------------------------------------------------- strata

def _vector_for(g, d):
    return lattice.MukaiVector(0, 1, 0, 1 + d - g)


def check_strata_dimension_identity(max_g, max_k, budget=6):
    for g in range(3, max_g + 1):
        params_cache = {}
        for k in range(2, max_k + 1):
            params = params_cache.setdefault(k, lattice.SurfaceParams(g, k))
            for d in range(0, g):
                v = _vector_for(g, d)
                for r in range(0, budget + 1):
                    for ell in range(max(0, r + 1 - k), r + 1):
                        dec = hbn.ell_decompose(r, ell)
                        pairs = []
                        if dec.m1 > 0:
                            pairs.append((dec.e + 1, dec.m1))
                        pairs.append((dec.e, dec.m2))
                        t = strata.StabilityType(tuple(pairs))
                        got = strata.stratum_dimension(params, v, t)
                        want = g + hbn.rho(g, r - ell, d) - ell * k
                        if got != want:
                            return CheckResult(
                                "strata.dimension_identity",
                                False,
                                f"{got} != {want} at (g,k,d,r,ell)=({g},{k},{d},{r},{ell})",
                            )
    return CheckResult("strata.dimension_identity", True, "balanced dimension identity exact")


def check_strata_dimension_bounds(max_g, max_k, budget=4):
    for g in range(3, min(max_g, 9) + 1):
        for k in range(2, min(max_k, 5) + 1):
            params = lattice.SurfaceParams(g, k)
            for d in range(1, g):
                v = _vector_for(g, d)
                for r in range(0, budget + 1):
                    for t in strata.enumerate_types(params, v, r).items:
                        ell = strata.ell_value(t, r)
                        bound = g + hbn.rho(g, r - ell, d) - ell * k
                        dim = strata.stratum_dimension(params, v, t)
                        if dim > bound:
                            return CheckResult(
                                "strata.dimension_bounds",
                                False,
                                f"dim {dim} > bound {bound} for {t.to_list()} at ({g},{k},{d},{r})",
                            )
                        if t.weighted_sections() == r + 1 and dim != bound:
                            return CheckResult(
                                "strata.dimension_bounds",
                                False,
                                f"saturated type misses bound for {t.to_list()} at ({g},{k},{d},{r})",
                            )
    return CheckResult("strata.dimension_bounds", True, "upper bound and saturated equality hold")


def check_strata_nonexistence(max_g, max_k, budget=3):
    for g in range(3, min(max_g, 8) + 1):
        for k in range(2, min(max_k, 5) + 1):
            params = lattice.SurfaceParams(g, k)
            for d in range(1, g):
                for r in range(0, budget + 1):
                    value, _ = hbn.rho_k(g, k, r, d)
                    if value >= 0:
                        continue
                    v = _vector_for(g, d)
                    enum = strata.enumerate_types(params, v, r)
                    for t in enum.items:
                        ell = strata.ell_value(t, r)
                        if hbn.rho(g, r - ell, d) - ell * k >= 0:
                            return CheckResult(
                                "strata.nonexistence",
                                False,
                                f"type {t.to_list()} has nonneg count at ({g},{k},{d},{r})",
                            )
                    items = set(enum.items)
                    for ell in range(0, r + 1):
                        dec = hbn.ell_decompose(r, ell)
                        verdict = strata.balanced_nonempty(
                            params,
                            v,
                            [(dec.e + 1, dec.m1), (dec.e, dec.m2)],
                            strata.degree_case_for(v),
                        )
                        pairs = [(dec.e + 1, dec.m1)] if dec.m1 else []
                        t = strata.StabilityType(tuple(pairs + [(dec.e, dec.m2)]))
                        if t in items and verdict.verdict is not strata.Verdict.EMPTY_BY_NECESSITY:
                            return CheckResult(
                                "strata.nonexistence",
                                False,
                                f"enumerated balanced type {t.to_list()} not excluded at ({g},{k},{d},{r})",
                            )
    return CheckResult("strata.nonexistence", True, "negative rho_k excludes every type")


def check_strata_square_filter(max_g, max_k, budget=3):
    for g in range(3, min(max_g, 8) + 1):
        for k in range(2, min(max_k, 5) + 1):
            params = lattice.SurfaceParams(g, k)
            for d in range(1, g):
                v = _vector_for(g, d)
                for r in range(0, budget + 1):
                    full = strata.enumerate_types(params, v, r).items
                    kept = set(strata.enumerate_types(params, v, r, square_filtered=True).items)
                    for t in full:
                        dec_pairs = t.pairs
                        balanced = (
                            len(dec_pairs) == 1
                            or (len(dec_pairs) == 2 and dec_pairs[0][0] == dec_pairs[1][0] + 1)
                        )
                        if not balanced:
                            continue
                        verdict = strata.balanced_nonempty(params, v, t, strata.degree_case_for(v))
                        dropped = t not in kept
                        excluded = verdict.verdict is strata.Verdict.EMPTY_BY_NECESSITY
                        if dropped != excluded:
                            return CheckResult(
                                "strata.square_filter",
                                False,
                                f"filter/verdict mismatch for {t.to_list()} at ({g},{k},{d},{r})",
                            )
    return CheckResult("strata.square_filter", True, "square filter matches emptiness verdicts")


# -------------------------------------------------------------------- hbn

def check_hbn_rho_k_dominates(max_g, max_k, budget=6):
    for g in range(1, max(3, max_g) + 1):
        for k in range(2, max_k + 1):
            for d in range(0, g):
                for r in range(0, budget + 1):
                    value, argmax = hbn.rho_k(g, k, r, d)
                    base = hbn.rho(g, r, d)
                    if value < base or ((value == base) != (0 in argmax)):
                        return CheckResult(
                            "hbn.rho_k_dominates", False, f"fails at ({g},{k},{r},{d})"
                        )
    return CheckResult("hbn.rho_k_dominates", True, "rho_k dominates rho; equality iff ell=0 wins")


def check_hbn_rho_k_monotone(max_g, max_k, budget=7):
    for g in range(1, max(3, max_g) + 1):
        for k in range(2, max_k + 1):
            for d in range(0, g):
                values = [hbn.rho_k(g, k, r, d)[0] for r in range(0, budget + 1)]
                if any(a < b for a, b in zip(values, values[1:])):
                    return CheckResult("hbn.rho_k_monotone", False, f"fails at ({g},{k},{d})")
    return CheckResult("hbn.rho_k_monotone", True, "rho_k non-increasing in r")


def check_hbn_ell_round_trip(max_g, max_k, budget=40):
    for r in range(0, budget + 1):
        for ell in range(0, r + 1):
            dec = hbn.ell_decompose(r, ell)
            if dec.m1 < 0 or dec.m2 <= 0 or dec.m1 > r - ell:
                return CheckResult("hbn.ell_round_trip", False, f"bad split at (r,ell)=({r},{ell})")
            if dec.m1 * (dec.e + 2) + dec.m2 * (dec.e + 1) != r + 1:
                return CheckResult("hbn.ell_round_trip", False, f"rank off at (r,ell)=({r},{ell})")
            if dec.e * (r + 1 - ell) + dec.m1 != ell:
                return CheckResult("hbn.ell_round_trip", False, f"index off at (r,ell)=({r},{ell})")
            if (r + 1) - (dec.m1 + dec.m2) != ell:
                return CheckResult("hbn.ell_round_trip", False, f"round trip off at ({r},{ell})")
    return CheckResult("hbn.ell_round_trip", True, "ell decomposition round-trips")


def check_hbn_degeneracy_identity(max_g, max_k, budget=6):
    for g in range(3, max(max_g, 3) + 1):
        for k in range(2, max(max_k, 2) + 1):
            for d in range(0, g):
                for r in range(0, budget + 1):
                    for ell in range(max(0, r + 2 - k), r + 1):
                        hbn.degeneracy_dims(g, k, d, r, ell)  # raises on mismatch
    return CheckResult("hbn.degeneracy_identity", True, "degeneracy dimensions match closed form")


def check_hbn_splitting_correspondence(max_g, max_k, budget=5):
    for g in range(3, min(max_g, 10) + 1):
        for k in range(2, min(max_k, 6) + 1):
            for d in range(1, g):
                for r in range(0, budget + 1):
                    for ell in range(max(0, r + 2 - k), r + 1):
                        dec = hbn.ell_decompose(r, ell)
                        frag = [dec.e + 1] * dec.m1 + [dec.e] * dec.m2
                        if hbn.balanced_correspondence(frag) != (dec.e, dec.m1, dec.m2):
                            return CheckResult(
                                "hbn.splitting_correspondence",
                                False,
                                f"mismatch at ({g},{k},{d},{r},{ell})",
                            )
                        # full splitting round trip when the negative rest fits one slot
                        n_rest = k - dec.m1 - dec.m2
                        deg_rest = (d + 1 - g - k) - (dec.m1 * (dec.e + 1) + dec.m2 * dec.e)
                        if n_rest >= 1 and deg_rest % n_rest == 0:
                            f_rest = deg_rest // n_rest
                            if f_rest < 0:
                                pairs = []
                                if dec.m1:
                                    pairs.append((dec.e + 1, dec.m1))
                                pairs.append((dec.e, dec.m2))
                                pairs.append((f_rest, n_rest))
                                st = hbn.SplittingType(tuple(pairs))
                                nonneg = hbn.splitting_nonneg_part(g, k, d, st)
                                got = hbn.balanced_correspondence(nonneg.values())
                                if got != (dec.e, dec.m1, dec.m2):
                                    return CheckResult(
                                        "hbn.splitting_correspondence",
                                        False,
                                        f"round trip off at ({g},{k},{d},{r},{ell})",
                                    )
    return CheckResult("hbn.splitting_correspondence", True, "balanced data matches splitting side")


# ---------------------------------------------------------------- tableaux

def check_tableaux_pruning(max_g, max_k, budget=9):
    for g in range(3, min(max_g, 7) + 1):
        for k in range(2, min(max_k, 4) + 1):
            for r in range(0, 3):
                for d in range(1, g):
                    if g - d + r < 1 or (r + 1) * (g - d + r) > budget:
                        continue
                    fast = tableaux.max_omitted(g, k, r, d)
                    slow = tableaux.max_omitted_naive(g, k, r, d)
                    if (fast.feasible, fast.omitted) != (slow.feasible, slow.omitted):
                        return CheckResult(
                            "tableaux.pruning", False, f"mismatch at ({g},{k},{r},{d})"
                        )
    return CheckResult("tableaux.pruning", True, "pruned search agrees with naive enumeration")


def check_tableaux_oracle(max_g, max_k, budget=12):
    for g in range(3, min(max_g, 8) + 1):
        for k in range(2, min(max_k, 5) + 1):
            for r in range(0, 4):
                for d in range(1, g):
                    if g - d + r < 1 or (r + 1) * (g - d + r) > budget:
                        continue
                    report = tableaux.oracle_check(g, k, r, d)  # raises on hard violations
                    if report.rho_k >= 0 and not report.equality:
                        return CheckResult(
                            "tableaux.oracle",
                            False,
                            f"omitted {report.omitted} != rho_k {report.rho_k} at ({g},{k},{r},{d})",
                        )
    return CheckResult("tableaux.oracle", True, "tableau maximum equals rho_k when nonnegative")


# ------------------------------------------------------------------ chains

def check_chains_verify(max_g, max_k, budget=None):
    for g in range(3, max(max_g, 3) + 1):
        for r in range(0, 5):
            for k in range(r + 2, max(max_k, 2) + 1):
                for d in range(0, g):
                    if hbn.rho(g, r, d) < 0:
                        continue
                    report = chains.verify_chain(chains.build_chain(g, k, r, d))
                    if not report.ok:
                        return CheckResult(
                            "chains.verify",
                            False,
                            f"failures at ({g},{k},{r},{d}): {report.failures[:2]}",
                        )
    return CheckResult("chains.verify", True, "all constructed chains verify")


def check_chains_telescoping(max_g, max_k, budget=None):
    for g in range(3, max(max_g, 3) + 1):
        for r in range(0, 5):
            for k in range(r + 2, max(max_k, 2) + 1):
                for d in range(0, g):
                    if hbn.rho(g, r, d) < 0:
                        continue
                    chain = chains.build_chain(g, k, r, d)
                    first = (r + 1) * (g - d + r)
                    comps = chain.components
                    for a in range(0, min(first, g) - 1):
                        gap = comps[a + 1].alpha_in.weight - comps[a].alpha_in.weight
                        if gap != r:
                            return CheckResult(
                                "chains.telescoping",
                                False,
                                f"weight gap {gap} != r at ({g},{k},{r},{d}), a={a + 1}",
                            )
    return CheckResult("chains.telescoping", True, "incoming weights step by r in the first range")


def check_chains_complement(max_g, max_k, budget=300):
    rng = random.Random(20240805)
    for _ in range(budget):
        r = rng.randint(0, 6)
        d = rng.randint(r, r + 12)
        alphas = sorted(rng.randint(0, d - r) for _ in range(r + 1))
        seq = chains.RamificationSequence(tuple(alphas))
        twice = chains.complement(r, d, chains.complement(r, d, seq))
        if twice != seq:
            return CheckResult("chains.complement", False, f"involution fails at r={r}, d={d}")
    return CheckResult("chains.complement", True, "complement is an involution")


CHECKS = {
    "lattice": [
        check_lattice_bilinearity,
        check_lattice_discriminant,
        check_lattice_signature,
        check_lattice_pencil_spherical,
    ],
    "stability": [
        check_stability_slope_scaling,
        check_stability_rank_zero_slope,
        check_stability_wall_monotone,
        check_stability_lemma_key,
    ],
    "strata": [
        check_strata_dimension_identity,
        check_strata_dimension_bounds,
        check_strata_nonexistence,
        check_strata_square_filter,
    ],
    "hbn": [
        check_hbn_rho_k_dominates,
        check_hbn_rho_k_monotone,
        check_hbn_ell_round_trip,
        check_hbn_degeneracy_identity,
        check_hbn_splitting_correspondence,
    ],
    "tableaux": [
        check_tableaux_pruning,
        check_tableaux_oracle,
    ],
    "chains": [
        check_chains_verify,
        check_chains_telescoping,
        check_chains_complement,
    ],
}


def worker_count() -> int:
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            n = int(env)
        except ValueError as exc:
            raise DomainError(f"bad {THREADS_ENV}: {env!r}", code="bad_threads") from exc
        if n < 1:
            raise DomainError(f"bad {THREADS_ENV}: {env!r}", code="bad_threads")
        return n
    return min(4, os.cpu_count() or 1)


def _guarded(fn, max_g, max_k) -> CheckResult:
    name = fn.__name__.removeprefix("check_").replace("_", ".", 1)
    try:
        return fn(max_g, max_k)
    except Exception as exc:  # a raising check is a failing check, not a crash
        return CheckResult(name, False, f"raised {type(exc).__name__}: {exc}")


def run_checks(suite: str, max_g: int, max_k: int) -> list[CheckResult]:
    """Run one suite (or "all") on a worker pool; canonical name order."""
    if suite == "all":
        selected = [fn for name in SUITES for fn in CHECKS[name]]
    elif suite in CHECKS:
        selected = list(CHECKS[suite])
    else:
        raise DomainError(f"unknown suite {suite!r}", code="unknown_suite")
    with ThreadPoolExecutor(max_workers=worker_count()) as pool:
        results = list(pool.map(lambda fn: _guarded(fn, max_g, max_k), selected))
    return sorted(results, key=lambda res: res.name)
