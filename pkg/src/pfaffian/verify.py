"""Randomized and symbolic verification of the identity registry.

Each registry entry knows how to draw a random exact instance of its
identity (with resampling when a precondition such as nonsingularity
fails) and, where the identity is polynomial in generic entries, how to
check it symbolically once and for all at a given shape.

Trial randomness is derived per (seed, identity, trial, attempt) through a
hash, so results do not depend on scheduling; reports are emitted in trial
order and machine-readable output carries no timing, making byte-identical
runs at any worker count a hard guarantee.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .algebra import MultiPoly, format_scalar
from .closedforms import (
    FamilyParams,
    PointConfig,
    blaschke_form,
    family_form,
    n4_criterion_residual,
    power_form,
    product_pf,
    torelli_pf,
)
from .core import GenericForm, MatrixForm, pf_elimination, pf_matchings
from .detbridge import (
    BipartiteForm,
    bezout_residual,
    brioschi_pf,
    desnanot_five_residual,
    desnanot_residual,
    fontaine_residual,
    jacobi_adjugate_residual,
    sylvester_residual,
)
from .identities import (
    averaged_expansion_residual,
    brill_residual,
    cancelling_residual,
    cayley_bordered_residual,
    cayley_square_residual,
    complementary_residual,
    expansion_residual,
    minor_product_residual,
    solve_skew_cramer,
    tanner_residual,
    wenzel_residual,
)

MAX_RESAMPLES = 1000
SYMBOLIC_LETTER_BOUND = 12


class Resample(Exception):
    """A sampled instance missed a precondition; draw again."""


def _derive_seed(seed: int, name: str, index: int, attempt: int) -> int:
    digest = hashlib.sha256(f"{seed}:{name}:{index}:{attempt}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def rand_scalar(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def rand_skew_matrix(rng: random.Random, dim: int):
    matrix = [[Fraction(0)] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(i + 1, dim):
            value = rand_scalar(rng)
            matrix[i][j] = value
            matrix[j][i] = -value
    return matrix


def rand_matrix(rng: random.Random, dim: int):
    return [[rand_scalar(rng) for _ in range(dim)] for _ in range(dim)]


def rand_points(rng: random.Random, count: int):
    points = [rand_scalar(rng) for _ in range(count)]
    if len(set(points)) != count:
        raise Resample
    return points


def _shuffled_split(rng: random.Random, *sizes: int):
    letters = list(range(sum(sizes)))
    rng.shuffle(letters)
    words = []
    start = 0
    for size in sizes:
        words.append(tuple(letters[start:start + size]))
        start += size
    return words


def _symbolic_bound(letters: int):
    if letters > SYMBOLIC_LETTER_BOUND:
        raise ValueError(
            f"symbolic expansion over {letters} letters exceeds the supported"
            f" bound ({SYMBOLIC_LETTER_BOUND}); use numeric verification"
        )


# ---------------------------------------------------------------------------
# numeric and symbolic runners, one pair per registry entry


def _numeric_tanner(rng, opt):
    al, bl = opt["alpha_len"], opt["beta_len"]
    form = MatrixForm(rand_skew_matrix(rng, al + bl))
    alpha, beta = _shuffled_split(rng, al, bl)
    return [tanner_residual(form, alpha, beta, x) for x in beta]


def _symbolic_tanner(opt):
    al, bl = opt["alpha_len"], opt["beta_len"]
    _symbolic_bound(al + bl)
    alpha, beta = tuple(range(al)), tuple(range(al, al + bl))
    form = GenericForm()
    return [(f"x={x}", tanner_residual(form, alpha, beta, x)) for x in beta]


def _numeric_expansion(rng, opt):
    bl = opt["beta_len"]
    form = MatrixForm(rand_skew_matrix(rng, bl))
    (beta,) = _shuffled_split(rng, bl)
    return [expansion_residual(form, beta, x) for x in beta]


def _symbolic_expansion(opt):
    bl = opt["beta_len"]
    _symbolic_bound(bl)
    beta = tuple(range(bl))
    form = GenericForm()
    return [(f"x={x}", expansion_residual(form, beta, x)) for x in beta]


def _numeric_averaged(rng, opt):
    bl = opt["beta_len"]
    form = MatrixForm(rand_skew_matrix(rng, bl))
    (beta,) = _shuffled_split(rng, bl)
    return [averaged_expansion_residual(form, beta)]


def _symbolic_averaged(opt):
    bl = opt["beta_len"]
    _symbolic_bound(bl)
    form = GenericForm()
    return [("cleared", averaged_expansion_residual(form, tuple(range(bl))))]


def _numeric_minor_product(rng, opt):
    al, bl = opt["alpha_len"], opt["beta_len"]
    form = MatrixForm(rand_skew_matrix(rng, al + bl))
    alpha, beta = _shuffled_split(rng, al, bl)
    return [minor_product_residual(form, alpha, beta)]


def _symbolic_minor_product(opt):
    al, bl = opt["alpha_len"], opt["beta_len"]
    _symbolic_bound(al + bl)
    form = GenericForm()
    return [("residual", minor_product_residual(form, tuple(range(al)), tuple(range(al, al + bl))))]


def _numeric_complementary(rng, opt):
    al, bl = opt["alpha_len"], opt["beta_len"]
    form = MatrixForm(rand_skew_matrix(rng, al + bl))
    alpha, beta = _shuffled_split(rng, al, bl)
    return [complementary_residual(form, alpha, beta)]


def _symbolic_complementary(opt):
    al, bl = opt["alpha_len"], opt["beta_len"]
    _symbolic_bound(al + bl)
    form = GenericForm()
    return [("residual", complementary_residual(form, tuple(range(al)), tuple(range(al, al + bl))))]


def _numeric_wenzel(rng, opt):
    al, bl, gl = opt["alpha_len"], opt["beta_len"], opt["gamma_len"]
    form = MatrixForm(rand_skew_matrix(rng, al + bl + gl))
    alpha, beta, gamma = _shuffled_split(rng, al, bl, gl)
    return [wenzel_residual(form, alpha, beta, gamma, x) for x in beta]


def _symbolic_wenzel(opt):
    al, bl, gl = opt["alpha_len"], opt["beta_len"], opt["gamma_len"]
    _symbolic_bound(al + max(bl, gl) + 2)
    alpha = tuple(range(al))
    beta = tuple(range(al, al + bl))
    gamma = tuple(range(al + bl, al + bl + gl))
    form = GenericForm()
    return [(f"x={x}", wenzel_residual(form, alpha, beta, gamma, x)) for x in beta]


def _numeric_cancelling(rng, opt):
    al, bl, gl = opt["alpha_len"], opt["beta_len"], opt["gamma_len"]
    form = MatrixForm(rand_skew_matrix(rng, al + bl + gl))
    alpha, beta, gamma = _shuffled_split(rng, al, bl, gl)
    return [cancelling_residual(form, alpha, beta, gamma)]


def _symbolic_cancelling(opt):
    al, bl, gl = opt["alpha_len"], opt["beta_len"], opt["gamma_len"]
    _symbolic_bound(al + bl + 2 * gl)
    alpha = tuple(range(al))
    beta = tuple(range(al, al + bl))
    gamma = tuple(range(al + bl, al + bl + gl))
    form = GenericForm()
    return [("residual", cancelling_residual(form, alpha, beta, gamma))]


def _numeric_brill(rng, opt):
    n, k = opt["n"], opt["k"]
    form = MatrixForm(rand_skew_matrix(rng, 2 * n))
    (alpha,) = _shuffled_split(rng, 2 * n)
    ks = range(n + 1) if k is None else [k]
    return [brill_residual(form, alpha, kk) for kk in ks]


def _symbolic_brill(opt):
    n, k = opt["n"], opt["k"]
    _symbolic_bound(2 * n)
    alpha = tuple(range(2 * n))
    form = GenericForm()
    ks = range(n + 1) if k is None else [k]
    return [(f"k={kk}", brill_residual(form, alpha, kk)) for kk in ks]


def _numeric_cayley_square(rng, opt):
    al = opt["alpha_len"]
    form = MatrixForm(rand_skew_matrix(rng, al))
    (alpha,) = _shuffled_split(rng, al)
    return [cayley_square_residual(form, alpha)]


def _symbolic_cayley_square(opt):
    al = opt["alpha_len"]
    _symbolic_bound(al)
    return [("residual", cayley_square_residual(GenericForm(), tuple(range(al))))]


def _numeric_cayley_bordered(rng, opt):
    n = opt["n"]
    if n < 1:
        raise ValueError(f"bordered dimension must be at least 1, got {n}")
    form = MatrixForm(rand_skew_matrix(rng, n + 1))
    (letters,) = _shuffled_split(rng, n + 1)
    return [cayley_bordered_residual(form, letters[0], letters[1], letters[2:])]


def _symbolic_cayley_bordered(opt):
    n = opt["n"]
    if n < 1:
        raise ValueError(f"bordered dimension must be at least 1, got {n}")
    _symbolic_bound(n + 1)
    form = GenericForm()
    return [("residual", cayley_bordered_residual(form, 0, 1, tuple(range(2, n + 1))))]


def _numeric_cramer(rng, opt):
    n = opt["n"]
    if n % 2:
        raise ValueError(f"cramer needs an even dimension, got {n}")
    matrix = rand_skew_matrix(rng, n)
    if pf_elimination(matrix) == 0:
        raise Resample
    rhs = [rand_scalar(rng) for _ in range(n)]
    solution = solve_skew_cramer(matrix, rhs)
    return [
        sum(matrix[i][j] * solution[j] for j in range(n)) - rhs[i]
        for i in range(n)
    ]


def _numeric_desnanot(rng, opt):
    al, gl = opt["alpha_len"], opt["gamma_len"]
    dim = al + gl
    form = BipartiteForm(rand_matrix(rng, dim))
    alpha, gamma = _shuffled_split(rng, al, gl)
    beta, delta = _shuffled_split(rng, al, gl)
    return [desnanot_residual(form, alpha, beta, gamma, delta, x) for x in gamma]


def _symbolic_desnanot(opt):
    al, gl = opt["alpha_len"], opt["gamma_len"]
    dim = al + gl
    _symbolic_bound(2 * dim)
    form = BipartiteForm.generic(dim)
    alpha, gamma = tuple(range(al)), tuple(range(al, dim))
    beta, delta = tuple(range(al)), tuple(range(al, dim))
    return [(f"x={x}", desnanot_residual(form, alpha, beta, gamma, delta, x)) for x in gamma]


def _numeric_jacobi(rng, opt):
    al, n = opt["alpha_len"], opt["n"]
    dim = al + n
    form = BipartiteForm(rand_matrix(rng, dim))
    alpha, xs = _shuffled_split(rng, al, n)
    beta, ys = _shuffled_split(rng, al, n)
    return [jacobi_adjugate_residual(form, alpha, beta, xs, ys)]


def _symbolic_jacobi(opt):
    al, n = opt["alpha_len"], opt["n"]
    dim = al + n
    _symbolic_bound(2 * dim)
    form = BipartiteForm.generic(dim)
    alpha, xs = tuple(range(al)), tuple(range(al, dim))
    beta, ys = tuple(range(al)), tuple(range(al, dim))
    return [("residual", jacobi_adjugate_residual(form, alpha, beta, xs, ys))]


def _numeric_sylvester(rng, opt):
    al, n = opt["alpha_len"], opt["n"]
    dim = al + n
    form = BipartiteForm(rand_matrix(rng, dim))
    alpha, xs = _shuffled_split(rng, al, n)
    beta, ys = _shuffled_split(rng, al, n)
    return [sylvester_residual(form, alpha, beta, xs, ys)]


def _symbolic_sylvester(opt):
    al, n = opt["alpha_len"], opt["n"]
    dim = al + n
    _symbolic_bound(2 * dim)
    form = BipartiteForm.generic(dim)
    alpha, xs = tuple(range(al)), tuple(range(al, dim))
    beta, ys = tuple(range(al)), tuple(range(al, dim))
    return [("residual", sylvester_residual(form, alpha, beta, xs, ys))]


def _numeric_fontaine(rng, opt):
    form = BipartiteForm(rand_matrix(rng, 4))
    rows = rng.sample(range(4), 2)
    cols = list(range(4))
    rng.shuffle(cols)
    return [fontaine_residual(form, rows, cols)]


def _symbolic_fontaine(opt):
    form = BipartiteForm.generic(4)
    return [("residual", fontaine_residual(form, (0, 1), (0, 1, 2, 3)))]


def _numeric_bezout(rng, opt):
    form = BipartiteForm(rand_matrix(rng, 6))
    rows = rng.sample(range(6), 3)
    cols = list(range(6))
    rng.shuffle(cols)
    return [bezout_residual(form, rows, cols)]


def _symbolic_bezout(opt):
    form = BipartiteForm.generic(6)
    return [("residual", bezout_residual(form, (0, 1, 2), tuple(range(6))))]


def _numeric_desnanot_five(rng, opt):
    form = BipartiteForm(rand_matrix(rng, 5))
    rows = rng.sample(range(5), 3)
    cols = list(range(5))
    rng.shuffle(cols)
    return [desnanot_five_residual(form, rows, cols)]


def _symbolic_desnanot_five(opt):
    form = BipartiteForm.generic(5)
    return [("residual", desnanot_five_residual(form, (0, 1, 2), tuple(range(5))))]


def _numeric_brioschi(rng, opt):
    n = opt["n"]
    if n % 2:
        raise ValueError(f"brioschi needs an even dimension, got {n}")
    pf_value, det_value = brioschi_pf(rand_matrix(rng, n))
    return [pf_value - det_value]


def _symbolic_brioschi(opt):
    n = opt["n"]
    if n % 2:
        raise ValueError(f"brioschi needs an even dimension, got {n}")
    _symbolic_bound(2 * n)
    matrix = [[MultiPoly.gen(2 * i, 2 * j + 1) for j in range(n)] for i in range(n)]
    pf_value, det_value = brioschi_pf(matrix)
    return [("pf-minus-det", pf_value - det_value)]


def _sample_point_form(rng, count, maker):
    points = rand_points(rng, count)
    try:
        return maker(PointConfig(points))
    except ValueError:
        raise Resample from None


def _numeric_blaschke(rng, opt):
    n = opt["n"]
    form = _sample_point_form(rng, n, blaschke_form)
    (word,) = _shuffled_split(rng, n)
    return [pf_matchings(form, word) - product_pf(form, word)]


def _numeric_family(rng, opt):
    n = opt["n"]
    params = FamilyParams(*opt["params"])
    form = _sample_point_form(rng, n, lambda config: family_form(config, params))
    (word,) = _shuffled_split(rng, n)
    return [pf_matchings(form, word) - product_pf(form, word)]


def _numeric_torelli(rng, opt):
    n, k = opt["n"], opt["k"]
    points = rand_points(rng, n)
    (word,) = _shuffled_split(rng, n)
    closed = torelli_pf(points, k, word)
    direct = pf_matchings(power_form(points, k), word)
    return [closed - direct]


def _numeric_n4_criterion(rng, opt):
    n = opt["n"]
    if n < 4:
        raise ValueError(f"criterion needs at least 4 points, got {n}")
    if opt["params"] is None:
        form = _sample_point_form(rng, n, blaschke_form)
    else:
        params = FamilyParams(*opt["params"])
        form = _sample_point_form(rng, n, lambda config: family_form(config, params))
    return [
        n4_criterion_residual(form, *quad)
        for quad in itertools.combinations(range(n), 4)
    ]


@dataclass(frozen=True)
class Identity:
    """A registry entry: shape defaults plus numeric/symbolic runners."""

    name: str
    defaults: dict
    numeric: Callable
    symbolic: Optional[Callable] = None
    note: str = ""


REGISTRY = {
    entry.name: entry
    for entry in [
        Identity("tanner", {"alpha_len": 2, "beta_len": 4}, _numeric_tanner, _symbolic_tanner),
        Identity("expansion", {"beta_len": 6}, _numeric_expansion, _symbolic_expansion),
        Identity("averaged-expansion", {"beta_len": 4}, _numeric_averaged, _symbolic_averaged),
        Identity("minor-product", {"alpha_len": 2, "beta_len": 6},
                 _numeric_minor_product, _symbolic_minor_product),
        Identity("complementary", {"alpha_len": 2, "beta_len": 4},
                 _numeric_complementary, _symbolic_complementary),
        Identity("wenzel", {"alpha_len": 3, "beta_len": 3, "gamma_len": 3},
                 _numeric_wenzel, _symbolic_wenzel),
        Identity("cancelling", {"alpha_len": 2, "beta_len": 2, "gamma_len": 1},
                 _numeric_cancelling, _symbolic_cancelling),
        Identity("brill", {"n": 3, "k": None}, _numeric_brill, _symbolic_brill),
        Identity("cayley-square", {"alpha_len": 4},
                 _numeric_cayley_square, _symbolic_cayley_square),
        Identity("cayley-bordered", {"n": 3},
                 _numeric_cayley_bordered, _symbolic_cayley_bordered),
        Identity("cramer", {"n": 4}, _numeric_cramer,
                 note="solves a linear system by exact division; nothing to expand"),
        Identity("desnanot", {"alpha_len": 2, "gamma_len": 2},
                 _numeric_desnanot, _symbolic_desnanot),
        Identity("jacobi-adjugate", {"alpha_len": 0, "n": 2},
                 _numeric_jacobi, _symbolic_jacobi),
        Identity("sylvester", {"alpha_len": 1, "n": 2},
                 _numeric_sylvester, _symbolic_sylvester),
        Identity("fontaine", {}, _numeric_fontaine, _symbolic_fontaine),
        Identity("bezout", {}, _numeric_bezout, _symbolic_bezout),
        Identity("desnanot-five", {}, _numeric_desnanot_five, _symbolic_desnanot_five),
        Identity("brioschi", {"n": 4}, _numeric_brioschi, _symbolic_brioschi),
        Identity("blaschke", {"n": 4}, _numeric_blaschke,
                 note="entries are rational functions of the points, not polynomials"),
        Identity("family", {"n": 4, "params": (0, 1, 2)}, _numeric_family,
                 note="entries are rational functions of the points, not polynomials"),
        Identity("torelli", {"n": 4, "k": 3}, _numeric_torelli,
                 note="compares against the closed form over rational points"),
        Identity("n4-criterion", {"n": 4, "params": None}, _numeric_n4_criterion,
                 note="a criterion for product forms, not a universal identity"),
    ]
}


def registry_names():
    return list(REGISTRY)


def get_identity(name: str) -> Identity:
    try:
        return REGISTRY[name]
    except KeyError:
        known = ", ".join(REGISTRY)
        raise ValueError(f"unknown identity {name!r}; known identities: {known}") from None


def _serialize(value) -> str:
    if isinstance(value, MultiPoly):
        return value.to_text()
    return format_scalar(value)


def _merge_options(identity: Identity, options: Optional[dict]) -> dict:
    merged = dict(identity.defaults)
    if options:
        for key, value in options.items():
            if value is None:
                continue
            if key not in merged:
                raise ValueError(f"identity {identity.name!r} takes no option {key!r}")
            merged[key] = value
    return merged


def _shape_json(shape: dict) -> dict:
    out = {}
    for key, value in shape.items():
        if key == "params" and value is not None:
            out[key] = [format_scalar(Fraction(v)) for v in value]
        else:
            out[key] = value
    return out


@dataclass
class VerificationReport:
    """Outcome of one verification run, in deterministic order."""

    identity: str
    mode: str
    shape: dict
    checks: list
    elapsed: float
    seed: Optional[int] = None
    trials: Optional[int] = None

    @property
    def failures(self):
        return [check for check in self.checks if not check["ok"]]

    @property
    def ok(self) -> bool:
        return not self.failures

    def jsonl(self) -> str:
        """Machine-readable report; no timing, no worker count, byte-stable."""
        header = {"identity": self.identity, "mode": self.mode}
        if self.seed is not None:
            header["seed"] = self.seed
        if self.trials is not None:
            header["trials"] = self.trials
        header["shape"] = _shape_json(self.shape)
        lines = [json.dumps(header, separators=(",", ":"))]
        for check in self.checks:
            lines.append(json.dumps(check, separators=(",", ":")))
        footer = {"failures": len(self.failures), "ok": self.ok}
        lines.append(json.dumps(footer, separators=(",", ":")))
        return "\n".join(lines) + "\n"

    def summary(self) -> str:
        shape_text = " ".join(f"{k}={v}" for k, v in _shape_json(self.shape).items())
        lines = [f"{self.identity} ({self.mode})" + (f", shape {shape_text}" if shape_text else "")]
        if self.mode == "numeric":
            resamples = sum(check["resamples"] for check in self.checks)
            lines.append(f"seed {self.seed}, trials {self.trials}, resamples {resamples}")
        else:
            lines.append(f"checks {len(self.checks)}")
        for check in self.failures[:5]:
            label = check.get("trial", check.get("check"))
            lines.append(f"  FAIL {label}: residual {check['residual']}")
        lines.append(f"failures {len(self.failures)}")
        lines.append(f"elapsed {self.elapsed:.2f}s")
        lines.append("PASS" if self.ok else "FAIL")
        return "\n".join(lines) + "\n"


def run_numeric(name: str, trials: int = 100, seed: int = 0, workers: int = 1,
                options: Optional[dict] = None) -> VerificationReport:
    """Run seeded random trials of one identity; deterministic for a seed."""
    identity = get_identity(name)
    opt = _merge_options(identity, options)

    def one_trial(index: int) -> dict:
        attempt = 0
        while True:
            rng = random.Random(_derive_seed(seed, name, index, attempt))
            try:
                values = identity.numeric(rng, opt)
                break
            except Resample:
                attempt += 1
                if attempt >= MAX_RESAMPLES:
                    raise RuntimeError(
                        f"{name}: trial {index} kept missing preconditions"
                        f" after {MAX_RESAMPLES} resamples"
                    ) from None
        nonzero = [_serialize(v) for v in values if v != 0]
        return {
            "trial": index,
            "resamples": attempt,
            "ok": not nonzero,
            "residual": "; ".join(nonzero) if nonzero else "0",
        }

    start = time.perf_counter()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            checks = list(pool.map(one_trial, range(trials)))
    else:
        checks = [one_trial(index) for index in range(trials)]
    elapsed = time.perf_counter() - start
    return VerificationReport(identity=name, mode="numeric", shape=opt,
                              checks=checks, elapsed=elapsed, seed=seed, trials=trials)


def run_symbolic(name: str, options: Optional[dict] = None) -> VerificationReport:
    """Prove one identity at a shape by expanding generic polynomial entries."""
    identity = get_identity(name)
    if identity.symbolic is None:
        raise ValueError(
            f"identity {name!r} has no symbolic mode ({identity.note});"
            " use numeric verification"
        )
    opt = _merge_options(identity, options)
    start = time.perf_counter()
    checks = []
    for label, value in identity.symbolic(opt):
        checks.append({
            "check": label,
            "ok": value == 0,
            "residual": _serialize(value) if value != 0 else "0",
        })
    elapsed = time.perf_counter() - start
    return VerificationReport(identity=name, mode="symbolic", shape=opt,
                              checks=checks, elapsed=elapsed)
