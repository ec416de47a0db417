"""
Command-line surface of flagrank.

Every command builds a plain report dictionary, then prints it as JSON
(default), markdown or CSV. Exit codes: 0 on success, 2 on usage errors,
3 when a computed verdict disagrees with the golden tables or with the
Levi-route cross-check, or when a table sweep breaks monotonicity.
"""

import functools
import logging
import random
import sys
from typing import Callable, List, Optional, Sequence

import click

from core.classical.cross_ratio import (
    LINES,
    PLANES,
    QUADRUPLE,
    cross_ratio_certificate,
)
from core.classical.lemma import lemma1_basis, random_transversal_triple
from core.classical.levi_points import (
    B_1L,
    C_1L,
    D_1L,
    D_PAIR,
    D_TRIPLE,
    canonicalize_levi_triple,
    random_generic_point,
    verify_rational_invariant,
)
from core.classical.triples import random_y_point, reduce_triple_D_odd
from core.comparator import compare_verdicts
from core.config import FORMATS, SAMPLERS, SEED_ENV, RunConfig
from core.error_handler import (
    CrossCheckError,
    FlagRankError,
    GoldenMismatchError,
    InvalidParabolicError,
    InvalidTypeError,
)
from core.exactlinalg import determinant
from core.levidecomp import (
    decompose_nilradical,
    invariant_quadratic_weights,
    project_weights,
    weight_balance,
)
from core.notation import format_parabolic, parse_parabolic, parse_range, parse_rational, parse_type
from core.orbitrank import (
    algebra_for,
    cross_check,
    gtd_flag,
    is_double_flag_spherical,
    is_generically_transitive,
)
from core.parabolic import parabolic_data
from helpers.golden import TABLES, expected_spherical, expected_transitive, summary
from helpers.table_sweep import sweep
from ui.render import render_mapping, render_table
from utils.exporter import to_csv, to_json, to_plain, write_report
from utils.hash_checker import derive_seed, sha256_file, sha256_text
from utils.logger import setup_logging

logger = logging.getLogger(__name__)

EXIT_USAGE = 2
EXIT_MISMATCH = 3

CASE_ALIASES = {
    "B": B_1L, B_1L: B_1L,
    "C": C_1L, C_1L: C_1L,
    "D_l-1l": D_PAIR, "D_1l": D_1L, "D_1l-1l": D_TRIPLE,
}

CERTIFY_KINDS = ("so6-cross-ratio", "so10-cross-ratio", LINES, PLANES, QUADRUPLE,
                 "lemma", "canonical", "triple")


def _library_errors(func: Callable) -> Callable:
    """Bad arguments exit 2, disagreements exit 3, other library errors exit 1."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (InvalidTypeError, InvalidParabolicError, ValueError) as e:
            raise click.UsageError(str(e)) from e
        except (GoldenMismatchError, CrossCheckError) as e:
            logger.error("%s", e)
            raise click.exceptions.Exit(EXIT_MISMATCH) from e
        except FlagRankError as e:
            raise click.ClickException(str(e)) from e
    return wrapper


def _emit(ctx: click.Context, report: dict, title: str,
          rows: Optional[List[dict]] = None, markdown: Optional[str] = None) -> None:
    fmt = ctx.obj["config"].format
    if fmt == "json":
        text = to_json(report)
    elif fmt == "csv":
        text = to_csv(rows if rows is not None else [to_plain(report)])
    else:
        text = markdown if markdown is not None else render_mapping(title, to_plain(report))
    output = ctx.obj["output"]
    if output:
        write_report(output, text)
        logger.info("wrote %s (sha256 %s)", output, sha256_file(output))
    else:
        logger.info("report sha256 %s", sha256_text(text))
        click.echo(text, nl=False)


def _target(type_text: str, rank: Optional[int], parabolic: str):
    t = parse_type(type_text, rank)
    return t, parse_parabolic(parabolic, t.rank)


type_option = click.option("--type", "type_text", required=True,
                           help='Simple type, e.g. "E6", or a family letter with --rank.')
rank_option = click.option("--rank", type=int, default=None, help="Rank when --type is a family letter.")
parabolic_option = click.option("--parabolic", required=True,
                                help='1-based simple indices, e.g. "1,6" or "1,l-1".')


@click.group(name="flagrank")
@click.option("--seed", type=int, envvar=SEED_ENV, default=None, help="Base seed for all random points.")
@click.option("--retries", type=int, default=None, help="Random points tried before a negative verdict.")
@click.option("--height", type=int, default=None, help="Bound for random integer parameters.")
@click.option("--word-length", type=int, default=None, help="Factors per random word (word sampler).")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default=None)
@click.option("--max-rank", type=int, default=None)
@click.option("--workers", type=int, default=None, help="Process pool size for table sweeps.")
@click.option("--sampler", type=click.Choice(SAMPLERS), default=None)
@click.option("--output", type=click.Path(dir_okay=False), default=None, help="Write the report to a file.")
@click.option("-v", "--verbose", count=True)
@click.pass_context
def cli(ctx, seed, retries, height, word_length, fmt, max_rank, workers, sampler, output, verbose):
    """Exact rank tests for generic transitivity on multiple flag varieties."""
    setup_logging(verbose)
    try:
        config = RunConfig.from_env(seed=seed, retries=retries, height=height,
                                    word_length=word_length, format=fmt, max_rank=max_rank,
                                    workers=workers, sampler=sampler)
    except ValueError as e:
        raise click.UsageError(str(e)) from e
    ctx.obj = {"config": config, "output": output}


def _check_rank(t, config: RunConfig) -> None:
    if t.rank > config.max_rank:
        raise click.UsageError(f"rank {t.rank} exceeds --max-rank {config.max_rank}")


@cli.command()
@type_option
@rank_option
@parabolic_option
@click.option("--n", "n", type=int, required=True, help="Number of factors of G/P.")
@click.pass_context
@_library_errors
def classify(ctx, type_text, rank, parabolic, n):
    """Decide whether G acts on (G/P)^n with an open orbit."""
    config = ctx.obj["config"]
    t, I = _target(type_text, rank, parabolic)
    _check_rank(t, config)
    pair = cross_check(t, I, n, config)
    verdict = pair[0] if pair else is_generically_transitive(t, I, n, config)
    report = {
        "command": "classify",
        "type": str(t),
        "parabolic": format_parabolic(I),
        "n": n,
        "transitive": verdict.transitive,
        "method": verdict.method,
        "one_sided": verdict.one_sided,
        "certificate": verdict.certificate,
        "expected": expected_transitive(t, I, n),
        "seed": config.seed,
        "sampler": config.sampler,
    }
    agrees = True
    if pair:
        levi = pair[1]
        agrees = levi.transitive == verdict.transitive
        report["cross_check"] = {"levi_transitive": levi.transitive,
                                 "levi_certificate": levi.certificate,
                                 "agrees": agrees}
    _emit(ctx, report, f"{t} P{{{format_parabolic(I)}}} n={n}")
    if not agrees:
        raise CrossCheckError(f"{t} P{{{format_parabolic(I)}}} n={n}: "
                              "Levi route disagrees with the direct tangent test")
    if report["expected"] is not None and report["expected"] != verdict.transitive:
        raise GoldenMismatchError(f"{t} P{{{format_parabolic(I)}}} n={n}: "
                                  f"computed {verdict.transitive}, tables say {report['expected']}")


@cli.command()
@click.argument("which", type=click.Choice(TABLES))
@click.option("--family", "families", multiple=True, help="Restrict to these families.")
@click.option("--ranks", default=None, help='Rank range, e.g. "4-6".')
@click.option("--cross-check/--no-cross-check", "check", default=True,
              help="Run the Levi route on self-opposite cells (on by default).")
@click.pass_context
@_library_errors
def table(ctx, which, families, ranks, check):
    """Recompute a classification table and compare it with the golden copy."""
    config = ctx.obj["config"]
    rank_range = parse_range(ranks) if ranks else None
    results, problems = sweep(which, config, families or None, rank_range, check,
                                  progress_cb=lambda k: logger.debug("%d cells done", k))
    diffs = compare_verdicts(results)
    for status, idx, computed, reference in diffs:
        r = results[idx]
        logger.warning("%s: %s P{%s} n=%s computed %s, reference %s",
                       status, r.type_name, r.parabolic, r.n, computed, reference)
    rows = [dict(to_plain(r), matches=r.matches) for r in results]
    info = summary(which)
    report = {
        "command": "table",
        "table": which,
        "title": info["title"],
        "seed": config.seed,
        "cells": rows,
        "mismatches": [{"status": s, "cell": i} for s, i, _, _ in diffs]
        + [{"status": "monotonicity", "detail": p} for p in problems],
    }
    _emit(ctx, report, info["title"], rows=rows,
          markdown=render_table(which, info["title"], results))
    if diffs:
        raise GoldenMismatchError(f"{which}: {len(diffs)} cell(s) disagree")
    if problems:
        raise CrossCheckError(f"{which}: {len(problems)} monotonicity violation(s)")


@cli.command()
@type_option
@rank_option
@parabolic_option
@click.option("--functional", default=None,
              help='Integer functional on the central weights, e.g. "-1,1".')
@click.pass_context
@_library_errors
def decompose(ctx, type_text, rank, parabolic, functional):
    """Split u- into irreducible Levi modules."""
    config = ctx.obj["config"]
    t, I = _target(type_text, rank, parabolic)
    _check_rank(t, config)
    alg = algebra_for(t)
    pd = parabolic_data(alg, I)
    summands = decompose_nilradical(alg, pd)
    quadratics = invariant_quadratic_weights(alg, pd, summands)
    with_quadratic = {idx for idx, _ in quadratics}
    report = {
        "command": "decompose",
        "type": str(t),
        "parabolic": format_parabolic(I),
        "flag_dim": pd.flag_dim,
        "summands": [
            {"degree": list(s.degree), "dim": s.dim, "lowest_root": list(s.lowest_root),
             "invariant_quadratic": idx in with_quadratic}
            for idx, s in enumerate(summands)
        ],
        "quadratic_weights": [list(w) for _, w in quadratics],
        "weight_balance": weight_balance([w for _, w in quadratics]),
    }
    if functional:
        f = [int(x) for x in functional.split(",")]
        report["projected_weights"] = project_weights(summands, f)
    _emit(ctx, report, f"{t} P{{{format_parabolic(I)}}}", rows=report["summands"])


@cli.command("verify-invariants")
@click.option("--case", "case", type=click.Choice(sorted(CASE_ALIASES)), required=True)
@click.option("--l", "l", type=int, default=None, help="Rank l of the classical group.")
@click.option("--trials", type=int, default=50)
@click.pass_context
@_library_errors
def verify_invariants(ctx, case, l, trials):
    """Check a rational Levi invariant on random points and group elements."""
    config = ctx.obj["config"]
    tag = CASE_ALIASES[case]
    rep = verify_rational_invariant(tag, l, derive_seed(config.seed, "invariant", tag, l), trials)
    report = {"command": "verify-invariants", "case": rep.case, "l": rep.l,
              "trials": rep.trials, "all_equal": rep.all_equal, "failures": rep.failures,
              "sample_values": rep.sample_values, "witness": rep.witness,
              "non_constant": rep.non_constant}
    _emit(ctx, report, f"invariant {tag}")
    if not rep.all_equal:
        ctx.exit(EXIT_MISMATCH)


def _run_trials(label: str, trials: int, seed: int, attempt: Callable[[random.Random], None]) -> int:
    passed = 0
    for k in range(trials):
        rng = random.Random(derive_seed(seed, label, k))
        try:
            attempt(rng)
            passed += 1
        except (AssertionError, FlagRankError) as e:
            logger.warning("%s trial %d failed: %s", label, k, e)
    return passed


def _cross_ratio_report(kind: str, l: int, t1: Sequence[str], tau2: str, tau3: str,
                        params: Sequence[str], trials: int, seed: int) -> dict:
    if kind == QUADRUPLE:
        values = [parse_rational(p) for p in (params or ("1", "-1", "3", "1/3"))]
        certs = [cross_ratio_certificate(kind, values, l, trials, derive_seed(seed, kind))]
    else:
        certs = []
        for t in t1 or ("1/2", "1/3"):
            p = (parse_rational(t), parse_rational(tau2), parse_rational(tau3))
            certs.append(cross_ratio_certificate(kind, p, l, trials, derive_seed(seed, kind, t)))
    values = [c.value for c in certs]
    return {"certificates": certs, "values": values,
            "distinct": len(set(values)) == len(values),
            "passed": all(c.invariant for c in certs)}


@cli.command()
@click.option("--kind", type=click.Choice(CERTIFY_KINDS), required=True)
@click.option("--l", "l", type=int, default=None, help="Rank l of SO_2l (or of the Levi case).")
@click.option("--t1", "t1", multiple=True, help="Parameter t of T1; repeat for several values.")
@click.option("--tau2", default="1")
@click.option("--tau3", default="1")
@click.option("--param", "params", multiple=True, help="Quadruple parameters t1..t4.")
@click.option("--case", "case", type=click.Choice([D_PAIR, D_1L]), default=D_PAIR)
@click.option("--k", "k", type=int, default=4, help="Half dimension for the lemma kind.")
@click.option("--trials", type=int, default=None)
@click.pass_context
@_library_errors
def certify(ctx, kind, l, t1, tau2, tau3, params, case, k, trials):
    """Infinitude certificates and checks of the constructive reductions."""
    config = ctx.obj["config"]
    report = {"command": "certify", "kind": kind, "seed": config.seed}
    if kind in ("so6-cross-ratio", "so10-cross-ratio", LINES, PLANES, QUADRUPLE):
        base = {"so6-cross-ratio": (LINES, 3), "so10-cross-ratio": (LINES, 5)}
        real_kind, default_l = base.get(kind, (kind, 3))
        l = l or default_l
        trials = trials or 50
        report.update(l=l, trials=trials)
        report.update(_cross_ratio_report(real_kind, l, t1, tau2, tau3, params, trials, config.seed))
    elif kind == "lemma":
        trials = trials or 25

        def attempt(rng):
            space, u1, u2, u3 = random_transversal_triple(k, rng, config.height)
            lemma1_basis(space, u1, u2, u3)
        report.update(dim=2 * k, trials=trials,
                      passed=_run_trials("lemma", trials, config.seed, attempt) == trials)
    elif kind == "canonical":
        l = l or 4
        trials = trials or 25

        def attempt(rng):
            canonicalize_levi_triple(case, random_generic_point(case, l, rng))
        report.update(case=case, l=l, trials=trials,
                      passed=_run_trials("canonical", trials, config.seed, attempt) == trials)
    else:
        l = l or 5
        trials = trials or 10

        def attempt(rng):
            red = reduce_triple_D_odd(l, random_y_point(l, rng))
            assert determinant(red.B) == 1
        report.update(l=l, trials=trials,
                      passed=_run_trials("triple", trials, config.seed, attempt) == trials)
    _emit(ctx, report, f"certificate {kind}")
    if not report["passed"]:
        ctx.exit(EXIT_MISMATCH)


@cli.command()
@type_option
@rank_option
@parabolic_option
@click.pass_context
@_library_errors
def gtd(ctx, type_text, rank, parabolic):
    """Largest n with an open orbit on (G/P)^n."""
    config = ctx.obj["config"]
    t, I = _target(type_text, rank, parabolic)
    _check_rank(t, config)
    value = gtd_flag(t, I, config)
    expected = None
    n = 1
    while True:
        predicted = expected_transitive(t, I, n)
        if predicted is None:
            break
        if not predicted:
            expected = n - 1
            break
        n += 1
    report = {"command": "gtd", "type": str(t), "parabolic": format_parabolic(I),
              "gtd": value, "expected": expected}
    _emit(ctx, report, f"gtd {t} P{{{format_parabolic(I)}}}")
    if expected is not None and expected != value:
        raise GoldenMismatchError(f"gtd {t} P{{{format_parabolic(I)}}}: computed {value}, tables say {expected}")


@cli.command()
@type_option
@rank_option
@parabolic_option
@click.pass_context
@_library_errors
def spherical(ctx, type_text, rank, parabolic):
    """Whether a Borel subgroup has an open orbit on G/P x G/P."""
    config = ctx.obj["config"]
    t, I = _target(type_text, rank, parabolic)
    _check_rank(t, config)
    verdict = is_double_flag_spherical(t, I, config)
    report = {"command": "spherical", "type": str(t), "parabolic": format_parabolic(I),
              "spherical": verdict.transitive, "method": verdict.method,
              "certificate": verdict.certificate, "expected": expected_spherical(t, I)}
    _emit(ctx, report, f"spherical {t} P{{{format_parabolic(I)}}}")
    if report["expected"] is not None and report["expected"] != verdict.transitive:
        raise GoldenMismatchError(f"spherical {t} P{{{format_parabolic(I)}}}: "
                                  f"computed {verdict.transitive}, tables say {report['expected']}")


def main(argv: Optional[Sequence[str]] = None) -> None:
    cli.main(args=argv, prog_name="flagrank")


if __name__ == "__main__":
    main(sys.argv[1:])
