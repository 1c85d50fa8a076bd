"""Command-line front end: radius solving, inequality checks, sweeps.

Every run is deterministic under a fixed seed and configuration, and every
output row carries the parameters needed to reproduce it in isolation.
Artifacts are plain JSON (reports, radius results) and CSV (curves); exit
status is 0 when all executed assertions pass, 1 on an assertion failure,
and 2 on a usage error.

A JSON config file can mirror any long flag (dashes become underscores);
flags given explicitly on the command line win over the file.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

import numpy as np

from . import conjecture as conjecture_mod
from . import functionals, solver, verify
from .extremals import (
    HarmonicExtremalParams,
    MobiusFamilyParams,
    harmonic_extremal,
    mobius_family_coeffs,
    sharpness_a_grid,
)
from .series import DEFAULT_ORDER, DiskDomain

THEOREMS = ("A", "B", "1", "2", "3", "4", "corollary")
RADIUS_MATCH_TOL = 1e-3


def _parse_gammas(spec: str) -> list[float]:
    """Either a comma list "0,0.25,0.5" or a linspace "start:stop:count"."""
    if ":" in spec:
        start, stop, count = spec.split(":")
        values = np.linspace(float(start), float(stop), int(count))
        return [float(v) for v in values]
    return [float(tok) for tok in spec.split(",") if tok.strip()]


def closed_form_radius(theorem: str, gamma: float, k: float, lam: float) -> float:
    if theorem == "A":
        return 1.0 / 3.0
    if theorem in ("B", "1", "2"):
        return (1.0 + gamma) / (3.0 + gamma)
    if theorem == "3":
        return 1.0 / (1.0 + 2.0 * lam)
    if theorem == "4":
        return (1.0 + gamma) / (3.0 + 2.0 * k + gamma)
    if theorem == "corollary":
        return (1.0 + gamma) / (5.0 + gamma)
    raise ValueError(f"unknown theorem id {theorem!r}")


def _bound_factory(theorem: str, gamma: float, k: float, lam: float, weight: float, order: int,
                   a_fixed: float | None = None):
    """Return (family, bound_for) realizing the selected bound."""
    a_grid = [a_fixed] if a_fixed is not None else sharpness_a_grid(14)
    if theorem in ("4", "corollary"):
        family = [HarmonicExtremalParams(float(a), gamma, k, 1.0) for a in a_grid]

        def bound_for(params):
            h, g = harmonic_extremal(params, order)
            return lambda r: functionals.harmonic_total(h, g, r)

        return family, bound_for

    family = [MobiusFamilyParams(float(a), gamma) for a in a_grid]

    def bound_for(params):
        p = mobius_family_coeffs(params, order)
        if theorem in ("A", "B"):
            return lambda r: functionals.bohr_total(p, r)
        if theorem == "1":
            return lambda r: functionals.area_refined_total(p, r, gamma, weight)
        if theorem == "2":
            return lambda r: functionals.norm_refined_total(p, r)
        if theorem == "3":
            return lambda r: functionals.domain_ratio_area_total(p, r, lam)
        raise ValueError(f"unknown theorem id {theorem!r}")

    return family, bound_for


def _append_radius_csv(path: Path, row: dict) -> None:
    header = ["gamma", "k", "lambda", "functional_id", "radius", "tol"]
    new = not path.exists()
    with path.open("a", newline="") as fh:
        writer = csv.writer(fh)
        if new:
            writer.writerow(header)
        writer.writerow([repr(row[h]) if isinstance(row[h], float) else row[h] for h in header])


def cmd_radius(args) -> int:
    theorem = args.theorem
    gamma = 0.0 if theorem == "A" else args.gamma
    if theorem == "A" and args.gamma not in (None, 0.0):
        print("theorem A is the unit-disk case; use --theorem B for gamma > 0", file=sys.stderr)
        return 2
    gamma = gamma or 0.0
    k = 1.0 if theorem == "corollary" else (args.k if args.k is not None else 1.0)
    lam = args.lam if args.lam is not None else DiskDomain(gamma).coefficient_ratio_sup
    weight = args.weight if args.weight is not None else functionals.DEFAULT_AREA_WEIGHT

    family, bound_for = _bound_factory(theorem, gamma, k, lam, weight, args.order, args.a)
    result = solver.family_infimum_radius(bound_for, family, tol=args.tol)
    closed = closed_form_radius(theorem, gamma, k, lam)
    diff = abs(result.radius - closed)

    shown = [f"gamma={gamma:g}"]
    if args.a is not None:
        shown.append(f"a={args.a:g}")
    if theorem in ("4", "corollary"):
        shown.append(f"k={k:g}")
    if theorem == "3":
        shown.append(f"lambda={lam:g}")
    if theorem == "1":
        shown.append(f"K={weight:g}")
    print(f"theorem {theorem}: " + " ".join(shown))
    print(f"  computed radius   = {result.radius:.9f}")
    print(f"  closed-form value = {closed:.9f}")
    print(f"  abs difference    = {diff:.3e}")
    for note in result.diagnostics:
        print(f"  note: {note}")

    if args.out:
        out = Path(args.out)
        payload = {
            "command": "radius",
            "theorem": theorem,
            "gamma": gamma,
            "k": k,
            "lambda": lam,
            "computed_radius": result.radius,
            "closed_form": closed,
            "abs_diff": diff,
            "result": result.to_dict(),
        }
        if out.suffix == ".csv":
            _append_radius_csv(
                out,
                {
                    "gamma": gamma,
                    "k": k,
                    "lambda": lam,
                    "functional_id": f"theorem-{theorem}",
                    "radius": result.radius,
                    "tol": result.tol,
                },
            )
        else:
            out.write_text(json.dumps(payload, indent=2, sort_keys=True))
    if args.a is not None:
        # a single family member only brackets the family radius from above;
        # the closed form is printed as a reference, not asserted
        return 0
    return 0 if diff < RADIUS_MATCH_TOL else 1


def cmd_verify(args) -> int:
    reports = verify.run_default_checks(seed=args.seed, fast=args.fast)
    if args.checks:
        wanted = set(args.checks)
        reports = [r for r in reports if r.name in wanted]
        unknown = wanted - {r.name for r in reports}
        if unknown:
            print(f"unknown check names: {sorted(unknown)}", file=sys.stderr)
            return 2
    width = max(len(r.name) for r in reports)
    for r in reports:
        flag = "PASS" if r.passed else "FAIL"
        print(f"[{flag}] {r.name:<{width}}  samples={r.samples:<6d} worst_slack={r.worst_slack:+.3e}")
    if args.out:
        Path(args.out).write_text(verify.reports_to_json(reports))
    return 0 if all(r.passed for r in reports) else 1


def cmd_sweep(args) -> int:
    theorem = args.theorem if args.theorem in ("1", "2", "3", "4", "B") else "1"
    gammas = _parse_gammas(args.gammas)
    a_grid = sharpness_a_grid(14)
    rows = []
    violations = 0
    for gamma in gammas:
        lam = args.lam if args.lam is not None else DiskDomain(gamma).coefficient_ratio_sup
        k = args.k if args.k is not None else 1.0
        if theorem == "4":
            threshold = functionals.sharp_harmonic_radius(gamma, k)
        elif theorem == "3":
            threshold = 1.0 / (1.0 + 2.0 * lam)
        else:
            threshold = functionals.sharp_majorant_radius(gamma)
        r_values = np.linspace(0.0, threshold, args.grid)
        for a in a_grid:
            if theorem == "4":
                h, g = harmonic_extremal(HarmonicExtremalParams(float(a), gamma, k, 1.0), args.order)
            else:
                p = mobius_family_coeffs(MobiusFamilyParams(float(a), gamma), args.order)
            for r in r_values:
                r = float(r)
                if theorem == "B":
                    fv = functionals.bohr_total(p, r)
                elif theorem == "1":
                    fv = functionals.area_refined_total(p, r, gamma)
                elif theorem == "2":
                    fv = functionals.norm_refined_total(p, r)
                elif theorem == "3":
                    fv = functionals.domain_ratio_area_total(p, r, lam)
                else:
                    fv = functionals.harmonic_total(h, g, r)
                if fv.padded() > 1.0:
                    violations += 1
                rows.append(
                    [gamma, float(a), k if theorem == "4" else 0.0, lam if theorem == "3" else 0.0, r]
                    + [fv.total, fv.majorant, fv.correction, fv.tail_error]
                )
    if args.out:
        with Path(args.out).open("w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["gamma", "a", "k", "lambda", "r", "total", "majorant", "correction", "tail_error"])
            for row in rows:
                writer.writerow([repr(v) if isinstance(v, float) else v for v in row])
    print(f"sweep theorem {theorem}: {len(rows)} rows, {violations} admissibility violations")
    return 0 if violations == 0 else 1


def cmd_conjecture(args) -> int:
    gammas = _parse_gammas(args.gammas)
    estimates = conjecture_mod.sweep_conjecture(
        gammas,
        grid=args.grid,
        refinements=args.refinements,
        augment_samples=args.augment_random_samples,
        seed=args.seed,
    )
    failures = 0
    floor = conjecture_mod.ADMISSIBLE_FLOOR - 1e-6
    for est in estimates:
        ok_floor = est.k_hat >= floor
        ok_witness = conjecture_mod.witness_violates(est) if np.isfinite(est.witness_a) else True
        status = "ok" if (ok_floor and ok_witness) else "VIOLATION"
        failures += 0 if (ok_floor and ok_witness) else 1
        print(
            f"gamma={est.gamma:<6g} K_hat={est.k_hat:.6f} "
            f"witness=(a={est.witness_a:.6g}, r={est.witness_r:.6g}) [{status}]"
        )
    endpoint = next((e for e in estimates if e.gamma == 0.0), None)
    if endpoint is not None:
        ref = 16.0 / 9.0
        print(f"gamma=0 endpoint estimate {endpoint.k_hat:.6f} (reference 16/9 = {ref:.6f}, "
              f"deviation {abs(endpoint.k_hat - ref):.3e}; reported, not asserted)")
    flags = conjecture_mod.non_monotonic_pairs(estimates)
    for left, right in flags:
        print(f"note: estimate increases from gamma={left:g} to gamma={right:g} (diagnostic only)")
    if args.out:
        conjecture_mod.write_estimates_csv(estimates, args.out)
    return 0 if failures == 0 else 1


def cmd_identity_check(args) -> int:
    report = verify.check_family_deficit_identity(
        n_samples=args.samples, seed=args.seed, tol=args.tol
    )
    flag = "PASS" if report.passed else "FAIL"
    print(
        f"[{flag}] {report.name}: samples={report.samples} "
        f"max_residual={-report.worst_slack:.3e} tol={report.tolerance:g}"
    )
    if args.out:
        Path(args.out).write_text(verify.reports_to_json([report]))
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bohrlab",
        description="Sharp-radius computations and inequality checks for bounded "
        "analytic and harmonic mappings on enlarged disks.",
    )
    parser.add_argument("--config", help="JSON file of default option values", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=42)
        p.add_argument("--out", default=None, help="artifact path (.json or .csv)")
        # also accepted after the subcommand; SUPPRESS keeps the top-level value
        p.add_argument("--config", default=argparse.SUPPRESS, help=argparse.SUPPRESS)

    p = sub.add_parser("radius", help="solve for a sharp radius and compare with its closed form")
    p.add_argument("--theorem", choices=THEOREMS, required=True)
    p.add_argument("--gamma", type=float, default=None)
    p.add_argument("--a", type=float, default=None,
                   help="solve for one family member instead of sweeping the grid")
    p.add_argument("--k", type=float, default=None, help="dilatation bound for the harmonic case")
    p.add_argument("--lambda", dest="lam", type=float, default=None,
                   help="coefficient-ratio supremum (defaults to 1/(1+gamma))")
    p.add_argument("--K", dest="weight", type=float, default=None,
                   help="area-correction weight (defaults to 8/9)")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    common(p)

    p = sub.add_parser("verify", help="run the inequality check suite")
    p.add_argument("--all", action="store_true", help="run every check (default)")
    p.add_argument("--check", dest="checks", action="append", default=None,
                   help="run only the named check (repeatable)")
    p.add_argument("--fast", action="store_true", help="reduced sample counts")
    common(p)

    p = sub.add_parser("sweep", help="tabulate one bound over the (gamma, a, r) grid")
    p.add_argument("--theorem", choices=("B", "1", "2", "3", "4"), default="1")
    p.add_argument("--gammas", default="0:0.9:10")
    p.add_argument("--grid", type=int, default=64, help="radii per (gamma, a) pair")
    p.add_argument("--k", type=float, default=None)
    p.add_argument("--lambda", dest="lam", type=float, default=None)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    common(p)

    p = sub.add_parser("conjecture", help="estimate the best admissible area weight per gamma")
    p.add_argument("--gammas", default="0,0.25,0.5,0.75")
    p.add_argument("--grid", type=int, default=64)
    p.add_argument("--refinements", type=int, default=3)
    p.add_argument("--augment-random-samples", type=int, default=0,
                   help="also probe this many random bounded samples")
    common(p)

    p = sub.add_parser("identity-check", help="closed-form deficit identities on random parameters")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--tol", type=float, default=1e-10)
    common(p)

    return parser


def _apply_config(args: argparse.Namespace, config: dict, argv: list[str]) -> None:
    """Fill options from the config file unless the flag appeared on the command line."""
    given = set()
    for token in argv:
        if token.startswith("--"):
            given.add(token.split("=", 1)[0][2:].replace("-", "_"))
    alias = {"lambda": "lam", "K": "weight", "check": "checks"}
    for key, value in config.items():
        dest = alias.get(key, key.replace("-", "_"))
        if key.replace("-", "_") in given or dest in given:
            continue
        if hasattr(args, dest):
            setattr(args, dest, value)


def _validate(args: argparse.Namespace, parser: argparse.ArgumentParser) -> None:
    gamma = getattr(args, "gamma", None)
    if gamma is not None and not 0.0 <= gamma < 1.0:
        parser.error(f"--gamma must lie in [0, 1), got {gamma}")
    a = getattr(args, "a", None)
    if a is not None and not 0.0 < a < 1.0:
        parser.error(f"--a must lie in (0, 1), got {a}")
    k = getattr(args, "k", None)
    if k is not None and not 0.0 <= k <= 1.0:
        parser.error(f"--k must lie in [0, 1], got {k}")
    lam = getattr(args, "lam", None)
    if lam is not None and not lam > 0.0:
        parser.error(f"--lambda must be positive, got {lam}")
    tol = getattr(args, "tol", None)
    if tol is not None and not tol > 0.0:
        parser.error(f"--tol must be positive, got {tol}")


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        try:
            config = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            parser.error(f"cannot read config file: {exc}")
        _apply_config(args, config, argv)
    _validate(args, parser)

    handlers = {
        "radius": cmd_radius,
        "verify": cmd_verify,
        "sweep": cmd_sweep,
        "conjecture": cmd_conjecture,
        "identity-check": cmd_identity_check,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
