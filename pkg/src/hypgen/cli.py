"""Command-line front end.

Subcommands: check, roots, curve, region, expsign, residue-check.
Spec files are JSON objects {"P_zeros": [...], "Q_zeros": [...], "r": int};
entries may be numbers or "p/q" rational strings, and rational entries
route the recurrence to the exact backend.  Outputs are UTF-8 CSV with a
single header row and floats at 17 significant digits, so reruns are
byte-identical; JSON reports are pretty-printed with a fixed key order.
--plot renders a matplotlib PNG next to the CSV.

Exit codes: 0 success / all conditions hold, 1 a condition or sign check
fails (or a precondition is not met), 2 invalid input, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from .errors import (
    BracketError,
    DomainError,
    EmptyInput,
    HypothesisError,
    MonotonicityViolation,
    MultipleRootError,
    NonConvergence,
    PoleError,
    ZeroAtOrigin,
)
from .expsign import DEFAULT_MAX_N, check_sign_dominance
from .hm_seq import classify_roots, generate_hm, hm_eval, interval_tolerance, residue_sum
from .parallel import pmap
from .poly_core import GeneratorSpec, make_spec
from .rfunc import endpoint_value, find_t_a, hypothesis_report, polar_samples
from .tau_curve import trace_curve

RESIDUE_MATCH_TOL = 1e-8


@dataclass(frozen=True)
class SpecFile:
    """Parsed contents of a spec file, before validation into a GeneratorSpec."""

    P_zeros: tuple
    Q_zeros: tuple
    r: int

    def to_spec(self) -> GeneratorSpec:
        return make_spec(list(self.P_zeros), list(self.Q_zeros), self.r)


@dataclass(frozen=True)
class RunConfig:
    """Validated run parameters shared by the data-emitting commands."""

    grid: int = 256
    band: float = 1e-3
    samples: int = 200
    m_start: int = 0
    m_stop: int = 0
    backend: str = "auto"
    out: str | None = None
    plot: bool = False
    force: bool = False
    match_tol: float = RESIDUE_MATCH_TOL

    def __post_init__(self):
        if self.grid < 1:
            raise DomainError("grid size must be >= 1")
        if self.band <= 0 or self.match_tol <= 0:
            raise DomainError("tolerances must be positive")
        if self.samples < 2:
            raise DomainError("sample count must be >= 2")
        if self.m_start < 0 or self.m_stop < self.m_start:
            raise DomainError("need 0 <= first index <= last index")
        if self.plot and not self.out:
            raise DomainError("--plot requires --out")


def load_spec_file(path) -> SpecFile:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise DomainError(f"cannot read spec file {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise DomainError("spec file must be a JSON object")
    for key in ("P_zeros", "Q_zeros", "r"):
        if key not in data:
            raise DomainError(f"spec file is missing {key!r}")
    p, q, r = data["P_zeros"], data["Q_zeros"], data["r"]
    if not isinstance(p, list) or not isinstance(q, list):
        raise DomainError("P_zeros and Q_zeros must be lists")
    if not isinstance(r, int) or isinstance(r, bool):
        raise DomainError("r must be an integer")
    return SpecFile(P_zeros=tuple(p), Q_zeros=tuple(q), r=r)


def _g17(x) -> str:
    return format(float(x), ".17g")


def _write_csv(out, header, rows) -> None:
    text = ",".join(header) + "\n"
    text += "".join(",".join(row) + "\n" for row in rows)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _plot_path(cfg: RunConfig) -> Path:
    return Path(cfg.out).with_suffix(".png")


def _region_dict(report):
    if report is None:
        return None
    return {
        "condition_id": report.condition_id,
        "holds": report.holds,
        "min_margin": report.min_margin,
        "argmin_point": [report.argmin_point.real, report.argmin_point.imag],
        "grid_size": report.grid_size,
        "boundary_band": report.boundary_band,
    }


def cmd_check(args) -> int:
    spec = load_spec_file(args.spec_file).to_spec()
    rep = hypothesis_report(spec, n_grid=args.grid, band=args.band)
    payload = {
        "cond1": {"holds": rep.cond1, "violating_x": rep.cond1_violation},
        "cond2": {"holds": rep.cond2, "violating_x": rep.cond2_violation},
        "cond3": _region_dict(rep.cond3),
        "cond4": _region_dict(rep.cond4),
        "tau1": rep.tau1,
        "tau2": rep.tau2,
        "t_a": rep.t_a,
        "a": rep.a,
        "sign_exponent": rep.sign_exponent,
        "all_hold": rep.all_hold,
    }
    print(json.dumps(payload, indent=2))
    return 0 if rep.all_hold else 1


def _gate_or_force(spec, cfg: RunConfig):
    rep = hypothesis_report(spec, n_grid=cfg.grid)
    if not rep.all_hold and not cfg.force:
        print("hypothesis check failed; rerun with --force to proceed anyway",
              file=sys.stderr)
        return None
    return rep


def cmd_roots(args) -> int:
    spec = load_spec_file(args.spec_file).to_spec()
    cfg = RunConfig(
        grid=args.grid,
        m_start=args.m,
        m_stop=args.m_max if args.m_max is not None else args.m,
        backend=args.backend,
        out=args.out,
        plot=args.plot,
        force=args.force,
    )
    rep = _gate_or_force(spec, cfg)
    if rep is None:
        return 1
    if rep.t_a is not None:
        a = rep.a
    else:
        # forced run on a failing spec: the interval endpoint may not exist
        try:
            a = endpoint_value(spec, find_t_a(spec))
        except (BracketError, PoleError, ZeroDivisionError):
            a = math.nan
    seq = generate_hm(spec, cfg.m_stop, backend=cfg.backend)
    sign = spec.sign_exponent
    reports = pmap(
        lambda m: classify_roots(seq, m, a=a, sign_exponent=sign),
        range(cfg.m_start, cfg.m_stop + 1),
    )
    itol = interval_tolerance(a)
    rows = []
    for report in reports:
        for idx, (w, flag) in enumerate(zip(report.roots, report.real_flags)):
            sign_ok = flag and sign * w.real > 0
            interval_ok = flag and sign * w.real >= sign * a - itol
            rows.append((
                str(report.m), str(idx), _g17(w.real), _g17(w.imag),
                str(int(flag)), str(int(sign_ok)), str(int(interval_ok)),
            ))
        print(
            f"m={report.m} degree={report.degree_observed} "
            f"all_real={report.all_real} sign_ok={report.sign_ok} "
            f"interval_ok={report.interval_ok}",
            file=sys.stderr,
        )
    settled = next((r.m for r in reports
                    if all(q.all_real for q in reports if q.m >= r.m)), None)
    print(f"observed smallest m in range with all_real from there on: {settled}",
          file=sys.stderr)
    _write_csv(cfg.out,
               ("m", "root_index", "re", "im",
                "classified_real", "sign_ok", "interval_ok"),
               rows)
    if cfg.plot:
        from . import plots

        plots.save_roots_figure(reports, a, _plot_path(cfg))
    return 0


def cmd_curve(args) -> int:
    spec = load_spec_file(args.spec_file).to_spec()
    cfg = RunConfig(grid=args.grid, samples=args.samples, out=args.out,
                    plot=args.plot, force=args.force)
    if _gate_or_force(spec, cfg) is None:
        return 1
    curve = trace_curve(spec, cfg.samples)
    rows = [
        (_g17(s.theta), _g17(s.tau), _g17(s.z), _g17(s.residual), _g17(s.im_z))
        for s in curve.samples
    ]
    _write_csv(cfg.out, ("theta", "tau", "z", "residual", "im_z"), rows)
    if cfg.plot:
        from . import plots

        plots.save_curve_figure(curve, _plot_path(cfg))
    return 0


def cmd_region(args) -> int:
    spec = load_spec_file(args.spec_file).to_spec()
    cfg = RunConfig(grid=args.grid, band=args.band, out=args.out,
                    plot=args.plot)
    tau2 = spec.tau2
    try:
        t_a = find_t_a(spec)
    except BracketError:
        # diagnostic sampling still works on failing specs; fall back to the
        # smallest positive zero as the semidisk radius
        t_a = spec.tau1
        print("note: no double-root point; semidisk radius set to the "
              "smallest positive zero", file=sys.stderr)
    rows = []
    tagged = []
    for tag, bound, top in (
        ("sector", tau2, math.pi / spec.r),
        ("semidisk", t_a, math.pi),
    ):
        points, weights, _, _ = polar_samples(
            spec, bound, top, cfg.grid, cfg.grid, band=cfg.band
        )
        for t, w in zip(points, weights):
            rows.append((_g17(t.real), _g17(t.imag), _g17(w), tag))
            tagged.append((t.real, t.imag, float(w), tag))
    _write_csv(cfg.out, ("re", "im", "weight", "region_tag"), rows)
    if cfg.plot:
        from . import plots

        plots.save_region_figure(tagged, _plot_path(cfg))
    return 0


def cmd_expsign(args) -> int:
    if args.n < 2:
        raise DomainError("need --n >= 2")
    if args.n > args.max_n:
        raise DomainError(
            f"--n {args.n} exceeds --max-n {args.max_n}; large n loses the "
            "sign in double precision"
        )
    if args.b_max < 1:
        raise DomainError("need --b-max >= 1")
    cases = [check_sign_dominance(args.n, args.ell, b)
             for b in range(1, args.b_max + 1)]
    header = ("n", "ell", "b", "x", "sum_value", "first_term", "sign_match")
    rows = [
        (str(c.n), str(c.ell), str(c.b), _g17(c.x),
         _g17(c.sum_value), _g17(c.first_term), str(int(c.sign_match)))
        for c in cases
    ]
    _write_csv(None, header, rows)
    return 0 if all(c.sign_match for c in cases) else 1


def cmd_residue_check(args) -> int:
    spec = load_spec_file(args.spec_file).to_spec()
    if args.m < 0:
        raise DomainError("--m must be >= 0")
    seq = generate_hm(spec, args.m)
    direct = complex(hm_eval(seq, args.m, args.z))
    via_residues = residue_sum(spec, args.z, args.m)
    rel = abs(via_residues - direct) / (1.0 + abs(direct))
    print(f"recurrence   = {direct.real!r}")
    print(f"residue_sum  = {via_residues.real!r} + {via_residues.imag!r}j")
    print(f"rel_diff     = {rel!r}")
    return 0 if rel <= RESIDUE_MATCH_TOL else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypgen",
        description="Numerical analysis of polynomial sequences generated by "
                    "1/(P(t) + z t^r Q(t)).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify the four hypotheses, emit JSON")
    p.add_argument("spec_file")
    p.add_argument("--grid", type=int, default=256,
                   help="polar grid points per axis for the region checks")
    p.add_argument("--band", type=float, default=1e-3,
                   help="relative boundary exclusion band")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("roots", help="generate polynomials and classify roots")
    p.add_argument("spec_file")
    p.add_argument("--m", type=int, required=True, help="first index")
    p.add_argument("--m-max", type=int, default=None,
                   help="last index (defaults to --m)")
    p.add_argument("--backend", choices=("auto", "exact", "float"),
                   default="auto")
    p.add_argument("--out", default=None, help="CSV path (default stdout)")
    p.add_argument("--grid", type=int, default=256)
    p.add_argument("--force", action="store_true",
                   help="proceed even when the hypothesis check fails")
    p.add_argument("--plot", action="store_true",
                   help="also render a PNG next to the CSV")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("curve", help="trace the implicit curve, emit CSV")
    p.add_argument("spec_file")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--out", default=None)
    p.add_argument("--grid", type=int, default=256)
    p.add_argument("--force", action="store_true")
    p.add_argument("--plot", action="store_true")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("region", help="sample the weight over both regions")
    p.add_argument("spec_file")
    p.add_argument("--grid", type=int, default=64,
                   help="points per axis per region")
    p.add_argument("--band", type=float, default=1e-3)
    p.add_argument("--out", default=None)
    p.add_argument("--plot", action="store_true")
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("expsign", help="sign-dominance sweep over b")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, default=0)
    p.add_argument("--b-max", type=int, default=10)
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.set_defaults(func=cmd_expsign)

    p = sub.add_parser("residue-check",
                       help="compare the residue sum against the recurrence")
    p.add_argument("spec_file")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--z", type=float, required=True)
    p.set_defaults(func=cmd_residue_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (EmptyInput, ZeroAtOrigin, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HypothesisError as exc:
        print(f"hypotheses fail: {exc}", file=sys.stderr)
        return 1
    except (BracketError, NonConvergence, MultipleRootError,
            MonotonicityViolation, PoleError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # the exit-code contract is total
        print(f"numerical failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
