"""Command line interface.

Four subcommands:

  eval     one point, JSON on stdout
  scan     sweep one coordinate, CSV rows
  figure   write the canned figure datasets (CSV plus JSON sidecar)
  verify   run the oracle suite

Exit codes: 0 on success, 1 on runtime or verification failure, 2 on
usage errors.  CSV files carry two column groups per requested
component: the stress at the fixed finite cutoff (column tag t<value>)
and the extrapolated t -> 0 limit (tag t0).  Points where a value is
not defined or does not converge become empty cells, with a note on
stderr; cell text uses shortest round-trip float formatting, so a
given grid always produces byte-identical CSV no matter how many
worker processes computed it.  Sidecars record the geometry, coupling,
grid, and build metadata; timestamps appear only there.
"""

from __future__ import annotations

import argparse
import csv
import datetime
import json
import math
import subprocess
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from . import __version__
from .errors import ConeVacError, ConvergenceError, DomainError
from .geometry import (
    BoundaryCondition,
    Cone,
    Coupling,
    Dowker,
    Minkowski,
    PointPair,
    Wedge,
)
from .kernels import (
    tbar_cone,
    tbar_dowker,
    tbar_minkowski,
    tbar_wedge_renormalized,
)
from .oracles import SUITE_VERSION, format_reports, reports_to_json, run_oracle_suite
from .stress import COMPONENT_NAMES, RenormMode, stress_at, stress_t0

_XI_TAGS = {"xi14": 0.25, "xi16": 1.0 / 6.0}


# ---------------------------------------------------------------------------
# Sweep machinery shared by scan and figure.


@dataclass(frozen=True)
class _Series:
    """One curve: a geometry, a coupling, and the fixed coordinates."""

    label: str
    geometry: object
    beta: float
    correction: bool = False
    fixed_r: float | None = None
    fixed_theta: float = 0.0
    fixed_z: float = 0.0


@dataclass(frozen=True)
class _FileSpec:
    """One output file: a grid over one coordinate and a set of curves."""

    filename: str
    sweep: str  # "r" | "theta" | "theta1"
    lo: float
    hi: float
    log: bool
    series: tuple
    components: tuple = COMPONENT_NAMES
    points: int = 200
    cutoff_t: float = 1.0


@dataclass(frozen=True)
class _PointJob:
    x: float
    sweep: str
    series: tuple
    components: tuple
    cutoff_t: float


def _series_components(series: _Series, sweep: str, x: float, cutoff_t: float | None):
    """Component dict for one curve at one grid point.

    ``cutoff_t`` None means the extrapolated t -> 0 limit.  Correction
    curves return the per-unit-coupling difference, exploiting that
    every component is affine in beta.
    """
    geometry = series.geometry
    r = series.fixed_r
    theta = series.fixed_theta
    if sweep == "r":
        r = x
    elif sweep == "theta":
        theta = x
    elif sweep == "theta1":
        geometry = Cone(x)
    else:
        raise ValueError(f"unknown sweep coordinate {sweep!r}")
    if r is None:
        raise ValueError("no radius: series needs fixed_r or an r sweep")

    def compute(beta):
        if cutoff_t is None:
            return stress_t0(geometry, r, theta, series.fixed_z, beta=beta).stress
        return stress_at(geometry, r, theta, series.fixed_z, beta=beta, t=cutoff_t)

    if series.correction:
        base = compute(series.beta).components()
        bumped = compute(series.beta + 1.0).components()
        return {k: bumped[k] - base[k] for k in base}
    return compute(series.beta).components()


def _compute_row(job: _PointJob):
    cells: list = [job.x]
    notes: list[str] = []
    for cutoff in (job.cutoff_t, None):
        for series in job.series:
            try:
                comps = _series_components(series, job.sweep, job.x, cutoff)
                cells.extend(comps[name] for name in job.components)
            except (DomainError, ConvergenceError) as exc:
                cells.extend([None] * len(job.components))
                tag = "t0" if cutoff is None else f"t={cutoff:g}"
                label = f" [{series.label}]" if series.label else ""
                notes.append(f"{job.sweep}={job.x:g}{label} ({tag}): {exc}")
    return cells, notes


def _grid(lo: float, hi: float, points: int, log: bool) -> list[float]:
    if points < 2:
        raise ValueError(f"need at least 2 grid points, got {points!r}")
    if log:
        if lo <= 0:
            raise ValueError("log grids need positive endpoints")
        return [float(v) for v in np.geomspace(lo, hi, points)]
    return [float(v) for v in np.linspace(lo, hi, points)]


def _columns(spec: _FileSpec) -> list[str]:
    cols = [spec.sweep]
    for tag in (f"t{spec.cutoff_t:g}", "t0"):
        for series in spec.series:
            suffix = f"_{series.label}" if series.label else ""
            cols.extend(f"{name}_{tag}{suffix}" for name in spec.components)
    return cols


def _compute_rows(spec: _FileSpec, workers: int):
    jobs = [
        _PointJob(x, spec.sweep, spec.series, spec.components, spec.cutoff_t)
        for x in _grid(spec.lo, spec.hi, spec.points, spec.log)
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_compute_row, jobs, chunksize=8))
    else:
        results = [_compute_row(job) for job in jobs]
    rows = [cells for cells, _ in results]
    notes = [note for _, point_notes in results for note in point_notes]
    return rows, notes


def _write_csv(path: Path, header: list[str], rows) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow(["" if v is None else repr(float(v)) for v in row])


def _geometry_dict(geometry) -> dict:
    match geometry:
        case Minkowski():
            return {"kind": "minkowski"}
        case Cone(theta1=theta1):
            return {"kind": "cone", "theta1": theta1}
        case Dowker():
            return {"kind": "dowker"}
        case Wedge(theta0=theta0, bc=bc):
            return {"kind": "wedge", "theta0": theta0, "bc": bc.value}
        case None:
            return {"kind": "cone", "theta1": "swept"}
        case _:
            return {"kind": repr(geometry)}


def _git_describe() -> str | None:
    try:
        out = subprocess.run(
            ["git", "describe", "--always", "--dirty"],
            cwd=Path(__file__).resolve().parent,
            capture_output=True, text=True, timeout=5,
        )
    except (OSError, subprocess.SubprocessError):
        return None
    return out.stdout.strip() if out.returncode == 0 else None


def _sidecar(spec: _FileSpec, figure_id: str | None) -> dict:
    return {
        "figure": figure_id,
        "file": spec.filename,
        "sweep": {
            "coordinate": spec.sweep,
            "lo": spec.lo,
            "hi": spec.hi,
            "points": spec.points,
            "log": spec.log,
        },
        "series": [
            {
                "label": s.label,
                "geometry": _geometry_dict(s.geometry),
                "beta": s.beta,
                "xi": s.beta + 0.25,
                "correction": s.correction,
                "fixed_r": s.fixed_r,
                "fixed_theta": s.fixed_theta,
                "fixed_z": s.fixed_z,
            }
            for s in spec.series
        ],
        "components": list(spec.components),
        "cutoffs": {"finite_t": spec.cutoff_t, "extrapolated": True},
        "build": {
            "version": __version__,
            "git": _git_describe(),
            "oracle_suite_version": SUITE_VERSION,
        },
        "created_utc": datetime.datetime.now(datetime.timezone.utc).isoformat(),
    }


def _emit_spec(spec: _FileSpec, outdir: Path, figure_id: str | None, workers: int) -> None:
    rows, notes = _compute_rows(spec, workers)
    for note in notes:
        print(f"warning: {spec.filename}: {note}", file=sys.stderr)
    csv_path = outdir / spec.filename
    _write_csv(csv_path, _columns(spec), rows)
    sidecar_path = csv_path.with_suffix(".json")
    with open(sidecar_path, "w") as fh:
        json.dump(_sidecar(spec, figure_id), fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"wrote {csv_path} ({len(rows)} rows) and {sidecar_path.name}")


# ---------------------------------------------------------------------------
# Figure registry.  Ranges are chosen for the interesting structure;
# every parameter lands in the sidecar, so the files are self describing.

_CONFORMAL_BETA = Coupling.conformal().beta
_FIG2_ANGLES = [
    ("tp25", 0.25 * math.pi),
    ("tp5", 0.5 * math.pi),
    ("t1", 1.0 * math.pi),
    ("t2p5", 2.5 * math.pi),
    ("t8", 8.0 * math.pi),
    ("t1e4", 1e4 * math.pi),
]


def _cone_file(filename, theta1, *, beta=0.0, correction=False, lo=0.25, hi=8.0,
               components=COMPONENT_NAMES, log=True):
    return _FileSpec(
        filename, "r", lo, hi, log,
        series=(_Series("", Cone(theta1), beta, correction=correction),),
        components=components,
    )


def _multi_angle_file(filename, *, correction=False, lo=0.02, hi=1.0):
    series = tuple(
        _Series(tag, Cone(theta1), 0.0, correction=correction)
        for tag, theta1 in _FIG2_ANGLES
    )
    return _FileSpec(filename, "r", lo, hi, True, series=series, components=("t00",))


def _wedge_theta_file(filename, theta0, beta, radii, *, near=False):
    lo = (0.002 if near else 0.01) * theta0
    hi = (0.1 if near else 0.99) * theta0
    series = tuple(
        _Series(f"r{r:g}", Wedge(theta0), beta, fixed_r=float(r)) for r in radii
    )
    return _FileSpec(filename, "theta", lo, hi, False, series=series,
                     components=("t00",))


def _wedge_r_file(filename, theta0, beta, theta, *, lo=1.0, hi=32.0):
    series = (_Series("", Wedge(theta0), beta, fixed_theta=theta),)
    return _FileSpec(filename, "r", lo, hi, True, series=series,
                     components=("t00",))


_FIGURES: dict[str, tuple[_FileSpec, ...]] = {
    "fig1": (
        _FileSpec("fig1.csv", "r", 0.25, 8.0, True,
                  series=(_Series("", Dowker(), 0.0),)),
    ),
    "fig1b": (
        _FileSpec("fig1b.csv", "r", 0.25, 8.0, True,
                  series=(_Series("", Dowker(), 0.0, correction=True),)),
    ),
    "fig2mis": tuple(
        _cone_file(f"fig2mis_{tag}.csv", theta1)
        for tag, theta1 in _FIG2_ANGLES[:3]
    ),
    "fig2ext": tuple(
        _cone_file(f"fig2ext_{tag}.csv", theta1)
        for tag, theta1 in _FIG2_ANGLES[3:]
    ),
    "fig2b": (_multi_angle_file("fig2b.csv"),),
    "fig3": tuple(
        _cone_file(f"fig3_{tag}.csv", theta1, correction=True)
        for tag, theta1 in _FIG2_ANGLES
    ),
    "fig3b": (_multi_angle_file("fig3b.csv", correction=True),),
    "fig4": tuple(
        _cone_file(f"fig4_{tag}.csv", 0.8 * math.pi, beta=beta)
        for tag, beta in (("xi16", _CONFORMAL_BETA), ("xi14", 0.0))
    ),
    "coneang1": (
        _FileSpec("coneang1.csv", "theta1", math.pi / 8, 2.0 * math.pi, False,
                  series=(_Series("", None, 0.0, fixed_r=1.0),)),
    ),
    "coneang2": (
        _FileSpec("coneang2.csv", "theta1", 2.0 * math.pi, 100.0 * math.pi, True,
                  series=(_Series("", None, 0.0, fixed_r=1.0),)),
    ),
    "fig5": (
        _wedge_theta_file("fig5_xi14.csv", 0.5 * math.pi, 0.0, (2, 4, 8)),
        _wedge_theta_file("fig5_xi16.csv", 0.5 * math.pi, _CONFORMAL_BETA,
                          (4, 8, 16)),
    ),
    "fig5b": (
        _wedge_theta_file("fig5b_xi14.csv", 0.5 * math.pi, 0.0, (2, 4, 8),
                          near=True),
        _wedge_theta_file("fig5b_xi16.csv", 0.5 * math.pi, _CONFORMAL_BETA,
                          (4, 8, 16), near=True),
    ),
    "fig6": tuple(
        _wedge_theta_file(f"fig6_{t0tag}_{xitag}.csv", theta0,
                          Coupling.from_xi(xi).beta, (8,))
        for t0tag, theta0 in (("pi3", math.pi / 3),
                              ("2pi5", 2 * math.pi / 5),
                              ("2pi3", 2 * math.pi / 3))
        for xitag, xi in _XI_TAGS.items()
    ),
    "fig6b": tuple(
        _wedge_theta_file(f"fig6b_{t0tag}_{xitag}.csv", theta0,
                          Coupling.from_xi(xi).beta, (8,), near=True)
        for t0tag, theta0 in (("pi3", math.pi / 3),
                              ("2pi5", 2 * math.pi / 5),
                              ("2pi3", 2 * math.pi / 3))
        for xitag, xi in _XI_TAGS.items()
    ),
    "fig7": tuple(
        _wedge_r_file(f"fig7_{thtag}_{xitag}.csv", 0.5 * math.pi,
                      Coupling.from_xi(xi).beta, theta)
        for thtag, theta in (("pi16", math.pi / 16),
                             ("pi8", math.pi / 8),
                             ("pi4", math.pi / 4))
        for xitag, xi in _XI_TAGS.items()
    ),
    "fig7b": tuple(
        _wedge_r_file(f"fig7b_{thtag}_{xitag}.csv", 0.5 * math.pi,
                      Coupling.from_xi(xi).beta, theta, lo=0.05, hi=1.0)
        for thtag, theta in (("pi16", math.pi / 16),
                             ("pi8", math.pi / 8),
                             ("pi4", math.pi / 4))
        for xitag, xi in _XI_TAGS.items()
    ),
}


# ---------------------------------------------------------------------------
# Argument handling.


def _load_config(path: str) -> list[str]:
    tokens: list[str] = []
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line without '=': {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if value.lower() in ("true", "yes", "on"):
            tokens.append(f"--{key}")
        elif value.lower() in ("false", "no", "off"):
            continue
        else:
            tokens.extend((f"--{key}", value))
    return tokens


def _expand_config(argv: list[str]) -> list[str]:
    """Splice `--config FILE` tokens in right after the subcommand.

    Command line flags parse later, so they win over the file.
    """
    if "--config" not in argv:
        return argv
    i = argv.index("--config")
    if i + 1 >= len(argv):
        raise ValueError("--config needs a file path")
    tokens = _load_config(argv[i + 1])
    rest = argv[:i] + argv[i + 2:]
    if not rest:
        raise ValueError("--config needs a subcommand")
    return [rest[0], *tokens, *rest[1:]]


def _add_geometry_args(sub):
    sub.add_argument("--geometry", required=True,
                     choices=["minkowski", "cone", "dowker", "wedge"])
    sub.add_argument("--theta1", type=float, default=None,
                     help="total cone angle (cone only)")
    sub.add_argument("--theta0", type=float, default=None,
                     help="wedge opening angle (wedge only)")
    sub.add_argument("--bc", choices=["dirichlet", "neumann"],
                     default="dirichlet", help="wedge wall condition")


def _add_coupling_args(sub):
    sub.add_argument("--beta", type=float, default=None,
                     help="coupling combination xi - 1/4")
    sub.add_argument("--xi", type=float, default=None, help="curvature coupling")
    sub.add_argument("--coupling", choices=["minimal", "conformal", "quarter"],
                     default=None, help="named coupling preset")


def _geometry_from_args(args):
    if args.geometry == "minkowski":
        return Minkowski()
    if args.geometry == "cone":
        if args.theta1 is None:
            raise ValueError("--theta1 is required for --geometry cone")
        return Cone(args.theta1)
    if args.geometry == "dowker":
        return Dowker()
    if args.theta0 is None:
        raise ValueError("--theta0 is required for --geometry wedge")
    return Wedge(args.theta0, BoundaryCondition(args.bc))


def _beta_from_args(args) -> float:
    given = [v for v in (args.beta, args.xi, args.coupling) if v is not None]
    if len(given) > 1:
        raise ValueError("give at most one of --beta, --xi, --coupling")
    if args.beta is not None:
        return args.beta
    if args.xi is not None:
        return Coupling.from_xi(args.xi).beta
    if args.coupling is not None:
        return Coupling.from_name(args.coupling).beta
    return 0.0


def _cmd_eval(args) -> int:
    geometry = _geometry_from_args(args)
    beta = _beta_from_args(args)
    what = "kernel" if args.kernel_only else args.what
    primes = (args.rprime, args.thetaprime, args.zprime)
    if what != "kernel" and any(v is not None for v in primes):
        raise ValueError(
            "primed coordinates apply to kernel evaluation only; "
            "stress is taken at spatially coincident points"
        )
    result = {
        "geometry": _geometry_dict(geometry),
        "r": args.r,
        "theta": args.theta,
        "z": args.z,
        "beta": beta,
        "what": what,
    }
    if what == "kernel":
        pair = PointPair(
            t=args.t, r=args.r,
            rp=args.r if args.rprime is None else args.rprime,
            theta=args.theta,
            thetap=args.theta if args.thetaprime is None else args.thetaprime,
            z=args.z,
            zp=args.z if args.zprime is None else args.zprime,
        )
        result["t"] = args.t
        for name, value in (("rprime", pair.rp), ("thetaprime", pair.thetap),
                            ("zprime", pair.zp)):
            result[name] = value
        match geometry:
            case Minkowski():
                result["tbar"] = tbar_minkowski(pair)
            case Cone(theta1=theta1):
                result["tbar"] = tbar_cone(pair, theta1)
            case Dowker():
                result["tbar"] = tbar_dowker(pair)
            case Wedge(theta0=theta0, bc=bc):
                result["tbar"] = tbar_wedge_renormalized(pair, theta0, bc)
    elif what == "stress":
        s = stress_at(geometry, args.r, args.theta, args.z, beta=beta,
                      t=args.t, renorm=RenormMode(args.renorm))
        result["t"] = args.t
        result["renorm"] = args.renorm
        result["stress"] = s.components()
    else:
        ext = stress_t0(geometry, args.r, args.theta, args.z, beta=beta)
        result["stress"] = ext.stress.components()
        result["error_estimate"] = ext.error
    print(json.dumps(result, indent=2, sort_keys=True))
    return 0


def _cmd_scan(args) -> int:
    geometry = None if args.sweep == "theta1" else _geometry_from_args(args)
    beta = _beta_from_args(args)
    if args.sweep != "r" and args.r is None:
        raise ValueError(f"--r is required for a {args.sweep} sweep")
    components = tuple(args.components.split(","))
    unknown = sorted(set(components) - set(COMPONENT_NAMES))
    if unknown:
        raise ValueError(
            f"unknown components: {', '.join(unknown)}; "
            f"known: {', '.join(COMPONENT_NAMES)}"
        )
    out = Path(args.out) if args.out else None
    name = out.name if out else "scan.csv"
    spec = _FileSpec(
        name, args.sweep, args.lo, args.hi, args.log,
        series=(_Series("", geometry, beta, correction=args.correction,
                        fixed_r=args.r, fixed_theta=args.theta,
                        fixed_z=args.z),),
        components=components, points=args.points, cutoff_t=args.t,
    )
    if out is None:
        rows, notes = _compute_rows(spec, args.workers)
        for note in notes:
            print(f"warning: {note}", file=sys.stderr)
        writer = csv.writer(sys.stdout)
        writer.writerow(_columns(spec))
        for row in rows:
            writer.writerow(["" if v is None else repr(float(v)) for v in row])
        return 0
    out.parent.mkdir(parents=True, exist_ok=True)
    _emit_spec(spec, out.parent, None, args.workers)
    return 0


def _cmd_figure(args) -> int:
    if args.list:
        for figure_id, specs in _FIGURES.items():
            print(f"{figure_id}: {', '.join(s.filename for s in specs)}")
        return 0
    if not args.id:
        raise ValueError("figure id required (or use --list)")
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for figure_id in args.id:
        if figure_id not in _FIGURES:
            raise ValueError(
                f"unknown figure id {figure_id!r}; known: {', '.join(_FIGURES)}"
            )
        for spec in _FIGURES[figure_id]:
            if args.points is not None:
                spec = replace(spec, points=args.points)
            _emit_spec(spec, outdir, figure_id, args.workers)
    return 0


def _cmd_verify(args) -> int:
    selection = args.only.split(",") if args.only else None
    reports = run_oracle_suite(selection, seed=args.seed)
    print(reports_to_json(reports) if args.json else format_reports(reports))
    return 0 if all(r.passed for r in reports) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conevac",
        description="Vacuum stress of a massless scalar on cones and wedges.",
    )
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="one point, JSON output")
    _add_geometry_args(p_eval)
    _add_coupling_args(p_eval)
    p_eval.add_argument("--r", type=float, required=True)
    p_eval.add_argument("--theta", type=float, default=0.0)
    p_eval.add_argument("--z", type=float, default=0.0)
    p_eval.add_argument("--rprime", type=float, default=None,
                        help="primed radius (kernel only; defaults to --r)")
    p_eval.add_argument("--thetaprime", type=float, default=None,
                        help="primed angle (kernel only; defaults to --theta)")
    p_eval.add_argument("--zprime", type=float, default=None,
                        help="primed height (kernel only; defaults to --z)")
    p_eval.add_argument("--t", type=float, default=1.0,
                        help="Euclidean time offset; 0 needs separated points")
    p_eval.add_argument("--what", choices=["kernel", "stress", "stress-t0"],
                        default="stress")
    p_eval.add_argument("--kernel-only", action="store_true",
                        help="shorthand for --what kernel")
    p_eval.add_argument("--renorm", choices=[m.value for m in RenormMode],
                        default="kernel")
    p_eval.set_defaults(func=_cmd_eval)

    p_scan = sub.add_parser("scan", help="sweep one coordinate to CSV")
    _add_geometry_args(p_scan)
    _add_coupling_args(p_scan)
    p_scan.add_argument("--sweep", choices=["r", "theta", "theta1"],
                        required=True)
    p_scan.add_argument("--lo", type=float, required=True)
    p_scan.add_argument("--hi", type=float, required=True)
    p_scan.add_argument("--points", type=int, default=200)
    p_scan.add_argument("--log", action="store_true",
                        help="geometric instead of linear grid")
    p_scan.add_argument("--r", type=float, default=None,
                        help="fixed radius for theta/theta1 sweeps")
    p_scan.add_argument("--theta", type=float, default=0.0)
    p_scan.add_argument("--z", type=float, default=0.0)
    p_scan.add_argument("--t", type=float, default=1.0,
                        help="finite cutoff for the first column group")
    p_scan.add_argument("--components", default=",".join(COMPONENT_NAMES))
    p_scan.add_argument("--correction", action="store_true",
                        help="emit the per-unit-beta correction instead")
    p_scan.add_argument("--out", default=None,
                        help="CSV path (stdout when omitted)")
    p_scan.add_argument("--workers", type=int, default=1)
    p_scan.set_defaults(func=_cmd_scan)

    p_fig = sub.add_parser("figure", help="write canned figure datasets")
    p_fig.add_argument("id", nargs="*", help="figure ids (see --list)")
    p_fig.add_argument("--list", action="store_true",
                       help="list figure ids and their files")
    p_fig.add_argument("--outdir", default="figures")
    p_fig.add_argument("--points", type=int, default=None,
                       help="override the per-file grid size")
    p_fig.add_argument("--workers", type=int, default=1)
    p_fig.set_defaults(func=_cmd_figure)

    p_verify = sub.add_parser("verify", help="run the oracle suite")
    p_verify.add_argument("--only", default=None,
                          help="comma separated oracle names")
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        argv = _expand_config(list(argv))
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        # Argument validation beyond what argparse checks itself.
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ConeVacError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
