"""Command-line front end: ``rot345 {exp,log,decompose,check,bench}``.

Input is a JSON object ``{"n": 4, "rows": [[...], ...], "kind": "antisymmetric"}``
(``kind`` optional: antisymmetric, rotation or general). A result document
produced by this tool is accepted as input too; its ``result`` matrix is
used, so ``rot345 log -i R.json | rot345 exp`` reproduces R.

Exit status: 0 success, 1 invalid input, 2 numerical failure.
"""

import argparse
import json
import logging
import math
import statistics
import sys
import time

import numpy as np

from . import __version__
from .decomp import orthogonal_decompose
from .errors import (
    DimensionError,
    NotAntisymmetricError,
    NotRotationError,
    Rot345Error,
)
from .expmap import exp_son, exp_with_info
from .kernels import BACKEND
from .logmap import log_son, materialize, spectral_angles
from .oracle import random_antisym, rng_from, series_exp
from .smallmat import (
    ANTISYMMETRY_TOL,
    DIMENSIONS,
    ROTATION_TOL,
    antisymmetry_residual,
    check_rotation,
    orthogonality_residual,
    skew_checked,
)

log = logging.getLogger("rot345")

KINDS = ("antisymmetric", "rotation", "general")
LOG_ROUNDTRIP_LIMIT = 1e-6


class InputError(Exception):
    """Invalid command line or input document (exit 1)."""


class NumericalFailure(Exception):
    """An internal accuracy check failed (exit 2)."""


# -- documents ---------------------------------------------------------------


def _fmt_float(x):
    x = float(x)
    if not math.isfinite(x):
        return "null"
    return format(x, ".17g")


def dumps(obj, indent=0):
    """JSON text with every float written to 17 significant digits."""
    pad = "  " * (indent + 1)
    end = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    if isinstance(obj, (list, tuple)):
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(_fmt_float(v) if isinstance(v, float) else str(v) for v in obj) + "]"
        return "[\n" + ",\n".join(pad + dumps(v, indent + 1) for v in obj) + "\n" + end + "]"
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    return json.dumps(obj)


def matrix_doc(m, kind=None):
    m = np.asarray(m, dtype=np.float64)
    doc = {"n": int(m.shape[0]), "rows": [[float(x) for x in row] for row in m]}
    if kind is not None:
        doc["kind"] = kind
    return doc


def parse_document(text):
    """(matrix, kind) from a matrix document or a result document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if isinstance(doc, dict) and "rows" not in doc and isinstance(doc.get("result"), dict):
        doc = doc["result"]
    if not isinstance(doc, dict):
        raise InputError("document must be a JSON object with fields n and rows")
    n, rows, kind = doc.get("n"), doc.get("rows"), doc.get("kind")
    if isinstance(n, bool) or not isinstance(n, int) or n not in DIMENSIONS:
        raise InputError(f"field n must be 3, 4 or 5, got {n!r}")
    if kind is not None and kind not in KINDS:
        raise InputError(f"field kind must be one of {KINDS}, got {kind!r}")
    if not isinstance(rows, list) or len(rows) != n:
        raise InputError(f"field rows must be a list of {n} rows")
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise InputError(f"row {i + 1} must have {n} entries")
        for j, x in enumerate(row):
            if isinstance(x, bool) or not isinstance(x, (int, float)) or not math.isfinite(x):
                raise InputError(f"entry ({i + 1}, {j + 1}) is not a finite number: {x!r}")
    return np.array(rows, dtype=np.float64), kind


def _result(operation, outputs, diagnostics, result=None):
    doc = {"operation": operation, "version": __version__, "outputs": outputs, "diagnostics": diagnostics}
    if result is not None:
        doc["result"] = result
    return doc


# -- commands ----------------------------------------------------------------


def cmd_exp(m, kind, tol):
    if kind == "rotation":
        raise InputError("exp needs an antisymmetric (or general) matrix, got kind rotation")
    diagnostics = {}
    if kind == "general":
        resid = antisymmetry_residual(m)
        if resid > 0:
            log.warning("general input skew-symmetrized (max |A + A^t| = %.3g)", resid)
        diagnostics["skew_symmetrized"] = True
        m = 0.5 * (m - m.T)
    info = exp_with_info(m, tol)
    r = info.rotation
    inv = info.invariants
    outputs = {
        "class": info.klass,
        "theta_plus": inv.theta_plus,
        "theta_minus": inv.theta_minus,
        "delta": inv.delta,
        "rotation": r,
    }
    diagnostics["orthogonality_residual"] = orthogonality_residual(r)
    diagnostics["det_residual"] = abs(float(np.linalg.det(r)) - 1.0)
    return _result("exp", outputs, diagnostics, matrix_doc(r, "rotation"))


def _payload(outcome):
    out = {}
    for name in ("f", "f_plus", "proj", "proj2", "proj4", "proj_minus", "axis"):
        if hasattr(outcome, name):
            out[name] = getattr(outcome, name)
    if hasattr(outcome, "parts"):
        out["parts"] = list(outcome.parts)
        out["part_thetas"] = list(outcome.thetas)
    if hasattr(outcome, "theta"):
        out["theta"] = outcome.theta
    if hasattr(outcome, "axis_angle"):
        out["theta"] = outcome.axis_angle.theta
        out["axis"] = outcome.axis_angle.axis
    return out


def cmd_log(m, kind, tol):
    if kind == "antisymmetric":
        raise InputError("log needs a rotation, got kind antisymmetric")
    r = check_rotation(m, tol=tol)
    outcome = log_son(r, tol)
    f = materialize(outcome)
    outputs = {"branch": outcome.branch}
    outputs.update(_payload(outcome))
    if r.shape[0] in (4, 5):
        ang = spectral_angles(r, tol=tol)
        outputs.update(
            delta=ang.delta,
            y_plus=ang.y_plus,
            y_minus=ang.y_minus,
            theta_plus=ang.theta_plus,
            theta_minus=ang.theta_minus,
        )
    outputs["log"] = f
    resid = float(np.max(np.abs(exp_son(f) - r)))
    if resid > LOG_ROUNDTRIP_LIMIT:
        raise NumericalFailure(f"log round trip residual {resid:.3g} exceeds {LOG_ROUNDTRIP_LIMIT:g}")
    diagnostics = {"roundtrip_residual": resid, "orthogonality_residual": orthogonality_residual(r)}
    return _result("log", outputs, diagnostics, matrix_doc(f, "antisymmetric"))


def cmd_decompose(m, kind, tol):
    if kind == "rotation":
        raise InputError("decompose needs an antisymmetric matrix, got kind rotation")
    if m.shape[0] not in (4, 5):
        raise InputError("decompose requires n in {4,5}")
    split = orthogonal_decompose(m, tol)
    outputs = {
        "class": split.klass,
        "delta": split.delta,
        "theta_plus": split.theta_plus,
        "theta_minus": split.theta_minus,
    }
    diagnostics = {}
    if split.f_plus is not None:
        f = skew_checked(m, tol=tol)
        outputs["f_plus"] = split.f_plus
        outputs["f_minus"] = split.f_minus
        diagnostics["reconstruction_residual"] = float(np.max(np.abs(split.f_plus + split.f_minus - f)))
        diagnostics["annihilation_residual"] = float(np.max(np.abs(split.f_plus @ split.f_minus)))
    return _result("decompose", outputs, diagnostics)


def cmd_check(m, kind, tol):
    qualifies = []
    try:
        skew_checked(m, tol=ANTISYMMETRY_TOL if tol is None else tol)
        qualifies.append("antisymmetric")
    except NotAntisymmetricError:
        pass
    try:
        check_rotation(m, tol=ROTATION_TOL if tol is None else tol)
        qualifies.append("rotation")
    except NotRotationError:
        pass
    outputs = {
        "antisymmetry_residual": antisymmetry_residual(m),
        "orthogonality_residual": orthogonality_residual(m),
        "det": float(np.linalg.det(m)),
        "qualifies": qualifies,
    }
    return _result("check", outputs, {"declared_kind": kind})


def _bench_generator(n, rng):
    """Random antisymmetric f with half-trace norm uniform in [0, 2 pi]."""
    f = random_antisym(n, 1.0, rng)
    norm = math.sqrt(0.5 * float(np.sum(f * f)))
    target = 2.0 * math.pi * rng.random()
    return f * (target / norm) if norm > 0 else f


def _timed(fn, *args):
    t0 = time.perf_counter_ns()
    out = fn(*args)
    return out, (time.perf_counter_ns() - t0) * 1e-3


def _summary(samples):
    s = sorted(samples)
    p90 = s[min(len(s) - 1, math.ceil(0.9 * len(s)) - 1)]
    return {"median_us": statistics.median(s), "p90_us": p90}


def cmd_bench(dim, trials, seed):
    if dim not in DIMENSIONS:
        raise InputError(f"--dim must be 3, 4 or 5, got {dim}")
    if trials < 1:
        raise InputError("--trials must be at least 1")
    rng = rng_from(seed)
    n_warm = 3
    for _ in range(n_warm):
        # compile / warm caches outside the timed loop
        f = _bench_generator(dim, rng_from(0))
        materialize(log_son(exp_son(f)))
        series_exp(f)
    t_exp, t_series, t_log = [], [], []
    max_exp, max_log = 0.0, 0.0
    for _ in range(trials):
        f = _bench_generator(dim, rng)
        r, dt = _timed(exp_son, f)
        t_exp.append(dt)
        ref, dt = _timed(series_exp, f)
        t_series.append(dt)
        max_exp = max(max_exp, float(np.max(np.abs(r - ref))))
        g, dt = _timed(lambda x: materialize(log_son(x)), ref)
        t_log.append(dt)
        max_log = max(max_log, float(np.max(np.abs(exp_son(g) - ref))))
    exp_stats, series_stats = _summary(t_exp), _summary(t_series)
    outputs = {
        "dim": dim,
        "trials": trials,
        "seed": seed,
        "backend": BACKEND,
        "exp_son": exp_stats,
        "series_exp": series_stats,
        "log_materialize": _summary(t_log),
        "max_exp_residual": max_exp,
        "max_log_roundtrip_residual": max_log,
    }
    diagnostics = {"speed_check_passed": exp_stats["median_us"] <= series_stats["median_us"]}
    if not diagnostics["speed_check_passed"]:
        diagnostics["note"] = "closed-form exp median latency exceeds the series oracle's"
        log.warning(diagnostics["note"])
    return _result("bench", outputs, diagnostics)


# -- entry point -------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(f"{self.prog}: {message}")


def build_parser():
    p = _Parser(prog="rot345", description="Closed-form exp/log of rotations in dimensions 3, 4, 5.")
    p.add_argument("--version", action="version", version=f"rot345 {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, help_ in (
        ("exp", "exponential of an antisymmetric matrix"),
        ("log", "logarithm of a rotation"),
        ("decompose", "split a 4x4/5x5 antisymmetric matrix into orthogonal wedge parts"),
        ("check", "report residuals and which kinds a matrix qualifies as"),
    ):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("-i", "--input", default="-", help="input document, '-' for stdin")
        sp.add_argument("-o", "--output", default="-", help="output document, '-' for stdout")
        sp.add_argument("--tol", type=float, default=None, help="validation tolerance override")
    sp = sub.add_parser("bench", help="time closed forms against the series oracle")
    sp.add_argument("--dim", type=int, default=5)
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("-o", "--output", default="-", help="output document, '-' for stdout")
    return p


def _read(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


COMMANDS = {"exp": cmd_exp, "log": cmd_log, "decompose": cmd_decompose, "check": cmd_check}


def run(argv=None):
    args = build_parser().parse_args(argv)
    if args.command == "bench":
        return args, cmd_bench(args.dim, args.trials, args.seed)
    m, kind = parse_document(_read(args.input))
    tol = args.tol
    if tol is not None and not tol > 0:
        raise InputError("--tol must be positive")
    fn = COMMANDS[args.command]
    if args.command == "check":
        return args, fn(m, kind, tol)
    default = ROTATION_TOL if args.command == "log" else ANTISYMMETRY_TOL
    return args, fn(m, kind, default if tol is None else tol)


def main(argv=None):
    logging.basicConfig(level=logging.WARNING, format="rot345: %(levelname)s: %(message)s", stream=sys.stderr)
    try:
        args, doc = run(argv)
        _write(args.output, dumps(doc) + "\n")
    except SystemExit as exc:
        # --help / --version
        return 0 if exc.code in (0, None) else 1
    except (InputError, DimensionError, NotAntisymmetricError, NotRotationError) as exc:
        print(f"rot345: error: {exc}", file=sys.stderr)
        return 1
    except (NumericalFailure, Rot345Error, FloatingPointError, ArithmeticError) as exc:
        print(f"rot345: numerical failure: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"rot345: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
