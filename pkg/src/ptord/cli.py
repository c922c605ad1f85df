"""Command-line front end: ``ptord compute``, ``ptord batch`` and ``ptord discriminant``.

Exit codes follow the exception classes in :mod:`ptord.errors`: 2 for bad input,
3 for a defect-table miss, 4 for a resource ceiling, 5 for a failed cross-check.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any

from .curves import CurveModel, minimal_model_at, standard_invariants
from .engine import DegreeResult, Options, _jsonable, compute_degree, discriminant_exponent
from .errors import InputError, PtordError
from .frobenius import DEFAULT_SEED
from .oracles import verify_result
from .reduction import ReductionKind, load_defect_table

# always present in the JSON intermediates, null when the branch does not use them
SCHEMA_INTERMEDIATES = ("a", "n", "r", "delta", "alpha", "beta", "vj", "pth_power_j", "b_divisible", "twist_u")
BATCH_HEADER = ["label", "a1", "a2", "a3", "a4", "a6", "ell", "p"]


def _ints(text: str, count: int, flag: str) -> list[int]:
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != count:
        raise InputError(f"{flag} expects {count} comma-separated integers, got {text!r}")
    try:
        return [int(s) for s in parts]
    except ValueError:
        raise InputError(f"{flag} expects integers, got {text!r}") from None


def model_from_c_invariants(c4: int, c6: int) -> CurveModel:
    """y^2 = x^3 - 27 c4 x - 54 c6."""
    return CurveModel(0, 0, 0, -27 * c4, -54 * c6)


def _check_assume_minimal(model: CurveModel, ell: int):
    given = standard_invariants(model).disc
    data = minimal_model_at(model, ell)
    v = 0
    while given % ell == 0:
        given //= ell
        v += 1
    if v != data.vD:
        raise InputError(f"model is not minimal at {ell}: v(Delta) = {v}, minimal {data.vD}")


def result_document(result: DegreeResult, violations: list[str] | None = None) -> dict[str, Any]:
    doc = result.to_dict()
    inter = {k: _jsonable(result.intermediates.get(k)) for k in SCHEMA_INTERMEDIATES}
    for k, v in doc["intermediates"].items():
        inter.setdefault(k, v)
    doc["intermediates"] = inter
    doc["verify"] = None if violations is None else {"violations": violations}
    return doc


def error_document(exc: Exception, label=None, ell=None, p=None, row: int | None = None) -> dict[str, Any]:
    code = exc.exit_code if isinstance(exc, PtordError) else 1
    doc: dict[str, Any] = {"label": label, "ell": ell, "p": p}
    if row is not None:
        doc["row"] = row
    doc["error"] = {"type": type(exc).__name__, "exit_code": code, "message": str(exc)}
    return doc


def explain_lines(result: DegreeResult) -> list[str]:
    info = result.reduction
    inter = result.intermediates
    lines = [
        f"query: ell = {result.ell}, p = {result.p}",
        f"minimal model at {result.ell}: (v(c4), v(c6), v(Delta)) = "
        f"({_jsonable(inter['vc4'])}, {_jsonable(inter['vc6'])}, {inter['vD']}), Kodaira {inter['kodaira']}",
        f"reduction: {info.kind.value}",
    ]
    if info.kind is ReductionKind.MULTIPLICATIVE:
        lines.append(f"split: {info.split_marker}")
    if info.e is not None:
        lines.append(f"semistability defect e = {info.e} ({info.defect_source.value})")
    lines.append(f"r = ord_p(ell) = {inter['r']}, delta = ord_p(-ell) = {inter['delta']}")
    skip = {"vc4", "vc6", "vD", "kodaira", "r", "delta", "e"}
    for k, v in inter.items():
        if k not in skip:
            lines.append(f"{k} = {_jsonable(v)}")
    lines.append(f"branch {result.branch} gives d = {result.d}")
    return lines


# -------------------------------------------------------------------------


def _default_seed() -> int:
    env = os.environ.get("PTORD_SEED")
    if env is None:
        return DEFAULT_SEED
    try:
        return int(env)
    except ValueError:
        raise InputError(f"PTORD_SEED must be an integer, got {env!r}") from None


def _options(args, defect=None) -> Options:
    table = load_defect_table(args.defect_table) if args.defect_table else None
    seed = args.seed if args.seed is not None else _default_seed()
    return Options(defect=defect, seed=seed, b_method=args.b_method, defect_table=table)


def _model_from_args(args) -> CurveModel:
    if args.a_invariants and args.c_invariants:
        raise InputError("give either --a-invariants or --c-invariants, not both")
    if args.a_invariants:
        return CurveModel(*_ints(args.a_invariants, 5, "--a-invariants"))
    if args.c_invariants:
        return model_from_c_invariants(*_ints(args.c_invariants, 2, "--c-invariants"))
    raise InputError("a curve is required: --a-invariants a1,a2,a3,a4,a6 or --c-invariants c4,c6")


def _run_query(model, ell, p, opts: Options, label=None, verify=False, assume_minimal=False):
    if assume_minimal:
        _check_assume_minimal(model, ell)
    result = compute_degree(model, ell, p, opts)
    result.label = label
    return result, (verify_result(result) if verify else None)


def cmd_compute(args, out) -> int:
    if args.ell is None or args.p is None:
        raise InputError("--ell and --p are required")
    model = _model_from_args(args)
    result, violations = _run_query(
        model, args.ell, args.p, _options(args, args.defect), args.label, args.verify, args.assume_minimal
    )
    if args.explain:
        for line in explain_lines(result):
            print(line, file=out)
    if args.json:
        print(json.dumps(result_document(result, violations), indent=2), file=out)
    else:
        print(f"d = {result.d}  (branch {result.branch})", file=out)
        if violations is not None:
            print("verify: ok" if not violations else "verify: " + "; ".join(violations), file=out)
    return 5 if violations else 0


# batch -------------------------------------------------------------------


def _batch_row(task) -> dict[str, Any]:
    rowno, row, opts, verify = task
    label = row.get("label") or None
    ell = p = None
    try:
        missing = [k for k in BATCH_HEADER[1:] if (row.get(k) or "").strip() == ""]
        if missing:
            raise InputError(f"row {rowno}: missing fields {', '.join(missing)}")
        try:
            coeffs = [int(row[k]) for k in ("a1", "a2", "a3", "a4", "a6")]
            ell, p = int(row["ell"]), int(row["p"])
            defect = int(row["defect"]) if (row.get("defect") or "").strip() else None
        except ValueError:
            raise InputError(f"row {rowno}: non-integer field") from None
        if defect is not None:
            opts = Options(defect, opts.seed, opts.b_method, opts.defect_table)
        result, violations = _run_query(CurveModel(*coeffs), ell, p, opts, label, verify)
        return result_document(result, violations)
    except PtordError as exc:
        return error_document(exc, label, ell, p, rowno)


def cmd_batch(args, out) -> int:
    if not args.input or not args.output:
        raise InputError("--input and --output are required")
    opts = _options(args)
    try:
        with open(args.input, newline="", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc}") from None
    tasks = []
    if text.strip():
        reader = csv.DictReader(text.splitlines())
        header = [h.strip() for h in (reader.fieldnames or [])]
        if header[: len(BATCH_HEADER)] != BATCH_HEADER:
            raise InputError(f"header must start with {','.join(BATCH_HEADER)}, got {','.join(header)}")
        reader.fieldnames = header
        for i, row in enumerate(reader, 1):
            row = {k: (v.strip() if isinstance(v, str) else v) for k, v in row.items() if k is not None}
            tasks.append((i, row, opts, args.verify))
    if args.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            docs = list(pool.map(_batch_row, tasks, chunksize=max(1, len(tasks) // (4 * args.jobs))))
    else:
        docs = [_batch_row(t) for t in tasks]
    failed = sum(1 for d in docs if "error" in d or (d.get("verify") or {}).get("violations"))
    with open(args.output, "w", encoding="utf-8") as fh:
        for d in docs:
            fh.write(json.dumps(d) + "\n")
    print(f"{len(docs)} rows, {failed} failed", file=out)
    return 0 if failed == 0 else 1


# discriminant ------------------------------------------------------------


def cmd_discriminant(args, out) -> int:
    if args.different is None:
        raise InputError("--different D is required")
    if args.ell is None:
        raise InputError("--ell is required")
    d, e = args.d, args.e
    if args.a_invariants or args.c_invariants:
        if args.p is None:
            raise InputError("--p is required when d and e come from a curve")
        result = compute_degree(_model_from_args(args), args.ell, args.p, _options(args, args.defect))
        d = result.d if d is None else d
        if e is None:
            if result.reduction.e is None:
                raise InputError(f"e is only defined here for additive potentially good reduction; pass --e")
            e = result.reduction.e
    if d is None or e is None:
        raise InputError("need --d and --e, or a curve with --p")
    x = discriminant_exponent(d, e, args.different)
    if args.json:
        print(json.dumps({"ell": args.ell, "d": d, "e": e, "different": args.different, "exponent": x}), file=out)
    else:
        print(f"({args.ell})^{x}", file=out)
    return 0


# -------------------------------------------------------------------------


def _add_curve_flags(sp):
    sp.add_argument("--a-invariants", metavar="A1,A2,A3,A4,A6")
    sp.add_argument("--c-invariants", metavar="C4,C6", help="builds y^2 = x^3 - 27 c4 x - 54 c6")
    sp.add_argument("--ell", type=int)
    sp.add_argument("--p", type=int)
    sp.add_argument("--defect", type=int, help="override the semistability defect e")


def _add_common(sp):
    sp.add_argument("--seed", type=int, help="sampler seed (default: $PTORD_SEED or a fixed value)")
    sp.add_argument("--defect-table", metavar="FILE", help="replace the bundled defect table")
    sp.add_argument("--b-method", default="auto", choices=["auto", "enumeration", "divpoly", "sampling"])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ptord", description="Degree of the p-torsion field of E over Q_ell.")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="one curve, one (ell, p)")
    _add_curve_flags(c)
    _add_common(c)
    c.add_argument("--label")
    c.add_argument("--json", action="store_true")
    c.add_argument("--explain", action="store_true")
    c.add_argument("--verify", action="store_true")
    c.add_argument("--assume-minimal", action="store_true", help="fail unless the model is already minimal at ell")

    b = sub.add_parser("batch", help="CSV in, JSON lines out")
    b.add_argument("--input")
    b.add_argument("--output")
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--verify", action="store_true")
    _add_common(b)

    dsc = sub.add_parser("discriminant", help="exponent d*D/e of the discriminant ideal")
    _add_curve_flags(dsc)
    _add_common(dsc)
    dsc.add_argument("--d", type=int)
    dsc.add_argument("--e", type=int)
    dsc.add_argument("--different", type=int)
    dsc.add_argument("--json", action="store_true")
    return parser


COMMANDS = {"compute": cmd_compute, "batch": cmd_batch, "discriminant": cmd_discriminant}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "jobs", 1) < 1:
            raise InputError("--jobs must be at least 1")
        return COMMANDS[args.command](args, out)
    except PtordError as exc:
        print(f"error: {exc}", file=err)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
