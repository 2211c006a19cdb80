"""
Command-line interface.

    classical-schubert table  --type B --rank 2 --kind first --arity double --format json
    classical-schubert verify --all --type B --rank 2
    classical-schubert eval   --type B --rank 2 --kind second --arity double --element=-1,2 --vanish 1,2
    classical-schubert export --type C --rank 2 --kind third --output c2.json

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 I/O error.
Tables are cached under ``$CLASSICAL_SCHUBERT_CACHE`` (default
``~/.cache/classical_schubert``), keyed by a hash of the job and the version.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
import tempfile
from pathlib import Path

from . import __version__, coxalg, poly, verify, weyl
from .expressions import DecompositionError, ExpressionError, ExpressionSpec, build, decompose, minus_w_of_x
from .poly import Frac, PolyError, render

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
ROW_LIMIT = 10**5
CACHE_ENV = "CLASSICAL_SCHUBERT_CACHE"


class UsageError(Exception):
    pass


class CacheError(OSError):
    pass


def _spec(args) -> ExpressionSpec:
    try:
        group = weyl.GroupType(args.type.upper(), args.rank)
        if group.order > ROW_LIMIT and not args.force:
            raise UsageError(f"|W({group})| = {group.order} exceeds {ROW_LIMIT}; pass --force to proceed")
        return ExpressionSpec(group, args.flavor, args.kind, args.arity, args.m)
    except (ExpressionError, weyl.WeylError) as err:
        raise UsageError(str(err)) from None


# -- rows and caching -----------------------------------------------------------------


def compute_rows(spec: ExpressionSpec, beta: str = "keep") -> list[dict]:
    """Table rows sorted by (length, window)."""
    fam = decompose(build(spec), spec, polynomial=spec.flavor == "schubert")
    rows = []
    for w, f in fam.rows():
        f = Frac.coerce(f)
        if beta == "zero":
            f = Frac.coerce(poly.substitute(f, {"b": 0}))
        rows.append(_row(w, f))
    return rows


def _row(w: weyl.GroupElement, f: Frac) -> dict:
    row = {
        "word": weyl.format_word(weyl.reduced_word(w)),
        "window": weyl.format_window(w.window),
        "length": w.length,
        "polynomial": render(f),
        "terms": poly.to_json(f.num),
    }
    if not f.is_polynomial():
        row["denominator"] = poly.to_json(f.den)
    return row


def row_value(row: dict) -> Frac:
    den = poly.from_json(row["denominator"]) if "denominator" in row else poly.ONE
    return Frac(poly.from_json(row["terms"]), den)


def cache_key(spec: ExpressionSpec, beta: str) -> str:
    payload = {
        "type": spec.group.tag,
        "rank": spec.group.rank,
        "flavor": spec.flavor,
        "kind": spec.kind,
        "arity": spec.arity,
        "m": spec.z_count if spec.arity == "triple" else None,
        "beta": beta,
        "version": __version__,
    }
    return hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()


def cache_dir(explicit: str | None) -> Path:
    if explicit:
        return Path(explicit)
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else Path.home() / ".cache" / "classical_schubert"


def atomic_write(path: Path, text: str):
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def cached_rows(spec: ExpressionSpec, beta: str, directory: Path | None) -> tuple[list[dict], bool]:
    """(rows, hit); ``directory=None`` disables the cache."""
    if directory is None:
        return compute_rows(spec, beta), False
    path = directory / f"{cache_key(spec, beta)}.json"
    if path.exists():
        try:
            return json.loads(path.read_text(encoding="utf-8"))["rows"], True
        except (OSError, ValueError, KeyError):
            pass  # unreadable entry: recompute and overwrite
    rows = compute_rows(spec, beta)
    try:
        atomic_write(path, json.dumps({"spec": spec.label(), "rows": rows}, sort_keys=True))
    except OSError as err:
        raise CacheError(f"cannot write cache entry {path}: {err}") from None
    return rows, False


# -- rendering ---------------------------------------------------------------------------


def render_rows(rows: list[dict], fmt: str, spec: ExpressionSpec) -> str:
    if fmt == "json":
        doc = {"spec": spec.label(), "rows": [{k: r[k] for k in ("word", "window", "length", "polynomial")} for r in rows]}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["word", "window", "length", "polynomial"])
        for r in rows:
            writer.writerow([r["word"], r["window"], r["length"], r["polynomial"]])
        return buf.getvalue()
    width = max((len(r["word"] or "id") for r in rows), default=2)
    lines = [f"# {spec.label()}"]
    for r in rows:
        lines.append(f"{(r['word'] or 'id').ljust(width)}  [{r['window']}]  {r['polynomial']}")
    return "\n".join(lines) + "\n"


def _emit(text: str, output: str | None):
    if output:
        try:
            atomic_write(Path(output), text)
        except OSError as err:
            raise CacheError(f"cannot write {output}: {err}") from None
    else:
        sys.stdout.write(text)


# -- commands ------------------------------------------------------------------------------


def cmd_table(args) -> int:
    spec = _spec(args)
    directory = None if args.no_cache else cache_dir(args.cache_dir)
    rows, _ = cached_rows(spec, args.beta, directory)
    if args.max_length is not None:
        rows = [r for r in rows if r["length"] <= args.max_length]
    _emit(render_rows(rows, args.format, spec), args.output)
    return EXIT_OK


def _parse_value(text: str):
    try:
        return int(text)
    except ValueError:
        return {"none": None, "true": True, "false": False}.get(text.lower(), text)


def cmd_verify(args) -> int:
    params = {}
    if args.type:
        params["type"] = args.type.upper()
    if args.rank is not None:
        params["n"] = args.rank
    for item in args.param or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--param expects key=value, got {item!r}")
        params[key] = _parse_value(value)
    if args.all:
        reports = verify.run_all(params)
    elif args.suite:
        reports = []
        for sid in args.suite:
            try:
                reports.append(verify.run_suite(sid, params))
            except verify.VerifyError as err:
                raise UsageError(str(err)) from None
    else:
        raise UsageError("pass --all or --suite")
    lines = "".join(r.to_json() + "\n" for r in reports)
    if args.output:
        _emit(lines, args.output)
    if args.format == "json":
        sys.stdout.write(lines)
    else:
        sys.stdout.write(verify.summary_table(reports) + "\n")
        for r in reports:
            if r.status == "fail":
                sys.stdout.write(f"{r.suite_id}: {json.dumps(r.witness, sort_keys=True)}\n")
    return EXIT_FAIL if any(r.status == "fail" for r in reports) else EXIT_OK


def _bindings(args, group: weyl.GroupType) -> dict:
    out = {}
    if args.vanish:
        v = _element(group, args.vanish)
        out.update({f"y{i}": c for i, c in enumerate(minus_w_of_x(v), start=1)})
    if args.beta == "zero":
        out["b"] = 0
    for item in args.set or []:
        name, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--set expects name=polynomial, got {item!r}")
        try:
            out[name.strip()] = poly.parse(value)
        except (PolyError, SyntaxError, ValueError) as err:
            raise UsageError(f"cannot parse {value!r}: {err}") from None
    return out


def _element(group: weyl.GroupType, text: str) -> weyl.GroupElement:
    try:
        return weyl.parse_window(group, text)
    except (weyl.WeylError, ValueError) as err:
        raise UsageError(f"bad element {text!r}: {err}") from None


def cmd_eval(args) -> int:
    spec = _spec(args)
    w = _element(spec.group, args.element)
    coefficient = build(spec).coefficient(w)
    try:
        value = poly.substitute(coefficient, _bindings(args, spec.group))
    except PolyError as err:
        raise UsageError(str(err)) from None
    sys.stdout.write(render(value) + "\n")
    return EXIT_OK


def cmd_export(args) -> int:
    """The expanded expression, coefficient by coefficient, as JSON."""
    spec = _spec(args)
    e = build(spec)
    rows = []
    for w, c in e.terms():
        if args.max_length is not None and w.length > args.max_length:
            continue
        if args.beta == "zero":
            c = Frac.coerce(poly.substitute(c, {"b": 0}))
        rows.append(_row(w, c))
    rows.sort(key=lambda r: (r["length"], r["window"]))
    doc = {"spec": spec.label(), "algebra": str(e.kind), "version": __version__, "terms": rows}
    _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.output)
    return EXIT_OK


# -- argument parsing -------------------------------------------------------------------------


def _add_expression_args(p: argparse.ArgumentParser, required: bool = True):
    p.add_argument("--type", required=required, choices=["A", "B", "C", "D", "a", "b", "c", "d"])
    p.add_argument("--rank", type=int, required=required)
    p.add_argument("--flavor", default="schubert", choices=["schubert", "grothendieck"])
    p.add_argument("--kind", default="first", choices=["first", "second", "third"])
    p.add_argument("--arity", default="single", choices=["single", "double", "triple"])
    p.add_argument("--m", type=int, default=None, help="number of z variables (triple only)")
    p.add_argument("--beta", default="keep", choices=["keep", "zero"])
    p.add_argument("--force", action="store_true", help=f"allow groups with more than {ROW_LIMIT} elements")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="classical-schubert", description=__doc__.split("\n\n")[1].strip())
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="polynomial family as a table")
    _add_expression_args(p)
    p.add_argument("--format", default="text", choices=["text", "json", "csv"])
    p.add_argument("--output")
    p.add_argument("--cache-dir")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--max-length", type=int)
    p.set_defaults(run=cmd_table)

    p = sub.add_parser("verify", help="run identity suites")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--all", action="store_true")
    g.add_argument("--suite", action="append")
    p.add_argument("--type", choices=["A", "B", "C", "D", "a", "b", "c", "d"])
    p.add_argument("--rank", type=int)
    p.add_argument("--param", action="append", help="extra suite parameter key=value")
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.add_argument("--output", help="write the JSON-lines report here")
    p.add_argument("--list", action="store_true", help="list suite ids and exit")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("eval", help="one coefficient after substitution")
    _add_expression_args(p)
    p.add_argument("--element", required=True, help="window, e.g. -1,2")
    p.add_argument("--vanish", help="specialize Y = -v(X) for this window v")
    p.add_argument("--set", action="append", help="substitution name=polynomial")
    p.set_defaults(run=cmd_eval)

    p = sub.add_parser("export", help="expanded expression as JSON")
    _add_expression_args(p)
    p.add_argument("--output")
    p.add_argument("--max-length", type=int)
    p.set_defaults(run=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command == "verify" and args.list:
        sys.stdout.write("\n".join(f"{s}  {verify.SUITES[s].citation}" for s in verify.catalog()) + "\n")
        return EXIT_OK
    try:
        return args.run(args)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (coxalg.SqrtError, DecompositionError) as err:
        # the requested family does not exist over the coefficient ring
        print(f"error: {err}", file=sys.stderr)
        return EXIT_FAIL
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
