"""Command-line front end: ``tetraposet {count,enumerate,rankgf,biject,verify,formulas}``.

Every command is batch and deterministic.  Exit codes: 0 pass, 1 mismatch,
2 usage error (bad flags, bad payloads, refused routes).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from . import identities as ids
from .arrays import StaircaseArray, ideal_arrays
from .bijections import (
    Asm,
    DyckPath,
    MonotoneTriangle,
    PlanePartition,
    Tournament,
    asm_to_monotone,
    asm_to_yplus,
    catalan_poset,
    dyck_to_ideal,
    ideal_to_dyck,
    ideal_to_tspp,
    is_totally_symmetric,
    is_tsscpp,
    monotone_to_asm,
    monotone_to_yplus,
    sundquist,
    tournament_to_yplus,
    tspp_to_ideal,
    tsscpp_to_yplus,
    yplus_to_asm,
    yplus_to_monotone,
    yplus_to_tournament,
    yplus_to_tsscpp,
)
from .ideals import OrderIdeal, count_ideals, count_ideals_fast, enumerate_ideals, is_down_closed, rank_gf
from .poset import ColoredPoset, ColorSet, admissible_sets, build_tetra, classify, dual, is_admissible, restrict, truncate_trapezoid
from .verify import SUITES, run_suite


class UsageError(Exception):
    """Bad input; reported on stderr with exit code 2."""


@dataclass
class Output:
    """What a command produced: JSON records, matching text lines and an exit code."""

    records: Iterable[dict]
    text: Callable[[dict], str]
    fields: list[str] = field(default_factory=list)
    code: int = 0


def _compact(v) -> str:
    return json.dumps(v, separators=(",", ":"))


def _write(out: Output, fmt: str, stream) -> None:
    if fmt == "json":
        for r in out.records:
            stream.write(_compact(r) + "\n")
    elif fmt == "text":
        for r in out.records:
            stream.write(out.text(r) + "\n")
    else:
        writer = None
        for r in out.records:
            if writer is None:
                writer = csv.DictWriter(stream, fieldnames=out.fields or list(r), extrasaction="ignore", lineterminator="\n")
                writer.writeheader()
            writer.writerow({k: v if isinstance(v, (int, str)) and not isinstance(v, bool) else _compact(v) for k, v in r.items()})


# poset construction shared by count / enumerate / rankgf

def _colors(text: str) -> ColorSet:
    try:
        return ColorSet.parse(text)
    except ValueError as e:
        raise UsageError(f"--colors: {e}; use letters from 'rbgoys'") from None


def _poset(args) -> ColoredPoset:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    p = build_tetra(args.n)
    if args.trapezoid is not None:
        if not 0 <= args.trapezoid < args.n:
            raise UsageError(f"--trapezoid must satisfy 0 <= K < n, got K={args.trapezoid}, n={args.n}")
        p = truncate_trapezoid(p, args.trapezoid)
    p = restrict(p, _colors(args.colors))
    return dual(p) if args.dual else p


def _echo(args) -> dict:
    s = _colors(args.colors)
    return {"n": args.n, "colors": str(s), "trapezoid": args.trapezoid, "dual": args.dual, "admissible": is_admissible(s)}


def cmd_count(args) -> Output:
    p = _poset(args)
    rec = {"command": "count", **_echo(args), "elements": len(p)}
    if args.q:
        gf = rank_gf(p, "enumerate" if args.engine == "enumerate" else "dp")
        rec["count"] = gf(1)
        rec["rank_gf"] = gf.to_json()
        text = lambda r: " ".join(map(str, r["rank_gf"]))
    else:
        rec["count"] = count_ideals(p) if args.engine == "enumerate" else count_ideals_fast(p)
        text = lambda r: str(r["count"])
    return Output([rec], text, list(rec))


def cmd_rankgf(args) -> Output:
    p = _poset(args)
    gf = rank_gf(p, "enumerate" if args.engine == "enumerate" else "dp")
    rec = {"command": "rankgf", **_echo(args), "rank_gf": gf.to_json()}
    return Output([rec], lambda r: " ".join(map(str, r["rank_gf"])), list(rec))


def cmd_enumerate(args) -> Output:
    p = _poset(args)
    if args.emit == "arrays":
        if args.trapezoid is not None or args.dual:
            raise UsageError("--emit arrays needs the full, undualized tetrahedral poset")
        s = _colors(args.colors)
        if "g" not in s:
            raise UsageError("--emit arrays needs green in --colors")
        records: Iterator[dict] = (a.to_json() for a in ideal_arrays(args.n, s, args.variant))
        text = lambda r: str(StaircaseArray.from_json(r))
        fields = ["n", "variant", "rows"]
    elif args.emit == "coords":
        records = ({"bits": i.hex(), "size": i.size, "elements": [list(c) for c in i.coords(p)]} for i in enumerate_ideals(p))
        text = lambda r: " ".join("(%d,%d,%d)" % tuple(c) for c in r["elements"]) or "()"
        fields = ["bits", "size", "elements"]
    else:
        records = (i.to_json() for i in enumerate_ideals(p))
        text = lambda r: f"{r['bits']} {r['size']}"
        fields = ["bits", "size"]
    if args.limit is not None:
        records = (r for r, _ in zip(records, range(args.limit)))
    return Output(records, text, fields)


def _formula_row(s: ColorSet, n: int) -> dict:
    cls = classify(s)
    p = restrict(build_tetra(n), s)
    rec = {"colors": str(s), "n": n, "class": cls, "count": count_ideals_fast(p)}
    try:
        rec["formula_count"] = ids.count_formula(s, n)
    except ids.NoKnownFormula:
        rec["formula_count"] = None
    try:
        f = ids.rank_gf_formula(s, n)
    except ids.NoKnownFormula:
        f = None
    if f is not None:
        dual_side = ids.formula_is_dual(s)
        rec["dual"] = dual_side
        rec["rank_gf"] = rank_gf(dual(p) if dual_side else p).to_json()
        rec["formula_rank_gf"] = f.to_json()
    checks = [rec["formula_count"] is None or rec["formula_count"] == rec["count"]]
    if f is not None:
        checks.append(rec["rank_gf"] == rec["formula_rank_gf"])
    rec["pass"] = all(checks)
    return rec


def cmd_formulas(args) -> Output:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    if args.colors is None:
        sets = admissible_sets()
    else:
        s = _colors(args.colors)
        if not is_admissible(s):
            raise UsageError(f"{{{s}}} is not admissible; formula classes are defined only for admissible sets")
        sets = [s]
    rows = [_formula_row(s, args.n) for s in sets]

    def text(r):
        f = "-" if r["formula_count"] is None else r["formula_count"]
        return f"{r['colors'] or '{}':6} {r['class']:18} count={r['count']} formula={f} {'ok' if r['pass'] else 'MISMATCH'}"

    fields = ["colors", "n", "class", "count", "formula_count", "dual", "rank_gf", "formula_rank_gf", "pass"]
    return Output(rows, text, fields, 0 if all(r["pass"] for r in rows) else 1)


def cmd_verify(args) -> Output:
    if args.n_max < 1:
        raise UsageError("--n-max must be at least 1")
    cert = run_suite(args.suite, args.n_max, args.jobs)
    data = cert.to_json()
    if args.no_timing:
        data.pop("wall_time")

    def mark(c):
        word = "PASS" if c["pass"] else "FAIL"
        return f"{word} (observation)" if c.get("observation") else word

    def text(r):
        lines = [f"{mark(c)} {c['check']} {_compact(c['params'])}" for c in r["checks"]]
        status = "pass" if r["pass"] else f"FAIL, first failure {_compact(r['first_failure'])}"
        lines.append(f"suite {args.suite} n_max={r['inputs']['n_max']}: {r['num_checks']} checks, {status}")
        return "\n".join(lines)

    return Output([data], text, list(data), 0 if cert.passed else 1)


# biject

OBJECTS = ("asm", "monotone", "yplus", "tsscpp", "tspp", "ideal", "dyck", "tournament", "ssyt", "tableau")
ALIASES = {"triangle": "monotone", "tournament-tableau": "tableau", "array": "yplus"}


def _rows(payload) -> tuple[tuple[int, ...], ...]:
    if isinstance(payload, dict):
        payload = payload.get("rows", payload.get("entries"))
    if not isinstance(payload, list) or not all(isinstance(r, list) for r in payload):
        raise UsageError("expected a list of integer rows")
    return tuple(tuple(r) for r in payload)


def _load_yplus(payload) -> StaircaseArray:
    if isinstance(payload, dict) and payload.get("variant", "Yplus") != "Yplus":
        raise UsageError("array payload must be a Yplus array")
    return StaircaseArray.from_rows(_rows(payload), "Yplus")


def _load_pp(payload, kind: str) -> PlanePartition:
    if isinstance(payload, dict):
        heights = _rows(payload.get("heights"))
        box = tuple(payload.get("box", (len(heights),) * 3))
    else:
        heights = _rows(payload)
        box = (len(heights),) * 3
    pp = PlanePartition(box, heights)
    if kind == "tsscpp" and not is_tsscpp(pp):
        raise UsageError("plane partition is not a TSSCPP")
    if kind == "tspp" and not is_totally_symmetric(pp):
        raise UsageError("plane partition is not totally symmetric")
    return pp


def _ideal_poset(target: str, n: int) -> ColoredPoset:
    return catalan_poset(n) if target == "dyck" else build_tetra(n)


def _load_ideal(payload, target: str) -> tuple[OrderIdeal, ColoredPoset]:
    if not isinstance(payload, dict) or "n" not in payload:
        raise UsageError('ideal payload must be an object with "n" and "bits" or "elements"')
    p = _ideal_poset(target, int(payload["n"]))
    if "elements" in payload:
        try:
            ideal = OrderIdeal.from_coords((tuple(c) for c in payload["elements"]), p)
        except KeyError as e:
            raise UsageError(f"element {list(e.args[0])} is not in the poset") from None
    elif "bits" in payload:
        mask = int(payload["bits"], 16)
        if mask >> len(p):
            raise UsageError("bits name elements outside the poset")
        ideal = OrderIdeal(mask, len(p))
    else:
        raise UsageError('ideal payload needs "bits" or "elements"')
    if not is_down_closed(ideal.mask, p):
        raise UsageError("element set is not an order ideal")
    return ideal, p


def _ideal_json(ideal: OrderIdeal, p: ColoredPoset, poset_name: str) -> dict:
    return {"poset": poset_name, "n": p.n, **ideal.to_json(), "elements": [list(c) for c in ideal.coords(p)]}


def _load(kind: str, payload, target: str):
    if kind == "asm":
        return Asm(_rows(payload))
    if kind == "monotone":
        return MonotoneTriangle(_rows(payload))
    if kind == "yplus":
        return _load_yplus(payload)
    if kind in ("tsscpp", "tspp"):
        return _load_pp(payload, kind)
    if kind == "ideal":
        return _load_ideal(payload, target)
    if kind == "dyck":
        if isinstance(payload, dict):
            payload = payload.get("steps")
        if not isinstance(payload, str):
            raise UsageError("dyck payload must be a U/D string")
        return DyckPath(payload)
    if kind == "tournament":
        if not isinstance(payload, dict) or "n" not in payload:
            raise UsageError('tournament payload must be {"n": N, "upsets": [[i, j], ...]}')
        return Tournament.from_json(int(payload["n"]), payload.get("upsets", []))
    if kind == "ssyt":
        return _rows(payload)
    raise UsageError(f"cannot read a {kind} payload")


def _pp_json(pp: PlanePartition) -> dict:
    return pp.to_json()


ROUTES: dict[tuple[str, str], Callable] = {
    ("asm", "monotone"): lambda a: asm_to_monotone(a).to_json(),
    ("monotone", "asm"): lambda m: monotone_to_asm(m).to_json(),
    ("monotone", "yplus"): lambda m: monotone_to_yplus(m).to_json(),
    ("yplus", "monotone"): lambda a: yplus_to_monotone(a).to_json(),
    ("asm", "yplus"): lambda a: asm_to_yplus(a).to_json(),
    ("yplus", "asm"): lambda a: yplus_to_asm(a).to_json(),
    ("tsscpp", "yplus"): lambda pp: tsscpp_to_yplus(pp).to_json(),
    ("yplus", "tsscpp"): lambda a: _pp_json(yplus_to_tsscpp(a)),
    ("tspp", "ideal"): lambda pp: _ideal_json(tspp_to_ideal(pp), build_tetra(pp.box[0] + 1), "tetra"),
    ("ideal", "tspp"): lambda ip: _pp_json(ideal_to_tspp(*ip)),
    ("dyck", "ideal"): lambda d: _ideal_json(dyck_to_ideal(d), catalan_poset(d.n), "catalan"),
    ("ideal", "dyck"): lambda ip: {"steps": str(ideal_to_dyck(*ip)), "area": ip[0].size},
    ("tournament", "yplus"): lambda t: tournament_to_yplus(t).to_json(),
    ("yplus", "tournament"): lambda a: {"n": a.n, "upsets": yplus_to_tournament(a).to_json()},
    ("ssyt", "tableau"): lambda rows: _tableau_json(rows),
    ("ssyt", "tournament"): lambda rows: {"n": len(rows) + 1, "upsets": sundquist(rows).tournament().to_json()},
}


def _tableau_json(rows) -> dict:
    t = sundquist(rows)
    return {"rows": t.to_json(), "upsets": t.tournament().to_json()}


def _text_of(r) -> str:
    if isinstance(r, dict) and r.get("variant") == "Yplus":
        return str(StaircaseArray.from_json(r))
    if isinstance(r, dict) and "steps" in r:
        return r["steps"]
    return _compact(r)


def cmd_biject(args) -> Output:
    src = ALIASES.get(args.source, args.source)
    dst = ALIASES.get(args.target, args.target)
    if {src, dst} == {"asm", "tsscpp"}:
        raise UsageError("no asm <-> tsscpp bijection is known (open problem)")
    if (src, dst) not in ROUTES:
        legal = ", ".join(f"{a}->{b}" for a, b in ROUTES)
        raise UsageError(f"unsupported route {src}->{dst}; legal routes: {legal}")
    if args.payload is not None:
        raw = args.payload
    elif args.input == "-" or args.input is None:
        raw = sys.stdin.read()
    else:
        with open(args.input, encoding="utf-8") as fh:
            raw = fh.read()
    try:
        payload = json.loads(raw)
    except json.JSONDecodeError:
        if src != "dyck":
            raise UsageError("payload is not valid JSON") from None
        payload = raw.strip()
    try:
        obj = _load(src, payload, dst)
        result = ROUTES[src, dst](obj)
    except (ValueError, TypeError) as e:
        raise UsageError(f"invalid {src} payload: {e}") from None
    return Output([result], _text_of, ["value"] if not isinstance(result, dict) else list(result))


# argument parsing

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tetraposet", description="Order ideals of colored tetrahedral posets.")
    io_flags = argparse.ArgumentParser(add_help=False)
    io_flags.add_argument("--format", choices=("json", "csv", "text"), help="default: json for verify and biject, text otherwise")
    io_flags.add_argument("--out", metavar="PATH", help="write to PATH instead of stdout")

    poset_flags = argparse.ArgumentParser(add_help=False)
    poset_flags.add_argument("--n", type=int, required=True)
    poset_flags.add_argument("--colors", default="rbgoys", help="color letters from 'rbgoys' (default: all six)")
    poset_flags.add_argument("--trapezoid", type=int, metavar="K", help="remove layers P_2..P_{K+1}")
    poset_flags.add_argument("--dual", action="store_true", help="use the dual poset")
    poset_flags.add_argument("--engine", choices=("dp", "enumerate"), default="dp")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[io_flags, poset_flags], help="count order ideals")
    p.add_argument("--q", action="store_true", help="print rank generating function coefficients")
    p.set_defaults(handler=cmd_count)

    p = sub.add_parser("enumerate", parents=[io_flags, poset_flags], help="list order ideals")
    p.add_argument("--emit", choices=("ideals", "coords", "arrays"), default="ideals")
    p.add_argument("--variant", choices=("X", "Y", "Yplus"), default="Yplus")
    p.add_argument("--limit", type=int)
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("rankgf", parents=[io_flags, poset_flags], help="rank generating function")
    p.set_defaults(handler=cmd_rankgf)

    p = sub.add_parser("formulas", parents=[io_flags], help="compare counts with closed forms")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--colors", help="one admissible set; default is every admissible set")
    p.set_defaults(handler=cmd_formulas)

    p = sub.add_parser("verify", parents=[io_flags], help="run a verification suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--no-timing", action="store_true", help="omit wall time for byte-stable output")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("biject", parents=[io_flags], help="convert between objects")
    p.add_argument("--from", dest="source", required=True, choices=OBJECTS + tuple(ALIASES))
    p.add_argument("--to", dest="target", required=True, choices=OBJECTS + tuple(ALIASES))
    src = p.add_mutually_exclusive_group()
    src.add_argument("--payload", help="JSON payload (a bare U/D string is accepted for dyck)")
    src.add_argument("--input", metavar="PATH", help="read the payload from PATH ('-' for stdin)")
    p.set_defaults(handler=cmd_biject)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.handler(args)
        fmt = args.format or ("json" if args.command in ("verify", "biject") else "text")
        buf = io.StringIO()
        _write(out, fmt, buf)
    except UsageError as e:
        print(f"tetraposet {args.command}: error: {e}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return out.code


if __name__ == "__main__":
    sys.exit(main())
