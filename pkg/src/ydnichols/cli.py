"""Command-line entry point.

Exit status: 0 when every check passes, 1 when a mathematical check fails,
2 for usage or resource errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .double import double_verify
from .hopfcore import PRESETS, InvalidMatchedPair, build_bicrossed_product, load_matched_pair, validate_matched_pair, verify_hopf_axioms
from .nichols import DEFAULT_NMAX, CUTOFF, ResourceLimitError, graded_dims
from .repcat import catalog, catalog_entry, verify_catalog, verify_module
from .report import Report
from .sweep import run_sweep, summary_table, sweep_report
from .ydbraid import braiding_of, diagonal_type, format_q, structure_scalars, table_membership

SCHEMA_VERSION = 1
COMMANDS = ("hopf-verify", "double-verify", "modules-list", "modules-verify", "braidings", "nichols", "sweep")
CATALOG_ALGEBRA = "Hc_sigma0"


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    algebra: str = CATALOG_ALGEBRA
    n_max: int = DEFAULT_NMAX
    fmt: str = "text"
    exhaustive: bool = False
    out: str | None = None
    module: str | None = None
    all_modules: bool = False
    samples: int = 10_000

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.fmt not in ("json", "csv", "text"):
            raise UsageError(f"unknown format {self.fmt!r}")
        if self.algebra not in PRESETS and not Path(self.algebra).is_file():
            raise UsageError(f"unknown algebra {self.algebra!r}; presets: {', '.join(PRESETS)}")
        if self.n_max < 1:
            raise UsageError("--nmax must be at least 1")
        if self.command in ("braidings", "nichols", "sweep") and self.algebra != CATALOG_ALGEBRA:
            raise UsageError(f"{self.command} uses the module catalog, which is specific to {CATALOG_ALGEBRA}")
        if self.command == "nichols" and not (self.module or self.all_modules):
            raise UsageError("nichols needs --module LABEL or --all")


@dataclass
class Output:
    document: dict
    text: str
    csv_rows: list
    passed: bool


def _report_csv(rpt: Report) -> list:
    rows = [("check", "passed", "witness")]
    rows += [(c.name, "1" if c.passed else "0", c.witness or "") for c in rpt.checks]
    return rows


def _hopf(config: RunConfig):
    data = load_matched_pair(config.algebra)
    return data, build_bicrossed_product(data)


def _cmd_hopf_verify(config: RunConfig) -> Output:
    data = load_matched_pair(config.algebra)
    rpt = Report(f"hopf-verify {data.name}")
    rpt.extend(validate_matched_pair(data), "matched pair: ")
    if rpt.passed:
        rpt.extend(verify_hopf_axioms(build_bicrossed_product(data)), "Hopf: ")
    return Output({"report": rpt.to_json()}, str(rpt), _report_csv(rpt), rpt.passed)


def _cmd_double_verify(config: RunConfig) -> Output:
    _, h = _hopf(config)
    d, rpt = double_verify(h, samples=config.samples, exhaustive=config.exhaustive)
    doc = {"report": rpt.to_json(), "double": d.to_json()}
    return Output(doc, str(rpt), _report_csv(rpt), rpt.passed)


def _cmd_modules_list(config: RunConfig) -> Output:
    reps = catalog()
    doc = {"modules": [r.to_json() for r in reps]}
    lines = [f"{r.id:22s} {r.display:22s} dim {r.dim}  {r.family}" for r in reps]
    rows = [("label", "display", "dim", "family")] + [(r.id, r.display, r.dim, r.family) for r in reps]
    return Output(doc, "\n".join(lines), rows, True)


def _cmd_modules_verify(config: RunConfig) -> Output:
    from .double import drinfeld_double

    _, h = _hopf(config)
    d = drinfeld_double(h)
    rpt = verify_catalog(d)
    per = []
    for r in catalog():
        fails = verify_module(r, d).failures()
        per.append({"label": r.id, "passed": not fails, "witness": fails[0].witness if fails else None})
    doc = {"report": rpt.to_json(), "modules": per}
    return Output(doc, str(rpt), _report_csv(rpt), rpt.passed)


def _cmd_braidings(config: RunConfig) -> Output:
    from .ydbraid import coaction_from_action, to_left_left, braiding

    _, h = _hopf(config)
    entries, lines = [], []
    rpt = Report("braidings")
    rows = [("label", "diagonal", "braiding", "table_member")]
    for r in catalog():
        yd_l = to_left_left(coaction_from_action(r, h), h)
        b = braiding(yd_l)
        q = diagonal_type(b)
        ok, desc = table_membership(r, b)
        rpt.add(f"{r.id} inside its table family", ok, desc)
        shape = format_q(q) if q is not None else "(r,p,p',m) = (" + ", ".join(str(s) for s in structure_scalars(b)) + ")"
        entries.append(
            {
                "label": r.id,
                "side": yd_l.side,
                "coaction": yd_l.to_json(h)["coaction"],
                "braiding": b.to_json()["c"],
                "diagonal": q is not None,
                "q": None if q is None else [[str(e) for e in row] for row in q],
                "table_member": ok,
            }
        )
        lines.append(f"{r.id:22s} {'diagonal' if q is not None else 'non-diagonal':13s} {shape}")
        rows.append((r.id, int(q is not None), shape, int(ok)))
    text = "\n".join(lines + ["", str(rpt)])
    return Output({"report": rpt.to_json(), "braidings": entries}, text, rows, rpt.passed)


def _cmd_nichols(config: RunConfig) -> Output:
    _, h = _hopf(config)
    if config.all_modules:
        return _summary_output(run_sweep(h, config.n_max))
    try:
        rep = catalog_entry(config.module)
    except KeyError as exc:
        raise UsageError(str(exc)) from None
    g = graded_dims(braiding_of(rep, h), config.n_max, rep.id)
    total = g.total if g.total is not None else CUTOFF
    lines = [f"{rep.id}: graded dims {[1] + [r for _, r in g.ranks]}  total {total}"]
    rows = [("n", "rank", "cumulative")] + g.csv_rows()
    return Output({"graded": g.to_json()}, "\n".join(lines), rows, True)


def emit_summary(results) -> dict:
    """One row per catalog entry plus the aggregate report."""
    rpt = sweep_report(results)
    return {
        "rows": [r.row() for r in results],
        "report": rpt.to_json(),
        "text": summary_table(results) + [""] + rpt.lines(),
    }


def _summary_output(results) -> Output:
    doc = emit_summary(results)
    text = "\n".join(doc.pop("text"))
    rows = [("label", "dim", "diagonal", "braiding", "graded_dims", "total")]
    for r in doc["rows"]:
        shape = r["q"] if r["diagonal"] else r["rpm"]
        rows.append(
            (r["label"], r["dim"], int(r["diagonal"]), json.dumps(shape), " ".join(map(str, r["graded_dims"])), r["total"])
        )
    return Output(doc, text, rows, doc["report"]["passed"])


def _cmd_sweep(config: RunConfig) -> Output:
    data, h = _hopf(config)
    head = Report(f"sweep {data.name}")
    head.extend(verify_hopf_axioms(h), "Hopf: ")
    d, drep = double_verify(h, samples=min(config.samples, 2000), exhaustive=config.exhaustive)
    head.extend(drep)
    head.extend(verify_catalog(d), "modules: ")
    out = _summary_output(run_sweep(h, config.n_max))
    out.document["checks"] = head.to_json()
    out.text = str(head) + "\n\n" + out.text
    out.passed = out.passed and head.passed
    return out


_HANDLERS = {
    "hopf-verify": _cmd_hopf_verify,
    "double-verify": _cmd_double_verify,
    "modules-list": _cmd_modules_list,
    "modules-verify": _cmd_modules_verify,
    "braidings": _cmd_braidings,
    "nichols": _cmd_nichols,
    "sweep": _cmd_sweep,
}


def render(out: Output, fmt: str, config: RunConfig) -> str:
    if fmt == "json":
        doc = {"schema_version": SCHEMA_VERSION, "command": config.command, "algebra": config.algebra}
        doc.update(out.document)
        return json.dumps(doc, indent=2, sort_keys=True)
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(out.csv_rows)
        return buf.getvalue().rstrip("\n")
    return out.text


def run(config: RunConfig, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        config.validate()
        out = _HANDLERS[config.command](config)
    except (UsageError, ResourceLimitError, InvalidMatchedPair, FileNotFoundError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    body = render(out, config.fmt, config)
    if config.out:
        path = Path(config.out)
        path.mkdir(parents=True, exist_ok=True)
        ext = {"json": "json", "csv": "csv", "text": "txt"}[config.fmt]
        target = path / f"{config.command}.{ext}"
        target.write_text(body + "\n")
        print(f"wrote {target}", file=stdout)
    else:
        print(body, file=stdout)
    return 0 if out.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ydnichols", description=__doc__.splitlines()[0])
    p.add_argument("command", help="one of: " + ", ".join(COMMANDS) + " (also 'double verify', 'modules list')")
    p.add_argument("action", nargs="?", help=argparse.SUPPRESS)
    p.add_argument("--algebra", default=CATALOG_ALGEBRA, help="preset name or matched-pair JSON file")
    p.add_argument("--nmax", type=int, default=DEFAULT_NMAX, help="largest degree for Nichols ranks")
    p.add_argument("--format", dest="fmt", default="text", choices=("json", "csv", "text"))
    p.add_argument("--exhaustive", action="store_true", help="associativity over all basis triples of D(H)")
    p.add_argument("--out", help="write the output into this directory")
    p.add_argument("--module", help="catalog label, e.g. W_x_1_plus_plus")
    p.add_argument("--all", dest="all_modules", action="store_true", help="sweep every catalog entry")
    p.add_argument("--samples", type=int, default=10_000, help="random triples for the associativity check")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    command = args.command if args.action is None else f"{args.command}-{args.action}"
    config = RunConfig(
        command=command,
        algebra=args.algebra,
        n_max=args.nmax,
        fmt=args.fmt,
        exhaustive=args.exhaustive,
        out=args.out,
        module=args.module,
        all_modules=args.all_modules,
        samples=args.samples,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
