"""Batch width computation over files of named Gauss codes.

Input format: one ``name<TAB>gauss_code`` per line; blank lines and lines
starting with ``#`` are skipped.  Output is a CSV with one row per input
row carrying the numeric results plus a base64 width certificate (the
event log, self-contained via its embedded gauss header), and a trailing
status/error pair.  Rows that fail to parse or compute are recorded and
never abort the batch; I/O problems do abort.

Row computations are independent, so the pool fans rows out to worker
processes and the writer emits them back in input order.  All result
columns are deterministic for a fixed input and options; only the ``ms``
timing column varies between runs.
"""

from __future__ import annotations

import csv
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .coloring import attached_sequence, log_from_base64, replay_and_verify
from .errors import CensusError, CertificateError, WirtwidthError
from .gauss import parse_gauss, build_diagram
from .lift import build_profile, sweep_width
from .search import (
    DEFAULT_HEURISTIC_BUDGET,
    DEFAULT_NODE_BUDGET,
    DEFAULT_SEED_TARGET,
    compute_width,
)

CSV_COLUMNS = [
    "name",
    "crossings",
    "strands",
    "mu_upper",
    "mu_exact",
    "width_upper",
    "width_exact",
    "seeds_used",
    "nodes",
    "ms",
    "witness",
    "status",
    "error",
]

STATUS_EXACT = "exact"
STATUS_HEURISTIC = "heuristic"
STATUS_ERROR = "error"


@dataclass(frozen=True)
class CensusRecord:
    name: str
    code_text: str
    status: str
    row: dict


@dataclass(frozen=True)
class CensusSummary:
    total: int
    by_status: dict
    by_width: dict

    def format(self) -> str:
        lines = [f"rows: {self.total}"]
        for status in (STATUS_EXACT, STATUS_HEURISTIC, STATUS_ERROR):
            if self.by_status.get(status):
                lines.append(f"  {status}: {self.by_status[status]}")
        for width in sorted(self.by_width):
            lines.append(f"  width {width}: {self.by_width[width]}")
        return "\n".join(lines)


def read_census_input(path) -> list[tuple[str, str]]:
    rows = []
    try:
        with open(path, encoding="utf-8") as handle:
            for lineno, raw in enumerate(handle, start=1):
                line = raw.rstrip("\n")
                if not line.strip() or line.lstrip().startswith("#"):
                    continue
                name, sep, code = line.partition("\t")
                if not sep:
                    rows.append((f"line{lineno}", f"\x00malformed\x00{line}"))
                    continue
                rows.append((name.strip(), code.strip()))
    except OSError as exc:
        raise CensusError(f"cannot read {path}: {exc}") from exc
    return rows


def compute_row(args) -> CensusRecord:
    name, code_text, options = args
    base = {col: "" for col in CSV_COLUMNS}
    base["name"] = name
    if code_text.startswith("\x00malformed\x00"):
        base["status"] = STATUS_ERROR
        base["error"] = "MalformedRow: expected name<TAB>gauss_code"
        return CensusRecord(name, "", STATUS_ERROR, base)
    try:
        code = parse_gauss(code_text)
        diagram = build_diagram(code)
        report = compute_width(
            diagram,
            strategy=options["strategy"],
            node_budget=options["node_budget"],
            seeds=options["seeds"],
            heuristic_budget=options["heuristic_budget"],
            gauss_text=code.serialize(),
        )
    except WirtwidthError as exc:
        base["status"] = STATUS_ERROR
        base["error"] = f"{type(exc).__name__}: {exc}"
        return CensusRecord(name, code_text, STATUS_ERROR, base)
    status = STATUS_EXACT if (report.mu_exact and report.width_exact) else STATUS_HEURISTIC
    base.update(
        crossings=diagram.n_crossings,
        strands=diagram.n_strands,
        mu_upper=report.mu_upper,
        mu_exact=int(report.mu_exact),
        width_upper=report.width_upper,
        width_exact=int(report.width_exact),
        seeds_used=report.seeds_used,
        nodes=report.nodes_explored,
        ms=round(report.elapsed * 1000.0, 3),
        witness=report.witness.to_base64(),
        status=status,
    )
    return CensusRecord(name, code_text, status, base)


def run_census(
    input_path,
    output_path,
    strategy: str = "auto",
    node_budget: int = DEFAULT_NODE_BUDGET,
    seeds: int = DEFAULT_SEED_TARGET,
    heuristic_budget: int = DEFAULT_HEURISTIC_BUDGET,
    workers: int = 1,
    json_mirror: bool = False,
) -> CensusSummary:
    """Compute every row of ``input_path`` and write the CSV to ``output_path``.

    Returns the status/width summary.  With ``json_mirror`` the same rows
    are also written to ``<output_path>.json``.
    """
    rows = read_census_input(input_path)
    options = {
        "strategy": strategy,
        "node_budget": node_budget,
        "seeds": seeds,
        "heuristic_budget": heuristic_budget,
    }
    jobs = [(name, code, options) for name, code in rows]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(compute_row, jobs, chunksize=8))
    else:
        records = [compute_row(job) for job in jobs]

    by_status: dict = {}
    by_width: dict = {}
    try:
        with open(output_path, "w", newline="", encoding="utf-8") as handle:
            writer = csv.DictWriter(handle, fieldnames=CSV_COLUMNS)
            writer.writeheader()
            for record in records:
                writer.writerow(record.row)
                by_status[record.status] = by_status.get(record.status, 0) + 1
                if record.row["width_upper"] != "":
                    w = record.row["width_upper"]
                    by_width[w] = by_width.get(w, 0) + 1
        if json_mirror:
            with open(f"{output_path}.json", "w", encoding="utf-8") as handle:
                json.dump([r.row for r in records], handle, indent=1)
    except OSError as exc:
        raise CensusError(f"cannot write {output_path}: {exc}") from exc
    return CensusSummary(total=len(records), by_status=by_status, by_width=by_width)


def verify_certificates(results_path) -> list[tuple[str, bool, str]]:
    """Re-verify every certificate in a census CSV.

    Per row: the witness replays legally, its attached total equals the
    recorded width, and the independent profile sweep agrees.  Returns
    (name, ok, detail) per row; error rows carry no certificate and are
    reported as skipped-ok.
    """
    results = []
    try:
        with open(results_path, newline="", encoding="utf-8") as handle:
            reader = csv.DictReader(handle)
            rows = list(reader)
    except OSError as exc:
        raise CensusError(f"cannot read {results_path}: {exc}") from exc

    for row in rows:
        name = row.get("name", "?")
        if row.get("status") == STATUS_ERROR:
            results.append((name, True, "error row, no certificate"))
            continue
        try:
            log = log_from_base64(row["witness"])
            replay_and_verify(log)
            total = attached_sequence(log).total
            width = int(row["width_upper"])
            if total != width:
                raise CertificateError(
                    f"witness total {total} != recorded width {width}"
                )
            swept = sweep_width(build_profile(log))
            if swept != total:
                raise CertificateError(
                    f"profile sweep {swept} != witness total {total}"
                )
            if int(row["seeds_used"]) != len(log.seed_strands()):
                raise CertificateError("seeds_used does not match the witness")
            if int(row["crossings"]) != log.diagram.n_crossings:
                raise CertificateError("crossings column does not match the witness")
            results.append((name, True, f"width {width} certified"))
        except (WirtwidthError, KeyError, ValueError) as exc:
            results.append((name, False, f"{type(exc).__name__}: {exc}"))
    return results
