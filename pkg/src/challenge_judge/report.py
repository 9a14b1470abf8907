"""Report serialization: canonical JSON plus derived CSV and LaTeX tables.

report.json is the single source of truth. Every real number is stored at
full precision together with a 4-decimal half-up display string; the CSV
and LaTeX files (and the SVG figures) are views derived from the same
report object, so re-emitting a parsed report is byte-identical.
"""

from __future__ import annotations

import json
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path

import numpy as np

from .errors import IoFailure
from .inference import ConfidenceInterval, DifferenceResult, StarCell, StarMatrix
from .metrics import MetricKind, Score
from .pipeline import ComparisonReport, MetricReport, PairAnalysis


def round4(x: float) -> str:
    """Presentation rounding: half-up to 4 decimals."""
    return str(Decimal(repr(float(x))).quantize(Decimal("0.0001"), rounding=ROUND_HALF_UP))


def round3(x: float) -> str:
    """Half-up to 3 decimals, used by the star-matrix cells."""
    return str(Decimal(repr(float(x))).quantize(Decimal("0.001"), rounding=ROUND_HALF_UP))


def _real(x: float) -> dict:
    return {"value": float(x), "display": round4(x)}


def _ci_dict(ci: ConfidenceInterval) -> dict:
    return {
        "lower": _real(ci.lower),
        "upper": _real(ci.upper),
        "level": ci.level,
        "point": _real(ci.point),
    }


def _ci_from(d: dict) -> ConfidenceInterval:
    return ConfidenceInterval(
        d["lower"]["value"], d["upper"]["value"], d["level"], d["point"]["value"]
    )


def to_dict(r: ComparisonReport) -> dict:
    metrics_block = {}
    for m in r.metrics:
        mr = r.by_metric[m]
        block: dict = {
            "intervals": [
                {"team": team, **_ci_dict(ci)} for team, ci in mr.intervals
            ],
            "differences": [
                {
                    "team_a": d.team_a,
                    "team_b": d.team_b,
                    "delta": _real(d.delta),
                    "mean": _real(d.mean),
                    "ci": _ci_dict(d.ci),
                    "contains_zero": d.contains_zero,
                }
                for d in mr.differences
            ],
        }
        if mr.stars is not None:
            block["star_matrix"] = {
                "teams": list(mr.stars.teams),
                "cells": [
                    {
                        "row": row,
                        "col": col,
                        "delta": _real(cell.delta),
                        "delta_display3": round3(cell.delta),
                        "p": cell.p,
                        "stars": cell.stars,
                    }
                    for (row, col), cell in sorted(mr.stars.cells.items())
                ],
            }
        else:
            block["star_matrix"] = None
        metrics_block[str(m)] = block
    return {
        "config": {
            "b": r.b,
            "seed": r.seed,
            "level": r.level,
            "positive": r.positive,
            "metrics": [str(m) for m in r.metrics],
        },
        "teams": list(r.teams),
        "point_estimates": {
            team: {
                str(m): {**_real(s.value), "defined": s.defined}
                for m, s in by_m.items()
            }
            for team, by_m in r.points.items()
        },
        "degenerate_replicates": {
            team: {str(m): c for m, c in by_m.items()}
            for team, by_m in r.degenerate.items()
        },
        "metrics": metrics_block,
        "pairs": [
            {
                "team_a": p.team_a,
                "team_b": p.team_b,
                "metric": str(p.metric),
                "delta": _real(p.delta),
                "p": p.p,
                "b_exceed": p.b_exceed,
                "diffs": [float(x) for x in p.diffs],
            }
            for p in r.pairs
        ],
    }


def from_dict(d: dict) -> ComparisonReport:
    cfg = d["config"]
    metrics = tuple(MetricKind(m) for m in cfg["metrics"])
    points = {
        team: {MetricKind(m): Score(v["value"], v["defined"]) for m, v in by_m.items()}
        for team, by_m in d["point_estimates"].items()
    }
    degenerate = {
        team: {MetricKind(m): c for m, c in by_m.items()}
        for team, by_m in d["degenerate_replicates"].items()
    }
    by_metric = {}
    for m in metrics:
        block = d["metrics"][str(m)]
        intervals = [(e["team"], _ci_from(e)) for e in block["intervals"]]
        differences = [
            DifferenceResult(
                e["team_a"],
                e["team_b"],
                e["delta"]["value"],
                _ci_from(e["ci"]),
                e["mean"]["value"],
            )
            for e in block["differences"]
        ]
        sm = block["star_matrix"]
        stars = None
        if sm is not None:
            stars = StarMatrix(
                tuple(sm["teams"]),
                {
                    (c["row"], c["col"]): StarCell(c["delta"]["value"], c["p"], c["stars"])
                    for c in sm["cells"]
                },
            )
        by_metric[m] = MetricReport(m, intervals, differences, stars)
    pairs = tuple(
        PairAnalysis(
            p["team_a"],
            p["team_b"],
            MetricKind(p["metric"]),
            p["delta"]["value"],
            p["p"],
            p["b_exceed"],
            np.asarray(p["diffs"], dtype=np.float64),
        )
        for p in d["pairs"]
    )
    return ComparisonReport(
        b=cfg["b"],
        seed=cfg["seed"],
        level=cfg["level"],
        positive=cfg["positive"],
        metrics=metrics,
        teams=tuple(d["teams"]),
        points=points,
        degenerate=degenerate,
        by_metric=by_metric,
        pairs=pairs,
    )


def report_json(r: ComparisonReport) -> str:
    return json.dumps(to_dict(r), indent=2, ensure_ascii=False) + "\n"


def _write(path: Path, text: str) -> None:
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise IoFailure(f"cannot write {path}: {exc}") from exc


def _leaderboard_order(r: ComparisonReport) -> list[str]:
    """Teams ordered by F1 (or the first configured metric) descending."""
    m = MetricKind.F1 if MetricKind.F1 in r.metrics else r.metrics[0]
    return [team for team, _ in r.by_metric[m].intervals]


def _csv_lines(rows: list[list[str]]) -> str:
    return "\n".join(",".join(row) for row in rows) + "\n"


def _tex_table(header: list[str], rows: list[list[str]], note: str | None = None) -> str:
    lines = [
        "\\begin{tabular}{l" + "r" * (len(header) - 1) + "}",
        "\\hline",
        " & ".join(header) + " \\\\",
        "\\hline",
    ]
    for row in rows:
        lines.append(" & ".join(row) + " \\\\")
    lines.append("\\hline")
    lines.append("\\end{tabular}")
    if note:
        lines.append(note)
    return "\n".join(lines) + "\n"


STAR_NOTE = (
    "\\\\ Note: $\\dagger$ $p<.1$, *$p<.05$, **$p<.01$, ***$p<.001$."
    "  % ** denotes $p<.01$ (a widely circulated version of this note"
    " misprints it as $p<.1$, duplicating the dagger threshold)"
)


def emit_tables(r: ComparisonReport, out_dir: str | Path) -> list[Path]:
    """Write report.json plus one CSV and one LaTeX fragment per table."""
    out = Path(out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise IoFailure(f"cannot create {out}: {exc}") from exc
    written: list[Path] = []

    def put(name: str, text: str) -> None:
        path = out / name
        _write(path, text)
        written.append(path)

    put("report.json", report_json(r))

    # table 1: point estimates, leaderboard order
    header = ["team", *(str(m) for m in r.metrics)]
    rows = [
        [team, *(round4(r.points[team][m].value) for m in r.metrics)]
        for team in _leaderboard_order(r)
    ]
    put("table1.csv", _csv_lines([header, *rows]))
    put("table1.tex", _tex_table(["Team", *(str(m) for m in r.metrics)], rows))

    for m in r.metrics:
        mr = r.by_metric[m]
        name = str(m)

        rows = [
            [team, round4(ci.lower), round4(ci.upper), round4(ci.point)]
            for team, ci in mr.intervals
        ]
        put(f"table2_{name}.csv", _csv_lines([["team", "lower", "upper", "point"], *rows]))
        tex_rows = [[t, f"({lo},{hi})"] for t, lo, hi, _ in rows]
        put(f"table2_{name}.tex", _tex_table(["Team", "CI"], tex_rows))

        rows = [
            [d.team_b, round4(d.ci.lower), round4(d.mean), round4(d.ci.upper),
             "true" if d.contains_zero else "false"]
            for d in mr.differences
        ]
        put(
            f"table3_{name}.csv",
            _csv_lines([["team", "ici", "mean", "sci", "contains_zero"], *rows]),
        )
        put(
            f"table3_{name}.tex",
            _tex_table(["Team", "ICI", "Mean", "SCI"], [row[:4] for row in rows]),
        )

        if mr.stars is not None:
            teams = list(mr.stars.teams)
            header = ["", *teams[:-1]]
            rows = []
            for i, row_team in enumerate(teams[1:], start=1):
                cells = []
                for col_team in teams[:-1]:
                    cell = mr.stars.cells.get((row_team, col_team))
                    if cell is None:
                        cells.append("")
                    else:
                        text = round3(cell.delta)
                        if cell.stars:
                            text += f" {cell.stars}"
                        cells.append(text)
                rows.append([row_team, *cells])
            put(f"table4_{name}.csv", _csv_lines([header, *rows]))
            tex_rows = [
                [c.replace("†", "$\\dagger$") for c in row] for row in rows
            ]
            put(
                f"table4_{name}.tex",
                _tex_table(header, tex_rows, note=STAR_NOTE),
            )
        else:
            put(f"table4_{name}.csv", _csv_lines([["team"]]))
            put(f"table4_{name}.tex", _tex_table(["Team"], []))

    return written
