"""Command-line front end: analyze, reconstruct, validate.

Exit codes: 0 success, 2 configuration/validation failure, 1 internal
error. ``analyze`` writes a run manifest next to its outputs echoing the
result-relevant configuration plus a content hash of the input, so two
runs can be diffed for reproducibility.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path

from . import dataset
from .errors import ChallengeJudgeError, ConfigError
from .metrics import ALL_METRICS, MetricKind
from .pipeline import RunConfig, analyze
from .report import emit_tables
from .svgfig import emit_all_figures

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_VALIDATION = 2


def _parse_metrics(text: str) -> tuple[MetricKind, ...]:
    out = []
    for token in text.split(","):
        token = token.strip().lower()
        try:
            out.append(MetricKind(token))
        except ValueError:
            raise ConfigError(
                f"unknown metric {token!r}; choose from "
                + ",".join(str(m) for m in ALL_METRICS)
            ) from None
    return tuple(out)


def _parse_pairs(text: str) -> tuple[tuple[str, str], ...]:
    pairs = []
    for chunk in text.split(","):
        names = chunk.split(":")
        if len(names) != 2 or not names[0] or not names[1]:
            raise ConfigError(f"bad pair {chunk!r}; expected teamA:teamB")
        pairs.append((names[0], names[1]))
    return tuple(pairs)


def _threads_default() -> int | None:
    env = os.environ.get("CHALLENGE_JUDGE_THREADS")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ConfigError(f"CHALLENGE_JUDGE_THREADS must be an integer, got {env!r}") from None
    return os.cpu_count()


def _merge(args: argparse.Namespace) -> RunConfig:
    """Apply precedence: command-line flag > config file > built-in default."""
    file_cfg = {}
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            file_cfg = json.load(fh)

    def pick(flag, key, default):
        if flag is not None:
            return flag
        if key in file_cfg:
            return file_cfg[key]
        return default

    metrics = pick(args.metrics, "metrics", None)
    if isinstance(metrics, list):
        metrics = tuple(MetricKind(m) for m in metrics)
    elif isinstance(metrics, str):
        metrics = _parse_metrics(metrics)
    elif metrics is None:
        metrics = ALL_METRICS

    pairs = pick(getattr(args, "pairs", None), "pairs", None)
    if isinstance(pairs, list):
        pairs = tuple((p[0], p[1]) for p in pairs)
    elif isinstance(pairs, str):
        pairs = _parse_pairs(pairs)

    input_path = pick(args.input, "input", None)
    out = pick(getattr(args, "out", None), "out", None)
    positive = pick(args.positive, "positive", None)
    if input_path is None:
        raise ConfigError("--input is required")
    if positive is None:
        raise ConfigError("--positive is required")
    threads = pick(getattr(args, "threads", None), "threads", None)
    return RunConfig(
        input=Path(input_path),
        positive=positive,
        b=int(pick(args.b, "b", RunConfig.b)),
        seed=int(pick(args.seed, "seed", RunConfig.seed)),
        level=float(pick(args.level, "level", RunConfig.level)),
        metrics=metrics,
        out=Path(out) if out is not None else None,
        pairs=pairs,
        threads=int(threads) if threads is not None else _threads_default(),
    )


def _manifest(config: RunConfig) -> str:
    digest = hashlib.sha256(Path(config.input).read_bytes()).hexdigest()
    doc = {
        "command": "analyze",
        "input": str(config.input),
        "input_sha256": digest,
        "positive": config.positive,
        "b": config.b,
        "seed": config.seed,
        "level": config.level,
        "metrics": [str(m) for m in config.metrics],
        "pairs": [list(p) for p in config.pairs] if config.pairs is not None else None,
    }
    return json.dumps(doc, indent=2) + "\n"


def cmd_analyze(args: argparse.Namespace) -> int:
    config = _merge(args)
    if config.out is None:
        raise ConfigError("--out is required")
    config.validate()
    ds = dataset.load(config.input, config.positive)
    report = analyze(ds, config)
    config.out.mkdir(parents=True, exist_ok=True)
    (config.out / "manifest.json").write_text(_manifest(config), encoding="utf-8")
    emit_tables(report, config.out)
    emit_all_figures(report, config.out)
    return EXIT_OK


def cmd_validate(args: argparse.Namespace) -> int:
    config = _merge(args)
    dataset.load(config.input, config.positive)
    print(f"{config.input}: OK")
    return EXIT_OK


def cmd_reconstruct(args: argparse.Namespace) -> int:
    spec = dataset.ReconstructionSpec.from_json(args.spec)
    ds = dataset.reconstruct(
        spec, args.seed, positive=args.positive, negative=args.negative
    )
    dataset.write(ds, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="challenge-judge",
        description="Paired-bootstrap comparison of challenge competitors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--input", help="wide CSV: id,gold,<team...>")
        p.add_argument("--positive", help="token of the positive class")
        p.add_argument("--config", help="optional JSON config file; flags override it")
        p.add_argument("--b", type=int, help="bootstrap replicates (default 10000)")
        p.add_argument("--seed", type=int, help="resampling seed (default 42)")
        p.add_argument("--level", type=float, help="CI level (default 0.95)")
        p.add_argument("--metrics", help="comma list of precision,recall,f1")

    p = sub.add_parser("analyze", help="run the full comparison and write reports")
    add_common(p)
    p.add_argument("--out", help="output directory")
    p.add_argument("--threads", type=int, help="worker pool size (default: machine)")
    p.add_argument("--pairs", help="histogram pairs, e.g. teamA:teamB,teamA:teamC")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("validate", help="ingestion checks only; writes nothing")
    add_common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("reconstruct", help="build a synthetic CSV from confusion counts")
    p.add_argument("--spec", required=True, help="JSON reconstruction spec")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--out", required=True, help="output CSV path")
    p.add_argument("--positive", dest="positive", default=dataset.DEFAULT_POSITIVE)
    p.add_argument("--negative", dest="negative", default=dataset.DEFAULT_NEGATIVE)
    p.set_defaults(func=cmd_reconstruct)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ChallengeJudgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except Exception as exc:  # internal failure
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    raise SystemExit(main())
