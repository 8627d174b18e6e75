"""Run the acceptance report and write it next to the other build artifacts."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from dotenv import load_dotenv

from mahlerkit.cli import CRITERIA, render, run_report
from mahlerkit.config import RunConfig


def parse_args() -> argparse.Namespace:
    parser = argparse.ArgumentParser(description="Run the mahlerkit acceptance criteria")
    parser.add_argument("--output", default="artifacts/report.json", help="Where to write the report")
    parser.add_argument("--seed", type=int, help="Corpus seed")
    parser.add_argument("--workers", type=int, help="Thread-pool size")
    parser.add_argument("--timings", action="store_true", help="Record wall-clock time per criterion")
    parser.add_argument(
        "--only",
        action="append",
        choices=[c[0] for c in CRITERIA],
        help="Run only the named criterion (repeatable)",
    )
    return parser.parse_args()


def main() -> int:
    load_dotenv(override=True)
    logging.basicConfig(level=os.getenv("LOG_LEVEL", "INFO").upper(), stream=sys.stderr)
    args = parse_args()

    config = RunConfig().with_overrides(seed=args.seed, workers=args.workers, timings=args.timings or None)
    document = run_report(config, only=args.only)

    output = Path(args.output)
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(json.dumps(document, sort_keys=True, indent=2) + "\n", encoding="utf-8")

    print(render({c["id"]: "pass" if c["passed"] else f"FAIL {c['detail']}" for c in document["criteria"]}, "text"), end="")
    print(f"Report written to {output}")
    return 0 if document["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
