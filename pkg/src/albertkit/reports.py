"""Machine-readable run reports.

Reports are JSON with a stable schema ("albert-kit/1").  Scalars are
rendered as exact strings (fractions or residues), never floats, and the
key order is canonical, so two runs with the same configuration and seed
produce byte-identical output apart from the timestamp field.
"""

from __future__ import annotations

import json
from datetime import datetime, timezone

SCHEMA = "albert-kit/1"


def make_report(command: str, config: dict, checks: list[dict], extra: dict | None = None) -> dict:
    verdict = "PASS" if all(c.get("passed") for c in checks) else "FAIL"
    report = {
        "schema": SCHEMA,
        "command": command,
        "verdict": verdict,
        "config": config,
        "checks": checks,
    }
    if extra:
        report.update(extra)
    report["timestamp"] = datetime.now(timezone.utc).isoformat()
    return report


def render_report(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def strip_timestamp(report: dict) -> dict:
    return {k: v for k, v in report.items() if k != "timestamp"}


def passed(report: dict) -> bool:
    return report.get("verdict") == "PASS"
