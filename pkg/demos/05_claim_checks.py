#!/usr/bin/env python3
"""Run the full claim-check registry and print the report table.

Equivalent to `cubecodes verify --claim all` with per-claim defaults.
"""

import json
import time

from cubecodes import run_all


def main():
    started = time.monotonic()
    for report in run_all():
        flag = {"pass": "ok ", "fail": "FAIL", "skipped": "skip"}[report.verdict]
        print(f"[{flag}] {report.claim:<18} params={json.dumps(report.params)}")
        if report.verdict != "pass":
            print(f"        evidence={json.dumps(report.evidence)}")
    print(f"total {time.monotonic() - started:.1f}s")


if __name__ == "__main__":
    main()
