#!/usr/bin/env python3
"""Run every scan config under scan_configs/ and summarise the findings.

Each config is a seeded region scan; reports are written as JSON next to
an output directory, one per config, plus a one-line summary on stdout.
The t310_gap_probe config is expected to produce soundness alarms; the
others should stay quiet.
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

from ikmix import ScanConfig, run_scan

DEFAULT_CONFIG_DIR = Path(__file__).resolve().parent / "scan_configs"


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--configs", default=str(DEFAULT_CONFIG_DIR),
                        metavar="DIR")
    parser.add_argument("--outdir", default="scan_reports", metavar="DIR")
    args = parser.parse_args(argv)

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    total_alarms = 0
    for path in sorted(Path(args.configs).glob("*.json")):
        config = ScanConfig.from_file(path)
        report = run_scan(config)
        out = outdir / f"{path.stem}_report.json"
        out.write_text(json.dumps(report.to_dict(), indent=2) + "\n")
        counts = " ".join(f"{k}={v}" for k, v in report.counts.items() if v)
        print(f"{path.stem:<24} {config.theorem:<6} {counts} -> {out}")
        for finding in report.soundness_alarms[:3]:
            print(f"{'':<24} alarm at draw {finding.index}: "
                  f"params={finding.params} witness={finding.witness}")
        total_alarms += report.alarm_count
    if total_alarms:
        print(f"total soundness alarms: {total_alarms}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
