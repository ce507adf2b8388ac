#!/usr/bin/env python3
"""Download and normalize the benchmark datasets into data/*.csv.

Needs outbound network access to archive.ics.uci.edu. Each output file gets
a header row, numeric feature columns, and the class label as the last
column, which is the layout the acceptance runner expects.

Usage: python3 tools/fetch_uci_data.py [data_dir]
"""

import csv
import io
import sys
import urllib.request
import zipfile
from pathlib import Path

UCI = "https://archive.ics.uci.edu/ml/machine-learning-databases"


def fetch(url: str) -> bytes:
    print(f"  GET {url}")
    with urllib.request.urlopen(url, timeout=60) as r:
        return r.read()


def write_csv(path: Path, rows, n_features: int) -> None:
    with path.open("w", newline="") as f:
        w = csv.writer(f)
        w.writerow([f"f{i}" for i in range(n_features)] + ["label"])
        for row in rows:
            w.writerow(row)
    print(f"  wrote {path} ({len(rows)} rows)")


def ecoli(data_dir: Path) -> None:
    raw = fetch(f"{UCI}/ecoli/ecoli.data").decode()
    rows = []
    for line in raw.splitlines():
        parts = line.split()
        if len(parts) == 9:
            rows.append(parts[1:8] + [parts[8]])  # drop the sequence name
    write_csv(data_dir / "ecoli.csv", rows, 7)


def synthetic_control(data_dir: Path) -> None:
    raw = fetch(
        f"{UCI}/synthetic_control-mld/synthetic_control.data"
    ).decode()
    classes = ["normal", "cyclic", "increasing", "decreasing", "upward", "downward"]
    rows = []
    for i, line in enumerate(l for l in raw.splitlines() if l.strip()):
        rows.append(line.split() + [classes[i // 100]])
    write_csv(data_dir / "synthetic_control.csv", rows, 60)


def vehicle(data_dir: Path) -> None:
    rows = []
    for part in "abcdefghi":
        raw = fetch(f"{UCI}/statlog/vehicle/xa{part}.dat").decode()
        for line in raw.splitlines():
            parts = line.split()
            if len(parts) == 19:
                rows.append(parts)
    write_csv(data_dir / "vehicle.csv", rows, 18)


def mfeat_fourier(data_dir: Path) -> None:
    raw = fetch(f"{UCI}/mfeat/mfeat-fou").decode()
    rows = []
    for i, line in enumerate(l for l in raw.splitlines() if l.strip()):
        rows.append(line.split() + [str(i // 200)])  # 200 per digit, 0..9
    write_csv(data_dir / "mfeat_fourier.csv", rows, 76)


def segment(data_dir: Path) -> None:
    rows = []
    for name in ("segmentation.data", "segmentation.test"):
        raw = fetch(f"{UCI}/image/{name}").decode()
        for line in raw.splitlines()[5:]:  # skip the 5-line preamble
            parts = line.strip().split(",")
            if len(parts) == 20:
                rows.append(parts[1:] + [parts[0]])
    write_csv(data_dir / "segment.csv", rows, 19)


def main() -> int:
    data_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("data")
    data_dir.mkdir(parents=True, exist_ok=True)
    failures = []
    for job in (ecoli, synthetic_control, vehicle, mfeat_fourier, segment):
        print(f"{job.__name__}:")
        try:
            job(data_dir)
        except Exception as e:  # keep going, report at the end
            print(f"  FAILED: {e}")
            failures.append(job.__name__)
    if failures:
        print(f"failed: {', '.join(failures)}")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
