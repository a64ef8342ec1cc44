"""Verify the catalog and print a per-entry and per-pair table.

    python3 scripts/run_catalog.py [--workers 2] [--export catalog.json]
"""

import argparse
import time
from dataclasses import dataclass

from gastruct.catalog import export_catalog, verify_catalog


@dataclass
class CatalogRun:
    workers: int = 1
    export: str | None = None
    show_pairs: bool = True


def main(cfg: CatalogRun):
    t = time.perf_counter()
    rep = verify_catalog(workers=cfg.workers)
    for e in rep.entries:
        status = "ok" if e.ok else "FAIL " + (e.error or ",".join(k for k, v in e.checks.items() if not v))
        print(f"{e.label:28s} length={e.length} chi={e.chi} {status}")
    if cfg.show_pairs:
        for p in rep.pairs:
            w = p.witness[0] if isinstance(p.witness, (list, tuple)) and p.witness else p.witness
            print(f"  {p.a} vs {p.b}: {p.verdict} [{w}]")
    print(f"counts: {rep.counts}")
    print(f"{len(rep.failures)} failure(s) in {time.perf_counter() - t:.2f} s")
    for f in rep.failures:
        print("  " + f)
    if cfg.export:
        print(f"exported {export_catalog(cfg.export)} records to {cfg.export}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--export")
    ap.add_argument("--no-pairs", action="store_true")
    a = ap.parse_args()
    main(CatalogRun(a.workers, a.export, not a.no_pairs))
