"""Wall clock of the char-not-p check against the number of worker processes.

    python3 scripts/jobs_scaling.py --q 13 --max-jobs 4
"""

import argparse
import json
import os
import time
from dataclasses import asdict, dataclass

from simptoric.family import FamilyParams
from simptoric.verify import check_prop2


@dataclass
class Config:
    q: int = 13
    max_jobs: int = 4
    repeats: int = 1
    out: str = ""


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f, default in asdict(Config()).items():
        ap.add_argument(f"--{f.replace('_', '-')}", dest=f, type=type(default), default=default)
    cfg = Config(**vars(ap.parse_args()))
    params = FamilyParams(3, 3, 1, 2, 1, (0,), (1,))
    rows, base, ref = [], None, None
    for jobs in range(1, cfg.max_jobs + 1):
        best = None
        for _ in range(cfg.repeats):
            t0 = time.perf_counter()
            rep = check_prop2(params, cfg.q, jobs=jobs)
            best = min(best or 1e99, time.perf_counter() - t0)
        data = {k: v for k, v in rep.data.items()}
        ref = ref or data
        assert data == ref, "parallel run changed the result"
        base = base or best
        rows.append({"jobs": jobs, "seconds": best, "speedup": base / best, "passed": rep.passed})
        print(f"jobs={jobs}  {best:7.2f}s  speedup {base / best:4.2f}  {'PASS' if rep.passed else 'FAIL'}")
    print(f"(cpu count: {os.cpu_count()}; speedup is bounded by the available cores)")
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump({"config": asdict(cfg), "cpus": os.cpu_count(), "rows": rows}, fh, indent=2)


if __name__ == "__main__":
    main()
