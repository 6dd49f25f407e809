"""Run every check on the reference instances and write one JSON report per run.

    python3 scripts/run_instances.py --out results/
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from simptoric.family import FamilyParams, build_system, rank_report
from simptoric.verify import (check_lemma1, check_lemma2, check_prop1, check_prop2, witness_F,
                              witness_pair)


@dataclass
class Config:
    out: str = "results"
    samples: int = 1000
    seed: int = 0
    jobs: int = 1


RUNS = [
    ("char_p_p2", FamilyParams(3, 2, 1, 1, 1, (0,), (1,)), "prop1", {"k_list": [1, 2]}),
    ("char_p_p3l2", FamilyParams(3, 3, 2, 3, 1, (0,), (1,)), "prop1", {"k_list": [1, 2]}),
    ("char_other_q2", FamilyParams(3, 3, 1, 2, 1, (0,), (1,)), "prop2", {"q": 2}),
    ("char_other_q7", FamilyParams(3, 3, 1, 2, 1, (0,), (1,)), "prop2", {"q": 7}),
    ("char_other_n4_q2", FamilyParams(4, 3, 1, 2, 1, (0, 0), (1, 1)), "prop2", {"q": 2}),
    ("witness_n3_q7", FamilyParams(3, 3, 1, 2, 1, (0,), (1,)), "witnesses", {"q": 7}),
    ("witness_n3_q13", FamilyParams(3, 3, 1, 2, 1, (0,), (1,)), "witnesses", {"q": 13}),
    ("witness_n4_q7", FamilyParams(4, 3, 1, 2, 1, (0, 0), (1, 1)), "witnesses", {"q": 7}),
    ("lemmas_n3", FamilyParams(3, 3, 1, 2, 1, (0,), (1,)), "lemmas", {}),
    ("lemmas_n5", FamilyParams(5, 3, 2, 2, 5, (2, 0, 1), (2, 1, 1)), "lemmas", {}),
]


def run(name, params, kind, extra, cfg):
    if kind == "prop1":
        return [check_prop1(params, extra["k_list"], jobs=cfg.jobs).to_dict()]
    if kind == "prop2":
        return [check_prop2(params, extra["q"], jobs=cfg.jobs).to_dict()]
    if kind == "witnesses":
        out = [witness_F(params, i, extra["q"]).to_dict() for i in range(1, params.n - 1)]
        out += [witness_pair(params, i, j, extra["q"]).to_dict()
                for i in range(1, params.n - 1) for j in range(i + 1, params.n - 1)]
        return out
    D = 3 * max(params.q, params.a)
    return [check_lemma1(params, cfg.samples, cfg.seed).to_dict(), check_lemma2(params, D).to_dict()]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f, default in asdict(Config()).items():
        ap.add_argument(f"--{f}", type=type(default), default=default)
    cfg = Config(**vars(ap.parse_args()))
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    summary = {}
    for name, params, kind, extra in RUNS:
        t0 = time.perf_counter()
        reports = run(name, params, kind, extra, cfg)
        ok = all(r.get("passed", r.get("ok")) for r in reports)
        doc = {"config": asdict(cfg), "params": params.to_dict(), "kind": kind, "extra": extra,
               "rank_report": rank_report(params).to_dict(),
               "system": build_system(params).to_dict(), "passed": ok, "reports": reports,
               "wall_clock": time.perf_counter() - t0}
        (out / f"{name}.json").write_text(json.dumps(doc, indent=2))
        summary[name] = ok
        print(f"{'PASS' if ok else 'FAIL'}  {name:20s} {doc['wall_clock']:.2f}s")
    (out / "summary.json").write_text(json.dumps(summary, indent=2))


if __name__ == "__main__":
    main()
