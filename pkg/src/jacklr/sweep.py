"""Exhaustive verification over minimal triples, optionally across processes."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .horn import enumerate_minimal
from .partitions import Partition

JACK_LIMIT_WEIGHT = 6
JACK_LIMIT_ALPHAS = (2, 3)


@dataclass
class SweepSummary:
    mode: str
    max_weight: int
    d_convention: str
    table: str
    triples: int = 0
    cases: dict = field(default_factory=dict)
    facet_rows: dict = field(default_factory=dict)
    mismatches_c: int = 0
    mismatches_g: int = 0
    out_of_range: int = 0
    path_disagreements: int = 0
    balance_violations: int = 0
    rescued: int = 0
    q_equals_t_failures: int = 0
    duality_failures: int = 0
    duality_checked: int = 0
    jack_limit_failures: int = 0
    failures: list = field(default_factory=list)
    balance_failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not (
            self.mismatches_c
            or self.mismatches_g
            or self.out_of_range
            or self.path_disagreements
            or self.q_equals_t_failures
            or self.duality_failures
            or self.jack_limit_failures
        )

    def to_json(self) -> dict:
        out = {
            "mode": self.mode,
            "max_weight": self.max_weight,
            "d_convention": self.d_convention,
            "table": self.table,
            "triples": self.triples,
            "cases": {str(k): self.cases[k] for k in sorted(self.cases)},
            "mismatches_c": self.mismatches_c,
            "out_of_range": self.out_of_range,
            "path_disagreements": self.path_disagreements,
        }
        if self.mode == "jack":
            out["mismatches_g"] = self.mismatches_g
            out["balance_violations"] = self.balance_violations
            out["balance_failures"] = self.balance_failures
            if self.facet_rows:
                out["facet_rows"] = {str(k): self.facet_rows[k] for k in sorted(self.facet_rows)}
                out["rescued"] = self.rescued
        else:
            out["q_equals_t_failures"] = self.q_equals_t_failures
            out["duality_checked"] = self.duality_checked
            out["duality_failures"] = self.duality_failures
            out["jack_limit_failures"] = self.jack_limit_failures
        out["failures"] = self.failures
        out["ok"] = self.ok
        return out

    def to_text(self) -> str:
        lines = [
            f"mode: {self.mode}  max weight: {self.max_weight}  d-convention: {self.d_convention}  table: {self.table}",
            f"triples checked: {self.triples}",
        ]
        for k in sorted(self.cases):
            s = self.cases[k]
            lines.append(
                f"  case {k:2d}: {s['count']:6d}  match {s['match']}  mismatch {s['mismatch']}"
                f"  out-of-range {s['out_of_range']}"
            )
        lines.append(f"c mismatches: {self.mismatches_c}")
        lines.append(f"out-of-range division numbers: {self.out_of_range}")
        lines.append(f"path disagreements: {self.path_disagreements}")
        if self.mode == "jack":
            lines.append(f"g mismatches: {self.mismatches_g}")
            lines.append(f"balance violations: {self.balance_violations}")
            if self.facet_rows:
                lines.append("all applicable rows:")
                for k in sorted(self.facet_rows):
                    s = self.facet_rows[k]
                    lines.append(
                        f"  row {k:2d}: match {s['match']}  mismatch {s['mismatch']}"
                        f"  out-of-range {s['out_of_range']}"
                    )
                lines.append(f"failing triples with some matching row: {self.rescued}")
        else:
            lines.append(f"q=t failures: {self.q_equals_t_failures}")
            lines.append(f"duality: {self.duality_checked} checked, {self.duality_failures} failed")
            lines.append(f"jack limit failures: {self.jack_limit_failures}")
        for f in self.failures:
            lines.append(f"FAIL {_fmt(f)}")
        lines.append(f"wall time: {self.seconds:.1f}s")
        return "\n".join(lines)


def _fmt(rec) -> str:
    parts = "|".join(",".join(map(str, rec[k])) for k in ("lambda", "mu", "nu"))
    return f"{parts} case {rec['case']}: {rec['status']}"


def _key(t):
    return {"lambda": list(t[0]), "mu": list(t[1]), "nu": list(t[2])}


def _jack_record(triple, convention, table, all_cases):
    from .stanley import verify_triple

    rep = verify_triple(*triple, convention=convention, all_cases=all_cases, table=table)
    return {
        **_key(triple),
        "case": rep.case,
        "status": rep.case_results[rep.case][0],
        "match_g": rep.match_g,
        "balance": list(rep.balance) if rep.balance else None,
        "rows": {k: v[0] for k, v in rep.case_results.items()},
    }


def _qt_record(triple, convention, table, all_cases):
    from .jack import oracle_c
    from .macdonald import jack_limit, verify_triple_qt

    rep = verify_triple_qt(*triple, convention=convention, table=table)
    limit_ok = None
    if Partition(triple[0]).weight <= JACK_LIMIT_WEIGHT:
        c = oracle_c(*triple, 3)
        limit_ok = all(jack_limit(rep.c_oracle, a) == c(a) for a in JACK_LIMIT_ALPHAS)
    return {
        **_key(triple),
        "case": rep.case,
        "status": rep.case_results[rep.case][0],
        "q_equals_t": rep.q_equals_t,
        "duality": rep.duality,
        "jack_limit": limit_ok,
    }


def _run_chunk(args):
    mode, triples, convention, table, all_cases, cache_dir = args
    if cache_dir:
        from .cache import attach

        attach(cache_dir)
    fn = _jack_record if mode == "jack" else _qt_record
    return [fn(t, convention, table, all_cases) for t in triples]


def _chunks(items, k):
    size = max(1, (len(items) + k - 1) // k)
    return [items[i : i + size] for i in range(0, len(items), size)]


def run_sweep(
    max_weight: int,
    qt: bool = False,
    workers: int = 1,
    convention: str = "minus",
    table: str = "printed",
    all_cases: bool = False,
    cache_dir: str | None = None,
) -> SweepSummary:
    mode = "qt" if qt else "jack"
    start = time.perf_counter()
    triples = [tuple(tuple(p) for p in t) for t in enumerate_minimal(max_weight)]
    if workers == 1 or len(triples) < 2:
        records = _run_chunk((mode, triples, convention, table, all_cases, cache_dir))
    else:
        # small chunks keep the pool busy; results come back in submission order
        jobs = [(mode, c, convention, table, all_cases, cache_dir) for c in _chunks(triples, workers * 8)]
        records = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_run_chunk, jobs):
                records.extend(part)
    summary = summarize(records, mode, max_weight, convention, table, all_cases)
    summary.seconds = time.perf_counter() - start
    return summary


def summarize(records, mode, max_weight, convention, table, all_cases=False) -> SweepSummary:
    s = SweepSummary(mode, max_weight, convention, table, triples=len(records))
    zero = lambda: {"count": 0, "match": 0, "mismatch": 0, "out_of_range": 0}
    label = {"match": "match", "mismatch": "mismatch", "out-of-range": "out_of_range"}
    for r in records:
        st = s.cases.setdefault(r["case"], zero())
        st["count"] += 1
        if r["status"] in label:
            st[label[r["status"]]] += 1
        failed = False
        if r["status"] == "mismatch":
            s.mismatches_c += 1
            failed = True
        elif r["status"] == "out-of-range":
            s.out_of_range += 1
            failed = True
        elif r["status"] == "path-disagreement":
            s.path_disagreements += 1
            failed = True
        if mode == "jack":
            if r["match_g"] is False:
                s.mismatches_g += 1
                failed = True
            if r["balance"] and r["balance"][0] != r["balance"][1]:
                s.balance_violations += 1
                s.balance_failures.append({**_key((r["lambda"], r["mu"], r["nu"])), "case": r["case"], "balance": r["balance"]})
            if all_cases:
                for k, v in r["rows"].items():
                    row = s.facet_rows.setdefault(k, zero())
                    row["count"] += 1
                    if v in label:
                        row[label[v]] += 1
            if failed and any(v == "match" for v in r["rows"].values()):
                s.rescued += 1
        else:
            if r["q_equals_t"] is False:
                s.q_equals_t_failures += 1
                failed = True
            if r["duality"] is not None:
                s.duality_checked += 1
                if not r["duality"]:
                    s.duality_failures += 1
                    failed = True
            if r["jack_limit"] is False:
                s.jack_limit_failures += 1
                failed = True
        if failed:
            s.failures.append({**_key((r["lambda"], r["mu"], r["nu"])), "case": r["case"], "status": r["status"]})
    return s
