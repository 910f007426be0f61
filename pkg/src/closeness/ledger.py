"""Run every metric, bound and cross-check over a corpus and write the report."""

from __future__ import annotations

import csv
import json
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from functools import partial
from pathlib import Path

from . import __version__
from .asymptotics import asymptotic_run
from .bounds import ASSERTED, AUDIT, BoundRecord, all_bounds, closed_form_closeness, detect_class_tags
from .corpus import CorpusEntry, CorpusSpec, corpus_ids, entry_from_id
from .graph import bridges, delete_edge, distance_matrix, structural_summary
from .independence import brute_force_alpha, independence_number
from .metrics import closeness_profile, full_profile, gago_residual
from .oracles import naive_betweenness
from .rng import SplitMix64
from .spectral import laplacian_spectrum

log = logging.getLogger(__name__)

BETWEENNESS_ORACLE_MAX_N = 12
ALPHA_ORACLE_MAX_N = 20
EDGE_DELETION_SAMPLES = 200
EDGE_DELETION_SEED = 2024
TRACE_RTOL = 1e-9
RESIDUAL_FACTOR = 1e-8
CONNECTIVITY_FLOOR = 1e-9
CSV_COLUMNS = ["graphId", "boundId", "kind", "status", "value", "holds", "margin"]


def frac(x: Fraction) -> dict:
    return {"fraction": f"{x.numerator}/{x.denominator}", "float": float(x)}


def record_to_dict(r: BoundRecord) -> dict:
    exact = isinstance(r.value, Fraction)
    out = {
        "id": r.id,
        "kind": r.kind,
        "status": r.status,
        "applicable": r.applicable,
    }
    if r.applicable:
        out["value"] = frac(r.value) if exact else {"fraction": None, "float": float(r.value)}
        out["holds"] = r.holds
        out["margin"] = frac(r.margin) if exact else {"fraction": None, "float": float(r.margin)}
        out["tight"] = r.tight
    if r.reason:
        out["reason"] = r.reason
    return out


def verify_graph(entry: CorpusEntry, spectral_limit: int = 128, alpha_limit: int = 64) -> dict:
    g = entry.graph
    base = {"graphId": entry.graph_id, "n": g.n, "m": g.m}
    dm = distance_matrix(g)
    if not dm.connected:
        return {**base, "skipped": "graph is disconnected"}
    if g.n < 2:
        return {**base, "skipped": "closeness undefined for a single vertex"}

    summary = structural_summary(g, dm)
    profile = full_profile(g, dm)
    checks: dict[str, bool] = {}
    mismatches: list[str] = []
    discrepancies: list[str] = []

    residual = gago_residual(profile, g.n)
    checks["gagoIdentity"] = residual == 0
    if g.n <= BETWEENNESS_ORACLE_MAX_N:
        checks["betweennessOracle"] = list(profile.betweenness) == naive_betweenness(g)

    spectral = None
    spectral_out = None
    if g.n <= spectral_limit:
        spectral = laplacian_spectrum(g)
        trace_err = abs(sum(spectral.eigenvalues) - 2 * g.m)
        checks["spectralTrace"] = trace_err <= TRACE_RTOL * max(1, 2 * g.m)
        checks["spectralResidual"] = spectral.max_residual <= RESIDUAL_FACTOR * g.n
        checks["algebraicConnectivityPositive"] = spectral.algebraic_connectivity > CONNECTIVITY_FLOOR
        spectral_out = {
            "b": spectral.b,
            "algebraicConnectivity": spectral.algebraic_connectivity,
            "reciprocalSum": spectral.reciprocal_sum,
        }

    alpha = None
    if g.n <= alpha_limit:
        alpha = independence_number(g, alpha_limit).alpha
        if g.n <= ALPHA_ORACLE_MAX_N:
            checks["alphaOracle"] = alpha == brute_force_alpha(g)

    tags = set(entry.tags) | detect_class_tags(g)
    records = all_bounds(g, summary, profile, spectral, alpha, tags)

    closed = None
    if entry.family is not None:
        cf = closed_form_closeness(entry.family)
        per_vertex_ok = cf.per_vertex == profile.closeness
        graph_ok = cf.graph_closeness is None or cf.graph_closeness == profile.graph_closeness
        closed = {
            "perVertexMatches": per_vertex_ok,
            "graphValue": frac(cf.graph_closeness) if cf.graph_closeness is not None else "no tidy expression",
            "graphValueMatches": graph_ok if cf.graph_closeness is not None else None,
        }
        if cf.graph_closeness is not None:
            # the graph-level form must equal the mean of the per-vertex forms
            checks["closedFormMeanConsistent"] = sum(cf.per_vertex) / len(cf.per_vertex) == cf.graph_closeness
        if cf.discrepancy_note:
            corrected_ok = (
                cf.corrected_per_vertex == profile.closeness
                and cf.corrected_graph_closeness == profile.graph_closeness
            )
            closed["discrepancyNote"] = cf.discrepancy_note
            closed["correctedMatches"] = corrected_ok
            checks["closedFormCorrected"] = corrected_ok
            discrepancies.append(cf.discrepancy_note)
        else:
            checks["closedForm"] = per_vertex_ok and graph_ok

    for name, ok in checks.items():
        if not ok:
            mismatches.append(name)

    return {
        **base,
        "summary": {
            "minDegree": summary.min_degree,
            "maxDegree": summary.max_degree,
            "radius": summary.radius,
            "diameter": summary.diameter,
        },
        "profile": {
            "meanDistance": frac(profile.mean_distance),
            "closeness": frac(profile.graph_closeness),
            "betweenness": frac(profile.graph_betweenness),
            "dualityProduct": frac(profile.mean_distance * profile.graph_closeness),
            "transmissionRegular": profile.transmission_regular,
            "gagoResidual": frac(residual),
        },
        "classTags": sorted(tags),
        "spectral": spectral_out,
        "alpha": alpha,
        "bounds": [record_to_dict(r) for r in records],
        "closedForm": closed,
        "checks": dict(sorted(checks.items())),
        "oracleMismatches": mismatches,
        "discrepancies": discrepancies,
    }


def _verify_id(graph_id: str, spectral_limit: int, alpha_limit: int) -> dict:
    return verify_graph(entry_from_id(graph_id), spectral_limit, alpha_limit)


def edge_deletion_check(graph_ids: list[str], samples: int = EDGE_DELETION_SAMPLES, seed: int = EDGE_DELETION_SEED) -> tuple[dict, list]:
    """Sample (graph, non-bridge edge) pairs; deleting the edge must lower closeness."""
    pools = []
    for gid in graph_ids:
        g = entry_from_id(gid).graph
        if g.n < 2 or not distance_matrix(g).connected:
            continue
        cut = set(bridges(g))
        candidates = [e for e in g.edges() if e not in cut]
        if candidates:
            pools.append((gid, g, candidates))
    rng = SplitMix64(seed)
    rows = []
    violations = []
    for _ in range(samples if pools else 0):
        gid, g, candidates = pools[rng.below(len(pools))]
        u, v = candidates[rng.below(len(candidates))]
        before = closeness_profile(g, distance_matrix(g)).graph_closeness
        h = delete_edge(g, u, v)
        after = closeness_profile(h, distance_matrix(h)).graph_closeness
        rows.append((gid, u, v, before, after))
        if not after < before:
            violations.append({"graphId": gid, "edge": [u, v], "before": frac(before), "after": frac(after)})
    return {"samples": len(rows), "seed": seed, "violations": violations}, rows


def asymptotic_rows(family: str, sizes) -> list[dict]:
    out = []
    for row in asymptotic_run(family, sizes):
        out.append({
            "n": row.n,
            "lower": row.lower,
            "exact": frac(row.exact) if row.exact is not None else None,
            "exactFloat": row.exact_float,
            "upper": row.upper,
            "nTimesExact": row.n * row.exact_float,
            "piGap": row.pi_gap,
            "contained": row.contained,
            "withinTenOverN": row.n < 100 or row.pi_gap <= 10 / row.n,
        })
    return out


@dataclass
class LedgerReport:
    entries: list[dict]
    summary: dict
    exit_code: int
    bound_rows: list[list[str]] = field(default_factory=list)

    def to_dict(self, timestamp: str | None = None) -> dict:
        return {
            "tool": "closeness",
            "version": __version__,
            "generatedAt": timestamp,
            "summary": self.summary,
            "entries": self.entries,
        }

    def to_json(self, timestamp: str | None = None) -> str:
        return json.dumps(self.to_dict(timestamp), indent=2, ensure_ascii=False) + "\n"


def build_report(spec: CorpusSpec, jobs: int = 1, asymptotic_sizes=None) -> LedgerReport:
    ids = corpus_ids(spec)
    worker = partial(_verify_id, spectral_limit=spec.spectral_limit, alpha_limit=spec.alpha_limit)
    if jobs > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(worker, ids, chunksize=4))
    else:
        entries = [worker(gid) for gid in ids]
    entries.sort(key=lambda e: e["graphId"])

    asserted_pass: Counter[str] = Counter()
    asserted_fail = []
    audit_violations = []
    discrepancies = []
    mismatches = []
    bound_rows = []
    for e in entries:
        for note in e.get("discrepancies", []):
            discrepancies.append({"graphId": e["graphId"], "note": note})
        for name in e.get("oracleMismatches", []):
            mismatches.append({"graphId": e["graphId"], "check": name})
        for b in e.get("bounds", []):
            bound_rows.append(_csv_row(e["graphId"], b))
            if not b["applicable"]:
                continue
            item = {"graphId": e["graphId"], "boundId": b["id"], "value": b["value"], "closeness": e["profile"]["closeness"]}
            if b["status"] == ASSERTED:
                if b["holds"]:
                    asserted_pass[b["id"]] += 1
                else:
                    asserted_fail.append(item)
            elif b["status"] == AUDIT and not b["holds"]:
                audit_violations.append(item)

    edge_summary, _ = edge_deletion_check(ids) if ids else ({"samples": 0, "seed": EDGE_DELETION_SEED, "violations": []}, [])

    sizes = spec.asymptotic_sizes if asymptotic_sizes is None else asymptotic_sizes
    asymptotics = {fam: asymptotic_rows(fam, sizes) for fam in ("path", "ladder")} if sizes else {}
    asym_fail = [
        {"family": fam, "n": r["n"]}
        for fam, rows in asymptotics.items()
        for r in rows
        if not (r["contained"] and r["withinTenOverN"])
    ]

    failed = bool(asserted_fail or mismatches or edge_summary["violations"] or asym_fail)
    summary = {
        "graphs": len(entries),
        "skipped": sorted(e["graphId"] for e in entries if "skipped" in e),
        "assertedPassCounts": dict(sorted(asserted_pass.items())),
        "assertedViolations": asserted_fail,
        "auditViolations": audit_violations,
        "auditViolationCounts": dict(sorted(Counter(v["boundId"] for v in audit_violations).items())),
        "discrepancies": discrepancies,
        "oracleMismatches": mismatches,
        "edgeDeletion": edge_summary,
        "asymptotics": asymptotics,
        "asymptoticFailures": asym_fail,
        "ok": not failed,
    }
    return LedgerReport(entries, summary, 1 if failed else 0, bound_rows)


def _csv_row(graph_id: str, b: dict) -> list[str]:
    if not b["applicable"]:
        return [graph_id, b["id"], b["kind"], b["status"], "", "", ""]

    def cell(v: dict) -> str:
        return v["fraction"] if v["fraction"] is not None else repr(v["float"])

    return [graph_id, b["id"], b["kind"], b["status"], cell(b["value"]), str(b["holds"]).lower(), cell(b["margin"])]


def write_report(report: LedgerReport, out_dir: str | Path, timestamp: str | None = None) -> tuple[Path, Path]:
    out = Path(out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
        json_path = out / "ledger.json"
        csv_path = out / "bounds.csv"
        if timestamp is None:
            timestamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
        json_path.write_text(report.to_json(timestamp))
        with csv_path.open("w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(CSV_COLUMNS)
            writer.writerows(report.bound_rows)
    except OSError as exc:
        raise OSError(f"cannot write report to {out}: {exc}") from exc
    return json_path, csv_path


def run_ledger(spec: CorpusSpec, out_dir: str | Path, jobs: int = 1) -> LedgerReport:
    report = build_report(spec, jobs=jobs)
    write_report(report, out_dir)
    log.info("verified %d graphs, exit code %d", len(report.entries), report.exit_code)
    return report


def strip_timestamp(text: str) -> str:
    data = json.loads(text)
    data.pop("generatedAt", None)
    return json.dumps(data, indent=2, ensure_ascii=False)
