"""JSON-ready report payloads and their text rendering.

Every element in a report is written from its normal-form coordinates after
scaling the first nonzero coefficient to 1 (over QQ: primitive integral with
positive leading coefficient), so the strings re-parse to the same element up
to that normalisation.
"""

from __future__ import annotations

import json

from ezd.classify import ClassifyReport
from ezd.engine import EzdReport, SequenceReport, StrongResult, TorReport, Witness
from ezd.ideals import socle
from ezd.koszul import T2Result
from ezd.ring import ArtinianRing, RingElement

SCHEMA_VERSION = 1


def elem(e: RingElement | None) -> str | None:
    if e is None:
        return None
    return str(e.normalized())


def elems(es) -> list:
    return [elem(e) for e in es] if es is not None else None


def ring_summary(ring: ArtinianRing, rf=None) -> dict:
    out = {
        "field": ring.field.name,
        "vars": list(ring.var_names),
        "ideal": [str(g) for g in ring.ideal_gens],
        "order": ring.order.name.lower(),
        "length": ring.length,
        "hilbert_function": ring.hilbert_function,
        "socle_dim": socle(ring).dim,
    }
    if rf is not None and rf.path:
        out["file"] = rf.path
    return out


def classify_payload(c: ClassifyReport) -> dict:
    return {
        "length": c.length,
        "e": c.e,
        "log2_bound": c.log2_bound,
        "hilbert_function": c.hilbert_function,
        "hilbert_series": c.hilbert_series,
        "socle_dim": c.socle_dim,
        "socle_degree": c.socle_degree,
        "gorenstein": c.gorenstein,
        "graded": c.graded,
        "mu_ideal": c.mu_ideal,
        "generator_degrees": c.generator_degrees,
        "ci": c.ci,
        "quadratic": c.quadratic,
        "koszul_ci": c.koszul_ci,
    }


def pair_payload(r: EzdReport) -> dict:
    return {
        "x": elem(r.x),
        "verdict": r.verdict,
        "twin": elem(r.twin),
        "failure_reason": r.failure_reason,
        "length_xN": r.dims[0],
        "length_annihilator": r.dims[1],
    }


def _witness(w):
    if w is None or isinstance(w, (int, str)):
        return w
    subset, j = w
    return {"subset": list(subset), "index": j}


def strong_payload(s: StrongResult | None) -> dict | None:
    if s is None:
        return None
    return {
        "verdict": s.verdict,
        "method": s.method,
        "twins": elems(s.adjusted_twins),
        "witness": _witness(s.witness),
    }


def sequence_payload(r: SequenceReport, checks) -> dict:
    out = {
        "xs": elems(r.xs),
        "is_sequence": r.is_sequence,
        "failing_index": r.failing_index,
        "twins": elems(r.twins),
        "mu": r.mu,
        "minimal": r.minimal,
    }
    if "permutable" in checks:
        out["permutable"] = r.permutable
        out["failing_permutation"] = (
            [i + 1 for i in r.failing_permutation] if r.failing_permutation else None
        )
    if "strong" in checks:
        out["strong"] = r.strong.verdict
        out["strong_lift"] = strong_payload(r.strong)
        out["strong_definition"] = strong_payload(r.strong_oracle)
    return out


def koszul_payload(r: T2Result) -> dict:
    return {
        "xs": elems(r.xs),
        "koszul_verdict": r.koszul_verdict,
        "sequential_verdict": r.sequential_verdict,
        "agree": r.agree,
        "outside_previous": r.membership,
        "homology": [
            {
                "prefix": row.prefix,
                "degree": row.degree,
                "length": row.length,
                "mu": row.mu,
                "rank_expected": row.rank_expected,
                "free": row.free,
            }
            for row in r.table
        ],
    }


def tor_payload(r: TorReport) -> dict:
    return {
        "x": elem(r.x),
        "y": elem(r.y),
        "tor1": r.tor1,
        "tor2": r.tor2,
        "vanishes": r.vanishes,
    }


def witness_payload(w: Witness) -> dict:
    return {"xs": elems(w.xs), "twins": elems(w.twins)}


def census_entry_payload(entry) -> dict:
    if entry.error is not None:
        return {"file": entry.name, "error": {"type": entry.error[0], "message": entry.error[1]}}
    c = entry.result
    return {
        "file": entry.name,
        "length": c.length,
        "hilbert_function": c.hilbert_function,
        "socle_dim": c.socle_dim,
        "koszul_ci": c.koszul_ci,
        "max_strong_length": c.max_strong,
        "log2_bound": c.bound,
        "bound_ok": c.bound_ok,
        "bound_tight": c.tight and c.max_strong == c.bound,
        "strong_witness": witness_payload(c.witness) if c.witness else None,
        "adjusted_twins": elems(c.adjusted_twins),
        "multiplicity_identity": c.d7_ok,
        "twin_swaps_strong": c.swaps_ok,
        "tuples_tested": len(c.tuples),
        "strong_tests_agree": c.strong_agree,
        "tor_agrees": c.tor_agree,
        "koszul_agrees": c.t2_agree,
        "consistent": c.consistent,
    }


def envelope(command: dict, ring: dict | None = None, result=None, error=None) -> dict:
    out = {"schema_version": SCHEMA_VERSION, "command": command}
    if ring is not None:
        out["ring"] = ring
    if result is not None:
        out["result"] = result
    if error is not None:
        out["error"] = error
    return out


def to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _flatten(prefix: str, value, out: list):
    if isinstance(value, dict):
        for k in sorted(value):
            _flatten(f"{prefix}.{k}" if prefix else k, value[k], out)
    elif isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, out)
    else:
        out.append(f"{prefix}: {json.dumps(value, ensure_ascii=False)}")


def to_text(report: dict) -> str:
    lines: list = []
    _flatten("", report, lines)
    return "\n".join(lines) + "\n"
