"""Serialization of results to the versioned JSON schema and to CSV.

Every report is an envelope ``{"schema": "fprlab/1", "command", "spec",
"seed", "result"}``.  Rationals are written as "a/b" strings (always with
a denominator), permutations in 1-indexed cycle notation, and keys are
sorted, so equal inputs give byte-identical output.

CSV output flattens the envelope into ``key,value`` lines: nested keys are
joined with dots and list positions become numeric path components, e.g.
``result.rows.0.fpr,1/3``.
"""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

import numpy as np

from ..permcore.perm import Permutation

SCHEMA = "fprlab/1"


def rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def perm(p) -> str:
    return p.to_cycles() if isinstance(p, Permutation) else str(p)


def plain(obj):
    """Convert a result tree to JSON-ready values."""
    if isinstance(obj, Fraction):
        return rational(obj)
    if isinstance(obj, Permutation):
        return perm(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str, float)):
        return obj
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.ndarray):
        return plain(obj.tolist())
    if isinstance(obj, dict):
        return {str(k): plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [plain(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def envelope(command, spec, seed, result):
    return {"schema": SCHEMA, "command": command, "spec": spec, "seed": seed,
            "result": plain(result)}


def to_json(env) -> str:
    return json.dumps(env, indent=2, sort_keys=True) + "\n"


def _flatten(prefix, value, out):
    if isinstance(value, dict):
        for k in sorted(value):
            _flatten(f"{prefix}.{k}" if prefix else k, value[k], out)
    elif isinstance(value, list):
        if not value:
            out.append((prefix, "[]"))
        for i, v in enumerate(value):
            _flatten(f"{prefix}.{i}", v, out)
    else:
        out.append((prefix, "" if value is None else
                    ("true" if value is True else "false" if value is False else str(value))))


def to_csv(env) -> str:
    rows = []
    _flatten("", env, rows)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["key", "value"])
    w.writerows(rows)
    return buf.getvalue()


def render(env, fmt="json") -> str:
    return to_csv(env) if fmt == "csv" else to_json(env)


# result builders -------------------------------------------------------------

def class_rows(table):
    return [{"index": i, "rep": c.rep, "order": c.order, "size": c.size,
             "centralizer_order": c.centralizer_order} for i, c in enumerate(table)]


def fpr_result(rep):
    return {
        "name": rep.name, "degree": rep.degree, "group_order": rep.group_order,
        "rows": [{"index": r.index, "rep": r.rep, "order": r.order, "size": r.size,
                  "fix": r.fix, "fpr": r.fpr} for r in rep.rows],
        "max_fpr": rep.max_fpr, "min_fpr": rep.min_fpr, "max_fpr_prime": rep.max_fpr_prime,
        "mu": rep.mu, "fixity": rep.fixity, "involution_fixity": rep.involution_fixity,
        "has_involutions": rep.has_involutions, "has_derangement": rep.has_derangement,
        "derangement_class": None if rep.derangement_witness is None else rep.derangement_witness.index,
    }


def graph_result(stats, chromatic=None):
    out = {
        "vertices": stats.vertices, "edges": stats.edges, "connected": stats.connected,
        "diameter": stats.diameter, "posa": stats.posa,
        "clique": {"value": stats.clique.value, "exact": stats.clique.exact,
                   "upper": stats.clique.upper, "witness": stats.clique.witness},
        "coclique": {"value": stats.coclique.value, "exact": stats.coclique.exact,
                     "upper": stats.coclique.upper, "witness": stats.coclique.witness},
    }
    if chromatic is not None:
        out["chromatic"] = {"value": chromatic[0], "exact": chromatic[1]}
    return out


def spread_result(cert):
    return {
        "s": cert.s, "u": cert.u, "infinite": cert.s is None, "method": cert.method,
        "witness_class": cert.witness_class, "spread_witness": cert.spread_witness,
        "uniform_witnesses": {str(c): w for c, w in sorted(cert.uniform_witnesses.items())},
        "per_class_cover": {str(c): v for c, v in sorted(cert.per_class_cover.items())},
    }


def uspread_result(cert):
    return {
        "y": cert.y, "k": cert.k, "overgroup_orders": cert.overgroup_orders,
        "overgroups_source": cert.overgroups_source, "trust_note": cert.trust_note,
        "rows": [{"rep": rep, "order": o, "fprs": parts, "sum": total}
                 for rep, o, parts, total in cert.rows],
        "max_sum": cert.max_sum, "bound": Fraction(1, cert.k), "issued": cert.issued,
    }


def screen_result(screen):
    def entry(e):
        return {"signature": list(e.signature), "status": e.status, "index_sum": e.index_sum,
                "ratio_sum": e.ratio_sum, "nodes": e.nodes,
                "witness": None if e.witness is None else e.witness.elements}
    return {
        "g": screen.g, "target": screen.target, "insoluble_filter": screen.insoluble_filter,
        "kmax": screen.kmax, "min_index": screen.min_index,
        "survivors": [entry(e) for e in screen.survivors],
        "entries": [entry(e) for e in screen.entries],
    }


def base_result(report):
    out = {"b": report.b, "lo": report.lo, "hi": report.hi,
           "witness": [p + 1 for p in report.witness],
           "qhat": {str(c): v for c, v in sorted(report.qhat.items())},
           "random_base_prob": {str(c): {"hits": p.hits, "trials": p.trials, "seed": p.seed,
                                         "estimate": p.estimate}
                                for c, p in sorted(report.random_base_prob.items())}}
    if report.bounds is not None:
        b = report.bounds
        out["bounds"] = {"b": b.b, "mu": b.mu, "degree": b.degree, "order": b.order,
                         "log_ratio": round(b.log_ratio, 12), "log2_order": round(b.log2_order, 12),
                         "lower_ok": b.lower_ok, "upper_ok": b.upper_ok,
                         "coupling_ok": b.coupling_ok}
    return out
