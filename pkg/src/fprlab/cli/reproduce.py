"""Recompute the stored example tables and diff them against expected values.

Each file in ``fprlab/data`` holds a list of entries with a spec string, a
check kind and the expected values.  Values are compared in serialized
form, so rationals must match exactly.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

import numpy as np

from .. import bases, genus
from ..classes import class_table, fusion_count
from ..config import get_config, using
from ..fpr import fpr_report
from ..genspread import (build_graph, graph_stats, prob_gen2, spread_exact,
                         uspread_certify)
from ..permcore.actions import coset_action
from ..permcore.perm import Permutation
from ..permcore.subgroups import maximal_overgroups
from .report import plain
from .spec import load

TABLES = ("fpr", "generation", "genus", "bases")


def load_table(name):
    text = resources.files("fprlab").joinpath("data").joinpath(f"{name}.json").read_text()
    return json.loads(text)


def all_entries():
    for t in TABLES:
        for e in load_table(t)["entries"]:
            yield t, e


def _element(action, el):
    if isinstance(el, str):
        return action.induce(Permutation.parse(el, action.source.degree))
    return action.induce(np.asarray(el, dtype=np.int64))


def _fprs_by_order(pairs):
    out = {}
    for order, value in pairs:
        out.setdefault(order, set()).add(value)
    return {d: sorted(v) for d, v in sorted(out.items())}


def _check(entry):
    kind = entry["check"]
    act = load(entry["spec"])
    G = act.group
    if kind == "fpr_element":
        x = _element(act, entry["element"])
        return {"fpr": Fraction(x.num_fixed(), act.degree)}
    if kind == "fpr_by_order":
        rep = fpr_report(act)
        return _fprs_by_order((r.order, r.fpr) for r in rep.rows if r.order > 1)
    if kind == "invariants":
        rep = fpr_report(act)
        full = {"mu": rep.mu, "fixity": rep.fixity, "has_derangement": rep.has_derangement}
        return {k: full[k] for k in entry["expected"]}
    if kind == "class_fpr":
        table = class_table(G)
        C = next(c for c in table if c.order == entry["order"] and c.size == entry["size"])
        H = G.point_stabilizer(0)
        return {"size": C.size, "fusion": fusion_count(G, H, C), "fix": C.rep.num_fixed(),
                "fpr": Fraction(C.rep.num_fixed(), act.degree)}
    if kind == "min_index":
        return genus.min_index_table(act)
    if kind == "min_index_overgroup":
        table = class_table(G)
        y = next(c.rep for c in table if c.order == entry["y_order"])
        want = {int(k): v for k, v in entry["profile"].items()}
        for H in maximal_overgroups(G, y):
            if dict(Counter(h.order() for h in H.elements())) == want:
                return genus.min_index_table(coset_action(G, H))
        return {"error": "no maximal overgroup with the requested element orders"}
    if kind == "genus_screen":
        scr = genus.genus_screen(act, entry["g"], insoluble=entry["insoluble"])
        return {"survivors": len(scr.survivors)}
    if kind == "pgen2":
        return {"value": prob_gen2(G)}
    if kind == "graph":
        st = graph_stats(build_graph(G))
        return {"vertices": st.vertices, "edges": st.edges, "clique": st.clique.value,
                "coclique": st.coclique.value, "connected": st.connected, "diameter": st.diameter}
    if kind == "spread":
        cert = spread_exact(G)
        full = {"s": cert.s, "u": cert.u}
        return {k: full[k] for k in entry["expected"]}
    if kind == "overgroups":
        y = Permutation.parse(entry["y"], G.degree)
        return {"orders": [H.order() for H in maximal_overgroups(G, y)]}
    if kind == "uspread":
        y = Permutation.parse(entry["y"], G.degree)
        cert = uspread_certify(G, y, entry["k"])
        full = {"issued": cert.issued, "overgroup_orders": cert.overgroup_orders,
                "sums_by_order": _fprs_by_order((o, s) for _, o, _, s in cert.rows)}
        return {k: full[k] for k in entry["expected"]}
    if kind == "base":
        return {"b": bases.base_size_exact(act).b}
    if kind == "qhat":
        return {"value": bases.qhat(act, entry["c"])}
    raise ValueError(f"unknown check {kind!r}")


@dataclass
class Outcome:
    table: str
    name: str
    passed: bool
    expected: dict
    computed: dict
    skipped: bool = False


def run_entry(table, entry):
    cfg = get_config()
    if "caps" in entry:
        cfg = cfg.with_caps(**entry["caps"])
    with using(cfg):
        computed = plain(_check(entry))
    expected = entry["expected"]
    return Outcome(table, entry["name"], computed == expected, expected, computed)


def reproduce_tables(which=(), long=False):
    """Run the selected entries (all by default); ``which`` holds table or entry names."""
    out = []
    for table, entry in all_entries():
        if which and table not in which and entry["name"] not in which:
            continue
        if entry.get("long") and not long:
            out.append(Outcome(table, entry["name"], True, entry["expected"], {}, skipped=True))
            continue
        out.append(run_entry(table, entry))
    return out
