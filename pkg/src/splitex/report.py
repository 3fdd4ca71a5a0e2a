"""Report rendering: delimited output plus figures from a record store.

Groups stored extremal records by (objective, p, q, constraint set), writes
one CSV for the whole store, and renders one PNG per group showing the
brute-force optimum against the closed-form Turan reference and the value
of the Y construction wherever it is defined.
"""

from __future__ import annotations

import os
from typing import Iterable

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .constructions import turan, y_graph
from .search import (
    CONSTRAINT_NON_PARTITE,
    OBJECTIVE_EDGES,
    ExtremalRecord,
    RecordStore,
    turan_edge_count,
)
from .spectral import spectral_radius


def _group_key(record: ExtremalRecord) -> tuple:
    spec = record.spec
    return (spec.objective, spec.p, spec.q, tuple(sorted(spec.constraints)))


def _slug(key: tuple) -> str:
    objective, p, q, constraints = key
    cons = "-".join(c.replace("complete-split-free", "splitfree")
                    .replace("clique-free", "cliquefree")
                    .replace("non-p-partite", "nonpartite")
                    for c in constraints) or "unconstrained"
    return f"{objective}_p{p}_q{q}_{cons}"


def _reference_curves(key: tuple, ns: list[int]) -> dict[str, list[tuple[int, float]]]:
    objective, p, q, constraints = key
    curves: dict[str, list[tuple[int, float]]] = {}
    turan_pts, y_pts = [], []
    for n in ns:
        if p <= n:
            if objective == OBJECTIVE_EDGES:
                turan_pts.append((n, turan_edge_count(n, p)))
            else:
                t, _ = turan(n, p)
                turan_pts.append((n, spectral_radius(t, 1e-9).rho))
        if n >= 2 * p + 1:
            y, _ = y_graph(n, p)
            y_pts.append((n, y.m if objective == OBJECTIVE_EDGES
                          else spectral_radius(y, 1e-9).rho))
    if turan_pts and CONSTRAINT_NON_PARTITE not in constraints:
        curves["balanced multipartite"] = turan_pts
    if y_pts:
        curves["Y construction"] = y_pts
    return curves


def render_report(store: RecordStore, out_dir, formats: Iterable[str] = ("csv", "png")) -> list[str]:
    """Write records.csv and one figure per record group; returns the paths."""
    os.makedirs(out_dir, exist_ok=True)
    formats = set(formats)
    written: list[str] = []
    records = sorted(store.load().values(), key=lambda r: r.spec.key())
    if "csv" in formats:
        csv_path = os.path.join(out_dir, "records.csv")
        store.export_csv(csv_path)
        written.append(csv_path)
    if "png" not in formats:
        return written
    groups: dict[tuple, list[ExtremalRecord]] = {}
    for record in records:
        groups.setdefault(_group_key(record), []).append(record)
    for key, group in sorted(groups.items(), key=lambda kv: _slug(kv[0])):
        points = []
        for record in group:
            value = record.best_value
            if value is None:
                continue
            err = 0.0
            if isinstance(value, tuple):
                value, err = value
            points.append((record.spec.n, float(value), err))
        if not points:
            continue
        points.sort()
        ns = [n for n, _, _ in points]
        fig, ax = plt.subplots(figsize=(5.4, 3.6))
        ax.errorbar(ns, [v for _, v, _ in points], yerr=[e for _, _, e in points],
                    fmt="o", color="C0", capsize=3, label="exhaustive optimum", zorder=3)
        for label, pts in _reference_curves(key, ns).items():
            ax.plot([n for n, _ in pts], [v for _, v in pts], "--",
                    marker="x", alpha=0.8, label=label)
        objective, p, q, constraints = key
        ax.set_xlabel("vertices n")
        ax.set_ylabel("max edge count" if objective == OBJECTIVE_EDGES else "max spectral radius")
        cons = ", ".join(constraints) or "no constraints"
        ax.set_title(f"{objective} optimum, p={p}, q={q} ({cons})", fontsize=9)
        ax.grid(alpha=0.3)
        ax.legend(fontsize=8)
        fig.tight_layout()
        path = os.path.join(out_dir, _slug(key) + ".png")
        fig.savefig(path, dpi=150)
        plt.close(fig)
        written.append(path)
    return written
