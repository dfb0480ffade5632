"""Batch front-end: build graphs, run the theorem harness, scan degree ranges.

Exit codes: 0 success, 1 verification mismatch, 2 usage or manifest parse
error, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import click

from . import analysis
from .analysis import INFINITE
from .catalog import ManifestError, default_catalog, GroupCatalog, load_manifest, parse_group_label
from .errors import BudgetExceededError
from .graphs import GraphKind, adjacency_bit_text, build_all_kinds, build_graph, to_dot
from .groups import DEFAULT_BUDGET
from .spectrum import (
    DEFAULT_SPECTRUM_CAP,
    dominant_orders,
    quotient_components,
    quotient_diameter,
    quotient_graph,
    spectrum_alternating,
    spectrum_explicit,
    spectrum_symmetric,
)
from .witnesses import analyze_degree, conjecture_scan, scan_csv

EXIT_MISMATCH = 1
EXIT_BUDGET = 3


def _write(text: str, output: str | None) -> None:
    if output is None:
        click.echo(text, nl=False)
    else:
        Path(output).write_text(text)


def _budget_guard(fn):
    """Translate budget errors into exit code 3."""
    import functools

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except BudgetExceededError as exc:
            click.echo(f"budget exceeded: {exc}", err=True)
            sys.exit(EXIT_BUDGET)

    return wrapper


@click.group()
def main():
    """Super graphs on finite groups: build, verify, inspect, scan."""


@main.command()
@click.option("--group", "label", required=True, help="Group label, e.g. D14 or S3xZ3.")
@click.option("--graph", "base", required=True,
              type=click.Choice(["power", "enhanced_power", "commuting"]))
@click.option("--relation", required=True,
              type=click.Choice(["equality", "conjugacy", "order"]))
@click.option("--reduced", is_flag=True, help="Drop dominant vertices first.")
@click.option("--format", "fmt", default="dot", type=click.Choice(["dot", "json", "bits"]))
@click.option("--output", "-o", default=None, help="Output path (default stdout).")
@click.option("--budget", default=DEFAULT_BUDGET, show_default=True,
              help="Explicit enumeration budget in elements.")
@_budget_guard
def build(label, base, relation, reduced, fmt, output, budget):
    """Build one of the nine graphs on a group and export it."""
    try:
        g = parse_group_label(label, budget)
    except ManifestError as exc:
        raise click.UsageError(str(exc))
    kind = GraphKind(base, relation)
    graph = build_graph(g, kind, budget)
    if reduced:
        graph = analysis.reduced_graph(graph)
    name = f"{label}-{kind.name}" + ("-reduced" if reduced else "")
    if fmt == "dot":
        _write(to_dot(graph, orders=g.orders, name=name), output)
    elif fmt == "bits":
        _write(adjacency_bit_text(graph), output)
    else:
        payload = {
            "label": label,
            "kind": kind.name,
            "reduced": reduced,
            "n_vertices": graph.n_vertices,
            "vertices": [
                {"id": int(v), "order": int(g.orders[int(v)])}
                for v in graph.vertex_labels
            ],
            "edges": [[int(graph.vertex_labels[i]), int(graph.vertex_labels[j])]
                      for i, j in graph.edges()],
        }
        _write(json.dumps(payload, indent=2, sort_keys=True) + "\n", output)


def _load_catalog(path: str | None, budget: int) -> GroupCatalog:
    if path is None:
        return default_catalog(budget)
    try:
        labels = load_manifest(Path(path).read_text(), budget)
    except ManifestError as exc:
        raise click.UsageError(f"catalog {path}: {exc}")
    return GroupCatalog(labels, budget)


@main.command()
@click.option("--catalog", "catalog_path", default=None,
              help="Manifest of group labels, one per line (default: built-in corpus).")
@click.option("--format", "fmt", default="json", type=click.Choice(["json", "csv"]))
@click.option("--output", "-o", default=None)
@click.option("--budget", default=DEFAULT_BUDGET, show_default=True)
@_budget_guard
def verify(catalog_path, fmt, output, budget):
    """Run every equality and completeness check over a catalog.

    Exits 1 if any characterised prediction disagrees with the built graphs.
    """
    cat = _load_catalog(catalog_path, budget)
    equality, completeness, failures = [], [], []
    for glabel in cat:
        g = cat.group(glabel)
        graphs = build_all_kinds(g, budget)
        for v in analysis.verify_equality_theorems(g, graphs):
            equality.append(v)
            if not v.consistent:
                failures.append(f"{glabel}: {v.pair[0]}={v.pair[1]} ({v.theorem_id})")
        for c in analysis.verify_completeness(g, graphs):
            completeness.append(c)
            if not c.consistent:
                failures.append(f"{glabel}: completeness of {c.graph}")
    if fmt == "json":
        _write(analysis.equality_report(equality), output)
    else:
        _write(analysis.summary_csv(equality, completeness), output)
    if failures:
        for line in failures:
            click.echo(f"MISMATCH {line}", err=True)
        sys.exit(EXIT_MISMATCH)
    click.echo(f"verified {len(cat)} groups, no mismatches", err=True)


@main.command()
@click.option("--family", type=click.Choice(["symmetric", "alternating"]), default=None)
@click.option("--n", "degree", type=int, default=None, help="Degree for --family.")
@click.option("--group", "label", default=None, help="Explicit group label instead.")
@click.option("--reduced/--full", default=True,
              help="Quotient of the reduced graph (default) or the full one.")
@click.option("--cap", default=DEFAULT_SPECTRUM_CAP, show_default=True)
@click.option("--budget", default=DEFAULT_BUDGET, show_default=True)
@click.option("--output", "-o", default=None)
@_budget_guard
def spectrum(family, degree, label, reduced, cap, budget, output):
    """Order spectrum and order-quotient metrics for one group."""
    if (family is None) == (label is None):
        raise click.UsageError("give exactly one of --family/--n or --group")
    if family is not None:
        if degree is None:
            raise click.UsageError("--family needs --n")
        spec = (spectrum_symmetric(degree, cap) if family == "symmetric"
                else spectrum_alternating(degree, cap))
        name = f"{family}-{degree}"
    else:
        try:
            g = parse_group_label(label, budget)
        except ManifestError as exc:
            raise click.UsageError(str(exc))
        spec = spectrum_explicit(g)
        name = label
    q = quotient_graph(spec, reduced=reduced)
    report = quotient_components(q)
    diam = quotient_diameter(q)
    payload = {
        "group": name,
        "family": spec.family,
        "n": spec.n,
        "orders": sorted(spec.orders),
        "mu": list(spec.mu),
        "l": spec.l,
        "dominant_orders": sorted(dominant_orders(spec)),
        "quotient": {
            "reduced": reduced,
            "vertices": [int(d) for d in q.orders],
            "connected": report.is_connected,
            "components": report.count,
            "component_sizes": list(report.sizes) if report.sizes is not None else None,
            "diameter": "inf" if diam == INFINITE else diam,
            "empty": q.n_vertices == 0,
        },
    }
    _write(json.dumps(payload, indent=2, sort_keys=True) + "\n", output)


@main.command()
@click.option("--family", required=True, type=click.Choice(["symmetric", "alternating"]))
@click.option("--start", default=4, show_default=True)
@click.option("--end", required=True, type=int)
@click.option("--cap", default=DEFAULT_SPECTRUM_CAP, show_default=True)
@click.option("--workers", default=1, show_default=True)
@click.option("--output", "-o", default=None)
@_budget_guard
def scan(family, start, end, cap, workers, output):
    """Scan a degree range: connectivity, diameter, and diameter-3 witnesses."""
    if start < 4 or end < start:
        raise click.UsageError("need 4 <= start <= end")
    if end > cap:
        raise click.UsageError(f"end {end} over the spectrum cap {cap}")
    degrees = list(range(start, end + 1))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(analyze_degree, degrees,
                                 [family] * len(degrees), [cap] * len(degrees)))
        rows.sort(key=lambda r: r.n)
    else:
        rows = conjecture_scan(degrees, family, cap)
    _write(scan_csv(rows), output)


if __name__ == "__main__":
    main()
