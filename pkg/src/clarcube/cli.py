"""Command-line driver.

Inputs are .emb files or bundled corpus instance names; face sets are
selector strings (``all-even``, ``all-even-except 3``, ``0,2,5``,
``all``) or, for corpus instances, their named sets. Exit codes:
0 all asserted checks pass, 1 violation found, 2 input error.
"""

from __future__ import annotations

import csv
import os
import sys

import click

from . import __version__
from .corpus import (
    CorpusInstance,
    GENERATOR_KINDS,
    builtin_corpus,
    corpus_instance,
    generate_random,
)
from .embedded import euler_genus
from .embfile import parse_emb, write_emb
from .errors import ClarCubeError, DisconnectedGraphError, UnknownInstanceError
from .matching import enumerate_perfect_matchings
from .polynomials import cube_polynomial, zz_polynomial
from .report import hunt as run_hunt
from .report import report_json, run_report
from .resonance import build_resonance_graph, components, to_dot

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2


def _load(source: str) -> CorpusInstance:
    """Load an .emb file or a bundled corpus instance by name."""
    if os.path.isfile(source):
        with open(source, "r", encoding="utf-8") as fh:
            g = parse_emb(fh.read())
        name = os.path.splitext(os.path.basename(source))[0]
        return CorpusInstance(name, g)
    try:
        return corpus_instance(source)
    except UnknownInstanceError:
        raise ClarCubeError(
            f"{source!r} is neither a readable file nor a corpus instance")


def _face_set(inst: CorpusInstance, selector: str):
    return inst.face_set(selector)


@click.group()
@click.version_option(__version__)
def main():
    """Resonance graphs of surface-embedded graphs."""


@main.command("faces")
@click.argument("source")
def faces_cmd(source):
    """List the faces of an embedding."""
    try:
        inst = _load(source)
        g = inst.graph
        try:
            genus = euler_genus(g)
            genus_text = str(genus)
        except DisconnectedGraphError:
            genus_text = "n/a (disconnected)"
        click.echo(f"{inst.name}: {g.n_vertices} vertices, {g.n_edges} edges, "
                   f"{len(g.faces())} faces, euler genus {genus_text}")
        for f in g.faces():
            kind = "even cycle" if f.is_even else (
                "odd cycle" if f.is_cycle else "closed walk")
            click.echo(f"  face {f.face_id}: length {len(f)}, {kind}")
    except ClarCubeError as exc:
        _fail(exc)


@main.command("matchings")
@click.argument("source")
@click.option("--list", "list_all", is_flag=True, help="print every matching")
def matchings_cmd(source, list_all):
    """Count (or list) the perfect matchings."""
    try:
        inst = _load(source)
        ms = enumerate_perfect_matchings(inst.graph)
        click.echo(f"{inst.name}: {len(ms)} perfect matchings")
        if list_all:
            for i, m in enumerate(ms):
                click.echo(f"  M{i}: {{{', '.join(map(str, m.edge_ids))}}}")
    except ClarCubeError as exc:
        _fail(exc)


@main.command("resonance")
@click.argument("source")
@click.option("--faces", "selector", required=True,
              help="face-set selector or named set")
@click.option("--dot", "dot_path", type=click.Path(), default=None,
              help="write DOT export to this path")
def resonance_cmd(source, selector, dot_path):
    """Build the resonance graph and summarize its components."""
    try:
        inst = _load(source)
        face_set = _face_set(inst, selector)
        r = build_resonance_graph(inst.graph, face_set)
        comps = components(r)
        click.echo(f"{inst.name} / {selector}: {r.n_vertices} vertices, "
                   f"{r.n_edges} edges, {len(comps)} component(s)")
        for h in comps:
            click.echo(f"  component {h.component_id}: {h.n_vertices} "
                       f"vertices, {len(h.edges)} edges, "
                       f"dimension {h.dimension}")
        if dot_path:
            with open(dot_path, "w", encoding="utf-8") as fh:
                fh.write(to_dot(r, name=f"{inst.name}"))
            click.echo(f"wrote {dot_path}")
    except ClarCubeError as exc:
        _fail(exc)


@main.command("zz")
@click.argument("source")
@click.option("--faces", "selector", required=True)
def zz_cmd(source, selector):
    """Clar covering polynomial with respect to a face set."""
    try:
        inst = _load(source)
        face_set = _face_set(inst, selector)
        poly = zz_polynomial(inst.graph, face_set)
        click.echo(f"{inst.name} / {selector}: {poly}")
        click.echo(f"coefficients: {list(poly.coefficients)}")
    except ClarCubeError as exc:
        _fail(exc)


@main.command("cubepoly")
@click.argument("source")
@click.option("--faces", "selector", required=True)
def cubepoly_cmd(source, selector):
    """Cube polynomial of the resonance graph."""
    try:
        inst = _load(source)
        face_set = _face_set(inst, selector)
        r = build_resonance_graph(inst.graph, face_set)
        poly = cube_polynomial(r)
        click.echo(f"{inst.name} / {selector}: {poly}")
        click.echo(f"coefficients: {list(poly.coefficients)}")
    except ClarCubeError as exc:
        _fail(exc)


@main.command("check")
@click.argument("source")
@click.option("--faces", "selector", required=True)
@click.option("--allow-full-face-set", is_flag=True,
              help="run in violation-reporting mode when the face set "
                   "is the full face set")
@click.option("--json", "json_path", type=click.Path(), default=None,
              help="also write the JSON report to this path")
@click.option("--figures", "figures_dir", type=click.Path(), default=None,
              help="render summary figures into this directory")
def check_cmd(source, selector, allow_full_face_set, json_path, figures_dir):
    """Full theorem report for one instance and face set."""
    try:
        inst = _load(source)
        face_set = _face_set(inst, selector)
        rep = run_report(inst.graph, face_set,
                         instance_name=inst.name, face_set_name=selector,
                         allow_full_face_set=allow_full_face_set)
    except ClarCubeError as exc:
        _fail(exc)
        return
    text = report_json(rep)
    click.echo(text, nl=False)
    if json_path:
        with open(json_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    if figures_dir:
        from .figures import render_report_figures
        for p in render_report_figures(rep, figures_dir):
            click.echo(f"wrote {p}", err=True)
    sys.exit(EXIT_OK if rep["ok"] else EXIT_VIOLATION)


@main.group("corpus")
def corpus_group():
    """Bundled instances."""


@corpus_group.command("list")
def corpus_list():
    """List bundled instances and their named face sets."""
    for inst in builtin_corpus():
        g = inst.graph
        sets = ", ".join(sorted(inst.face_sets))
        click.echo(f"{inst.name}: {g.n_vertices} vertices, {g.n_edges} "
                   f"edges; face sets: {sets}")


@corpus_group.command("export")
@click.argument("name")
@click.option("--out", "out_path", type=click.Path(), default=None)
def corpus_export(name, out_path):
    """Write a bundled instance as an .emb file."""
    try:
        inst = corpus_instance(name)
    except ClarCubeError as exc:
        _fail(exc)
        return
    text = write_emb(inst.graph, header=f"clarcube corpus instance {name}")
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
        click.echo(f"wrote {out_path}")
    else:
        click.echo(text, nl=False)


@corpus_group.command("run")
@click.argument("names", nargs=-1)
@click.option("--out", "out_dir", type=click.Path(), default=None,
              help="write one JSON report per instance/face set")
@click.option("--csv", "csv_path", type=click.Path(), default=None,
              help="write a delimited summary table")
@click.option("--figures", "figures_dir", type=click.Path(), default=None,
              help="render figures per report")
def corpus_run(names, out_dir, csv_path, figures_dir):
    """Run the full report over bundled instances.

    Proper face sets are asserted; full face sets run in
    violation-reporting mode and are informational.
    """
    instances = builtin_corpus()
    if names:
        instances = tuple(corpus_instance(n) for n in names)
    rows = []
    failed = False
    try:
        for inst in instances:
            for set_name in sorted(inst.face_sets):
                face_set = inst.face_set(set_name)
                rep = run_report(inst.graph, face_set,
                                 instance_name=inst.name,
                                 face_set_name=set_name,
                                 allow_full_face_set=True)
                asserted = face_set.is_proper_subset
                status = "pass" if rep["ok"] else (
                    "violation" if asserted else "hypothesis-violated")
                if asserted and not rep["ok"]:
                    failed = True
                click.echo(f"{inst.name}/{set_name}: {status} "
                           f"(zz={rep['zz']}, cube={rep['cube']})")
                rows.append({
                    "instance": inst.name,
                    "face_set": set_name,
                    "proper": face_set.is_proper_subset,
                    "matchings": rep["matchings"],
                    "resonance_edges": rep["resonance"]["edges"],
                    "components": len(rep["components"]),
                    "zz": " ".join(map(str, rep["zz"])),
                    "cube": " ".join(map(str, rep["cube"])),
                    "equal": rep["equivalence"]["equal"],
                    "bipartite": rep["bipartite"]["ok"],
                    "ok": rep["ok"],
                })
                if out_dir:
                    os.makedirs(out_dir, exist_ok=True)
                    path = os.path.join(out_dir,
                                        f"{inst.name}-{set_name}.json")
                    with open(path, "w", encoding="utf-8") as fh:
                        fh.write(report_json(rep))
                if figures_dir:
                    from .figures import render_report_figures
                    render_report_figures(rep, figures_dir)
    except ClarCubeError as exc:
        _fail(exc)
        return
    if csv_path:
        _write_csv(csv_path, rows)
        click.echo(f"wrote {csv_path}")
    sys.exit(EXIT_VIOLATION if failed else EXIT_OK)


@main.command("hunt")
@click.option("--kind", type=click.Choice(GENERATOR_KINDS), required=True)
@click.option("--max-size", "max_size", default="4",
              help="dimension bound or AxB")
@click.option("--seeds", default="0..9", help="seed range a..b (inclusive)")
@click.option("--csv", "csv_path", type=click.Path(), default=None)
@click.option("--median-limit", default=1500, show_default=True)
def hunt_cmd(kind, max_size, seeds, csv_path, median_limit):
    """Search generated instances for median-graph counterexamples.

    Theorem checks are asserted (a failure exits 1); the median status
    per component is reported as evidence for or against the conjecture,
    with a witness triple on any failure.
    """
    try:
        a, b = (int(t) for t in seeds.split(".."))
    except ValueError:
        _fail(ClarCubeError(f"bad seed range {seeds!r}; expected a..b"))
        return
    size = max_size if "x" in str(max_size) else int(max_size)
    try:
        reports = run_hunt(kind, size, range(a, b + 1),
                           median_limit=median_limit)
    except ClarCubeError as exc:
        _fail(exc)
        return
    rows = []
    failed = False
    median_failures = 0
    for rep in reports:
        if not rep["ok"]:
            failed = True
        for comp in rep["components"]:
            med = comp["median"]["ok"]
            if med is False:
                median_failures += 1
            rows.append({
                "instance": rep["instance"],
                "component": comp["id"],
                "vertices": comp["vertices"],
                "edges": comp["edges"],
                "dimension": comp["dimension"],
                "embedding_ok": comp["embedding"]["ok"],
                "partial_cube": comp["partial_cube"],
                "median": med,
                "median_witness": (" ".join(map(str, comp["median"]["witness"]))
                                   if comp["median"]["witness"] else ""),
                "theorems_ok": rep["ok"],
            })
        status = "ok" if rep["ok"] else "VIOLATION"
        click.echo(f"{rep['instance']}: {len(rep['components'])} "
                   f"component(s), {status}")
    click.echo(f"hunted {len(reports)} instance(s), "
               f"{sum(len(r['components']) for r in reports)} component(s), "
               f"{median_failures} median failure(s)")
    if csv_path:
        _write_csv(csv_path, rows)
        click.echo(f"wrote {csv_path}")
    sys.exit(EXIT_VIOLATION if failed else EXIT_OK)


@main.command("generate")
@click.option("--kind", type=click.Choice(GENERATOR_KINDS), required=True)
@click.option("--size", default="3")
@click.option("--seed", default=0)
@click.option("--out", "out_path", type=click.Path(), default=None)
def generate_cmd(kind, size, seed, out_path):
    """Generate a random instance and print or write it as .emb."""
    try:
        size_arg = size if "x" in str(size) else int(size)
        inst = generate_random(kind, size_arg, seed)
    except ClarCubeError as exc:
        _fail(exc)
        return
    text = write_emb(inst.graph, header=f"generated {inst.name}")
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
        click.echo(f"wrote {out_path}")
    else:
        click.echo(text, nl=False)


def _write_csv(path: str, rows: list[dict]):
    if not rows:
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
        writer.writeheader()
        writer.writerows(rows)


def _fail(exc: Exception):
    click.echo(f"error: {exc}", err=True)
    sys.exit(EXIT_INPUT)


if __name__ == "__main__":
    main()
