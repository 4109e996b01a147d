"""Aggregated theorem reports over one instance and face set.

``run_report`` runs every structural check and returns a plain dict
that serializes to deterministic JSON: face census, matchings,
per-component resonance structure with embedding verification and
distance-based statuses, both polynomials with the bijection evidence,
the 4-cycle structure, and the face-subgraph restriction check.
"""

from __future__ import annotations

import json
import random

from .corpus import CorpusInstance, generate_random, random_proper_face_set
from .cubes import (
    component_adjacency,
    component_face_subgraph,
    compute_labeling,
    distance_matrix,
    is_isometric_labeling,
    is_median_graph,
    is_partial_cube,
    verify_induced_embedding,
)
from .embedded import EmbeddedGraph, EvenFaceSet, euler_genus
from .errors import (
    DisconnectedGraphError,
    HypothesisViolatedError,
    NonBipartiteQuotientError,
    SizeBoundError,
)
from .polynomials import check_4cycle_lemma, check_equivalence
from .resonance import (
    build_resonance_graph,
    check_cycle_face_parity,
    components,
    delete_class_components,
    fundamental_cycles,
    is_bipartite,
    quotient_graph,
)

SCHEMA_VERSION = 1


def run_report(g: EmbeddedGraph, face_set: EvenFaceSet,
               instance_name: str = "", face_set_name: str = "",
               allow_full_face_set: bool = False,
               distance_limit: int = 4000,
               median_limit: int = 1500) -> dict:
    """Run every check for one (graph, face set) pair.

    With a full face set the theorem hypothesis fails; unless
    ``allow_full_face_set`` is passed this raises
    :class:`HypothesisViolatedError`. In violation-reporting mode the
    checks still run and failures are collected instead of asserted.
    """
    if not face_set.is_proper_subset and not allow_full_face_set:
        raise HypothesisViolatedError(
            "face set equals the full face set; pass allow_full_face_set "
            "to run in violation-reporting mode")

    report: dict = {"schema": SCHEMA_VERSION}
    if instance_name:
        report["instance"] = instance_name
    report["face_set"] = {
        "name": face_set_name or None,
        "ids": sorted(face_set.face_ids),
        "proper": face_set.is_proper_subset,
    }
    report["hypothesis_ok"] = face_set.is_proper_subset
    violations: list[str] = []

    try:
        genus = euler_genus(g)
    except DisconnectedGraphError:
        genus = None
    report["graph"] = {
        "vertices": g.n_vertices,
        "edges": g.n_edges,
        "euler_genus": genus,
        "faces": [
            {"id": f.face_id, "length": len(f), "cycle": f.is_cycle,
             "even": f.is_even}
            for f in g.faces()
        ],
    }

    r = build_resonance_graph(g, face_set)
    report["matchings"] = r.n_vertices
    report["resonance"] = {"vertices": r.n_vertices, "edges": r.n_edges}

    bip, odd_cycle = is_bipartite(r)
    report["bipartite"] = {"ok": bip,
                           "odd_cycle": list(odd_cycle) if odd_cycle else None}
    if not bip:
        violations.append("resonance graph is not bipartite")

    comp_reports = []
    for h in components(r):
        comp_reports.append(_component_report(
            g, h, violations, distance_limit, median_limit))
    report["components"] = comp_reports

    eq = check_equivalence(g, face_set, r, allow_full_face_set=True)
    report["zz"] = list(eq.zz.coefficients)
    report["cube"] = list(eq.cube.coefficients)
    report["equivalence"] = {
        "equal": eq.equal,
        "degrees": [
            {"k": d.k, "covers": d.n_covers, "cubes": d.n_cubes,
             "bijection_ok": d.ok}
            for d in eq.degrees
        ],
    }
    if not eq.equal:
        violations.append("zz polynomial differs from cube polynomial")
    elif not all(d.ok for d in eq.degrees):
        violations.append("cover-to-cube map is not a bijection")

    fc = check_4cycle_lemma(g, face_set, r)
    report["four_cycles"] = {
        "count": fc.n_cycles,
        "ok": fc.ok,
        "violations": [list(c) for c in fc.violations],
    }
    if not fc.ok:
        violations.append("a 4-cycle violates the disjoint-faces property")

    report["violations"] = violations
    report["ok"] = face_set.is_proper_subset and not violations
    return report


def _component_report(g, h, violations: list[str],
                      distance_limit: int, median_limit: int) -> dict:
    out: dict = {
        "id": h.component_id,
        "vertices": h.n_vertices,
        "edges": len(h.edges),
        "dimension": h.dimension,
        "face_list": list(h.face_list),
    }

    # Lemma on class deletion: endpoints of every class edge separate
    separation_ok = True
    for fid in h.face_list:
        parts = delete_class_components(h, fid)
        part_of = {v: i for i, part in enumerate(parts) for v in part}
        for u, v in h.face_classes[fid]:
            if part_of[u] == part_of[v]:
                separation_ok = False
    out["class_separation_ok"] = separation_ok
    if not separation_ok:
        violations.append(
            f"component {h.component_id}: a class edge fails to separate")

    # quotient bipartiteness and the induced-cube labeling
    try:
        for fid in h.face_list:
            quotient_graph(h, fid)
        quotients_ok = True
    except NonBipartiteQuotientError:
        quotients_ok = False
    out["quotients_bipartite"] = quotients_ok
    if not quotients_ok:
        violations.append(
            f"component {h.component_id}: a quotient graph is not bipartite")

    parity_ok = True
    for cycle in fundamental_cycles(h):
        counts = check_cycle_face_parity(h.resonance, cycle)
        if any(c % 2 for c in counts.values()):
            parity_ok = False
    out["cycle_parity_ok"] = parity_ok
    if not parity_ok:
        violations.append(
            f"component {h.component_id}: odd face count on a cycle")

    dist = None
    if h.n_vertices <= distance_limit:
        adj = component_adjacency(h)
        dist = distance_matrix(h.n_vertices, adj, sorted(h.vertex_ids))

    if quotients_ok:
        lab = compute_labeling(h)
        emb = verify_induced_embedding(h, lab)
        out["embedding"] = {
            "injective": emb.injective,
            "edges_one_bit": emb.edges_one_bit,
            "induced": emb.induced,
            "ok": emb.ok,
            "detail": emb.detail,
        }
        if not emb.ok:
            violations.append(
                f"component {h.component_id}: induced embedding fails "
                f"({emb.detail})")
        if dist is not None:
            iso = is_isometric_labeling(h, lab, dist=dist)
            out["isometric"] = {
                "ok": iso.is_isometric,
                "witness": list(iso.witness) if iso.witness else None,
                "distance": iso.witness_distance,
                "hamming": iso.witness_hamming,
                "extreme_witness": (list(iso.extreme_witness)
                                    if iso.extreme_witness else None),
                "extreme_distance": iso.extreme_distance,
                "extreme_hamming": iso.extreme_hamming,
            }
        else:
            out["isometric"] = {"ok": None, "skipped": "size limit"}
    else:
        out["embedding"] = {"injective": None, "edges_one_bit": None,
                            "induced": None, "ok": None,
                            "detail": "labeling undefined: quotient "
                                      "not bipartite"}
        out["isometric"] = {"ok": None, "skipped": "labeling undefined"}

    if dist is not None:
        out["partial_cube"] = is_partial_cube(h, dist=dist)
    else:
        out["partial_cube"] = None
    med, med_witness = is_median_graph(h, size_limit=median_limit,
                                       dist=dist,
                                       pc_hint=out["partial_cube"])
    out["median"] = {
        "ok": med,
        "witness": list(med_witness) if med_witness else None,
    }

    fsg = component_face_subgraph(g, h)
    out["face_subgraph"] = {
        "vertices": len(fsg.vertices),
        "edges": len(fsg.edge_ids),
        "restriction_ok": fsg.restriction_ok,
        "failing_matching": fsg.failing_matching,
    }
    if not fsg.restriction_ok:
        violations.append(
            f"component {h.component_id}: matching restriction to the "
            f"face subgraph fails")

    # consistency among the three testers: median => partial cube =>
    # induced embedding verified
    emb_ok = out["embedding"]["ok"]
    pc = out["partial_cube"]
    if med is True and pc is False:
        violations.append(
            f"component {h.component_id}: median but not a partial cube")
    if pc is True and emb_ok is False:
        violations.append(
            f"component {h.component_id}: partial cube but embedding fails")
    return out


def run_instance_report(inst: CorpusInstance, face_set_name: str,
                        allow_full_face_set: bool = False, **kwargs) -> dict:
    face_set = inst.face_set(face_set_name)
    return run_report(inst.graph, face_set,
                      instance_name=inst.name,
                      face_set_name=face_set_name,
                      allow_full_face_set=allow_full_face_set, **kwargs)


def report_json(report: dict) -> str:
    """Deterministic JSON serialization of a report."""
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def hunt(kind: str, max_size, seeds, p_keep: float = 0.7,
         distance_limit: int = 4000, median_limit: int = 1500) -> list[dict]:
    """Run the full check over generated instances with random face sets.

    Returns one report per instance that fits the size bound; each gets
    a deterministic face set drawn from its own seeded generator. Used
    to search for median-graph counterexamples: theorem checks are
    asserted by the caller, the median status is evidence only.
    """
    out = []
    for seed in seeds:
        try:
            inst = generate_random(kind, max_size, seed)
        except SizeBoundError:
            continue
        rng = random.Random(f"face-set:{inst.name}")
        face_set = random_proper_face_set(inst.graph, rng, p_keep=p_keep)
        rep = run_report(inst.graph, face_set,
                         instance_name=inst.name,
                         face_set_name="random",
                         distance_limit=distance_limit,
                         median_limit=median_limit)
        out.append(rep)
    return out
