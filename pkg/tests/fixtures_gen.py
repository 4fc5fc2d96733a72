"""Regenerates the static fixtures under tests/data/.

Run as a script from the repo root:  python3 tests/fixtures_gen.py

The ontology/annotation/bitscore files are authored here; the expected
benchmark summary is NOT (bench_oracle.py produces that independently).
"""

import json
import os
import random

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")

NAMESPACES = {
    # namespace -> (prefix, level sizes starting at the root level)
    "molecular_function": ("MF", [1, 5, 10, 14, 14, 10, 6]),
    "biological_process": ("BP", [1, 6, 12, 14, 12, 8]),
    "cellular_component": ("CC", [1, 5, 9, 11, 9]),
}
OBSOLETE = ["BP:1000049", "CC:2000030"]  # leaf-level ids, so no orphaned children
PART_OF_COUNT = {"biological_process": 10, "cellular_component": 5}


def _terms(rng):
    """Returns list of dicts: id, name, namespace, level, is_a, part_of."""
    base = {"MF": 0, "BP": 1000000, "CC": 2000000}
    all_terms = []
    for ns, (prefix, sizes) in NAMESPACES.items():
        levels = []
        counter = base[prefix]
        for lvl, size in enumerate(sizes):
            row = []
            for _ in range(size):
                tid = f"{prefix}:{counter:07d}"
                counter += 1
                term = {"id": tid, "name": f"{ns.split('_')[0]} term {counter}",
                        "namespace": ns, "level": lvl, "is_a": [], "part_of": []}
                if lvl > 0:
                    n_parents = 1 if rng.random() < 0.7 or lvl == 1 else 2
                    term["is_a"] = [p["id"] for p in rng.sample(levels[lvl - 1],
                                                                min(n_parents, len(levels[lvl - 1])))]
                row.append(term)
                all_terms.append(term)
            levels.append(row)
        # extra part_of edges between consecutive levels
        for _ in range(PART_OF_COUNT.get(ns, 0)):
            lvl = rng.randrange(1, len(sizes))
            child = rng.choice(levels[lvl])
            parent = rng.choice(levels[lvl - 1])
            if parent["id"] not in child["part_of"] and parent["id"] not in child["is_a"]:
                child["part_of"].append(parent["id"])
    return all_terms


def write_obo(terms, path):
    lines = ["format-version: 1.2", "ontology: fixture", ""]
    manifest = {}
    for t in terms:
        obsolete = t["id"] in OBSOLETE
        ns = t["namespace"]
        m = manifest.setdefault(ns, {"terms": 0, "is_a": 0, "part_of": 0, "obsolete": 0})
        if obsolete:
            m["obsolete"] += 1
        else:
            m["terms"] += 1
            m["is_a"] += len(t["is_a"])
            m["part_of"] += len(t["part_of"])
        lines.append("[Term]")
        lines.append(f"id: {t['id']}")
        lines.append(f"name: {t['name']}")
        lines.append(f"namespace: {ns}")
        for i, p in enumerate(t["is_a"]):
            suffix = f" ! parent {i}" if i % 3 == 0 else ""
            lines.append(f"is_a: {p}{suffix}")
        for p in t["part_of"]:
            lines.append(f"relationship: part_of {p}")
        if obsolete:
            lines.append("is_obsolete: true")
        lines.append("")
    lines.append("[Typedef]")
    lines.append("id: part_of")
    lines.append("name: part of")
    lines.append("")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines))
    return manifest


def make_annotations(rng, mf_terms):
    """50 genes in 10 families; families share a deep home term."""
    by_level = {}
    for t in mf_terms:
        by_level.setdefault(t["level"], []).append(t)
    deep = by_level[5] + by_level[6]
    homes = rng.sample(deep, 10)
    genes = {}
    families = {}
    for i in range(50):
        gene = f"g{i + 1:03d}"
        fam = i // 5
        families[gene] = fam
        home = homes[fam]
        terms = {home["id"]}
        if rng.random() < 0.6:  # an ancestor partway up the home path
            terms.add(rng.choice(by_level[rng.randrange(2, 5)])["id"])
        if rng.random() < 0.3:  # unrelated noise term
            terms.add(rng.choice(by_level[rng.randrange(2, 7)])["id"])
        if rng.random() < 0.1:  # shallow term, filtered by min_depth=2
            terms.add(rng.choice(by_level[1])["id"])
        genes[gene] = sorted(terms)
    return genes, families, {h["id"]: lvl for lvl, h in enumerate(homes)}


def shared_depth(genes, depths_by_term, anc, g1, g2):
    best = 0
    for ta in genes[g1]:
        for tb in genes[g2]:
            common = anc[ta] & anc[tb]
            best = max(best, max(depths_by_term[t] for t in common))
    return best


def make_bitscores(rng, genes, families, anc, depths_by_term, path):
    gene_ids = sorted(genes)
    self_score = {g: 150.0 + 3 * i for i, g in enumerate(gene_ids)}
    lines = [f"{g}\t{g}\t{self_score[g]:.1f}" for g in gene_ids]
    pairs = [(a, b) for i, a in enumerate(gene_ids) for b in gene_ids[i + 1:]]
    identical = set(rng.sample([p for p in pairs if families[p[0]] == families[p[1]]], 6))
    missing_reverse = set(rng.sample(sorted(set(pairs) - identical), 5))
    for a, b in pairs:
        s = self_score[a] + self_score[b]
        if (a, b) in identical:
            x, y = self_score[a], self_score[b]
        else:
            depth = shared_depth(genes, depths_by_term, anc, a, b)
            target = min(0.97, max(0.02, 0.08 + 0.135 * depth + rng.uniform(-0.02, 0.02)))
            x = round(0.55 * target * s, 1)
            y = round(target * s - x, 1)
        lines.append(f"{a}\t{b}\t{x:.1f}")
        if (a, b) not in missing_reverse:
            lines.append(f"{b}\t{a}\t{y:.1f}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    return len(identical), len(missing_reverse)


def make_gaf(genes, path):
    """GAF 2.1-style file over a slice of the corpus (17 columns)."""
    rows = ["!gaf-version: 2.1", "! fixture annotations"]
    pairs = []
    for gene in sorted(genes)[:8]:
        for term in genes[gene]:
            cols = ["UniProtKB", gene, gene.upper(), "", term, "PMID:0000001",
                    "IEA", "", "F", f"protein {gene}", "", "protein", "taxon:9606",
                    "20110701", "UniProt", "", ""]
            rows.append("\t".join(cols))
            pairs.append([gene, term])
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(rows) + "\n")
    return pairs


def main():
    os.makedirs(DATA_DIR, exist_ok=True)
    rng = random.Random(42)
    terms = _terms(rng)
    manifest = write_obo(terms, os.path.join(DATA_DIR, "go_subset.obo"))

    mf_terms = [t for t in terms if t["namespace"] == "molecular_function"]
    # reflexive ancestors along is_a within MF, plus min depth from the root
    parent = {t["id"]: t["is_a"] for t in mf_terms}
    anc = {}

    def anc_of(tid):
        if tid not in anc:
            s = {tid}
            for p in parent[tid]:
                s |= anc_of(p)
            anc[tid] = s
        return anc[tid]

    for t in mf_terms:
        anc_of(t["id"])
    depths = {t["id"]: t["level"] for t in mf_terms}  # levels are min depths here

    genes, families, _ = make_annotations(rng, mf_terms)
    with open(os.path.join(DATA_DIR, "annotations.tsv"), "w", encoding="utf-8") as fh:
        for gene in sorted(genes):
            for term in genes[gene]:
                fh.write(f"{gene}\t{term}\n")

    n_identical, n_missing = make_bitscores(
        rng, genes, families, anc, depths,
        os.path.join(DATA_DIR, "bitscores.tsv"))

    gaf_pairs = make_gaf(genes, os.path.join(DATA_DIR, "mini.gaf"))

    manifest["annotations"] = {
        "genes": len(genes),
        "pairs": sum(len(v) for v in genes.values()),
        "identical_scored_pairs": n_identical,
        "missing_reverse_pairs": n_missing,
    }
    manifest["gaf"] = {"pairs": gaf_pairs}
    with open(os.path.join(DATA_DIR, "manifest.json"), "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print("fixtures written to", DATA_DIR)


if __name__ == "__main__":
    main()
