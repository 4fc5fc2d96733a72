"""Gene -> term annotation corpora and propagated term frequencies.

Supports a 2-column TSV and a GAF 2.x subset (column 2 = object id,
column 5 = term id). Term probabilities follow subsumption: a gene
annotated to t counts toward t and every ancestor of t, at most once
per gene.
"""

import logging
from dataclasses import dataclass

import numpy as np

from .dag import unpack_row
from .errors import EmptyCorpus, MalformedLine, UnknownFormat, UnknownTerm

log = logging.getLogger(__name__)


def parse_annotations(stream, format="tsv"):
    """Parse raw (gene id, term id) pairs; duplicates preserved as given."""
    if format == "tsv":
        return _parse_tsv(stream)
    if format == "gaf":
        return _parse_gaf(stream)
    raise UnknownFormat(format)


def _parse_tsv(stream):
    pairs = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.rstrip("\n")
        if not line:
            continue
        cols = line.split("\t")
        if len(cols) != 2 or not cols[0] or not cols[1]:
            raise MalformedLine(lineno, f"expected 2 tab-separated columns, got {len(cols)}")
        pairs.append((cols[0], cols[1]))
    return pairs


def _parse_gaf(stream):
    pairs = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.rstrip("\n")
        if not line or line.startswith("!"):
            continue
        cols = line.split("\t")
        if len(cols) < 5 or not cols[1] or not cols[4]:
            raise MalformedLine(lineno, f"GAF line needs at least 5 columns, got {len(cols)}")
        pairs.append((cols[1], cols[4]))
    return pairs


@dataclass
class AnnotationCorpus:
    ontology: object
    gene_terms: dict            # gene id -> frozenset of term ids (direct, retained)
    direct_count: np.ndarray    # per term index: genes directly annotated to it
    propagated_count: np.ndarray  # per term index: genes annotating it or a descendant
    total: int                  # genes (or events, see count_events) retained
    dropped_unknown: int        # pairs whose term is absent from the ontology
    dropped_shallow: int        # pairs filtered by min_depth

    def term_probability(self, term_id):
        """Propagated frequency p(t) in [0, 1]; 0 for never-annotated terms."""
        i = self.ontology.index(term_id)
        return float(self.propagated_count[i]) / self.total


def build_corpus(pairs, o, min_depth=0, count_events=False):
    """Build an AnnotationCorpus over ontology o.

    Pairs with unknown terms are dropped (tallied); pairs whose term
    sits shallower than min_depth are dropped before propagation.
    count_events switches from gene-level counting (each gene adds at
    most 1 to each term) to annotation-event counting; gene-level is
    the default and the semantics every metric here assumes.
    """
    n = len(o)
    by_gene = {}
    dropped_unknown = 0
    dropped_shallow = 0
    retained_events = []
    for gene, term in pairs:
        if term not in o:
            dropped_unknown += 1
            continue
        if o.min_depth(term) < min_depth:
            dropped_shallow += 1
            continue
        by_gene.setdefault(gene, set()).add(term)
        retained_events.append((gene, term))
    if dropped_unknown:
        log.warning("dropped %d annotation pairs with unknown terms", dropped_unknown)
    if not by_gene:
        raise EmptyCorpus()

    direct = np.zeros(n, dtype=np.int64)
    propagated = np.zeros(n, dtype=np.int64)
    w = o.anc_bits.shape[1]

    if count_events:
        for _, term in retained_events:
            i = o.index(term)
            direct[i] += 1
            propagated += unpack_row(o.anc_bits[i], n)
        total = len(retained_events)
    else:
        scratch = np.empty(w, dtype=np.uint64)
        for terms in by_gene.values():
            scratch[:] = 0
            for term in terms:
                i = o.index(term)
                direct[i] += 1
                scratch |= o.anc_bits[i]
            propagated += unpack_row(scratch, n)
        total = len(by_gene)

    return AnnotationCorpus(
        ontology=o,
        gene_terms={g: frozenset(ts) for g, ts in by_gene.items()},
        direct_count=direct,
        propagated_count=propagated,
        total=total,
        dropped_unknown=dropped_unknown,
        dropped_shallow=dropped_shallow,
    )


def term_probability(c, t):
    return c.term_probability(t)
