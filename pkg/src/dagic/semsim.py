"""Resnik-style similarity: the maximally informative common ancestor
(MICA) of two terms scores a term pair; a gene pair scores the best
term pair across the two annotation sets (SimMax)."""

from dataclasses import dataclass

import numpy as np

from .dag import unpack_row
from .errors import EmptyTermSet, NoDefinedCommonAncestor, UnknownGene


@dataclass
class GenePairSim:
    gene_a: str
    gene_b: str
    simmax: float
    best_pair: tuple  # (term_a, term_b, mica)


def term_similarity(o, ic, t1, t2):
    """Max normalized IC over the common (reflexive) ancestors of t1 and
    t2, skipping undefined terms. Returns (value, mica); ties broken by
    lexicographically smallest term id."""
    i1, i2 = o.index(t1), o.index(t2)
    common = unpack_row(o.anc_bits[i1] & o.anc_bits[i2], len(o))
    best_val = -1.0
    best_term = None
    for j in np.flatnonzero(common):
        term = o.ids[j]
        if term in ic.undefined_terms:
            continue
        val = float(ic.normalized[j])
        if val > best_val:  # ids scanned in ascending order, ties keep first
            best_val = val
            best_term = term
    if best_term is None:
        raise NoDefinedCommonAncestor(t1, t2)
    return best_val, best_term


def gene_similarity(o, ic, corpus, g1, g2):
    """SimMax over all term pairs from the two genes' annotation sets."""
    terms1 = _gene_terms(corpus, g1)
    terms2 = _gene_terms(corpus, g2)

    best_val = -1.0
    best_key = None  # (sorted term pair, mica) for symmetric tie-breaking
    for ta in terms1:
        for tb in terms2:
            val, mica = term_similarity(o, ic, ta, tb)
            key = (tuple(sorted((ta, tb))), mica)
            if val > best_val or (val == best_val and key < best_key):
                best_val = val
                best_key = key
    (term_a, term_b), mica = best_key
    return GenePairSim(gene_a=g1, gene_b=g2, simmax=best_val,
                       best_pair=(term_a, term_b, mica))


def _gene_terms(corpus, gene):
    if gene not in corpus.gene_terms:
        raise UnknownGene(gene)
    terms = sorted(corpus.gene_terms[gene])
    if not terms:
        raise EmptyTermSet(gene)
    return terms
