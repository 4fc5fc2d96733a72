"""Information-content metrics over a DAG ontology.

Three per-term metrics:

  gic  -- graph-derived IC: relative drop in the ontology's two-term
          annotation entropy once a term (and hence its ancestors) is
          taken as assigned.
  ric  -- corpus surprisal, -log2 p(t) from propagated frequencies.
  sic  -- descendant-count IC, 1 - log(|desc|+1)/log(|N|).

Entropy H of the ontology is the joint entropy of drawing a two-term
annotation under maximum-entropy selection: the first term x is uniform
over N, the second uniform over Y_x = (N \\ (desc(x) | anc(x))) | {root}.
All entropies are reported in bits.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .dag import popcount_rows, unpack_row
from .errors import DegenerateOntology, EmptyCorpus, TooLargeForOracle

ORACLE_CAP = 2000


@dataclass
class EntropyReport:
    total_bits: float           # H = H(first) + mean of conditional_bits
    first_term_entropy: float   # log2 |N|
    conditional_bits: np.ndarray  # per first term x: log2 |Y_x|
    y_sizes: np.ndarray           # per first term x: |Y_x|


@dataclass
class ICTable:
    metric: str                 # "gic" | "ric" | "sic"
    ontology: object
    raw: np.ndarray             # per term index; NaN where undefined
    normalized: np.ndarray      # raw / max_raw; NaN where undefined
    max_raw: float
    undefined_terms: frozenset  # term ids with no defined value (ric only)

    def raw_of(self, term_id):
        return float(self.raw[self.ontology.index(term_id)])

    def normalized_of(self, term_id):
        return float(self.normalized[self.ontology.index(term_id)])

    def is_defined(self, term_id):
        return term_id not in self.undefined_terms


def _second_term_counts(o):
    # |Y_x| = |N| - |blocked(x)| + 1; root is always blocked and re-added
    return len(o) + 1 - popcount_rows(o.blocked_bits)


def candidate_second_terms(o, x):
    """Y_x: terms selectable after x, i.e. neither ancestor nor descendant
    of x (nor x itself), with the root always re-admitted."""
    i = o.index(x)
    mask = ~unpack_row(o.blocked_bits[i], len(o))
    mask[o.root_index] = True
    return frozenset(o.ids[j] for j in np.flatnonzero(mask))


def ontology_entropy(o):
    """Two-term annotation entropy of the ontology, in bits."""
    n = len(o)
    y_sizes = _second_term_counts(o)
    conditional = np.log2(y_sizes.astype(np.float64))
    first = float(np.log2(n))
    return EntropyReport(
        total_bits=first + float(conditional.sum()) / n,
        first_term_entropy=first,
        conditional_bits=conditional,
        y_sizes=y_sizes,
    )


def ontology_entropy_oracle(o, cap=ORACLE_CAP):
    """Independent check: materialize the full joint distribution
    p(x, y) = 1/|N| * 1/|Y_x| and evaluate -sum p log2 p directly."""
    n = len(o)
    if n > cap:
        raise TooLargeForOracle(n, cap)
    bits = 0.0
    for x in o.ids:
        y_x = candidate_second_terms(o, x)
        p = (1.0 / n) * (1.0 / len(y_x))
        for _ in y_x:
            bits -= p * np.log2(p)
    return float(bits)


def conditional_entropy_given(o, z):
    """Joint entropy of the two-term draw once z is assigned: the first
    term ranges over X_z = (N \\ anc(z)) | {root}, the second over
    Y_xz = (N \\ (desc(x) | anc(x) | anc(z))) | {root}."""
    return _conditional_entropy_index(o, o.index(z))


def _conditional_entropy_index(o, zi, buf=None, cnt=None):
    n = len(o)
    if buf is None:
        buf = np.empty_like(o.blocked_bits)
        cnt = np.empty_like(buf)
    np.bitwise_or(o.blocked_bits, o.anc_bits[zi], out=buf)
    np.bitwise_count(buf, out=cnt)
    y_sizes = n + 1 - cnt.sum(axis=1, dtype=np.int64)
    logs = np.log2(y_sizes.astype(np.float64))

    anc_mask = unpack_row(o.anc_bits[zi], n)
    x_count = n - int(anc_mask.sum()) + 1
    # X_z = complement of anc(z), plus the root (always an ancestor of z)
    total = float(logs.sum() - logs[anc_mask].sum() + logs[o.root_index])
    return float(np.log2(x_count)) + total / x_count


def conditional_entropies_all(o, workers=1):
    """H(X_z, Y_xz | z) for every z, deterministic across worker counts.

    Workers split the term range into contiguous chunks and write to
    disjoint slices of the output; the ontology is read-only shared.
    """
    n = len(o)
    out = np.empty(n, dtype=np.float64)

    def run(lo, hi):
        buf = np.empty_like(o.blocked_bits)
        cnt = np.empty_like(buf)
        for zi in range(lo, hi):
            out[zi] = _conditional_entropy_index(o, zi, buf, cnt)

    if workers <= 1 or n < 2 * workers:
        run(0, n)
    else:
        bounds = np.linspace(0, n, workers + 1).astype(int)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(run, bounds[k], bounds[k + 1])
                       for k in range(workers)]
            for f in futures:
                f.result()
    return out


def _table(metric, o, raw, undefined=frozenset()):
    defined = ~np.isnan(raw)
    max_raw = float(raw[defined].max())
    normalized = raw / max_raw if max_raw != 0 else raw.copy()
    return ICTable(
        metric=metric,
        ontology=o,
        raw=raw,
        normalized=normalized,
        max_raw=max_raw,
        undefined_terms=frozenset(undefined),
    )


def gic(o, workers=1):
    """Graph-derived IC: gic(z) = (H - H(.|z)) / H, max-normalized."""
    if len(o) < 2:
        raise DegenerateOntology()
    h = ontology_entropy(o).total_bits
    cond = conditional_entropies_all(o, workers=workers)
    raw = (h - cond) / h
    raw[o.root_index] = 0.0  # exact; X_root = N and Y_x,root = Y_x
    return _table("gic", o, raw)


def sic(o):
    """Descendant-count IC: 1 - log(|desc|+1)/log(|N|) (base-invariant)."""
    if len(o) < 2:
        raise DegenerateOntology()
    raw = 1.0 - np.log(o.desc_counts + 1.0) / np.log(float(len(o)))
    return _table("sic", o, raw)


def ric(o, corpus):
    """Corpus surprisal IC: -log2 p(t); terms with p = 0 are undefined
    and excluded from normalization."""
    if corpus.total <= 0:
        raise EmptyCorpus()
    p = corpus.propagated_count.astype(np.float64) / corpus.total
    raw = np.full(len(o), np.nan)
    defined = p > 0
    raw[defined] = -np.log2(p[defined]) + 0.0  # avoid -0.0 at the root
    undefined = {o.ids[i] for i in np.flatnonzero(~defined)}
    return _table("ric", o, raw, undefined)
