"""dagic: DAG ontology entropy, information content, and semantic
similarity benchmarking."""

from .annotations import AnnotationCorpus, build_corpus, parse_annotations, term_probability
from .benchmark import (
    BenchmarkReport,
    Bin,
    load_bitscores,
    ols_r2,
    rrbs,
    run_benchmark,
)
from .dag import Ontology, ancestors, build_ontology, descendants, min_depth
from .metrics import (
    EntropyReport,
    ICTable,
    candidate_second_terms,
    conditional_entropy_given,
    gic,
    ontology_entropy,
    ontology_entropy_oracle,
    ric,
    sic,
)
from .obo import OboTerm, format_obo, load_obo, parse_obo, to_graph
from .semsim import GenePairSim, gene_similarity, term_similarity

__version__ = "0.1.0"
