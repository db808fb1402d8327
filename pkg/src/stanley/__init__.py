"""Stanley symmetric functions, Schubert polynomials, and their bijections."""

from .bijection import gamma, gamma_inverse, word_of_pipedream
from .permutations import (
    all_permutations,
    code_partition,
    identity,
    inverse,
    is_dominant,
    is_grassmannian,
    lehmer_code,
    length,
    longest_element,
    reduced_words,
)
from .pipedreams import (
    BumplessPipedream,
    droop,
    enumerate_all,
    is_eg,
    parse,
    render,
    reverse_droop,
    rothe,
    rothe_diagram,
    weight,
)
from .polynomials import (
    SparsePoly,
    divided_difference,
    double_schubert,
    eg_coeffs,
    schubert_bjs,
    schur_expand,
    schur_poly,
    stanley_truncated,
)
from .tableaux import (
    column_reading_word,
    eg_insert,
    enumerate_reduced_word_tableaux,
    format_tableau,
    insertion_tableau,
    is_reduced_word_tableau,
    parse_tableau,
    shape,
)
from .trees import eg_tree, leaf_path, ls_tree, maximal_transition, mls_tree
from .words import (
    Word,
    evaluate,
    format_word,
    is_reduced,
    little_map,
    little_map_inverse,
    parse_word,
    word,
)

__all__ = [
    "BumplessPipedream",
    "SparsePoly",
    "Word",
    "all_permutations",
    "code_partition",
    "column_reading_word",
    "divided_difference",
    "double_schubert",
    "droop",
    "eg_coeffs",
    "eg_insert",
    "eg_tree",
    "enumerate_all",
    "enumerate_reduced_word_tableaux",
    "evaluate",
    "format_tableau",
    "format_word",
    "gamma",
    "gamma_inverse",
    "identity",
    "insertion_tableau",
    "inverse",
    "is_dominant",
    "is_eg",
    "is_grassmannian",
    "is_reduced",
    "is_reduced_word_tableau",
    "leaf_path",
    "lehmer_code",
    "length",
    "little_map",
    "little_map_inverse",
    "longest_element",
    "ls_tree",
    "maximal_transition",
    "mls_tree",
    "parse",
    "parse_tableau",
    "parse_word",
    "reduced_words",
    "render",
    "reverse_droop",
    "rothe",
    "rothe_diagram",
    "schubert_bjs",
    "schur_expand",
    "schur_poly",
    "shape",
    "stanley_truncated",
    "weight",
    "word",
    "word_of_pipedream",
]
