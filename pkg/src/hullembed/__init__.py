"""Hull dimensions, congruence canonical forms and shortest hull embeddings of linear codes."""

from hullembed.codes import CodeType, LinearCode, classify, hull_basis, hull_dimension, minimum_distance
from hullembed.congruence import CanonicalForm, CongruenceWitness, FormTag, canonize
from hullembed.embedding import (
    EmbeddingResult,
    embed,
    embed_with_columns,
    existence_pad,
    shortest_length,
    verify_embedding,
)
from hullembed.field import GF, FieldElement, get_field
from hullembed.matrix import InnerKind, Matrix, gram, parse_matrix, format_matrix, rank

__all__ = [
    "GF", "FieldElement", "get_field",
    "InnerKind", "Matrix", "gram", "rank", "parse_matrix", "format_matrix",
    "CanonicalForm", "CongruenceWitness", "FormTag", "canonize",
    "CodeType", "LinearCode", "classify", "hull_basis", "hull_dimension", "minimum_distance",
    "EmbeddingResult", "embed", "embed_with_columns", "existence_pad", "shortest_length", "verify_embedding",
]
