"""Exact small-n workbench for generalized Turán numbers ex(n, H, F)
where H or F is a matching."""

from .canon import canonical, canonical_form, canonical_graph6, is_isomorphic
from .constructions import (
    CliqueUnion, Complement, Complete, Cycle, DisjointUnion, Empty, FaudreeSchelpG, Friendship,
    Join, Matching, PartialBlowup, Path, SplitH, Star, TuranGraph, build, padded, partial_blowup,
)
from .counting import (
    MatchingProfile, automorphism_count, contains, count_copies, embedding_count, matching_profile,
)
from .enumeration import ExtremalResult, enumerate_graphs, ex_brute, ex_over_family, graph_classes
from .errors import GenTuranError, InternalInconsistency, InvalidParams, InvalidSpec, MalformedEncoding, SizeCap
from .expr import parse_expr, parse_graph_arg
from .graph import Graph, parse_graph6, serialize_graph6
from .structure import (
    BergeTuttePartition, StructureParams, b_param_blowup, berge_tutte_partitions, berge_tutte_witness,
    deficiency, max_matching, matching_number, structure_params,
)
from .theorems import THEOREM_IDS, VerificationReport, run_verification

__version__ = "0.1.0"
