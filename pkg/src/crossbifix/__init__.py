"""Cross-bifix-free codes over Z_q: construction, verification, expansion
and enumeration.

A set of equal-length words is cross-bifix-free when no proper prefix of any
member equals a proper suffix of any member. The package builds the classic
leading-run codes, decides expandability by exhaustive scan (compiled kernel
with a pure-Python fallback), grows expandable codes to non-expandable ones,
and cross-checks closed-form counts against enumeration.
"""

from .codes import (
    DEFAULT_GUARD,
    Code,
    ExpandabilityVerdict,
    OverlapDirection,
    OverlapWitness,
    check_guard,
    code_json_dict,
    expansion_candidates,
    greedy_saturate,
    is_cross_bifix_free,
    is_non_expandable,
    overlap_witness,
    parse_code,
    render_code_json,
    render_code_text,
    suffix_class_union_equality,
)
from .constructions import (
    ExpansionParams,
    build_expanded,
    build_s,
    build_s_classic,
    build_u,
    build_u_via_v_rule,
    build_v,
    clear_u_cache,
    expansion_witness,
    u_suffix_class,
    v_suffix_class,
)
from .enumeration import (
    CountReport,
    TABLE1_GOLDEN,
    TABLE2_GOLDEN,
    TableCell,
    TablesReport,
    count_expanded,
    count_u,
    count_u_closed,
    count_u_enumerate,
    render_tables_csv,
    render_tables_json,
    render_tables_markdown,
    reproduce_tables,
    size_s_closed,
    size_v_closed,
)
from .errors import CbfError, GuardExceededError, InvalidInputError, NotApplicableError
from .kernel import IMPLEMENTATION, decode_word, encode_word
from .words import (
    Bipartition,
    Word,
    format_word,
    is_bifix_free,
    is_block_free,
    is_code_free,
    parse_word,
    prefixes,
    suffixes,
)

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "CbfError",
    "Code",
    "CountReport",
    "DEFAULT_GUARD",
    "ExpandabilityVerdict",
    "ExpansionParams",
    "GuardExceededError",
    "IMPLEMENTATION",
    "InvalidInputError",
    "NotApplicableError",
    "OverlapDirection",
    "OverlapWitness",
    "TABLE1_GOLDEN",
    "TABLE2_GOLDEN",
    "TableCell",
    "TablesReport",
    "Word",
    "build_expanded",
    "build_s",
    "build_s_classic",
    "build_u",
    "build_u_via_v_rule",
    "build_v",
    "check_guard",
    "clear_u_cache",
    "code_json_dict",
    "count_expanded",
    "count_u",
    "count_u_closed",
    "count_u_enumerate",
    "decode_word",
    "encode_word",
    "expansion_candidates",
    "expansion_witness",
    "format_word",
    "greedy_saturate",
    "is_bifix_free",
    "is_block_free",
    "is_code_free",
    "is_cross_bifix_free",
    "is_non_expandable",
    "overlap_witness",
    "parse_code",
    "parse_word",
    "prefixes",
    "render_code_json",
    "render_code_text",
    "render_tables_csv",
    "render_tables_json",
    "render_tables_markdown",
    "reproduce_tables",
    "size_s_closed",
    "size_v_closed",
    "suffix_class_union_equality",
    "suffixes",
    "u_suffix_class",
    "v_suffix_class",
]
