"""Line-model encodings of cographs with a number of orders bounded by the factorial rank."""

from .encoder import encode
from .graphs import (
    PARALLEL,
    SERIES,
    Cotree,
    Graph,
    NotCographError,
    ParseError,
    build_cotree,
    cotree_to_graph,
    format_cotree,
    gen_binary_cotree,
    gen_double_factorial,
    gen_random_cotree,
    parse_cotree,
    parse_edge_list,
)
from .models import (
    ContiguityModel,
    Interval,
    LineModel,
    closed_to_open,
    concat_disjoint_union,
    open_to_closed,
    query_closed_neighborhood,
    restrict_model,
    verify_contiguity_model,
    verify_line_model,
)
from .oracle import bruteforce_contiguity, bruteforce_linearity
from .rank import contains_double_factorial_minor, factorial_rank

__version__ = "0.1.0"
