"""b-colorings of graphs: exact b-spectra, iris constructions and color descent."""

from .coloring import (
    BReport,
    Coloring,
    MutabilityReport,
    WeakReport,
    b_vertices,
    clean_color,
    is_proper,
    is_weak,
    mutability,
    neighbors_by_color,
    unique_color_witnesses,
    validate,
)
from .descent import (
    DescentStep,
    DescentTrace,
    IrisFallback,
    OracleFallback,
    UniqueMove,
    Verdict,
    WeakMove,
    certify_continuity,
    descend_one,
    reduce_b_vertices,
    unique_move,
    weak_move,
)
from .errors import BContinuityError, CapExceededError, ImpossibleStateError, ParseError, PreconditionError
from .generators import complete, crown, cycle, generate, hypercube, path, petersen, random_girth, random_tree
from .graph import (
    ACYCLIC,
    Graph,
    LayerDecomposition,
    dense_vertices,
    girth,
    has_cycle_of_length,
    layers,
    m_degree,
)
from .io import parse_edge_list, parse_graph6, to_edge_list, to_graph6
from .iris import (
    IrisKind,
    IrisWitness,
    color_from_dilated_iris,
    color_from_iris,
    find_dilated_iris,
    find_iris,
    witness_problems,
)
from .oracle import (
    DEFAULT_CAP,
    SpectrumReport,
    b_chromatic_number,
    b_spectrum,
    chromatic_coloring,
    chromatic_number,
    exists_b_coloring,
)

__version__ = "0.1.0"
