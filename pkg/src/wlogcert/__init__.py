"""Word labeled oriented graphs, cyclic presentations and DR certificates."""

from .certifier import Certificate, certify, check_hypotheses
from .cyclic import CyclicParams, Theorem2Params, build_C, build_Pnw, theorem2_check
from .wlog import (
    Presentation,
    WlogEdge,
    WlogGraph,
    WlogRelator,
    build_presentation,
    decompose_relator,
    is_injective,
    subdivide,
    underlying_shape,
)
from .words import Letter, Word, parse_word

__version__ = "0.1.0"
