"""Combinatorial curvature: link graphs, the weight test, diagrams."""

from .diagram import (
    CurvatureReport,
    Diagram,
    DiagramError,
    FaceLabel,
    curvatures,
    euler_characteristic,
    is_reduced,
    verify_gauss_bonnet,
)
from .link import (
    Corner,
    LinkGraph,
    WeightTestResult,
    build_link_graph,
    simple_cycles,
    verify_weights,
    weight_test,
)
from .proof import FaceSides, LongSide, ProofWeights, classify_sides, proof_weights

__all__ = [
    "Corner",
    "CurvatureReport",
    "Diagram",
    "DiagramError",
    "FaceLabel",
    "FaceSides",
    "LinkGraph",
    "LongSide",
    "ProofWeights",
    "WeightTestResult",
    "build_link_graph",
    "classify_sides",
    "curvatures",
    "euler_characteristic",
    "is_reduced",
    "proof_weights",
    "simple_cycles",
    "verify_gauss_bonnet",
    "verify_weights",
    "weight_test",
]
