"""Exact desk-scale toolkit for H-linkage search and structural certificates."""

from .core import (
    OrientedCycle,
    PathSeq,
    PatternMultigraph,
    Placement,
    SimpleGraph,
    Subdivision,
    bond,
    cycle_pattern,
    emit_graph,
    fat_triangle,
    graph_from_json,
    graph_hash,
    graph_to_json,
    interval,
    kite,
    matching,
    parse_graph,
    path_pattern,
    subdivision_violation,
    validate_subdivision,
)
from .connectivity import (
    CutOrPaths,
    disjoint_paths,
    duplicate_vertices,
    fan,
    local_connectivity,
    random_k_connected,
    sharpness_gadget,
    vertex_connectivity,
)
from .linkage import (
    LinkageResult,
    LinkageSurvey,
    find_fat_triangle_linkage,
    find_kite_linkage,
    find_subdivision,
    is_H_linked,
)
from .mader import (
    GroupedTerminals,
    MaderCertificate,
    dichotomy_check,
    find_certificate,
    max_good_paths,
    verify_certificate,
)
from .separating import (
    ConnSepWitnesses,
    SeparatingPair,
    connsep_witnesses,
    find_special_separating_pair,
    separating_pair_violation,
    verify_separating_pair,
)
from .flowers import (
    Flower,
    extremal_flower,
    find_flower,
    flower_complement_three_connected,
    flower_cycles_minimal,
    flower_neighborhood_check,
    flower_or_kite,
    flower_paths_are_edges,
    flower_violation,
    verify_flower,
)
from .planar import (
    DischargeWitness,
    RotationEmbedding,
    ThreePlanarCertificate,
    disc_triangulation,
    discharge_witness,
    embedding_violation,
    shadow_graph,
    trace_faces,
    two_disjoint_paths,
    verify_3planar_certificate,
    wheel_embedding,
)
from .campaigns import (
    CampaignReport,
    InstanceRecord,
    brute_special_pair_weight,
    run_campaign,
)
from .search import SearchBudget

__version__ = "0.1.0"

__all__ = [
    "CampaignReport",
    "ConnSepWitnesses",
    "CutOrPaths",
    "DischargeWitness",
    "Flower",
    "GroupedTerminals",
    "InstanceRecord",
    "LinkageResult",
    "LinkageSurvey",
    "MaderCertificate",
    "OrientedCycle",
    "PathSeq",
    "PatternMultigraph",
    "Placement",
    "RotationEmbedding",
    "SearchBudget",
    "SeparatingPair",
    "SimpleGraph",
    "Subdivision",
    "ThreePlanarCertificate",
    "bond",
    "brute_special_pair_weight",
    "connsep_witnesses",
    "cycle_pattern",
    "dichotomy_check",
    "disc_triangulation",
    "discharge_witness",
    "disjoint_paths",
    "duplicate_vertices",
    "embedding_violation",
    "emit_graph",
    "extremal_flower",
    "fan",
    "fat_triangle",
    "find_certificate",
    "find_fat_triangle_linkage",
    "find_flower",
    "find_kite_linkage",
    "find_special_separating_pair",
    "find_subdivision",
    "flower_complement_three_connected",
    "flower_cycles_minimal",
    "flower_neighborhood_check",
    "flower_or_kite",
    "flower_paths_are_edges",
    "flower_violation",
    "graph_from_json",
    "graph_hash",
    "graph_to_json",
    "interval",
    "is_H_linked",
    "kite",
    "local_connectivity",
    "matching",
    "max_good_paths",
    "parse_graph",
    "path_pattern",
    "random_k_connected",
    "run_campaign",
    "separating_pair_violation",
    "shadow_graph",
    "sharpness_gadget",
    "subdivision_violation",
    "trace_faces",
    "two_disjoint_paths",
    "validate_subdivision",
    "verify_3planar_certificate",
    "verify_certificate",
    "verify_flower",
    "verify_separating_pair",
    "vertex_connectivity",
    "wheel_embedding",
]
