"""Exact lattice models for plane birational maps and their hyperbolic geometry.

Submodules:

* bubble: symbolic point configurations (proper and infinitely near points).
* lattice: finitely supported classes, pairing, hyperboloid distance,
  membership in the effective-side convex set.
* cremona: numerical characteristics, validation, lattice action, composition.
* halphen: the rank-10 lattice and its translation twists.
* length: decomposition-length bounds (two lower bounds, greedy upper bound).
* hypgraph: four-point constants, thin-triangle checks, quasi-flat growth.
* voronoi: cell membership against germ sets, adjacency classification.
* serialize / cli: file formats and the batch front-end.
"""

from .bubble import (
    Configuration,
    PointId,
    almost_general_position,
    is_adherent,
)
from .cremona import (
    Characteristic,
    CharacteristicReport,
    NoetherViolation,
    apply,
    compose_disjoint,
    identity_characteristic,
    inverse,
    is_jonquieres,
    jonquieres_characteristic,
    md,
    standard_quadratic,
    validate,
)
from .errors import (
    BasePointCollision,
    CremlatError,
    DegenerateSegment,
    IdentityTwist,
    IndexOutOfRange,
    InvalidCharacteristic,
    InvalidPair,
    MalformedFamily,
    MissingResolutionData,
    NoDecrease,
    NotInKPerp,
    NotOnHyperboloid,
    TooManyBasePoints,
    UnevenSelfPairing,
    UnknownPoint,
    UnsupportedClassSupport,
    WrongArity,
)
from .halphen import (
    HalphenVector,
    TwistParam,
    canonical,
    generator_a1,
    generator_a2,
    line_vector,
    point_vector,
    translate,
    twist_characteristic,
    twist_degree,
)
from .hypgraph import (
    BowditchResult,
    FiniteMetric,
    FlatCertificate,
    FlatRow,
    FlatTable,
    Graph,
    SubgraphFamily,
    bowditch_check,
    complete_graph,
    cycle_graph,
    delta_backend,
    flat_certificate,
    flat_growth,
    four_point_delta,
    geodesic_family,
    grid_graph,
    path_graph,
    staircase_family,
)
from .lattice import (
    CurveWitness,
    ECheckReport,
    PicardManinClass,
    distance,
    exceptional,
    geodesic_point,
    in_E,
    intersect,
    is_special,
    line,
    self_intersection,
)
from .length import (
    GreedyStep,
    LengthBounds,
    greedy_length,
    greedy_predecessor,
    length_lower_deg,
    length_lower_md,
)
from .voronoi import (
    GENERAL_ADJACENT,
    JONQUIERES_ADJACENT,
    QUASI_ADJACENT_ONLY,
    UNCLASSIFIED,
    GermSet,
    boundary_class,
    cell_member,
    classify_germ,
)

__version__ = "0.1.0"

__all__ = [
    "BasePointCollision",
    "BowditchResult",
    "Characteristic",
    "CharacteristicReport",
    "Configuration",
    "CremlatError",
    "CurveWitness",
    "DegenerateSegment",
    "ECheckReport",
    "FiniteMetric",
    "FlatCertificate",
    "FlatRow",
    "FlatTable",
    "GENERAL_ADJACENT",
    "GermSet",
    "Graph",
    "GreedyStep",
    "HalphenVector",
    "IdentityTwist",
    "IndexOutOfRange",
    "InvalidCharacteristic",
    "InvalidPair",
    "JONQUIERES_ADJACENT",
    "LengthBounds",
    "MalformedFamily",
    "MissingResolutionData",
    "NoDecrease",
    "NoetherViolation",
    "NotInKPerp",
    "NotOnHyperboloid",
    "PicardManinClass",
    "PointId",
    "QUASI_ADJACENT_ONLY",
    "SubgraphFamily",
    "TooManyBasePoints",
    "TwistParam",
    "UNCLASSIFIED",
    "UnevenSelfPairing",
    "UnknownPoint",
    "UnsupportedClassSupport",
    "WrongArity",
    "almost_general_position",
    "apply",
    "boundary_class",
    "bowditch_check",
    "canonical",
    "cell_member",
    "classify_germ",
    "complete_graph",
    "compose_disjoint",
    "cycle_graph",
    "delta_backend",
    "distance",
    "exceptional",
    "flat_certificate",
    "flat_growth",
    "four_point_delta",
    "generator_a1",
    "generator_a2",
    "geodesic_family",
    "geodesic_point",
    "greedy_length",
    "greedy_predecessor",
    "grid_graph",
    "identity_characteristic",
    "in_E",
    "intersect",
    "inverse",
    "is_adherent",
    "is_jonquieres",
    "is_special",
    "jonquieres_characteristic",
    "length_lower_deg",
    "length_lower_md",
    "line",
    "line_vector",
    "md",
    "path_graph",
    "point_vector",
    "self_intersection",
    "staircase_family",
    "standard_quadratic",
    "translate",
    "twist_characteristic",
    "twist_degree",
    "validate",
]
