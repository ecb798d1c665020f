"""Exposed extreme rays of SONC cones with exact certificates."""
from .circuits import (
    Circuit,
    CircuitError,
    Parity,
    circuit_nonneg,
    circuit_number,
    enumerate_circuits,
    global_lambda,
    is_reduced,
    make_circuit,
    reduced_circuits,
)
from .exposing import (
    Certificate,
    ExposednessDecision,
    ExposingFunctional,
    ExposureError,
    certify,
    choose_sigma_delta,
    decide_exposed,
    expose_circuit_ray,
    expose_monomial,
)
from .grading import GradedPartition, PartitionError, check_layer_property, graded_partition
from .lattice import GroundSet, GroundSetError, is_even, parse_ground_set, serialize_ground_set
from .powers import Ordering, PowerProduct, SignedPower, power_product_compare
from .rays import CircuitRay, MonomialRay, Polynomial, Sign, SoncCone, canonical_generator, catalog_extreme_rays
from .verify import (
    Verdict,
    VerificationError,
    numeric_spotcheck,
    unexposedness_probe,
    verify_certificate,
)

__version__ = "0.1.0"
