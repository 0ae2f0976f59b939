"""Exact decomposition of symmetric polynomials into elementary symmetric polynomials."""

from symdecomp.decomp import (
    DegreeSystem,
    Part,
    build_system,
    coefficient,
    compose_truncated,
    decompose,
    decompose_truncated,
    enumerate_decompositions,
    n2_coefficient,
    solve_degree,
)
from symdecomp.io import (
    PolySource,
    PolySyntaxError,
    VariableOutOfRange,
    ZeroDenominator,
    export_records,
    format_poly,
    parse_poly,
)
from symdecomp.oracle import InconsistentSystem, oracle_decompose, verify_roundtrip
from symdecomp.partitions import (
    canonicalize,
    degree_classes,
    orbit,
    phi,
    phi_inv,
    weight_vectors,
)
from symdecomp.poly import (
    NotSymmetric,
    Polynomial,
    compose_with_sigma,
    elementary_symmetric,
    poly_arith,
    symmetry_witness,
)

__version__ = "0.1.0"
