"""Computations around hyper-Kaehler categories built from K3 surfaces.

Submodules:

* ``permgroup`` -- permutation groups, k-subset orbits, commuting pairs
* ``projgroups`` -- small finite fields, PGL_2 / PGammaL_2 / AGL_1 actions
* ``graded`` -- graded dimensions and the homological-unit verdict
* ``hodge`` -- Hodge diamonds, HKR, Serre shift, Salamon and Guan checks
* ``orbifold`` -- orbifold Euler characteristics and the product formula
* ``groupspec`` / ``cli`` -- the group-spec language and the command line
"""

__version__ = "0.1.0"

from .errors import HKError
from .graded import GradedDims, hyperkahler_unit_verdict, kunneth_tensor
from .groupspec import GroupSpec, parse_group_spec
from .hodge import HochschildNumbers, HodgeDiamond, prymian_pipeline
from .orbifold import category_euler_series, goettsche_coefficients, orbifold_euler
from .permgroup import (
    Permutation,
    PermutationGroup,
    group_from_generators,
    homogeneity_profile,
    orbits_on_k_subsets,
)
from .projgroups import build_field, projective_group_generators

__all__ = [
    "GradedDims",
    "GroupSpec",
    "HKError",
    "HochschildNumbers",
    "HodgeDiamond",
    "Permutation",
    "PermutationGroup",
    "build_field",
    "category_euler_series",
    "goettsche_coefficients",
    "group_from_generators",
    "homogeneity_profile",
    "hyperkahler_unit_verdict",
    "kunneth_tensor",
    "orbifold_euler",
    "orbits_on_k_subsets",
    "parse_group_spec",
    "prymian_pipeline",
    "projective_group_generators",
]
