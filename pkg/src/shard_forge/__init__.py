"""Shards, real bricks and stability domains over symmetrizable Cartan data.

Vertices are 0-based throughout the Python API; text formats (signed words,
JSON map keys, CLI roots) are 1-based.
"""
from .cartan import CartanData, format_root, load, parse_root, rank4_dependence, validate
from .cones import Cone, double_description, hyperplane, sigma
from .errors import OracleRangeError, PreconditionError, ShardForgeError, ValidationError
from .fields import FieldTower, species_basis
from .functors import SignedWord, apply_word, bricks_of_dimension, no_quot, no_sub, sigma_minus, sigma_plus
from .hom import brick_test, euler_check, hom_complex, hom_ext_dims, is_brick, is_isomorphic
from .rank_two import cutting_count_bound_check, cutting_systems
from .roots import depth, inversions, positive_expression, positive_roots
from .shards import Shard, shards_direct, shards_recursive
from .species import SpeciesModule, check_preprojective, random_module, simple
from .stability import bijection_check, classify_shard_modules, stab_oracle, stab_recursive

__version__ = "0.1.0"

__all__ = [
    "CartanData", "format_root", "load", "parse_root", "rank4_dependence", "validate",
    "Cone", "double_description", "hyperplane", "sigma",
    "OracleRangeError", "PreconditionError", "ShardForgeError", "ValidationError",
    "FieldTower", "species_basis",
    "SignedWord", "apply_word", "bricks_of_dimension", "no_quot", "no_sub", "sigma_minus", "sigma_plus",
    "brick_test", "euler_check", "hom_complex", "hom_ext_dims", "is_brick", "is_isomorphic",
    "cutting_count_bound_check", "cutting_systems",
    "depth", "inversions", "positive_expression", "positive_roots",
    "Shard", "shards_direct", "shards_recursive",
    "SpeciesModule", "check_preprojective", "random_module", "simple",
    "bijection_check", "classify_shard_modules", "stab_oracle", "stab_recursive",
]
