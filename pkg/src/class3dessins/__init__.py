"""Totally symmetric dessins with nilpotent class-3 automorphism groups.

Exact collection arithmetic for the six classified families of two-generator
class-3 p-groups, the dessin operations on generating pairs, and brute-force
Cayley-table verification of the closed-form invariants.
"""

from .collect import (
    Class3Group,
    Element,
    Family,
    GroupParams,
    ParameterError,
    commutator,
    element_order,
    eval_word,
    group_of,
    inverse,
    multiply,
    normalize,
    power,
    validate_params,
)
from .dessin import DessinOp, GenPair, apply_op, dessin_type, genus, is_generating, verify_unique_dessin
from .family import enumerate_params, export_presentation, invariants_of, structure_types

__version__ = "0.1.0"
