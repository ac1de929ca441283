"""Finite categories, presheaves and their Kan extensions, computed exactly."""
from .category import FinCategory, Morphism, hom_set, opposite, validate_category
from .checker import (
    AdjunctionCandidate,
    check_adjunction,
    is_faithful,
    is_full,
    lan_candidate,
    oracle_colimit,
    oracle_limit,
    ran_candidate,
    std_probes,
)
from .documents import Document, load, parse, serialize
from .errors import FinKanError, GenerationExhausted, LawViolation, ParseError, SemanticError
from .generators import GenBounds, gen_category, gen_functor, gen_presheaf
from .left_kan import TensorProduct, lan, lan_counit, lan_map, lan_unit, tensor, tensor_on_mor, tensor_universal
from .presheaf import (
    FinFunctor,
    NatTrans,
    Presheaf,
    SetMap,
    compose_functors,
    compose_nat,
    enumerate_nat,
    id_nat,
    identity_functor,
    restrict,
    restrict_nat,
    validate_functor,
    validate_nattrans,
    validate_presheaf,
)
from .right_kan import ran, ran_counit, ran_map, ran_unit
from .yoneda import co_yoneda_obj, element_to_nat, nat_to_element, yoneda_comparison, yoneda_mor, yoneda_obj

__version__ = "0.1.0"
