"""Post-Lie algebras of decorated trees and multi-indices, with their envelopes."""

from __future__ import annotations

from types import ModuleType as _ModuleType

from .core import DimensionError, LinComb, binom, box, factorial, parabolic, unit, zero
from .envelope import Envelope, PostLieAlgebra, check_post_lie, words_up_to
from .grafting import deformed_graft, graft, planted_pre_lie, up, up_multi
from .morphism import T0PostLie, psi, psi_hat, psi_hat_env
from .multiindex import (
    ONE,
    Deriv,
    Monomial,
    MultiIndexPostLie,
    Partial,
    apply_word,
    arity_grade,
    derivation_action,
    matrix_coeff,
    mi_bracket,
    mi_bracket0,
    mi_post,
    mi_pre_lie,
    z,
)
from .planar import PlanarTree, check_left_equiv, left_graft, left_post, planar_normal_forms, planar_normalize
from .treealgebra import Planted, TreePostLie, XGen, star2, verify_identification
from .trees import NOISE, Edge, T0Tree, Tree, kernel, leaf, noise_tree, one, planted

__version__ = "0.1.0"

__all__ = sorted(
    name for name, obj in globals().items()
    if not name.startswith("_") and name != "annotations" and not isinstance(obj, _ModuleType)
)
