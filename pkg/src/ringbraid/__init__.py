"""Exact word calculus for a framed ring of six disks.

The model group is Z^6 (disk spins in units of 2*pi/30) semidirect the braid
group B_6, modulo the relation making the one-sixth rotation ``a1`` have
order six.  Equality is decided through the Artin action on the free group
of rank six; ``geometry`` realizes the generators as explicit plane maps.
"""

from .braid import BraidWord, artin_action, braid_equal, delta, detect_central_power, sigma_circular
from .dsl import evaluate, parse
from .model import (
    DEFAULT_MODEL,
    FramedModel,
    ModelElement,
    commutes,
    element_order,
    joint_invariant,
    model_equal,
    model_inv,
    model_mul,
    named,
    wedge_label_action,
)
from .verify import conjugate_trace, shipped_trace, verify_derivation, verify_lemma_comp

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_MODEL",
    "BraidWord",
    "FramedModel",
    "ModelElement",
    "artin_action",
    "braid_equal",
    "commutes",
    "conjugate_trace",
    "delta",
    "detect_central_power",
    "element_order",
    "evaluate",
    "joint_invariant",
    "model_equal",
    "model_inv",
    "model_mul",
    "named",
    "parse",
    "shipped_trace",
    "sigma_circular",
    "verify_derivation",
    "verify_lemma_comp",
    "wedge_label_action",
]
