"""
Operads: the Operad contract, the registry and the concrete tree operads.

Importing this package registers nap, prelie, mag, shmag and com.
"""

from .base import Operad, TreeOperad, check_graft, root_graft
from .registry import (
    OperadRegistry,
    get_registry,
    operad_instances,
    register_operad,
    resolve_operad,
)
from .com import ComElement, ComOperad
from .mag import MagOperad, mag_compose
from .nap import NAPOperad, nap_asso_suppl, nap_compose, root_swap
from .prelie import PreLieOperad, prelie_compose
from .shuffle_mag import ShuffleMagOperad, shuffle_mag_compose
from .shuffles import (
    Shuffle,
    enumerate_multi_shuffles,
    enumerate_shuffles,
    shuffle_count,
)

__all__ = [
    "ComElement",
    "ComOperad",
    "MagOperad",
    "NAPOperad",
    "Operad",
    "OperadRegistry",
    "PreLieOperad",
    "Shuffle",
    "ShuffleMagOperad",
    "TreeOperad",
    "check_graft",
    "enumerate_multi_shuffles",
    "enumerate_shuffles",
    "get_registry",
    "mag_compose",
    "nap_asso_suppl",
    "nap_compose",
    "operad_instances",
    "prelie_compose",
    "register_operad",
    "resolve_operad",
    "root_graft",
    "root_swap",
    "shuffle_count",
    "shuffle_mag_compose",
]
