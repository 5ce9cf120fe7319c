from .models import SwitchWitness
from .operations import (
    are_switching_equivalent,
    canonical_representative,
    class_representatives,
    connected_cover_types,
    count_cover_classes,
    enumerate_switching_class,
    seidel_switch,
    switch_signing,
)

__all__ = [
    "SwitchWitness",
    "are_switching_equivalent",
    "canonical_representative",
    "class_representatives",
    "connected_cover_types",
    "count_cover_classes",
    "enumerate_switching_class",
    "seidel_switch",
    "switch_signing",
]
