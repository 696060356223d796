"""Certified colorings that follow the structural case analysis step by step."""

from .c5case import C5Partition, build_c5_partition, color_with_c5, three_or_four
from .c7bar import C7barPartition, build_c7bar_partition, color_c7bar
from .c9bar import C9barPartition, build_c9bar_partition, color_c9bar
from .dispatch import (
    budget_for,
    color_c5free,
    color_c5free_k5free,
    color_ktfree,
    color_main,
)
from .lift import lift_color, two_color_rest
from .trace import LEAVES, REGISTRY, CaseTrace, Kind, SoundnessError, is_root_to_leaf

__all__ = [
    "C5Partition", "C7barPartition", "C9barPartition", "CaseTrace", "Kind", "LEAVES", "REGISTRY",
    "SoundnessError", "budget_for", "build_c5_partition", "build_c7bar_partition",
    "build_c9bar_partition", "color_c5free", "color_c5free_k5free", "color_c7bar", "color_c9bar",
    "color_ktfree", "color_main", "color_with_c5", "is_root_to_leaf", "lift_color",
    "three_or_four", "two_color_rest",
]
