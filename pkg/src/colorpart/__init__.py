"""Exact counting and explicit bijections for colored partition identities
of the Schroeter-Russell-Ramanujan type (moduli 3, 5, 7, 11, 23)."""

from .colored import (
    PRESETS,
    ColoredPart,
    IdentityPreset,
    ResidueSystem,
    count_D,
    count_D_qseries,
    enumerate_colored,
    get_preset,
    identity_check,
    multiplicity,
)
from .gm_lift import end_to_end, end_to_end_inverse, g_map, lift
from .master import count_solutions, partition_for, solutions_for
from .partitions import partition_count, pentagonal_involution
from .tuple_maps import kim_map, uv_bijection
from .warnaar import warnaar_forward, warnaar_inverse

__version__ = "0.1.0"

__all__ = [
    "PRESETS",
    "ColoredPart",
    "IdentityPreset",
    "ResidueSystem",
    "count_D",
    "count_D_qseries",
    "count_solutions",
    "end_to_end",
    "end_to_end_inverse",
    "enumerate_colored",
    "g_map",
    "get_preset",
    "identity_check",
    "kim_map",
    "lift",
    "multiplicity",
    "partition_count",
    "partition_for",
    "pentagonal_involution",
    "solutions_for",
    "uv_bijection",
    "warnaar_forward",
    "warnaar_inverse",
]
