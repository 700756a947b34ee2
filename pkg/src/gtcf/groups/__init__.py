from .finite import (
    FiniteGroup,
    GroupHom,
    IndexAction,
    NotAGroup,
    NotAHomomorphism,
    UnknownPreset,
    abelian_invariants,
    cyclic_group,
    direct_product,
    from_cayley_table,
    from_images,
    preset,
    quotient_map,
)
from .frattini import (
    CoverKernel,
    NotSurjective,
    OrderTooLarge,
    TruncationTooSmall,
    Unsupported,
    cyclic_universal_frattini_cover,
    frattini_subgroup,
    is_frattini_cover,
    is_frattini_cover_direct,
    maximal_subgroups,
    normal_subgroups,
    subgroups,
    universal_frattini_cover,
)


def left_translation_action(G: FiniteGroup) -> IndexAction:
    """Index action ``k∗l = j`` iff g_k g_l = g_j."""
    return IndexAction(G)


__all__ = [
    "CoverKernel",
    "FiniteGroup",
    "GroupHom",
    "IndexAction",
    "NotAGroup",
    "NotAHomomorphism",
    "NotSurjective",
    "OrderTooLarge",
    "TruncationTooSmall",
    "UnknownPreset",
    "Unsupported",
    "abelian_invariants",
    "cyclic_group",
    "cyclic_universal_frattini_cover",
    "direct_product",
    "frattini_subgroup",
    "from_cayley_table",
    "from_images",
    "is_frattini_cover",
    "is_frattini_cover_direct",
    "left_translation_action",
    "maximal_subgroups",
    "normal_subgroups",
    "preset",
    "quotient_map",
    "subgroups",
    "universal_frattini_cover",
]
