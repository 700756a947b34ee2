from .grammar import ParseError, format_poly, parse_poly, parse_polys
from .multipoly import ORDERS, ArityMismatch, Layout, LayoutMismatch, MultiPoly, evaluate, order_key
from .twisted import TwistedAction, apply_twisted, sigma_tuple

__all__ = [
    "ORDERS",
    "ArityMismatch",
    "Layout",
    "LayoutMismatch",
    "MultiPoly",
    "ParseError",
    "TwistedAction",
    "apply_twisted",
    "evaluate",
    "format_poly",
    "order_key",
    "parse_poly",
    "parse_polys",
    "sigma_tuple",
]
