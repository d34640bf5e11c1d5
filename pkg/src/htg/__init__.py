"""Honeycomb toroidal graphs and their separating 2-factors."""

from .core import Edge, EdgeKind, HtgGraph, HtgParams, Vertex, build_graph, canonicalize, export_dot, validate
from .factor import SeparationCertificate, TwoFactor, decode_certificate, encode_certificate, separates, verify_factor

__version__ = "0.1.0"

__all__ = [
    "Edge",
    "EdgeKind",
    "HtgGraph",
    "HtgParams",
    "SeparationCertificate",
    "TwoFactor",
    "Vertex",
    "build_graph",
    "canonicalize",
    "decode_certificate",
    "encode_certificate",
    "export_dot",
    "separates",
    "validate",
    "verify_factor",
]
