"""A countable planar graph containing every finite planar graph as a minor:
finite truncations, and explicit minor models built inside them."""

from .embed import EmbedConfig, MinorModel, embed, embed_any
from .planar import PlaneGraph, build_embedding, faces
from .reduce import reduce
from .universal import FaceId, UniversalHost, census, generate
from .verify import brute_force_minor, check_inflated_copy, slice_connectivity_probe

__all__ = [
    "EmbedConfig",
    "FaceId",
    "MinorModel",
    "PlaneGraph",
    "UniversalHost",
    "brute_force_minor",
    "build_embedding",
    "census",
    "check_inflated_copy",
    "embed",
    "embed_any",
    "faces",
    "generate",
    "reduce",
    "slice_connectivity_probe",
]

__version__ = "0.1.0"
