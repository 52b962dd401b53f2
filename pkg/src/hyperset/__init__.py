"""Hereditarily finite hypersets, their double-membership graphs, and finite
first-order tools for studying them."""
from .errors import HypersetError
from .store import (
    Apg,
    Hyperset,
    Store,
    canonicalize,
    default_store,
    elements,
    empty,
    hf_encode,
    is_well_founded,
    member,
    rank,
    set_of,
)
from .flat import FlatSystem, parse_flat_system, solve
from .dump import dump, load_dump
from .structures import FiniteStructure, components, graph, digraph, is_isomorphic
from .reducts import Slice, d_closure, d_graph, region, sd_graph
from .constructions import (
    BallSpec,
    PermutedMembership,
    ball,
    bouquet,
    embed_graph,
    flower,
    graft_ball,
    rieger,
)

__all__ = [
    "Apg",
    "BallSpec",
    "FiniteStructure",
    "FlatSystem",
    "Hyperset",
    "HypersetError",
    "PermutedMembership",
    "Slice",
    "Store",
    "ball",
    "bouquet",
    "canonicalize",
    "components",
    "d_closure",
    "d_graph",
    "default_store",
    "digraph",
    "dump",
    "elements",
    "embed_graph",
    "empty",
    "flower",
    "graft_ball",
    "graph",
    "hf_encode",
    "is_isomorphic",
    "is_well_founded",
    "load_dump",
    "member",
    "parse_flat_system",
    "rank",
    "region",
    "rieger",
    "sd_graph",
    "set_of",
    "solve",
]
