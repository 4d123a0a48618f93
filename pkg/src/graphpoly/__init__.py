"""Weighted quasisymmetric enumerators of m-graph polytopes and their H-posets."""

from .decorated import DecoratedGraph, DecoratedSum, coproduct, pr, product, rip, sew, takeuchi_antipode, uniform
from .flags import Flag, enumerate_flags
from .graphcore import SimpleGraph, canonical_form, connected_catalog, family, longest_induced_path
from .hposet import Poset, enumerate_hposets, is_hposet, lift_hposets, strict_ppartition_enumerator
from .hyper import Hypergraph, level_hypergraph, level_path_hypergraph, rank
from .qsym import QPolynomial, QSymElement, f_polynomial, fq_oracle, psi, specialize_q, stabilization_index

__version__ = "0.1.0"
