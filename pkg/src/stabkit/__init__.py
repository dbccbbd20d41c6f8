"""Stabilizer-formalism toolkit: Pauli algebra, tableaux, graph states,
toric-code decoding and spin-model overlaps."""

from .pauli import PauliString, commutes, conjugate_clifford, multiply
from .tableau import StabilizerError, Tableau, apply_circuit, parse_circuit
from .statevec import StateVector, fidelity, overlap
from .graphstate import Graph, GraphState, LocalClifford, OneQubitClifford, build_state, measure_graph
from .toric import Homology, Syndrome, ToricLattice, homology_class, sample_errors, syndrome_of
from .matching import Matching, WeightedGraph, mwpm, mwpm_oracle_dp
from .decode import (DecodeResult, McConfig, McResult, RbimInstance, decode_ml, decode_mwpm,
                     rbim_partition, run_threshold, verify_correspondence)
from .spinmodel import MediatedGraph, SpinModel, dualize, mediated_graph, partition_direct, partition_via_overlap

__version__ = "0.1.0"
