from .isomorphism import IsoWitness, pairs_isomorphic, triangular_image, maps_onto
from .AutPairDescription import AutPairDescription, aut_pair_group
from .reversions import apply_reversion, transport_center, pull_back_center, reversions_equivalent
from .reversions import reversions_equivalent_by_targets, reversions_equivalent_by_transport
