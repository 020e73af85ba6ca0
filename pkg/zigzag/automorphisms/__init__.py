from .hypotheses import HypothesisReport, check_hypotheses
from .AutReport import AutReport, aut_structure, diagonal_action
