from .ZigzagType import ZigzagType, MoveTrace, reversion_trace, validate_standard_type
from .PairClass import PairClass, classify_case, CASE_I, CASE_II, CASE_III
