from .FibrationGraph import Arrow, FibrationGraph, FibrationExplorer, build_graph, cycle_rank, export
from .shapes import classify_type_iii, carpet_prediction, SELF_LOOP, TWO_VERTEX_EDGE
