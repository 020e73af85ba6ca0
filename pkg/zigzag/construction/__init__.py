from .DualGraph import DualGraph, DualNode
from .dual_graphs import dual_graph, section_augmented_graph
from .SurfaceReport import SurfaceReport, Singularity, FiberComponent, surface_report
from .equations import SurfaceEquations, emit_equations, render_expanded, render_factored
