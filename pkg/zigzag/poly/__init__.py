from .Poly import Poly, W
from .SolutionSet import SubstitutionWitness, MonomialFamily, SolutionSet
from .roots import MultiplicityProfile, RootOrbit, multiplicity_profile, vanishing_order, root_orbits
from .equivalence import depress, scale_equivalences, affine_equivalences, stabilizer, rational_roots_of
