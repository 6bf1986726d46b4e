"""Exact computations for twisted forms of M_{0,n}.

Odd n: an explicit birational parametrization of the quotient of twisted
point configurations by ``(GL_2 x E^*)/Q^*`` (:mod:`.parametrize`).
Even n: quaternion-algebra certificates that a twisted form is not retract
rational (:mod:`.brauer`).
"""
from .brauer import (QuaternionAlgebra, QuaternionOverFt, etale_splits_quaternion, is_division,
                     local_hilbert, non_retract_witness, splits_over_quadratic, tame_residue)
from .etale import AlgElement, EtaleAlgebra
from .exactnum import Poly
from .linal import Hyperplane, Subspace
from .parametrize import (Configuration, ParamContext, TwistedGroupElement, act, build_context,
                          canonical, chart_coords, from_chart, realize)

__all__ = [
    "AlgElement", "Configuration", "EtaleAlgebra", "Hyperplane", "ParamContext", "Poly",
    "QuaternionAlgebra", "QuaternionOverFt", "Subspace", "TwistedGroupElement", "act",
    "build_context", "canonical", "chart_coords", "etale_splits_quaternion", "from_chart",
    "is_division", "local_hilbert", "non_retract_witness", "realize", "splits_over_quadratic",
    "tame_residue",
]
