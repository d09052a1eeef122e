"""octoweak: exact split-octonion algebra with a claim-by-claim verifier.

The package computes, in exact arithmetic, every table, trace identity,
coupling-matching condition and boson-mass statement of the octonionic
extension of the electroweak model it implements, and reports each one as
PASS, FAIL (internal inconsistency) or FLAG (reproducible disagreement
with a published claim).
"""

from .scalar_ring import C0, CoeffElem, GaussQ, S2, Y0, coeff_embed
from .octonion_core import (Mat2, OctCoord, SIGMA, Zorn, associator,
                            coord_to_zorn, eps4, norm_sq, quad_trace,
                            sigma_basis, split3, zorn_to_coord)
from .field_theory import (ChargeSet, FieldParams, MassMatrix,
                           boson_basis_change, higgs_param, lagrangian_terms,
                           mass_matrix, potential_value, radial_minimize,
                           spectrum, vacuum_state)
from .fermion_symbolic import (Bilinear, BilinearCombo, FermionSym,
                               build_doublet, coupling_match, current_split,
                               current_trace, quartic_contract,
                               yukawa_matching)

__version__ = "0.1.0"

__all__ = [
    "C0", "CoeffElem", "GaussQ", "S2", "Y0", "coeff_embed",
    "Mat2", "OctCoord", "SIGMA", "Zorn", "associator", "coord_to_zorn",
    "eps4", "norm_sq", "quad_trace", "sigma_basis", "split3", "zorn_to_coord",
    "ChargeSet", "FieldParams", "MassMatrix", "boson_basis_change",
    "higgs_param", "lagrangian_terms", "mass_matrix", "potential_value",
    "radial_minimize", "spectrum", "vacuum_state",
    "Bilinear", "BilinearCombo", "FermionSym", "build_doublet",
    "coupling_match", "current_split", "current_trace", "quartic_contract",
    "yukawa_matching",
]
