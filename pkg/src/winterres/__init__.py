"""Resonances of a quantum particle coupled to a sphere by a point interaction.

The library computes the poles of the resolvent for the four-parameter
family of spherical generalized point interactions: classification of the
coupling, the Krein-type denominator whose zeros are the resonances, an
exhaustive fourth-quadrant pole search, and closed-form high-energy
predictors for each interaction class.
"""

from .asymptotics import (NO_RESONANCES, AsymptoticPrediction, ComparisonRow,
                          NoResonances, NotDeltaPrime, NotIntermediate, Order,
                          Separated, ZeroCoupling, compare, predict,
                          predict_delta, predict_delta_prime,
                          predict_intermediate)
from .errors import WinterresError
from .gpi import (BoundaryData, DegenerateDenominator, GpiClass, GpiParams,
                  SeparatedInteraction, TransferForm, UnitaryForm,
                  boundary_residual, canonical_real_gamma, classify,
                  classify_unitary, from_scale_invariant, is_separated,
                  to_transfer, to_unitary)
from .krein import (KreinCoefficients, NotSeparated, PhiBoundaryValues,
                    PoleAtK, det_lambda, det_lambda_balanced,
                    krein_coefficients, phi_boundary, real_axis_roots)
from .polefinder import (AmbiguousIndex, BoundaryZero, ClusteredZeros,
                         NonConvergence, Resonance, SearchRegion, count_zeros,
                         default_im_min, find_poles, index_poles, refine)
from .report import RunConfig, parse_complex, write_csv, write_pole_svg
from .riccati import (Channel, OriginSingularity, ValueAndDerivative,
                      riccati_s, riccati_xi, wronskian)

__version__ = "0.1.0"

__all__ = [
    "AmbiguousIndex", "AsymptoticPrediction", "BoundaryData", "BoundaryZero",
    "Channel", "ClusteredZeros", "ComparisonRow", "DegenerateDenominator",
    "GpiClass", "GpiParams", "KreinCoefficients", "NO_RESONANCES",
    "NoResonances", "NonConvergence", "NotDeltaPrime", "NotIntermediate",
    "NotSeparated", "Order", "OriginSingularity", "PhiBoundaryValues",
    "PoleAtK", "Resonance", "RunConfig", "SearchRegion", "Separated",
    "SeparatedInteraction", "TransferForm", "UnitaryForm",
    "ValueAndDerivative", "WinterresError", "ZeroCoupling",
    "boundary_residual", "canonical_real_gamma", "classify",
    "classify_unitary", "compare", "count_zeros", "default_im_min",
    "det_lambda", "det_lambda_balanced", "find_poles", "from_scale_invariant",
    "index_poles", "is_separated", "krein_coefficients", "parse_complex",
    "phi_boundary", "predict", "predict_delta", "predict_delta_prime",
    "predict_intermediate", "real_axis_roots", "refine", "riccati_s",
    "riccati_xi", "to_transfer", "to_unitary", "wronskian", "write_csv",
    "write_pole_svg",
]
