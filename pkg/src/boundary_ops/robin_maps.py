"""
Robin boundary operators and Dirichlet-to-Robin maps.

With the Robin derivative d_R u = nu . (grad - i b A0) u + tau u:

    T_{+/-} = B + A tau +/- 1/2
    DtR_interior = A^{-1} (B + A tau - 1/2)     (solutions in the interior of K)
    DtR_exterior = A^{-1} (B + A tau + 1/2)     (decaying solutions in the exterior)

Only the Dirichlet-to-Robin direction is discretized.
"""

import logging
from typing import Dict, Optional

import numpy as np
from scipy import linalg

from capacity.smooth_curve import SmoothCurve
from config import Config
from core.errors import SingularSystemError
from .layer_operators import BoundaryOperatorMatrix, RobinCoefficient, assemble_A, assemble_B

logger = logging.getLogger(__name__)


def robin_operators(A: BoundaryOperatorMatrix, B: BoundaryOperatorMatrix, tau: RobinCoefficient):
    """T_plus and T_minus for assembled A and B."""
    if tau.n != A.n:
        raise ValueError(f"Robin coefficient has {tau.n} samples, expected {A.n}")
    base = B.matrix + A.matrix * tau.values[None, :]
    identity = np.eye(A.n)
    return (BoundaryOperatorMatrix('T_plus', base + 0.5 * identity, A.curve, A.b, tau),
            BoundaryOperatorMatrix('T_minus', base - 0.5 * identity, A.curve, A.b, tau))


def dtr_maps(curve: SmoothCurve, b: float, tau: RobinCoefficient, n: Optional[int] = None,
             A: Optional[BoundaryOperatorMatrix] = None,
             B: Optional[BoundaryOperatorMatrix] = None) -> Dict[str, BoundaryOperatorMatrix]:
    """
    Robin operators and Dirichlet-to-Robin maps of a curve.

    Args:
        curve (SmoothCurve): Boundary of K.
        b (float): Field strength.
        tau (RobinCoefficient): Robin coefficient on the (resampled) nodes.
        n (int, optional): Node count.
        A, B (BoundaryOperatorMatrix, optional): Reuse already assembled operators.

    Returns:
        dict: T_plus, T_minus, DtR_interior, DtR_exterior (plus A and B).

    Raises:
        SingularSystemError: If A is numerically singular at this discretization.
    """
    A = assemble_A(curve, b, n) if A is None else A
    B = assemble_B(curve, b, n) if B is None else B
    T_plus, T_minus = robin_operators(A, B, tau)

    condition = A.condition()
    if not np.isfinite(condition) or condition > Config.SINGULAR_CONDITION:
        raise SingularSystemError(f"single layer matrix on '{A.curve.name}' is singular (cond={condition:.3g}); "
                                  f"A is an isomorphism for smooth curves, so the discretization is at fault",
                                  module=__name__)
    factor = linalg.lu_factor(A.matrix)
    interior = linalg.lu_solve(factor, T_minus.matrix)
    exterior = linalg.lu_solve(factor, T_plus.matrix)
    logger.debug(f"Dirichlet-to-Robin maps on '{A.curve.name}' with n={A.n}, cond(A)={condition:.3g}")
    return {
        'A': A,
        'B': B,
        'T_plus': T_plus,
        'T_minus': T_minus,
        'DtR_interior': BoundaryOperatorMatrix('DtR_interior', interior, A.curve, b, tau),
        'DtR_exterior': BoundaryOperatorMatrix('DtR_exterior', exterior, A.curve, b, tau),
    }


def dtr_residuals(maps: Dict[str, BoundaryOperatorMatrix]) -> Dict[str, float]:
    """Max-norm residuals of A DtR_interior - T_minus and A DtR_exterior - T_plus."""
    A = maps['A'].matrix
    return {
        'interior': float(np.max(np.abs(A @ maps['DtR_interior'].matrix - maps['T_minus'].matrix))),
        'exterior': float(np.max(np.abs(A @ maps['DtR_exterior'].matrix - maps['T_plus'].matrix))),
    }
