"""
Numerical defaults grouped by concern.

Each class below only holds constants; they are combined into the single
``Config`` class by multiple inheritance (see config.py).

Groups:
--------
- QuadratureDefaults: working precision and tolerances of the I(s) integrals
- ToeplitzDefaults: precision and truncation of Landau-level spectra
- BoundaryDefaults: Nystrom discretization and jump extrapolation
- CliDefaults: default command-line parameters and validation limits
"""


class QuadratureDefaults:
    # decimal digits used by mpmath quadrature of I, I0, Iinf
    QUADRATURE_DPS = 30
    QUADRATURE_RTOL = 1e-12
    # infinite ranges are cut where exp(-s u) has dropped by exp(-QUADRATURE_TAIL)
    QUADRATURE_TAIL = 80
    # the k-sums of the expansion stop once a term falls below this fraction,
    # or below 10^(5 - dps) when the working precision is finer
    SERIES_RTOL = 1e-18
    MAX_SERIES_TERMS = 4000
    EXPANSION_ORDER = 6


class ToeplitzDefaults:
    PRECISION_BITS = 256
    M_MAX = 60
    # extra Gauss-Legendre nodes beyond polynomial exactness
    RADIAL_NODE_MARGIN = 24
    # basis functions beyond M carry less than this mass on the domain
    BASIS_TAIL_TOL = 1e-30
    GALERKIN_RADIAL_NODES = 96
    GALERKIN_ANGULAR_NODES = 256
    TENSOR_CUTOFF = 80


class BoundaryDefaults:
    NODES = 256
    # condition number above which T_{+/-} is reported as singular
    SINGULAR_CONDITION = 1e8
    JUMP_DISTANCES = (0.08, 0.064, 0.0512, 0.04096, 0.032768, 0.0262144, 0.02097152, 0.016777216)
    JUMP_NODES = 2048
    EXTRAPOLATION_TOL = 1e-6
    SWEEP_POINTS = 101


class CliDefaults:
    DEFAULT_B = 1.0
    DEFAULT_D = 1
    DEFAULT_Q = 1
    DEFAULT_RADIUS = 1.0
    DEFAULT_JMAX = 40
    DEFAULT_EPSILONS = (1e-10, 1e-20, 1e-30, 1e-40)
    DEFAULT_FORMAT = 'csv'

    MAX_D = 8
    MAX_Q = 50
    MAX_NODES = 8192
    MAX_PRECISION_BITS = 8192
