"""Level 1 modular forms: q-expansions, Hecke matrices and slopes."""
from .cache import CacheError, QExpansionCache, default_cache_dir
from .hecke import (
    HeckeMatrix,
    NewtonPolygon,
    SweepReport,
    SweepRow,
    charpoly,
    hecke_matrix,
    newton_slopes,
    ordinarity_sweep,
    slope_spectrum,
)
from .qexp import (
    Delta,
    E4,
    E6,
    PrecisionError,
    QExpansion,
    dim_cusp_forms,
    eisenstein_self_check,
    victor_miller_basis,
)
