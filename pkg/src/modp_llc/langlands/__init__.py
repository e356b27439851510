"""Labels, the mod p dictionary, and reductions of crystalline representations."""
from .dictionary import DictionaryError, all_galois_labels, ll_inverse, ll_map, twist_side
from .labels import (
    UNKNOWN,
    CharLabel,
    GaloisRepLabel,
    Irreducible,
    Reducible,
    SmoothRepLabel,
    SmoothSide,
    bracket,
    canonical_galois,
    mu,
    twist_galois,
)
from .reduction import (
    CrystallineParams,
    Derivation,
    OutOfRangeError,
    PredictionResult,
    derivation_steps,
    derive_reduction,
    eliminate,
    main_theorem_prediction,
    predict_reduction,
)
from .smooth import (
    JHFactor,
    all_smooth_labels,
    jh_compatible,
    jh_factors,
    normalize_smooth,
    share_jh_factor,
    smooth_orbit,
)
