"""Primary and prime spectra of finite commutative rings."""

from ._core import (
    CapExceeded,
    NotACover,
    Ring,
    SpecSyntaxError,
    ValidationError,
    __version__,
    a2_failure_witness_z,
    closure_equal_z,
    closure_equal_zxz,
    extract_finite_subcover_z,
    factorize,
    property_names,
    run,
    v_rad_z,
    v_z,
)

__all__ = [
    "CapExceeded",
    "NotACover",
    "Ring",
    "SpecSyntaxError",
    "ValidationError",
    "__version__",
    "a2_failure_witness_z",
    "closure_equal_z",
    "closure_equal_zxz",
    "extract_finite_subcover_z",
    "factorize",
    "property_names",
    "run",
    "v_rad_z",
    "v_z",
]
