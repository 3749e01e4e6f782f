"""Closed-form k-plane transforms of radial functions on the constant
curvature spaces, with oracle-backed verification suites."""

from .curvature import Curvature, curv_cos, curv_sin, identity_residuals
from .geometry import Space, disc_area, embedded_distance, hypotenuse
from .lorentz import (RadialSet, UnsupportedEndpointError, endpoint_exponent,
                      lorentz_norm_simple, radial_set_measure)
from .profiles import PlaneOffset, RadialProfile
from .quadrature import QuadratureConfig, integrate
from .transform import (TransformValue, kplane_transform,
                        kplane_transform_oracle, xray_embedded_oracle)

__version__ = "0.1.0"

__all__ = [
    "Curvature",
    "curv_sin",
    "curv_cos",
    "identity_residuals",
    "Space",
    "hypotenuse",
    "disc_area",
    "embedded_distance",
    "RadialProfile",
    "PlaneOffset",
    "QuadratureConfig",
    "integrate",
    "TransformValue",
    "kplane_transform",
    "kplane_transform_oracle",
    "xray_embedded_oracle",
    "RadialSet",
    "radial_set_measure",
    "lorentz_norm_simple",
    "endpoint_exponent",
    "UnsupportedEndpointError",
    "__version__",
]
