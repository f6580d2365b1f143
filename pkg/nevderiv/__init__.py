"""Extended Neville interpolation: values and derivatives of interpolating polynomials."""

__version__ = "1.0.0"
