"""Numerical kernels: special functions, quadrature, spectral maps and transforms."""
