"""Exact computations in the module category of the restricted quantum
sl(2) at a 2p-th root of unity: construction and verification of the
algebra and its finite-dimensional modules, complete decomposition into
the classified indecomposables, Ext algebra via minimal projective
resolutions, the Kronecker-quiver correspondence, and the p = 2
R-matrix and ribbon structure."""

__version__ = "0.1.0"
