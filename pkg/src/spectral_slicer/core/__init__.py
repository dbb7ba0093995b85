"""Numerical kernels: sparse storage, filters, Lanczos and dense eigensolvers."""
