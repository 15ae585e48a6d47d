"""Exact local densities of monic p-adic polynomials with squarefree
discriminant and with maximal monogenic order."""

from .families import DensityResult, SigmaFamily

__all__ = ["DensityResult", "SigmaFamily"]
