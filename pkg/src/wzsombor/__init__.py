"""Weakly zero-divisor graphs of Z_n: Sombor index, spectrum and energy."""

from .errors import ConvergenceError, GuardError, NotApplicableError
from .kernels import BACKEND
from .numtheory import Factorization, factorize, gcd, proper_divisors, totient
from .ring_oracle import DenseGraph, annihilator, build_dense_oracle, wzd_adjacent, zero_divisors
from .sombor_index import IndexReport, sombor_compressed, sombor_direct, sombor_formula
from .spectral import (
    Spectrum,
    energy,
    energy_bounds,
    eig_sym,
    quotient_matrix,
    sombor_matrix,
    spectrum_full,
    spectrum_theoretical,
)
from .structure import CompressedGraph, build_compressed, expand, members, partition

__version__ = "0.1.0"
