"""Exact verification of determinant identities involving quadratic residues."""

from .exactla import IntMatrix, det_bareiss, det_mod, det_mod_prime
from .identities import Family, FamilyParams, build_family
from .numtheory import is_prime, jacobi, legendre_euler
from .verify import Status, TheoremId, VerificationRecord

__version__ = "0.1.0"
