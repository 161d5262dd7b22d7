"""Exact checks of three-element generating sets for the (liftable) Hilden group."""

from .braidcalc import BraidWord, NamedElement, gamma, named_word, perm_of, syntactic_cancel
from .freegroup import (FreeAut, FreeWord, apply_aut, common_conjugator, compose, cyclic_reduce,
                        free_reduce, inverse_of, out_equal, puncture_perm)
from .hildengen import (GenWord, Identity, KMode, Result, identity_catalog, rewrite,
                        standard_gens, three_gens, verify_generation, verify_identity)
from .liftcheck import CoverConfig, Parity, enumerate_W, is_liftable, parity_class
from .perm import Perm

__version__ = "0.1.0"
