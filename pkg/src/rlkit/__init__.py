"""Finite residuated lattices: filters, quotients, spectra, fractions and radicals."""

from __future__ import annotations

from .algebra import (
    VARIETY_FLAGS,
    Algebra,
    classify,
    derive_imp,
    direct_product,
    find_isomorphism,
    identity_suite,
    validate,
)
from .document import load, parse, serialize
from .errors import ParseError, RLError, TheoremViolation, ValidationError
from .filters import (
    FilterSet,
    enumerate_filters,
    filter_arrow,
    filter_join,
    filter_lattice,
    filter_meet,
    generated_filter,
    has_blp,
    is_maximal,
    is_prime,
    is_pseudo_irreducible,
    principal,
)
from .fractions import ClosedSystem, closed_system, fraction_filter, localize, verify_fraction_iso
from .modelgen import ModelQuery, enumerate_algebras, enumerate_lattices, mine
from .quotients import quotient
from .radicals import blp_transfer_report, has_tprd, rad
from .spectrum import build_spectrum, max_clopen_check
from .theorems import verify

__version__ = "0.1.0"
