"""Exact commutative-algebra engine with a theorem-verification harness."""

from .complexes import (ComplexError, koszul_complex, koszul_homology,
                        koszul_homology_certified)
from .derived import (UnstabilizedError, ext, local_cohomology_socle,
                      resolution_complex, tor)
from .fields import F101, QQ, Field
from .finitering import (FiniteIdeal, FiniteModule, FiniteRing,
                         FiniteRingError, duality_sweep, exhaustive_verify,
                         koszul_homology_fr, local_cohomology_fr,
                         local_homology_fr, matlis_dual, parse_finite_ring)
from .modules import FPModule, LengthError, modules_equivalent
from .rings import (GREVLEX, LEX, IdealGens, ParseError, Poly, PolyRing,
                    RingMismatchError, monomial_cmp, parse_ideal, parse_poly,
                    parse_ring)
from .serre import (INF, SerrePredicate, TheoremViolation,
                    amplitude_identity_check, builtin_predicates, depth_triple,
                    p_depth, p_width, width_pair)
from .suites import SUITE_IDS, Report, SuiteError, run_suite

__version__ = "0.1.0"
