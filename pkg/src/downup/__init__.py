"""Exact computations with down-up algebras A(alpha, beta, gamma).

Normal forms and confluence, maps onto quantum planes and quantized Weyl
algebras, explicit essential extensions of simple modules with constructive
witnesses, orbit computations for the double-root case, and a classifier for
property (diamond).
"""

from .errors import *  # noqa: F401,F403
from .scalars import (Cyclotomic, Rational, RationalFunction, Scalar, cyclotomic_poly,
                      is_torsion, root_of_unity_order, unify)
from .ncalg import (AlgebraElement, Presentation, check_confluence, downup, is_central,
                    normal_form, normality_scalars, qplane, qweyl, r_commutator)
from .parsing import parse_element, parse_scalar
from .morphisms import (GeneratorMap, HomCheck, apply_hom, check_hom, lemma_map, pull_back,
                        quantum_plane_map, quantum_weyl_map, verify)
from .classifier import DiamondVerdict, Status, classify, normalize_gamma

__version__ = "0.1.0"
