"""Rank-one local system cohomology of real line arrangement complements via chamber complexes."""
from .arrangement import (Arrangement, Chamber, betti, enumerate_chambers, infinity_span, intersection_poset,
                          localize, normalize_arrangement, opposite_chamber, separating)
from .exactfield import GF, QQ, Field, FieldElem, Matrix, cyclotomic, cyclotomic_polynomial, matrix_rank, root_of_unity
from .flagcomplex import (CharacterSpec, build_complex, build_flag, degree, delta, linearized_complex,
                          local_cohomology, stratify)

__version__ = "0.1.0"
