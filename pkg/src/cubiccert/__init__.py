"""Obstruction certificates for stable non-rationality of cubic hypersurfaces.

The library models tower fields ``k((l1))...((ln))`` over complex, real,
finite and p-adic bases, their mod-ell cohomology as an exterior algebra with
residue maps, diagonal quadratic and Pfister forms with an exact anisotropy
decision, and exact real-root counting.  :mod:`cubiccert.certificates` combines
them into machine-checkable certificates.
"""

from .certificates import (
    ObstructionCertificate,
    SurveyTable,
    Verdict,
    build_diagonal_certificate,
    build_diagonal_padic_certificate,
    build_fibered_quadric_witness,
    build_quadric_pair_witness,
    build_real_witness,
    constructive_witness,
    survey,
    verify_certificate,
)
from .errors import (
    AdmissibilityError,
    CertError,
    DomainError,
    HypothesisError,
    ParseError,
    PreconditionError,
    ShapeError,
    SingularModelError,
    UnsupportedError,
)
from .quadforms import (
    DiagonalQuadraticForm,
    PfisterForm,
    expand_pfister,
    is_anisotropic,
    is_pfister_subform_syntactic,
    pfister_represents,
    springer_split,
    u_invariant,
)
from .realtopo import RationalCubic, components_count, real_root_count
from .symbols import CohomologyClass, GeometricToken, cup, residue, specialize, symbol
from .tower import BaseField, ClassVector, Monomial, TowerField, class_dim, class_of, is_lth_power, laurent_tower

__version__ = "0.1.0"
