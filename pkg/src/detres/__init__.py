"""Exact determinantal resultants of split bundle morphisms on projective space."""

from .polyring import (
    Polynomial,
    VarSet,
    det_fraction_free,
    exact_div,
    monomials_of_degree,
    multivariate_gcd,
)
from .chern_degree import (
    ProblemSpec,
    existence_check,
    multidegree,
    total_degree,
)
from .partition_schur import complex_terms, conc, dual, lemma510, schur_dim
from .resultant_engine import (
    ConcreteMorphism,
    GenericMorphism,
    build_sigma,
    critical_degree,
    generic_morphism,
    resultant_gcd,
    staircase_specialization,
    vanish_test,
)
from .scroll_chow import (
    PlaneStiefel,
    ScrollSpec,
    chow_form,
    chow_problem,
    plane_meets_scroll,
    plucker_coords,
    scroll_equations,
)

__version__ = "1.0.0"
