"""Exact quantum-torus recurrence operators and colored Jones polynomials of
torus knots, with a mechanical verification harness for annihilation,
reduction and involution identities."""

from .classical import (
    APoly,
    a_polynomial,
    a_prime,
    check_a_prime_sigma,
    check_epsilon_factorization,
    check_p_membership_powers,
    divides,
    sigma_comm,
)
from .jones import (
    SUITE_KNOTS,
    BadParams,
    TorusKnot,
    colored_jones,
    g_seq,
    g_sequence,
    h_seq,
    h_sequence,
    jones_sequence,
    lowest_degree_formula,
)
from .laurent import (
    DivisionByZero,
    MLPoly,
    NotDivisible,
    TPoly,
    ZeroPolynomial,
    eval_m,
    lambda_poly,
    quantum_integer,
)
from .operators import (
    KernelQuery,
    KernelResult,
    NamedOperator,
    SystemTooLarge,
    VerifyReport,
    WrongCase,
    build_F,
    build_G,
    build_P,
    build_PQ,
    build_Q,
    build_R,
    build_named,
    matches_up_to_unit,
    minimality_kernel,
    verify_annihilation,
    verify_lemma_P,
    verify_lemma_Q,
    verify_pq_consistency,
    verify_recurrence,
    verify_sigma_fixed,
)
from .qtorus import (
    DiscreteSeq,
    OperatorSyntaxError,
    QTElem,
    acted,
    apply_op,
    epsilon,
    parse,
    qt_mul,
    serialize,
    sigma,
)

__version__ = "0.1.0"

__all__ = [
    "APoly",
    "BadParams",
    "DiscreteSeq",
    "DivisionByZero",
    "KernelQuery",
    "KernelResult",
    "MLPoly",
    "NamedOperator",
    "NotDivisible",
    "OperatorSyntaxError",
    "QTElem",
    "SUITE_KNOTS",
    "SystemTooLarge",
    "TPoly",
    "TorusKnot",
    "VerifyReport",
    "WrongCase",
    "ZeroPolynomial",
    "a_polynomial",
    "a_prime",
    "acted",
    "apply_op",
    "build_F",
    "build_G",
    "build_P",
    "build_PQ",
    "build_Q",
    "build_R",
    "build_named",
    "check_a_prime_sigma",
    "check_epsilon_factorization",
    "check_p_membership_powers",
    "colored_jones",
    "divides",
    "epsilon",
    "eval_m",
    "g_seq",
    "g_sequence",
    "h_seq",
    "h_sequence",
    "jones_sequence",
    "lambda_poly",
    "lowest_degree_formula",
    "matches_up_to_unit",
    "minimality_kernel",
    "parse",
    "qt_mul",
    "quantum_integer",
    "serialize",
    "sigma",
    "sigma_comm",
    "verify_annihilation",
    "verify_lemma_P",
    "verify_lemma_Q",
    "verify_pq_consistency",
    "verify_recurrence",
    "verify_sigma_fixed",
]
