"""Local criteria for the unit equation and the asymptotic Fermat's Last
Theorem over number fields, in exact arithmetic, with lemma-level
certificates cross-checked against a brute-force enumeration oracle."""

from .exactmath import (
    IntPoly,
    ResiduePoly,
    FactorizationModP,
    IrreducibilityReport,
    X,
    count_real_roots,
    factor_mod_p,
    is_irreducible_over_Q,
    is_prime,
    poly_gcd,
)
from .numberfield import (
    CharPolyResult,
    FieldElement,
    NumberField,
    char_poly,
    is_algebraic_integer,
    norm,
    trace,
)
from .splitting import (
    INDETERMINATE,
    INERT,
    OTHER,
    TOTALLY_RAMIFIED,
    TOTALLY_SPLIT,
    SplittingShape,
    dedekind_p_maximal,
    degree_one_residues,
    eisenstein_at,
    splitting_shape,
)
from .residues import (
    CongruenceCheck,
    ResidueReport,
    TraceContradictionReport,
    check_3adic_lemma,
    check_charpoly_congruence,
    check_norm_congruence,
    mod9_norm_residue,
    residue_report,
    residue_totally_ramified,
    trace_obstruction,
    unit_residue_pm1,
)
from .sunit import (
    FSConditionReport,
    SUnitContext,
    SUnitSolution,
    ValuationBoundReport,
    check_FS_conditions,
    check_valbound_lemma,
    is_S_unit,
    m_value,
    make_solution,
    ord_q,
    simplify_solution,
    sunit_context,
)
from .search import (
    SearchConfig,
    SolutionSet,
    enumerate_sunit_solutions,
    enumerate_unit_solutions,
    orbit_partition,
    symmetry_images,
)
from .criteria import (
    Certificate,
    CertificateStep,
    HypothesisCheck,
    Verdict,
    all_verdicts,
    check_conditional,
    check_pram,
    check_t23,
    check_t23ram,
    check_triantafillou,
    check_unitcrit,
    replay_certificate,
    verify_solutions_against_certificate,
)
from .errors import HypothesisError, InputError, LemmaContradiction

__version__ = "0.1.0"

__all__ = [
    "IntPoly",
    "ResiduePoly",
    "FactorizationModP",
    "IrreducibilityReport",
    "X",
    "count_real_roots",
    "factor_mod_p",
    "is_irreducible_over_Q",
    "is_prime",
    "poly_gcd",
    "CharPolyResult",
    "FieldElement",
    "NumberField",
    "char_poly",
    "is_algebraic_integer",
    "norm",
    "trace",
    "SplittingShape",
    "dedekind_p_maximal",
    "degree_one_residues",
    "eisenstein_at",
    "splitting_shape",
    "INERT",
    "TOTALLY_RAMIFIED",
    "TOTALLY_SPLIT",
    "OTHER",
    "INDETERMINATE",
    "CongruenceCheck",
    "ResidueReport",
    "TraceContradictionReport",
    "check_3adic_lemma",
    "check_charpoly_congruence",
    "check_norm_congruence",
    "mod9_norm_residue",
    "residue_report",
    "residue_totally_ramified",
    "trace_obstruction",
    "unit_residue_pm1",
    "FSConditionReport",
    "SUnitContext",
    "SUnitSolution",
    "ValuationBoundReport",
    "check_FS_conditions",
    "check_valbound_lemma",
    "is_S_unit",
    "m_value",
    "make_solution",
    "ord_q",
    "simplify_solution",
    "sunit_context",
    "SearchConfig",
    "SolutionSet",
    "enumerate_sunit_solutions",
    "enumerate_unit_solutions",
    "orbit_partition",
    "symmetry_images",
    "Certificate",
    "CertificateStep",
    "HypothesisCheck",
    "Verdict",
    "all_verdicts",
    "check_conditional",
    "check_pram",
    "check_t23",
    "check_t23ram",
    "check_triantafillou",
    "check_unitcrit",
    "replay_certificate",
    "verify_solutions_against_certificate",
    "HypothesisError",
    "InputError",
    "LemmaContradiction",
]
