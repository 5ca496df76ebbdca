"""Realizability of coefficient sign patterns paired with root-moduli orders
for real-rooted polynomials: decision rules, exact rational witnesses, and
inequality certificate suites."""

__version__ = "0.1.0"

from .patterns import (
    ChangePattern,
    Couple,
    IncompatibleCoupleError,
    OrderWord,
    ParseError,
    SignPattern,
    canonical_order,
    cp_to_sign,
    involution_m,
    involution_r,
    is_canonical_pattern,
    is_rigid_order,
    nu_of_order,
    orbit,
    parse_cp,
    parse_order,
    parse_pattern,
    sign_to_cp,
)
from .polyalgebra import (
    NonGenericReport,
    Polynomial,
    RootConfiguration,
    classify,
    classify_roots,
    deflate_negative_root,
    elementary_symmetric,
    elementary_symmetric_all,
    expand,
    format_rational,
    parse_rational,
)
from .decision import (
    EnumerationRow,
    Status,
    Verdict,
    decide,
    decide_one_change,
    decide_two_change,
    enumerate_couples,
    realizable_orders,
)
from .witness import (
    ExhaustedReport,
    SearchBudget,
    WitnessArchive,
    WitnessRecord,
    construct_flat_extension,
    construct_perturbed_multiple,
    search,
    verify,
)
from .certificates import (
    Lemma1Quantities,
    Lemma1Sample,
    Lemma6Quantities,
    Lemma6Sample,
    Lemma7Quantities,
    Lemma8Quantities,
    RegionReport,
    eval_lemma1,
    eval_lemma6,
    eval_lemma7,
    eval_lemma8,
    lemma8_corner,
    lemma8_corner_suite,
    sample_region,
)
from .report import ReportConfig, build_report

__all__ = [name for name in dir() if not name.startswith("_")]
