"""Truncated g-adic integer arithmetic and the 1800 notebook recomputation."""

from .crt import (
    BaseFactorization,
    ComponentValue,
    factor_base,
    idempotents,
    project,
    recombine,
)
from .digits import DigitExpansion, div_exact_by_unit, invert_unit
from .errors import GadicError, MultipleRootError, NonResidueError, ParseError
from .hensel import LiftedRoot, gadic_roots, hensel_lift, roots_mod_p
from .logarithm import (
    LogSeriesPlan,
    log_gadic,
    log_series,
    log_unit,
    log_value,
    plan_log_series,
    sum_log_series,
)
from .notation import (
    parse_dotted,
    parse_literal,
    parse_tail,
    render_dotted,
    render_tail,
)
from .notebook import NotebookReport, ReportEntry, run_notebook
from .polynomials import IntPolynomial
from .roots import (
    BinomialSeriesPlan,
    GaussStepState,
    PeriodPair,
    gauss_sqrt1_iterate,
    gauss_sqrt1_steps,
    plan_binomial_sqrt,
    quadratic_periods,
    sqrt_binomial,
    sqrt_hensel,
    unit_sqrts_of_one,
)

__version__ = "0.1.0"

__all__ = [
    "BaseFactorization",
    "BinomialSeriesPlan",
    "ComponentValue",
    "DigitExpansion",
    "GadicError",
    "GaussStepState",
    "IntPolynomial",
    "LiftedRoot",
    "LogSeriesPlan",
    "MultipleRootError",
    "NonResidueError",
    "NotebookReport",
    "ParseError",
    "PeriodPair",
    "ReportEntry",
    "div_exact_by_unit",
    "factor_base",
    "gadic_roots",
    "gauss_sqrt1_iterate",
    "gauss_sqrt1_steps",
    "hensel_lift",
    "idempotents",
    "invert_unit",
    "log_gadic",
    "log_series",
    "log_unit",
    "log_value",
    "parse_dotted",
    "parse_literal",
    "parse_tail",
    "plan_binomial_sqrt",
    "plan_log_series",
    "project",
    "quadratic_periods",
    "recombine",
    "render_dotted",
    "render_tail",
    "roots_mod_p",
    "run_notebook",
    "sqrt_binomial",
    "sqrt_hensel",
    "sum_log_series",
    "unit_sqrts_of_one",
]
