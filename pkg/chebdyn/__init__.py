from .chebyshev import (EvenCasePrediction, Lemma31Report, SParameter, TheoremPrediction,
                        TheoremVerdict, coefficient_sum, derivative_mod4_check,
                        displacement_valuation, lemma31_check, odd_coefficients, s_of_m,
                        same_structure, theorem_prediction, verify_theorem)
from .decomposition import (Ball, Basin, BasinKind, CertificateStatus, Decomposition, MinimalComponent,
                            basin_oracle, decompose, minimality_oracle, whole_space)
from .dynamics import (DEFAULT_LEVEL_LIMIT, Behavior, Cycle, CycleClass, a_n, b_n, classify,
                       cycles_at_level, lifts, linearization, make_cycle)
from .errors import (BudgetExceeded, ChebdynError, ConsistencyFault, ContractError, LevelMismatch,
                     ParseError, UsageError)
from .padic import INFINITE, Residue, Valuation, children, reduce, v2
from .polynomial import (IntPolynomial, chebyshev_closed_form, chebyshev_recurrence, compose,
                         derivative, eval_mod)
from .report import Report, ReportDocument

__version__ = '1.0.0'
