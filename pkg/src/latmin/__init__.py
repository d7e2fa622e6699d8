"""Minimal two-species periodic disc assemblies via the Dedekind eta function."""

from .assembly import (DiscAssembly, SpeciesParams, check_disjoint, f_tilde, interaction_F,
                       interaction_F_quadrature, mix_weight, optimal_scale, require_disjoint)
from .errors import (BracketFailure, BudgetExceeded, DegenerateInteraction, DomainError, GridBeatsFormula,
                     InvalidParams, LatminError, NonConvergence, NotDisjoint, OnLattice, OutOfRange,
                     Unclassified)
from .green import (LatticeBasis, fourier_green, green_array, green_value, h_regular, h_regular_at_zero,
                    half_period_values, verify_product_identities)
from .minimizer import (LatticeClass, LatticeKind, MinimalAssembly, PhasePoint, classify, maximize_f_b,
                        minimal_assembly, p_of_b, phase_diagram, q_of_b, threshold_B)
from .modular import (Generator, SeriesBudget, UhpPoint, apply_generator, apply_word, canonicalize,
                      default_budget, eta4, in_w_bar, log_eta4)
from .objective import (MixWeight, arg_z_eta, circle_transfer, dual_point, f_b, f_component, grad_f_b,
                        near_singular_corner)
from .series import SpeciesTag, axis_derivative, gradient_series, ratio_Y0_over_Y1
from .verifier import (CheckResult, check_beta_conditions, check_lemma_suite, check_paper_constants,
                       check_T_positive, run_suite)

__version__ = "0.1.0"
