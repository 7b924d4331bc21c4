"""Exact-arithmetic laboratory for six-line conic configurations.

Everything runs over the rationals, extended where unavoidable by a
single square root: projective incidence, conic fitting and tangency
residuals, family scans with certified root isolation, double-cover
splitting analysis, divisor-level cycle bookkeeping on rational and
hyperelliptic curves, and exact enumerative counts.
"""

from .scalars import QuadExt, rat, scalar_from_json, scalar_to_json, sign, \
    sqrt_scalar
from .forms import BinaryForm, RationalMap, form_gcd, is_squarefree, \
    linear_form_vanishing_at, one_form, squarefree_decomposition
from .plane import (Conic, Line, Point, are_collinear, conic_through_five,
                    incident, join_points, meet_lines, parameter_of_point,
                    parametrize_conic, pullback_form, tangency_residual,
                    tangent_line_at)
from .config import (CYCLIC_SELECTION, DEFAULT_BASE, DEFAULT_BASE_POINT, INF,
                     THETA, DivisorClass, SexticConfiguration, build_config,
                     canonical_json, config_from_json, config_from_text,
                     config_to_json, config_to_text, humbert_invariant, label,
                     nodes, validate)
from .locus import (ConfigFamily, ResidualResult, RootCertificate, ScanSample,
                    humbert5_residual, isolate_root, preset_config,
                    scan_family, sign_change_family, steady_sign_family,
                    PRESET_PARAMS)
from .cover import (BranchProfile, CoverAnalysis, NodeSheets,
                    NormalizationModel, RootDescriptor, analyze_cover,
                    normalization_model, pullback_sextic)
from .cycles import (CurveComponent, FormalDivisor, FormalPoint, FunctionData,
                     HyperellipticModel, MotivicCycle, PushforwardReport,
                     TorsionSymbol, assemble_cycle, build_new_cycle,
                     collino_cycle, constant_function, function_with_divisor,
                     hyperelliptic_divisor, pushforward_check)
from .counting import (CharacteristicQuery, CountTable, SolutionRecord,
                       conic_characteristic, deformation_witness,
                       kontsevich_counts)
from .render import render_config, render_scan
from . import errors

__version__ = "0.1.0"
