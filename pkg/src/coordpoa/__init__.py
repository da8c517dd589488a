"""Price of anarchy of the networked A/B coordination game."""

from .analysis import (
    BoundReport,
    Decomposition,
    decompose,
    lambda_bound_check,
    mediant_check,
    monotonicity_report,
    nash_decomposition_check,
    phi_counting_check,
    poa_upper_bound,
)
from .errors import *  # noqa: F401,F403
from .game import (
    DynamicsTrace,
    NashReport,
    is_nash,
    optimal_welfare,
    quotient,
    run_dynamics,
    social_welfare,
    utility,
)
from .graph import (
    EdgeState,
    Graph,
    Params,
    Profile,
    Strategy,
    build_graph,
    classify_edges,
    to_rational,
    validate_params,
)
from .oracle import CampaignConfig, enumerate_nash, exact_poa, random_graph, verify_bound_campaign
from .worstcase import (
    WorstCasePlan,
    fractional_worst_state,
    realize_graph,
    scale_to_integral,
    worst_case_report,
)

__version__ = "0.1.0"
