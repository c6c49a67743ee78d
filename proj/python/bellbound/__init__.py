"""Detection-efficiency-robust Bell functionals, no-signaling boxes and exact
locality certification.

All probabilities, Bell values and LP certificates are exact rationals,
exposed to Python as fractions.Fraction.
"""

from bellbound._core import (
    Behavior,
    BellFunctional,
    BoundRow,
    BudgetExceededError,
    CriticalEta,
    DeterministicStrategy,
    LhvMaxResult,
    LocalModel,
    LocalModelComponent,
    LocalityVerdict,
    NoSignalingReport,
    NoSignalingWitness,
    RootBound,
    Scenario,
    ScenarioMismatchError,
    SeparatingWitness,
    SignalingError,
    ValidationError,
    apply_loss,
    bipartite_bound,
    bounds_csv,
    bounds_table,
    build_bipartite,
    build_multipartite,
    check_no_signaling,
    critical_eta,
    degrade_model,
    deterministic_behavior,
    enumerate_deterministic,
    evaluate,
    is_local,
    load_behavior,
    load_functional,
    load_model,
    load_witness,
    local_bound_certificate,
    marginal,
    max_bell_value,
    max_bell_value_shard,
    min_prime_geq,
    min_prime_gt,
    model_behavior,
    modular_box_bipartite,
    modular_box_multipartite,
    multipartite_lower,
    multipartite_upper,
    outer_iteration_count,
    save_behavior,
    save_functional,
    save_model,
    save_witness,
    strategy_from_ordinal,
    strategy_ordinal,
    total_strategy_count,
)

__version__ = "0.1.0"
