from ._sldc import (  # noqa: F401
    CodeParams,
    Codebook,
    Codeword,
    ContainerError,
    InconsistentCodeword,
    SearchCapExceeded,
    binom,
    bounds_report,
    exhaustive_verify,
    level_size,
    log_binom,
    lower_bound_adaptive,
    lym_lower_bound,
    mc_expected_length,
    parse,
    run_protocol,
    serialize,
    upper_bound_nonadaptive,
)
