"""
Application-wide constants.
"""

# Output
COUNT_KEY: str = 'K'  # JSON key of an exact count
CSV_SUFFIX: str = '.csv'

# Sweep table columns, in order
SWEEP_COLUMNS: tuple[str, ...] = (
    'n', 'family', 'params', 'K', 'log_lower_avg', 'log_lower_lidskii', 'log_upper', 'gap',
)

# Relative slack for float-evaluated inequality certificates
FLOAT_SLACK: float = 1e-12

# Largest n for which `asymptotic` also evaluates the exact comparators
COMPARATOR_MAX_N: int = 500
