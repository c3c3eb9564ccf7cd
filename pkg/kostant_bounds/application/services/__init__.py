from .closed_forms import asymptotic_bound, big_f, catalan, comparators, staircase_count
from .entropy_bounds import general_lower_bound, lower_bound_at, upper_bound_at, volume_lower_bound
from .exact_count import KostantCounter, count_brute, count_exact, count_unit_flows_det, fit_recurrence
from .lidskii import cry_large_t_bounds, lidskii_bounds, lidskii_count, lidskii_terms
from .scaling_opt import ScalingResult, capacity_log, maximize_entropy, maximize_log_product, solve_entropy
from .vertex_average import average_cry, average_positive, average_vertices, enumerate_vertices, reference_flow

__all__ = [
    'KostantCounter',
    'ScalingResult',
    'asymptotic_bound',
    'average_cry',
    'average_positive',
    'average_vertices',
    'big_f',
    'capacity_log',
    'catalan',
    'comparators',
    'count_brute',
    'count_exact',
    'count_unit_flows_det',
    'cry_large_t_bounds',
    'enumerate_vertices',
    'fit_recurrence',
    'general_lower_bound',
    'lidskii_bounds',
    'lidskii_count',
    'lidskii_terms',
    'lower_bound_at',
    'maximize_entropy',
    'maximize_log_product',
    'reference_flow',
    'solve_entropy',
    'staircase_count',
    'upper_bound_at',
    'volume_lower_bound',
]
