"""Constants for the latmat library."""

# Size limits
DEFAULT_CANONICAL_MAX_SIZE = 10
DEFAULT_ENUMERATION_MAX_SIZE = 8
DEFAULT_ABSTRACT_CHECK_MAX_SIZE = 12
COFACTOR_MAX_SIZE = 8
FILTER_ROUTE_MAX_SIZE = 7

# Random generation
DEFAULT_SEED = 0
DEFAULT_VALUE_BOUND = 10**6
DEFAULT_SAMPLE_BOUND = 10**6
MAX_GENERATION_ATTEMPTS = 10_000

# CLI exit codes
EXIT_OK = 0
EXIT_SINGULAR = 1
EXIT_INPUT_ERROR = 2

# Verdicts and report scopes
VERDICT_INVERTIBLE = "invertible"
VERDICT_SINGULAR = "singular"
SCOPE_JOIN = "join"
SCOPE_MEET_ONLY = "meet-side only"

# Semimultiplicativity test scopes
SCOPE_EXHAUSTIVE = "exhaustive"
SCOPE_PAIRS_OF_S = "pairs of S"
SCOPE_SAMPLED = "sampled"

# Catalog
CATALOG_RESOURCE = "catalog.json"
HONG_TARGET_LABEL = "S_{3,8}"

# Error Messages
ERROR_MESSAGES = {
    "cycle": "Cover relations contain a cycle through elements {i} and {j}",
    "self_cover": "Element {i} cannot cover itself",
    "index_range": "Index {index} out of range for a poset with {n} elements",
    "not_linear_extension": "Order relation is not indexed by a linear extension: {i} <= {j}",
    "not_partial_order": "Relation is not a partial order: {reason}",
    "size_limit": "{what} supports at most {limit} elements, got {n}",
    "size_minimum": "{what} needs at least {limit} elements, got {n}",
    "poset_mismatch": "Incidence functions live on different posets",
    "support": "Incidence function has nonzero value {value} at ({i}, {j}) outside the order",
    "no_bottom": "Poset has no least element",
    "duplicate": "Element {element} appears more than once",
    "non_positive": "Divisor lattice elements must be positive integers, got {element}",
    "not_in_ambient": "Element {element} is not in the ambient lattice",
    "zero_value": "Valuation {valuation} evaluates to zero at {element}",
    "undefined_value": "Valuation {valuation} has no value at {element}",
    "not_semimultiplicative": "f(x)f(y) != f(x meet y)f(x join y) for the pair ({x}, {y})",
    "not_meet_closed": "Set is not meet-closed: the meet of {x} and {y} is {meet}",
    "lattice_table": "Not a lattice: {reason}",
    "shape": "Matrix shape error: {reason}",
    "singular": "Matrix is singular",
    "special_shape": "Set is not a {kind}: {reason}",
    "zero_denominator": "Denominator f({y1}) + f({y2}) - f({join}) is zero",
    "unknown_label": "Unknown catalog label: {label}",
    "catalog": "Catalog entry {label} is invalid: {reason}",
    "param": "Invalid parameters for {cls}: {reason}",
    "exhaustion": "Could not build a gcd-closed set of {n} elements below {bound}",
    "not_factor_closed": "Set is not factor-closed: {divisor} divides {element}",
    "route_mismatch": "Determinant routes disagree on {elements}: {det} != {other}",
    "parse": "Could not parse {what}: {value}",
}

# Success Messages
SUCCESS_MESSAGES = {
    "poset_valid": "Poset with {n} elements is valid",
    "invertible": "Matrix is invertible (first failing step: none)",
    "reproduced": "All {count} checks reproduced",
}

# Log Messages
LOG_MESSAGES = {
    "poset_reindexed": "Re-indexed {n}-element poset to a linear extension",
    "enumeration_level": "Enumerated {count} meet semilattices with {n} elements",
    "enumeration_candidates": "Level {n}: {candidates} candidate extensions from {parents} parents",
    "catalog_loaded": "Loaded catalog with {count} entries",
    "catalog_validated": "Validated Mobius vector of catalog entry {label}",
    "worker_pool": "Running {tasks} tasks on {threads} worker processes",
    "search_progress": "Search {template}: {tried} parameter tuples tried, {found} hits",
    "search_hit": "Singular gcd-closed set found: {elements}",
    "report_scope": "Valuation is not semimultiplicative on S, report is {scope}",
    "random_trim": "Closure overshoots to {size} elements, trimming maximal elements",
}

# Class name tables
INEQUALITY_CLASSES = {
    "g36": "G_{3,6}",
    "g37": "G_{3,7}",
    "g47a": "G_{4,7}^{(1)}",
    "g47b": "G_{4,7}^{(2)}",
    "gn2n": "G_{n-2,n}",
}
