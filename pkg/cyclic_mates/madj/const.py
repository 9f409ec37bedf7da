MAX_SIZE_DEFAULT = 10**6
MAX_SIZE_ENV = "MADJ_MAX_SIZE"
DEBUG_CHECKS_ENV = "MADJ_DEBUG_CHECKS"

ARITY_BOUND_DEFAULT = 2

OPPOSITE_SUFFIX = "^op"
ARROW_SUFFIX = "^2"
PRODUCT_SEPARATOR = " × "
TERMINAL_NAME = "1"

SCHEMA_FINCAT = "fincat/1"
SCHEMA_FUNCTOR = "functor/1"
SCHEMA_ADJ = "adj/1"
SCHEMA_MADJ = "madj/1"
SCHEMA_TWOCELL = "twocell/1"
SCHEMA_UNIVERSE = "universe/1"

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_ERROR = 2
