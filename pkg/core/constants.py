"""
Global constants for accmo.

Centralizes numeric defaults, file names and limits used
throughout the library and the experiment CLI.
"""

# Subproblem Configuration
KKT_TOLERANCE = 1e-10
FACE_ENUMERATION_MAX_M = 8  # exact active-face enumeration up to 2^8 - 1 faces
FEASIBILITY_SLACK = 1e-12
PROJECTED_GRADIENT_MAX_ITERS = 20000

# Oracle Configuration
ORACLE_MAX_M = 4
ORACLE_GRID_RESOLUTION = 1e-3
ORACLE_MAX_GRID_POINTS = 5_000_000
ORACLE_REFINEMENT_ROUNDS = 18
ORACLE_REFINEMENT_HALF_STEPS = 10
ORACLE_MAX_MOVES_PER_ROUND = 100

# Backtracking Configuration
BACKTRACKING_MAX_REDUCTIONS = 60
BACKTRACKING_RELATIVE_SLACK = 1e-12

# Run Configuration
DENSE_ITERATE_MAX_N = 64  # store every iterate up to this dimension
ITERATE_THINNING_STRIDE = 10
LOG_EVERY = 100

# Finite Differences
FINITE_DIFFERENCE_STEP = 1e-6

# Output Configuration
TRACE_COORDINATE_MAX_N = 8  # x_1..x_n columns only for small problems
SUMMARY_FILENAME = "summary.json"
TRACE_DIRNAME = "traces"
PLOT_DATA_DIRNAME = "plot_data"
CSV_FLOAT_FORMAT = ".17g"

# File Configuration
CONFIG_FILENAME = "accmo.json"

# Exit Codes
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARTIAL = 2

# Supported Values
SUPPORTED_METHODS = ["SD", "Inertial", "AccG", "AccGNoQ", "AccGSwitch", "NesterovRef"]
SUPPORTED_PROBLEMS = ["logsumexp", "witting", "quadratic"]
CONFIG_TEMPLATES = ["witting", "logsumexp", "quadratic", "witting-sweep"]

# Step sizes of the subproblem-free sweep template
SWEEP_STEP_SIZES = [5e-3, 1e-2, 5e-2]
