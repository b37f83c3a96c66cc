APP_NAME = "fairmas"
APP_VERSION = "1.0.0"

# Experiment defaults.
DEFAULT_N_AGENTS = 10
DEFAULT_N_ROUNDS = 50
DEFAULT_SEED = 0
DEFAULT_REWARD_COOPERATE = 10.0
DEFAULT_REWARD_COMPETE = 5.0
DEFAULT_BIAS_PENALTY = 3.0
DEFAULT_BIAS_PENALTY_THRESHOLD = 0.2
DEFAULT_BIAS_INIT_MAX = 0.3
DEFAULT_RESOURCE_THRESHOLD = 0.5
DEFAULT_COOP_BASE_HIGH = 0.8
DEFAULT_COOP_BASE_LOW = 0.3
DEFAULT_PROPAGATION_RATE = 0.0
DEFAULT_REDISTRIBUTION_DELTA = 0.05
DEFAULT_INTERVENTIONS = ("median",)
DEFAULT_GROUP_TOTALS = "mean"

# Incentive defaults.
DEFAULT_FAIRNESS_BONUS = 1.0
DEFAULT_EFFICIENCY_PENALTY = 2.0
DEFAULT_EFFICIENCY_FLOOR = 0.0
INCENTIVE_REWARD_FLOOR = 0.01

# Adversarial agents report just under the penalty threshold.
ADVERSARIAL_MARGIN = 0.01

GROUP_LABELS = ("A", "B")
INTERVENTION_NAMES = ("median", "incentive", "redistribute")

# Weights must sum to one within this tolerance.
WEIGHT_TOLERANCE = 1e-9

# Batch / reproduce.
DEFAULT_BATCH_SEEDS = 200
DEFAULT_WORKERS = 4
REFERENCE_EXAMPLE_ON = {"A": 375.0, "B": 370.0}
REFERENCE_EXAMPLE_OFF = {"A": 390.0, "B": 345.0}

# Optimizer.
DEFAULT_PROFILE_CAP = 2**20
DEFAULT_LOCALSEARCH_ITERS = 200
DEFAULT_LOCALSEARCH_RESTARTS = 32
DEFAULT_SAMPLE_ATTEMPTS = 100

# Environment variables.
ENV_OUT_DIR = "FAIRMAS_OUT"
ENV_LOG_LEVEL = "FAIRMAS_LOG_LEVEL"
ENV_WORKERS = "FAIRMAS_WORKERS"
DEFAULT_OUT_DIR = "output"
DEFAULT_LOG_LEVEL = "WARNING"

# Artifact names.
ROUNDS_CSV = "rounds.csv"
SUMMARY_JSON = "summary.json"
COMPARISON_CSV = "comparison.csv"
BATCH_JSON = "batch.json"
FIGURE_SVG = "figure.svg"
FIGURE_PDF = "figure.pdf"

ROUNDS_CSV_COLUMNS = [
	"round",
	"resource",
	"agent_id",
	"group",
	"action",
	"raw_reward",
	"penalty_applied",
	"adjusted_reward",
	"cum_A",
	"cum_B",
]
OUTCOME_CSV_COLUMNS = ["y_hat", "y", "attribute"]

# CLI exit codes.
EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_IO_ERROR = 2
EXIT_AUDIT_VIOLATION = 3
