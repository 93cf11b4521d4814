"""
Constants used throughout mpcoh. Nothing here depends on the environment;
every value can be overridden from the command line where it matters.
"""

# Version of the JSON report layout, bumped on any key change.
JSON_SCHEMA_VERSION = 1

# Splitting criteria understood by `split` and `sweep`. Reports always carry
# the thm ids; the descriptive names are accepted as aliases.
CRITERION_BALANCED = 'thm31'
CRITERION_UNIT = 'thm32'
CRITERION_OMEGA = 'thm33'
CRITERIA = (CRITERION_BALANCED, CRITERION_UNIT, CRITERION_OMEGA)
CRITERION_ALIASES = {'balanced': CRITERION_BALANCED,
                     'unit': CRITERION_UNIT,
                     'omega': CRITERION_OMEGA}

# Koszul complexes checked by `koszul_verify`.
KOSZUL_FIRST = 'first'
KOSZUL_LAST = 'last'
KOSZUL_SPLICED = 'spliced'
KOSZUL_VARIANTS = (KOSZUL_FIRST, KOSZUL_LAST, KOSZUL_SPLICED)

# Regularity search window is [-B - LOW_PAD, B + d + HIGH_PAD] where
# B = max |parameter| + max n_j.
REG_WINDOW_LOW_PAD = 1
REG_WINDOW_HIGH_PAD = 2

# Defaults for the `sweep` command.
SWEEP_MIN_TWIST = -2
SWEEP_MAX_TWIST = 2
SWEEP_MAX_SUMMANDS = 2

# Internal settings used for logging.
LOG_TASK = 21
