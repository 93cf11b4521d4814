from os.path import join

# Log files written when --out_dir is given.
LOG_FILE = 'mpcoh.log'

# Command reports
DIR_REPORTS = 'reports'
PATH_REPORT_JSON = join(DIR_REPORTS, '{prefix}.{command}.json')
PATH_REPORT_TXT = join(DIR_REPORTS, '{prefix}.{command}.txt')

# Command: sweep
DIR_SWEEP = 'sweep'
PATH_SWEEP_SUMMARY = join(DIR_SWEEP, '{prefix}.{criterion}.summary.json')
PATH_SWEEP_INCONSISTENT = join(DIR_SWEEP, '{prefix}.{criterion}.inconsistent.tsv')
