"""
Django settings for tpequal project.

Generated by 'django-admin startproject' using Django 6.0.1.

The project has no web surface: it is driven entirely through management
commands (``python manage.py classify ...``) and the ``positivity`` app's
library modules. There are no models, so no database is configured.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/6.0/ref/settings/
"""

import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get('DJANGO_SECRET_KEY', 'django-insecure-tpequal-local-only')

DEBUG = os.environ.get('DJANGO_DEBUG', 'False') == 'True'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'positivity',
]

DATABASES = {}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# ============================================================================
# LOGGING
# ============================================================================
# Reports go to stdout as JSON, so every log record is routed to stderr.

TPM_LOG_LEVEL = os.environ.get('TPM_LOG_LEVEL', 'WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'stderr': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'positivity': {
            'handlers': ['stderr'],
            'level': TPM_LOG_LEVEL,
            'propagate': False,
        },
    },
}


# ============================================================================
# POSITIVITY SETTINGS
# ============================================================================
# Every randomized procedure is seeded; identical seeds give identical reports.

# Seed used when a command is run without --seed
TPM_DEFAULT_SEED = int(os.environ.get('TPM_DEFAULT_SEED', '0'))

# Largest Hadamard exponent tried by the doubling schedule 1, 2, 4, ...
TPM_EVENTUAL_TP_CAP = int(os.environ.get('TPM_EVENTUAL_TP_CAP', '64'))

# Base t of the exponential matrix b_ij = t^(a_ij); must be a rational > 1
TPM_EXP_BASE = os.environ.get('TPM_EXP_BASE', '2')

# Projective maps tried before general-position normalization gives up
TPM_NORMALIZE_RETRY_BUDGET = int(os.environ.get('TPM_NORMALIZE_RETRY_BUDGET', '64'))

# General-position maps compared by the construction; the one with the
# evenest vertical-distance second differences is kept
TPM_NORMALIZE_CANDIDATES = int(os.environ.get('TPM_NORMALIZE_CANDIDATES', '6'))

# Fresh perturbation draws tried by the totally-nonsingular fill
TPM_TNS_RETRY_BUDGET = int(os.environ.get('TPM_TNS_RETRY_BUDGET', '16'))

# Masks larger than this (rows or columns) log a runtime warning before filling
TPM_TNS_SIZE_WARNING = int(os.environ.get('TPM_TNS_SIZE_WARNING', '8'))

# Exhaustive minor enumeration warns beyond this dimension
TPM_EXHAUSTIVE_MINOR_CAP = int(os.environ.get('TPM_EXHAUSTIVE_MINOR_CAP', '10'))

# Integer exponents above this magnitude switch from exact scaling to rounding
TPM_EXACT_EXPONENT_CEILING = int(os.environ.get('TPM_EXACT_EXPONENT_CEILING', '4096'))
