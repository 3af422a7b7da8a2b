"""Bootstrap Django for plain pytest runs, mirroring manage.py."""
import os
import sys

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'tpequal.settings')
# Exponential matrices carry integers far beyond the default str() limit
if hasattr(sys, 'set_int_max_str_digits'):
    sys.set_int_max_str_digits(0)
django.setup()
