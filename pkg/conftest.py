import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "scirank.settings")
django.setup()
