import os

import django


def pytest_configure():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'harm_site.settings')
    os.environ.setdefault('HARM_TESTING', '1')
    django.setup()
