"""
Lets plain ``pytest`` run the Django test cases with the settings of
runtests.py; no pytest plugin is needed.
"""
import django
from django.conf import settings

from tests.settings import TEST_SETTINGS

_state = {}


def pytest_configure(config):
    if not settings.configured:
        settings.configure(**TEST_SETTINGS)
    django.setup()
    from django.test.utils import setup_databases, setup_test_environment

    setup_test_environment()
    _state["databases"] = setup_databases(verbosity=0, interactive=False)


def pytest_unconfigure(config):
    from django.test.utils import teardown_databases, teardown_test_environment

    if "databases" in _state:
        teardown_databases(_state.pop("databases"), verbosity=0)
        teardown_test_environment()
