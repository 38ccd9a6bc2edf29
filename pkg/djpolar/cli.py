# -*- coding: utf-8 -*-
"""
The ``djpolar`` console script.

Outside a Django project it configures a minimal project so the management
commands run on their own: ``djpolar polar --corpus ex1``. Runs saved with
``--save`` go to the SQLite file named by ``DJPOLAR_DATABASE``.
Inside a project (``DJANGO_SETTINGS_MODULE`` set) the project settings are
used unchanged.
"""
from __future__ import unicode_literals

import os
import sys

import django
from django.conf import settings
from django.core.management import call_command, execute_from_command_line

STANDALONE_SETTINGS = dict(
    DEBUG=False,
    INSTALLED_APPS=[
        "django.contrib.contenttypes",
        "djpolar",
    ],
    DATABASES={
        "default": {
            "ENGINE": "django.db.backends.sqlite3",
            "NAME": os.environ.get("DJPOLAR_DATABASE", ":memory:"),
        }
    },
    TEMPLATES=[
        {
            "BACKEND": "django.template.backends.django.DjangoTemplates",
            "APP_DIRS": True,
        },
    ],
    DEFAULT_AUTO_FIELD="django.db.models.AutoField",
    USE_TZ=True,
    LOGGING={
        "version": 1,
        "disable_existing_loggers": False,
        "handlers": {"console": {"class": "logging.StreamHandler"}},
        "loggers": {"djpolar": {"handlers": ["console"], "level": os.environ.get("DJPOLAR_LOG_LEVEL", "WARNING")}},
    },
)


def configure():
    """Returns True when the standalone project was configured."""
    if settings.configured or os.environ.get("DJANGO_SETTINGS_MODULE"):
        return False
    settings.configure(**STANDALONE_SETTINGS)
    return True


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    if configure() and "--save" in argv:
        django.setup()
        call_command("migrate", verbosity=0, interactive=False)
    execute_from_command_line(["djpolar"] + argv)


if __name__ == "__main__":
    main()
