import logging
import os

import pytest

# Selects TestingSettings before app.config is first imported
os.environ.setdefault("ENVIRONMENT", "testing")


@pytest.fixture
def package_log(caplog):
    """Attach caplog to a package logger; setup_monitoring turns propagation off"""
    attached = []

    def attach(name: str):
        logger = logging.getLogger(name)
        logger.addHandler(caplog.handler)
        caplog.set_level(logging.WARNING, logger=name)
        attached.append(logger)
        return caplog

    yield attach
    for logger in attached:
        logger.removeHandler(caplog.handler)
