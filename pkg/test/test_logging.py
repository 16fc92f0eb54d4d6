import json
import logging

import pytest

from conflab.util.logging import (
    Formatter,
    JsonFormatter,
    Logger,
    get_logger,
    log_exceptions,
)


class ListHandler(logging.Handler):
    def __init__(self):
        super().__init__()
        self.records: list[logging.LogRecord] = []

    def emit(self, record):
        self.records.append(record)


def make_record(msg="check failed", **extra) -> logging.LogRecord:
    record = logging.LogRecord(
        "conflab.test", logging.WARNING, __file__, 1, msg, (), None
    )
    record.__dict__.update(extra)
    return record


def test_formatter_plain_record():
    line = Formatter().format(make_record("plain"))
    assert line.endswith(" - WARNING - plain")


def test_formatter_check_record():
    record = make_record(
        check="jacobi", target="B2", status="fail", witness="(A,X,X): 2*l"
    )
    line = Formatter().format(record)
    assert "[Check: jacobi] - [Target: B2] - [Status: fail]" in line
    assert line.endswith("check failed - [Witness: (A,X,X): 2*l]")


def test_formatter_colors():
    assert "\033[33m" in Formatter(colored=True).format(make_record())
    assert "\033[" not in Formatter(colored=False).format(make_record("\033[31mred"))


def test_formatter_appends_loose_args():
    record = logging.LogRecord(
        "conflab.test", logging.INFO, __file__, 1, "rank", (3,), None
    )
    assert Formatter().format(record).endswith("rank 3")


def test_json_formatter_schema():
    formatter = JsonFormatter({"check": "check", "lvl": "@level", "missing": "nope"})
    payload = json.loads(formatter.format(make_record(check="skew")))
    assert payload == {"check": "skew", "lvl": "WARNING"}


def test_json_formatter_splices_extras():
    formatter = JsonFormatter({"check": "check", "@all": None})
    payload = json.loads(formatter.format(make_record(check="skew", cap=4)))
    assert payload == {"check": "skew", "cap": 4}


def test_json_formatter_default_schema_drops_none():
    payload = json.loads(
        JsonFormatter().format(make_record(check="skew", target="NS", status="pass"))
    )
    assert payload == {"check": "skew", "target": "NS", "status": "pass"}


def test_log_check_attaches_fields():
    logger = Logger("conflab.test.check")
    handler = ListHandler()
    logger.addHandler(handler)
    logger.log_check(logging.WARNING, "module", "V/Vir", "fail", "bad", "(L,v): 1")
    (record,) = handler.records
    assert (record.check, record.target, record.status) == ("module", "V/Vir", "fail")
    assert record.witness == "(L,v): 1"


def test_file_log_is_json(tmp_path):
    path = tmp_path / "lab.log"
    logger = Logger("conflab.test.file", logfile=str(path))
    logger.info("derived", extra={"even": "C"})
    for handler in logger.handlers:
        handler.flush()
    payload = json.loads(path.read_text(encoding="utf-8").splitlines()[0])
    assert payload["message"] == "derived"
    assert payload["level"] == "INFO"
    assert payload["even"] == "C"


def test_get_logger_is_cached():
    assert get_logger("conflab.test.cached") is get_logger("conflab.test.cached")


def test_log_exceptions_reraises():
    handler = ListHandler()
    logger = Logger("conflab.test.raise")
    logger.addHandler(handler)

    @log_exceptions(logger)
    def fail():
        raise ValueError("boom")

    with pytest.raises(ValueError):
        fail()
    assert "boom" in handler.records[-1].getMessage()
    assert handler.records[-1].levelno == logging.ERROR


def test_log_exceptions_uses_instance_logger():
    handler = ListHandler()

    class Runner:
        logger = Logger("conflab.test.instance")

        @log_exceptions
        def run(self):
            raise KeyError("slot")

    Runner.logger.addHandler(handler)
    with pytest.raises(KeyError):
        Runner().run()
    assert handler.records
