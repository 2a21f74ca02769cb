import json
import os
import subprocess
from pathlib import Path

import jsonschema
import pytest

ROOT = Path(__file__).resolve().parents[2]
BIN = os.environ.get("EQCC_BIN", str(ROOT / "build" / "tools" / "eqcc"))
SCHEMAS = Path(os.environ.get("EQCC_SCHEMAS", ROOT / "schemas"))


class Result:
    def __init__(self, proc):
        self.code = proc.returncode
        self.out = proc.stdout
        self.err = proc.stderr

    def json(self):
        return json.loads(self.out)

    def error(self):
        return json.loads(self.err.strip().splitlines()[-1])


@pytest.fixture
def eqcc():
    def run(*args, stdin=None, timeout=600):
        proc = subprocess.run([BIN, *map(str, args)], input=stdin, capture_output=True,
                              text=True, timeout=timeout)
        return Result(proc)
    return run


@pytest.fixture
def validate():
    cache = {}

    def check(doc, name):
        if name not in cache:
            cache[name] = json.loads((SCHEMAS / f"{name}.schema.json").read_text())
        jsonschema.validate(doc, cache[name])
        return doc
    return check
