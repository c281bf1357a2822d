import json
from pathlib import Path

import pytest
from jsonschema import Draft202012Validator
from referencing import Registry, Resource

from quasidiagrams import QuasiDiagram

SCHEMA_DIR = Path(__file__).resolve().parents[1] / "docs" / "schemas"


def D(text, n):
    return QuasiDiagram.parse(text, n)


@pytest.fixture(scope="session")
def schema_validator():
    resources = {}
    for path in SCHEMA_DIR.glob("*.schema.json"):
        schema = json.loads(path.read_text())
        resources[schema["$id"]] = Resource.from_contents(schema)
    registry = Registry().with_resources(resources.items())

    def validate(name, instance):
        schema = resources[f"{name}.schema.json"].contents
        Draft202012Validator(schema, registry=registry).validate(instance)

    return validate
