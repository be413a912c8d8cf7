"""Domain-object based adaptive service composition: models, planner and engine."""

from pathlib import Path

from ._domobj import (
    Engine,
    Model,
    apply_event,
    eval_condition,
    plan,
    process_diagram,
    property_diagram,
    system_diagram,
)

__all__ = [
    "Engine",
    "Model",
    "apply_event",
    "eval_condition",
    "load_model",
    "plan",
    "process_diagram",
    "property_diagram",
    "system_diagram",
]


def load_model(path):
    """Parses a model document from a file."""
    return Model.from_json(Path(path).read_text())
