import json
import os
from pathlib import Path

import pytest

import domobj

MODELS = Path(os.environ.get("DOMOBJ_MODELS_DIR", Path(__file__).resolve().parents[2] / "models"))


@pytest.fixture(scope="module")
def smartroom():
    return domobj.load_model(MODELS / "smartroom.json")


def test_validate_and_round_trip(smartroom):
    assert smartroom.name == "smartroom"
    assert smartroom.object_names == ["Controller", "Hvac", "Window", "Room"]
    assert smartroom.validate() == []
    assert domobj.Model.from_json(smartroom.to_json()) == smartroom


def test_parse_error_is_value_error():
    with pytest.raises(ValueError, match="1:"):
        domobj.Model.from_json('{"name": 3}')


def test_conditions_and_events(smartroom):
    config = smartroom.initial_configuration()
    assert config == {"HvacStatus": "Operational", "WindowState": "Closed", "RoomTemp": "Hot"}
    assert domobj.eval_condition("RoomTemp = Hot && !(WindowState = Open)", config)
    with pytest.raises(ValueError):
        domobj.eval_condition("RoomTemp == Hot", config)
    assert domobj.apply_event(smartroom, config, "HvacStatus", "fail")["HvacStatus"] == "Broken"
    assert domobj.apply_event(smartroom, config, "HvacStatus", "repair") is None


def test_plan(smartroom):
    assert domobj.plan(smartroom, "RoomTemp = Comfort", requester="Controller") == ["Hvac.CoolByHvac"]
    assert domobj.plan(smartroom, "RoomTemp = Comfort", start={"HvacStatus": "Broken"}) == [
        "Window.CoolByWindow"
    ]
    assert domobj.plan(smartroom, "HvacStatus = Broken") is None


def test_run_with_adaptation(smartroom):
    engine = domobj.Engine(smartroom, (MODELS / "fail-at-1.scenario").read_text())
    assert engine.run(100) == "all_completed"
    assert engine.config == {"HvacStatus": "Broken", "WindowState": "Open", "RoomTemp": "Comfort"}
    records = [json.loads(line) for line in engine.trace().splitlines()]
    attempts = [(r["mechanism"], r["outcome"]) for r in records if r["kind"] == "mechanism_attempt"]
    assert attempts == [
        ("local_adaptation", "failure"),
        ("backward_adaptation", "failure"),
        ("re_refinement", "success"),
    ]
    assert all(status == "completed" for _, status, _, _ in engine.instances)


def test_step_and_inject(smartroom):
    engine = domobj.Engine(smartroom)
    assert engine.inject("RoomTemp", "cool") == "applied"
    lines = engine.step().splitlines()
    assert json.loads(lines[0]) == {"tick": 0, "kind": "tick_start"}
    assert any(json.loads(l)["kind"] == "abstract_skipped" for l in lines)
    assert engine.tick == 1
    assert json.loads(engine.state_json())["tick"] == 1


def test_diagrams(smartroom):
    assert domobj.system_diagram(smartroom).startswith("digraph")
    assert "doublecircle" in domobj.process_diagram(smartroom, "Window", "CoolByWindow")
    assert "peripheries=2" in domobj.property_diagram(smartroom, "RoomTemp")
    assert "configuration" in domobj.Engine(smartroom).snapshot()
    with pytest.raises(KeyError):
        domobj.property_diagram(smartroom, "Humidity")
