from __future__ import annotations

import pytest
from pydantic import ValidationError

from mahlerkit.config import RunConfig


def test_defaults():
    config = RunConfig()

    assert config.order == 64
    assert config.k == 2
    assert config.q_list == [3, 5]
    assert config.format == "json"


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("MAHLERKIT_ORDER", "200")
    monkeypatch.setenv("MAHLERKIT_Q_LIST", "[7, 11]")

    config = RunConfig()

    assert config.order == 200
    assert config.q_list == [7, 11]


def test_with_overrides_skips_none():
    config = RunConfig().with_overrides(order=None, k=3, workers=1)

    assert config.order == 64
    assert config.k == 3
    assert config.workers == 1


@pytest.mark.parametrize(
    "changes",
    [{"order": 15}, {"k": 1}, {"q_list": [2]}, {"q_list": [9]}, {"format": "xml"}, {"workers": 0}],
)
def test_invalid_settings(changes):
    with pytest.raises(ValidationError):
        RunConfig().with_overrides(**changes)
