"""
Unit tests for ClassConfig and its YAML loader in config.py
"""
from fractions import Fraction

import pytest

from polartrack.core.config import ClassConfig, dump_class_config, exact_ratio, load_class_config
from polartrack.core.errors import ConfigValidationError


def test_load_class_config(config_file):
    config = load_class_config(config_file)
    assert config.classes == ("a", "b")
    assert config.seed_hashtags == {"a": ("a1",), "b": ("b1",)}
    assert config.golden_hashtags == {"a": ("ga",), "b": ("gb",)}
    assert config.alpha == 2
    assert config.beta == 1
    assert config.top_k == 50
    assert config.max_iterations == 10
    assert config.baseline_top_k == 500
    assert config.golden_rule == "exclusive"


def test_load_class_config_missing(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_class_config(str(tmp_path / "missing.yml"))


def test_load_class_config_malformed_yaml(tmp_path):
    path = tmp_path / "bad.yml"
    path.write_text("classes: [a, b\nseed: {", encoding="utf-8")
    with pytest.raises(ConfigValidationError):
        load_class_config(str(path))


def test_load_class_config_empty_file(tmp_path):
    path = tmp_path / "empty.yml"
    path.write_text("", encoding="utf-8")
    with pytest.raises(ConfigValidationError) as excinfo:
        load_class_config(str(path))
    assert len(excinfo.value.problems) == 3


def test_dump_and_reload(tmp_path, two_class_config):
    config = two_class_config.with_overrides(alpha=3.0, top_k=20)
    path = str(tmp_path / "out.yml")
    dump_class_config(config, path)
    assert load_class_config(path) == config


def test_designated_seed_is_first():
    config = ClassConfig(
        classes=("pd", "m5s"),
        seed_hashtags={"pd": ("pd", "renzi"), "m5s": ("m5s",)},
        golden_hashtags={"pd": ("ivotepd",), "m5s": ("ivotem5s",)},
    )
    assert config.designated_seed("pd") == "pd"
    assert config.seeds_of("pd") == {"pd", "renzi"}
    assert config.all_seed_hashtags() == {"pd", "renzi", "m5s"}
    assert config.all_golden_hashtags() == {"ivotepd", "ivotem5s"}


def test_with_overrides_ignores_none(two_class_config):
    assert two_class_config.with_overrides(alpha=None, beta=None) is two_class_config
    changed = two_class_config.with_overrides(beta=2)
    assert changed.beta == 2
    assert changed.alpha == two_class_config.alpha


def test_with_overrides_revalidates(two_class_config):
    with pytest.raises(ConfigValidationError) as excinfo:
        two_class_config.with_overrides(alpha=1.0)
    assert "alpha must be > 1" in str(excinfo.value)


def test_with_overrides_unknown_key(two_class_config):
    with pytest.raises(ConfigValidationError):
        two_class_config.with_overrides(gamma=3)


def _config(**kwargs):
    values = {
        "classes": ("a", "b"),
        "seed_hashtags": {"a": ("a1",), "b": ("b1",)},
        "golden_hashtags": {"a": ("ga",), "b": ("gb",)},
    }
    values.update(kwargs)
    return ClassConfig(**values)


@pytest.mark.parametrize(
    "kwargs, message",
    [
        ({"classes": ("a",), "seed_hashtags": {"a": ("a1",)}, "golden_hashtags": {"a": ("ga",)}},
         "at least 2 classes"),
        ({"seed_hashtags": {"a": ("a1",), "b": ()}}, "needs at least one seed"),
        ({"golden_hashtags": {"a": ("ga",)}}, "needs at least one golden"),
        ({"seed_hashtags": {"a": ("x",), "b": ("x",)}}, "shared by classes"),
        ({"golden_hashtags": {"a": ("a1",), "b": ("gb",)}}, "both seed and golden"),
        ({"seed_hashtags": {"a": ("A1",), "b": ("b1",)}}, "not normalized"),
        ({"alpha": 1}, "alpha must be > 1"),
        ({"beta": 0.5}, "beta must be >= 1"),
        ({"top_k": 0}, "top_k must be a positive integer"),
        ({"max_iterations": 0}, "max_iterations must be a positive integer"),
        ({"golden_rule": "majority"}, "golden_rule must be one of"),
    ],
)
def test_validation(kwargs, message):
    with pytest.raises(ConfigValidationError) as excinfo:
        _config(**kwargs)
    assert message in str(excinfo.value)


def test_validation_reports_every_problem():
    with pytest.raises(ConfigValidationError) as excinfo:
        _config(alpha=0.5, beta=0.5, top_k=-1)
    assert len(excinfo.value.problems) == 3


def test_from_dict_accepts_string_or_list():
    config = ClassConfig.from_dict({
        "classes": ["pd", "m5s"],
        "seed": {"pd": "#PD", "m5s": ["m5s", "#Grillo"]},
        "golden": {"pd": "ivotepd", "m5s": "ivotem5s"},
    })
    assert config.seed_hashtags == {"pd": ("pd",), "m5s": ("m5s", "grillo")}


def test_from_dict_rejects_non_mapping():
    with pytest.raises(ConfigValidationError):
        ClassConfig.from_dict(["classes"])


def test_to_dict_round_trip(two_class_config):
    assert ClassConfig.from_dict(two_class_config.to_dict()) == two_class_config


@pytest.mark.parametrize(
    "value, expected",
    [
        (1.15, Fraction(23, 20)),
        (2, Fraction(2)),
        (2.0, Fraction(2)),
        (Fraction(7, 3), Fraction(7, 3)),
    ],
)
def test_exact_ratio(value, expected):
    assert exact_ratio(value) == expected


def test_yaml_decimal_alpha_is_exact(tmp_path):
    path = tmp_path / "classes.yml"
    path.write_text(
        "classes: [a, b]\nseed: {a: a1, b: b1}\ngolden: {a: ga, b: gb}\nalpha: 1.16\n",
        encoding="utf-8",
    )
    config = load_class_config(str(path))
    assert exact_ratio(config.alpha) * 25 == 29
