import io
import json

import pytest

from jacklr import cache, cli
from jacklr.config import ConfigError, RunConfig, load_config, read_config_file
from jacklr.jack import _compute_jack_P, jack_P, jack_P_cache
from jacklr.partitions import Partition


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out)
    return code, out.getvalue()


# --- configuration


def test_defaults():
    cfg = load_config({}, environ={}, path="/nonexistent")
    assert cfg == RunConfig()
    assert cfg.d_convention == "minus" and cfg.workers == 1


def test_precedence(tmp_path):
    f = tmp_path / "cfg"
    f.write_text("# comment\nmax-weight = 5\nworkers=3\ntable=amended\n")
    env = {"JLK_MAX_WEIGHT": "7", "JLK_CONFIG": str(f)}
    assert load_config({}, environ={}, path=f).max_weight == 5
    cfg = load_config({}, environ=env)
    assert (cfg.max_weight, cfg.workers, cfg.table) == (7, 3, "amended")
    assert load_config({"max_weight": 9, "workers": None}, environ=env).max_weight == 9
    assert load_config({"workers": None}, environ=env).workers == 3


def test_validation(tmp_path):
    with pytest.raises(ConfigError):
        RunConfig(workers=0)
    with pytest.raises(ConfigError):
        RunConfig(max_weight=-1)
    with pytest.raises(ConfigError):
        RunConfig(d_convention="sideways")
    with pytest.raises(ConfigError):
        load_config({}, environ={"JLK_WORKERS": "many"}, path="/nonexistent")
    with pytest.raises(ConfigError):
        load_config({}, environ={"JLK_COLOUR": "red"}, path="/nonexistent")
    bad = tmp_path / "bad"
    bad.write_text("no equals sign\n")
    with pytest.raises(ConfigError):
        read_config_file(bad)
    assert load_config({}, environ={"JLK_USE_CACHE": "yes"}, path="/nonexistent").use_cache


# --- cache


@pytest.fixture
def store(tmp_path):
    s = cache.attach(tmp_path)
    jack_P_cache.clear()
    yield s
    cache.detach()
    jack_P_cache.clear()


def test_cache_roundtrip(store):
    lam = Partition((3, 1))
    value = jack_P(lam, 3)
    assert store.path(lam, 3).is_file()
    assert store.load(lam, 3) == value == _compute_jack_P(lam, 3)


def test_corrupt_cache_is_ignored(store):
    lam = Partition((2, 2))
    store.path(lam, 3).parent.mkdir(parents=True, exist_ok=True)
    store.path(lam, 3).write_text("{not json")
    assert store.load(lam, 3) is None
    assert jack_P(lam, 3) == _compute_jack_P(lam, 3)
    # the bad file was replaced with a good one
    assert store.load(lam, 3) == _compute_jack_P(lam, 3)


def test_version_mismatch_is_ignored(store):
    lam = Partition((2, 1))
    jack_P(lam, 3)
    p = store.path(lam, 3)
    data = json.loads(p.read_text())
    data["version"] = cache.CACHE_VERSION + 1
    p.write_text(json.dumps(data))
    assert store.load(lam, 3) is None
    data["version"] = cache.CACHE_VERSION
    data["coeffs"][0][1]["num"] = [0.5]
    p.write_text(json.dumps(data))
    assert store.load(lam, 3) is None


# --- command line


def test_expand_examples():
    code, out = run("expand", "--mu", "3,2,1", "--nu", "1,1")
    assert code == 0 and "4,2,2 : (2α)/(1+α)" in out.splitlines()
    code, out = run("expand", "--mu", "3,1", "--nu", "2", "--alpha", "1")
    assert out.split("\n")[:5] == ["5,1 : 1", "4,2 : 1", "4,1,1 : 1", "3,3 : 1", "3,2,1 : 1"]
    assert run("expand", "--mu", "1", "--nu", "") == (0, "1 : 1\n")


def test_expand_usage_errors():
    assert run("expand", "--mu", "x", "--nu", "1")[0] == 2
    assert run("expand", "--mu", "1,2", "--nu", "1")[0] == 2
    assert run("expand", "--mu", "1", "--nu", "1", "--qt", "--alpha", "2")[0] == 2
    assert run("expand", "--mu", "1,1", "--nu", "1", "--vars", "1")[0] == 2
    assert run("frobnicate")[0] == 2


def test_verify_exit_codes():
    code, out = run("verify", "--lambda", "4,2,2", "--mu", "3,2,1", "--nu", "1,1")
    obj = json.loads(out)
    assert code == 0 and obj["match_c"] and obj["match_g"]
    assert obj["c"] == {"num": [0, 2], "den": [1, 1]}
    code, out = run("verify", "--lambda", "4,2,1", "--mu", "3,1", "--nu", "2,1")
    obj = json.loads(out)
    assert code == 3 and obj["minimal"] is False and obj["lr_count"] == 2
    assert obj["g"] == {"coeffs": [0, 0, 0, 0, 0] + [8 * c for c in (9, 97, 294, 321, 131, 12)], "den": 1}
    assert run("verify", "--lambda", "", "--mu", "", "--nu", "")[0] == 0
    code, out = run("verify", "--lambda", "4,3,2,1", "--mu", "3,2,1", "--nu", "2,2")
    obj = json.loads(out)
    assert code == 3 and obj["minimal"] is False and obj["lr_count"] == 2
    assert run("verify", "--lambda", "4,2,2", "--mu", "3,2,1", "--nu", "1,1", "--qt")[0] == 0


def test_verify_schema_keys():
    obj = json.loads(run("verify", "--lambda", "2,1", "--mu", "1,1", "--nu", "1")[1])
    for key in ("lambda", "mu", "nu", "minimal", "facets", "case", "division_numbers", "c", "g", "match_c", "match_g", "balance"):
        assert key in obj
    assert set(obj["division_numbers"]) == {"lambda", "mu", "nu"}


def test_json_is_byte_deterministic():
    argv = ("verify", "--lambda", "8,7,4", "--mu", "6,3", "--nu", "5,5")
    assert run(*argv) == run(*argv)
    argv = ("classify", "--lambda", "8,7,4", "--mu", "6,3", "--nu", "5,5", "--format", "json")
    assert run(*argv) == run(*argv)


def test_classify_examples():
    code, out = run("classify", "--lambda", "8,7,4", "--mu", "6,3", "--nu", "5,5")
    assert code == 0 and "case: 4" in out
    assert "printed alternative: ulllullu / uullull" in out and "matches oracle: True" in out
    code, out = run("classify", "--lambda", "4,2,2", "--mu", "3,2,1", "--nu", "1,1", "--format", "json")
    obj = json.loads(out)
    assert obj["case"] == 4 and obj["printed_alternative"]["matches_oracle"]
    obj = json.loads(run("classify", "--lambda", "3,2,1", "--mu", "2,1", "--nu", "2,1", "--format", "json")[1])
    assert obj == {"lambda": [3, 2, 1], "mu": [2, 1], "nu": [2, 1], "minimal": False, "facets": []}


def test_sweep_examples():
    code, out = run("sweep", "--max-weight", "0")
    assert code == 0 and "triples checked: 1" in out and "c mismatches: 0" in out
    code, out = run("sweep", "--max-weight", "6")
    assert code == 0 and "triples checked: 211" in out
    code, out = run("sweep", "--max-weight", "6", "--d-convention", "plus")
    assert code == 1 and "FAIL" in out
    assert run("sweep", "--max-weight", "-1")[0] == 2


def test_sweep_json():
    code, out = run("sweep", "--max-weight", "3", "--qt", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["triples"] > 0


def test_enumerate():
    code, out = run("enumerate", "--max-weight", "1", "--format", "json")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 3 and rows[0]["lambda"] == []
