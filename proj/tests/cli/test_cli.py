"""End-to-end checks of the wakesim command-line tool and its file formats."""

import csv
import io
import json
import os
import struct
import subprocess
from pathlib import Path

import jsonschema
import pytest

BIN = os.environ["WAKESIM_BIN"]
ROOT = Path(os.environ["WAKESIM_SOURCE_DIR"])
MANIFEST_SCHEMA = json.loads((ROOT / "schema/manifest.schema.json").read_text())
META_SCHEMA = json.loads((ROOT / "schema/record_meta.schema.json").read_text())
CLASSES = {"215071000": "tanker", "218433000": "cargo", "371720000": "tanker",
           "636013817": "tanker", "477665200": "cargo"}


def run(*args, check=True):
    proc = subprocess.run([BIN, *map(str, args)], capture_output=True, text=True)
    if check and proc.returncode != 0:
        raise AssertionError(f"{args} exited {proc.returncode}: {proc.stderr}")
    return proc


def manifest(path):
    latest = {}
    for line in Path(path).read_text().splitlines():
        entry = json.loads(line)
        jsonschema.validate(entry, MANIFEST_SCHEMA)
        latest[entry["record_id"]] = entry
    return latest


def small_scene(tmp_path, **changes):
    cfg = json.loads((ROOT / "configs/fig2_scene.json").read_text())
    cfg["grid"] = {"nx": 64, "ny": 48, "dx": 4, "dy": 4, "strict": False}
    cfg["spectrum"] = {"n_k": 32, "n_theta": 16}
    for section, values in changes.items():
        cfg.setdefault(section, {}).update(values)
    path = tmp_path / "scene.json"
    path.write_text(json.dumps(cfg))
    return path


def test_em_table_anchor(tmp_path):
    out = run("em-table", "--frequency-ghz", "3.2", "--salinity", "35", "--temperature", "21").stdout
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 1
    assert abs(float(rows[0]["eps_real"]) - 69.63) <= 0.01 * 69.63
    assert abs(float(rows[0]["eps_imag"]) + 38.95) <= 0.01 * 38.95

    grid = tmp_path / "grid.json"
    grid.write_text(json.dumps({"frequency_ghz": [1.4, 3.2], "salinity": [35], "temperature": [10, 21]}))
    table = tmp_path / "table.csv"
    run("em-table", "--config", grid, "--out", table)
    assert len(list(csv.DictReader(table.open()))) == 4


def test_simulate_writes_a_reproducible_record(tmp_path):
    cfg = small_scene(tmp_path)
    run("simulate", "--config", cfg, "--out", tmp_path / "a", "--format", "both", "--seed", 3)
    run("simulate", "--config", cfg, "--out", tmp_path / "b", "--format", "both", "--seed", 3, "--workers", 2)
    run("simulate", "--config", cfg, "--out", tmp_path / "c", "--seed", 4)
    raw = (tmp_path / "a/scene.f32").read_bytes()
    assert len(raw) == 64 * 48 * 4
    assert raw == (tmp_path / "b/scene.f32").read_bytes()
    assert (tmp_path / "a/scene.pgm").read_bytes() == (tmp_path / "b/scene.pgm").read_bytes()
    assert raw != (tmp_path / "c/scene.f32").read_bytes()

    meta = json.loads((tmp_path / "a/scene.meta").read_text())
    jsonschema.validate(meta, META_SCHEMA)
    assert meta["label"] == "cargo" and meta["mmsi"] == "218433000"
    assert meta["config"]["seed"] == 3
    values = struct.unpack(f"<{64 * 48}f", raw)
    assert min(values) >= 0 and max(values) > 0

    pgm = (tmp_path / "a/scene.pgm").read_bytes()
    assert pgm.startswith(b"P5\n64 48\n255\n") and len(pgm) == len(b"P5\n64 48\n255\n") + 64 * 48

    skipped = run("simulate", "--config", cfg, "--out", tmp_path / "a", "--resume").stdout
    assert "skipped" in skipped


def test_unknown_keys_and_strict_grids_are_rejected(tmp_path):
    bad = small_scene(tmp_path, sea={"wind_sped": 5})
    proc = run("simulate", "--config", bad, "--out", tmp_path, check=False)
    assert proc.returncode != 0 and "wind_sped" in proc.stderr

    strict = small_scene(tmp_path, grid={"strict": True})
    proc = run("simulate", "--config", strict, "--out", tmp_path, check=False)
    assert proc.returncode != 0 and "error" in proc.stderr

    proc = run("simulate", "--config", small_scene(tmp_path), "--format", "tiff", check=False)
    assert proc.returncode != 0


def test_sweep_interrupted_and_resumed(tmp_path):
    out = tmp_path / "sweep"
    cfg = ROOT / "configs/small_sweep.json"
    first = run("sweep", "--config", cfg, "--out", out, "--seed", 11, "--limit", 3, "--quiet").stdout
    assert "written 3" in first
    assert sum(e["status"] == "complete" for e in manifest(out / "manifest").values()) == 3

    again = run("sweep", "--config", cfg, "--out", out, "--seed", 11, "--quiet", check=False)
    assert again.returncode != 0 and "--resume" in again.stderr
    other = run("sweep", "--config", cfg, "--out", out, "--seed", 12, "--resume", "--quiet", check=False)
    assert other.returncode != 0

    run("sweep", "--config", cfg, "--out", out, "--seed", 11, "--resume", "--workers", 2, "--quiet",
        "--format", "both")
    entries = manifest(out / "manifest")
    assert len(entries) == 10
    assert all(e["status"] == "complete" for e in entries.values())
    raws = sorted(p.relative_to(out).as_posix() for p in out.rglob("*.f32"))
    assert raws == sorted(e["files"]["raw"] for e in entries.values())
    for e in entries.values():
        assert e["label"] == CLASSES[e["mmsi"]]
        assert e["files"]["raw"].startswith(f'{e["label"]}/{e["mmsi"]}/')
        meta = json.loads((out / e["files"]["meta"]).read_text())
        jsonschema.validate(meta, META_SCHEMA)
        assert meta["label"] == e["label"] and meta["config"]["seed"] == e["seed"]
    dataset = json.loads((out / "dataset.json").read_text())
    assert dataset["total_records"] == 10 and dataset["seed"] == 11


def test_augment(tmp_path):
    out = tmp_path / "sweep"
    run("sweep", "--config", ROOT / "configs/small_sweep.json", "--out", out, "--limit", 2, "--quiet")
    metas = sorted(out.rglob("*.meta"))
    aug = tmp_path / "aug"
    text = run("augment", *metas, "--out", aug, "--seed", 5, "--format", "both").stdout
    assert "multiplicity 192 written 384" in text
    entries = manifest(aug / "manifest")
    assert len(entries) == 384
    assert len({(e["source"], e["transform_chain"]) for e in entries.values()}) == 384
    sample = next(iter(entries.values()))
    meta = json.loads((aug / sample["files"]["meta"]).read_text())
    jsonschema.validate(meta, META_SCHEMA)
    assert meta["schema"] == "wakesim.image/1"
    assert meta["label"] in ("cargo", "tanker")

    ops = tmp_path / "ops.json"
    ops.write_text(json.dumps({"rotations": [0], "flips": [False], "noise_amplitudes": [0.0]}))
    ident = tmp_path / "ident"
    run("augment", metas[0], "--out", ident, "--config", ops)
    (copy,) = ident.rglob("*.f32")
    assert copy.read_bytes() == metas[0].with_suffix(".f32").read_bytes()
