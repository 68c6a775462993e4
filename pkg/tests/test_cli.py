import json

import numpy as np
import pytest

from kicktop.cli import main


def run(args):
    return main([str(a) for a in args])


def read_csv(path):
    rows = path.read_text().strip().split("\n")
    return rows[0].split(","), [r.split(",") for r in rows[1:]]


def test_missing_config_file(tmp_path, capsys):
    assert run(["quantum", "--config", tmp_path / "nope.cfg"]) == 2
    assert "config error" in capsys.readouterr().err


def test_kicks_zero_is_config_error(tiny_cfg, capsys):
    assert run(["quantum", "--config", tiny_cfg, "--kicks", 0]) == 2
    assert "config error" in capsys.readouterr().err


def test_malformed_config(tmp_path, capsys):
    bad = tmp_path / "bad.cfg"
    bad.write_text("[system]\nk = fast\n")
    assert run(["quantum", "--config", bad]) == 2
    assert "line 2" in capsys.readouterr().err


def test_quantum_outputs(tiny_cfg, tmp_path):
    out = tmp_path / "q"
    assert run(["quantum", "--config", tiny_cfg, "--outdir", out,
                "--dump-smatrix"]) == 0
    header, rows = read_csv(out / "tiny_H.csv")
    assert header == ["q", "H"]
    assert len(rows) == 5
    header, rows = read_csv(out / "tiny_p.csv")
    assert header == ["q", "N", "p"]
    assert len(rows) == 5 * 11
    header, rows = read_csv(out / "tiny_S.csv")
    assert len(rows) == 11 * 11
    assert (out / "tiny_resolved.cfg").exists()
    summary = json.loads((out / "tiny_summary.json").read_text())
    assert summary["command"] == "quantum"
    assert summary["params"]["n"] == 11


def test_quantum_probabilities_sum_to_one(tiny_cfg, tmp_path):
    out = tmp_path / "q"
    assert run(["quantum", "--config", tiny_cfg, "--outdir", out]) == 0
    _, rows = read_csv(out / "tiny_p.csv")
    p = np.array([float(r[2]) for r in rows]).reshape(5, 11)
    assert np.allclose(p.sum(axis=1), 1.0, atol=1e-12)


def test_classical_outputs_with_snapshots(tmp_path, tiny_cfg_text):
    cfg = tmp_path / "snap.cfg"
    cfg.write_text(tiny_cfg_text + "snapshots = 0,2\nsnap_points = 50\n")
    out = tmp_path / "c"
    assert run(["classical", "--config", cfg, "--outdir", out]) == 0
    header, rows = read_csv(out / "tiny_M.csv")
    assert header == ["q", "M"] and len(rows) == 5
    _, rows = read_csv(out / "tiny_dist.csv")
    assert len(rows) == 5 * 11
    header, rows = read_csv(out / "tiny_snap.csv")
    assert header == ["q", "ux", "uy", "uz"]
    assert len(rows) == 2 * 50
    assert {r[0] for r in rows} == {"0", "2"}


def test_sos_outputs(tmp_path, tiny_cfg_text):
    cfg = tmp_path / "sos.cfg"
    cfg.write_text(tiny_cfg_text + "sos_seeds = 9\n")
    out = tmp_path / "s"
    assert run(["sos", "--config", cfg, "--outdir", out]) == 0
    _, rows = read_csv(out / "tiny_sos.csv")
    assert len(rows) == 9 * 5
    summary = json.loads((out / "tiny_summary.json").read_text())
    assert summary["metrics"]["points"] == 45


def test_compare_outputs(tiny_cfg, tmp_path):
    out = tmp_path / "cmp"
    assert run(["compare", "--config", tiny_cfg, "--outdir", out,
                "--samples", 1000]) == 0
    for suffix in ("H", "M", "dev"):
        assert (out / f"tiny_{suffix}.csv").exists()
    header, rows = read_csv(out / "tiny_dev.csv")
    assert header == ["q", "H", "M", "dev"] and len(rows) == 5


def test_sweep_outputs(tmp_path, tiny_cfg_text):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text(tiny_cfg_text + "scales = 1,2\n")
    out = tmp_path / "sw"
    assert run(["sweep", "--config", cfg, "--outdir", out]) == 0
    assert (out / "tiny_J5_H.csv").exists()
    assert (out / "tiny_J10_H.csv").exists()
    _, rows = read_csv(out / "tiny_residuals.csv")
    assert len(rows) == 5
    summary = json.loads((out / "tiny_summary.json").read_text())
    assert summary["metrics"]["J_values"] == [5, 10]


def test_sweep_incompatible_scale_exit_code(tmp_path, tiny_cfg_text, capsys):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text(tiny_cfg_text + "scales = 0.3\n")
    assert run(["sweep", "--config", cfg, "--outdir", tmp_path / "x"]) == 2
    assert "config error" in capsys.readouterr().err


def test_smatrix_check_outputs(tiny_cfg, tmp_path):
    out = tmp_path / "sm"
    assert run(["smatrix-check", "--config", tiny_cfg, "--outdir", out,
                "--samples", 2000]) == 0
    header, rows = read_csv(out / "tiny_smatrix_tv.csv")
    assert header == ["N_src", "m_src", "interior", "tv"] and len(rows) == 11
    _, rows = read_csv(out / "tiny_S2.csv")
    assert len(rows) == 11


def test_label_override(tiny_cfg, tmp_path):
    out = tmp_path / "lbl"
    assert run(["quantum", "--config", tiny_cfg, "--outdir", out,
                "--label", "alt"]) == 0
    assert (out / "alt_H.csv").exists()


def test_determinism_byte_identical(tiny_cfg, tmp_path):
    out1, out2 = tmp_path / "r1", tmp_path / "r2"
    for out in (out1, out2):
        assert run(["compare", "--config", tiny_cfg, "--outdir", out,
                    "--samples", 2000, "--seed", 11]) == 0
    # the resolved config echoes the differing outdir and is excluded
    for name in ("tiny_H.csv", "tiny_M.csv", "tiny_dev.csv",
                 "tiny_summary.json"):
        assert (out1 / name).read_bytes() == (out2 / name).read_bytes()


def test_csv_line_endings(tiny_cfg, tmp_path):
    out = tmp_path / "lf"
    assert run(["quantum", "--config", tiny_cfg, "--outdir", out]) == 0
    raw = (out / "tiny_H.csv").read_bytes()
    assert b"\r" not in raw and raw.endswith(b"\n")
