"""
End-to-end runs of the three subcommands through leadlag.cli.main.
"""
import json

import numpy as np
import pandas as pd
import pytest

from leadlag.core.tables import read_table

ANALYZE_OUTPUTS = [
    "spliced_futures.csv",
    "basis.csv",
    "returns.csv",
    "ensemble_diagnostics.csv",
    "self_consistency_w20.csv",
    "lead_lag_path.csv",
    "phase_histograms.csv",
    "phase_summary.csv",
]


def _analyze(run_cli, vix, futures, out, *extra):
    return run_cli(
        "analyze",
        "--vix", vix,
        "--futures", futures,
        "--margin", 5,
        "--workers", 1,
        "--phases", "2005-06-01,2005-10-03",
        "--out", out,
        *extra,
    )


@pytest.mark.integration
class TestAnalyze:
    def test_writes_every_output_with_config_header(self, run_cli, sample_dataset, tmp_path):
        vix, futures = sample_dataset
        out = tmp_path / "out"
        code, stdout, stderr = _analyze(run_cli, vix, futures, out)
        assert code == 0, stderr
        for name in ANALYZE_OUTPUTS:
            first = (out / name).read_text().splitlines()[0]
            assert first.startswith("# config: ")
            header = json.loads(first[len("# config: "):])
            assert header["command"] == "analyze"
            assert header["margin"] == 5
        assert "phase 1:" in stdout and "phase 3:" in stdout
        assert not (out / "self_consistency_sweep.csv").exists()

    def test_outputs_have_expected_shape(self, run_cli, sample_dataset, tmp_path):
        vix, futures = sample_dataset
        out = tmp_path / "out"
        assert _analyze(run_cli, vix, futures, out)[0] == 0
        returns = read_table(out / "returns.csv")
        assert len(returns) == 299
        assert list(returns.columns) == [
            "date",
            "futures_return",
            "futures_standardized",
            "vix_return",
            "vix_standardized",
        ]
        assert returns["vix_standardized"].mean() == pytest.approx(0.0, abs=1e-8)
        diagnostics = read_table(out / "ensemble_diagnostics.csv")
        assert len(diagnostics) == 36
        summary = read_table(out / "phase_summary.csv")
        assert list(summary["phase"]) == [1, 2, 3]
        path = read_table(out / "lead_lag_path.csv")
        assert "significant" in path.columns
        assert path["lag_days"].abs().max() < 299

    def test_reruns_are_byte_identical(self, run_cli, sample_dataset, tmp_path):
        vix, futures = sample_dataset
        a, b = tmp_path / "a", tmp_path / "b"
        assert _analyze(run_cli, vix, futures, a)[0] == 0
        assert _analyze(run_cli, vix, futures, b)[0] == 0
        for name in ANALYZE_OUTPUTS:
            assert (a / name).read_bytes() == (b / name).read_bytes(), name

    def test_window_sweep_outputs(self, run_cli, sample_dataset, tmp_path):
        vix, futures = sample_dataset
        out = tmp_path / "out"
        code, _, stderr = _analyze(run_cli, vix, futures, out, "--sweep-windows")
        assert code == 0, stderr
        sweep = read_table(out / "self_consistency_sweep.csv")
        assert set(sweep["window"]) == set(range(5, 61))
        mask = read_table(out / "significance_mask.csv")
        assert list(mask.columns) == ["date", "frac_significant", "significant_majority"]

    def test_basis_table(self, run_cli, sample_dataset, tmp_path):
        vix, futures = sample_dataset
        out = tmp_path / "out"
        assert _analyze(run_cli, vix, futures, out)[0] == 0
        basis = read_table(out / "basis.csv")
        assert list(basis.columns) == ["date", "spot", "futures", "basis", "active_contract"]
        assert len(basis) == 300
        np.testing.assert_allclose(basis["basis"], basis["futures"] - basis["spot"], rtol=0, atol=1e-7)
        spliced = read_table(out / "spliced_futures.csv")
        np.testing.assert_allclose(basis["futures"], spliced["price"], rtol=0, atol=1e-8)

    def test_both_price_fields(self, run_cli, sample_dataset, tmp_path):
        vix, futures = sample_dataset
        out = tmp_path / "out"
        code, stdout, stderr = _analyze(run_cli, vix, futures, out, "--price-field", "both")
        assert code == 0, stderr
        for field in ("close", "settle"):
            for name in ANALYZE_OUTPUTS:
                assert (out / field / name).exists(), f"{field}/{name}"
        assert not (out / "lead_lag_path.csv").exists()
        close = read_table(out / "close" / "spliced_futures.csv")
        settle = read_table(out / "settle" / "spliced_futures.csv")
        assert not np.allclose(close["price"], settle["price"])
        assert "VXFC phase 1:" in stdout and "VXFS phase 1:" in stdout

    def test_temperature_scan_outputs(self, run_cli, sample_dataset, tmp_path):
        vix, futures = sample_dataset
        out = tmp_path / "out"
        code, _, stderr = _analyze(run_cli, vix, futures, out, "--temperature", 2, "--temperatures", "1,2")
        assert code == 0, stderr
        summary = read_table(out / "temperature_summary.csv")
        assert list(summary["temperature"]) == [1.0, 2.0]
        assert list(summary.columns) == [
            "temperature",
            "member_i1",
            "member_i2",
            "free_energy_per_step",
            "mean_lag",
            "median_lag",
            "frac_negative",
        ]
        assert summary["frac_negative"].between(0.0, 1.0).all()
        scan = read_table(out / "temperature_scan.csv")
        assert set(scan["temperature"]) == {1.0, 2.0}
        main = read_table(out / "lead_lag_path.csv")
        at_two = scan[scan["temperature"] == 2.0].reset_index(drop=True)
        np.testing.assert_allclose(at_two["lag_days"], main["lag_days"], rtol=0, atol=1e-8)

    def test_non_positive_scan_temperature(self, run_cli, sample_dataset, tmp_path):
        vix, futures = sample_dataset
        code, _, stderr = _analyze(run_cli, vix, futures, tmp_path / "out", "--temperatures", "0,1")
        assert code == 2
        assert "temperature" in stderr

    def test_missing_futures_file(self, run_cli, sample_dataset, tmp_path):
        vix, _ = sample_dataset
        missing = tmp_path / "nowhere.csv"
        code, _, stderr = _analyze(run_cli, vix, missing, tmp_path / "out")
        assert code == 2
        assert "nowhere.csv" in stderr

    def test_missing_flag(self, run_cli, sample_dataset, tmp_path):
        vix, _ = sample_dataset
        code, _, stderr = run_cli("analyze", "--vix", vix, "--out", tmp_path / "out")
        assert code == 2
        assert "--futures is required" in stderr

    def test_constant_prices_fail_without_partial_outputs(self, run_cli, sample_dataset, tmp_path):
        vix, futures = sample_dataset
        flat = tmp_path / "flat.csv"
        frame = pd.read_csv(vix)
        frame["close"] = 20.0
        frame.to_csv(flat, index=False)
        out = tmp_path / "out"
        code, _, stderr = _analyze(run_cli, flat, futures, out)
        assert code == 3
        assert "zero variance" in stderr
        assert list(out.iterdir()) == []

    @pytest.mark.slow
    def test_default_flags(self, run_cli, sample_dataset, tmp_path):
        vix, futures = sample_dataset
        out = tmp_path / "out"
        code, _, stderr = run_cli("analyze", "--vix", vix, "--futures", futures, "--out", out)
        assert code == 0, stderr
        assert len(read_table(out / "ensemble_diagnostics.csv")) == 31 * 31


@pytest.mark.integration
class TestStats:
    def test_report_files(self, run_cli, sample_dataset, tmp_path):
        vix, futures = sample_dataset
        out = tmp_path / "out"
        code, stdout, stderr = run_cli("stats", "--vix", vix, "--futures", futures, "--out", out)
        assert code == 0, stderr
        panel_a = read_table(out / "stats_panel_a.csv")
        assert list(panel_a["series"]) == ["VIX", "VXFC", "VXFS"]
        assert (panel_a["n"] == 299).all()
        panel_b = read_table(out / "stats_panel_b.csv")
        np.testing.assert_allclose(np.diag(panel_b[["VIX", "VXFC", "VXFS"]].to_numpy()), 1.0)
        body = json.loads((out / "stats.json").read_text())
        assert body["config"]["command"] == "stats"
        assert body["panel_b"]["VXFC"]["VXFC"] == 1.0
        assert "VIX: n=299" in stdout

    def test_short_sample_matches_direct_computation(self, run_cli, dataset_factory, tmp_path):
        vix, futures = dataset_factory("short", n_days=10)
        out = tmp_path / "out"
        code, _, stderr = run_cli("stats", "--vix", vix, "--futures", futures, "--out", out)
        assert code == 0, stderr
        panel_a = read_table(out / "stats_panel_a.csv").set_index("series")

        spot = np.diff(np.log(pd.read_csv(vix)["close"].to_numpy()))
        quotes = pd.read_csv(futures)
        front = np.diff(np.log(quotes.loc[quotes["contract"] == "VX000", "close"].to_numpy()))
        for name, r in (("VIX", spot), ("VXFC", front)):
            row = panel_a.loc[name]
            assert row["n"] == 9
            assert row["mean"] == pytest.approx(r.mean(), rel=1e-8)
            assert row["std_dev"] == pytest.approx(r.std(ddof=1), rel=1e-8)
            assert row["maximum"] == pytest.approx(r.max(), rel=1e-8)
        # nine returns are too few for the ADF lag order
        assert panel_a["adf_c_stat"].isna().all()
        assert panel_a["adf_ct_p_value"].isna().all()
        body = json.loads((out / "stats.json").read_text())
        assert body["panel_a"][0]["adf_c_stat"] is None


def _scenario_file(tmp_path, scenarios):
    path = tmp_path / "scenarios.json"
    path.write_text(json.dumps({"scenarios": scenarios}))
    return path


@pytest.mark.integration
class TestBench:
    def test_oracle_scenario_passes(self, run_cli, tmp_path):
        path = _scenario_file(tmp_path, [{"name": "tiny", "kind": "oracle", "n": 6, "seed": 5}])
        out = tmp_path / "out"
        code, stdout, stderr = run_cli("bench", path, "--out", out, "--workers", 1)
        assert code == 0, stderr
        assert "tiny: oracle agreement PASS" in stdout
        report = read_table(out / "bench_report.csv")
        assert report.loc[0, "status"] == "PASS"
        assert report.loc[0, "oracle_max_abs_diff"] <= 1e-9

    def test_lagged_scenario(self, run_cli, tmp_path):
        path = _scenario_file(
            tmp_path, [{"name": "lag3", "segments": [[120, 3]], "seed": 1, "burn": 20, "margin": 5}]
        )
        out = tmp_path / "out"
        code, stdout, stderr = run_cli("bench", path, "--out", out, "--workers", 1)
        assert code == 0, stderr
        report = read_table(out / "bench_report.csv")
        assert report.loc[0, "status"] == "OK"
        assert report.loc[0, "n"] == 117
        assert report.loc[0, "rmse"] >= 0.0
        assert "lag3: rmse=" in stdout

    def test_empty_scenario_list(self, run_cli, tmp_path):
        path = _scenario_file(tmp_path, [])
        out = tmp_path / "out"
        code, stdout, _ = run_cli("bench", path, "--out", out)
        assert code == 0
        lines = (out / "bench_report.csv").read_text().splitlines()
        assert len(lines) == 2
        assert lines[1].startswith("scenario,kind,n,")
        assert "0 scenario(s)" in stdout

    def test_malformed_scenario_file(self, run_cli, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("[{")
        code, _, stderr = run_cli("bench", path, "--out", tmp_path / "out")
        assert code == 2
        assert stderr.startswith("error:")

    def test_seed_offset_recorded(self, run_cli, tmp_path):
        path = _scenario_file(tmp_path, [{"name": "tiny", "kind": "oracle", "n": 5, "seed": 5}])
        out = tmp_path / "out"
        assert run_cli("bench", path, "--out", out, "--seed", 10)[0] == 0
        assert read_table(out / "bench_report.csv").loc[0, "seed"] == 15


@pytest.mark.integration
class TestCliSurface:
    def test_version(self, run_cli, capsys):
        from leadlag.cli import main

        with pytest.raises(SystemExit) as exc:
            main(["--version"])
        assert exc.value.code == 0
        assert "leadlag" in capsys.readouterr().out

    def test_log_file_written(self, run_cli, tmp_path):
        path = _scenario_file(tmp_path, [])
        run_cli("bench", path, "--out", tmp_path / "out")
        logs = list((tmp_path / "logs").glob("*.log"))
        assert logs
        assert "command=bench" in logs[0].read_text()
