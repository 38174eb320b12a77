import numpy as np
import pytest

from torus_quant import (
    FiducialSpec,
    Weight,
    coherent_state_weight,
    overlap_distribution,
    parity_weight,
    portrait,
    quantize,
    quantize_momentum,
    realize_fiducial,
)
from torus_quant.cli import main
from torus_quant.io_formats import (
    format_complex_matrix_csv,
    format_vector_csv,
    read_complex_matrix_csv,
)

from conftest import random_map


def run(*argv):
    return main(list(argv))


def write_signal(path, values):
    with open(path, "w") as fh:
        for x in np.asarray(values, dtype=complex):
            if x.imag == 0:
                fh.write(f"{x.real:.17g}\n")
            else:
                fh.write(f"{x.real:.17g},{x.imag:.17g}\n")


def load_real_map(path):
    lines = path.read_text().strip().split("\n")[1:]
    return np.array([[float(x) for x in line.split(",")[1:]] for line in lines])


class TestFiducialsCommand:
    def test_von_mises_zero_is_flat(self, tmp_path, capsys):
        out = tmp_path / "fid.csv"
        assert run("fiducials", "--d", "4", "--fiducial", "von_mises:0", "--out", str(out)) == 0
        rows = out.read_text().strip().split("\n")[1:]
        values = [complex(float(r.split(",")[1]), float(r.split(",")[2])) for r in rows]
        assert values == pytest.approx([0.5] * 4)
        assert "norm 1.000000000000" in capsys.readouterr().err

    def test_dirichlet_collapse(self, tmp_path):
        out = tmp_path / "fid.csv"
        assert run("fiducials", "--d", "5", "--fiducial", "dirichlet:2", "--out", str(out)) == 0
        rows = out.read_text().strip().split("\n")[1:]
        values = np.array([float(r.split(",")[1]) for r in rows])
        assert values == pytest.approx([1, 0, 0, 0, 0], abs=1e-12)

    def test_gaussian_norm_printed(self, tmp_path, capsys):
        assert run("fiducials", "--d", "5", "--fiducial", "gaussian:1",
                   "--out", str(tmp_path / "f.csv")) == 0
        assert "norm 1.000000000000" in capsys.readouterr().err

    def test_invalid_parameters_precondition_exit(self, tmp_path, capsys):
        code = run("fiducials", "--d", "4", "--fiducial", "dirichlet:2",
                   "--out", str(tmp_path / "f.csv"))
        assert code == 3
        assert "precondition" in capsys.readouterr().err


class TestGaborCommand:
    def test_plane_wave_single_row(self, tmp_path):
        d, k = 12, 5
        sig = tmp_path / "sig.csv"
        write_signal(sig, np.exp(2j * np.pi * k * np.arange(d) / d) / np.sqrt(d))
        out = tmp_path / "spec.csv"
        assert run("gabor", "--in", str(sig), "--fiducial", "constant",
                   "--out", str(out)) == 0
        mag = load_real_map(out)
        row_energy = (mag ** 2).sum(axis=1)
        assert row_energy[k] > 0
        mask = np.ones(d, bool)
        mask[k] = False
        assert row_energy[mask].max() < 1e-20

    def test_constant_signal_concentrates_at_zero_row(self, tmp_path):
        d = 8
        sig = tmp_path / "sig.csv"
        write_signal(sig, np.ones(d))
        out = tmp_path / "spec.csv"
        assert run("gabor", "--in", str(sig), "--fiducial", "von_mises:1",
                   "--out", str(out)) == 0
        mag = load_real_map(out)
        assert np.argmax((mag ** 2).sum(axis=1)) == 0

    def test_isometry_residual_reported(self, tmp_path, capsys):
        sig = tmp_path / "sig.csv"
        write_signal(sig, np.arange(6, dtype=float))
        assert run("gabor", "--in", str(sig), "--fiducial", "von_mises:2",
                   "--out", str(tmp_path / "o.csv")) == 0
        err = capsys.readouterr().err
        line = next(l for l in err.splitlines() if l.startswith("isometry_residual"))
        assert float(line.split()[1]) < 1e-10

    def test_missing_file_is_input_error(self, tmp_path, capsys):
        assert run("gabor", "--in", str(tmp_path / "absent.csv"),
                   "--out", str(tmp_path / "o.csv")) == 2
        assert "input error" in capsys.readouterr().err

    def test_dimension_mismatch_needs_explicit_policy(self, tmp_path, capsys):
        sig = tmp_path / "sig.csv"
        write_signal(sig, np.ones(6))
        assert run("gabor", "--in", str(sig), "--d", "4",
                   "--out", str(tmp_path / "o.csv")) == 2
        assert "--truncate or --pad" in capsys.readouterr().err

    def test_truncation_when_requested(self, tmp_path):
        sig = tmp_path / "sig.csv"
        write_signal(sig, np.ones(6))
        assert run("gabor", "--in", str(sig), "--d", "4", "--truncate",
                   "--fiducial", "constant", "--out", str(tmp_path / "o.csv")) == 0
        assert load_real_map(tmp_path / "o.csv").shape == (4, 4)

    def test_byte_identical_reruns(self, tmp_path):
        sig = tmp_path / "sig.csv"
        write_signal(sig, demo := np.arange(10, dtype=float) % 3)
        out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
        assert run("gabor", "--in", str(sig), "--fiducial", "von_mises:3", "--out", str(out1)) == 0
        assert run("gabor", "--in", str(sig), "--fiducial", "von_mises:3", "--out", str(out2)) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_pgm_output(self, tmp_path):
        sig = tmp_path / "sig.csv"
        write_signal(sig, np.arange(5, dtype=float))
        out = tmp_path / "spec.pgm"
        assert run("gabor", "--in", str(sig), "--fiducial", "constant",
                   "--format", "pgm", "--out", str(out)) == 0
        blob = out.read_bytes()
        assert blob.startswith(b"P5\n5 5\n255\n")
        assert max(blob[len(b"P5\n5 5\n255\n"):]) == 255


class TestWignerCommand:
    def test_delta_signal_marginal(self, tmp_path, capsys):
        d = 5
        sig = tmp_path / "sig.csv"
        write_signal(sig, np.eye(d)[0])
        out = tmp_path / "wig.csv"
        assert run("wigner", "--in", str(sig), "--out", str(out)) == 0
        w = load_real_map(out)
        assert w.sum(axis=0)[0] == pytest.approx(1.0, abs=1e-12)
        err = capsys.readouterr().err
        assert all(float(l.split()[1]) < 1e-12 for l in err.splitlines()
                   if l.startswith("marginal_residual"))

    def test_even_dimension_refused_with_exit_3(self, tmp_path, capsys):
        sig = tmp_path / "sig.csv"
        write_signal(sig, np.arange(6, dtype=float))
        assert run("wigner", "--in", str(sig), "--out", str(tmp_path / "w.csv")) == 3
        assert "odd" in capsys.readouterr().err


class TestHusimiCommand:
    def test_flat_signal_normalization(self, tmp_path, capsys):
        d = 4
        sig = tmp_path / "sig.csv"
        write_signal(sig, np.full(d, 0.5))
        assert run("husimi", "--in", str(sig), "--fiducial", "constant",
                   "--out", str(tmp_path / "h.csv")) == 0
        err = capsys.readouterr().err
        line = next(l for l in err.splitlines() if l.startswith("normalization_residual"))
        assert float(line.split()[1]) < 1e-12


class TestQuantizeCommand:
    def test_unit_symbol_parity_weight_gives_identity(self, tmp_path):
        out = tmp_path / "op.csv"
        assert run("quantize", "--d", "4", "--symbol", "ones", "--weight", "parity",
                   "--out", str(out)) == 0
        assert np.abs(read_complex_matrix_csv(out) - np.eye(4)).max() < 1e-12

    def test_position_index_parity_weight_is_diagonal_ramp(self, tmp_path):
        out = tmp_path / "op.csv"
        assert run("quantize", "--d", "5", "--symbol", "position:index",
                   "--weight", "parity", "--out", str(out)) == 0
        assert np.abs(read_complex_matrix_csv(out) - np.diag(np.arange(5.0))).max() < 1e-12

    def test_momentum_index_cs_weight_matches_library(self, tmp_path):
        d = 5
        out = tmp_path / "op.csv"
        assert run("quantize", "--d", str(d), "--symbol", "momentum:index",
                   "--weight", "cs:von_mises:1", "--out", str(out)) == 0
        phi = realize_fiducial(FiducialSpec.von_mises(1.0), d)
        expected = quantize_momentum(np.arange(d, dtype=complex), coherent_state_weight(phi))
        assert np.abs(read_complex_matrix_csv(out) - expected).max() < 1e-12

    def test_diagnostics_reported(self, tmp_path, capsys):
        assert run("quantize", "--d", "3", "--symbol", "ones", "--weight", "parity",
                   "--out", str(tmp_path / "op.csv")) == 0
        err = capsys.readouterr().err
        assert any(l.startswith("two_path_residual") for l in err.splitlines())
        assert any(l.startswith("hermiticity_residual") for l in err.splitlines())
        assert any(l.startswith("trace") for l in err.splitlines())

    def test_malformed_symbol_file_is_input_error(self, tmp_path, capsys):
        bad = tmp_path / "sym.csv"
        bad.write_text("l,lp0_re,lp0_im\n0,1.0,nope\n")
        assert run("quantize", "--d", "1", "--symbol", f"file:{bad}",
                   "--weight", "parity", "--out", str(tmp_path / "op.csv")) == 2
        assert "row 2, column 3" in capsys.readouterr().err

    def test_weight_file_round_trip(self, tmp_path, rng):
        d = 3
        phi = realize_fiducial(FiducialSpec.von_mises(1.0), d)
        w = coherent_state_weight(phi)
        wfile = tmp_path / "w.csv"
        wfile.write_text(format_complex_matrix_csv(w.values))
        out = tmp_path / "op.csv"
        assert run("quantize", "--d", str(d), "--symbol", "ones",
                   "--weight", f"file:{wfile}", "--out", str(out)) == 0
        assert np.abs(read_complex_matrix_csv(out) - np.eye(d)).max() < 1e-10

    def test_weight_file_with_bad_origin_is_precondition_error(self, tmp_path, capsys):
        d = 3
        values = np.ones((d, d), complex) * 0.5
        wfile = tmp_path / "w.csv"
        wfile.write_text(format_complex_matrix_csv(values))
        assert run("quantize", "--d", str(d), "--symbol", "ones",
                   "--weight", f"file:{wfile}", "--out", str(tmp_path / "op.csv")) == 3
        assert "precondition" in capsys.readouterr().err


class TestPortraitCommand:
    def test_unit_symbol_is_flat(self, tmp_path):
        out = tmp_path / "p.csv"
        assert run("portrait", "--d", "4", "--symbol", "ones", "--weight",
                   "cs:von_mises:1", "--out", str(out)) == 0
        assert np.abs(read_complex_matrix_csv(out) - 1.0).max() < 1e-12

    def test_delta_symbol_gives_overlap_distribution(self, tmp_path):
        d = 4
        out = tmp_path / "p.csv"
        assert run("portrait", "--d", str(d), "--symbol", "delta", "--weight", "parity",
                   "--out", str(out)) == 0
        expected = overlap_distribution(parity_weight(d))
        assert np.abs(read_complex_matrix_csv(out) - expected).max() < 1e-12

    def test_random_symbol_matches_trace_path(self, tmp_path, rng):
        d = 4
        f = random_map(rng, d)
        sfile = tmp_path / "sym.csv"
        sfile.write_text(format_complex_matrix_csv(f))
        out = tmp_path / "p.csv"
        assert run("portrait", "--d", str(d), "--symbol", f"file:{sfile}",
                   "--weight", "cs:von_mises:1", "--out", str(out)) == 0
        phi = realize_fiducial(FiducialSpec.von_mises(1.0), d)
        w = coherent_state_weight(phi)
        expected = portrait(quantize(f, w), w)
        assert np.abs(read_complex_matrix_csv(out) - expected).max() < 1e-12

    def test_mass_check_reported(self, tmp_path, capsys):
        assert run("portrait", "--d", "3", "--symbol", "ones", "--weight", "parity",
                   "--out", str(tmp_path / "p.csv")) == 0
        err = capsys.readouterr().err
        line = next(l for l in err.splitlines() if l.startswith("smoothing_mass_residual"))
        assert float(line.split()[1]) < 1e-12


class TestSelectorErrors:
    def test_unknown_symbol(self, tmp_path, capsys):
        assert run("quantize", "--d", "3", "--symbol", "angle:index",
                   "--weight", "parity", "--out", str(tmp_path / "x.csv")) == 2
        assert "symbol" in capsys.readouterr().err

    def test_unknown_weight(self, tmp_path, capsys):
        assert run("quantize", "--d", "3", "--symbol", "ones",
                   "--weight", "thermal", "--out", str(tmp_path / "x.csv")) == 2
        assert "weight" in capsys.readouterr().err
