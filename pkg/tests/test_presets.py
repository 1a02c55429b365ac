"""Tests for the figure recipes."""

import math

import pytest

from src.models.probe import WeightKind
from src.models.results import Flag
from src.models.sweep import Quantity, TimeScale
from src.sweeps.presets import AUTO_N_CHOICE, preset, preset_names, preset_table
from src.sweeps.sweep_runner import SweepRunner
from src.utils.csv_writer import write_sweep_csv
from src.utils.errors import ConfigError

EXPECTED = ["fig1a", "fig1b", "fig2a", "fig2b", "fig3", "fig4a", "fig4b", "fig5a", "fig5b"]


class TestLookup:
    """Tests for preset resolution."""

    def test_names(self):
        assert preset_names() == EXPECTED

    @pytest.mark.parametrize("name", EXPECTED)
    def test_every_preset_resolves(self, name):
        config = preset(name)
        assert config.name == name
        assert config.reproduction_choices
        assert config.expand()

    def test_unknown_name_lists_presets(self):
        with pytest.raises(ConfigError) as info:
            preset("fig9")
        assert "fig1a" in str(info.value)
        assert "fig5b" in str(info.value)

    def test_table(self):
        table = preset_table()
        assert list(table) == EXPECTED
        assert table["fig2a"].startswith("n_g_exact")


class TestRecipes:
    """Tests for the parameters each recipe pins down."""

    def test_energy_recipe(self):
        config = preset("fig1b")
        assert config.quantity == Quantity.ENERGY
        assert config.companions == [Quantity.ENERGY_MF]
        assert (config.model.omega0, config.model.omega) == (100.0, 0.5)
        assert [s.delta for s in config.series] == [-0.25, -0.1, 0.1, 0.25]
        assert config.auto_N
        assert AUTO_N_CHOICE in config.reproduction_choices

    def test_curvature_recipe(self):
        config = preset("fig1a")
        assert config.quantity == Quantity.D2_ENERGY
        assert (config.grid.start, config.grid.stop, config.grid.points) == (0.5, 1.5, 400)

    def test_excitation_family(self):
        members = preset("fig2a").expand()
        assert len(members) == 8
        assert members[0].name == "fig2a_delta+0_n_g_exact"
        assert members[1].quantity == Quantity.N_G_MF
        assert preset("fig2b").grid.start == 0.9

    def test_coherence_recipe(self):
        config = preset("fig3")
        assert config.quantity == Quantity.COHERENCE
        assert not config.companions
        assert sorted(s.delta for s in config.series) == [-0.4, -0.25, -0.1, 0.0, 0.1, 0.25, 0.4]

    def test_qfi_recipes(self):
        eta_family = preset("fig4a")
        assert [m.model.omega0 for m in eta_family.expand()] == pytest.approx([10.0, 100.0, 1000.0])
        assert preset("fig4b").allow_inverted

    def test_dynamics_recipe(self):
        config = preset("fig5a")
        assert config.quantity == Quantity.INVERSE_VARIANCE
        assert config.probe.alpha_probe == 2.0
        assert config.probe.weight_kind == WeightKind.BOSONIC_COHERENT
        assert config.time == pytest.approx(2 * math.pi)
        assert config.time_scale == TimeScale.INVERSE_OMEGA_TILDE
        assert preset("fig5b").time == pytest.approx(4 * math.pi)
        assert not config.auto_N
        assert config.model.N == 200


class TestDeterminism:
    """Preset output does not depend on the worker count."""

    def test_csv_bytes_match(self, tmp_path):
        config = preset("fig2a")
        serial = SweepRunner(workers=1).run_family(config)
        threaded = SweepRunner(workers=4).run_family(config)
        for first, second in zip(serial, threaded):
            a = write_sweep_csv(first, tmp_path / "serial" / f"{first.name}.csv", preset="fig2a")
            b = write_sweep_csv(second, tmp_path / "threaded" / f"{second.name}.csv", preset="fig2a")
            assert a.read_bytes() == b.read_bytes()


class TestInvertedQFI:
    """QFI is suppressed once |delta| exceeds omega."""

    @staticmethod
    def in_sector_maximum(result):
        values = [row.value for row in result.rows if not row.flags and math.isfinite(row.value)]
        assert values
        return max(values)

    def test_peak_drops_tenfold(self):
        members = {member.model.delta: member for member in preset("fig4b").expand()}
        runner = SweepRunner()
        admissible = runner.run_sweep(members[0.05])
        inverted = runner.run_sweep(members[0.15])
        assert any(Flag.SECTOR_CROSSING in row.flags for row in admissible.rows)
        assert self.in_sector_maximum(admissible) >= 10 * self.in_sector_maximum(inverted)
