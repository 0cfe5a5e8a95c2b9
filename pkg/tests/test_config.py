import unittest
import tempfile
import shutil
import json
import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.constants import CONFIG_TEMPLATES
from core.models import ExperimentConfig, SolverConfig
from utils.config import Config, apply_seed_override, create_default_config
from utils.errors import ConfigError
from utils.validator import validate_config


class TestConfig(unittest.TestCase):

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()
        self.config = Config(self.temp_dir)

    def tearDown(self):
        shutil.rmtree(self.temp_dir)

    def test_directory_resolves_to_default_file(self):
        """A directory path points at accmo.json inside it"""
        self.assertEqual(self.config.config_path.name, "accmo.json")

    def test_config_not_exists_initially(self):
        """Test config file doesn't exist initially"""
        self.assertFalse(self.config.exists())

    def test_load_empty_config(self):
        """Test loading when no config file exists"""
        self.assertEqual(self.config.load(), {})

    def test_save_and_load_config(self):
        """Test saving and loading configuration"""
        data = create_default_config("witting")
        self.config.save(data)
        self.assertTrue(self.config.exists())
        self.assertEqual(self.config.load(), data)

    def test_yaml_config(self):
        """YAML files are read and written as YAML"""
        config = Config(os.path.join(self.temp_dir, "experiment.yml"))
        data = create_default_config("quadratic")
        config.save(data)
        self.assertTrue(config.is_yaml)
        self.assertEqual(config.load(), data)
        self.assertEqual(config.load_experiment().problem.kind, "quadratic")

    def test_get_config_value(self):
        """Test getting configuration values"""
        self.config.save({"name": "demo"})
        self.assertEqual(self.config.get("name"), "demo")
        self.assertEqual(self.config.get("nonexistent", "default"), "default")

    def test_malformed_json(self):
        """Broken JSON raises ConfigError"""
        with open(self.config.config_path, "w") as f:
            f.write("{not json")
        with self.assertRaises(ConfigError):
            self.config.load()

    def test_top_level_must_be_object(self):
        """A JSON list is not a configuration"""
        with open(self.config.config_path, "w") as f:
            json.dump([1, 2], f)
        with self.assertRaises(ConfigError):
            self.config.load()

    def test_load_experiment_missing_file(self):
        """Missing files raise ConfigError with a suggestion"""
        with self.assertRaises(ConfigError) as ctx:
            self.config.load_experiment()
        self.assertTrue(ctx.exception.suggestions)

    def test_load_experiment_invalid(self):
        """Validation errors become ConfigError suggestions"""
        self.config.save({"problem": {"kind": "witting"}, "solvers": [{"method": "Inertial"}],
                          "starts": {"count": 2}})
        with self.assertRaises(ConfigError) as ctx:
            self.config.load_experiment()
        self.assertTrue(any("Inertial" in s for s in ctx.exception.suggestions))

    def test_seed_override(self):
        """--seed replaces the start seed and the log-sum-exp seed"""
        self.config.save(create_default_config("logsumexp"))
        experiment = self.config.load_experiment(seed=11)
        self.assertEqual(experiment.starts.seed, 11)
        self.assertEqual(experiment.problem.seed, 11)

    def test_seed_override_leaves_input_untouched(self):
        """The raw document is copied, not modified"""
        data = create_default_config("witting")
        overridden = apply_seed_override(data, 5)
        self.assertEqual(data["starts"]["seed"], 0)
        self.assertEqual(overridden["starts"]["seed"], 5)
        self.assertIs(apply_seed_override(data, None), data)

    def test_create_default_configs(self):
        """Every template validates"""
        for template in CONFIG_TEMPLATES:
            self.assertEqual(validate_config(create_default_config(template)), [])

    def test_default_witting_template(self):
        """Reference setup: 100 starts in [-2, 2]^2, s = 5e-3"""
        config = ExperimentConfig.model_validate(create_default_config("witting"))
        self.assertEqual(config.starts.count, 100)
        self.assertEqual((config.starts.low, config.starts.high), (-2.0, 2.0))
        self.assertEqual([s.method for s in config.solvers], ["SD", "AccG", "AccGNoQ"])
        self.assertTrue(all(s.step_size == 5e-3 and s.max_iters == 1000 for s in config.solvers))

    def test_sweep_template(self):
        """AccGNoQ alone at three step sizes on the Witting starts, with plot data"""
        config = ExperimentConfig.model_validate(create_default_config("witting-sweep"))
        witting = ExperimentConfig.model_validate(create_default_config("witting"))
        self.assertEqual(config.starts, witting.starts)
        self.assertEqual([s.method for s in config.solvers], ["AccGNoQ"] * 3)
        self.assertEqual([s.step_size for s in config.solvers], [5e-3, 1e-2, 5e-2])
        self.assertEqual(len({s.label for s in config.solvers}), 3)
        self.assertIn("plot", config.outputs.formats)

    def test_example_file_is_valid(self):
        """The annotated example in the repository validates"""
        root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
        experiment = Config(os.path.join(root, "accmo.example.yml")).load_experiment()
        self.assertEqual([s.label for s in experiment.solvers], ["SD", "AccG", "AccGNoQ", "AccG-bt"])
        self.assertEqual(experiment.solvers[-1].backtracking.s0, 1.0)

    def test_unknown_template(self):
        with self.assertRaises(ConfigError):
            create_default_config("rosenbrock")


class TestValidator(unittest.TestCase):

    def setUp(self):
        self.valid = create_default_config("witting")

    def test_valid_config(self):
        """Test validation of valid configuration"""
        self.assertEqual(validate_config(self.valid), [])

    def test_missing_solvers(self):
        """Test validation with missing required fields"""
        errors = validate_config({"problem": {"kind": "witting"}})
        self.assertIn("solvers: Field required", errors)

    def test_unsupported_problem(self):
        """Test validation with unsupported problem kind"""
        self.valid["problem"] = {"kind": "zdt1"}
        errors = validate_config(self.valid)
        self.assertEqual(len(errors), 1)
        self.assertIn("Unsupported problem", errors[0])

    def test_unsupported_method(self):
        """Unknown methods are rejected"""
        self.valid["solvers"].append({"method": "Newton"})
        self.assertTrue(validate_config(self.valid))

    def test_start_dimension_mismatch(self):
        """Explicit starts must match the problem dimension"""
        self.valid["starts"] = {"points": [[0.0, 1.0, 2.0]]}
        errors = validate_config(self.valid)
        self.assertTrue(any("problem dimension is 2" in e for e in errors))

    def test_points_and_count_are_exclusive(self):
        """Exactly one of points and count"""
        self.valid["starts"] = {"points": [[0.0, 1.0]], "count": 3}
        self.assertTrue(validate_config(self.valid))

    def test_duplicate_labels(self):
        """Two solvers with the same label need names"""
        self.valid["solvers"].append({"method": "SD"})
        self.assertTrue(any("unique" in e for e in validate_config(self.valid)))
        self.valid["solvers"][-1]["name"] = "SD-long"
        self.assertEqual(validate_config(self.valid), [])

    def test_step_size_must_be_positive(self):
        self.valid["solvers"][0]["step_size"] = 0.0
        self.assertTrue(validate_config(self.valid))

    def test_backtracking_sigma_range(self):
        self.valid["solvers"][0]["backtracking"] = {"s0": 1.0, "sigma": 1.5}
        self.assertTrue(validate_config(self.valid))

    def test_extra_keys_rejected(self):
        self.valid["solvers"][0]["momentum"] = 0.9
        self.assertTrue(validate_config(self.valid))

    def test_solver_label(self):
        self.assertEqual(SolverConfig(method="AccG").label, "AccG")
        self.assertEqual(SolverConfig(method="AccG", name="fast").label, "fast")


if __name__ == '__main__':
    unittest.main()
