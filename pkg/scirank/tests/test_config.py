import dataclasses
import tempfile
from collections import Counter
from pathlib import Path

from django.apps import apps
from django.conf import settings
from django.test import SimpleTestCase, override_settings

from corpus.models import PreprocessConfig
from mrfrank.management.commands.rank import Command as RankCommand
from mrfrank.models import HyperParams
from scirank.RunConfig import TUNABLES, build_run_config, read_config_file
from textfeat.models import FeatureConfig


class TunableCoverageTests(SimpleTestCase):

    def test_one_flag_and_one_key_per_field(self):
        names = Counter(tunable.name for tunable in TUNABLES)
        for model in (HyperParams, PreprocessConfig, FeatureConfig):
            for field in dataclasses.fields(model):
                self.assertEqual(names[field.name], 1, field.name)
        self.assertEqual(len({t.flag for t in TUNABLES}), len(TUNABLES))
        self.assertEqual(len({t.key for t in TUNABLES}), len(TUNABLES))
        for tunable in TUNABLES:
            self.assertIn(tunable.key, settings.SCIRANK)

    def test_parser_has_every_flag(self):
        parser = RankCommand().create_parser("manage.py", "rank")
        for tunable in TUNABLES:
            self.assertIn(tunable.flag, parser._option_string_actions)

    def test_bad_flag_value_exits_with_usage_status(self):
        with self.assertRaises(SystemExit) as cm:
            RankCommand().run_from_argv(["manage.py", "rank", "--alpha-p", "not-a-number"])
        self.assertEqual(cm.exception.code, 1)


class RunConfigTests(SimpleTestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def ini(self, text):
        path = self.dir / "run.ini"
        path.write_text(text, encoding="utf-8")
        return path

    def test_defaults(self):
        run_config = build_run_config({}, self.dir)
        self.assertEqual(run_config.hyper, HyperParams())
        self.assertEqual(run_config.preprocess, PreprocessConfig())
        self.assertEqual(run_config.protocol.reference_year, 2004)
        self.assertEqual(run_config.workspace, self.dir)

    def test_precedence(self):
        path = self.ini("[settings]\nALPHA_P=0.3\nMIN_DF=5\nMODE=no-time\nKS=5,10\n")
        run_config = build_run_config({"alpha_p": 0.2}, self.dir, path)
        self.assertEqual(run_config.hyper.alpha_p, 0.2)
        self.assertEqual(run_config.features.min_df, 5)
        self.assertEqual(run_config.hyper.mode, "no_time")
        self.assertEqual(run_config.protocol.ks, (5, 10))
        self.assertEqual(run_config.hyper.alpha_a, HyperParams().alpha_a)

    @override_settings(SCIRANK={**settings.SCIRANK, "U": 5, "RHO_FEATURE": 0.1})
    def test_settings_layer(self):
        path = self.ini("[settings]\nU=4\n")
        run_config = build_run_config({}, self.dir, path)
        self.assertEqual(run_config.hyper.u, 4)
        self.assertEqual(run_config.hyper.rho_feature, 0.1)

    def test_string_options(self):
        run_config = build_run_config({"tolerance": "1e-6", "require_abstract": "yes",
                                       "title_patterns": "survey,overview"}, self.dir)
        self.assertEqual(run_config.hyper.tolerance, 1e-6)
        self.assertTrue(run_config.preprocess.require_abstract)
        self.assertEqual(run_config.preprocess.title_patterns, ("survey", "overview"))

    def test_unknown_key(self):
        with self.assertRaises(ValueError):
            read_config_file(self.ini("[settings]\nALPHA=0.3\n"))

    def test_missing_section(self):
        with self.assertRaises(ValueError):
            read_config_file(self.ini("ALPHA_P=0.3\n"))

    def test_missing_file(self):
        with self.assertRaises(ValueError):
            read_config_file(self.dir / "absent.ini")

    def test_out_of_range(self):
        for options in ({"alpha_p": 1.5}, {"tolerance": 0.0}, {"u": 0}, {"cutoff_year": 2011},
                        {"ks": []}, {"lambda_scope": "yearly"}):
            with self.assertRaises(ValueError, msg=str(options)):
                build_run_config(options, self.dir)


class InstalledAppsTests(SimpleTestCase):

    def test_validation_without_auth_apps(self):
        self.assertFalse(apps.is_installed("django.contrib.auth"))
        self.assertFalse(apps.is_installed("django.contrib.contenttypes"))
        run_config = build_run_config({"alpha_p": 0.5}, "unused")
        self.assertEqual(run_config.hyper.alpha_p, 0.5)
