"""
.. module:: dj-polar.tests.test_jobs
   :synopsis: dj-polar JobSpec and operation Tests.

"""
from fractions import Fraction
import os
import shutil
import tempfile

from django.test import SimpleTestCase, TestCase
from mock import patch

from djpolar import reports, signals
from djpolar import settings as djpolar_settings
from djpolar.exceptions import CenterOnCurve, DegeneratePolar, JobSpecError, UnknownCorpusEntry
from djpolar.jobs import (JobSpec, cmd_components, cmd_polar, cmd_reciprocal, cmd_render, cmd_singular,
                          cmd_verify, coverage_sweep, never_all_covered, parse_numbers, run_job,
                          sweep_directions)
from djpolar.models import CoverageRun
from djpolar.topology import component_map, fraction_box
from djpolar.utils import EXIT_ERROR, EXIT_OK, EXIT_UNMET, VERDICT_COVERED, VERDICT_ONLY_SINGULAR

from . import CIRCLE, ELLIPSE, ELLIPTIC, NODAL_CUBIC, TWO_CIRCLES, curve, slow


class TestParseNumbers(SimpleTestCase):

    def test_good(self):
        self.assertEqual(parse_numbers("1/2,-3", 2, "center"), (Fraction(1, 2), Fraction(-3)))
        self.assertEqual(parse_numbers((0, 1), 2, "direction"), (Fraction(0), Fraction(1)))

    def test_wrong_count(self):
        self.assertRaisesMessage(JobSpecError, "--box expects 4 comma-separated numbers", parse_numbers, "0,1,0", 4, "box")

    def test_not_exact(self):
        self.assertRaises(JobSpecError, parse_numbers, "a,b", 2, "center")
        self.assertRaises(JobSpecError, parse_numbers, "1/0,1", 2, "center")


class TestJobSpec(SimpleTestCase):

    def test_needs_one_source(self):
        self.assertRaisesMessage(JobSpecError, "Give exactly one of --curve and --corpus", JobSpec)
        self.assertRaisesMessage(JobSpecError, "Give exactly one of --curve and --corpus", JobSpec,
                                 curve=CIRCLE, corpus="ex1")

    def test_center_with_quadric(self):
        self.assertRaises(JobSpecError, JobSpec, curve=CIRCLE, center="1,0", quadric="standard")

    def test_bad_overlay(self):
        self.assertRaises(JobSpecError, JobSpec, curve=CIRCLE, overlay="gauss")

    def test_zero_direction(self):
        self.assertRaisesMessage(JobSpecError, "--direction cannot be 0,0", JobSpec, curve=CIRCLE, direction="0,0")

    def test_empty_box(self):
        self.assertRaises(JobSpecError, JobSpec, curve=CIRCLE, box="1,0,0,1")

    def test_homogeneous_curve_text(self):
        self.assertEqual(JobSpec(curve="X1^2 + X2^2 - X0^2").polynomial, curve(CIRCLE))

    def test_corpus(self):
        spec = JobSpec(corpus="ex4")
        self.assertEqual(spec.key, "ex4")
        self.assertEqual(spec.polynomial, curve(ELLIPTIC))
        self.assertEqual(spec.get_box(), fraction_box((-3, 3, -3, 3)))
        self.assertEqual(spec.get_resolution(), 256)

    def test_unknown_corpus(self):
        self.assertRaises(UnknownCorpusEntry, lambda: JobSpec(corpus="ex99").polynomial)

    def test_resolution(self):
        self.assertEqual(JobSpec(curve=CIRCLE).get_resolution(), djpolar_settings.DEFAULT_RESOLUTION)
        self.assertEqual(JobSpec(corpus="ex1").get_resolution(), 512)
        self.assertRaisesMessage(JobSpecError, "power of two", JobSpec(curve=CIRCLE, resolution=100).get_resolution)

    def test_quadric(self):
        self.assertEqual(str(JobSpec(curve=CIRCLE).get_quadric()), "X0^2 + X1^2 + X2^2")
        self.assertEqual(str(JobSpec(curve=CIRCLE, center="1,0").get_quadric()), "2*X0^2 - 2*X0*X1 + X1^2 + X2^2")

    def test_from_options(self):
        spec = JobSpec.from_options({"curve": CIRCLE, "corpus": None, "verbosity": 1, "resolution": 32})
        self.assertEqual(spec.resolution, 32)
        self.assertEqual(spec.direction, (0, 1))

    def test_as_dict(self):
        spec = JobSpec(curve=CIRCLE, center="1,0")
        self.assertEqual(reports.normalize(spec.as_dict()),
                         {"key": CIRCLE, "direction": ["0", "1"], "center": ["1", "0"]})

    @patch.object(djpolar_settings, "SAVE_RUNS", True)
    def test_save_default(self):
        self.assertTrue(JobSpec(curve=CIRCLE).save)
        self.assertFalse(JobSpec(curve=CIRCLE, save=False).save)


class TestOperations(SimpleTestCase):

    def test_polar(self):
        report = cmd_polar(JobSpec(curve=ELLIPSE, resolution=64))
        self.assertEqual(report["exit_code"], EXIT_OK)
        self.assertEqual(report["polar"], {"polynomial": "8*X2", "degree": 1, "bezout_bound": 2})
        self.assertEqual(len(report["witnesses"]["points"]), 2)
        self.assertEqual(report["coverage"]["verdicts"], [VERDICT_COVERED])
        self.assertEqual(report["flag"]["point"], "(0 : 0 : 1)")

    def test_polar_unmet_hypotheses(self):
        report = cmd_polar(JobSpec(curve=NODAL_CUBIC, resolution=64))
        self.assertEqual(report["exit_code"], EXIT_UNMET)
        self.assertFalse(report["coverage"]["checklist"]["compact"])
        self.assertEqual(sorted(w["tag"] for w in report["coverage"]["components"][0]["witnesses"]),
                         ["nonsingular", "singular"])
        self.assertEqual(len(report["witnesses"]["points"]), 1)
        self.assertEqual([p["reason"] for p in report["witnesses"]["excluded"]], ["singular"])

    def test_reciprocal(self):
        report = cmd_reciprocal(JobSpec(curve=ELLIPSE, resolution=64))
        self.assertEqual(report["exit_code"], EXIT_OK)
        self.assertEqual(len(report["witnesses"]["points"]), 4)
        self.assertEqual(report["quadric"]["center"], "(1 : 0 : 0)")
        self.assertEqual(report["coverage"]["components"][0]["nearest_witness"]["distance"], 1.0)

    def test_reciprocal_center_on_curve(self):
        with self.assertRaises(CenterOnCurve) as cm:
            cmd_reciprocal(JobSpec(curve=ELLIPTIC))
        self.assertEqual(cm.exception.center, (1, 0))
        self.assertEqual(str(cm.exception.quadric), "2*X0^2 - 2*X0*X1 + X1^2 + X2^2")
        self.assertIn("--center 1,0", str(cm.exception))

    def test_reciprocal_degenerate(self):
        self.assertRaises(DegeneratePolar, cmd_reciprocal, JobSpec(curve=CIRCLE))

    def test_singular(self):
        report = cmd_singular(JobSpec(curve=NODAL_CUBIC))
        self.assertEqual(report["kinds"], {"OrdinaryRealMultiple(2)": 1})
        self.assertEqual(report["curve"]["degree"], 3)

    def test_components(self):
        report = cmd_components(JobSpec(curve=TWO_CIRCLES, box="-3,7,-3,7", resolution=64, compare=True, sectors=True))
        self.assertEqual(report["components"]["count"], 2)
        self.assertTrue(report["stable"])
        self.assertEqual(report["refined"]["resolution"], 128)
        self.assertEqual(len(report["gauss_sectors"]), 2)
        self.assertEqual(report["exit_code"], EXIT_OK)

    def test_render_needs_svg(self):
        self.assertRaisesMessage(JobSpecError, "render needs --svg", cmd_render, JobSpec(curve=CIRCLE))

    def test_render(self):
        directory = tempfile.mkdtemp()
        try:
            path = os.path.join(directory, "ellipse.svg")
            report = cmd_render(JobSpec(curve=ELLIPSE, svg=path, overlay="polar", resolution=32))
            self.assertEqual(report["witnesses"], 2)
            with open(path) as handle:
                self.assertTrue(handle.read().startswith("<?xml"))
        finally:
            shutil.rmtree(directory)


class TestSweep(SimpleTestCase):

    def test_directions(self):
        directions = sweep_directions()
        self.assertEqual(len(directions), 360)
        self.assertEqual(directions[0], (1, 0))
        self.assertEqual(directions[180], (0, 1))
        self.assertEqual(len(set(directions)), 360)

    def test_two_circles_share_directions(self):
        f = curve(TWO_CIRCLES)
        cmap = component_map(f, fraction_box((-3, 7, -3, 7)), 64)
        sweep = coverage_sweep(f, cmap, [], 6)
        self.assertEqual([verdicts for _, verdicts in sweep], [[VERDICT_COVERED, VERDICT_COVERED]] * 6)
        self.assertFalse(never_all_covered(f, cmap, [], 6))

    def test_uncovered_component_in_every_direction(self):
        f = curve("(x^2 + y^2 - 1)*(x - 5)")
        cmap = component_map(f, fraction_box((-3, 7, -3, 7)), 64)
        self.assertEqual(len(cmap), 2)
        with patch("djpolar.jobs.sweep_directions", return_value=[(1, 1), (1, 2), (3, -1)]):
            self.assertTrue(never_all_covered(f, cmap, [], 3))

    @slow
    def test_counterexample_polar_in_the_vertical_direction(self):
        report = cmd_polar(JobSpec(corpus="counterexample-h", direction="0,1"))
        self.assertEqual(sorted(report["coverage"]["verdicts"]),
                         [VERDICT_COVERED, VERDICT_COVERED, VERDICT_ONLY_SINGULAR, VERDICT_ONLY_SINGULAR])
        self.assertEqual(report["exit_code"], EXIT_UNMET)


class TestVerify(SimpleTestCase):

    def test_fast_entries(self):
        report = cmd_verify(["lines-g", "circles-f", "ex4"])
        failed = [(entry["key"], fact["fact"], fact["actual"]) for entry in report["entries"]
                  for fact in entry["facts"] if not fact["passed"]]
        self.assertEqual(failed, [])
        self.assertTrue(report["passed"])
        self.assertEqual(report["exit_code"], EXIT_OK)

    def test_skip_slow(self):
        with patch("djpolar.jobs.verify_entry") as verify_entry:
            verify_entry.return_value = {"key": "x", "facts": [], "passed": True}
            report = cmd_verify(["ex2", "ex4"], skip_slow=True)
        self.assertEqual(report["skipped"], ["ex2"])
        self.assertEqual(verify_entry.call_count, 1)

    def test_failed_fact(self):
        with patch("djpolar.jobs.verify_entry") as verify_entry:
            verify_entry.return_value = {"key": "x", "facts": [], "passed": False}
            report = cmd_verify(["ex4"])
        self.assertEqual(report["exit_code"], EXIT_UNMET)


class TestRunJob(TestCase):

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_signals(self):
        with patch.object(signals.job_started, "send") as started, \
                patch.object(signals.job_finished, "send") as finished:
            report = run_job("singular", JobSpec(curve=NODAL_CUBIC))
        started.assert_called_once()
        finished.assert_called_once()
        self.assertEqual(finished.call_args[1]["report"], report)
        self.assertEqual(report["job"]["key"], NODAL_CUBIC)

    def test_coverage_signal(self):
        with patch.object(signals.coverage_verified, "send") as verified:
            run_job("polar", JobSpec(curve=ELLIPSE, resolution=32))
        self.assertEqual(verified.call_args[1]["curve"], ELLIPSE)
        self.assertEqual(verified.call_args[1]["report"]["verdicts"], [VERDICT_COVERED])

    def test_failure_signal(self):
        with patch.object(signals.job_failed, "send") as failed:
            self.assertRaises(DegeneratePolar, run_job, "reciprocal", JobSpec(curve=CIRCLE))
        self.assertIsInstance(failed.call_args[1]["exception"], DegeneratePolar)
        self.assertEqual(failed.call_args[1]["job"].exit_code, EXIT_ERROR)

    def test_unknown_command(self):
        self.assertRaises(JobSpecError, run_job, "gauss", JobSpec(curve=CIRCLE))

    def test_save(self):
        run_job("singular", JobSpec(curve=NODAL_CUBIC, save=True))
        run = CoverageRun.objects.get()
        self.assertEqual(run.command, "singular")
        self.assertEqual(run.curve_key, NODAL_CUBIC)
        self.assertEqual(run.curve_text, NODAL_CUBIC)
        self.assertEqual(run.exit_code, EXIT_OK)
        self.assertEqual(run.report["kinds"], {"OrdinaryRealMultiple(2)": 1})

    def test_save_failure(self):
        self.assertRaises(DegeneratePolar, run_job, "reciprocal", JobSpec(curve=CIRCLE), save=True)
        run = CoverageRun.objects.get()
        self.assertEqual(run.exit_code, EXIT_ERROR)
        self.assertEqual(run.report["error"], "DegeneratePolar")

    def test_not_saved_by_default(self):
        run_job("singular", JobSpec(curve=NODAL_CUBIC))
        self.assertEqual(CoverageRun.objects.count(), 0)

    def test_out(self):
        path = os.path.join(self.directory, "report.json")
        report = run_job("singular", JobSpec(curve=NODAL_CUBIC, out=path))
        self.assertEqual(reports.read(path), reports.normalize(report))

    def test_verify_saves_key_list(self):
        with patch("djpolar.jobs.verify_entry") as verify_entry:
            verify_entry.return_value = {"key": "ex4", "facts": [], "passed": True}
            run_job("verify", ["ex4", "lines-g"], save=True)
        self.assertEqual(CoverageRun.objects.get().curve_key, "ex4,lines-g")
