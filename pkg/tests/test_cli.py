import io
import json
import os
import tempfile
import unittest
from unittest.mock import MagicMock, patch

from WitnessPy.cli import build_parser, command_mapping, main
from WitnessPy.exceptions import NumericalInconsistency


@patch("sys.stderr", new_callable=io.StringIO)
class TestCli(unittest.TestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)

    def path(self, name: str) -> str:
        return os.path.join(self.directory.name, name)

    def test_parser(self, _):
        parser = build_parser()
        args = parser.parse_args(["report", "--gamma", "0.75"])
        self.assertEqual(args.factor, "a")
        self.assertEqual(command_mapping[args.command].__name__, "cmd_report")
        args = parser.parse_args(["scan", "--out", "x.csv"])
        self.assertEqual((args.gamma_from, args.gamma_to, args.steps), ("0.01", "0.99", "99"))

    @patch("sys.stdout", new_callable=io.StringIO)
    def test_report(self, mocked_stdout, _):
        self.assertEqual(main(["report", "--gamma", "0.75"]), 0)
        payload = json.loads(mocked_stdout.getvalue())
        self.assertEqual(payload["spectrum"]["degeneracy"], 3)
        self.assertEqual(payload["realignment"]["verdict"], "entangled")
        self.assertGreater(payload["realignment"]["margin"], 0)
        self.assertAlmostEqual(payload["spa"]["p_star"], 0.342, places=3)

    @patch("WitnessPy.cli.color_print")
    def test_witness(self, mocked_print, _):
        out = self.path("w.json")
        self.assertEqual(main(["witness", "--gamma", "0.5", "--out", out]), 0)
        mocked_print.assert_called_once()
        with open(out) as file:
            payload = json.load(file)
        self.assertEqual(set(payload), {"dim_a", "dim_b", "re", "im"})
        self.assertAlmostEqual(payload["re"][0][0], 0.5, places=14)

    @patch("WitnessPy.cli.color_print")
    def test_scan(self, mocked_print, _):
        first, second = self.path("a.csv"), self.path("b.csv")
        self.assertEqual(main(["scan", "--out", first]), 0)
        self.assertEqual(main(["scan", "--out", second, "--workers", "2"]), 0)
        with open(first, "rb") as a, open(second, "rb") as b:
            content = a.read()
            self.assertEqual(content, b.read())
        lines = content.decode().splitlines()
        self.assertEqual(len(lines), 100)
        self.assertEqual(
            lines[0],
            "gamma,lambda_min,p_star,margin,trace_norm_numeric,trace_norm_analytic,lambda0",
        )
        self.assertEqual(mocked_print.call_count, 2)

    def test_scan_invalid(self, _):
        self.assertEqual(main(["scan"]), 2)
        self.assertEqual(main(["scan", "--out", self.path("a.csv"), "--steps", "1"]), 2)
        self.assertEqual(
            main(["scan", "--out", self.path("a.csv"), "--from", "0.5", "--to", "0.4"]), 2
        )
        self.assertEqual(
            main(["scan", "--out", self.path("missing/a.csv"), "--steps", "3"]), 1
        )

    def test_invalid_gamma(self, _):
        self.assertEqual(main(["report", "--gamma", "1.5"]), 2)
        self.assertEqual(main(["report", "--gamma", "abc"]), 2)
        self.assertEqual(main(["report", "--gamma", "0.5", "--factor", "c"]), 2)
        self.assertEqual(main(["witness"]), 2)
        self.assertEqual(main([]), 2)

    @patch("sys.stdout", new_callable=io.StringIO)
    def test_help(self, mocked_stdout, _):
        self.assertEqual(main(["--help"]), 0)
        self.assertIn("certify", mocked_stdout.getvalue())

    @patch("sys.stdout", new_callable=io.StringIO)
    def test_optimality(self, mocked_stdout, _):
        self.assertEqual(main(["optimality", "--gamma", "0.5", "--samples", "3"]), 2)
        self.assertEqual(main(["optimality", "--gamma", "0.5", "--samples", "12"]), 0)
        payload = json.loads(mocked_stdout.getvalue())
        self.assertTrue(payload["ranks_ok"])
        self.assertEqual(payload["w_span"]["numeric_rank"], 9)

    @patch("sys.stdout", new_callable=io.StringIO)
    @patch("WitnessPy.cli.certify_optimality")
    def test_optimality_rejected(self, mocked_certify, _, __):
        report = MagicMock()
        report.to_dict.return_value = {"ranks_ok": False}
        report.ranks = (5, 9)
        report.ranks_ok = False
        mocked_certify.return_value = report
        self.assertEqual(main(["optimality", "--gamma", "0.5"]), 3)

    @patch("sys.stdout", new_callable=io.StringIO)
    def test_certify(self, mocked_stdout, _):
        self.assertEqual(main(["certify"]), 0)
        payload = json.loads(mocked_stdout.getvalue())
        self.assertTrue(payload["verdict"])
        self.assertEqual(payload["lambda_prime"], {"num": "-64191", "den": "100000"})

        self.assertEqual(main(["certify", "--lambda-prime=-13/20"]), 3)
        self.assertEqual(main(["certify", "--lambda-prime", "-0.6"]), 3)
        self.assertEqual(main(["certify", "--lambda-prime", "abc"]), 2)

    @patch("WitnessPy.cli.color_print")
    def test_certify_out(self, mocked_print, _):
        out = self.path("certificate.json")
        self.assertEqual(main(["certify", "--out", out]), 0)
        with open(out) as file:
            self.assertIn("narrative", json.load(file))
        mocked_print.assert_called_once()
        self.assertEqual(main(["certify", "--out", self.directory.name]), 1)

    @patch("WitnessPy.cli.build_witness")
    def test_internal_failure(self, mocked_build, _):
        mocked_build.side_effect = NumericalInconsistency("boom")
        with self.assertLogs("WitnessPy.cli", level="ERROR"):
            self.assertEqual(main(["witness", "--gamma", "0.5"]), 1)
