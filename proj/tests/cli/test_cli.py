"""Integration tests for the euler-horizon executable.

Usage: test_cli.py CLI SCHEMA ZEROS
"""

import csv
import io
import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

CLI, SCHEMA, ZEROS = sys.argv[1:4]

CORPUS = {
    "ex51": ("(1+Y)*(1+X*Y)", 1),
    "ex52a": ("1+2*Y/(1-2*Y)", 2),
    "ex53a": ("1+X^3*Y^3+X^4*Y^3+X^6*Y^5+X^7*Y^5+X^10*Y^8", 3),
    "ex53b": ("1+Y+X*Y^2", 3),
    "ex54a": ("1+(X+X^2+X^3+X^4)*Y+X^5*Y^2", 4),
    "ex55": ("1+Y-X^2*Y", 5),
}

# Scan density 0.31 at bound 300 with no positive prime in the top block.
AMBIGUOUS = "1-3*X*Y^2-X^4*Y^2-2*Y^2"


def run(*args, env=None):
    e = dict(os.environ)
    e.pop("EULER_HORIZON_ZEROS", None)
    if env:
        e.update(env)
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=e)


class Analyze(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        with open(SCHEMA) as f:
            cls.schema = json.load(f)
        jsonschema.Draft202012Validator.check_schema(cls.schema)

    def test_corpus_reports_validate_and_repeat(self):
        for name, (expr, case) in CORPUS.items():
            with self.subTest(name=name):
                first = run("analyze", "--expr", expr, "--prime-bound", "2000")
                second = run("analyze", "--expr", expr, "--prime-bound", "2000")
                self.assertEqual(first.returncode, 0, first.stderr)
                self.assertEqual(first.stdout, second.stdout)
                report = json.loads(first.stdout)
                jsonschema.validate(report, self.schema)
                self.assertEqual(report["case"], case)

    def test_json_file_matches_stdout(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "r.json")
            r = run("analyze", "--expr", CORPUS["ex55"][0], "--json", path)
            self.assertEqual(r.returncode, 0, r.stderr)
            with open(path) as f:
                text = f.read()
            self.assertEqual(text, run("analyze", "--expr", CORPUS["ex55"][0]).stdout)

    def test_input_errors_exit_1(self):
        for expr in ["1+", "2X", "1+X", "1", "Y", "1/(X-X)"]:
            with self.subTest(expr=expr):
                r = run("analyze", "--expr", expr)
                self.assertEqual(r.returncode, 1, r.stderr)
                self.assertIn("error", r.stderr)
        r = run("analyze", "--expr", "1+Y", "--ydeg", "2")
        self.assertEqual(r.returncode, 1)

    def test_inconclusive_exits_3_with_a_valid_report(self):
        r = run("analyze", "--expr", AMBIGUOUS, "--prime-bound", "300")
        self.assertEqual(r.returncode, 3, r.stderr)
        report = json.loads(r.stdout)
        jsonschema.validate(report, self.schema)
        self.assertIsNone(report["case"])
        self.assertEqual(report["candidates"], [4, 5])


class Artifacts(unittest.TestCase):
    def test_expand_csv(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "c.csv")
            r = run("expand", "--expr", "1+Y+X*Y^2", "--ydeg", "21", "--csv", path)
            self.assertEqual(r.returncode, 0, r.stderr)
            with open(path) as f:
                rows = list(csv.DictReader(f))
        got = {(int(x["n"]), int(x["m"])): int(x["c"]) for x in rows}
        for key, c in {(0, 1): -1, (1, 2): -1, (0, 2): 1, (2, 4): 1, (1, 3): 1}.items():
            self.assertEqual(got[key], c, key)
        self.assertTrue(all(m <= 21 for _, m in got))

    def test_zeros_csv(self):
        r = run("zeros", "--expr", CORPUS["ex54a"][0], "--prime-bound", "1000")
        self.assertEqual(r.returncode, 0, r.stderr)
        rows = list(csv.DictReader(io.StringIO(r.stdout)))
        self.assertEqual(list(rows[0].keys()), ["p", "root_re", "root_im", "re_s", "margin"])
        per_prime = {}
        for x in rows:
            per_prime[x["p"]] = max(per_prime.get(x["p"], -1e9), float(x["margin"]))
        positive = sum(1 for v in per_prime.values() if v > 1e-6)
        self.assertGreater(positive, 0.9 * len(per_prime))

    def test_eval(self):
        r = run("eval", "--expr", CORPUS["ex51"][0], "--s", "3+0i", "--prime-bound", "100000")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("value", r.stdout)
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "e.json")
            r = run("eval", "--expr", CORPUS["ex51"][0], "--s", "3+0i", "--prime-bound", "100000", "--json", path)
            self.assertEqual(r.returncode, 0, r.stderr)
            with open(path) as f:
                v = json.load(f)
        self.assertAlmostEqual(v["value"]["re"], 1.7957619471, delta=1e-4)
        self.assertLess(v["tail_bound"], 1e-4)
        r = run("eval", "--expr", CORPUS["ex51"][0], "--s", "1.5")
        self.assertEqual(r.returncode, 1)
        r = run("eval", "--expr", CORPUS["ex51"][0], "--s", "three")
        self.assertEqual(r.returncode, 1)

    def test_atlas(self):
        r = run("atlas", "--expr", CORPUS["ex51"][0], "--T", "50", "--json", "-", env={"EULER_HORIZON_ZEROS": ZEROS})
        self.assertEqual(r.returncode, 0, r.stderr)
        atlas = json.loads(r.stdout)
        self.assertEqual(atlas["n_pm"], 80)
        r = run("atlas", "--expr", CORPUS["ex51"][0], "--T", "50")
        self.assertEqual(r.returncode, 1)
        self.assertIn("MissingZerosFile", r.stderr)
        r = run("atlas", "--expr", AMBIGUOUS, "--prime-bound", "300", "--zeros-file", ZEROS)
        self.assertEqual(r.returncode, 3)
        r = run("atlas", "--expr", CORPUS["ex53b"][0], "--T", "20", "--csv", "-")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("accumulation", r.stdout)

    def test_corpus(self):
        r = run("corpus", "list")
        self.assertEqual(r.returncode, 0)
        ids = [e["id"] for e in json.loads(r.stdout)]
        self.assertEqual(ids, ["ex51", "ex52a", "ex53a", "ex53b", "ex54a", "ex55", "ex52b", "ex54b"])
        r = run("corpus", "run", "--only", "ex53b")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("PASS", r.stdout)
        r = run("corpus", "run")
        self.assertEqual(r.returncode, 0, r.stderr)
        r = run("corpus", "run", "--only", "ex54b")
        self.assertEqual(r.returncode, 1)


if __name__ == "__main__":
    unittest.main(argv=[sys.argv[0], "-v"])
