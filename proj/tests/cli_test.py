"""End-to-end checks of the uck binary. Usage: cli_test.py UCK SCHEMA"""

import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

UCK = SCHEMA = None

A2 = "p cnf 2 4\n1 2 0\n1 -2 0\n-1 2 0\n-1 -2 0\n"


def run(args, stdin="", env=None):
    full_env = dict(os.environ)
    for name in ("UCK_NODE_BUDGET", "UCK_PHD_MAX_VARS", "UCK_SLUR_MAX_VARS"):
        full_env.pop(name, None)
    full_env.update(env or {})
    return subprocess.run([UCK, *args], input=stdin, capture_output=True, text=True, env=full_env)


class Cli(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        with open(SCHEMA) as f:
            cls.validator = jsonschema.Draft202012Validator(json.load(f))

    def report(self, args, stdin="", env=None):
        p = run(args, stdin, env)
        self.assertEqual(p.returncode, 0, p.stderr)
        r = json.loads(p.stdout)
        self.validator.validate(r)
        return r

    def gen(self, *args):
        p = run(["gen", *args])
        self.assertEqual(p.returncode, 0, p.stderr)
        return p.stdout

    def test_analyze_examples(self):
        self.assertEqual(self.report(["analyze", "-"], A2)["result"]["hd"], 2)
        r = self.report(["analyze", "-"], self.gen("--family", "horn-chain", "--n", "4"))["result"]
        self.assertEqual(r["hd"], 1)
        self.assertIn("Horn", r["classes"])
        self.assertEqual(self.report(["analyze", "-"], "p cnf 0 0\n")["result"]["hd"], 0)

    def test_analyze_optional_measures(self):
        r = self.report(["analyze", "-", "--phd", "--whd", "--witness", "--oracle"], A2)["result"]
        self.assertEqual((r["hd"], r["phd"], r["whd"]), (2, 2, 2))
        self.assertTrue(r["oracle"]["agrees"])
        self.assertEqual(r["witness"]["status"], "derivable")
        self.assertEqual(r["witness"]["tree"]["hts"], 2)

    def test_general_path(self):
        r = self.report(["analyze", "-", "--oracle"], self.gen("--family", "full", "--n", "3"))["result"]
        self.assertEqual(r["method"], "general")
        self.assertEqual(r["hd"], 3)
        self.assertTrue(r["oracle"]["agrees"])

    def test_reduce(self):
        p = run(["reduce", "-", "--k", "2"], A2)
        self.assertEqual(p.stdout, "p cnf 0 1\n0\n")
        self.assertEqual(run(["reduce", "-", "--k", "1"], A2).stdout.splitlines()[0], "p cnf 2 4")
        self.assertTrue(self.report(["reduce", "-", "--k", "2", "--json"], A2)["result"]["is_bottom"])

    def test_implies(self):
        r = self.report(["implies", "-", "--clause", "1", "--k", "1", "--oracle", "--witness"],
                        "p cnf 2 2\n1 2 0\n1 -2 0\n")["result"]
        self.assertTrue(r["implies"])
        self.assertTrue(r["oracle"]["entailed"])
        r = self.report(["implies", "-", "--clause", "1", "--k", "0"], "p cnf 2 2\n1 2 0\n1 -2 0\n")["result"]
        self.assertFalse(r["implies"])

    def test_primes(self):
        r = self.report(["primes", "-", "--oracle"], "p cnf 3 2\n-1 2 0\n-2 3 0\n")["result"]
        self.assertEqual(r["primes"], [[-1, 2], [-1, 3], [-2, 3]])
        self.assertTrue(r["oracle"]["agrees"])

    def test_slur(self):
        r = self.report(["slur", "-", "--k", "1"], A2)["result"]
        self.assertFalse(r["member"])
        r = self.report(["slur", "-", "--k", "2", "--oracle"], A2)["result"]
        self.assertTrue(r["member"])
        self.assertTrue(r["oracle"]["uc_member"])
        r = self.report(["slur", "-", "--k", "1", "--variant", "altslur"], A2)["result"]
        self.assertTrue(r["member"])
        sat = self.report(["slur", "-"], "p cnf 2 1\n1 2 0\n")["result"]
        self.assertEqual(sat["terminals"], [[]])
        self.assertEqual(sat["trace"]["states"][0], [[1, 2]])

    def test_base(self):
        cnf = "p cnf 3 3\n-1 2 0\n-2 3 0\n-1 3 0\n"
        r = self.report(["base", "-", "--k", "1"], cnf)["result"]
        self.assertEqual((r["method"], r["cardinality"], r["exact"]), ("2cnf", 2, True))
        r = self.report(["base", "-", "--k", "0"], cnf)["result"]
        self.assertEqual(r["cardinality"], 3)
        r = self.report(["base", "-", "--k", "inf"], self.gen("--family", "full-minus-one", "--n", "3"))["result"]
        self.assertEqual(r["method"], "prime-subsets")
        self.assertEqual(r["k"], "inf")

    def test_gen(self):
        out = self.gen("--family", "full", "--n", "3")
        lines = out.splitlines()
        self.assertEqual(lines[0], "c family=full n=3")
        self.assertEqual(lines[1], "p cnf 3 8")
        self.assertEqual(len(lines), 10)
        r = self.report(["gen", "--family", "random", "--n", "8", "--c", "5", "--seed", "3", "--json"])
        self.assertIsNone(r["input"])
        self.assertEqual(len(r["result"]["clauses"]), 5)
        self.assertEqual(self.gen("--family", "random", "--n", "8", "--c", "5", "--seed", "3"),
                         self.gen("--family", "random", "--n", "8", "--c", "5", "--seed", "3"))

    def test_generated_hardness_round_trip(self):
        for n in range(1, 5):
            self.assertEqual(self.report(["analyze", "-"], self.gen("--family", "full", "--n", str(n)))["result"]["hd"], n)
            self.assertEqual(
                self.report(["analyze", "-"], self.gen("--family", "full-minus-one", "--n", str(n)))["result"]["hd"], n - 1)
        pumped = self.gen("--family", "pump", "--base", "full", "--n", "2")
        self.assertEqual(self.report(["analyze", "-"], pumped)["result"]["hd"], 3)
        php = self.gen("--family", "php", "--m", "3", "--n", "2")
        self.assertFalse(self.report(["analyze", "-"], php)["result"]["satisfiable"])

    def test_deterministic_reports(self):
        with tempfile.NamedTemporaryFile("w", suffix=".cnf", delete=False) as f:
            f.write(A2)
        try:
            a = run(["analyze", f.name, "--deterministic", "--phd", "--witness"])
            b = run(["analyze", f.name, "--deterministic", "--phd", "--witness"])
            self.assertEqual(a.stdout, b.stdout)
            self.assertNotIn("timing_ms", json.loads(a.stdout))
            timed = self.report(["analyze", f.name])
            self.assertIn("timing_ms", timed)
            piped = self.report(["analyze", "-", "--deterministic"], A2)
            self.assertEqual(piped["input"]["digest"], timed["input"]["digest"])
        finally:
            os.unlink(f.name)

    def test_exit_codes(self):
        big = self.gen("--family", "random", "--n", "20", "--c", "30", "--seed", "1")
        self.assertEqual(run(["analyze", "-", "--phd"], big).returncode, 2)
        self.assertEqual(run(["analyze", "-", "--phd"], A2, {"UCK_PHD_MAX_VARS": "1"}).returncode, 2)
        self.assertEqual(run(["slur", "-", "--max-vars", "1"], A2).returncode, 2)
        self.assertEqual(run(["slur", "-"], A2, {"UCK_SLUR_MAX_VARS": "1"}).returncode, 2)
        self.assertEqual(run(["analyze", "-"], "p cnf 2 1\n1 -1 0\n").returncode, 1)
        self.assertEqual(run(["analyze", "-"], "garbage\n").returncode, 1)
        self.assertEqual(run(["analyze", "/nonexistent/file.cnf"]).returncode, 1)
        self.assertEqual(run(["gen", "--family", "nope"]).returncode, 1)
        self.assertEqual(run([]).returncode, 1)

    def test_node_budget_env(self):
        r = self.report(["analyze", "-", "--witness"], A2, {"UCK_NODE_BUDGET": "1"})["result"]
        self.assertEqual(r["witness"]["status"], "budget_exhausted")
        r = self.report(["analyze", "-", "--witness", "--budget", "100000"], A2, {"UCK_NODE_BUDGET": "1"})["result"]
        self.assertEqual(r["witness"]["status"], "derivable")


if __name__ == "__main__":
    UCK, SCHEMA = sys.argv[1], sys.argv[2]
    unittest.main(argv=sys.argv[:1], verbosity=2)
