"""End-to-end checks of the commacat executable against the bundled workspaces.

usage: test_cli.py <commacat> <workspaces dir> <scratch dir>
"""

import hashlib
import json
import os
import subprocess
import sys
import unittest

CLI, WORKSPACES, SCRATCH = sys.argv[1:4]


def run(*args, spec="arrow.json", out="report.json", extra=()):
    out_path = os.path.join(SCRATCH, out)
    spec_path = spec if os.path.isabs(spec) else os.path.join(WORKSPACES, spec)
    proc = subprocess.run([CLI, *args, "--spec", spec_path, "--out", out_path, *extra],
                          capture_output=True, text=True)
    with open(out_path, "rb") as f:
        raw = f.read()
    return proc.returncode, json.loads(raw), raw


def walk(value):
    yield value
    if isinstance(value, dict):
        for v in value.values():
            yield from walk(v)
    elif isinstance(value, list):
        for v in value:
            yield from walk(v)


class CliTest(unittest.TestCase):
    def test_hn_two_step(self):
        code, report, _ = run("hn", "Z", "k_k_0")
        self.assertEqual(code, 0)
        self.assertEqual(report["result"]["slopes"], ["inf", "0/1"])
        self.assertEqual([s["class"] for s in report["result"]["steps"]], ["(0,0)", "(1,0)", "(1,1)"])

    def test_hn_stable(self):
        code, report, _ = run("hn", "Z", "k_k_id")
        self.assertEqual(code, 0)
        self.assertEqual(report["result"]["slopes"], ["1/1"])

    def test_jh(self):
        code, report, _ = run("jh", "k_k_id")
        self.assertEqual(code, 0)
        self.assertEqual(report["result"]["length"], 2)
        self.assertEqual(report["result"]["steps"][1]["class"], "(0,1)")

    def test_kernel_verified(self):
        code, report, _ = run("kernel", "arrow", "into_id")
        self.assertEqual(code, 0)
        self.assertEqual(report["result"]["object"]["class"], "(1,0)")
        self.assertEqual(report["result"]["verification"]["violations"], [])

    def test_fault_fixture(self):
        code, report, _ = run("validate", spec="fault_left_exact.json")
        self.assertEqual(code, 1)
        self.assertEqual(report["status"], "validation_failed")
        self.assertTrue(any(v.startswith("functor Coker: claims left_exact") for v in report["violations"]))

    def test_bundled_workspaces_validate(self):
        for spec in ("arrow.json", "toy.json", "framed.json"):
            code, report, _ = run("validate", spec=spec, out=spec + ".validate.json")
            self.assertEqual(code, 0, report.get("violations"))

    def test_scan(self):
        walls = []
        for geometry in ("toy", "toy_scaled"):
            code, report, _ = run("scan-alpha", "system", geometry, "0:6", spec="toy.json")
            self.assertEqual(code, 0)
            walls.append([w["alpha"] for w in report["result"]["walls"]])
        self.assertEqual(walls, [["2/1"], ["2/1"]])

    def test_counterexample(self):
        code, report, _ = run("counterexample")
        self.assertEqual(code, 0)
        self.assertTrue(report["result"]["reproduced"])

    def test_digest_matches_rehash(self):
        _, report, _ = run("kclass", "k2_k_proj")
        with open(os.path.join(WORKSPACES, "arrow.json"), "rb") as f:
            digest = hashlib.sha256(f.read()).hexdigest()
        self.assertEqual(report["input"], {"file": "arrow.json", "sha256": digest})

    def test_deterministic_bytes(self):
        for args, spec in ((("validate",), "toy.json"), (("scan-alpha", "system", "toy", "0:6"), "toy.json"),
                           (("hn", "Z", "k_k_0"), "arrow.json")):
            _, _, a = run(*args, spec=spec, out="a.json")
            _, _, b = run(*args, spec=spec, out="b.json")
            self.assertEqual(a, b, args)

    def test_no_floats(self):
        for args, spec in ((("validate",), "framed.json"), (("scan-alpha", "system", "toy", "0:6"), "toy.json"),
                           (("hn", "Z_alpha_3", "system"), "toy.json")):
            _, report, _ = run(*args, spec=spec)
            self.assertFalse(any(isinstance(v, float) for v in walk(report)), args)

    def test_spec_errors(self):
        bad = os.path.join(SCRATCH, "bad.json")
        with open(bad, "w") as f:
            json.dump({"schema": "commacat-workspace/1", "field_modulus": 4}, f)
        code, report, _ = run("validate", spec=bad)
        self.assertEqual(code, 3)
        self.assertIn("field_modulus", report["error"])

        with open(bad, "w") as f:
            json.dump({"schema": "commacat-workspace/1", "field_modulus": 2,
                       "categories": {"V": {"kind": "finvect"}},
                       "rep_objects": {"k": {"category": "V", "dims": [1]}},
                       "functors": {"I": {"kind": "identity", "source": "V"}},
                       "contexts": {"c": {"kind": "comma", "F": "I", "G": "I"}},
                       "objects": {"x": {"context": "c", "a": "k", "b": "k"}},
                       "stability": {"Z": {"context": "c", "A": [["1", "0"]], "B": [["0", "1"]]}}}, f)
        code, report, _ = run("validate", spec=bad)
        self.assertEqual(code, 3)
        self.assertIn("stability.Z", report["error"])

        code, _, _ = run("hn", "Z", "missing")
        self.assertEqual(code, 3)

    def test_budget(self):
        code, report, _ = run("subobjects", "arrow", "k2_k_proj", extra=("--budget", "2"))
        self.assertEqual(code, 2)
        self.assertEqual(report["status"], "budget_exceeded")


if __name__ == "__main__":
    os.makedirs(SCRATCH, exist_ok=True)
    unittest.main(argv=sys.argv[:1], verbosity=2)
