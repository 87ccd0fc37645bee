"""End-to-end checks of the splitring executable (path given as argv[1])."""

import json
import os
import subprocess
import sys
import tempfile
import unittest

EXE = None


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("SPLITRING_CAP", None)
    if env:
        full_env.update(env)
    proc = subprocess.run([EXE, *args], capture_output=True, text=True, env=full_env, timeout=120)
    return proc.returncode, proc.stdout, proc.stderr


def run_json(*args):
    code, out, err = run(*args, "--format", "json")
    return code, json.loads(out) if out else None, err


class Relations(unittest.TestCase):
    def test_symbolic_n4_lists_both_constructions(self):
        code, out, _ = run("relations", "--ring", "PolyCoef:4:Z", "--a", "0,0,0,0", "--n", "4")
        self.assertEqual(code, 0)
        self.assertIn("f3 = X1^2 + X1*X2 + X1*X3 + X2^2 + X2*X3 + X3^2 - a1*(X1+X2+X3) + a2", out)
        self.assertIn("f4 = X1 + X2 + X3 + X4 - a1", out)
        self.assertIn("agree: yes", out)

    def test_json_shape(self):
        code, doc, _ = run_json("relations", "--ring", "PolyCoef:4:Z", "--a", "0,0,0,0")
        self.assertEqual(code, 0)
        self.assertTrue(doc["constructions_agree"])
        self.assertEqual(doc["relations_recursive"], doc["relations_closed"])
        self.assertEqual(len(doc["relations_closed"]), 4)
        f4 = doc["relations_closed"][3]["terms"]
        self.assertIn({"exponents": [0, 0, 0, 1], "coeff": "1"}, f4)

    def test_degree_one_gives_f_itself(self):
        code, out, _ = run("relations", "--b", "5")
        self.assertEqual(code, 0)
        self.assertIn("f1 = X1 + 5", out)

    def test_invalid_ring_exits_2(self):
        code, out, err = run("relations", "--ring", "Zmod:x", "--b", "1,2")
        self.assertEqual(code, 2)
        self.assertIn("InvalidRing", err)

    def test_count_mismatch_exits_2(self):
        code, _, err = run("relations", "--b", "1,2", "--n", "3")
        self.assertEqual(code, 2)
        self.assertIn("LengthMismatch", err)

    def test_bad_flag_exits_2(self):
        code, _, _ = run("relations", "--nonsense")
        self.assertEqual(code, 2)

    def test_parse_error_reports_position(self):
        code, _, err = run("relations", "--b", "1+,2")
        self.assertEqual(code, 2)
        self.assertIn("position", err)


class Matrices(unittest.TestCase):
    def test_full_list_over_z(self):
        code, doc, _ = run_json("matrices", "--ring", "Z", "--f", "2,-3,1")
        self.assertEqual(code, 0)
        rep = doc["report"]
        self.assertEqual(rep["matrices"][0]["rows"], [["0", "-2"], ["1", "3"]])
        self.assertEqual(rep["matrices"][1]["rows"], [["3", "2"], ["-1", "0"]])
        self.assertTrue(all(rep["checks"].values()))

    def test_symbolic_n3_matches_display(self):
        code, doc, _ = run_json("matrices", "--ring", "PolyCoef:3:Z", "--b", "0,0,0")
        self.assertEqual(code, 0)
        a1 = doc["report"]["matrices"][0]["rows"]
        self.assertEqual(a1[0][:3], ["0", "0", "-b0"])
        self.assertEqual(a1[2][:3], ["0", "1", "-b2"])
        a2 = doc["report"]["matrices"][1]["rows"]
        self.assertEqual(a2[0], ["0", "0", "0", "-b1", "b0", "0"])
        self.assertEqual(a2[3], ["1", "0", "0", "-b2", "0", "b0"])
        self.assertEqual(doc["report"]["rank"], 6)

    def test_cap(self):
        code, _, err = run("matrices", "--b", "1,2,3,4,5,6,7")
        self.assertEqual(code, 3)
        self.assertIn("CapExceeded", err)
        code, _, _ = run("relations", "--b", "1,2,3,4,5,6,7")
        self.assertEqual(code, 0)

    def test_cap_override_and_env(self):
        code, _, err = run("matrices", "--b", "1,2,3", "--cap-override", "2")
        self.assertEqual(code, 3)
        code, _, err = run("matrices", "--b", "1,2,3", env={"SPLITRING_CAP": "2"})
        self.assertEqual(code, 3)

    def test_round_trip_reproduces_report(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "m.json")
            code, _, _ = run("matrices", "--ring", "Zmod:101", "--b", "3,5,7", "--format", "json", "--out", path)
            self.assertEqual(code, 0)
            with open(path) as fh:
                first = json.load(fh)
            code, second, _ = run_json("matrices", "--ring", "Zmod:101", "--b", "3,5,7", "--matrices", path)
            self.assertEqual(code, 0)
            self.assertEqual(first["report"], second["report"])

    def test_tampered_matrices_fail_with_exit_1(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "m.json")
            run("matrices", "--ring", "Z", "--b", "2,-3", "--format", "json", "--out", path)
            with open(path) as fh:
                doc = json.load(fh)
            doc["report"]["matrices"][1]["rows"][0][0] = "4"
            with open(path, "w") as fh:
                json.dump(doc, fh)
            code, out, _ = run_json("matrices", "--ring", "Z", "--b", "2,-3", "--matrices", path)
            self.assertEqual(code, 1)
            self.assertFalse(out["passed"])

    def test_selected_checks(self):
        code, doc, _ = run_json("matrices", "--b", "1,2", "--checks", "commutation,factorization")
        self.assertEqual(code, 0)
        checks = doc["report"]["checks"]
        self.assertTrue(checks["commutation"])
        self.assertIsNone(checks["entry_pattern"])


class Noncomm(unittest.TestCase):
    def test_matrix_ring_collapses(self):
        code, doc, _ = run_json("noncomm", "--ring", "Mat:2:Zmod:2", "--b=[[1,0],[0,0]]")
        self.assertEqual(code, 0)
        self.assertTrue(doc["zero_ring"])
        self.assertEqual(doc["T_f_order"], 1)
        self.assertTrue(doc["splitting_ring"]["gamma_injective"])

    def test_upper_triangular(self):
        code, doc, _ = run_json("noncomm", "--ring", "UTri:2:Zmod:2", "--b=[[0,1],[0,0]]")
        self.assertEqual(code, 0)
        self.assertEqual(doc["L_f_size"], 2)
        self.assertEqual(doc["T_f_order"], 4)
        self.assertTrue(doc["splitting_ring"]["gamma_exhaustive"])

    def test_commutative_passthrough(self):
        code, doc, _ = run_json("noncomm", "--ring", "Zmod:6", "--b", "1,2")
        self.assertEqual(code, 0)
        self.assertEqual(doc["L_f_size"], 1)
        self.assertEqual(doc["T_f_order"], 6)

    def test_infinite_ring_rejected(self):
        code, _, err = run("noncomm", "--ring", "Z", "--b", "1,2")
        self.assertEqual(code, 3)
        self.assertIn("InfiniteRing", err)


class Automorphisms(unittest.TestCase):
    def test_cubic_over_q(self):
        code, doc, _ = run_json("automorphisms", "--ring", "Q", "--a", "0,-1,1")
        self.assertEqual(code, 0)
        self.assertTrue(doc["theta_injective"])
        self.assertEqual(len(doc["permutation_certificates"]), 6)
        self.assertEqual(doc["scaling_certificates"], [])

    def test_square_over_z5(self):
        code, doc, _ = run_json("automorphisms", "--ring", "Zmod:5", "--b", "0,0")
        self.assertEqual(code, 0)
        systems = [c["system"] for c in doc["scaling_certificates"]]
        self.assertIn("scale u=4 d=2", systems)
        self.assertTrue(all(c["verdict"] for c in doc["scaling_certificates"]))

    def test_fourth_power_over_z5(self):
        code, doc, _ = run_json("automorphisms", "--ring", "Zmod:5", "--b", "0,0,0,0")
        self.assertEqual(code, 0)
        units = sorted(c["system"].split()[1] for c in doc["scaling_certificates"])
        self.assertEqual(units, ["u=1", "u=2", "u=3", "u=4"])
        for c in doc["scaling_certificates"]:
            self.assertLessEqual({"system", "commute", "factorization", "basis_unit_det", "verdict"}, set(c))
            self.assertTrue(c["verdict"])


class Verify(unittest.TestCase):
    def test_quintic_scale(self):
        code, doc, _ = run_json("verify", "--ring", "Zmod:101", "--b", "3,5,7,11,13",
                                "--checks", "regular_rep_agreement,factorization", "--skip-perms")
        self.assertEqual(code, 0)
        self.assertEqual(doc["splitting_ring"]["dimension"], 120)
        self.assertTrue(doc["report"]["checks"]["regular_rep_agreement"])

    def test_text_and_json_agree_on_verdict(self):
        code, out, _ = run("verify", "--ring", "Z", "--b", "-1,-1,0")
        self.assertEqual(code, 0)
        self.assertTrue(out.rstrip().endswith("overall: pass"))

    def test_seed_is_reproducible(self):
        a = run("verify", "--ring", "Z", "--b", "1,0,2", "--seed", "7", "--format", "json")
        b = run("verify", "--ring", "Z", "--b", "1,0,2", "--seed", "7", "--format", "json")
        self.assertEqual(a, b)


if __name__ == "__main__":
    EXE = sys.argv.pop(1)
    unittest.main()
