"""End-to-end checks of the command line tool."""

import json
import subprocess
import sys
from pathlib import Path

EXE = sys.argv[1]
DATA = Path(sys.argv[2])
failures = []


def run(*args):
    proc = subprocess.run([EXE, *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout


def check(name, cond, detail=""):
    if not cond:
        failures.append(f"{name}: {detail}")


def expect(name, args, code=0, pred=lambda out: True):
    rc, out = run(*args)
    check(name, rc == code, f"exit {rc}, expected {code}\n{out}")
    try:
        doc = json.loads(out)
    except json.JSONDecodeError:
        check(name, False, "output is not JSON\n" + out)
        return None
    check(name, pred(doc), out)
    rc2, out2 = run(*args)
    check(name + " (determinism)", out == out2 and rc == rc2)
    return doc


d = str(DATA)
expect("bredon C2 triv",
       ["bredon", "cohomology", "--group", "C2", "--family", "triv", "--ring", "Z", "--degrees", "0..4"],
       pred=lambda j: j["cohomology"] == ["Z", "0", "Z/2", "0", "Z/2"])
expect("bredon C3 triv",
       ["bredon", "cohomology", "--group", "C3", "--family", "triv", "--degrees", "0..4"],
       pred=lambda j: j["cohomology"] == ["Z", "0", "Z/3", "0", "Z/3"])
expect("bredon S3 all",
       ["bredon", "cohomology", "--group", "S3", "--family", "all", "--coeff", "constant", "--ring", "Z",
        "--degrees", "0..4"],
       pred=lambda j: j["cohomology"] == ["Z", "0", "0", "0", "0"])
expect("bredon degree slice",
       ["bredon", "cohomology", "--group", "C2", "--family", "triv", "--degrees", "2..3"],
       pred=lambda j: j["cohomology"] == ["Z/2", "0"])
expect("bredon of a G-CW complex",
       ["bredon", "cohomology", "--group", "C2", "--cw", d + "/c2_interval.json", "--degrees", "0..2"],
       pred=lambda j: j["cohomology"] == ["Z", "0", "0"])
expect("isotropy outside family",
       ["bredon", "cohomology", "--group", "C2", "--family", "triv", "--cw", d + "/c2_bad_isotropy.json"],
       code=1, pred=lambda j: j["error"] == "IsotropyNotInFamily")
expect("hecke homs",
       ["hecke", "homs", "--group", "S3", "--source", "(01)", "--target", "(01)"],
       pred=lambda j: j["rank"] == 2 and len(j["composition"]) == 4)
expect("hecke homs checked",
       ["hecke", "homs", "--group", "D4", "--source", "1", "--target", "G", "--check"],
       pred=lambda j: j["rank"] == 1)
expect("orbit homs",
       ["orbit", "homs", "--group", "S3", "--source", "1", "--target", "1"],
       pred=lambda j: j["rank"] == 6 and j["right_weyl"]["orbits"] * j["right_weyl"]["orbit_size"] == 6)
expect("mackey homs",
       ["mackey", "homs", "--group", "C2", "--source", "G", "--target", "G"],
       pred=lambda j: j["rank"] == 2)
expect("group info",
       ["group", "info", "--group", "S3"],
       pred=lambda j: j["order"] == 6 and len(j["subgroups"]) == 6 and j["conjugacy_classes"] == 4)
expect("ext over F2",
       ["ext", "--group", "C2", "--family", "triv", "--ring", "F2"],
       pred=lambda j: j["ext"] == ["F2"] * 5)
expect("ext hecke",
       ["ext", "--group", "S3", "--category", "hecke", "--source", "fixed-point", "--target", "fixed-point",
        "--degrees", "0..2"],
       pred=lambda j: j["ext"][0] != "0")
expect("induce sigma",
       ["induce", "--group", "S3", "--along", "sigma"], pred=lambda j: j["isomorphic"] is True)
expect("induce pisigma",
       ["induce", "--group", "C4", "--along", "pisigma"], pred=lambda j: j["isomorphic"] is True)
expect("dual",
       ["dual", "--group", "S3", "--module", "representable:(01)"],
       pred=lambda j: j["double_dual_iso"] is True and j["projective"] is True)
expect("houghton conjugate false",
       ["houghton", "conjugate", d + "/q_one_swap.json", d + "/q_two_swaps.json"],
       pred=lambda j: j["conjugate"] is False)
expect("houghton conjugate true",
       ["houghton", "conjugate", d + "/q_one_swap.json", d + "/q_swap_other_ray.json"],
       pred=lambda j: j["conjugate"] is True)
expect("houghton conjugate infinite",
       ["houghton", "conjugate", d + "/q_one_swap.json", d + "/shift_n2.json"],
       code=1, pred=lambda j: j["error"] == "InfiniteOrder")
expect("houghton centraliser finite",
       ["houghton", "centraliser", "--element", d + "/q_one_swap.json"],
       pred=lambda j: j["centraliser"]["shape"] == "H_2 x C_2")
expect("houghton centraliser infinite",
       ["houghton", "centraliser", "--element", d + "/odd_n3.json"],
       pred=lambda j: j["centraliser"]["shape"] == "H_1 x Z")
expect("houghton centraliser vcyc",
       ["houghton", "centraliser", "--subgroup", d + "/swap_ray3.json", "--w", d + "/odd_n3.json"],
       pred=lambda j: j["centraliser"]["shape"] == "H_1 x Z x C_2")
expect("houghton gamma",
       ["houghton", "gamma", "--element", d + "/odd_n3.json"],
       pred=lambda j: j["J"] == [3] and j["edges"] == [[2, 1]] and j["r"] == 1)
expect("houghton gamma finite",
       ["houghton", "gamma", "--element", d + "/q_one_swap.json"],
       code=1, pred=lambda j: j["error"] == "FiniteOrder")
expect("houghton not bijective",
       ["houghton", "centraliser", "--element", d + "/not_bijective.json"],
       code=1, pred=lambda j: j["error"] == "NotBijective")
expect("malformed json",
       ["houghton", "gamma", "--element", d + "/malformed.json"], code=2)
expect("unknown group", ["group", "info", "--group", "X9"], code=2)
expect("unknown option", ["group", "info", "--bogus"], code=2)
expect("bad degrees", ["bredon", "cohomology", "--degrees", "4..1"], code=2)
expect("subgroup outside family",
       ["orbit", "homs", "--group", "S3", "--family", "triv", "--source", "(01)", "--target", "1"],
       code=1, pred=lambda j: j["error"] == "IsotropyNotInFamily")

rc, table = run("bredon", "cohomology", "--group", "C2", "--family", "triv", "--format", "table")
check("table format", rc == 0 and 'cohomology: ["Z","0","Z/2","0","Z/2"]' in table, table)

for f in failures:
    print("FAIL", f)
print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
