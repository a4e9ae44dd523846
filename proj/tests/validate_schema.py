"""Runs the CLI in JSON mode and validates every report against the schema."""
import json
import subprocess
import sys

import jsonschema

CLI, SCHEMA = sys.argv[1], sys.argv[2]

COMMANDS = [
    ["decompose", "z^6"],
    ["decompose", "z^4 + z"],
    ["compose", "(z^2-4)/(z-1)", "(z^2+2)/(z+1)"],
    ["char", "--kind", "length", "z^8"],
    ["char", "--kind", "degree-four", "z^4 + z"],
    ["char", "--kind", "affine-leading", "3*z + 1"],
    ["verify", "--fixture", "bergweiler"],
    ["verify", "--fixture", "s4"],
    ["verify", "--fixture", "chebyshev(5)"],
    ["verify", "--fixture", "moebius-chain-1"],
    ["extend", "--kind", "ideal", "--char", "length", "--witness", "z^4", "--witness", "z^6", "z^3 + z"],
    ["extend", "--kind", "square", "--char", "deg", "z^2"],
    ["extend", "--kind", "obstruction", "--fixture", "length-bergweiler"],
    ["extend", "--kind", "obstruction", "--fixture", "phi2-s4"],
    ["graph", "(z^2+z)^2"],
    ["graph", "(z^2+z)^2", "--budget", "1"],
    ["feasible", "2", "3"],
]

with open(SCHEMA) as f:
    schema = json.load(f)
validator = jsonschema.Draft202012Validator(schema)

failures = 0
for args in COMMANDS:
    first = subprocess.run([CLI, *args, "--json"], capture_output=True, text=True)
    second = subprocess.run([CLI, *args, "--json"], capture_output=True, text=True)
    label = " ".join(args)
    problems = []
    if first.returncode not in (0, 2):
        problems.append(f"exit {first.returncode}: {first.stderr.strip()}")
    elif first.stdout != second.stdout:
        problems.append("output differs between runs")
    else:
        problems += [e.message for e in validator.iter_errors(json.loads(first.stdout))]
    print(("FAIL " if problems else "ok   ") + label)
    for p in problems:
        print("     " + p)
    failures += bool(problems)

sys.exit(1 if failures else 0)
