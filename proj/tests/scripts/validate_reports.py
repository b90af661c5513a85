#!/usr/bin/env python3
# Runs gwb --json on a few inputs and validates every report against the schema.
import json
import subprocess
import sys

import jsonschema

gwb, schema_path, data = sys.argv[1], sys.argv[2], sys.argv[3]
schema = json.load(open(schema_path))

runs = [
    ["hilbert", f"{data}/d8.json", "--window", "0..8", "--series", "1/(1-t)^2"],
    ["functional-eq", "--series", "1/((1-t)^2*(1+t^2))", "--dim", "2", "--shift", "0"],
    ["localcoh", f"{data}/rational_x.json", "--ideal", "v", "--window", "-6..6", "--method", "both"],
    ["koszul", f"{data}/d8.json", "--elems", "x+y,z", "--window", "0..6"],
    ["resolution", f"{data}/sd16.json", "--hmax", "4"],
    ["hypersurface", f"{data}/poly_xy.json", "--f", "x*y", "--module", f"{data}/hyp_x.json", "--hmax", "4", "--mf"],
    ["squeezed", "--group", f"{data}/a4_group.json", "--steps", "2"],
    ["preset", "list"],
    ["preset", "run", "sd16"],
    ["shift-ledger"],
]

bad = 0
for args in runs:
    p = subprocess.run([gwb, *args, "--json"], capture_output=True, text=True)
    name = " ".join(args[:2])
    if p.returncode not in (0, 1):
        print(f"{name}: exit {p.returncode}: {p.stderr.strip()}")
        bad += 1
        continue
    try:
        report = json.loads(p.stdout)
        jsonschema.validate(report, schema)
        if report["passed"] != (p.returncode == 0):
            raise ValueError("passed flag disagrees with the exit code")
        print(f"{name}: ok")
    except Exception as e:
        print(f"{name}: {e}")
        bad += 1
sys.exit(1 if bad else 0)
