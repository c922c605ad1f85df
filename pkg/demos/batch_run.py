"""Batch mode: CSV in, one JSON line per row out, order kept under --jobs.

Writes a small input file to a temporary directory, runs the batch twice with
different worker counts and confirms the outputs are byte-identical.
"""

import json
import tempfile
from pathlib import Path

from ptord.cli import main

rows = [
    "label,a1,a2,a3,a4,a6,ell,p",
    "E0 at 2,0,0,0,-432,-864,2,11",
    "E0 at 7,0,0,0,-432,-864,7,3",
    "j=0 at 5,0,0,0,0,25,5,7",
    "x^3-25x,0,0,0,-25,0,5,3",
    "ell = p,0,0,0,-432,-864,7,7",
    "11a1 at 2,0,-1,1,-10,-20,2,5",
]

with tempfile.TemporaryDirectory() as tmp:
    src = Path(tmp) / "queries.csv"
    src.write_text("\n".join(rows) + "\n", encoding="utf-8")
    outputs = []
    for jobs in ("1", "3"):
        dst = Path(tmp) / f"out{jobs}.jsonl"
        main(["batch", "--input", str(src), "--output", str(dst), "--jobs", jobs])
        outputs.append(dst.read_bytes())
    print("identical across worker counts:", outputs[0] == outputs[1])
    for line in outputs[0].decode().splitlines():
        doc = json.loads(line)
        if "error" in doc:
            print(f"{doc['label']:<10} error: {doc['error']['message']}")
        else:
            print(f"{doc['label']:<10} d = {doc['d']:<4} {doc['branch']:<8} {doc['reduction']['kind']}")
