"""Full reports, as produced by ``subpinch analyze``.

Analyzes a small catalog in memory and prints the theorem table; the same
document can be written to a file and passed to the command line tool.
"""

import json

from subpinch.cli import analyze

doc = {
    "options": {"seed": 0, "budget": 8},
    "entries": [
        {"model": "clifford", "n": 3, "lambda": 1.0},
        {"model": "cylinder", "n": 4, "H0": 1.0},
        {"model": "round_sphere", "n": 4, "r": 1.0},
        {"data": {"n": 5, "ambient": {"kmin": 0.9, "kmax": 1.0}, "points": [{"S": 0.2, "H": 0.1}]}},
    ],
}
result = analyze(doc)
for rep in result["reports"]:
    print(f"\n{rep['metadata']['id']}  lambda(M)={rep['lambda_M']}  mu(M)={rep['mu_M']}")
    for name, t in rep["theorems"].items():
        if t["applicable"]:
            print(f"  {name:14s} margin {t['margin']:+.6f}  {t['status']}")

with open("catalog.json", "w") as fh:
    json.dump(doc, fh, indent=2)
print("\nwrote catalog.json; try: subpinch analyze catalog.json --out report.json")
