#!/usr/bin/env python3
"""End-to-end CLI checks: schema conformance, exit codes, determinism,
decimal/enclosure round-trips, and a golden certify report."""

import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import jsonschema
from referencing import Registry, Resource

CLI = Path(sys.argv[1])
ROOT = Path(sys.argv[2])
FIXTURES = ROOT / "tests" / "fixtures"
SCHEMAS = ROOT / "schema" / "v1"

failures = []


def check(name, condition, detail=""):
    if condition:
        print(f"  ok: {name}")
    else:
        failures.append(name)
        print(f"  FAIL: {name} {detail}")


def run(*args, stdin_text=None):
    return subprocess.run(
        [str(CLI), *args],
        input=stdin_text,
        capture_output=True,
        text=True,
        timeout=120,
    )


def load_registry():
    resources = []
    schemas = {}
    for name in ("lattice", "isometry", "report"):
        doc = json.loads((SCHEMAS / f"{name}.schema.json").read_text())
        schemas[name] = doc
        resources.append((doc["$id"], Resource.from_contents(doc)))
    return schemas, Registry().with_resources(resources)


SCHEMA_DOCS, REGISTRY = load_registry()


def validate(doc, schema_name):
    validator = jsonschema.Draft202012Validator(SCHEMA_DOCS[schema_name], registry=REGISTRY)
    errors = sorted(validator.iter_errors(doc), key=lambda e: e.json_path)
    return [f"{e.json_path}: {e.message}" for e in errors]


def parse_fraction(s):
    if "/" in s:
        num, den = s.split("/")
        return Fraction(int(num), int(den))
    return Fraction(s)


def decimal_in_enclosure(value):
    dec = Fraction(value["decimal"])
    lo = parse_fraction(value["enclosure"]["lo"])
    hi = parse_fraction(value["enclosure"]["hi"])
    return lo <= dec <= hi


def main():
    print("== fixtures validate against the isometry schema ==")
    for fixture in sorted(FIXTURES.glob("*.json")):
        doc = json.loads(fixture.read_text())
        errs = validate(doc, "isometry")
        check(f"fixture {fixture.name}", not errs, "; ".join(errs[:2]))

    print("== classify: kinds, schema, exit codes ==")
    expected_kinds = {
        "pell.json": "loxodromic",
        "parabolic.json": "parabolic",
        "identity.json": "elliptic",
        "swap.json": "elliptic",
    }
    for name, kind in expected_kinds.items():
        r = run("classify", str(FIXTURES / name))
        check(f"classify {name} exits 0", r.returncode == 0, r.stderr)
        report = json.loads(r.stdout)
        errs = validate(report, "report")
        check(f"classify {name} report validates", not errs, "; ".join(errs[:3]))
        check(f"classify {name} kind", report["classification"]["kind"] == kind)

    r = run("classify", str(FIXTURES / "pell.json"))
    pell = json.loads(r.stdout)
    lam = pell["classification"]["lambda1"]
    check(
        "pell lambda1 decimal",
        lam["decimal"].startswith("5.82842712474619009760337"),
        lam["decimal"],
    )
    check("pell lambda1 exact", lam["exact"] == {"a": 3, "b": 2, "d": 2, "den": 1})
    check("pell lambda1 decimal in enclosure", decimal_in_enclosure(lam))

    r = run("classify", str(FIXTURES / "identity.json"))
    check("identity order 1", json.loads(r.stdout)["classification"]["finite_order"] == 1)
    r = run("classify", str(FIXTURES / "swap.json"))
    check("swap order 2", json.loads(r.stdout)["classification"]["finite_order"] == 2)

    print("== error paths use exit codes 2 and 3 ==")
    r = run("classify", str(FIXTURES / "non_isometry.json"))
    check("non-isometry exits 2", r.returncode == 2, f"code {r.returncode}")
    check("non-isometry names the entry", "preserve the form" in r.stderr, r.stderr)

    r = run("classify", "-", stdin_text="{not json")
    check("malformed JSON exits 3", r.returncode == 3)
    r = run("classify", str(FIXTURES / "does_not_exist.json"))
    check("missing file exits 3", r.returncode == 3)
    r = run(
        "classify",
        "-",
        stdin_text='{"lattice": {"gram": [[0, 0], [0, 0]]}, "matrix": [[1, 0], [0, 1]]}',
    )
    check("degenerate form exits 2", r.returncode == 2, f"code {r.returncode}: {r.stderr}")
    r = run(
        "classify",
        "-",
        stdin_text='{"lattice": {"gram": [[1, 0], [0, -1]]}, "matrix": [[1, 0]]}',
    )
    check("non-square matrix exits 3", r.returncode == 3, f"code {r.returncode}")
    r = run("degrees", str(FIXTURES / "pell.json"), "--n", "0")
    check("invalid --n exits 3", r.returncode == 3, f"code {r.returncode}")
    r = run("catalog", "--name", "nope")
    check("unknown catalog exits 3", r.returncode == 3)
    r = run("classify", "-", stdin_text='{"lattice": {"catalog": "K3n"}, "matrix": [[1]]}')
    check("catalog ref missing n exits 3", r.returncode == 3)

    print("== degrees ==")
    r = run("degrees", str(FIXTURES / "pell.json"), "--n", "2")
    check("degrees exits 0", r.returncode == 0, r.stderr)
    report = json.loads(r.stdout)
    errs = validate(report, "report")
    check("degrees report validates", not errs, "; ".join(errs[:3]))
    values = report["degree_sequence"]["values"]
    check("degrees length", len(values) == 5)
    check("degrees middle exact", values[2]["exact"] == {"a": 17, "b": 12, "d": 2, "den": 1})
    check("degrees palindrome", values[1] == values[3] and values[0] == values[4])
    check("degrees concave", report["log_concavity"]["status"] == "concave")
    check("degrees decimals in enclosures", all(decimal_in_enclosure(v) for v in values))

    r = run("degrees", str(FIXTURES / "swap.json"), "--n", "3")
    report = json.loads(r.stdout)
    check(
        "elliptic degrees all ones",
        all(v["exact"] == "1" for v in report["degree_sequence"]["values"]),
    )
    check(
        "elliptic degrees warn about the reasoning",
        any("dynamical degrees are 1" in w for w in report["warnings"]),
    )

    print("== certify ==")
    r = run("certify", str(FIXTURES / "pell.json"), "--n", "2", "--b2", "23")
    check("certify exits 0", r.returncode == 0, r.stderr)
    report = json.loads(r.stdout)
    errs = validate(report, "report")
    check("certify report validates", not errs, "; ".join(errs[:3]))
    cert = report["certificate"]
    check("certify primitive", cert["primitive"] == "primitive")
    check("certify hypersurfaces", cert["max_periodic_hypersurfaces"] == 25)
    check("certify dense orbit", cert["dense_generic_orbit"] is True)
    check("certify bound", report["base_dim_analysis"]["bound"] == 4)
    check(
        "certify infeasible below 2n",
        [f["status"] for f in report["feasibility"]] == ["fails", "fails", "fails"],
    )

    r = run("certify", str(FIXTURES / "identity.json"), "--n", "3")
    report = json.loads(r.stdout)
    errs = validate(report, "report")
    check("identity certify validates", not errs, "; ".join(errs[:3]))
    check("identity certify unknown", report["certificate"]["primitive"] == "unknown")
    check("identity b2 defaults to rank", report["b2"] == 2)
    check(
        "identity certify all feasible",
        all(f["status"] == "holds" for f in report["feasibility"]),
    )
    check(
        "identity witnesses are all ones",
        all(
            all(v["exact"] == "1" for v in f["witness"])
            for f in report["feasibility"]
        ),
    )

    r = run("certify", str(FIXTURES / "parabolic.json"), "--n", "2")
    report = json.loads(r.stdout)
    check(
        "parabolic certificate cites Hu-Keum-Zhang",
        "Hu-Keum-Zhang" in report["certificate"]["justification"]
        or any("Hu-Keum-Zhang" in n for n in report["certificate"]["notes"]),
    )

    print("== determinism and goldens ==")
    first = run("certify", str(FIXTURES / "pell.json"), "--n", "2", "--b2", "23").stdout
    second = run("certify", str(FIXTURES / "pell.json"), "--n", "2", "--b2", "23").stdout
    check("certify byte-deterministic", first == second)
    golden_path = ROOT / "tests" / "golden" / "pell_certify.json"
    check(
        "certify matches golden",
        first == golden_path.read_text(),
        f"regenerate with: loxo certify tests/fixtures/pell.json --n 2 --b2 23 > {golden_path}",
    )

    timing = json.loads(
        run("certify", str(FIXTURES / "pell.json"), "--n", "2", "--b2", "23", "--timing").stdout
    )
    check("timing present when asked", isinstance(timing["timing"], dict))

    print("== catalog ==")
    r = run("catalog", "--list")
    entries = json.loads(r.stdout)["entries"]
    check("catalog lists 5 entries", len(entries) == 5)
    r = run("catalog", "--name", "K3")
    k3 = json.loads(r.stdout)
    errs = validate(k3, "lattice")
    check("catalog K3 validates as lattice", not errs, "; ".join(errs[:2]))
    check("catalog K3 rank 22", k3["rank"] == 22)
    check("catalog K3 signature", k3["signature"] == {"positives": 3, "negatives": 19})
    r = run("catalog", "--name", "Kummer", "--n", "3")
    check("catalog Kummer(3) rank 7", json.loads(r.stdout)["rank"] == 7)

    print("== text mode ==")
    r = run("classify", str(FIXTURES / "pell.json"), "--text")
    check("text mode exits 0", r.returncode == 0)
    check("text mode leads with kind", r.stdout.startswith("kind: loxodromic"))

    if failures:
        print(f"\n{len(failures)} check(s) failed: {failures}")
        return 1
    print("\nall CLI checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
