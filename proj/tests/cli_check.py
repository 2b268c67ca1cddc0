"""End-to-end checks of the majorize command line: outputs, exit codes and the
suite report schema.

usage: cli_check.py MAJORIZE SAMPLES_DIR SCHEMA
"""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

BIN, SAMPLES, SCHEMA = sys.argv[1:4]
failures = []


def sample(name):
    return os.path.join(SAMPLES, name)


def run(*args):
    proc = subprocess.run([BIN, *args], capture_output=True, text=True, timeout=600)
    return proc.returncode, proc.stdout, proc.stderr


def expect(label, args, code, check=None):
    rc, out, err = run(*args)
    ok = rc == code
    if ok and check is not None:
        try:
            ok = bool(check(out))
        except Exception as exc:  # malformed output counts as a failure
            ok = False
            err += f"\ncheck raised {exc!r}"
    print(f"{'ok  ' if ok else 'FAIL'} {label} (exit {rc}, want {code})")
    if not ok:
        failures.append(label)
        print(out[:2000])
        print(err[:2000])


def close(a, b, tol=1e-12):
    return abs(a - b) <= tol


# Sequence transforms.
expect("s transform of (1, 1/4)", ["--json", "seq", "--op", "s", "--in", sample("skewed.json")], 0,
       lambda o: close(json.loads(o)["result"][1], 0.25 * (1 + 0.6931471805599453)))
expect("t transform of a flat text file", ["--json", "seq", "--op", "t", "--in", sample("flat.txt")], 0,
       lambda o: json.loads(o)["result"] == [0.5, 0.5])
expect("dilate by 3", ["--json", "seq", "--op", "dilate", "--n", "3", "--in", sample("skewed.json")], 0,
       lambda o: json.loads(o)["result"] == [1, 1, 1, 0.25, 0.25, 0.25])
expect("direct sum", ["--json", "seq", "--op", "direct-sum", "--in", sample("skewed.json"), "--with",
                      sample("flat.txt")], 0, lambda o: json.loads(o)["result"] == [1, 0.5, 0.5, 0.25])
expect("half dilation", ["--json", "seq", "--op", "half-dilate", "--in", sample("decay.json")], 0,
       lambda o: json.loads(o)["result"] == [0.75, 0.1875])

# Order deciders: exit status mirrors the verdict.
expect("uniform failure at prefix 2", ["--json", "order", "--kind", "uniform", "--b", sample("uniform_b.json"),
                                       "--a", sample("uniform_a.json")], 1,
       lambda o: json.loads(o)["failure_index"] == 2)
expect("log submajorization holds", ["order", "--kind", "log", "--b", sample("flat.txt"), "--a",
                                     sample("skewed.json")], 0, lambda o: o.startswith("holds"))
expect("hl reflexive", ["order", "--kind", "hl", "--b", sample("decay.json"), "--a", sample("decay.json")], 0)

# Matrices.
expect("prescribed spectrum hand case", ["--json", "matrix", "--op", "construct", "--y", sample("horn_y.json"),
                                         "--x", sample("horn_x.json")], 0,
       lambda o: all(close(a, b) for a, b in zip(json.loads(o)["singular_values"], [1, 0.25])))
expect("quasi-nilpotent sum bound", ["--json", "matrix", "--op", "qn400", "--in", sample("nilpotent3.json")], 0,
       lambda o: json.loads(o)["real_part"]["holds"])
expect("weyl on a 2x2 matrix", ["matrix", "--op", "weyl", "--in", sample("small2.json")], 0)
expect("ringrose on a 2x2 matrix", ["--json", "matrix", "--op", "ringrose", "--in", sample("small2.json")], 0)

# Ideals.
expect("exact member with witness 1", ["--json", "ideal", "--op", "member", "--generator", sample("tower3.json"),
                                       "--in", sample("tower3_dilated.json")], 0,
       lambda o: json.loads(o)["verdict"]["witness"] == 1)
expect("geometric generator is stable", ["--json", "ideal", "--op", "geom-stable", "--generator",
                                         sample("geometric64.json")], 0, lambda o: json.loads(o)["verdict"]["witness"] == 1)
expect("tower is not stable", ["ideal", "--op", "geom-stable", "--generator", sample("tower3.json"), "--l-max",
                               "2"], 1)

# Exact tower checks.
expect("t_main (1,4)", ["counterexample", "--check", "tmain", "--l", "1", "--n", "4"], 0)
expect("t_aux n=1", ["counterexample", "--check", "taux", "--n", "1", "--count", "20"], 0)
expect("a0 bound", ["counterexample", "--check", "a0", "--l", "2", "--n", "5"], 0)
expect("horror on 2 sigma_2 tower", ["counterexample", "--check", "horror", "--b", sample("tower3_dilated.json"),
                                     "--l", "1", "--n", "3"], 0)
expect("geometric stability refuted", ["--json", "counterexample", "--check", "geomstable", "--n", "5"], 0)

# Bad input and usage.
expect("t_main below n >= 2^(l+1)", ["counterexample", "--check", "tmain", "--l", "1", "--n", "2"], 64)
expect("increasing sequence rejected", ["seq", "--op", "s", "--in", sample("increasing.json")], 64)
expect("missing file", ["seq", "--op", "s", "--in", sample("does_not_exist.json")], 64)
expect("unknown operation", ["seq", "--op", "nope", "--in", sample("decay.json")], 64)
expect("non quasi-nilpotent input", ["matrix", "--op", "prefinal", "--in", sample("small2.json")], 64)
expect("l-max out of range", ["--l-max", "9", "suite"], 64)
expect("unknown suite check", ["suite", "--only", "nope"], 64)

# Suite report: schema, determinism, exit code.
with tempfile.TemporaryDirectory() as tmp:
    first, second = os.path.join(tmp, "a.json"), os.path.join(tmp, "b.json")
    expect("suite run", ["--seed", "7", "--json", "--out", first, "suite", "--trials", "25"], 0)
    expect("suite rerun", ["--seed", "7", "--json", "--out", second, "suite", "--trials", "25"], 0)
    try:
        with open(first, "rb") as fa, open(second, "rb") as fb:
            a, b = fa.read(), fb.read()
        same = a == b
        report = json.loads(a)
        with open(SCHEMA) as fs:
            jsonschema.validate(report, json.load(fs))
        schema_ok = True
    except Exception as exc:
        print(exc)
        same, schema_ok = False, False
    for label, ok in [("suite output is byte-identical", same), ("suite report matches the schema", schema_ok)]:
        print(f"{'ok  ' if ok else 'FAIL'} {label}")
        if not ok:
            failures.append(label)

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
