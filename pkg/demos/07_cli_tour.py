"""A tour of the command-line interface.

Every subcommand prints one JSON document on stdout, so the CLI composes
with itself and with standard tooling through pipes.
"""

import json
import subprocess
import sys

BASE = [sys.executable, "-m", "catrank"]


def run(*argv, stdin=None):
    r = subprocess.run(BASE + list(argv), capture_output=True, text=True, input=stdin)
    assert r.returncode == 0, r.stderr
    return r.stdout


def show(title, out, keys=None):
    doc = json.loads(out)
    print(f"$ catrank {title}")
    if keys:
        doc = {k: doc[k] for k in keys if k in doc}
    print(json.dumps(doc, indent=2)[:600])
    print()
    return doc


# the bundled example registry
show("examples list", run("examples", "list"))

# emit a category document and validate it through stdin
doc = run("examples", "emit", "section8")
show("validate - (stdin)", run("validate", "-", stdin=doc))

# the invariant report: predicates, every applicable invariant, and a
# warning naming each omitted one with its reason
report = show("euler - (retract pair)", run("euler", "-", stdin=doc),
              keys=["predicates", "invariants", "warnings"])
assert report["invariants"]["chi_L"] == "2/3"

# group-level tables straight from a group spec
show("group marks symmetric:3", run("group", "marks", "symmetric:3"))
show("group burnside cyclic:2 --xi 4,1", run("group", "burnside", "cyclic:2", "--xi", "4,1"))

# the orbit category subcommand emits a plain category document, so it
# pipes into euler like any other input
orbit = run("group", "orbitcat", "symmetric:3")
report = show("group orbitcat symmetric:3 | catrank euler -",
              run("euler", "-", stdin=orbit), keys=["invariants"])
print("chi2 of Or(S3) =", report["invariants"]["chi2"])
