"""Rewrite the CLI golden files from the current build.

Run after an intentional output change, then review the diff by hand.
"""
import io
import json
from contextlib import redirect_stderr
from pathlib import Path

from omegalab.cli import main

GOLDEN = Path(__file__).resolve().parents[1] / "tests" / "golden"


def run(args):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stderr(err):
        code = main(args, out=out)
    return code, out.getvalue()


if __name__ == "__main__":
    cases = json.loads((GOLDEN / "cases.json").read_text())
    for case in cases:
        code, text = run(case["args"])
        if code != case["exit"]:
            raise SystemExit(f"{case['name']}: exit {code}, manifest says {case['exit']}")
        (GOLDEN / f"{case['name']}.out").write_text(text)
        print(f"{case['name']}: {len(text.splitlines())} lines")
