"""Rewrite the expected JSON reports and exit codes for the golden scripts.

Run by hand after an intentional change in output; review the diff.
"""
import json
from pathlib import Path

from pgeo.script.evaluator import run_file

HERE = Path(__file__).parent


def main():
    codes = {}
    for script in sorted(HERE.glob("*.pg")):
        report = run_file(script)
        script.with_suffix(".json").write_text(report.to_json(), encoding="utf-8")
        codes[script.name] = report.exit_code
    (HERE / "exit_codes.json").write_text(json.dumps(codes, indent=2) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
