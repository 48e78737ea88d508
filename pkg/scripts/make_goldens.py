#!/usr/bin/env python3
"""Regenerate the golden CLI outputs in tests/golden/ from tests/jobspecs.py.

Run from the repository root after any deliberate output-format change, and
review the diff before committing.
"""

import os
import pathlib
import sys
import tempfile

from click.testing import CliRunner

ROOT = pathlib.Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

from jobspecs import JOBSPECS  # noqa: E402

from silc.cli import main  # noqa: E402


def run():
    golden = ROOT / "tests" / "golden"
    golden.mkdir(exist_ok=True)
    runner = CliRunner()
    with tempfile.TemporaryDirectory() as tmp:
        os.environ["SILC_CACHE"] = os.path.join(tmp, "cache")
        for name, argv in JOBSPECS:
            result = runner.invoke(main, argv + ["--no-cache"],
                                   catch_exceptions=False)
            if result.exit_code != 0:
                raise SystemExit(f"{name}: exit {result.exit_code}\n"
                                 f"{result.output}")
            (golden / f"{name}.txt").write_bytes(
                result.stdout.encode("utf-8")
            )
            print(f"wrote {name}.txt ({len(result.stdout)} bytes)")


if __name__ == "__main__":
    run()
