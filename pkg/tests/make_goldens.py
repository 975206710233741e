"""Rewrite tests/golden/ from the current CLI.  Inspect the diff before committing."""
import io
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from cli_cases import CASES  # noqa: E402

from virfusion.cli import run  # noqa: E402

GOLDEN = pathlib.Path(__file__).parent / "golden"


def render(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, f"{out.getvalue()}--- stderr ---\n{err.getvalue()}--- exit {code} ---\n"


if __name__ == "__main__":
    GOLDEN.mkdir(exist_ok=True)
    for stem, argv, _ in CASES:
        code, text = render(argv)
        (GOLDEN / f"{stem}.txt").write_text(text)
        print(f"{stem}: exit {code}")
