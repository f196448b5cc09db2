"""Shared fixtures.

The acceptance tests feed on real sweep tables, regenerated once per session
through the solver's own CLI so the renderer is only ever exercised against
the documented CSV schema, never against hand-mocked approximations of it.
"""

import pytest

_CSV_HEADER = "delta,Omega,stable,log_neg\n"


@pytest.fixture(scope="session")
def preset_csv(tmp_path_factory):
    """Callable: preset name -> path of the CSV written by the solver CLI."""
    from molomech.cli import main as molomech_main

    root = tmp_path_factory.mktemp("sweeps")
    cache = {}

    def get(name):
        if name not in cache:
            out = root / f"{name}.csv"
            rc = molomech_main(["--preset", name, "--out", str(out)])
            assert rc == 0, f"solver CLI failed for preset {name}"
            cache[name] = out
        return cache[name]

    return get


def write_csv(path, rows, header=_CSV_HEADER, comments=True):
    """Write a small synthetic table in the sweep-CSV shape."""
    lines = []
    if comments:
        lines.append("# synthetic table\n")
        lines.append("# timestamp: none\n")
    lines.append(header)
    lines.extend(",".join(str(cell) for cell in row) + "\n" for row in rows)
    path.write_text("".join(lines))
    return path


def grid_rows():
    """A complete 3 x 2 grid with a known interior maximum at (0.4, 2.0)."""
    return [
        (0.2, 1.0, "true", 0.10),
        (0.4, 1.0, "true", 0.30),
        (0.6, 1.0, "true", 0.20),
        (0.2, 2.0, "true", 0.15),
        (0.4, 2.0, "true", 0.50),
        (0.6, 2.0, "true", 0.25),
    ]
