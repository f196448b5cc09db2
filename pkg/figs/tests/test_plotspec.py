"""Plot descriptions: field validation and TOML loading."""

import pytest

from figs import PlotSpec, PlotSpecError, load_plotspec


def _write(tmp_path, text):
    path = tmp_path / "plot.toml"
    path.write_text(text)
    return path


FULL = """\
csv = "table.csv"
kind = "lines"
x = "n_bar"
y = "N"
value = "log_neg_a_b2"
out = "fig.png"
xlabel = "thermal occupation"
title = "thermal robustness"
logx = true
"""

MINIMAL = """\
csv = "table.csv"
kind = "heatmap"
x = "delta"
y = "Omega"
value = "log_neg_a_b2"
out = "fig.png"
"""


def test_load_full_spec(tmp_path):
    spec = load_plotspec(_write(tmp_path, FULL))
    assert spec == PlotSpec(
        csv="table.csv",
        kind="lines",
        x="n_bar",
        y="N",
        value="log_neg_a_b2",
        out="fig.png",
        xlabel="thermal occupation",
        title="thermal robustness",
        logx=True,
    )
    assert spec.ylabel is None


def test_optional_fields_default(tmp_path):
    spec = load_plotspec(_write(tmp_path, MINIMAL))
    assert spec.xlabel is None
    assert spec.ylabel is None
    assert spec.title is None
    assert spec.logx is False


def test_unknown_key_rejected(tmp_path):
    path = _write(tmp_path, MINIMAL + 'color = "red"\n')
    with pytest.raises(PlotSpecError, match="color"):
        load_plotspec(path)


def test_missing_required_key_named(tmp_path):
    text = "\n".join(l for l in MINIMAL.splitlines() if not l.startswith("out"))
    with pytest.raises(PlotSpecError, match="out"):
        load_plotspec(_write(tmp_path, text))


def test_bad_kind(tmp_path):
    with pytest.raises(PlotSpecError, match="heatmap, lines"):
        load_plotspec(_write(tmp_path, MINIMAL.replace("heatmap", "scatter")))


def test_empty_required_field_rejected():
    with pytest.raises(PlotSpecError, match="csv"):
        PlotSpec(csv="", kind="lines", x="a", y="b", value="v", out="o.png")


def test_malformed_toml(tmp_path):
    with pytest.raises(PlotSpecError):
        load_plotspec(_write(tmp_path, "kind = [unclosed\n"))


def test_missing_file(tmp_path):
    with pytest.raises(PlotSpecError, match="cannot read"):
        load_plotspec(tmp_path / "absent.toml")
