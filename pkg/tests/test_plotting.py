from adinkra.constructors import build_complete_even, build_hypercube
from adinkra.plotting import plot_adinkra, plot_bicolor, plot_matrix
from adinkra.representations import to_matrix
from adinkra.structure import bicolor_report

PNG = b"\x89PNG"


def test_figures_are_written(tmp_path, adinkra_341):
    plot_adinkra(adinkra_341, tmp_path / "a.png", title="(3,4,1)")
    plot_bicolor(bicolor_report(build_hypercube(4)), tmp_path / "b.png")
    plot_matrix(to_matrix(adinkra_341), tmp_path / "m.png")
    for name in ("a.png", "b.png", "m.png"):
        assert (tmp_path / name).read_bytes().startswith(PNG)


def test_layouts_without_heights(tmp_path):
    plot_adinkra(build_hypercube(3), tmp_path / "cube.png")
    plot_adinkra(build_complete_even(3), tmp_path / "k6.png")
    assert (tmp_path / "k6.png").stat().st_size > 0
