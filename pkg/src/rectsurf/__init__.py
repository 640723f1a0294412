"""Rectangular diagrams of links and surfaces on the torus, with exact
invariants and the tile geometry of the corresponding surfaces in S^3."""

__version__ = "0.1.0"

from .link import DiagramError, LinkDiagram, connected_components  # noqa: E402
from .surface import Rectangle, SurfaceDiagram, classify, validate_surface_diagram  # noqa: E402
from .linking import linking_number, tb_minus, tb_plus, writhe  # noqa: E402

__all__ = ["DiagramError", "LinkDiagram", "Rectangle", "SurfaceDiagram", "classify",
           "connected_components", "linking_number", "tb_minus", "tb_plus",
           "validate_surface_diagram", "writhe", "__version__"]
