"""Built-in complexes, generated in code so tests cannot drift from data files."""

from . import complexes as cx

BUILTIN_FACTORIES = {
    "vertex": lambda: cx.simplex(0),
    "edge": lambda: cx.simplex(1),
    "simplex-0": lambda: cx.simplex(0),
    "simplex-1": lambda: cx.simplex(1),
    "simplex-2": lambda: cx.simplex(2),
    "simplex-3": lambda: cx.simplex(3),
    "simplex-4": lambda: cx.simplex(4),
    "boundary-simplex-1": lambda: cx.boundary_simplex(1),
    "boundary-simplex-2": lambda: cx.boundary_simplex(2),
    "boundary-simplex-3": lambda: cx.boundary_simplex(3),
    "boundary-simplex-4": lambda: cx.boundary_simplex(4),
    "solid-square": cx.solid_square,
    "square-boundary": cx.square_boundary,
    "cube-boundary": cx.cube_boundary,
    "cross-polytope-boundary-3": cx.cross_polytope_boundary,
    "triangular-prism-boundary": cx.triangular_prism_boundary,
    "triangle-wedge": cx.triangle_wedge,
    "triangle-plus-edge": cx.triangle_plus_edge,
    "bowtie-graph": cx.bowtie_graph,
}

# deduplicated corpus used by the property and acceptance sweeps
CORPUS = (
    "vertex",
    "edge",
    "simplex-2",
    "simplex-3",
    "simplex-4",
    "boundary-simplex-1",
    "boundary-simplex-2",
    "boundary-simplex-3",
    "boundary-simplex-4",
    "solid-square",
    "square-boundary",
    "cube-boundary",
    "cross-polytope-boundary-3",
    "triangular-prism-boundary",
    "triangle-wedge",
    "triangle-plus-edge",
    "bowtie-graph",
)


def builtin_names():
    return sorted(BUILTIN_FACTORIES)


def get_builtin(name):
    if name not in BUILTIN_FACTORIES:
        raise KeyError(f"unknown builtin {name!r}; available: {', '.join(builtin_names())}")
    return BUILTIN_FACTORIES[name]()
