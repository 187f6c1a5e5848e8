"""Named exchange matrices used by the command line and the test-suite.

Each finite-type preset is a canonical acyclic orientation of the Dynkin
diagram, with ``b[i][j] > 0`` for ``i`` before ``j``.  Other acyclic
orientations come from :func:`clusterframe.coxeter.all_coxeter_elements`.
"""

FINITE = {
    "A2": ((0, 1), (-1, 0)),
    "B2": ((0, 2), (-1, 0)),
    "G2": ((0, 3), (-1, 0)),
    "A3": ((0, 1, 0), (-1, 0, 1), (0, -1, 0)),
    "B3": ((0, 1, 0), (-1, 0, 2), (0, -1, 0)),
}

# number of positive roots, hence the length of the longest element
POSITIVE_ROOTS = {"A2": 3, "B2": 4, "G2": 6, "A3": 6, "B3": 9}

# number of seeds in the exchange graph
CLUSTERS = {"A2": 5, "B2": 6, "G2": 8, "A3": 14, "B3": 20}

INFINITE = {
    "affine2": ((0, 2), (-2, 0)),
    "affineA2": ((0, 1, 1), (-1, 0, 1), (-1, -1, 0)),
}

PRESETS = {**FINITE, **INFINITE}


def preset(name):
    try:
        return PRESETS[name]
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; known: {', '.join(sorted(PRESETS))}") from None
