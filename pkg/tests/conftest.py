from __future__ import annotations

from importlib import resources

import pytest

from threeweight.matrixio import parse_matrix_file

from catalog import TABLE1, TABLE2


def data_path(name: str):
    return resources.files("threeweight").joinpath(f"data/{name}")


def matrix_files():
    root = data_path("matrices")
    return sorted(root.iterdir(), key=lambda p: p.name)


@pytest.fixture(scope="session")
def fixture_codes():
    """Every shipped generator-matrix fixture with its expected catalog row."""
    expected = {}
    for n, k, w, a, _ in TABLE1:
        expected[(2, n, k)] = (w, a)
    for n, k, w, a, _ in TABLE2:
        expected[(3, n, k, w)] = (w, a)
    out = []
    for path in matrix_files():
        code = parse_matrix_file(path)
        # a (q, n, k) can carry two weight triples; resolve via the actual weights
        ws = code.weight_distribution().nonzero_weights()
        if code.q == 2:
            row = next(
                (w, a) for n, k, w, a, _ in TABLE1 if (n, k, w) == (code.n, code.k, ws)
            )
        else:
            row = next(
                (w, a) for n, k, w, a, _ in TABLE2 if (n, k, w) == (code.n, code.k, ws)
            )
        out.append((path.name, code, row))
    return out
