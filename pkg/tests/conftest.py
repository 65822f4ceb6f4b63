import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from fuscat import fusion_ring, groups, wedderburn  # noqa: E402


def s3_mult_table():
    """S3 as permutation tuples with composition, built from scratch.

    Independent of the groups module: used as the oracle for class-algebra
    and fusion-matrix tests.
    """
    import itertools

    perms = sorted(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[i]] for i in range(3))] for q in perms] for p in perms]
    return perms, table


@pytest.fixture(scope="session")
def s3_ring():
    """Hand-built representation ring of S3: simples (1, sgn, rho)."""
    N = np.zeros((3, 3, 3), dtype=int)
    N[0] = np.eye(3, dtype=int)
    N[:, 0] = np.eye(3, dtype=int)
    N[1, 1] = [1, 0, 0]  # sgn (x) sgn = 1
    N[1, 2] = [0, 0, 1]  # sgn (x) rho = rho
    N[2, 1] = [0, 0, 1]
    N[2, 2] = [1, 1, 1]  # rho (x) rho = 1 + sgn + rho
    return fusion_ring.build_ring(["1", "sgn", "rho"], N, [0, 1, 2])


@pytest.fixture(scope="session")
def rep_c2_ring():
    return groups.rep_fusion_ring(groups.parse_group("cyclic:2"))


@pytest.fixture(scope="session")
def s3_group():
    return groups.parse_group("symmetric:3")


@pytest.fixture(scope="session")
def vec_s3_ring(s3_group):
    return groups.vec_fusion_ring(s3_group)


@pytest.fixture(scope="session")
def trivial_ring():
    return fusion_ring.build_ring(["1"], np.ones((1, 1, 1), dtype=int), [0])


@pytest.fixture(scope="session")
def s3_blocks(s3_ring):
    return wedderburn.compute_blocks(s3_ring)


@pytest.fixture(scope="session")
def vec_s3_blocks(vec_s3_ring):
    return wedderburn.compute_blocks(vec_s3_ring)
