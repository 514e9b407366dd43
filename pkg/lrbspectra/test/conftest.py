import json

import pytest

from lrbspectra.services.family_service import braid_faces, free_lrb
from lrbspectra.services.lattice_service import build_support_lattice
from lrbspectra.services.semigroup_service import MultiplicationTable
from lrbspectra.test.helpers import HALF, weighted
from lrbspectra.utils.table_io import dump_table


@pytest.fixture(scope="session")
def free2():
    return free_lrb(2)


@pytest.fixture(scope="session")
def free3():
    return free_lrb(3)


@pytest.fixture(scope="session")
def braid3():
    return braid_faces(3)


@pytest.fixture(scope="session")
def lattice2(free2):
    return build_support_lattice(free2)


@pytest.fixture(scope="session")
def lattice3(free3):
    return build_support_lattice(free3)


@pytest.fixture
def uniform2(free2):
    return weighted(free2, {"1": HALF, "2": HALF})


@pytest.fixture
def write_json(tmp_path):
    """Write a payload (dict or table) under tmp_path; returns the path as str."""

    def write(name, payload):
        path = tmp_path / name
        if isinstance(payload, MultiplicationTable):
            path.write_text(dump_table(payload), encoding="utf-8")
        else:
            path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)

    return write
