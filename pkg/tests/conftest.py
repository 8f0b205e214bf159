from pathlib import Path

import pytest

from weakschur import base_partition

GOLDEN_DIR = Path(__file__).parent / "golden"

BASE_TEXT = (
    "wsp 1\n"
    "s=3 n=21\n"
    "1: 1 2 4 8 18\n"
    "2: 3 5 6 7 19 20 21\n"
    "3: 9 10 11 12 13 14 15 16 17\n"
)


@pytest.fixture
def base():
    return base_partition()


@pytest.fixture
def golden_dir():
    return GOLDEN_DIR
