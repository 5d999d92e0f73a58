"""
Shared fixtures and reference data for the evenup-words test suite.

The count tables below are the published values for k = 1..6 and
n = 0..10, keyed by word class name, then k.
"""

import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("ci", max_examples=200, deadline=None)
settings.register_profile(
    "dev", max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "dev"))


WORD_TABLES = {
    "even-up": {
        1: [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
        2: [1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2],
        3: [1, 3, 7, 17, 41, 99, 239, 577, 1393, 3363, 8119],
        4: [1, 4, 10, 24, 58, 140, 338, 816, 1970, 4756, 11482],
        5: [1, 5, 19, 73, 281, 1081, 4159, 16001, 61561, 236845, 911219],
        6: [1, 6, 24, 92, 354, 1362, 5240, 20160, 77562, 298406, 1148064],
    },
    "odd-up": {
        1: [1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        2: [1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144],
        3: [1, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233],
        4: [1, 4, 12, 37, 114, 351, 1081, 3329, 10252, 31572, 97229],
        5: [1, 5, 16, 49, 151, 465, 1432, 4410, 13581, 41824, 128801],
        6: [1, 6, 27, 122, 553, 2505, 11348, 51408, 232885, 1055000, 4779290],
    },
    "cyclic-even-up": {
        1: [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
        2: [1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1],
        3: [1, 3, 6, 14, 34, 82, 198, 478, 1154, 2786, 6726],
        4: [1, 4, 6, 14, 34, 82, 198, 478, 1154, 2786, 6726],
        5: [1, 5, 15, 57, 219, 843, 3243, 12477, 48003, 184683, 710535],
        6: [1, 6, 15, 57, 219, 843, 3243, 12477, 48003, 184683, 710535],
    },
    "cyclic-odd-up": {
        1: [1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        2: [1, 2, 3, 4, 7, 11, 18, 29, 47, 76, 123],
        3: [1, 3, 3, 4, 7, 11, 18, 29, 47, 76, 123],
        4: [1, 4, 10, 29, 90, 277, 853, 2627, 8090, 24914, 76725],
        5: [1, 5, 10, 29, 90, 277, 853, 2627, 8090, 24914, 76725],
        6: [1, 6, 21, 93, 421, 1908, 8643, 39154, 177373, 803523, 3640066],
    },
    "weakly-even-up": {
        1: [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
        2: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11],
        3: [1, 3, 8, 21, 55, 144, 377, 987, 2584, 6765, 17711],
        4: [1, 4, 12, 33, 88, 232, 609, 1596, 4180, 10945, 28656],
        5: [1, 5, 21, 86, 351, 1432, 5842, 23833, 97229, 396655, 1618192],
        6: [1, 6, 27, 113, 464, 1896, 7738, 31571, 128800, 525455, 2143647],
    },
    "weakly-odd-up": {
        1: [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
        2: [1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024],
        3: [1, 3, 7, 15, 31, 63, 127, 255, 511, 1023, 2047],
        4: [1, 4, 14, 48, 164, 560, 1912, 6528, 22288, 76096, 259808],
        5: [1, 5, 19, 67, 231, 791, 2703, 9231, 31519, 107615, 367423],
        6: [1, 6, 30, 146, 708, 3432, 16636, 80640, 390888, 1894760, 9184512],
    },
    "cyclic-weakly-even-up": {
        1: [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
        2: [1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2],
        3: [1, 3, 7, 18, 47, 123, 322, 843, 2207, 5778, 15127],
        4: [1, 4, 8, 19, 48, 124, 323, 844, 2208, 5779, 15128],
        5: [1, 5, 17, 68, 277, 1130, 4610, 18807, 76725, 313007, 1276942],
        6: [1, 6, 18, 69, 278, 1131, 4611, 18808, 76726, 313008, 1276943],
    },
    "cyclic-weakly-odd-up": {
        1: [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
        2: [1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024],
        3: [1, 3, 5, 9, 17, 33, 65, 129, 257, 513, 1025],
        4: [1, 4, 12, 40, 136, 464, 1584, 5408, 18464, 63040, 215232],
        5: [1, 5, 13, 41, 137, 465, 1585, 5409, 18465, 63041, 215233],
        6: [1, 6, 24, 114, 552, 2676, 12972, 62880, 304800, 1477464, 7161744],
    },
}

CATALAN_TABLE = {
    "weakly-even-up": [1, 1, 2, 4, 10, 26, 70, 194, 550, 1588, 4654],
    "weakly-odd-up": [1, 1, 2, 5, 12, 31, 83, 229, 647, 1863, 5448],
    "weakly-even-up-odd-end": [1, 1, 1, 2, 5, 13, 35, 97, 275, 794, 2327],
    "weakly-odd-up-even-end": [1, 0, 1, 2, 5, 13, 35, 97, 275, 794, 2327],
    "strict-even-up": [1, 1, 2, 3, 7, 15, 36, 87, 218, 555, 1438],
    "strict-odd-up": [1, 1, 1, 3, 5, 13, 29, 73, 181, 465, 1205],
    "strict-even-up-odd-end": [1, 1, 1, 2, 4, 9, 21, 51, 127, 323, 835],
    "strict-odd-up-even-end": [1, 0, 1, 1, 3, 6, 15, 36, 91, 232, 603],
}

CATALAN_NUMBERS = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]

# (id, word class, k, expected offset, expected leading exemption)
VENDORED_WORD_MATCHES = [
    ("A001333", "even-up", 3, 1, 0),
    ("A052542", "even-up", 4, 1, 1),
    ("A000045", "odd-up", 2, 2, 0),
    ("A000045", "odd-up", 3, 3, 1),
    ("A002203", "cyclic-even-up", 3, 0, 2),
    ("A002203", "cyclic-even-up", 4, 0, 2),
    ("A000032", "cyclic-odd-up", 2, 0, 2),
    ("A000032", "cyclic-odd-up", 3, 0, 2),
    ("A001906", "weakly-even-up", 3, 1, 0),
    ("A027941", "weakly-even-up", 4, 1, 0),
    ("A012814", "weakly-even-up", 5, 1, 0),
    ("A000079", "weakly-odd-up", 2, 0, 0),
    ("A000225", "weakly-odd-up", 3, 1, 0),
    ("A007070", "weakly-odd-up", 4, 0, 0),
    ("A035344", "weakly-odd-up", 5, 0, 0),
    ("A145839", "weakly-odd-up", 6, 0, 0),
    ("A005248", "cyclic-weakly-even-up", 3, 0, 1),
    ("A065034", "cyclic-weakly-even-up", 4, 0, 1),
    ("A000079", "cyclic-weakly-odd-up", 2, 0, 0),
    ("A000051", "cyclic-weakly-odd-up", 3, 0, 1),
    ("A056236", "cyclic-weakly-odd-up", 4, 0, 1),
]

# Attributions whose b-files are not vendored; checked only with --live data
UNVENDORED_WORD_MATCHES = [
    ("A377314", "even-up", 5),
    ("A108368", "even-up", 6),
    ("A099098", "odd-up", 4),
    ("A334293", "odd-up", 5),
    ("A176476", "weakly-even-up", 6),
]

# (id, Catalan variant, expected offset, expected leading exemption)
VENDORED_CATALAN_MATCHES = [
    ("A001006", "strict-even-up-odd-end", -1, 0),
    ("A005043", "strict-odd-up-even-end", 0, 0),
    ("A025242", "weakly-even-up-odd-end", 1, 0),
    ("A025242", "weakly-odd-up-even-end", 1, 2),
    ("A124791", "strict-odd-up", -1, 0),
]


@pytest.fixture
def word_tables():
    return WORD_TABLES


@pytest.fixture
def catalan_table():
    return CATALAN_TABLE


@pytest.fixture
def isolated_env(tmp_path, monkeypatch):
    """Point configuration and the OEIS cache at a fresh temporary directory."""
    monkeypatch.delenv("EVENUP_WORDS_CONFIG", raising=False)
    monkeypatch.setenv("OEIS_CACHE_DIR", str(tmp_path / "cache"))
    return tmp_path
