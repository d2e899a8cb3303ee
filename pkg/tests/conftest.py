import pytest

from bwa import BlackWhiteArray

# Eight inserts whose final one triggers a three-level merge cascade,
# consolidating everything into the rank-3 segment.
EIGHT = (83, 67, 59, 21, 76, 33, 45, 52)

# Fourteen inserts then four deletes leave voids at known slots; deleting 59
# afterwards drops the top segment's occupancy to exactly half and forces a
# demotion followed by a merge.
PRELUDE_INSERTS = (6, 10, 20, 52, 59, 67, 70, 83, 21, 77, 80, 91, 45, 82)
PRELUDE_DELETES = (10, 20, 70, 80)


@pytest.fixture
def eight_value_array() -> BlackWhiteArray:
    bwa = BlackWhiteArray(4, "fixed")
    for v in EIGHT:
        bwa.insert(v)
    return bwa


@pytest.fixture
def demotion_ready_array() -> BlackWhiteArray:
    bwa = BlackWhiteArray(4, "fixed")
    for v in PRELUDE_INSERTS:
        bwa.insert(v)
    for v in PRELUDE_DELETES:
        bwa.delete(v)
    return bwa
