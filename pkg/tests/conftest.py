import pytest

from gentlehom import fixtures


@pytest.fixture(scope="session")
def fx():
    """All shipped fixtures by name."""
    return fixtures.all_fixtures()
