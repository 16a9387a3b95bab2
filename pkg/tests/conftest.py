from pathlib import Path

import pytest

from clonelab import Profile, embed_family, implement_family, string_of_sausages

pytest_plugins = 'profile_fixtures',


@pytest.fixture
def tests_root():
    return Path(__file__).resolve().parent


@pytest.fixture
def temp_dir(tmpdir):
    return Path(tmpdir)


@pytest.fixture
def example_profile():
    # a > b > c > d, b > d > c > a, a > b > d > c
    return Profile([[0, 1, 2, 3], [1, 3, 2, 0], [0, 1, 3, 2]], names='abcd')


@pytest.fixture
def example_text():
    return '4 3\nnames: a,b,c,d\na,b,c,d\nb,d,c,a\na,b,d,c\n'


@pytest.fixture
def nested_strings():
    # the string 1, 2, 3 embedded in place of the middle candidate of the string 0, 1, 4
    return embed_family(string_of_sausages(3), 1, string_of_sausages(3))


@pytest.fixture
def nested_strings_profile(nested_strings):
    return implement_family(nested_strings)
