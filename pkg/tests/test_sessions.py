import time

import pytest

from sessions import SESSIONS


@pytest.mark.parametrize("name,fn", SESSIONS, ids=[n for n, _ in SESSIONS])
def test_session(name, fn):
    start = time.perf_counter()
    fn()
    assert time.perf_counter() - start < 10
