import json
from importlib import resources

import pytest


@pytest.fixture(scope="session")
def golden():
    path = resources.files("curlseq").joinpath("fixtures/known_values.json")
    with path.open() as fh:
        return json.load(fh)


@pytest.fixture(scope="session", autouse=True)
def warm_compiled_kernels():
    # trigger (cached) jit compilation outside of any timed assertion
    import curlseq as cs

    cs.generate_reference(1, 8)
    cs.extend_until_drop((2, 2))
    cs.exhaustive_search(1)
