import pytest

from watchwalk.properties import SUITES, run_suite
from watchwalk.errors import PreconditionError

# reduced scales so the whole matrix stays fast; the acceptance suite runs
# the criterion-level scales
SCALES = {
    "domset": dict(n=6, samples=40),
    "nminustwo": dict(n=7),
    "gammacyc": dict(n=6, samples=40),
    "gammat-chain": dict(n=6, samples=40),
    "norepeat": dict(n=6, samples=40),
    "simple-w03": dict(n=7),
    "local-transitive": dict(n=6, samples=40),
    "spanning-bound": dict(samples=60),
    "strongify": dict(samples=15),
    "multipartite-exists": dict(samples=40),
    "pancyclic": dict(n=7),
    "agreement": dict(n=6, samples=40),
}


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes(name):
    result = run_suite(name, **SCALES[name])
    assert result.passed, result.summary()
    assert result.checked > 0
    assert result.counterexample is None


def test_unknown_suite():
    with pytest.raises(PreconditionError):
        run_suite("nope")


def test_seed_changes_corpus_not_verdict():
    a = run_suite("domset", n=4, seed=1, samples=30)
    b = run_suite("domset", n=4, seed=2, samples=30)
    assert a.passed and b.passed
    assert a.checked == b.checked
