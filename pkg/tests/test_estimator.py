import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from morphspell import SpellingCorrector


@pytest.fixture(scope="module")
def fitted(turkish):
    return SpellingCorrector().fit(turkish)


def test_params_roundtrip():
    est = SpellingCorrector(threshold=2, k=4)
    p = est.get_params()
    assert p == dict(threshold=2, q=2, k=4, t_q=2, prune=True, prefilter=True)
    other = clone(est).set_params(t_q=1)
    assert other.t_q == 1 and est.t_q == 2


def test_not_fitted():
    with pytest.raises(NotFittedError):
        SpellingCorrector().suggest("evde")


@pytest.mark.parametrize("params", [dict(threshold=4), dict(threshold=-1), dict(k=0),
                                    dict(k=2, t_q=2), dict(q=0), dict(threshold=1.5)])
def test_bad_params(params, turkish):
    with pytest.raises((ValueError, TypeError)):
        SpellingCorrector(**params).fit(turkish)


def test_fit_by_name():
    est = SpellingCorrector().fit("toy")
    assert est.n_roots_ == 3


def test_predict_transform(fitted):
    words = ["çaışmalarıyla", "evlrin", "qqqq"]
    pred = fitted.predict(words)
    assert pred.dtype == object and pred.shape == (3,)
    assert pred[1] == "evlerin" and pred[2] is None
    out = fitted.transform(np.array(words))
    assert [len(s) > 0 for s in out] == [True, True, False]
    assert fitted.predict("evlrin").tolist() == ["evlerin"]


def test_score(fitted):
    assert fitted.score(["evlrin", "arbalar"], ["evlerin", "arkalar"]) == 1.0
    assert fitted.score(["evlrin", "arbalar"], ["evlerin", "x"]) == 0.5
    with pytest.raises(ValueError):
        fitted.score(["evlrin"], [])


def test_check(fitted):
    assert fitted.check("evlerin")
    assert not fitted.check("evlrin")
    assert not fitted.check("")


def test_bad_words(fitted):
    with pytest.raises(ValueError):
        fitted.suggest("")
    with pytest.raises((TypeError, ValueError)):
        fitted.transform([3])
