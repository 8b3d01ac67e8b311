"""Python access to the zlab curve pipeline.

Report functions take curve-file text (or a corpus name) and return the
decoded JSON report as a dict.
"""

import json

from . import _zlab
from ._zlab import ZlabError, alexander_delta, configuration, corpus_names, normalize, torus_verdict

__all__ = [
    "ZlabError",
    "alexander",
    "alexander_delta",
    "classify",
    "configuration",
    "corpus_names",
    "corpus_text",
    "corpus_verify",
    "family_6a2",
    "normalize",
    "pair",
    "semi_torus_verify",
    "torus_check",
    "torus_verdict",
]

DEFAULT_SEED = 0x5EED


def corpus_text(name):
    return _zlab.corpus_text(name)


def _text(curve):
    # curve-file text contains a "name =" line; anything else is a corpus name
    return curve if "=" in curve else _zlab.corpus_text(curve)


def classify(curve, seed=DEFAULT_SEED, trace=False):
    return json.loads(_zlab.classify(_text(curve), seed, trace))


def torus_check(curve, seed=DEFAULT_SEED, trace=False):
    return json.loads(_zlab.torus_check(_text(curve), seed, trace))


def alexander(curve, seed=DEFAULT_SEED):
    return json.loads(_zlab.alexander(_text(curve), seed))


def semi_torus_verify(curve, seed=DEFAULT_SEED):
    return json.loads(_zlab.semi_torus_verify(_text(curve), seed))


def pair(a, b, seed=DEFAULT_SEED):
    return json.loads(_zlab.pair(_text(a), _text(b), seed))


def family_6a2(params, seed=DEFAULT_SEED):
    if not isinstance(params, str):
        params = ",".join(str(p) for p in params)
    return json.loads(_zlab.family_6a2(params, seed))


def corpus_verify(seed=DEFAULT_SEED):
    return json.loads(_zlab.corpus_verify(seed))
