import os
import subprocess
import sys

import tropreal.exactmath as em

PROBE = (
    "from tropreal.exactmath import BACKEND;"
    "from tropreal.census import run_census;"
    "s = run_census(2).summary();"
    "print(BACKEND, s['classes'], s['non_realizable'])"
)


def _probe(pure: bool) -> str:
    env = dict(os.environ)
    env.pop("TROPREAL_PURE", None)
    if pure:
        env["TROPREAL_PURE"] = "1"
    return subprocess.run([sys.executable, "-c", PROBE], env=env, capture_output=True,
                          text=True, check=True).stdout.split()


def test_pure_backend_is_selectable():
    assert _probe(True)[0] == "python"


def test_both_backends_give_the_same_census():
    pure = _probe(True)
    default = _probe(False)
    assert default[0] in ("cython", "python")
    assert pure[1:] == default[1:] == ["18", "1"]


def test_backend_name_is_exported():
    assert em.BACKEND in ("cython", "python")
