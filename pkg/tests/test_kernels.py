import os
import random
import subprocess
import sys

import pytest

from knotdelta import _kernel, _rlength_py, bounds, v_n
from knotdelta.group import GroupElement

compiled = pytest.mark.skipif(_kernel.BACKEND != "compiled", reason="extension not built")


def _random_elements(count, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        v = GroupElement(((rng.choice("XY"), rng.randint(-3, 3)), rng.randint(-2, 2))
                         for _ in range(rng.randint(1, 5)))
        if v:
            out.append(v)
    return out


@compiled
def test_compiled_matches_python():
    from knotdelta import _rlength
    for v in _random_elements(400, 2) + [v_n(n) for n in range(1, 5)]:
        for limit in (3, 6, 10):
            dense = bounds._dense(v, limit)[:5]
            assert _rlength.rlength(*dense, limit) == _rlength_py.rlength(*dense, limit)


def test_python_kernel_known_values():
    for n in range(1, 4):
        dense = bounds._dense(v_n(n), 2 * n + 2)[:5]
        assert _rlength_py.rlength(*dense, 2 * n + 2) == 2 * n + 2
        assert _rlength_py.rlength(*dense, 2 * n + 1) == -1


def test_fallback_selected_by_environment():
    env = dict(os.environ, KNOTDELTA_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from knotdelta import _kernel; print(_kernel.BACKEND)"],
        env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_backend_name():
    assert _kernel.BACKEND in ("compiled", "python")
