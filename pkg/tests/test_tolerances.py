import json
import subprocess
import sys

import pytest

from rectsurf import tolerances


def test_defaults():
    t = tolerances.Tolerances()
    assert t.centre == 1e-9 and t.fd_oracle == 1e-4 and t.unit_norm == 1e-12
    assert t.as_dict()["tau_window"] == [0.2, 0.8]


def test_replaced():
    t = tolerances.Tolerances().replaced(centre=1e-6, tau_window=[0.1, 0.9])
    assert t.centre == 1e-6 and t.tau_window == (0.1, 0.9)
    with pytest.raises(KeyError, match="nonsense"):
        t.replaced(nonsense=1)


def test_load_file(tmp_path):
    p = tmp_path / "tol.json"
    p.write_text(json.dumps({"tangency": 0.05}))
    assert tolerances.load(str(p)).tangency == 0.05


def test_environment_override(tmp_path):
    p = tmp_path / "tol.json"
    p.write_text(json.dumps({"fd_oracle": 0.5}))
    code = "from rectsurf.tolerances import TOL; print(TOL.fd_oracle)"
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         env={"RECTSURF_TOLERANCES": str(p), "PATH": ""}, check=True)
    assert out.stdout.strip() == "0.5"
