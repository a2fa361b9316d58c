#!/usr/bin/env python3
"""Smoke test for the pyauslab extension module.

Builds (or reuses) the cdylib, copies it next to a temp module path, imports
it, and exercises the main surface: constructors, text round trip, profiles,
condition checks, and one theorem verification.

Run from the repository root:  python3 python/smoke_test.py
"""

import os
import shutil
import subprocess
import sys
import tempfile

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def build_extension():
    subprocess.run(
        ["cargo", "build", "--release", "-p", "pyauslab"],
        cwd=ROOT,
        check=True,
    )
    candidates = [
        os.path.join(ROOT, "target", "release", "libpyauslab.so"),
        os.path.join(ROOT, "target", "release", "libpyauslab.dylib"),
        os.path.join(ROOT, "target", "release", "pyauslab.dll"),
    ]
    for c in candidates:
        if os.path.exists(c):
            return c
    raise FileNotFoundError("built extension not found in target/release")


def main():
    lib = build_extension()
    tmp = tempfile.mkdtemp(prefix="pyauslab_")
    ext = ".pyd" if lib.endswith(".dll") else ".so"
    shutil.copy(lib, os.path.join(tmp, "pyauslab" + ext))
    sys.path.insert(0, tmp)

    import pyauslab

    # constructors and validation
    f2 = pyauslab.Algebra.field(2)
    assert f2.dim == 1 and f2.p == 2
    assert f2.validate() == []

    t2 = f2.lower_triangular(2)
    assert t2.dim == 3
    assert t2.validate() == []

    # text round trip
    text = t2.to_text()
    again = pyauslab.Algebra.from_text(text, "t2f2")
    assert again.to_text() == text

    # profiles
    a = pyauslab.Analysis(t2)
    assert a.profile(3) == ["0", "1", "-inf", "-inf"], a.profile(3)
    assert a.simple_dims() == [1, 1]
    assert a.injective_term_dim(0) > 0

    # condition checks
    assert a.gnk(2, 0) == "holds"
    assert a.lnop(1, 2) == "fails"
    assert a.dominant(2) == [0, 1]

    # theorem verification on the base field
    base = pyauslab.Analysis(f2)
    report = base.verify_thm36(2, 3)
    assert "verdict\tverified" in report, report
    report = base.verify_thm37(2, 0, 3)
    assert "verdict\tverified" in report, report
    report = base.verify_cor38(1, 2, 2)
    assert "verdict\tverified" in report, report

    # censored case
    lr = pyauslab.Analysis(pyauslab.Algebra.local_rad_square_zero(2))
    assert lr.gnk(1, 2, cap=6) == "fails"

    # a slice of the corpus
    outcomes = pyauslab.run_corpus(filter="f*", jobs=2)
    assert outcomes, "corpus slice must not be empty"
    for name, passed, details in outcomes:
        assert passed, f"{name}: {details}"

    print("pyauslab smoke test: ok")


if __name__ == "__main__":
    main()
