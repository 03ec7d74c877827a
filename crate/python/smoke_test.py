#!/usr/bin/env python3
"""Smoke test for the qsym Python extension.

Builds the extension with cargo, copies it next to this script as an
importable module, and exercises the main surface: exact scalar
arithmetic, series construction and verification, conjugation,
invariants, minimality, and the orbit decision.
"""

import pathlib
import shutil
import subprocess
import sys

ROOT = pathlib.Path(__file__).resolve().parents[1]


def build_extension() -> pathlib.Path:
    subprocess.run(["cargo", "build", "-p", "qsym-py"], check=True, cwd=ROOT)
    built = ROOT / "target" / "debug" / "libqsym.so"
    dest = pathlib.Path(__file__).resolve().parent / "qsym.so"
    shutil.copy2(built, dest)
    return dest


def main() -> None:
    dest = build_extension()
    sys.path.insert(0, str(dest.parent))
    import qsym

    # Family listing: 3 classical + 23 named + 5 embedded.
    ids = qsym.series_ids()
    assert len(ids) == 31, f"expected 31 families, got {len(ids)}"
    assert "D1G1E1F3" in ids and "TypeII" in ids and "EmbD2N1L1" in ids

    # Exact scalar arithmetic: q is the square of z, division is exact.
    assert qsym.Scalar("q") == qsym.Scalar("z^2")
    geometric = qsym.Scalar("1 - q^2") / qsym.Scalar("1 - q")
    assert geometric == qsym.Scalar("1 + q")
    assert (qsym.Scalar("z") ** 4) == qsym.Scalar("q^2")
    assert (qsym.Scalar("3/2") - qsym.Scalar("3/2")).is_zero()

    # A reference series instance verifies with symbolic coefficients.
    s = qsym.make_series("D1G1E1F3", r=0, s=1, u=-1, v=0)
    assert s.verify(), f"verification failed: {s.failures()}"
    assert s.invariants() == (1, 1)
    assert s.is_weight_type()
    alpha, beta = s.weights()
    assert qsym.Scalar(alpha) == qsym.Scalar("q^-2")
    assert qsym.Scalar(beta).is_one()
    assert s.e_x() != "0", "e(x) should be nonzero for this series"

    # The generator images agree with the action on monomials.
    assert s.act("k", 1, 0) == s.k_x()
    assert s.act("e", 1, 0) == s.e_x()

    # Conjugation by a unit shear preserves verification and invariants.
    moved = qsym.conjugate_symmetry(s, (1, 1, 0, 1), mu="1", nu="z^2")
    assert moved.verify(), f"conjugated instance failed: {moved.failures()}"
    assert moved.invariants() == (1, 1)

    # Classical families.
    assert qsym.make_weight_type1("-z^2", "z^-2").verify()
    assert qsym.make_weight_type2(-1, 1).verify()
    assert qsym.make_generic_symmetry(1, 0, "q^2", "3", "1").verify()

    # Reference invariants and minimality spot values.
    assert qsym.series_weights("D2G2E1F3", 2, 2, 1, 2) is not None
    assert qsym.minimality(2, 2, "q^-2", "-q^2") is True
    assert qsym.minimality(2, 2, "q^-2", "q^2") is False

    # Orbit decision with the reference shear witness.
    verdict, witness = qsym.orbit(("-q^-1", "-1"), ("q^-1", "-1"))
    assert verdict == "yes" and witness == (1, 1, 0, 1), (verdict, witness)
    verdict, witness = qsym.orbit(("z", "z"), ("q", "q"))
    assert verdict == "no" and witness is None, (verdict, witness)

    print("smoke test: all assertions passed")


if __name__ == "__main__":
    main()
