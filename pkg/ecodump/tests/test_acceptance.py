"""Acceptance: cross-ecosystem divergence and dump determinism.

The native streams come from the prnglab CLI -- the stream-file format
is the only interface shared with the primary package.
"""

import shutil
import subprocess

import pytest

from ecodump import EcosystemId, dump

NEEDS_PRNGLAB = pytest.mark.skipif(shutil.which("prnglab") is None,
                                   reason="prnglab CLI not on PATH")


def native_stream(tmp_path, algo, seed, n, kind):
    out = tmp_path / f"native_{algo}.{kind}"
    subprocess.run(["prnglab", "gen", "--algo", algo, "--seed", str(seed),
                    "--kind", kind, "--n", str(n), "--out", str(out)],
                   check=True, capture_output=True)
    return out


@NEEDS_PRNGLAB
def test_arraylib_mt_differs_from_native_mt_at_index_0(tmp_path):
    """Same nominal MT19937, same seed 0, different stream -- from the
    very first value, because the ecosystem seeds through its own
    expansion."""
    native = native_stream(tmp_path, "mt19937", 0, 100, "u32")
    eco = tmp_path / "eco.u32"
    dump(EcosystemId.ARRAYLIB_MT, 0, 100, "u32", eco)
    a = native.read_bytes()
    b = eco.read_bytes()
    assert a[:4] != b[:4], "expected divergence at index 0"


@NEEDS_PRNGLAB
def test_arraylib_pcg64_divergence_recorded(tmp_path):
    native = native_stream(tmp_path, "pcg64", 0, 100, "f64")
    eco = tmp_path / "eco.f64"
    dump(EcosystemId.ARRAYLIB_PCG64, 0, 100, "f64", eco)
    a, b = native.read_bytes(), eco.read_bytes()
    first_diff = next((i for i in range(100) if a[8*i:8*i+8] != b[8*i:8*i+8]),
                      None)
    # DIFFERS is the expected outcome; IDENTICAL would itself be a
    # notable finding worth recording, hence the explicit report
    assert first_diff is not None, \
        "NOTABLE: ecosystem PCG64 reproduced the native stream bitwise"
    assert first_diff == 0


def test_dump_run_twice_byte_identical(tmp_path):
    a, b = tmp_path / "a.f64", tmp_path / "b.f64"
    dump(EcosystemId.STDLIB_MT, 0, 100, "f64", a)
    dump(EcosystemId.STDLIB_MT, 0, 100, "f64", b)
    assert a.read_bytes() == b.read_bytes()
