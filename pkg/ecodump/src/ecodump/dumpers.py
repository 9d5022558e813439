"""Dump random streams from external ecosystems into the shared
stream-file format: raw little-endian records, 4 bytes per u32, 8 bytes
per IEEE-754 double, no header, kind in the file extension.

Each ecosystem is seeded through its documented top-level integer-seed
API -- that is the whole point: same nominal algorithm, same seed,
different stream.  A sidecar ``<out>.meta.json`` records the ecosystem
version and the exact seeding call, because version drift can change
outputs.

Generation is bulk-only in 2^20-value blocks; the heavyweight frameworks
are imported lazily so a missing one only breaks its own dumper.
"""

from __future__ import annotations

import enum
import json
import sys
from pathlib import Path

import numpy as np

BLOCK = 1 << 20


class MissingEcosystem(RuntimeError):
    pass


class UnsupportedKind(ValueError):
    pass


class EcosystemId(enum.Enum):
    STDLIB_MT = "stdlib_mt"
    ARRAYLIB_MT = "arraylib_mt"
    ARRAYLIB_PCG64 = "arraylib_pcg64"
    ARRAYLIB_PHILOX = "arraylib_philox"
    TORCH_DEFAULT = "torch_default"
    TF_PHILOX = "tf_philox"

    @classmethod
    def from_name(cls, name: str) -> "EcosystemId":
        for e in cls:
            if e.value == name.lower():
                return e
        raise ValueError(f"unknown ecosystem {name!r}; "
                         f"one of {[e.value for e in cls]}")


def _require(module: str, eco: EcosystemId):
    try:
        return __import__(module)
    except ImportError as e:
        raise MissingEcosystem(
            f"{eco.value} needs the '{module}' package installed "
            f"(pip install {module})") from e


# Each dumper returns (blocks_iterator, version, seeding_call); blocks
# are numpy arrays of the requested kind.


def _stdlib_mt(seed, n, kind):
    import random
    rng = random.Random(seed)
    seeding = f"random.Random({seed})"
    if kind == "u32":
        def blocks():
            left = n
            while left:
                take = min(BLOCK, left)
                yield np.array([rng.getrandbits(32) for _ in range(take)],
                               dtype=np.uint32)
                left -= take
        call = seeding + "; .getrandbits(32)"
    else:
        def blocks():
            left = n
            while left:
                take = min(BLOCK, left)
                yield np.array([rng.random() for _ in range(take)])
                left -= take
        call = seeding + "; .random()"
    return blocks(), f"python {sys.version.split()[0]}", call


def _arraylib_bitgen(bitgen_name, seed, n, kind):
    bg = getattr(np.random, bitgen_name)(seed)
    g = np.random.Generator(bg)
    if kind == "u32":
        gen = lambda take: g.integers(0, 1 << 32, take, dtype=np.uint32)
        call = (f"numpy.random.Generator({bitgen_name}({seed}))"
                ".integers(0, 2**32, n, dtype=uint32)")
    else:
        gen = lambda take: g.random(take)
        call = f"numpy.random.Generator({bitgen_name}({seed})).random(n)"
    return _np_blocks(gen, n), f"numpy {np.__version__}", call


def _torch_default(seed, n, kind):
    torch = _require("torch", EcosystemId.TORCH_DEFAULT)
    g = torch.Generator()
    g.manual_seed(seed)
    if kind == "u32":
        gen = lambda take: (torch.randint(0, 1 << 32, (take,), generator=g,
                                          dtype=torch.int64)
                            .numpy().astype(np.uint32))
        call = (f"torch.Generator().manual_seed({seed}); "
                "torch.randint(0, 2**32, (n,), dtype=int64)")
    else:
        gen = lambda take: torch.rand(take, generator=g,
                                      dtype=torch.float64).numpy()
        call = (f"torch.Generator().manual_seed({seed}); "
                "torch.rand(n, dtype=float64)")
    return _np_blocks(gen, n), f"torch {torch.__version__}", call


def _tf_philox(seed, n, kind):
    tf = _require("tensorflow", EcosystemId.TF_PHILOX)
    g = tf.random.Generator.from_seed(seed, alg="philox")
    if kind == "u32":
        gen = lambda take: (g.uniform_full_int((take,), dtype=tf.uint32)
                            .numpy())
        call = (f"tf.random.Generator.from_seed({seed}, alg='philox')"
                ".uniform_full_int((n,), dtype=uint32)")
    else:
        gen = lambda take: g.uniform((take,), dtype=tf.float64).numpy()
        call = (f"tf.random.Generator.from_seed({seed}, alg='philox')"
                ".uniform((n,), dtype=float64)")
    return _np_blocks(gen, n), f"tensorflow {tf.__version__}", call


def _np_blocks(gen, n):
    left = n
    while left:
        take = min(BLOCK, left)
        yield gen(take)
        left -= take


_DUMPERS = {
    EcosystemId.STDLIB_MT: _stdlib_mt,
    EcosystemId.ARRAYLIB_MT:
        lambda s, n, k: _arraylib_bitgen("MT19937", s, n, k),
    EcosystemId.ARRAYLIB_PCG64:
        lambda s, n, k: _arraylib_bitgen("PCG64", s, n, k),
    EcosystemId.ARRAYLIB_PHILOX:
        lambda s, n, k: _arraylib_bitgen("Philox", s, n, k),
    EcosystemId.TORCH_DEFAULT: _torch_default,
    EcosystemId.TF_PHILOX: _tf_philox,
}


def dump(ecosystem: EcosystemId, seed: int, n: int, kind: str,
         out_path) -> Path:
    """Write n values to out_path plus ``<out>.meta.json``; returns the
    output path."""
    if kind not in ("u32", "f64"):
        raise UnsupportedKind(f"kind must be u32 or f64, not {kind!r}")
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 <= seed < 1 << 64:
        raise ValueError("seed must fit in 64 unsigned bits")
    out_path = Path(out_path)
    blocks, version, call = _DUMPERS[ecosystem](seed, n, kind)
    dtype = "<u4" if kind == "u32" else "<f8"
    written = 0
    with open(out_path, "wb") as f:
        for arr in blocks:
            arr.astype(dtype, copy=False).tofile(f)
            written += arr.size
    assert written == n
    meta = {
        "ecosystem": ecosystem.value,
        "seed": seed,
        "n": n,
        "kind": kind,
        "version": version,
        "seeding_call": call,
        "format": "raw little-endian records, no header; "
                  "u32 = 4 bytes, f64 = IEEE-754 binary64",
    }
    Path(f"{out_path}.meta.json").write_text(json.dumps(meta, indent=2))
    return out_path
