"""A tour of the generators: seeding, known vectors, and output kinds.

Run from the repository root:  python demos/01_streams_and_seeds.py
"""

from prnglab.generators import AlgorithmId, OutputKind
from prnglab.seeding import StreamSpec, expand_seed, make_stream

# Every generator is seeded from the same 64-bit public seed.  Seed 0 is
# allowed everywhere -- it is the seed the whole measurement protocol
# uses -- and each algorithm documents how it truncates or expands it.

print("=== first 5 outputs at seed 0, native kind ===")
for algo in AlgorithmId:
    kind = OutputKind.F64 if algo is AlgorithmId.MRG32K3A else OutputKind.U32
    stream = make_stream(StreamSpec(algo, 0, kind))
    print(f"{algo.value:12s}", stream.next_block(5, kind).tolist())

# The canonical MT19937 check: seed 5489 opens with 3499211612.
mt = make_stream(StreamSpec(AlgorithmId.MT19937, 5489))
print("\nMT19937(5489) starts with", mt.next_u32(), "(expect 3499211612)")

# Seed expansion is a pure function from seed to full internal state.
state = expand_seed(AlgorithmId.MT19937, 0)
print("MT19937 seed-0 state prefix:", state.words[:3])

# MRG32k3a's zero seed would be absorbing, so the expansion substitutes
# the reference default state and says so.
mrg = make_stream(StreamSpec(AlgorithmId.MRG32K3A, 0, OutputKind.F64))
print("\nMRG32k3a warnings:", mrg.warnings)
print("MRG32k3a first double:", mrg.next_f64(), "(expect 0.12701112204657714)")

# Doubles and 32-bit integers come from one underlying native stream;
# bulk blocks and scalar draws are interchangeable bit for bit.
a = make_stream(StreamSpec(AlgorithmId.PHILOX4X32_10, 7, OutputKind.F64))
b = make_stream(StreamSpec(AlgorithmId.PHILOX4X32_10, 7, OutputKind.F64))
bulk = a.next_block(3, OutputKind.F64).tolist()
ones = [b.next_f64() for _ in range(3)]
print("\nPhilox bulk:", bulk)
print("Philox ones:", ones)
assert bulk == ones
