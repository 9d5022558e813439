"""CLI: ecodump --eco <id> --seed <u64> --n <count> --kind <u32|f64> --out <path>"""

from __future__ import annotations

import argparse
import sys

from .dumpers import EcosystemId, MissingEcosystem, UnsupportedKind, dump


def main(argv=None) -> int:
    p = argparse.ArgumentParser(prog="ecodump")
    p.add_argument("--eco", required=True,
                   choices=[e.value for e in EcosystemId])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=["u32", "f64"], default="u32")
    p.add_argument("--out", required=True)
    args = p.parse_args(argv)
    try:
        out = dump(EcosystemId.from_name(args.eco), args.seed, args.n,
                   args.kind, args.out)
    except (MissingEcosystem, UnsupportedKind, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    print(f"wrote {args.n} {args.kind} values to {out} (+ {out}.meta.json)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
