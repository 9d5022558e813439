from .dumpers import EcosystemId, MissingEcosystem, UnsupportedKind, dump

__all__ = ["EcosystemId", "MissingEcosystem", "UnsupportedKind", "dump"]
