"""Run-wide configuration: the master seed and the size caps.

Every cap is a plain integer with a documented default; nothing downstream
hard-codes a limit.  The active configuration can be swapped with
:func:`set_config` or temporarily with :func:`using`.
"""
from __future__ import annotations

import contextlib
import dataclasses
import os
import random
from dataclasses import dataclass, field

SEED_ENV = "FPRLAB_SEED"


def _default_seed() -> int:
    return int(os.environ.get(SEED_ENV, "1"))


@dataclass(frozen=True)
class Caps:
    degree: int = 10**6          # points in a realized action
    order: int = 10**4           # subgroup-lattice searches (maximal overgroups)
    class_enumeration: int = 10**7
    full_enumeration: int = 60_000  # below this, class tables enumerate every element
    spread: int = 600
    graph: int = 2_000
    field_size: int = 32
    dimension: int = 8

    def __post_init__(self):
        for f in dataclasses.fields(self):
            if getattr(self, f.name) <= 0:
                raise ValueError(f"cap {f.name} must be positive")


CAP_NAMES = tuple(f.name for f in dataclasses.fields(Caps))


@dataclass(frozen=True)
class RunConfig:
    seed: int = field(default_factory=_default_seed)
    caps: Caps = field(default_factory=Caps)
    output: str = "json"
    budget: int = 2_000_000      # node budget for NP-hard searches

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.output not in ("json", "csv"):
            raise ValueError("output must be json or csv")
        if self.budget <= 0:
            raise ValueError("budget must be positive")

    def with_caps(self, **kw) -> "RunConfig":
        return dataclasses.replace(self, caps=dataclasses.replace(self.caps, **kw))

    def substream(self, label: str) -> random.Random:
        """Independent deterministic RNG derived from the master seed.

        Substreams are keyed by a label so adding a consumer never shifts the
        numbers another consumer sees.
        """
        return random.Random(f"{self.seed}/{label}")

    @classmethod
    def from_file(cls, path) -> "RunConfig":
        """Read a ``key=value`` config file (``#`` comments allowed).

        Recognised keys: ``seed``, ``output``, ``budget`` and ``cap.<name>``.
        """
        values, caps = {}, {}
        with open(path) as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ValueError(f"{path}:{lineno}: expected key=value")
                key, value = (s.strip() for s in line.split("=", 1))
                if key.startswith("cap."):
                    if key[4:] not in CAP_NAMES:
                        raise ValueError(f"{path}:{lineno}: unknown cap {key[4:]!r}")
                    caps[key[4:]] = int(value)
                elif key in ("seed", "budget"):
                    values[key] = int(value)
                elif key == "output":
                    values[key] = value
                else:
                    raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
        cfg = cls(**values)
        return cfg.with_caps(**caps) if caps else cfg


_active = RunConfig()


def get_config() -> RunConfig:
    return _active


def set_config(cfg: RunConfig) -> None:
    global _active
    _active = cfg


@contextlib.contextmanager
def using(cfg: RunConfig):
    old = get_config()
    set_config(cfg)
    try:
        yield cfg
    finally:
        set_config(old)
