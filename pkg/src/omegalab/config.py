"""Size caps.

Precedence is explicit overrides > ``OMEGALAB_CAPS`` > built-in defaults.
The environment variable holds comma-separated ``name=value`` pairs, e.g.
``OMEGALAB_CAPS="omega_half=512,symbolic_n=8"``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from functools import lru_cache

ENV_VAR = "OMEGALAB_CAPS"


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class Caps:
    omega_half: int = 4096          # largest floor(n/2) for an Omega/lambda table
    symbolic_n: int = 12            # largest n for symbolic identity expansion
    sieve_bound: int = 10**6
    mersenne_naive_p: int = 26
    mersenne_fast_p: int = 1024
    mersenne_crosscheck_p: int = 13  # exact Omega-ratio cross-check of the Mersenne test
    fermat_n: int = 6

    def check(self, name: str, value: int, what: str = "") -> None:
        limit = getattr(self, name)
        if value > limit:
            label = what or name
            raise CapExceeded(f"{label} = {value} exceeds cap {name}={limit}")


def parse_caps(text: str, base: Caps | None = None) -> Caps:
    """Apply ``name=value`` pairs on top of ``base``."""
    base = base or Caps()
    known = {f.name for f in fields(Caps)}
    updates = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or name not in known:
            raise ValueError(f"bad cap override {item!r}; known caps: {', '.join(sorted(known))}")
        try:
            updates[name] = int(value.strip())
        except ValueError:
            raise ValueError(f"cap {name} needs an integer, got {value!r}") from None
    return replace(base, **updates)


@lru_cache(maxsize=8)
def _from_env(text: str) -> Caps:
    return parse_caps(text)


def load_caps(overrides: str | None = None) -> Caps:
    caps = _from_env(os.environ.get(ENV_VAR, ""))
    if overrides:
        caps = parse_caps(overrides, caps)
    return caps


def resolve(caps: Caps | None) -> Caps:
    return caps if caps is not None else load_caps()
