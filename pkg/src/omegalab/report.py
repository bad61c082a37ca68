from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS = "PASS"
FAIL = "FAIL"
SKIPPED = "SKIPPED"


def _text(v) -> str:
    return v if isinstance(v, str) else str(v)


@dataclass(frozen=True)
class Verdict:
    """Outcome of checking one theorem instance.

    ``params`` and ``witness`` values are rendered as strings so that big
    integers survive JSON round trips exactly.
    """

    tag: str
    params: dict
    status: str
    witness: dict = field(default_factory=dict)
    suite: str = ""

    @classmethod
    def of(cls, tag: str, params: dict, ok: bool, **witness) -> "Verdict":
        return cls(tag, params, PASS if ok else FAIL, {k: _text(v) for k, v in witness.items()})

    @classmethod
    def skipped(cls, tag: str, params: dict, **witness) -> "Verdict":
        return cls(tag, params, SKIPPED, {k: _text(v) for k, v in witness.items()})

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def __bool__(self):
        return self.ok

    def with_suite(self, suite: str) -> "Verdict":
        return Verdict(self.tag, self.params, self.status, self.witness, suite)

    def sort_key(self):
        return (self.suite, self.tag, tuple(_param_key(v) for v in self.params.values()))

    def to_json(self) -> str:
        record = {
            "suite": self.suite,
            "tag": self.tag,
            "params": {k: _text(v) for k, v in self.params.items()},
            "verdict": self.status,
            "witness": self.witness,
        }
        return json.dumps(record, ensure_ascii=False, sort_keys=False)

    def to_text(self) -> str:
        params = " ".join(f"{k}={_text(v)}" for k, v in self.params.items())
        line = f"{self.status:<7} {self.suite}/{self.tag} {params}".rstrip()
        if self.witness:
            line += "  [" + ", ".join(f"{k}={v}" for k, v in self.witness.items()) + "]"
        return line


def _param_key(v):
    if isinstance(v, int):
        return (0, v, "")
    return (1, 0, _text(v))


def all_ok(verdicts) -> bool:
    return all(v.ok for v in verdicts)
