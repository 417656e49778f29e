"""Check results and their text / records renderings."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field

PASS, FAIL, INCONCLUSIVE, SKIPPED = "PASS", "FAIL", "INCONCLUSIVE", "SKIPPED"


def _plain(x):
    if isinstance(x, (tuple, list)):
        return [_plain(y) for y in x]
    if isinstance(x, (int, str, bool)) or x is None:
        return x
    return str(x)


@dataclass
class Check:
    name: str
    status: str
    expected: object = None
    computed: object = None
    seconds: float = 0.0
    note: str = ""


@dataclass
class Report:
    command: str
    checks: list = field(default_factory=list)
    info: list = field(default_factory=list)  # (key, value) lines shown above the checks

    def note(self, key: str, value) -> None:
        self.info.append((key, value))

    def add(self, name, ok: bool | None, expected=None, computed=None, note="", seconds=0.0, status=None) -> Check:
        if status is None:
            status = PASS if ok else FAIL
        c = Check(name, status, expected, computed, seconds, note)
        self.checks.append(c)
        return c

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    @contextmanager
    def timed(self):
        """Stamp the wall time of the enclosed block on the checks it adds."""
        start, n = time.perf_counter(), len(self.checks)
        yield
        elapsed = time.perf_counter() - start
        for c in self.checks[n:]:
            c.seconds = elapsed

    @property
    def failed(self) -> bool:
        return any(c.status == FAIL for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0

    def text(self, timing: bool = False) -> str:
        lines = [f"# {self.command}"]
        lines += [f"{k}: {_fmt(v)}" for k, v in self.info]
        for c in self.checks:
            line = f"{c.status:<12} {c.name}"
            if c.expected is not None:
                line += f"  expected={_fmt(c.expected)}"
            if c.computed is not None:
                line += f"  computed={_fmt(c.computed)}"
            if c.note:
                line += f"  ({c.note})"
            if timing:
                line += f"  [{c.seconds:.2f}s]"
            lines.append(line)
        counts = {s: sum(c.status == s for c in self.checks) for s in (PASS, FAIL, INCONCLUSIVE, SKIPPED)}
        if self.checks:
            lines.append("# " + ", ".join(f"{k.lower()}={v}" for k, v in counts.items()))
        return "\n".join(lines) + "\n"

    def records(self, timing: bool = False) -> str:
        out = [json.dumps({"command": self.command, "info": k, "value": _plain(v)}, sort_keys=True)
               for k, v in self.info]
        for c in self.checks:
            rec = asdict(c)
            rec["command"] = self.command
            rec["expected"] = _plain(c.expected)
            rec["computed"] = _plain(c.computed)
            if not timing:
                rec.pop("seconds")
            out.append(json.dumps(rec, sort_keys=True))
        return "\n".join(out) + ("\n" if out else "")


def _fmt(x) -> str:
    if isinstance(x, tuple):
        return "(" + ",".join(_fmt(y) for y in x) + ")"
    if isinstance(x, list):
        return "[" + ",".join(_fmt(y) for y in x) + "]"
    return str(x)
