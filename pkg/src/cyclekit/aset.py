"""Sets of allowed cycle lengths.

A set is stored truncated to ``1..n_max`` together with the textual
descriptor it was built from, e.g. ``even``, ``div:3``, ``min:2``,
``set:1,4`` or ``~odd`` (complement).
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["CycleLengthSet", "make_aset", "complement_aset", "aset_from_members"]


@dataclass(frozen=True)
class CycleLengthSet:
    n_max: int
    member: tuple[bool, ...]
    descriptor: str

    def __post_init__(self):
        if len(self.member) != self.n_max:
            raise ValueError("member vector must have exactly n_max entries")

    def __contains__(self, r: int) -> bool:
        if not 1 <= r <= self.n_max:
            raise ValueError(f"cycle length {r} outside 1..{self.n_max}")
        return self.member[r - 1]

    def lengths(self, upto: int | None = None) -> list[int]:
        """Allowed lengths in increasing order, optionally capped at ``upto``."""
        top = self.n_max if upto is None else min(upto, self.n_max)
        return [r for r in range(1, top + 1) if self.member[r - 1]]

    def __str__(self) -> str:
        return self.descriptor


def _parse_positive(text: str, what: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise ValueError(f"{what} must be an integer, got {text!r}") from None
    if value < 1:
        raise ValueError(f"{what} must be >= 1, got {value}")
    return value


def make_aset(spec: str, n_max: int) -> CycleLengthSet:
    """Build a cycle-length set from its descriptor.

    >>> make_aset("even", 4).member
    (False, True, False, True)
    >>> make_aset("~min:2", 3).lengths()
    [1]
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    spec = spec.strip()
    if spec.startswith("~"):
        return complement_aset(make_aset(spec[1:], n_max))

    kind, _, arg = spec.partition(":")
    kind = kind.lower()
    rng = range(1, n_max + 1)
    if kind == "even" and not arg:
        member = [r % 2 == 0 for r in rng]
        canon = "even"
    elif kind == "odd" and not arg:
        member = [r % 2 == 1 for r in rng]
        canon = "odd"
    elif kind == "div":
        d = _parse_positive(arg, "divisor")
        member = [r % d == 0 for r in rng]
        canon = f"div:{d}"
    elif kind == "min":
        m = _parse_positive(arg, "minimum length")
        member = [r >= m for r in rng]
        canon = f"min:{m}"
    elif kind == "set":
        entries = sorted({_parse_positive(t, "set entry") for t in arg.split(",") if t.strip()})
        if entries and entries[-1] > n_max:
            raise ValueError(f"set entry {entries[-1]} exceeds n_max={n_max}")
        chosen = set(entries)
        member = [r in chosen for r in rng]
        canon = "set:" + ",".join(map(str, entries))
    else:
        raise ValueError(f"unrecognised cycle-length set {spec!r}")
    return CycleLengthSet(n_max, tuple(member), canon)


def complement_aset(a: CycleLengthSet) -> CycleLengthSet:
    inner = a.descriptor
    descriptor = inner[1:] if inner.startswith("~") else "~" + inner
    return CycleLengthSet(a.n_max, tuple(not m for m in a.member), descriptor)


def aset_from_members(lengths, n_max: int) -> CycleLengthSet:
    """Explicit set from an iterable of lengths."""
    return make_aset("set:" + ",".join(str(r) for r in sorted(set(lengths))), n_max)
