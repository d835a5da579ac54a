from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum


class Scheme(str, Enum):
    LZ77 = "LZ77"
    LZEND = "LZEND"
    CFACT = "CFACT"


class SrcKind(str, Enum):
    NONE = "none"
    WINDOW = "window"  # value: start position of the copied text
    BOUNDARY = "boundary"  # value: index of the earlier phrase the copy ends with


@dataclass(frozen=True)
class SourceRef:
    kind: SrcKind = SrcKind.NONE
    value: int | None = None

    @classmethod
    def none(cls) -> "SourceRef":
        return cls(SrcKind.NONE, None)

    @classmethod
    def window(cls, start: int) -> "SourceRef":
        return cls(SrcKind.WINDOW, int(start))

    @classmethod
    def boundary(cls, j: int) -> "SourceRef":
        return cls(SrcKind.BOUNDARY, int(j))


@dataclass(frozen=True)
class Phrase:
    start: int
    length: int
    src: SourceRef
    has_sentinel: bool = True

    @property
    def end(self) -> int:
        return self.start + self.length

    @property
    def copy_len(self) -> int:
        """Number of leading characters taken from the source."""
        return self.length - 1 if self.has_sentinel else self.length


@dataclass(frozen=True)
class Factorization:
    scheme: Scheme
    phrases: tuple[Phrase, ...]
    input_len: int
    engine: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "scheme", Scheme(self.scheme))
        object.__setattr__(self, "phrases", tuple(self.phrases))

    def __len__(self) -> int:
        return len(self.phrases)

    @property
    def count(self) -> int:
        return len(self.phrases)

    def lengths(self) -> list[int]:
        return [p.length for p in self.phrases]

    def boundaries(self) -> list[int]:
        """Exclusive end position of every phrase."""
        return [p.end for p in self.phrases]

    def texts(self, w: bytes) -> list[bytes]:
        return [w[p.start : p.end] for p in self.phrases]

    def to_dict(self) -> dict:
        return {
            "index_base": 0,
            "scheme": self.scheme.value,
            "input_len": self.input_len,
            "count": self.count,
            "phrases": [
                {
                    "start": p.start,
                    "len": p.length,
                    "src_kind": p.src.kind.value,
                    "src_value": p.src.value,
                    "has_sentinel": p.has_sentinel,
                }
                for p in self.phrases
            ],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, d: dict) -> "Factorization":
        if d.get("index_base", 0) != 0:
            raise ValueError("only 0-based factorization documents are supported")
        phrases = [
            Phrase(
                int(p["start"]),
                int(p["len"]),
                SourceRef(SrcKind(p["src_kind"]), p["src_value"]),
                bool(p["has_sentinel"]),
            )
            for p in d["phrases"]
        ]
        f = cls(Scheme(d["scheme"]), tuple(phrases), int(d["input_len"]))
        if "count" in d and d["count"] != f.count:
            raise ValueError(f"count field {d['count']} disagrees with {f.count} phrases")
        return f

    @classmethod
    def from_json(cls, s: str) -> "Factorization":
        return cls.from_dict(json.loads(s))
