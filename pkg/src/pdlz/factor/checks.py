"""Decoding, pipe rendering and definition-level validation of factorizations."""

from __future__ import annotations

from pdlz.errors import StructuralError
from pdlz.factor.naive import longest_boundary_suffix, longest_previous
from pdlz.factor.types import Factorization, Scheme, SrcKind
from pdlz.report import VerificationReport


def decode(f: Factorization, w: bytes) -> bytes:
    """Rebuild the text from sources, taking only sentinel letters from ``w``."""
    if f.input_len != len(w):
        raise StructuralError(f"factorization covers {f.input_len} bytes, text has {len(w)}")
    out = bytearray()
    ends: list[int] = []
    for idx, p in enumerate(f.phrases):
        if p.start != len(out):
            raise StructuralError(f"phrase {idx} starts at {p.start}, expected {len(out)}", idx)
        if p.length < 1 or p.end > f.input_len:
            raise StructuralError(f"phrase {idx} has bad extent [{p.start}, {p.end})", idx)
        cl = p.copy_len
        kind, v = p.src.kind, p.src.value
        if kind is SrcKind.NONE:
            if cl != 0:
                raise StructuralError(f"phrase {idx} copies {cl} bytes without a source", idx)
        elif kind is SrcKind.WINDOW:
            if v is None or v < 0 or v + cl > p.start:
                raise StructuralError(f"phrase {idx}: window source {v} (+{cl}) not inside the prefix", idx)
            out += out[v : v + cl]
        elif kind is SrcKind.BOUNDARY:
            if v is None or not 0 <= v < idx:
                raise StructuralError(f"phrase {idx}: boundary source {v} is not an earlier phrase", idx)
            e = ends[v]
            if e - cl < 0:
                raise StructuralError(f"phrase {idx}: {cl} bytes do not fit before boundary {e}", idx)
            out += out[e - cl : e]
        if p.has_sentinel:
            out.append(w[p.end - 1])
        ends.append(p.end)
    if len(out) != f.input_len:
        raise StructuralError(f"phrases cover {len(out)} of {f.input_len} bytes", len(f.phrases))
    return bytes(out)


def render_pipes(f: Factorization, w: bytes) -> str:
    """Phrase texts joined by ``|``, e.g. ``a|b|aa|aba``."""
    pos = 0
    for idx, p in enumerate(f.phrases):
        if p.start != pos or p.length < 1:
            raise StructuralError(f"phrase {idx} does not continue the tiling at {pos}", idx)
        pos = p.end
    if pos != len(w) or f.input_len != len(w):
        raise StructuralError(f"phrases cover {pos} bytes, text has {len(w)}")
    return "|".join(w[p.start : p.end].decode("latin-1") for p in f.phrases)


def _longest_valid(f: Factorization, w: bytes, idx: int, ends: list[int]) -> int:
    i = f.phrases[idx].start
    cap = longest_previous(w, i)[0]
    if f.scheme is Scheme.LZEND:
        return longest_boundary_suffix(w, i, ends[:idx], cap)[0]
    return cap


def validate(f: Factorization, w: bytes) -> VerificationReport:
    """Check tiling, every source, and greedy maximality of every phrase.

    Maximality means the copied part is exactly the longest admissible one:
    the longest prefix of the remainder found in the parsed prefix (LZ77,
    C-factorization) or ending at an earlier phrase boundary (LZ-End).
    """
    rep = VerificationReport(title=f"validate {f.scheme.value}")
    rep.meta["input_len"] = len(w)
    try:
        rec = decode(f, w)
    except StructuralError as exc:
        rep.add("structure", exc.phrase_index, "valid tiling", str(exc), False)
        return rep
    n = len(w)
    ends = f.boundaries()
    last = len(f.phrases) - 1
    for idx, p in enumerate(f.phrases):
        cl = p.copy_len
        kind = p.src.kind
        if f.scheme is Scheme.CFACT:
            shape_ok = (kind is SrcKind.NONE and p.length == 1 and p.has_sentinel) or (
                kind is SrcKind.WINDOW and not p.has_sentinel
            )
        else:
            shape_ok = (kind is SrcKind.NONE) == (cl == 0) and (p.has_sentinel or idx == last)
            shape_ok = shape_ok and kind is not (SrcKind.BOUNDARY if f.scheme is Scheme.LZ77 else SrcKind.WINDOW)
        dump = {"phrase": idx, "start": p.start, "len": p.length, "src": [kind.value, p.src.value]}
        rep.add("phrase_shape", idx, True, shape_ok, shape_ok, dump)

        # source content, checked against the text itself rather than the decoder
        if kind is SrcKind.WINDOW:
            s = p.src.value
            ok = s + cl <= p.start and w[s : s + cl] == w[p.start : p.start + cl]
        elif kind is SrcKind.BOUNDARY:
            e = ends[p.src.value]
            ok = p.src.value < idx and e >= cl and w[e - cl : e] == w[p.start : p.start + cl]
        else:
            ok = cl == 0
        rep.add("source", idx, True, ok, ok, dump)

        longest = _longest_valid(f, w, idx, ends)
        if f.scheme is Scheme.CFACT:
            expected = longest
            measured = cl if kind is SrcKind.WINDOW else 0
        else:
            expected = longest
            measured = cl
            if not p.has_sentinel and p.end != n:
                measured = -1
        rep.add("greedy_longest", idx, expected, measured, expected == measured, dump)
        if not p.has_sentinel and f.scheme is not Scheme.CFACT:
            rep.add("final_exception", idx, n - p.start, longest, longest == n - p.start, dump)
    mismatch = next((i for i, (a, b) in enumerate(zip(rec, w)) if a != b), None)
    rep.add("round_trip", "text", None, mismatch, rec == w)
    return rep
