"""Measured LZ77 / LZ-End factorizations of S_k against the closed forms."""

from __future__ import annotations

from fractions import Fraction

from pdlz import theory
from pdlz.config import DEFAULT_LIMITS, Limits
from pdlz.errors import DomainError, ResourceLimitError
from pdlz.factor import Factorization, lz77, lzend
from pdlz.report import VerificationReport
from pdlz.seqgen import hat, pd_doubling


def split_wxy(S: bytes, ze: Factorization, prev_count: int) -> tuple[bytes, bytes, bytes]:
    """(w_k, x_k, y_k) of S_k given its LZ-End parse and lzeph(S_{k-1})."""
    w = ze.phrases[prev_count - 1]
    x = ze.phrases[prev_count]
    return S[w.start : w.end], S[x.start : x.end], S[x.end :]


def verify_structure(
    k_min: int,
    k_max: int,
    engine: str = "indexed",
    *,
    limits: Limits = DEFAULT_LIMITS,
) -> VerificationReport:
    """Compare the factorizations of S_k, k in [k_min, k_max], with the predictions.

    Per k: the LZ77 phrase list is S_0, hat(S_0), ..., hat(S_{k-1}); the LZ-End
    phrase count is 2k - f(k); the first lzeph(S_{k-1}) - 1 phrases are shared
    with S_{k-1}; |w_k|, |x_k|, |y_k| match their formulas; a nonempty y_k is the
    final phrase; and the measured ratio equals the predicted one.
    """
    if k_min < theory.KSTAR_1 or k_min > k_max:
        raise DomainError(f"structure checks need {theory.KSTAR_1} <= k_min <= k_max, got [{k_min}, {k_max}]")
    if k_max > limits.max_k:
        raise ResourceLimitError(f"k_max={k_max} exceeds max_k={limits.max_k}")
    rep = VerificationReport(title=f"structure k={k_min}..{k_max} ({engine})")
    rep.meta.update(k_min=k_min, k_max=k_max, engine=engine)
    measured_ratios = {}

    prev_S = pd_doubling(k_min - 1).seq
    prev = lzend(prev_S, engine)
    for k in range(k_min, k_max + 1):
        S = pd_doubling(k).seq
        n = len(S)
        pred = theory.predicted_counts(k)

        lz = lz77(S, engine)
        expected_texts = [S[:1]] + [hat(S[: 2**i]) for i in range(k)]
        same = lz.lengths() == [len(t) for t in expected_texts] and all(
            S[p.start : p.end] == t for p, t in zip(lz.phrases, expected_texts)
        )
        rep.add("lz77_phrases", k, True, same, payload={"lengths": lz.lengths()})
        rep.add("lzph", k, pred.lzph, lz.count)

        ze = lzend(S, engine)
        dump = {"lzend_lengths": ze.lengths(), "prev_lengths": prev.lengths()}
        rep.add("lzeph", k, pred.lzeph, ze.count, payload=dump)
        rep.add("lzeph_step", k, 1 if theory.in_K(k + 1) else 2, ze.count - prev.count, payload=dump)

        shared = prev.count - 1
        key = [(p.start, p.length) for p in prev.phrases[:shared]]
        rep.add("prefix_stable", k, key, [(p.start, p.length) for p in ze.phrases[:shared]], payload=dump)
        rep.add("grows", k, True, ze.count >= prev.count + 1, payload=dump)

        if ze.count < shared + 2:
            rep.add("wxy_defined", k, True, False, payload=dump)
        else:
            w, x, y = split_wxy(S, ze, prev.count)
            last_prev = prev.phrases[-1]
            realigned = w == prev_S[last_prev.start : last_prev.end]
            rep.add("in_K", k, pred.in_K, realigned, payload=dump)
            rep.add("w_len", k, pred.w_len, len(w), payload=dump)
            rep.add("x_len", k, pred.x_len, len(x), payload=dump)
            rep.add("y_len", k, pred.y_len, len(y), payload=dump)
            rep.add("w_start", k, theory.covered_by_shared_phrases(k), ze.phrases[shared].start)
            rep.add("y_is_last", k, shared + (3 if y else 2), ze.count, payload=dump)
            rep.add("covering", k, n, ze.phrases[shared].start + len(w) + len(x) + len(y))

        measured_ratios[k] = Fraction(ze.count, lz.count)
        rep.add("ratio", k, theory.ratio(k), measured_ratios[k])
        prev_S, prev = S, ze
    rep.meta["measured_ratios"] = {k: str(v) for k, v in measured_ratios.items()}
    return rep


def ratio_table(k_min: int, k_max: int, source: str = "theory", engine: str = "indexed") -> list[tuple[int, int, int, Fraction]]:
    """Rows (k, z, z', z'/z) from closed forms or from running the factorizers."""
    if k_min < theory.KSTAR_1 or k_min > k_max:
        raise DomainError(f"ratio table needs {theory.KSTAR_1} <= k_min <= k_max, got [{k_min}, {k_max}]")
    rows = []
    for k in range(k_min, k_max + 1):
        if source == "theory":
            z, zp = theory.lzph(k), theory.lzeph(k)
        elif source == "measured":
            S = pd_doubling(k).seq
            z, zp = lz77(S, engine).count, lzend(S, engine).count
        else:
            raise ValueError(f"unknown source {source!r}")
        rows.append((k, z, zp, Fraction(zp, z)))
    return rows
