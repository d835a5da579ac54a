import json
import random
from dataclasses import replace
from itertools import product

import pytest

from oracles import brute_cfact, brute_lz77, brute_lzend, key
from pdlz.errors import ResourceLimitError, StructuralError
from pdlz.factor import (
    Factorization,
    Phrase,
    Scheme,
    SourceRef,
    cfact,
    decode,
    lz77,
    lzend,
    render_pipes,
    validate,
)
from pdlz.seqgen import pd_doubling

ENGINES = ["naive", "indexed"]
S4 = pd_doubling(4).seq
S5 = pd_doubling(5).seq
KN = b"abaababaabbabbaababa"  # LZ-End is not prefix-monotone on this string


@pytest.mark.parametrize("engine", ENGINES)
class TestGolden:
    def test_lz77(self, engine):
        assert render_pipes(lz77(S5, engine), S5) == "a|b|aa|abab|abaaabaa|abaaabababaaabab"
        assert lz77(S5, engine).lengths() == [1, 1, 2, 4, 8, 16]
        assert render_pipes(lz77(b"a", engine), b"a") == "a"
        assert render_pipes(lz77(b"aaaa", engine), b"aaaa") == "a|aa|a"

    def test_lzend(self, engine):
        assert render_pipes(lzend(S4, engine), S4) == "a|b|aa|aba|bab|aaabaa"
        assert render_pipes(lzend(S5, engine), S5) == "a|b|aa|aba|bab|aaabaa|abaaabababa|aabab"
        assert render_pipes(lzend(KN, engine), KN) == "a|b|aa|ba|baab|bab|baabab|a"
        assert render_pipes(lzend(KN + b"aba", engine), KN + b"aba") == "a|b|aa|ba|baab|bab|baababaaba"

    def test_cfact(self, engine):
        assert render_pipes(cfact(b"aaaa", engine), b"aaaa") == "a|a|aa"
        assert render_pipes(cfact(b"ab", engine), b"ab") == "a|b"
        assert render_pipes(cfact(b"abab", engine), b"abab") == "a|b|ab"

    def test_empty(self, engine):
        for fn in (lz77, lzend, cfact):
            f = fn(b"", engine)
            assert f.count == 0 and f.input_len == 0
            assert decode(f, b"") == b""

    def test_sources_s5(self, engine):
        f = lzend(S5, engine)
        assert [p.src.value for p in f.phrases] == [None, None, 0, 1, 3, 3, 4, 3]
        assert [p.has_sentinel for p in f.phrases] == [True] * 8


def test_final_phrase_exception():
    # "aa": the remainder "a" occurs in the prefix, so the last phrase has no sentinel
    f = lz77(b"aa")
    assert f.phrases[-1] == Phrase(1, 1, SourceRef.window(0), False)
    g = lzend(b"abab")
    assert g.phrases[-1] == Phrase(2, 2, SourceRef.boundary(1), False)


def test_oracles_agree_on_goldens():
    assert key(lzend(S5, "naive")) == brute_lzend(S5)
    assert key(lz77(S5, "naive")) == brute_lz77(S5)
    assert key(cfact(b"aaaa", "naive")) == brute_cfact(b"aaaa")


def _all_binary(max_len):
    for n in range(1, max_len + 1):
        for t in product(b"ab", repeat=n):
            yield bytes(t)


@pytest.mark.parametrize("engine", ENGINES)
def test_engines_match_brute_force_exhaustive(engine):
    for w in _all_binary(9):
        assert key(lz77(w, engine)) == brute_lz77(w), w
        assert key(lzend(w, engine)) == brute_lzend(w), w
        assert key(cfact(w, engine)) == brute_cfact(w), w


@pytest.mark.parametrize("engine", ENGINES)
def test_engines_match_brute_force_random_ternary(engine):
    rng = random.Random(7)
    for _ in range(300):
        w = bytes(rng.choices(b"abc", k=rng.randint(1, 30)))
        assert key(lz77(w, engine)) == brute_lz77(w), w
        assert key(lzend(w, engine)) == brute_lzend(w), w
        assert key(cfact(w, engine)) == brute_cfact(w), w


def test_engine_equivalence_exhaustive_12():
    for w in _all_binary(12):
        for fn in (lz77, lzend, cfact):
            assert key(fn(w, "naive")) == key(fn(w, "indexed")), w


def test_dominance_exhaustive_14():
    for w in _all_binary(14):
        assert lzend(w).count >= lz77(w).count, w


def test_arbitrary_bytes():
    w = bytes(range(256)) * 3 + b"\x00\xff\x00"
    for fn in (lz77, lzend, cfact):
        f = fn(w)
        assert key(f) == key(fn(w, "naive"))
        assert decode(f, w) == w


def test_naive_guard():
    with pytest.raises(ResourceLimitError):
        lz77(b"a" * 70000, "naive")


def test_unknown_engine():
    with pytest.raises(ValueError):
        lz77(b"ab", "suffix-tree")


class TestDecode:
    def test_round_trip(self):
        for fn in (lz77, lzend, cfact):
            assert decode(fn(S5), S5) == S5

    def test_boundary_past_phrase_start(self):
        f = lzend(S5)
        bad = list(f.phrases)
        bad[4] = replace(bad[4], src=SourceRef.boundary(4))
        with pytest.raises(StructuralError) as exc:
            decode(replace(f, phrases=tuple(bad)), S5)
        assert exc.value.phrase_index == 4

    def test_overlapping_window(self):
        f = lz77(S5)
        bad = list(f.phrases)
        bad[3] = replace(bad[3], src=SourceRef.window(2))  # copy of 3 bytes would run into the phrase
        with pytest.raises(StructuralError) as exc:
            decode(replace(f, phrases=tuple(bad)), S5)
        assert exc.value.phrase_index == 3

    def test_gap(self):
        f = lz77(S5)
        with pytest.raises(StructuralError):
            decode(replace(f, phrases=f.phrases[:-1]), S5)
        bad = list(f.phrases)
        bad[2] = replace(bad[2], start=3)
        with pytest.raises(StructuralError) as exc:
            decode(replace(f, phrases=tuple(bad)), S5)
        assert exc.value.phrase_index == 2

    def test_render_pipes_tiling_mismatch(self):
        with pytest.raises(StructuralError):
            render_pipes(lz77(S5), S5 + b"a")


class TestValidate:
    @pytest.mark.parametrize("fn", [lz77, lzend, cfact])
    def test_self_consistent(self, fn):
        for w in (S5, KN, KN + b"aba", b"aaaa", b"abcabcabd"):
            rep = validate(fn(w), w)
            assert rep.ok, rep.to_text()

    def test_lz77_phrases_are_hatted_prefixes(self):
        f = lz77(S5)
        assert validate(f, S5).ok
        assert f.lengths() == [1, 1, 2, 4, 8, 16]

    def _lengthen(self, f, idx):
        ph = list(f.phrases)
        ph[idx] = replace(ph[idx], length=ph[idx].length + 1)
        nxt = ph[idx + 1]
        ph[idx + 1] = replace(nxt, start=nxt.start + 1, length=nxt.length - 1)
        return replace(f, phrases=tuple(ph))

    @pytest.mark.parametrize("fn, idx", [(lz77, 3), (lzend, 5), (lzend, 4)])
    def test_lengthened_phrase_flagged(self, fn, idx):
        f = fn(S5)
        rep = validate(self._lengthen(f, idx), S5)
        assert not rep.ok
        bad = {(c.name, c.subject) for c in rep.failures()}
        assert ("greedy_longest", idx) in bad
        assert rep.first_failure["subject"] == idx

    def test_shortened_phrase_flagged(self):
        f = lzend(S5)
        ph = list(f.phrases)
        # split phrase 6 (abaaabababa) after its first byte; the first part is no longer greedy
        p = ph[6]
        ph[6:7] = [Phrase(p.start, 1, SourceRef.none(), True), Phrase(p.start + 1, p.length - 1, SourceRef.none(), True)]
        rep = validate(replace(f, phrases=tuple(ph)), S5)
        assert not rep.ok

    def test_overlong_source_reports_structure(self):
        f = lz77(S5)
        ph = list(f.phrases)
        ph[2] = replace(ph[2], src=SourceRef.window(5))
        rep = validate(replace(f, phrases=tuple(ph)), S5)
        assert [c.name for c in rep.failures()] == ["structure"]


class TestSerialization:
    @pytest.mark.parametrize("fn", [lz77, lzend, cfact])
    def test_json_round_trip(self, fn):
        f = fn(S5)
        doc = json.loads(f.to_json())
        assert doc["index_base"] == 0
        assert doc["count"] == len(doc["phrases"]) == f.count
        assert set(doc["phrases"][0]) == {"start", "len", "src_kind", "src_value", "has_sentinel"}
        assert Factorization.from_json(f.to_json()) == f

    def test_count_mismatch_rejected(self):
        doc = lz77(S5).to_dict()
        doc["count"] = 99
        with pytest.raises(ValueError):
            Factorization.from_dict(doc)

    def test_scheme_tag(self):
        assert lz77(S5).scheme is Scheme.LZ77
        assert lzend(S5).to_dict()["scheme"] == "LZEND"
