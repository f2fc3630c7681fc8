"""Streaming engine driven by the pattern's factor automaton.

The dynamic-programming engine stores, for each recent text column, the
family of sets {i : F[i,j] >= k}.  Those sets never need to be stored:
if the longest pattern factor ending at text position j has length l_j
and automaton state q_j, then for k <= l_j the set equals the
end-position mask of the suffix-path ancestor of q_j covering length k
(see :func:`translocsearch.dawg.suffix_state`), and it is empty for
k > l_j.

So the engine keeps only the last m+1 (state, length) pairs and the last
m+1 prefix sets P_j, and evaluates the translocation condition by walking
suffix links while h and k count down, one hop per length unit.  Working
memory is O(m^2) regardless of text length, and the text is consumed
strictly left to right, one symbol at a time.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .dawg import Dawg, ScanConfig, advance_with_hops, build_dawg, suffix_state
from .seqcore import MatchReport, Sequence


@dataclass
class OpCounter:
    """Work counters for one search stream.

    delta_steps       improved-suffix-link hops while updating the scan
                      configuration
    suffix_hops       suffix-link hops taken by the countdown walks of the
                      translocation loops
    inner_iterations  prefix-set members examined by the innermost loop,
                      i.e. iterations of the (h, k, i) triple loop
    endpos_queries    end-position membership tests (the second test of a
                      pair runs only when the first passed)
    insertions        prefix-set insertions, extensions included
    """

    delta_steps: int = 0
    suffix_hops: int = 0
    inner_iterations: int = 0
    endpos_queries: int = 0
    insertions: int = 0


class SearchState:
    """One search stream: ring buffers of recent configurations and prefix
    sets, plus the work counters.

    Prefix sets are bitmasks over 0..m with bit 0 permanently set: it is
    the empty-prefix sentinel that seeds both the extension rule and the
    recursive part of the translocation rule.
    """

    def __init__(self, pattern: Sequence, dawg: Dawg | None = None):
        m = pattern.length
        if m == 0:
            raise ValueError("empty pattern")
        self.m = m
        self.dawg = dawg if dawg is not None else build_dawg(pattern)
        self.ext_masks = pattern.symbol_masks()
        self.cap = m + 1
        self.pos = 0
        self.configs: list[ScanConfig] = [ScanConfig(0, 0)] * self.cap
        self.prefix_sets: list[int] = [1] + [0] * m
        self.counter = OpCounter()

    def step(self, code: int) -> bool:
        """Consume one text symbol; true iff the whole pattern matches at
        the new position.

        The translocation loops run h from l_j down to 1 and k from
        l_{j-h} down to 1, carrying the suffix-path states incrementally:
        u is stepped to its suffix link exactly when h sinks to the link's
        length, so u always covers length h (and p length k) at O(1)
        amortized cost.  Pairs with h+k > m cannot insert a position
        <= m and would reach columns older than the ring holds, so their
        inner loop is skipped.
        """
        d = self.dawg
        cnt = self.counter
        cap = self.cap
        configs = self.configs
        psets = self.prefix_sets
        m = self.m
        endpos = d.endpos
        link_len = d.link_len
        suf = d.suf

        j = self.pos + 1
        prev = configs[(j - 1) % cap]
        config, hops = advance_with_hops(d, prev.state, prev.length, code)
        cnt.delta_steps += hops

        ext = (psets[(j - 1) % cap] << 1) & self.ext_masks.get(code, 0)
        cnt.insertions += ext.bit_count()
        pj = 1 | ext

        u = config.state
        for h in range(config.length, 0, -1):
            if link_len[u] == h:
                u = suf[u]
                cnt.suffix_hops += 1
            jh = j - h
            p = configs[jh % cap]
            v = p.state
            ep_u = endpos[u]
            for k in range(p.length, 0, -1):
                if link_len[v] == k:
                    v = suf[v]
                    cnt.suffix_hops += 1
                if h + k > m or jh - k < 0:
                    continue
                pold = psets[(jh - k) % cap]
                members = pold.bit_count()
                cnt.inner_iterations += members
                cnt.endpos_queries += members
                t = (pold << h) & ep_u
                cnt.endpos_queries += t.bit_count()
                add = (t << k) & endpos[v]
                if add:
                    cnt.insertions += add.bit_count()
                    pj |= add

        configs[j % cap] = config
        psets[j % cap] = pj
        self.pos = j
        return (pj >> m) & 1 == 1

    # -- inspection; j is an absolute 1-based text position in the window --

    def _slot(self, j: int) -> int:
        if not self.pos - self.m <= j <= self.pos:
            raise IndexError(f"position {j} is outside the live window")
        return j % self.cap

    def config(self, j: int) -> ScanConfig:
        return self.configs[self._slot(j)]

    def prefix_set(self, j: int) -> int:
        return self.prefix_sets[self._slot(j)]

    def factor_end_set(self, j: int, k: int) -> int:
        """Bitmask of pattern positions where the length-k suffix of the
        text prefix ending at j occurs; empty when no factor that long
        ends there."""
        cfg = self.configs[self._slot(j)]
        if k < 1 or k > cfg.length:
            return 0
        return self.dawg.endpos[suffix_state(self.dawg, cfg.state, k)]

    def footprint(self) -> dict[str, int]:
        """Sizes of the live auxiliary structures.

        Every prefix set and end-position mask is bounded to m+1 bits by
        construction (positions 0..m), so the counts reported here are the
        whole working memory; nothing grows with the text.
        """
        width = self.m + 1
        return {
            "config_slots": len(self.configs),
            "prefix_slots": len(self.prefix_sets),
            "prefix_bits": len(self.prefix_sets) * width,
            "dawg_states": self.dawg.state_count,
            "endpos_bits": self.dawg.state_count * width,
        }


def automaton_search(
    pattern: Sequence,
    text: Sequence | Iterable[int],
    dawg: Dawg | None = None,
) -> tuple[MatchReport, OpCounter]:
    """Run a full search over ``text``, which may be a coded Sequence or
    any iterable of symbol codes (streams are consumed incrementally)."""
    state = SearchState(pattern, dawg)
    codes = text.codes if isinstance(text, Sequence) else text
    hits = []
    step = state.step
    for j, code in enumerate(codes, start=1):
        if step(code):
            hits.append(j)
    return MatchReport(tuple(hits)), state.counter
