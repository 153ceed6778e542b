#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace percmap {

// Lattice walk with steps a = (1,0), b = (0,1), c = (-1,-1), stored 2 bits
// per step. Steps are 1-based (step(1) is the first step), positions are
// 0-based (position 0 is the start point (start_l, start_r)), so position i
// is the point reached after step i.
enum Step : std::uint8_t { StepA = 0, StepB = 1, StepC = 2 };

inline int dl_of(Step s) { return s == StepA ? 1 : (s == StepC ? -1 : 0); }
inline int dr_of(Step s) { return s == StepB ? 1 : (s == StepC ? -1 : 0); }
inline char letter_of(Step s) { return s == StepA ? 'a' : (s == StepB ? 'b' : 'c'); }

struct Walk {
    std::int32_t start_l = 0;
    std::int32_t start_r = 0;
    std::int32_t n_steps = 0;
    std::vector<std::uint8_t> packed;

    Walk() = default;
    Walk(std::int32_t l, std::int32_t r) : start_l(l), start_r(r) {}

    static Walk from_word(std::int32_t l, std::int32_t r, std::string_view word);

    Step step(std::int32_t i) const {  // i in [1, n_steps]
        assert(i >= 1 && i <= n_steps);
        std::uint32_t k = static_cast<std::uint32_t>(i - 1);
        return static_cast<Step>((packed[k >> 2] >> ((k & 3u) * 2)) & 3u);
    }

    void push(Step s) {
        std::uint32_t k = static_cast<std::uint32_t>(n_steps);
        if ((k & 3u) == 0) packed.push_back(0);
        packed.back() |= static_cast<std::uint8_t>(s) << ((k & 3u) * 2);
        ++n_steps;
    }

    std::string word() const;

    // Position after step i; O(i), for bulk use positions().
    std::pair<std::int32_t, std::int32_t> position(std::int32_t i) const;

    bool operator==(const Walk& o) const {
        return start_l == o.start_l && start_r == o.start_r && n_steps == o.n_steps &&
               word() == o.word();
    }
};

struct Positions {
    std::vector<std::int32_t> l, r;  // indexed by position 0..n_steps
};
Positions positions(const Walk& w);

// Parenthesis matching of the two coordinate processes. For an a-step i, its
// L-match is the first later step bringing L back to its value before i
// (necessarily a c-step), or 0 if L never returns; symmetrically b-steps
// have R-matches. Stored inverse as well: for a c-step j, lmatch[j] is the
// a-step it closes (0 if j is an L-record descent) and rmatch[j] the b-step
// it closes. Defined for arbitrary words, not just exploration words.
struct StepMatch {
    std::vector<std::int32_t> lmatch, rmatch;  // size n_steps + 1, index 0 unused
};
StepMatch match_steps(const Walk& w);

// g(j) for a c-step j: the latest step index among its two matches, with a
// missing match counting as 0. The time j then covers exactly the times
// p >= g(j) before it, in the sense that L and R stay above their time-j
// values throughout [p, j-1]. g is the whole ancestor order: j is an
// ancestor of p iff j is a c-step with p < j and g(j) <= p.
inline std::int32_t g_of(const StepMatch& m, std::int32_t j) {
    std::int32_t a = m.lmatch[j], b = m.rmatch[j];
    return a > b ? a : b;
}

// First-ancestor queries: min-g segment tree over c-steps.
struct AncestorIndex {
    std::int32_t n = 0;
    std::int32_t base = 1;
    std::vector<std::int32_t> tree;  // min over leaves; non-c steps hold INT32_MAX

    AncestorIndex(const Walk& w, const StepMatch& m);

    // Smallest c-step j with j > after and g(j) <= thresh, or 0 if none.
    std::int32_t first_at_or_below(std::int32_t after, std::int32_t thresh) const;
};

// A(p): first ancestor of time p (0 if none).
inline std::int32_t first_ancestor(const AncestorIndex& ai, std::int32_t p) {
    return ai.first_at_or_below(p, p);
}

// Times i in [0, m] with no ancestor inside (i, m]; increasing.
std::vector<std::int32_t> ancestor_free_times(const Walk& w, const StepMatch& m,
                                              std::int32_t upto);

// Successive ancestors of i that are <= stop: the increasing chain of
// c-steps j with g(j) <= i, starting after i.
std::vector<std::int32_t> successive_ancestors(const AncestorIndex& ai, std::int32_t i,
                                               std::int32_t stop);

// An exploration word ends at (-1,-1) and its first doubly-unmatched c-step
// (g = 0, a simultaneous record descent of L and R) is its last step. These
// are exactly the walks arising from exploring a colored triangulation whose
// boundary splits as (start_l, start_r).
bool is_exploration_word(const Walk& w);

// One peel step at the word level. For a word of length > 1, either the
// whole tail after step 1 is a single exploration word (no split), or the
// tail factors as the word of a piece cut off at a boundary vertex followed
// by the word of the rest. upsilon is the end of the first factor: the
// first time in [2, n] that is an ancestor of time 1.
struct PeelWord {
    bool split = false;
    std::int32_t upsilon = 0;
    Walk continued;  // no split: steps 2..n; split: steps upsilon+1..n
    Walk split_off;  // split only: steps 2..upsilon as a standalone word
};
PeelWord peel_word(const Walk& w);

}  // namespace percmap
