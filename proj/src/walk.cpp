#include "percmap/walk.hpp"

#include <climits>
#include <stdexcept>

namespace percmap {

Walk Walk::from_word(std::int32_t l, std::int32_t r, std::string_view word) {
    Walk w(l, r);
    w.packed.reserve(word.size() / 4 + 1);
    for (char ch : word) {
        switch (ch) {
            case 'a': w.push(StepA); break;
            case 'b': w.push(StepB); break;
            case 'c': w.push(StepC); break;
            default: throw std::invalid_argument("walk letters must be a, b, or c");
        }
    }
    return w;
}

std::string Walk::word() const {
    std::string s;
    s.reserve(static_cast<std::size_t>(n_steps));
    for (std::int32_t i = 1; i <= n_steps; ++i) s.push_back(letter_of(step(i)));
    return s;
}

std::pair<std::int32_t, std::int32_t> Walk::position(std::int32_t i) const {
    assert(i >= 0 && i <= n_steps);
    std::int32_t l = start_l, r = start_r;
    for (std::int32_t k = 1; k <= i; ++k) {
        Step s = step(k);
        l += dl_of(s);
        r += dr_of(s);
    }
    return {l, r};
}

Positions positions(const Walk& w) {
    Positions p;
    p.l.resize(static_cast<std::size_t>(w.n_steps) + 1);
    p.r.resize(static_cast<std::size_t>(w.n_steps) + 1);
    p.l[0] = w.start_l;
    p.r[0] = w.start_r;
    for (std::int32_t i = 1; i <= w.n_steps; ++i) {
        Step s = w.step(i);
        p.l[static_cast<std::size_t>(i)] = p.l[static_cast<std::size_t>(i) - 1] + dl_of(s);
        p.r[static_cast<std::size_t>(i)] = p.r[static_cast<std::size_t>(i) - 1] + dr_of(s);
    }
    return p;
}

StepMatch match_steps(const Walk& w) {
    StepMatch m;
    std::size_t sz = static_cast<std::size_t>(w.n_steps) + 1;
    m.lmatch.assign(sz, 0);
    m.rmatch.assign(sz, 0);
    std::vector<std::int32_t> astack, bstack;
    for (std::int32_t i = 1; i <= w.n_steps; ++i) {
        switch (w.step(i)) {
            case StepA: astack.push_back(i); break;
            case StepB: bstack.push_back(i); break;
            case StepC:
                if (!astack.empty()) {
                    m.lmatch[static_cast<std::size_t>(astack.back())] = i;
                    m.lmatch[static_cast<std::size_t>(i)] = astack.back();
                    astack.pop_back();
                }
                if (!bstack.empty()) {
                    m.rmatch[static_cast<std::size_t>(bstack.back())] = i;
                    m.rmatch[static_cast<std::size_t>(i)] = bstack.back();
                    bstack.pop_back();
                }
                break;
        }
    }
    return m;
}

AncestorIndex::AncestorIndex(const Walk& w, const StepMatch& m) {
    n = w.n_steps;
    base = 1;
    while (base < n + 1) base <<= 1;
    tree.assign(static_cast<std::size_t>(base) * 2, INT32_MAX);
    for (std::int32_t j = 1; j <= n; ++j)
        if (w.step(j) == StepC)
            tree[static_cast<std::size_t>(base + j - 1)] = g_of(m, j);
    for (std::int32_t v = base - 1; v >= 1; --v)
        tree[static_cast<std::size_t>(v)] =
            std::min(tree[static_cast<std::size_t>(v) * 2], tree[static_cast<std::size_t>(v) * 2 + 1]);
}

namespace {
// First leaf index >= from within node's range [lo, hi] whose value <= thresh.
std::int32_t seg_search(const std::vector<std::int32_t>& tree, std::int32_t node,
                        std::int32_t lo, std::int32_t hi, std::int32_t from,
                        std::int32_t thresh) {
    if (hi < from || tree[static_cast<std::size_t>(node)] > thresh) return 0;
    if (lo == hi) return lo;
    std::int32_t mid = lo + (hi - lo) / 2;
    std::int32_t left = seg_search(tree, node * 2, lo, mid, from, thresh);
    if (left) return left;
    return seg_search(tree, node * 2 + 1, mid + 1, hi, from, thresh);
}
}  // namespace

std::int32_t AncestorIndex::first_at_or_below(std::int32_t after, std::int32_t thresh) const {
    if (after >= n) return 0;
    std::int32_t j = seg_search(tree, 1, 1, base, after + 1, thresh);
    return j > n ? 0 : j;
}

std::vector<std::int32_t> ancestor_free_times(const Walk& w, const StepMatch& m,
                                              std::int32_t upto) {
    assert(upto >= 0 && upto <= w.n_steps);
    std::vector<std::int32_t> out;
    std::vector<std::uint8_t> free(static_cast<std::size_t>(upto) + 1, 0);
    std::int32_t ming = INT32_MAX;
    for (std::int32_t i = upto; i >= 0; --i) {
        free[static_cast<std::size_t>(i)] = ming > i;
        if (i >= 1 && w.step(i) == StepC) ming = std::min(ming, g_of(m, i));
    }
    for (std::int32_t i = 0; i <= upto; ++i)
        if (free[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

std::vector<std::int32_t> successive_ancestors(const AncestorIndex& ai, std::int32_t i,
                                               std::int32_t stop) {
    std::vector<std::int32_t> out;
    std::int32_t j = ai.first_at_or_below(i, i);
    while (j != 0 && j <= stop) {
        out.push_back(j);
        j = ai.first_at_or_below(j, i);
    }
    return out;
}

bool is_exploration_word(const Walk& w) {
    if (w.n_steps < 1) return false;
    StepMatch m = match_steps(w);
    std::int32_t l = w.start_l, r = w.start_r, firstzero = 0;
    for (std::int32_t i = 1; i <= w.n_steps; ++i) {
        Step s = w.step(i);
        l += dl_of(s);
        r += dr_of(s);
        if (s == StepC && firstzero == 0 && g_of(m, i) == 0) firstzero = i;
    }
    return l == -1 && r == -1 && firstzero == w.n_steps;
}

namespace {
Walk slice(const Walk& w, std::int32_t from, std::int32_t to, std::int32_t l,
           std::int32_t r) {
    Walk out(l, r);
    for (std::int32_t i = from; i <= to; ++i) out.push(w.step(i));
    return out;
}
}  // namespace

PeelWord peel_word(const Walk& w) {
    assert(w.n_steps >= 2);
    StepMatch m = match_steps(w);
    PeelWord out;
    // First ancestor of time 1: first c-step j >= 2 with g(j) <= 1.
    std::int32_t ups = 0;
    for (std::int32_t j = 2; j <= w.n_steps; ++j)
        if (w.step(j) == StepC && g_of(m, j) <= 1) {
            ups = j;
            break;
        }
    assert(ups != 0);
    out.upsilon = ups;
    Positions p = positions(w);
    auto lat = [&](std::int32_t i) { return p.l[static_cast<std::size_t>(i)]; };
    auto rat = [&](std::int32_t i) { return p.r[static_cast<std::size_t>(i)]; };
    if (ups == w.n_steps) {
        out.split = false;
        out.continued = slice(w, 2, w.n_steps, lat(1), rat(1));
    } else {
        out.split = true;
        out.split_off = slice(w, 2, ups, lat(1) - lat(ups) - 1, rat(1) - rat(ups) - 1);
        assert(out.split_off.start_l == 0 || out.split_off.start_r == 0);
        out.continued = slice(w, ups + 1, w.n_steps, lat(ups), rat(ups));
    }
    return out;
}

}  // namespace percmap
