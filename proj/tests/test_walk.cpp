#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <climits>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "percmap/rng.hpp"
#include "percmap/walk.hpp"

using namespace percmap;

namespace {

Walk random_word(Rng& rng, std::int32_t l, std::int32_t r, std::int32_t len) {
    Walk w(l, r);
    for (std::int32_t i = 0; i < len; ++i) w.push(static_cast<Step>(rng.next_trit()));
    return w;
}

// All words of exactly len letters from (l, r), mapped through fn.
template <typename F>
void for_all_words(std::int32_t l, std::int32_t r, std::int32_t len, F&& fn) {
    std::uint64_t total = 1;
    for (std::int32_t i = 0; i < len; ++i) total *= 3;
    std::string word(static_cast<std::size_t>(len), 'a');
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (std::int32_t i = 0; i < len; ++i) {
            word[static_cast<std::size_t>(i)] = "abc"[c % 3];
            c /= 3;
        }
        fn(Walk::from_word(l, r, word));
    }
}

}  // namespace

TEST_CASE("word packing round trip") {
    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        Walk w = random_word(rng, 0, 0, 1 + static_cast<std::int32_t>(rng.next_below(200)));
        CHECK(Walk::from_word(0, 0, w.word()) == w);
    }
    CHECK(Walk::from_word(2, 1, "abc").word() == "abc");
    CHECK_THROWS(Walk::from_word(0, 0, "abd"));
}

TEST_CASE("positions agree with single position scan") {
    Rng rng(8);
    Walk w = random_word(rng, 3, 2, 120);
    Positions p = positions(w);
    for (std::int32_t i = 0; i <= w.n_steps; ++i) {
        auto [l, r] = w.position(i);
        CHECK(p.l[static_cast<std::size_t>(i)] == l);
        CHECK(p.r[static_cast<std::size_t>(i)] == r);
    }
}

TEST_CASE("frozen small word families") {
    CHECK(oracle::enumerate_words_brute(0, 0, 1) == std::vector<std::string>{"c"});
    CHECK(oracle::enumerate_words_brute(0, 0, 2).empty());
    CHECK(oracle::enumerate_words_brute(0, 0, 3).empty());
    CHECK(oracle::enumerate_words_brute(0, 0, 4) ==
          std::vector<std::string>{"abcc", "bacc"});
    CHECK(oracle::enumerate_words_brute(1, 0, 3) == std::vector<std::string>{"bcc"});
    CHECK(oracle::enumerate_words_brute(0, 1, 3) == std::vector<std::string>{"acc"});
    // Words from (0,0) have length 1 mod 3.
    CHECK(oracle::enumerate_words_brute(0, 0, 5).empty());
    CHECK(oracle::enumerate_words_brute(0, 0, 6).empty());
    CHECK(oracle::enumerate_words_brute(0, 0, 7).size() == 16);
}

TEST_CASE("matching agrees with definitional matching") {
    auto check_walk = [](const Walk& w) {
        StepMatch m = match_steps(w);
        for (std::int32_t i = 1; i <= w.n_steps; ++i) {
            if (w.step(i) == StepA) {
                CHECK(m.lmatch[static_cast<std::size_t>(i)] == oracle::lmatch_of_a(w, i));
                CHECK(m.rmatch[static_cast<std::size_t>(i)] == 0);
            } else if (w.step(i) == StepB) {
                CHECK(m.rmatch[static_cast<std::size_t>(i)] == oracle::rmatch_of_b(w, i));
                CHECK(m.lmatch[static_cast<std::size_t>(i)] == 0);
            } else {
                // Inverse tables: the a/b step a c-step closes points back.
                std::int32_t a = m.lmatch[static_cast<std::size_t>(i)];
                std::int32_t b = m.rmatch[static_cast<std::size_t>(i)];
                if (a) CHECK(m.lmatch[static_cast<std::size_t>(a)] == i);
                if (b) CHECK(m.rmatch[static_cast<std::size_t>(b)] == i);
            }
        }
    };
    for_all_words(0, 0, 6, check_walk);
    for_all_words(2, 1, 5, check_walk);
    Rng rng(9);
    for (int t = 0; t < 100; ++t)
        check_walk(random_word(rng, static_cast<std::int32_t>(rng.next_below(3)),
                               static_cast<std::int32_t>(rng.next_below(3)), 300));
}

TEST_CASE("g encodes the ancestor order") {
    auto check_walk = [](const Walk& w) {
        StepMatch m = match_steps(w);
        for (std::int32_t j = 1; j <= w.n_steps; ++j) {
            for (std::int32_t i = 0; i < j; ++i) {
                bool anc = w.step(j) == StepC && g_of(m, j) <= i;
                CHECK(anc == oracle::is_ancestor(w, j, i));
            }
        }
    };
    for_all_words(0, 0, 7, check_walk);
    for_all_words(1, 2, 5, check_walk);
    Rng rng(10);
    for (int t = 0; t < 40; ++t)
        check_walk(random_word(rng, static_cast<std::int32_t>(rng.next_below(4)),
                               static_cast<std::int32_t>(rng.next_below(4)), 60));
}

TEST_CASE("first ancestor queries match linear scans") {
    Rng rng(11);
    for (int t = 0; t < 60; ++t) {
        Walk w = random_word(rng, 1, 1, 1 + static_cast<std::int32_t>(rng.next_below(250)));
        StepMatch m = match_steps(w);
        AncestorIndex ai(w, m);
        for (int q = 0; q < 50; ++q) {
            std::int32_t after = static_cast<std::int32_t>(rng.next_below(
                static_cast<std::uint64_t>(w.n_steps) + 1));
            std::int32_t thresh = static_cast<std::int32_t>(rng.next_below(
                static_cast<std::uint64_t>(w.n_steps) + 2)) - 1;
            std::int32_t expect = 0;
            for (std::int32_t j = after + 1; j <= w.n_steps; ++j)
                if (w.step(j) == StepC && g_of(m, j) <= thresh) {
                    expect = j;
                    break;
                }
            CHECK(ai.first_at_or_below(after, thresh) == expect);
        }
        for (std::int32_t p = 0; p <= std::min<std::int32_t>(w.n_steps, 40); ++p) {
            std::int32_t expect = 0;
            for (std::int32_t j = p + 1; j <= w.n_steps; ++j)
                if (oracle::is_ancestor(w, j, p)) {
                    expect = j;
                    break;
                }
            CHECK(first_ancestor(ai, p) == expect);
        }
    }
}

TEST_CASE("successive ancestors walk the whole chain") {
    Rng rng(12);
    for (int t = 0; t < 60; ++t) {
        Walk w = random_word(rng, 2, 2, 1 + static_cast<std::int32_t>(rng.next_below(120)));
        StepMatch m = match_steps(w);
        AncestorIndex ai(w, m);
        std::int32_t i = static_cast<std::int32_t>(rng.next_below(
            static_cast<std::uint64_t>(w.n_steps)));
        std::int32_t stop = i + static_cast<std::int32_t>(rng.next_below(
            static_cast<std::uint64_t>(w.n_steps - i) + 1));
        std::vector<std::int32_t> expect;
        for (std::int32_t j = i + 1; j <= stop; ++j)
            if (oracle::is_ancestor(w, j, i)) expect.push_back(j);
        CHECK(successive_ancestors(ai, i, stop) == expect);
    }
}

TEST_CASE("ancestor free times match the definition") {
    Rng rng(13);
    for (int t = 0; t < 80; ++t) {
        Walk w = random_word(rng, 1, 2, 1 + static_cast<std::int32_t>(rng.next_below(90)));
        StepMatch m = match_steps(w);
        std::int32_t upto = static_cast<std::int32_t>(rng.next_below(
            static_cast<std::uint64_t>(w.n_steps) + 1));
        std::vector<std::int32_t> expect;
        for (std::int32_t i = 0; i <= upto; ++i)
            if (oracle::ancestor_free(w, i, upto)) expect.push_back(i);
        CHECK(ancestor_free_times(w, m, upto) == expect);
    }
}

TEST_CASE("exploration word test agrees with definition") {
    auto check_walk = [](const Walk& w) {
        CHECK(is_exploration_word(w) == oracle::is_exploration_word(w));
    };
    for_all_words(0, 0, 7, check_walk);
    for_all_words(1, 0, 6, check_walk);
    for_all_words(0, 1, 6, check_walk);
    for_all_words(1, 1, 6, check_walk);
    for_all_words(2, 0, 6, check_walk);
    CHECK_FALSE(is_exploration_word(Walk(0, 0)));
    Rng rng(14);
    for (int t = 0; t < 200; ++t)
        check_walk(random_word(rng, static_cast<std::int32_t>(rng.next_below(3)),
                               static_cast<std::int32_t>(rng.next_below(3)),
                               1 + static_cast<std::int32_t>(rng.next_below(40))));
}

TEST_CASE("peel of frozen words") {
    {
        PeelWord pw = peel_word(Walk::from_word(0, 0, "abcc"));
        CHECK_FALSE(pw.split);
        CHECK(pw.upsilon == 4);
        CHECK(pw.continued.start_l == 1);
        CHECK(pw.continued.start_r == 0);
        CHECK(pw.continued.word() == "bcc");
    }
    {
        PeelWord pw = peel_word(Walk::from_word(1, 0, "bcc"));
        CHECK(pw.split);
        CHECK(pw.upsilon == 2);
        CHECK(pw.split_off.word() == "c");
        CHECK(pw.split_off.start_l == 0);
        CHECK(pw.split_off.start_r == 0);
        CHECK(pw.continued.word() == "c");
        CHECK(pw.continued.start_l == 0);
        CHECK(pw.continued.start_r == 0);
    }
}

TEST_CASE("peel factorizes exploration words") {
    for (auto [l, r] : std::vector<std::pair<std::int32_t, std::int32_t>>{
             {0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {2, 1}}) {
        for (std::int32_t len = 2; len <= 9; ++len) {
            for (const std::string& word : oracle::enumerate_words_brute(l, r, len)) {
                Walk w = Walk::from_word(l, r, word);
                PeelWord pw = peel_word(w);
                CHECK(is_exploration_word(pw.continued));
                std::string rebuilt(1, word[0]);
                if (pw.split) {
                    CHECK(is_exploration_word(pw.split_off));
                    CHECK((pw.split_off.start_l == 0 || pw.split_off.start_r == 0));
                    rebuilt += pw.split_off.word();
                }
                rebuilt += pw.continued.word();
                CHECK(rebuilt == word);
                if (!pw.split) {
                    auto [l1, r1] = w.position(1);
                    CHECK(pw.continued.start_l == l1);
                    CHECK(pw.continued.start_r == r1);
                }
            }
        }
    }
}

TEST_CASE("rng streams are deterministic and substreams differ") {
    Rng a(123), b(123);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
    Rng w0(123, 0), w1(123, 1);
    int same = 0;
    for (int i = 0; i < 64; ++i) same += w0.next_u64() == w1.next_u64();
    CHECK(same == 0);
    Rng u(42);
    for (int i = 0; i < 1000; ++i) {
        double x = u.next_double();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
        CHECK(u.next_below(10) < 10);
    }
}
