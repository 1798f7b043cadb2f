#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knotoid/seqcalc.hpp"

using namespace knotoid;

namespace {

SignSequence S(const std::string& s) { return SignSequence::parse(s); }

SignSequence random_seq(std::mt19937& rng, int maxlen = 8) {
    std::uniform_int_distribution<int> len(0, maxlen), bit(0, 1);
    std::vector<int8_t> v;
    int n = len(rng);
    for (int i = 0; i < n; ++i) v.push_back(bit(rng) ? 1 : -1);
    return SignSequence(std::move(v));
}

}  // namespace

TEST_CASE("worked left shift example") {
    // the only nontrivial shift on (-,-,+,+) is a left shift of size 1
    auto res = shift_results(S("--++"), ShiftDirection::Left, 1);
    std::set<SignSequence> expect = {S("+--+"), S("-+-+"), S("-++-")};
    CHECK(res == expect);
    // no (+,-) to delete, so no right shift applies
    CHECK(shift_results(S("--++"), ShiftDirection::Right, 1).empty());
    CHECK(shift_results(S("--++"), ShiftDirection::Left, 2).empty());
}

TEST_CASE("shifts with nothing to delete") {
    CHECK(shift_results(S("++"), ShiftDirection::Left, 1).empty());
    CHECK(shift_results(S(""), ShiftDirection::Left, 1).empty());
}

TEST_CASE("shift on a single pair") {
    auto res = shift_results(S("+-"), ShiftDirection::Right, 1);
    std::set<SignSequence> expect = {S("-+")};
    CHECK(res == expect);
}

TEST_CASE("shift moves preserve length and signed counts") {
    std::mt19937 rng(23);
    for (int i = 0; i < 200; ++i) {
        SignSequence a = random_seq(rng);
        for (auto dir : {ShiftDirection::Left, ShiftDirection::Right}) {
            for (int n = 1; n <= 2; ++n) {
                for (const auto& b : shift_results(a, dir, n)) {
                    CHECK(b.size() == a.size());
                    CHECK(b.h_pos() == a.h_pos());
                    CHECK(b.h_neg() == a.h_neg());
                }
            }
        }
    }
}

TEST_CASE("shift connectivity") {
    CHECK(shift_connected({S("+-"), S("-+")}).connected);
    CHECK(shift_connected({S("+-")}).connected);
    CHECK(shift_connected({}).connected);
    // no single shift links these two and no other members exist
    CHECK_FALSE(shift_connected({S("++--"), S("--++")}).connected);
    // mixed signed counts are never connected
    CHECK_FALSE(shift_connected({S("++"), S("--")}).connected);
}

TEST_CASE("shift moves are symmetric") {
    std::mt19937 rng(29);
    for (int i = 0; i < 100; ++i) {
        SignSequence a = random_seq(rng, 6);
        for (const auto& b : all_shift_results(a)) {
            auto back = all_shift_results(b);
            CHECK(back.count(a) == 1);
        }
    }
}

TEST_CASE("consecutive subsums") {
    CHECK(consecutive_subsum_exists(S("+-"), 1));
    CHECK_FALSE(consecutive_subsum_exists(S("+-"), 2));
    CHECK(consecutive_subsum_exists(S("-++-"), 2));
    CHECK(consecutive_subsum_exists(S(""), 0));
    CHECK_FALSE(consecutive_subsum_exists(S(""), 1));
    CHECK(consecutive_subsum_exists(S("+++"), 3));
    CHECK_FALSE(consecutive_subsum_exists(S("+++"), -1));
}

TEST_CASE("transforms") {
    CHECK(S("+--").reversed() == S("--+"));
    CHECK(S("+-").negated() == S("-+"));
    CHECK(S("+").concat(S("-")) == S("+-"));
    std::mt19937 rng(31);
    for (int i = 0; i < 100; ++i) {
        SignSequence a = random_seq(rng), b = random_seq(rng), c = random_seq(rng);
        CHECK(a.reversed().reversed() == a);
        CHECK(a.negated().negated() == a);
        CHECK(a.concat(b).concat(c) == a.concat(b.concat(c)));
        CHECK(a.concat(SignSequence()) == a);
        CHECK(SignSequence().concat(a) == a);
        CHECK(a.concat(b).reversed() == b.reversed().concat(a.reversed()));
    }
}

TEST_CASE("lift subsequences, hand traced") {
    // A = (+,+), n = 2: p = (0,1,2), q = (1,2)
    CHECK(lift_subsequence(S("++"), 2, 1) == S("+"));
    CHECK(lift_subsequence(S("++"), 2, 0) == S("+"));
    // A = (+,-), n = 2: p = (0,1,0), q = (1,1)
    CHECK(lift_subsequence(S("+-"), 2, 1) == S("+-"));
    CHECK(lift_subsequence(S("+-"), 2, 0) == S(""));
    CHECK(lift_subsequence(S("-+"), 2, 0) == S("-+"));
    CHECK(lift_subsequence(S("-+"), 2, 1) == S(""));
}

TEST_CASE("lift with modulus one keeps everything") {
    std::mt19937 rng(37);
    for (int i = 0; i < 100; ++i) {
        SignSequence a = random_seq(rng);
        CHECK(lift_subsequence(a, 1, 0) == a);
    }
}

TEST_CASE("lift subsequences partition the entries") {
    std::mt19937 rng(41);
    for (int i = 0; i < 200; ++i) {
        SignSequence a = random_seq(rng);
        for (int n = 2; n <= 4; ++n) {
            size_t total = 0;
            int pos = 0, neg = 0;
            for (int x = 0; x < n; ++x) {
                SignSequence part = lift_subsequence(a, n, x);
                total += part.size();
                pos += part.h_pos();
                neg += part.h_neg();
            }
            CHECK(total == a.size());
            CHECK(pos == a.h_pos());
            CHECK(neg == a.h_neg());
        }
    }
}
