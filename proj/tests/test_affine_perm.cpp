#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "postnikov/affine_perm.hpp"

using namespace postnikov;
using BAP = BoundedAffinePermutation;

namespace {

// Independent inversion count straight from the definition, scanning a
// window of j values wide enough to catch every possible inversion.
int brute_length(const BAP& w) {
    int count = 0;
    for (int i = 1; i <= w.n(); ++i)
        for (int j = i + 1; j <= i + 2 * w.n(); ++j)
            if (w.apply(i) > w.apply(j)) ++count;
    return count;
}

// Every window satisfying the three conditions, by raw filtering.
std::vector<std::vector<int>> brute_enumerate(int k, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> win(n);
    std::function<void(int)> rec = [&](int idx) {
        if (idx == n) {
            try {
                const BAP w = BAP::validate(win);
                if (w.k() == k) out.push_back(win);
            } catch (const Error&) {
            }
            return;
        }
        for (int v = idx + 1; v <= idx + 1 + n; ++v) {
            win[idx] = v;
            rec(idx + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace

TEST_CASE("validate accepts the worked examples") {
    const BAP w = BAP::validate({4, 5, 6, 7, 8, 9});
    CHECK(w.n() == 6);
    CHECK(w.k() == 3);

    const BAP id3 = BAP::validate({1, 2, 3});
    CHECK(id3.k() == 0);
}

TEST_CASE("validate rejects each broken condition") {
    CHECK_THROWS_AS(BAP::validate({3, 8, 7, 6, 2, 10, 9, 14, 13}), BoundsViolation);
    CHECK_THROWS_AS(BAP::validate({0, 3}), BoundsViolation);
    CHECK_THROWS_AS(BAP::validate({2, 4}), NotBijective);
    CHECK_THROWS_AS(BAP::validate({2, 2, 5}), NotBijective);
    CHECK_THROWS_AS(BAP::validate({}), BadInput);
}

TEST_CASE("apply extends periodically") {
    const BAP w = BAP::validate({4, 5, 6, 7, 8, 9});
    CHECK(w.apply(7) == 10);
    CHECK(w.apply(0) == 3);
    const BAP w2 = BAP::validate({4, 6, 5, 7, 8, 9});
    CHECK(w2.apply(2) == 6);
    for (int j = -5; j <= 5; ++j) CHECK(w2.apply(j + 6) == w2.apply(j) + 6);
}

TEST_CASE("inverse") {
    const BAP w = BAP::validate({4, 6, 5, 7, 8, 9});
    for (int j = -8; j <= 8; ++j) CHECK(w.inverse(w.apply(j)) == j);
}

TEST_CASE("length matches the definition and its examples") {
    CHECK(BAP::validate({4, 5, 6, 7, 8, 9}).length() == 0);
    CHECK(BAP::validate({4, 6, 5, 7, 8, 9}).length() == 1);
    CHECK(BAP::validate({3, 4}).length() <= 1);

    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k)
            for (const BAP& w : enumerate_bounded_affine(k, n)) CHECK(w.length() == brute_length(w));
}

TEST_CASE("length bounds and extremes") {
    for (int n = 1; n <= 5; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (const BAP& w : enumerate_bounded_affine(k, n)) {
                const int len = w.length();
                CHECK(len >= 0);
                CHECK(len <= k * (n - k));
                // len = 0 iff x -> x+k
                bool is_shift = true;
                for (int i = 1; i <= n; ++i) is_shift &= w.apply(i) == i + k;
                CHECK((len == 0) == is_shift);
                // len = k(n-k) iff every throw is 0 or n
                bool extreme = true;
                for (int i = 1; i <= n; ++i) {
                    const int t = w.apply(i) - i;
                    extreme &= (t == 0 || t == n);
                }
                CHECK((len == k * (n - k)) == extreme);
            }
        }
    }
}

TEST_CASE("shortest throw") {
    CHECK(BAP::validate({4, 5, 6, 7, 8, 9}).shortest_throw() == std::pair<int, int>{3, 1});
    CHECK(BAP::validate({4, 6, 5, 7, 8, 9}).shortest_throw() == std::pair<int, int>{2, 3});
    CHECK(BAP::validate({1, 2, 3}).shortest_throw() == std::pair<int, int>{0, 1});
}

TEST_CASE("simple reflection products") {
    const BAP w = BAP::validate({4, 6, 5, 7, 8, 9});
    CHECK(multiply_left(w, {5}) == std::vector<int>{4, 5, 6, 7, 8, 9});

    const BAP top = BAP::validate({4, 5, 6, 7, 8, 9});
    const auto once = multiply_right(top, {1});
    const auto twice = multiply_right(BAP::validate(once), {1});
    CHECK(twice == top.window());

    // Involution on both sides for every small permutation.
    for (int k = 0; k <= 3; ++k) {
        for (const BAP& v : enumerate_bounded_affine(k, 3)) {
            for (int i = 0; i < 3; ++i) {
                auto l = multiply_left(v, {i});
                // The intermediate window may be invalid; compose raw.
                std::vector<int> ll(3), rr(3);
                for (int p = 0; p < 3; ++p) ll[p] = SimpleReflection{i}.apply(3, l[p]);
                CHECK(ll == v.window());
                auto r = multiply_right(v, {i});
                for (int p = 1; p <= 3; ++p) {
                    const int q = SimpleReflection{i}.apply(3, p);
                    // (r o s_i)(p) = r(s_i(p)) read off the raw window of r.
                    const int idx = ((q - 1) % 3 + 3) % 3;
                    rr[p - 1] = r[idx] + ((q - 1 - idx) / 3) * 3;
                }
                CHECK(rr == v.window());
            }
        }
    }
}

TEST_CASE("left multiplication bound check example") {
    const BAP w = BAP::validate({3, 4});
    const auto raw = multiply_left(w, {1});
    CHECK(raw == std::vector<int>{4, 3});
    // w(1)=4 > 1+2, so validation must reject it.
    CHECK_THROWS_AS(BAP::validate(raw), BoundsViolation);
}

TEST_CASE("remove_lollipop") {
    const auto [w1, c1] = remove_lollipop(BAP::validate({1, 3, 5}), 1);
    CHECK(w1.window() == std::vector<int>{2, 3});
    CHECK(c1 == LollipopColor::White);

    const auto [w2, c2] = remove_lollipop(BAP::validate({4, 2, 3}), 2);
    CHECK(w2.n() == 2);
    CHECK(w2.k() == 1);
    CHECK(c2 == LollipopColor::White);

    const auto [w3, c3] = remove_lollipop(BAP::validate({4, 2, 3}), 1);
    CHECK(c3 == LollipopColor::Black);
    CHECK(w3.k() == 0);

    CHECK_THROWS_AS(remove_lollipop(BAP::validate({4, 5, 6, 7, 8, 9}), 1), NotALollipop);
}

TEST_CASE("remove_lollipop preserves the other throws") {
    for (int n = 2; n <= 5; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (const BAP& w : enumerate_bounded_affine(k, n)) {
                for (int i = 1; i <= n; ++i) {
                    if (!w.is_white_lollipop(i) && !w.is_black_lollipop(i)) continue;
                    const auto [wp, color] = remove_lollipop(w, i);
                    // Conjugation by alpha shortens each throw by the number
                    // of skipped integers (those = i mod n) it jumps over.
                    std::multiset<int> before, after;
                    for (int p = 1; p <= n; ++p) {
                        if (p == i) continue;
                        int skipped = 0;
                        for (int m = p + 1; m <= w.apply(p); ++m)
                            if (((m - i) % n + n) % n == 0) ++skipped;
                        before.insert(w.apply(p) - p - skipped);
                    }
                    for (int p = 1; p <= n - 1; ++p) after.insert(wp.apply(p) - p);
                    CHECK(before == after);
                }
            }
        }
    }
}

TEST_CASE("enumerate matches raw filtering") {
    CHECK(enumerate_bounded_affine(0, 1).size() == 1);
    CHECK(enumerate_bounded_affine(0, 1)[0].window() == std::vector<int>{1});
    CHECK(enumerate_bounded_affine(1, 1)[0].window() == std::vector<int>{2});

    for (int n = 1; n <= 4; ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto fast = enumerate_bounded_affine(k, n);
            const auto slow = brute_enumerate(k, n);
            REQUIRE(fast.size() == slow.size());
            for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].window() == slow[i]);
            // Lexicographic order
            CHECK(std::is_sorted(fast.begin(), fast.end(),
                                 [](const BAP& a, const BAP& b) { return a.window() < b.window(); }));
        }
    }
    CHECK_THROWS_AS(enumerate_bounded_affine(1, 20), BoundExceeded);
}
