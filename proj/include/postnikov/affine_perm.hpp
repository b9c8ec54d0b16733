#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "postnikov/errors.hpp"

namespace postnikov {

// A bounded affine permutation w of type (k,n) is an n-periodic bijection of
// the integers with i <= w(i) <= i+n, stored by its window [w(1),...,w(n)].
// Windows are 1-based everywhere in the API; the internal vector is 0-based.
class BoundedAffinePermutation {
public:
    // Checks the three defining conditions and computes k. Throws
    // BoundsViolation / NotBijective / NonIntegralK.
    static BoundedAffinePermutation validate(const std::vector<int>& window);

    int n() const { return static_cast<int>(window_.size()); }
    int k() const { return k_; }
    const std::vector<int>& window() const { return window_; }

    // w(j) for any integer j, extended n-periodically.
    int apply(int j) const;

    // w^{-1}(v) for any integer v.
    int inverse(int v) const;

    // Number of affine inversions: #{(i,j) : 1 <= i <= n, i < j, w(i) > w(j)}.
    int length() const;

    // Minimum of w(i)-i over the window, and the smallest witness index.
    std::pair<int, int> shortest_throw() const;

    bool is_white_lollipop(int i) const { return apply(i) == i; }
    bool is_black_lollipop(int i) const { return apply(i) == i + n(); }

    bool operator==(const BoundedAffinePermutation&) const = default;

private:
    BoundedAffinePermutation(std::vector<int> w, int k) : window_(std::move(w)), k_(k) {}
    std::vector<int> window_;
    int k_ = 0;
};

// The affine simple reflection s_i: j -> j+1 for j = i, j -> j-1 for j = i+1
// (mod n), fixing everything else. The index is taken mod n, so s_0 = s_n.
struct SimpleReflection {
    int i;
    // s_i(j) for any integer j, for period n.
    int apply(int n, int j) const;
};

// Window of s_i o w. No validity enforcement: the caller validates.
std::vector<int> multiply_left(const BoundedAffinePermutation& w, SimpleReflection s);

// Window of w o s_i. No validity enforcement.
std::vector<int> multiply_right(const BoundedAffinePermutation& w, SimpleReflection s);

enum class LollipopColor { White, Black };

// Deletes a fixed point: requires w(i) = i (white) or w(i) = i+n (black) and
// returns the conjugate alpha^{-1} o w o alpha by the order preserving
// bijection alpha: Z -> {j : j != i mod n} that maps {1..n-1} onto
// {1..n} \ {i}. The result has type (k, n-1) for white, (k-1, n-1) for black.
std::pair<BoundedAffinePermutation, LollipopColor>
remove_lollipop(const BoundedAffinePermutation& w, int i);

// Yields every bounded affine permutation of type (k,n) in lexicographic
// window order. Throws BoundExceeded for n > max_n.
void enumerate_bounded_affine(int k, int n,
                              const std::function<void(const BoundedAffinePermutation&)>& sink,
                              int max_n = 12);

std::vector<BoundedAffinePermutation> enumerate_bounded_affine(int k, int n, int max_n = 12);

}  // namespace postnikov
