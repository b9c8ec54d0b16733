#include "postnikov/affine_perm.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace postnikov {

namespace {

// Mathematical mod: result in [0, n).
int imod(int a, int n) {
    int r = a % n;
    return r < 0 ? r + n : r;
}

std::string window_str(const std::vector<int>& w) {
    std::string s = "[";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + "]";
}

}  // namespace

BoundedAffinePermutation BoundedAffinePermutation::validate(const std::vector<int>& window) {
    if (window.empty()) throw BadInput("window must be nonempty");
    const int n = static_cast<int>(window.size());
    long long sum = 0;
    std::vector<char> seen(n, 0);
    for (int idx = 0; idx < n; ++idx) {
        const int i = idx + 1;
        const int wi = window[idx];
        if (wi < i || wi > i + n)
            throw BoundsViolation("w(" + std::to_string(i) + ")=" + std::to_string(wi) +
                                  " outside [" + std::to_string(i) + "," + std::to_string(i + n) +
                                  "] in " + window_str(window));
        const int r = imod(wi, n);
        if (seen[r])
            throw NotBijective("residue " + std::to_string(r) + " repeats in " + window_str(window));
        seen[r] = 1;
        sum += wi - i;
    }
    if (sum % n != 0)
        throw NonIntegralK("throw sum " + std::to_string(sum) + " not divisible by n in " +
                           window_str(window));
    return BoundedAffinePermutation(window, static_cast<int>(sum / n));
}

int BoundedAffinePermutation::apply(int j) const {
    const int nn = n();
    // j = idx+1 + q*n with idx in [0, n)
    int idx = imod(j - 1, nn);
    int q = (j - 1 - idx) / nn;
    return window_[idx] + q * nn;
}

int BoundedAffinePermutation::inverse(int v) const {
    const int nn = n();
    for (int idx = 0; idx < nn; ++idx) {
        if (imod(window_[idx] - v, nn) == 0) {
            // window_[idx] + q*n = v
            const int q = (v - window_[idx]) / nn;
            return idx + 1 + q * nn;
        }
    }
    throw InternalError("inverse: residue not found");
}

int BoundedAffinePermutation::length() const {
    // For j >= w(i) we have w(j) >= j >= w(i), so only i < j < w(i) can invert.
    const int nn = n();
    int count = 0;
    for (int i = 1; i <= nn; ++i) {
        const int wi = apply(i);
        for (int j = i + 1; j < wi; ++j)
            if (apply(j) < wi) ++count;
    }
    return count;
}

std::pair<int, int> BoundedAffinePermutation::shortest_throw() const {
    int best = window_[0] - 1, witness = 1;
    for (int idx = 1; idx < n(); ++idx) {
        const int t = window_[idx] - (idx + 1);
        if (t < best) {
            best = t;
            witness = idx + 1;
        }
    }
    return {best, witness};
}

int SimpleReflection::apply(int n, int j) const {
    const int r = imod(j - i, n);
    if (r == 0) return j + 1;
    if (r == 1) return j - 1;
    return j;
}

std::vector<int> multiply_left(const BoundedAffinePermutation& w, SimpleReflection s) {
    std::vector<int> out(w.n());
    for (int idx = 0; idx < w.n(); ++idx) out[idx] = s.apply(w.n(), w.window()[idx]);
    return out;
}

std::vector<int> multiply_right(const BoundedAffinePermutation& w, SimpleReflection s) {
    std::vector<int> out(w.n());
    for (int idx = 0; idx < w.n(); ++idx) out[idx] = w.apply(s.apply(w.n(), idx + 1));
    return out;
}

std::pair<BoundedAffinePermutation, LollipopColor>
remove_lollipop(const BoundedAffinePermutation& w, int i) {
    const int n = w.n();
    LollipopColor color;
    if (w.is_white_lollipop(i))
        color = LollipopColor::White;
    else if (w.is_black_lollipop(i))
        color = LollipopColor::Black;
    else
        throw NotALollipop("w(" + std::to_string(i) + ")=" + std::to_string(w.apply(i)) +
                           " is neither i nor i+n");
    if (n == 1) throw BadInput("cannot remove the last boundary point");

    const int i0 = imod(i - 1, n) + 1;  // representative in [1, n]
    // alpha maps 1..n-1 onto {1..n} minus i0, extended (n-1)-periodically.
    auto alpha = [&](int j) {
        int idx = imod(j - 1, n - 1);       // 0..n-2
        int q = (j - 1 - idx) / (n - 1);
        int val = idx + 1 < i0 ? idx + 1 : idx + 2;
        return val + q * n;
    };
    auto alpha_inv = [&](int v) {
        int idx = imod(v - 1, n);
        int q = (v - 1 - idx) / n;
        int val = idx + 1;  // in [1, n], != i0
        POSTNIKOV_CHECK(val != i0, "alpha_inv hit removed residue");
        int pos = val < i0 ? val : val - 1;  // in [1, n-1]
        return pos + q * (n - 1);
    };
    std::vector<int> win(n - 1);
    for (int j = 1; j <= n - 1; ++j) win[j - 1] = alpha_inv(w.apply(alpha(j)));
    return {BoundedAffinePermutation::validate(win), color};
}

namespace {

void enumerate_rec(int k, int n, int depth, long long sum, std::vector<int>& win,
                   std::vector<char>& used,
                   const std::function<void(const BoundedAffinePermutation&)>& sink) {
    if (depth == n) {
        if (sum == static_cast<long long>(k) * n)
            sink(BoundedAffinePermutation::validate(win));
        return;
    }
    const int i = depth + 1;
    const long long remaining = n - depth - 1;
    for (int v = i; v <= i + n; ++v) {
        const int r = ((v % n) + n) % n;
        if (used[r]) continue;
        const long long s = sum + (v - i);
        if (s > static_cast<long long>(k) * n) break;
        if (s + remaining * n < static_cast<long long>(k) * n) continue;
        used[r] = 1;
        win[depth] = v;
        enumerate_rec(k, n, depth + 1, s, win, used, sink);
        used[r] = 0;
    }
}

}  // namespace

void enumerate_bounded_affine(int k, int n,
                              const std::function<void(const BoundedAffinePermutation&)>& sink,
                              int max_n) {
    if (n < 1 || k < 0 || k > n) throw BadInput("need 0 <= k <= n, n >= 1");
    if (n > max_n)
        throw BoundExceeded("n=" + std::to_string(n) + " exceeds enumeration bound " +
                            std::to_string(max_n));
    std::vector<int> win(n);
    std::vector<char> used(n, 0);
    enumerate_rec(k, n, 0, 0, win, used, sink);
}

std::vector<BoundedAffinePermutation> enumerate_bounded_affine(int k, int n, int max_n) {
    std::vector<BoundedAffinePermutation> out;
    enumerate_bounded_affine(
        k, n, [&](const BoundedAffinePermutation& w) { out.push_back(w); }, max_n);
    return out;
}

}  // namespace postnikov
