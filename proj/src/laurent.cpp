#include "postnikov/laurent.hpp"

#include <sstream>

namespace postnikov {

LaurentPoly LaurentPoly::constant(int arity, long value) {
    LaurentPoly p(arity);
    if (value != 0) p.terms_[Exponents(arity, 0)] = value;
    return p;
}

LaurentPoly LaurentPoly::variable(int arity, int index, long long power) {
    LaurentPoly p(arity);
    Exponents e(arity, 0);
    e[index] = power;
    p.terms_[e] = 1;
    return p;
}

LaurentPoly LaurentPoly::monomial(int arity, const Exponents& e, const mpz_class& c) {
    LaurentPoly p(arity);
    if (c != 0) p.terms_[e] = c;
    return p;
}

void LaurentPoly::add_term(const Exponents& e, const mpz_class& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    POSTNIKOV_CHECK(arity_ == o.arity_, "arity mismatch");
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    POSTNIKOV_CHECK(arity_ == o.arity_, "arity mismatch");
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    POSTNIKOV_CHECK(arity_ == o.arity_, "arity mismatch");
    LaurentPoly out(arity_);
    Exponents e(arity_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    POSTNIKOV_CHECK(arity_ == divisor.arity_, "arity mismatch");
    if (divisor.is_zero()) return std::nullopt;
    if (is_zero()) return LaurentPoly(arity_);

    // Per-variable exponent extremes multiply without cancellation (the
    // extreme slices of a product are products of nonzero polynomials), so an
    // exact quotient has every exponent inside a box computed up front. The
    // quotient terms emitted below strictly decrease in lex order, and a
    // lex-decreasing sequence inside a finite box is finite, so the loop
    // terminates; leaving the box proves the division inexact.
    Exponents lo(arity_), hi(arity_);
    for (int i = 0; i < arity_; ++i) {
        long long fmin = 0, fmax = 0, gmin = 0, gmax = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            fmin = first ? e[i] : std::min(fmin, e[i]);
            fmax = first ? e[i] : std::max(fmax, e[i]);
            first = false;
        }
        first = true;
        for (const auto& [e, c] : divisor.terms_) {
            gmin = first ? e[i] : std::min(gmin, e[i]);
            gmax = first ? e[i] : std::max(gmax, e[i]);
            first = false;
        }
        lo[i] = fmin - gmin;
        hi[i] = fmax - gmax;
        if (lo[i] > hi[i]) return std::nullopt;
    }

    LaurentPoly rem = *this;
    LaurentPoly quot(arity_);
    const auto& lt_g = *divisor.terms_.rbegin();  // leading term, lex order
    while (!rem.is_zero()) {
        const auto& lt_f = *rem.terms_.rbegin();
        Exponents qe(arity_);
        for (int i = 0; i < arity_; ++i) {
            qe[i] = lt_f.first[i] - lt_g.first[i];
            if (qe[i] < lo[i] || qe[i] > hi[i]) return std::nullopt;
        }
        mpz_class qc, rc;
        mpz_fdiv_qr(qc.get_mpz_t(), rc.get_mpz_t(), lt_f.second.get_mpz_t(),
                    lt_g.second.get_mpz_t());
        if (rc != 0) return std::nullopt;
        LaurentPoly qterm = monomial(arity_, qe, qc);
        quot = quot + qterm;
        rem = rem - qterm * divisor;
    }
    return quot;
}

std::string LaurentPoly::key() const {
    std::ostringstream os;
    os << arity_ << ":";
    for (const auto& [e, c] : terms_) {
        os << c.get_str() << "@";
        for (int i = 0; i < arity_; ++i) os << e[i] << (i + 1 < arity_ ? "," : "");
        os << ";";
    }
    return os.str();
}

}  // namespace postnikov
