#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "postnikov/errors.hpp"

namespace postnikov {

// Sparse multivariate Laurent polynomial with exact integer coefficients.
// The arity (number of variable slots) is fixed per polynomial; exponents may
// be negative. Terms are kept in a lex-ordered map with no zero coefficients.
class LaurentPoly {
public:
    using Exponents = std::vector<long long>;

    explicit LaurentPoly(int arity = 0) : arity_(arity) {}

    static LaurentPoly constant(int arity, long value);
    static LaurentPoly variable(int arity, int index, long long power = 1);
    static LaurentPoly monomial(int arity, const Exponents& e, const mpz_class& c);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;

    // Exact division; nullopt when the quotient does not exist in the
    // Laurent ring. Step-capped defensively.
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

    bool operator==(const LaurentPoly& o) const = default;
    bool operator<(const LaurentPoly& o) const {
        return key() < o.key();
    }

    // Deterministic text form, also used as a dedup key.
    std::string key() const;

    const std::map<Exponents, mpz_class>& terms() const { return terms_; }

private:
    int arity_;
    std::map<Exponents, mpz_class> terms_;  // lex order; largest = leading
    void add_term(const Exponents& e, const mpz_class& c);
};

}  // namespace postnikov
