#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopfbundle/cyclo.hpp"

namespace hopfbundle {

/// Exponents of every Laurent object in this artifact stay far below this;
/// exceeding it means a runaway computation, not valid data.
inline constexpr long kMaxLaurentExponent = 1000000;

/// Finite-support Laurent polynomial in one variable over Q(zeta). Canonical
/// form stores no zero coefficients, so structural equality is mathematical
/// equality. Mixed coefficient conductors are allowed; comparisons and
/// arithmetic promote pairwise as needed.
class LaurentPoly {
  public:
    LaurentPoly() : var_("t") {}
    explicit LaurentPoly(std::string var) : var_(std::move(var)) {}

    static LaurentPoly monomial(const std::string& var, long exponent, CycloNum coeff);
    static LaurentPoly constant(const std::string& var, CycloNum value);
    static LaurentPoly zero(const std::string& var) { return LaurentPoly(var); }
    static LaurentPoly one(const std::string& var);

    const std::string& var() const { return var_; }
    const std::map<long, CycloNum>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    long min_exponent() const;  // pre: not zero
    long max_exponent() const;  // pre: not zero
    CycloNum coeff(long exponent) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
    friend LaurentPoly operator*(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs *= rhs; }

    LaurentPoly scaled(const CycloNum& factor) const;
    /// Multiply by X^delta.
    LaurentPoly shifted(long delta) const;

    /// p(mu * X): coefficient at exponent e picks up mu^e. mu must be nonzero
    /// (negative exponents need mu^{-1}).
    LaurentPoly precompose_scale(const CycloNum& mu) const;
    /// p(mu * X^step) for step in {+1, -1}.
    LaurentPoly precompose_monomial(const CycloNum& mu, int step) const;

    /// Substitution X -> 1/X with a variable retag: exponent e -> -e.
    LaurentPoly substitute_inverse(const std::string& new_var) const;

    /// Exact evaluation; negative exponents require x != 0.
    CycloNum evaluate(const CycloNum& x) const;

    bool operator==(const LaurentPoly& rhs) const;
    bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

  private:
    void set_coeff(long exponent, CycloNum value);
    void add_to_coeff(long exponent, const CycloNum& value);

    std::string var_;
    std::map<long, CycloNum> terms_;
};

struct PolynomialCheck {
    bool is_polynomial = true;
    /// Negative-exponent support with coefficients: the obstruction
    /// certificate when is_polynomial is false.
    std::vector<std::pair<long, CycloNum>> negative_terms;
};

PolynomialCheck is_polynomial(const LaurentPoly& p);

/// The canonical bundle section in the t-chart: t^a * prod_{k=0}^{a-1} (t - zeta_a^k),
/// expanded literally over Q(zeta_a). Equal to t^{2a} - t^a as an identity.
LaurentPoly sigma_zero(const std::string& var, long a);

std::string to_string(const LaurentPoly& p);

}  // namespace hopfbundle
