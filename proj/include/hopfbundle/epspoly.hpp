#pragma once

#include <map>
#include <string>
#include <utility>

#include "hopfbundle/laurent.hpp"

namespace hopfbundle {

/// Polynomial in the deformation parameter eps with Laurent coefficients in
/// the chart variable: finite support over (t-exponent, eps-exponent).
/// t-exponents may go negative mid-computation; eps-exponents never do (the
/// family is holomorphic over the whole eps-plane).
class EpsPoly {
  public:
    struct Key {
        long t_exp;
        long eps_exp;
        auto operator<=>(const Key&) const = default;
    };

    EpsPoly() : var_("t") {}
    explicit EpsPoly(std::string var) : var_(std::move(var)) {}

    static EpsPoly from_laurent(const LaurentPoly& p, long eps_exp = 0);
    static EpsPoly monomial(const std::string& var, long t_exp, long eps_exp, CycloNum coeff);
    static EpsPoly zero(const std::string& var) { return EpsPoly(var); }
    static EpsPoly one(const std::string& var);

    const std::string& var() const { return var_; }
    const std::map<Key, CycloNum>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool eps_free() const;
    long min_t_exponent() const;  // pre: not zero

    EpsPoly operator-() const;
    EpsPoly& operator+=(const EpsPoly& rhs);
    EpsPoly& operator-=(const EpsPoly& rhs);
    EpsPoly& operator*=(const EpsPoly& rhs);
    friend EpsPoly operator+(EpsPoly lhs, const EpsPoly& rhs) { return lhs += rhs; }
    friend EpsPoly operator-(EpsPoly lhs, const EpsPoly& rhs) { return lhs -= rhs; }
    friend EpsPoly operator*(EpsPoly lhs, const EpsPoly& rhs) { return lhs *= rhs; }

    EpsPoly scaled(const CycloNum& factor) const;
    /// Multiply by t^delta.
    EpsPoly shifted_t(long delta) const;
    /// p with t -> mu * t^step, step in {+1, -1}; eps untouched.
    EpsPoly precompose_monomial_t(const CycloNum& mu, int step) const;
    /// Substitution t -> 1/t with a variable retag.
    EpsPoly substitute_inverse_t(const std::string& new_var) const;

    /// eps := value; collapses to a Laurent polynomial in the chart variable.
    LaurentPoly specialize_eps(const CycloNum& value) const;

    bool operator==(const EpsPoly& rhs) const;
    bool operator!=(const EpsPoly& rhs) const { return !(*this == rhs); }

  private:
    void add_term(const Key& key, const CycloNum& value);

    std::string var_;
    std::map<Key, CycloNum> terms_;
};

std::string to_string(const EpsPoly& p);

}  // namespace hopfbundle
