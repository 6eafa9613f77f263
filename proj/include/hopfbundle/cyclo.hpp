#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfbundle/rational.hpp"

namespace hopfbundle {

/// Coefficients of the n-th cyclotomic polynomial, low degree first, monic,
/// computed by exact division from X^n - 1 = prod_{d|n} Phi_d.
std::vector<Rational> cyclotomic_poly(long n);

/// The ambient field Q(zeta_n). Instances are interned: get(n) always returns
/// the same object, so contexts can be compared by address.
class CycloCtx {
  public:
    static const CycloCtx& get(long n);

    long conductor() const { return n_; }
    std::size_t degree() const { return degree_; }  // phi(n)
    const std::vector<Rational>& modulus() const { return modulus_; }

    CycloCtx(const CycloCtx&) = delete;
    CycloCtx& operator=(const CycloCtx&) = delete;

  private:
    explicit CycloCtx(long n);

    long n_;
    std::size_t degree_;
    std::vector<Rational> modulus_;
};

/// An element of Q(zeta_n), stored as the unique residue mod Phi_n:
/// coeffs[i] is the coefficient of zeta_n^i, 0 <= i < phi(n).
class CycloNum {
  public:
    /// Zero in Q(zeta_1) = Q.
    CycloNum();
    /// Embeds a rational in Q(zeta_1).
    explicit CycloNum(Rational value);
    CycloNum(const CycloCtx& ctx, std::vector<Rational> coeffs);

    static CycloNum zero(const CycloCtx& ctx);
    static CycloNum one(const CycloCtx& ctx);
    static CycloNum from_rational(const CycloCtx& ctx, const Rational& value);
    /// zeta_n^k, k taken mod n.
    static CycloNum root_of_unity(const CycloCtx& ctx, long k);
    static CycloNum root_of_unity(long n, long k) { return root_of_unity(CycloCtx::get(n), k); }

    const CycloCtx& ctx() const { return *ctx_; }
    long conductor() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// The rational value iff all non-constant coefficients vanish.
    std::optional<Rational> as_rational() const;

    /// Image under Q(zeta_n) -> Q(zeta_L) for n | L (zeta_n = zeta_L^{L/n}).
    CycloNum promoted(long target_conductor) const;

    CycloNum operator-() const;
    CycloNum& operator+=(const CycloNum& rhs);
    CycloNum& operator-=(const CycloNum& rhs);
    CycloNum& operator*=(const CycloNum& rhs);
    friend CycloNum operator+(CycloNum lhs, const CycloNum& rhs) { return lhs += rhs; }
    friend CycloNum operator-(CycloNum lhs, const CycloNum& rhs) { return lhs -= rhs; }
    friend CycloNum operator*(CycloNum lhs, const CycloNum& rhs) { return lhs *= rhs; }

    /// Multiplicative inverse via extended Euclid against Phi_n. Throws
    /// DivisionByZero on zero.
    CycloNum inv() const;
    friend CycloNum operator/(const CycloNum& lhs, const CycloNum& rhs) { return lhs * rhs.inv(); }

    /// x^e for integer e (e < 0 requires x != 0).
    CycloNum pow(long e) const;

    /// Exact mathematical equality; mixed conductors are promoted to the lcm
    /// internally before comparing.
    bool operator==(const CycloNum& rhs) const;
    bool operator!=(const CycloNum& rhs) const { return !(*this == rhs); }

  private:
    const CycloCtx* ctx_;
    std::vector<Rational> coeffs_;
};

/// Both arguments promoted to the lcm of their conductors.
std::pair<CycloNum, CycloNum> aligned(const CycloNum& x, const CycloNum& y);

/// Promotes every listed value to the least common conductor in place.
void align_all(std::initializer_list<CycloNum*> xs);

/// Deterministic total order (conductor-aligned lexicographic compare of
/// coefficient sequences); -1, 0, +1. Used for reproducible report ordering.
int compare(const CycloNum& x, const CycloNum& y);

/// Smallest positive m with x^m == 1, or 0 if none found up to `cap`.
long multiplicative_order(const CycloNum& x, long cap);

std::string to_string(const CycloNum& x);

}  // namespace hopfbundle
