#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hopfbundle/cyclo.hpp"

namespace hopfbundle {

// Point of the projective line over a cyclotomic field, held as a homogeneous
// pair (u : v) with u, v not both zero. Coordinates share one conductor.
class ProjPoint {
  public:
    ProjPoint(CycloNum u, CycloNum v);

    static ProjPoint finite(const CycloNum& z) { return ProjPoint(z, CycloNum(Rational(1))); }
    static ProjPoint infinity() { return ProjPoint(CycloNum(Rational(1)), CycloNum(Rational(0))); }

    const CycloNum& u() const { return u_; }
    const CycloNum& v() const { return v_; }
    bool is_infinity() const { return v_.is_zero(); }
    // Finite value u/v; throws DivisionByZero at infinity.
    CycloNum value() const;
    // Scaled so the first nonzero coordinate equals 1.
    ProjPoint normalized() const;

    friend bool operator==(const ProjPoint& lhs, const ProjPoint& rhs);
    friend bool operator!=(const ProjPoint& lhs, const ProjPoint& rhs) { return !(lhs == rhs); }

  private:
    CycloNum u_;
    CycloNum v_;
};

std::string to_string(const ProjPoint& p);

// Invertible fractional-linear map z -> (a z + b)/(c z + d), stored as the
// matrix [[a, b], [c, d]] and compared up to scale. Entries share a conductor
// and the determinant is checked to be nonzero on construction.
class Moebius {
  public:
    Moebius(CycloNum a, CycloNum b, CycloNum c, CycloNum d);

    static Moebius identity();
    // z -> mu z
    static Moebius scaling(const CycloNum& mu);
    // z -> mu / z
    static Moebius inversion(const CycloNum& mu);

    const CycloNum& a() const { return a_; }
    const CycloNum& b() const { return b_; }
    const CycloNum& c() const { return c_; }
    const CycloNum& d() const { return d_; }

    CycloNum det() const;
    Moebius inverse() const;
    // Scaled so the first nonzero entry of (a, b, c, d) equals 1.
    Moebius normalized() const;
    ProjPoint apply(const ProjPoint& p) const;
    bool is_identity() const;

    // Composition: (lhs * rhs).apply(p) == lhs.apply(rhs.apply(p)).
    friend Moebius operator*(const Moebius& lhs, const Moebius& rhs);
    friend bool operator==(const Moebius& lhs, const Moebius& rhs);
    friend bool operator!=(const Moebius& lhs, const Moebius& rhs) { return !(lhs == rhs); }

  private:
    CycloNum a_;
    CycloNum b_;
    CycloNum c_;
    CycloNum d_;
};

std::string to_string(const Moebius& m);

// The unique fractional-linear map with src[i] -> dst[i]. Each triple must be
// pairwise distinct.
Moebius through_triples(const std::array<ProjPoint, 3>& src, const std::array<ProjPoint, 3>& dst);

// Every fractional-linear map permuting the given set (at least three
// pairwise distinct points). Found by brute force over the images of the
// first three points; the returned order is deterministic and the identity
// comes first.
std::vector<Moebius> stabilizer(const std::vector<ProjPoint>& points);

// The scalar mu when the map is projectively diag(mu, 1), i.e. fixes both 0
// and infinity as z -> mu z; empty otherwise.
std::optional<CycloNum> is_rotation_about_zero(const Moebius& m);

// Smallest k >= 1 with m^k the identity; throws InvalidArgument past cap.
long element_order(const Moebius& m, long cap);

enum class SubgroupKind { Cyclic, Dihedral, Tetrahedral, Octahedral, Icosahedral };

struct SubgroupLabel {
    SubgroupKind kind;
    long order;      // number of elements
    long parameter;  // n for cyclic(n), m for dihedral(m), else 0

    std::string name() const;

    friend bool operator==(const SubgroupLabel& lhs, const SubgroupLabel& rhs) {
        return lhs.kind == rhs.kind && lhs.order == rhs.order && lhs.parameter == rhs.parameter;
    }
};

// Identifies a finite set of fractional-linear maps as one of the finite
// subgroup types of the projective linear group. Verifies closure, identity
// and inverses first and throws InvalidArgument when the set is not a group
// or matches no type.
SubgroupLabel classify_finite_subgroup(const std::vector<Moebius>& elements);

}  // namespace hopfbundle
