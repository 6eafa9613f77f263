#pragma once

#include <array>
#include <string>
#include <vector>

#include "hopfbundle/laurent.hpp"
#include "hopfbundle/moebius.hpp"
#include "hopfbundle/rational.hpp"

namespace hopfbundle {

inline constexpr const char* kChart0Var = "t";
inline constexpr const char* kChart1Var = "s";

// Discrete data of one family member: the rank-two bundle O(b) + O(a) over
// the projective line, a compactification exponent c, and the contraction
// modulus lambda, a rational strictly between 0 and 1.
class ManifoldSpec {
  public:
    // Canonical member: c = 2a, requires a > 3 and b >= 3a.
    ManifoldSpec(long a, long b, Rational lambda = rational(1, 2));
    // Boundary probing: any positive a, b, c.
    static ManifoldSpec relaxed(long a, long b, long c, Rational lambda = rational(1, 2));

    long a() const { return a_; }
    long b() const { return b_; }
    long c() const { return c_; }
    const Rational& lambda() const { return lambda_; }
    CycloNum lambda_value() const { return CycloNum(lambda_); }

    // Section coefficient in the t-chart: t^a * prod_k (t - zeta_a^k),
    // which expands to t^{2a} - t^a. Vanishes exactly at 0 and the a-th
    // roots of unity.
    LaurentPoly sigma0() const;
    // The same section read in the s-chart: s^c * sigma0(1/s).
    LaurentPoly sigma1() const;

    friend bool operator==(const ManifoldSpec& lhs, const ManifoldSpec& rhs) {
        return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_ && lhs.c_ == rhs.c_ &&
               lhs.lambda_ == rhs.lambda_;
    }
    friend bool operator!=(const ManifoldSpec& lhs, const ManifoldSpec& rhs) {
        return !(lhs == rhs);
    }

  private:
    ManifoldSpec(long a, long b, long c, Rational lambda, bool canonical);

    long a_;
    long b_;
    long c_;
    Rational lambda_;
};

// A base Moebius map written as a chart monomial x -> mu * x^sign, the only
// shapes that act on both affine charts without re-charting.
struct MonomialBase {
    CycloNum mu;
    int sign;  // +1 for x -> mu x, -1 for x -> mu / x
};

// Decomposes a Moebius map fixing {0, inf} setwise; throws InvalidArgument
// for any other shape.
MonomialBase monomial_base(const Moebius& m);
Moebius as_moebius(const MonomialBase& base);
// The same map read through x -> 1/x: mu inverts, the sign stays.
MonomialBase base_in_other_chart(const MonomialBase& base);

// 2x2 matrix of Laurent polynomials in one chart variable, acting on the
// fiber column (z, w). Row and column 0 are the z-line.
class FiberMatrix {
  public:
    FiberMatrix(LaurentPoly e00, LaurentPoly e01, LaurentPoly e10, LaurentPoly e11);

    static FiberMatrix identity(const std::string& var);
    static FiberMatrix scalar(const std::string& var, const CycloNum& value);
    // [[alpha, upper], [0, alpha]] — the shape of every fiber action here.
    static FiberMatrix upper_triangular(const CycloNum& alpha, const LaurentPoly& upper);

    const std::string& var() const { return entries_[0].var(); }
    const LaurentPoly& entry(int row, int col) const;
    LaurentPoly det() const;
    bool is_upper_triangular() const { return entries_[2].is_zero(); }

    friend FiberMatrix operator*(const FiberMatrix& lhs, const FiberMatrix& rhs);
    friend bool operator==(const FiberMatrix& lhs, const FiberMatrix& rhs);
    friend bool operator!=(const FiberMatrix& lhs, const FiberMatrix& rhs) {
        return !(lhs == rhs);
    }

    FiberMatrix precomposed_base(const MonomialBase& base) const;
    std::array<CycloNum, 2> apply(const CycloNum& at, const CycloNum& z, const CycloNum& w) const;

  private:
    std::array<LaurentPoly, 4> entries_;  // row-major
};

std::string to_string(const FiberMatrix& m);

// Self-map of one chart of the total space: the base coordinate moves by a
// Moebius map (restricted to chart monomials wherever conjugation or
// evaluation is required) and the fiber column by a matrix over that chart's
// variable. The fiber determinant must be nonzero.
class ChartMap {
  public:
    ChartMap(Moebius base, FiberMatrix fiber);

    static ChartMap identity(const std::string& var);

    const Moebius& base() const { return base_; }
    const FiberMatrix& fiber() const { return fiber_; }
    const std::string& var() const { return fiber_.var(); }

    friend bool operator==(const ChartMap& lhs, const ChartMap& rhs) {
        return lhs.base_ == rhs.base_ && lhs.fiber_ == rhs.fiber_;
    }
    friend bool operator!=(const ChartMap& lhs, const ChartMap& rhs) { return !(lhs == rhs); }

  private:
    Moebius base_;
    FiberMatrix fiber_;
};

std::string to_string(const ChartMap& f);

// Composition F after G within one chart: base maps compose, the fiber
// matrix of F is read at G's moved base point.
ChartMap compose(const ChartMap& outer, const ChartMap& inner);

// A point of one chart: base coordinate plus fiber coordinates.
struct ChartPoint {
    CycloNum base;
    CycloNum z;
    CycloNum w;
};

ChartPoint apply(const ChartMap& f, const ChartPoint& p);

// The chart change: the new base coordinate is 1/x, the z-line rescales by
// the new coordinate to the b-th power and the w-line to the a-th.
struct Transition {
    long z_exp;
    long w_exp;
};

Transition transition(const ManifoldSpec& spec);
// Pushes a point to the other chart; the base coordinate must be nonzero.
ChartPoint apply_transition(const ManifoldSpec& spec, const ChartPoint& p);

// Rewrites a chart self-map in the other chart's coordinates: with base
// x -> mu x^e and weights d = (b, a), entry (i, j) becomes
// mu^{-d_i} * x^{e d_i - d_j} * old_ij(1/x). This is the gluing oracle; it
// swaps the variable tags t and s and is an involution.
ChartMap conjugate_to_s_chart(const ChartMap& f, const ManifoldSpec& spec);

// The same rewrite for one matrix entry, usable on degenerate matrices that
// cannot form a ChartMap (e.g. columns of a linear system). d_row and d_col
// are the weights b or a of the entry's row and column.
LaurentPoly conjugate_fiber_entry(const LaurentPoly& entry, const MonomialBase& base, long d_row,
                                  long d_col, const std::string& target_var);

// One forbidden term of a failed gluing: a negative-exponent monomial in an
// entry of the conjugated fiber matrix.
struct ObstructionTerm {
    int row;
    int col;
    long exponent;
    CycloNum coeff;
};

struct GlueCheck {
    bool ok = false;
    // Empty exactly when ok.
    std::vector<ObstructionTerm> obstruction;
    // The conjugated chart map the verdict was read from.
    ChartMap induced;
};

// Decides whether a chart-0 self-map extends to the glued surface: both its
// own entries and every entry of its s-chart conjugate must be genuine
// polynomials. Failures carry the offending terms.
GlueCheck glues(const ChartMap& f, const ManifoldSpec& spec);

// A self-map of the glued total space, held as its two chart expressions.
class BundleMap {
  public:
    const ManifoldSpec& spec() const { return spec_; }
    const ChartMap& chart0() const { return chart0_; }
    const ChartMap& chart1() const { return chart1_; }
    bool verified() const { return verified_; }
    const std::vector<ObstructionTerm>& obstruction() const { return obstruction_; }

    friend bool operator==(const BundleMap& lhs, const BundleMap& rhs) {
        return lhs.spec_ == rhs.spec_ && lhs.chart0_ == rhs.chart0_ && lhs.chart1_ == rhs.chart1_;
    }
    friend bool operator!=(const BundleMap& lhs, const BundleMap& rhs) { return !(lhs == rhs); }

    friend BundleMap make_bundle_map(const ChartMap& chart0, const ManifoldSpec& spec);

  private:
    BundleMap(ManifoldSpec spec, ChartMap chart0, ChartMap chart1, bool verified,
              std::vector<ObstructionTerm> obstruction);

    ManifoldSpec spec_;
    ChartMap chart0_;
    ChartMap chart1_;
    bool verified_;
    std::vector<ObstructionTerm> obstruction_;
};

// Glues a chart-0 map; the result records success or the obstruction.
BundleMap make_bundle_map(const ChartMap& chart0, const ManifoldSpec& spec);

// The contraction in the t-chart: base fixed, fiber [[lambda, sigma0], [0, lambda]].
ChartMap contraction_chart0(const ManifoldSpec& spec);
// The glued contraction; throws GluingFailure when the exponents obstruct.
BundleMap contraction(const ManifoldSpec& spec);

// Chartwise composition; both factors must be verified over the same spec.
BundleMap compose(const BundleMap& outer, const BundleMap& inner);

bool commutes_with_contraction(const BundleMap& f, const ManifoldSpec& spec);

// Overlap consistency at one sample point: pushing p through chart 0 and
// then to chart 1 agrees with transitioning first and applying chart 1.
bool charts_agree_at(const BundleMap& f, const ChartPoint& p);

}  // namespace hopfbundle
