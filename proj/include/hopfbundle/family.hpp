#pragma once

#include <array>
#include <string>
#include <vector>

#include "hopfbundle/autgrp.hpp"
#include "hopfbundle/bundle.hpp"
#include "hopfbundle/epspoly.hpp"

namespace hopfbundle {

// Self-map of one chart of the whole deformation family: the base map is
// eps-independent, the fiber matrix may carry the deformation parameter.
// The fiber determinant must be nonzero as an exact two-variable polynomial
// (nonzero at generic eps).
class FamilyMap {
  public:
    FamilyMap(Moebius base, std::array<EpsPoly, 4> fiber);

    static FamilyMap identity(const std::string& var);

    const Moebius& base() const { return base_; }
    const EpsPoly& entry(int row, int col) const;
    const std::string& var() const { return fiber_[0].var(); }

    friend bool operator==(const FamilyMap& lhs, const FamilyMap& rhs) {
        return lhs.base_ == rhs.base_ && lhs.fiber_ == rhs.fiber_;
    }
    friend bool operator!=(const FamilyMap& lhs, const FamilyMap& rhs) { return !(lhs == rhs); }

  private:
    Moebius base_;
    std::array<EpsPoly, 4> fiber_;
};

std::string to_string(const FamilyMap& f);

// The family contraction: base fixed, fiber [[lambda, eps * sigma0], [0, lambda]].
// At eps = 1 it specializes to the contraction of the glued surface, at
// eps = 0 to the plain lambda-homothety of the bundle.
FamilyMap family_contraction(const ManifoldSpec& spec);

// The eps = 0 member of the family of contractions: the lambda-homothety.
FamilyMap homothety_contraction(const ManifoldSpec& spec);

// An automorphism of the glued surface read as an eps-independent family
// map. Requires is_automorphism(e).
FamilyMap extend_to_family(const AutElement& e, const ManifoldSpec& spec);

// Composition within one chart, eps carried along exactly.
FamilyMap compose(const FamilyMap& outer, const FamilyMap& inner);

// The chart-swap conjugation, entrywise in t with eps untouched.
FamilyMap conjugate_to_s_chart(const FamilyMap& f, const ManifoldSpec& spec);

struct FamilyObstructionTerm {
    int row;
    int col;
    long t_exponent;
    long eps_exponent;
    CycloNum coeff;
};

struct FamilyGlueCheck {
    bool ok = false;
    std::vector<FamilyObstructionTerm> obstruction;
    FamilyMap induced;
};

// Gluing over the whole family: every entry of the map and of its conjugate
// must be polynomial in the chart variable for generic eps.
FamilyGlueCheck family_glues(const FamilyMap& f, const ManifoldSpec& spec);

// Exact commutation with the family contraction, as identities in both the
// chart variable and eps, checked in both charts. The map must glue.
bool commutes_in_family(const FamilyMap& f, const ManifoldSpec& spec);

// Whether the base scaling t -> mu t lifts to a glued map commuting with the
// contraction — of the eps = 0 bundle when at_eps_zero, of the whole family
// otherwise. The canonical diagonal lift (identity fiber) decides this: any
// commuting lift forces the same constraint on the base scalar.
bool scaling_lift(const CycloNum& mu, const ManifoldSpec& spec, bool at_eps_zero);

// eps := value, collapsing to a one-chart map of the corresponding member.
ChartMap specialize_eps(const FamilyMap& f, const CycloNum& value);

}  // namespace hopfbundle
