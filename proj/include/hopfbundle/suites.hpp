#pragma once

#include <vector>

#include "hopfbundle/bundle.hpp"
#include "hopfbundle/moebius.hpp"
#include "hopfbundle/report.hpp"

namespace hopfbundle {

// The full verification battery for one family member: gluing and its
// boundary counterexample, fiber classification, stabilizer rigidity, the
// ansatz dimension count, group law and component group, and the
// deformation-family identities. Deterministic: fixed sampling seeds.
Report verify_suite(const ManifoldSpec& spec);

// Stabilizer of an explicit point configuration: order, elements, rotation
// census, and the finite-subgroup label.
Report stabilizer_suite(const std::vector<ProjPoint>& points);

// Component group data for one member.
Report components_suite(const ManifoldSpec& spec);

// Ansatz nullspace for one rotation index and degree bound.
Report solve_suite(const ManifoldSpec& spec, long k, long degree_bound);

}  // namespace hopfbundle
