#include "hopfbundle/hopf.hpp"

#include <stdexcept>

namespace hopfbundle {

std::string to_string(HopfClass cls) { return cls == HopfClass::X0 ? "X0" : "X1"; }

HopfClass classify_fiber(const ManifoldSpec& spec, const FiberPoint& at) {
    CycloNum value = at.is_infinity() ? spec.sigma1().evaluate(CycloNum(Rational(0)))
                                      : spec.sigma0().evaluate(at.value());
    return value.is_zero() ? HopfClass::X0 : HopfClass::X1;
}

std::vector<FiberPoint> special_fibers(const ManifoldSpec& spec) {
    std::vector<FiberPoint> points;
    points.push_back(FiberPoint::finite(CycloNum(Rational(0))));
    for (long k = 0; k < spec.a(); ++k)
        points.push_back(FiberPoint::finite(CycloNum::root_of_unity(spec.a(), k)));

    for (const FiberPoint& p : points)
        if (classify_fiber(spec, p) != HopfClass::X0)
            throw std::logic_error("special fiber failed its re-check: " + to_string(p));
    for (const FiberPoint& witness :
         {FiberPoint::finite(CycloNum(Rational(2))), FiberPoint::infinity()})
        if (classify_fiber(spec, witness) != HopfClass::X1)
            throw std::logic_error("off-locus witness classified as special: " +
                                   to_string(witness));
    return points;
}

}  // namespace hopfbundle
