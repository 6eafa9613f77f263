#include "hopfbundle/moebius.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "hopfbundle/errors.hpp"

namespace hopfbundle {

ProjPoint::ProjPoint(CycloNum u, CycloNum v) : u_(std::move(u)), v_(std::move(v)) {
    align_all({&u_, &v_});
    if (u_.is_zero() && v_.is_zero())
        throw InvalidArgument("projective point needs a nonzero coordinate");
}

CycloNum ProjPoint::value() const {
    if (is_infinity()) throw DivisionByZero("point at infinity has no finite value");
    return u_ * v_.inv();
}

ProjPoint ProjPoint::normalized() const {
    const CycloNum& lead = u_.is_zero() ? v_ : u_;
    CycloNum s = lead.inv();
    return ProjPoint(u_ * s, v_ * s);
}

bool operator==(const ProjPoint& lhs, const ProjPoint& rhs) {
    auto [lu, ru] = aligned(lhs.u_, rhs.u_);
    auto [lv, rv] = aligned(lhs.v_, rhs.v_);
    align_all({&lu, &lv});
    align_all({&ru, &rv});
    auto [a, d] = aligned(lu, rv);
    auto [b, c] = aligned(ru, lv);
    return a * d == b * c;
}

std::string to_string(const ProjPoint& p) {
    if (p.is_infinity()) return "inf";
    return to_string(p.value());
}

Moebius::Moebius(CycloNum a, CycloNum b, CycloNum c, CycloNum d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    align_all({&a_, &b_, &c_, &d_});
    if ((a_ * d_ - b_ * c_).is_zero())
        throw InvalidArgument("fractional-linear map needs nonzero determinant");
}

Moebius Moebius::identity() {
    return Moebius(CycloNum(Rational(1)), CycloNum(Rational(0)), CycloNum(Rational(0)),
                   CycloNum(Rational(1)));
}

Moebius Moebius::scaling(const CycloNum& mu) {
    return Moebius(mu, CycloNum(Rational(0)), CycloNum(Rational(0)), CycloNum(Rational(1)));
}

Moebius Moebius::inversion(const CycloNum& mu) {
    return Moebius(CycloNum(Rational(0)), mu, CycloNum(Rational(1)), CycloNum(Rational(0)));
}

CycloNum Moebius::det() const { return a_ * d_ - b_ * c_; }

Moebius Moebius::inverse() const {
    CycloNum inv_det = det().inv();
    return Moebius(d_ * inv_det, -b_ * inv_det, -c_ * inv_det, a_ * inv_det);
}

Moebius Moebius::normalized() const {
    const CycloNum* lead = &a_;
    if (lead->is_zero()) lead = &b_;
    if (lead->is_zero()) lead = &c_;
    if (lead->is_zero()) lead = &d_;
    CycloNum s = lead->inv();
    return Moebius(a_ * s, b_ * s, c_ * s, d_ * s);
}

ProjPoint Moebius::apply(const ProjPoint& p) const {
    CycloNum a = a_, b = b_, c = c_, d = d_, u = p.u(), v = p.v();
    align_all({&a, &b, &c, &d, &u, &v});
    return ProjPoint(a * u + b * v, c * u + d * v);
}

bool Moebius::is_identity() const { return *this == identity(); }

Moebius operator*(const Moebius& lhs, const Moebius& rhs) {
    CycloNum a = lhs.a_, b = lhs.b_, c = lhs.c_, d = lhs.d_;
    CycloNum e = rhs.a_, f = rhs.b_, g = rhs.c_, h = rhs.d_;
    align_all({&a, &b, &c, &d, &e, &f, &g, &h});
    return Moebius(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h);
}

bool operator==(const Moebius& lhs, const Moebius& rhs) {
    Moebius l = lhs.normalized();
    Moebius r = rhs.normalized();
    return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_ && l.d_ == r.d_;
}

std::string to_string(const Moebius& m) {
    std::ostringstream out;
    out << "[[" << to_string(m.a()) << ", " << to_string(m.b()) << "], [" << to_string(m.c())
        << ", " << to_string(m.d()) << "]]";
    return out.str();
}

namespace {

// Matrix sending the triple (p1, p2, p3) to (0, 1, inf).
Moebius to_standard_triple(const std::array<ProjPoint, 3>& p) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (p[static_cast<std::size_t>(i)] == p[static_cast<std::size_t>(j)])
                throw InvalidArgument("triple points must be pairwise distinct");
    CycloNum u1 = p[0].u(), v1 = p[0].v();
    CycloNum u2 = p[1].u(), v2 = p[1].v();
    CycloNum u3 = p[2].u(), v3 = p[2].v();
    align_all({&u1, &v1, &u2, &v2, &u3, &v3});
    CycloNum top = u2 * v3 - u3 * v2;
    CycloNum bot = u2 * v1 - u1 * v2;
    return Moebius(top * v1, -(top * u1), bot * v3, -(bot * u3));
}

}  // namespace

Moebius through_triples(const std::array<ProjPoint, 3>& src, const std::array<ProjPoint, 3>& dst) {
    return to_standard_triple(dst).inverse() * to_standard_triple(src);
}

namespace {

bool contains(const std::vector<ProjPoint>& points, const ProjPoint& p) {
    for (const ProjPoint& q : points)
        if (q == p) return true;
    return false;
}

bool permutes(const Moebius& m, const std::vector<ProjPoint>& points) {
    for (const ProjPoint& p : points)
        if (!contains(points, m.apply(p))) return false;
    return true;
}

}  // namespace

std::vector<Moebius> stabilizer(const std::vector<ProjPoint>& points) {
    if (points.size() < 3)
        throw InvalidArgument("stabilizer needs at least three points to be finite");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw InvalidArgument("stabilizer points must be distinct");

    std::array<ProjPoint, 3> src{points[0], points[1], points[2]};
    std::vector<Moebius> found;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < points.size(); ++j)
            for (std::size_t k = 0; k < points.size(); ++k) {
                if (i == j || j == k || i == k) continue;
                Moebius m = through_triples(src, {points[i], points[j], points[k]});
                if (!permutes(m, points)) continue;
                bool seen = false;
                for (const Moebius& g : found)
                    if (g == m) {
                        seen = true;
                        break;
                    }
                if (!seen) found.push_back(m.normalized());
            }
    return found;
}

std::optional<CycloNum> is_rotation_about_zero(const Moebius& m) {
    if (!m.b().is_zero() || !m.c().is_zero()) return std::nullopt;
    return m.a() * m.d().inv();
}

long element_order(const Moebius& m, long cap) {
    Moebius power = m;
    for (long k = 1; k <= cap; ++k) {
        if (power.is_identity()) return k;
        power = power * m;
    }
    throw InvalidArgument("element order exceeds cap " + std::to_string(cap));
}

std::string SubgroupLabel::name() const {
    switch (kind) {
        case SubgroupKind::Cyclic:
            return "cyclic(" + std::to_string(parameter) + ")";
        case SubgroupKind::Dihedral:
            return "dihedral(" + std::to_string(parameter) + ")";
        case SubgroupKind::Tetrahedral:
            return "tetrahedral";
        case SubgroupKind::Octahedral:
            return "octahedral";
        case SubgroupKind::Icosahedral:
            return "icosahedral";
    }
    throw InvalidArgument("unknown subgroup kind");
}

SubgroupLabel classify_finite_subgroup(const std::vector<Moebius>& elements) {
    if (elements.empty()) throw InvalidArgument("empty set is not a group");
    const long n = static_cast<long>(elements.size());

    auto find = [&](const Moebius& m) {
        for (const Moebius& g : elements)
            if (g == m) return true;
        return false;
    };
    if (!find(Moebius::identity())) throw InvalidArgument("set lacks the identity");
    for (const Moebius& g : elements) {
        if (!find(g.inverse())) throw InvalidArgument("set is not closed under inverses");
        for (const Moebius& h : elements)
            if (!find(g * h)) throw InvalidArgument("set is not closed under composition");
    }

    std::vector<long> orders;
    orders.reserve(elements.size());
    std::map<long, long> profile;
    for (const Moebius& g : elements) {
        long k = element_order(g, n);
        orders.push_back(k);
        ++profile[k];
    }

    for (std::size_t i = 0; i < elements.size(); ++i)
        if (orders[i] == n) return {SubgroupKind::Cyclic, n, n};

    if (n % 2 == 0) {
        const long m = n / 2;
        for (std::size_t i = 0; i < elements.size(); ++i) {
            if (orders[i] != m) continue;
            std::vector<Moebius> cycle;
            Moebius power = Moebius::identity();
            for (long k = 0; k < m; ++k) {
                cycle.push_back(power);
                power = power * elements[i];
            }
            bool all_flips = true;
            for (const Moebius& g : elements) {
                bool inside = false;
                for (const Moebius& c : cycle)
                    if (c == g) {
                        inside = true;
                        break;
                    }
                if (!inside && element_order(g, n) != 2) {
                    all_flips = false;
                    break;
                }
            }
            if (all_flips) return {SubgroupKind::Dihedral, n, m};
        }
    }

    const std::map<long, long> tetra{{1, 1}, {2, 3}, {3, 8}};
    const std::map<long, long> octa{{1, 1}, {2, 9}, {3, 8}, {4, 6}};
    const std::map<long, long> icosa{{1, 1}, {2, 15}, {3, 20}, {5, 24}};
    if (n == 12 && profile == tetra) return {SubgroupKind::Tetrahedral, 12, 0};
    if (n == 24 && profile == octa) return {SubgroupKind::Octahedral, 24, 0};
    if (n == 60 && profile == icosa) return {SubgroupKind::Icosahedral, 60, 0};

    throw InvalidArgument("group matches no finite fractional-linear type");
}

}  // namespace hopfbundle
