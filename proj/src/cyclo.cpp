#include "hopfbundle/cyclo.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hopfbundle/errors.hpp"

namespace hopfbundle {
namespace {

// Dense univariate polynomials over Q, low degree first, used only to build
// and reduce against the cyclotomic moduli.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly mul(const QPoly& p, const QPoly& q) {
    if (p.empty() || q.empty()) return {};
    QPoly out(p.size() + q.size() - 1, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    }
    trim(out);
    return out;
}

// Quotient and remainder of p by monic-or-not divisor d (exact field division).
std::pair<QPoly, QPoly> divmod(QPoly p, const QPoly& d) {
    trim(p);
    if (d.empty()) throw DivisionByZero("polynomial division by zero");
    QPoly q;
    if (p.size() >= d.size()) q.assign(p.size() - d.size() + 1, Rational(0));
    const Rational& lead = d.back();
    while (p.size() >= d.size()) {
        Rational factor = p.back() / lead;
        std::size_t shift = p.size() - d.size();
        q[shift] = factor;
        for (std::size_t i = 0; i < d.size(); ++i) p[shift + i] -= factor * d[i];
        trim(p);  // the leading term cancels exactly, so p shrinks every pass
    }
    trim(q);
    return {q, p};
}

QPoly mod(const QPoly& p, const QPoly& d) { return divmod(p, d).second; }

QPoly x_pow_minus_one(long n) {
    QPoly p(static_cast<std::size_t>(n) + 1, Rational(0));
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    return p;
}

}  // namespace

std::vector<Rational> cyclotomic_poly(long n) {
    if (n < 1) throw InvalidArgument("cyclotomic_poly: n must be >= 1");
    static std::map<long, QPoly> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (X^n - 1) / prod_{d | n, d < n} Phi_d, exact division.
    std::function<QPoly(long)> phi = [&](long m) -> QPoly {
        auto hit = cache.find(m);
        if (hit != cache.end()) return hit->second;
        QPoly numerator = x_pow_minus_one(m);
        for (long d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            auto [quot, rem] = divmod(numerator, phi(d));
            if (!rem.empty()) throw std::logic_error("cyclotomic recursion: division not exact");
            numerator = quot;
        }
        cache.emplace(m, numerator);
        return numerator;
    };
    return phi(n);
}

CycloCtx::CycloCtx(long n) : n_(n) {
    modulus_ = cyclotomic_poly(n);
    degree_ = modulus_.size() - 1;
}

const CycloCtx& CycloCtx::get(long n) {
    if (n < 1) throw InvalidArgument("CycloCtx: conductor must be >= 1");
    static std::map<long, std::unique_ptr<CycloCtx>> registry;
    static std::mutex registry_mutex;
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto& slot = registry[n];
    if (!slot) slot.reset(new CycloCtx(n));
    return *slot;
}

namespace {

// Reduces an arbitrary-length coefficient vector mod Phi_n to the canonical
// phi(n)-length residue.
std::vector<Rational> reduce(const CycloCtx& ctx, QPoly raw) {
    QPoly r = mod(std::move(raw), ctx.modulus());
    r.resize(ctx.degree(), Rational(0));
    return r;
}

}  // namespace

CycloNum::CycloNum() : ctx_(&CycloCtx::get(1)), coeffs_(1, Rational(0)) {}

CycloNum::CycloNum(Rational value) : ctx_(&CycloCtx::get(1)), coeffs_(1, std::move(value)) {}

CycloNum::CycloNum(const CycloCtx& ctx, std::vector<Rational> coeffs) : ctx_(&ctx) {
    if (coeffs.size() > ctx.degree()) {
        coeffs_ = reduce(ctx, std::move(coeffs));
    } else {
        coeffs.resize(ctx.degree(), Rational(0));
        coeffs_ = std::move(coeffs);
    }
}

CycloNum CycloNum::zero(const CycloCtx& ctx) { return CycloNum(ctx, {}); }

CycloNum CycloNum::one(const CycloCtx& ctx) { return from_rational(ctx, Rational(1)); }

CycloNum CycloNum::from_rational(const CycloCtx& ctx, const Rational& value) {
    std::vector<Rational> c(ctx.degree(), Rational(0));
    c[0] = value;
    return CycloNum(ctx, std::move(c));
}

CycloNum CycloNum::root_of_unity(const CycloCtx& ctx, long k) {
    long n = ctx.conductor();
    k %= n;
    if (k < 0) k += n;
    QPoly raw(static_cast<std::size_t>(k) + 1, Rational(0));
    raw[static_cast<std::size_t>(k)] = 1;
    return CycloNum(ctx, reduce(ctx, std::move(raw)));
}

long CycloNum::conductor() const { return ctx_->conductor(); }

bool CycloNum::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CycloNum::is_one() const {
    if (coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CycloNum::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

std::optional<Rational> CycloNum::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return coeffs_[0];
}

CycloNum CycloNum::promoted(long target) const {
    long n = ctx_->conductor();
    if (target == n) return *this;
    if (target < n || target % n != 0)
        throw InvalidArgument("promoted: target conductor must be a multiple of the current one");
    const CycloCtx& big = CycloCtx::get(target);
    long stride = target / n;
    QPoly raw(static_cast<std::size_t>((ctx_->degree() - 1) * stride) + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        raw[i * static_cast<std::size_t>(stride)] = coeffs_[i];
    return CycloNum(big, reduce(big, std::move(raw)));
}

namespace {

void require_same_ctx(const CycloNum& a, const CycloNum& b, const char* op) {
    if (&a.ctx() != &b.ctx())
        throw ConductorMismatch(std::string(op) + ": conductors " + std::to_string(a.conductor()) +
                                " vs " + std::to_string(b.conductor()) +
                                " (promote to a common conductor first)");
}

}  // namespace

CycloNum CycloNum::operator-() const {
    CycloNum out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CycloNum& CycloNum::operator+=(const CycloNum& rhs) {
    require_same_ctx(*this, rhs, "add");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& rhs) {
    require_same_ctx(*this, rhs, "sub");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& rhs) {
    require_same_ctx(*this, rhs, "mul");
    QPoly a(coeffs_.begin(), coeffs_.end());
    QPoly b(rhs.coeffs_.begin(), rhs.coeffs_.end());
    trim(a);
    trim(b);
    coeffs_ = reduce(*ctx_, mul(a, b));
    return *this;
}

CycloNum CycloNum::inv() const {
    if (is_zero()) throw DivisionByZero("inv: zero element");
    // Extended Euclid on (f, Phi_n): u*f + v*Phi_n = gcd = const.
    QPoly r0(coeffs_.begin(), coeffs_.end());
    trim(r0);
    QPoly r1 = ctx_->modulus();
    QPoly s0 = {Rational(1)};
    QPoly s1 = {};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        QPoly s_next = s0;
        QPoly qs1 = mul(q, s1);
        s_next.resize(std::max(s_next.size(), qs1.size()), Rational(0));
        for (std::size_t i = 0; i < qs1.size(); ++i) s_next[i] -= qs1[i];
        trim(s_next);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s_next);
    }
    if (r0.size() != 1) throw std::logic_error("inv: gcd with irreducible modulus is not constant");
    for (auto& c : s0) c /= r0[0];
    return CycloNum(*ctx_, reduce(*ctx_, std::move(s0)));
}

CycloNum CycloNum::pow(long e) const {
    if (e == 0) return one(*ctx_);
    CycloNum base = e < 0 ? inv() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1UL : static_cast<unsigned long>(e);
    CycloNum acc = one(*ctx_);
    while (n > 0) {
        if (n & 1UL) acc *= base;
        if (n >>= 1UL) base *= base;
    }
    return acc;
}

bool CycloNum::operator==(const CycloNum& rhs) const {
    if (ctx_ == rhs.ctx_) return coeffs_ == rhs.coeffs_;
    auto [a, b] = aligned(*this, rhs);
    return a.coeffs() == b.coeffs();
}

std::pair<CycloNum, CycloNum> aligned(const CycloNum& x, const CycloNum& y) {
    long l = std::lcm(x.conductor(), y.conductor());
    return {x.promoted(l), y.promoted(l)};
}

void align_all(std::initializer_list<CycloNum*> xs) {
    long target = 1;
    for (const CycloNum* x : xs) target = std::lcm(target, x->conductor());
    for (CycloNum* x : xs) *x = x->promoted(target);
}

int compare(const CycloNum& x, const CycloNum& y) {
    auto [a, b] = aligned(x, y);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        int c = cmp(a.coeffs()[i], b.coeffs()[i]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

long multiplicative_order(const CycloNum& x, long cap) {
    if (x.is_zero()) return 0;
    CycloNum acc = x;
    for (long m = 1; m <= cap; ++m) {
        if (acc.is_one()) return m;
        acc *= x;
    }
    return 0;
}

std::string to_string(const CycloNum& x) {
    if (x.is_zero()) return "0";
    long n = x.conductor();
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        const Rational& c = x.coeffs()[i];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool unit_coeff = mag == 1 && i > 0;
        if (!unit_coeff) out << mag.get_str();
        if (i > 0) {
            if (!unit_coeff) out << "*";
            out << "zeta(" << n << ")";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace hopfbundle
