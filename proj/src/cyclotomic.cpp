#include "unbias/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace unbias {

namespace {

// Exact division of integer polynomials, ascending coefficients. The divisor
// must be monic and must divide evenly (used for Phi_N = (x^N - 1) / prod).
std::vector<Int> poly_exact_div(std::vector<Int> num, const std::vector<Int>& den) {
    int dn = static_cast<int>(num.size()) - 1;
    int dd = static_cast<int>(den.size()) - 1;
    std::vector<Int> quot(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
        Int c = num[i];
        quot[i - dd] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (Int c : num)
        if (c != 0) throw std::logic_error("poly_exact_div: non-zero remainder");
    return quot;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(int n) {
    static std::map<int, std::vector<Int>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<Int> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = poly_exact_div(std::move(num), cyclotomic_polynomial(d));
    }
    return cache.emplace(n, std::move(num)).first->second;
}

CycPoly cyc_add(const CycPoly& a, const CycPoly& b) {
    CycPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

CycPoly cyc_sub(const CycPoly& a, const CycPoly& b) {
    CycPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

CycPoly cyc_mul(const CycPoly& a, const CycPoly& b, int order) {
    CycPoly r(order, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[(i + j) % order] += a[i] * b[j];
        }
    }
    return r;
}

CycPoly cyc_conj(const CycPoly& a, int order) {
    CycPoly r(order, 0);
    for (size_t i = 0; i < a.size(); ++i) r[(order - i) % order] += a[i];
    return r;
}

CycPoly cyc_reduce(const CycPoly& a, int order) {
    const std::vector<Int>& phi = cyclotomic_polynomial(order);
    int dd = static_cast<int>(phi.size()) - 1;
    CycPoly rem(a);
    rem.resize(std::max<size_t>(a.size(), dd), 0);
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        Int c = rem[i];
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= c * phi[j];
    }
    rem.resize(dd);
    return rem;
}

bool cyc_is_zero(const CycPoly& a, int order) {
    for (Int c : cyc_reduce(a, order))
        if (c != 0) return false;
    return true;
}

std::optional<Int> cyc_integer_value(const CycPoly& a, int order) {
    CycPoly r = cyc_reduce(a, order);
    for (size_t i = 1; i < r.size(); ++i)
        if (r[i] != 0) return std::nullopt;
    return r.empty() ? 0 : r[0];
}

CycPoly cyc_lift(const CycPoly& a, int from, int to) {
    if (to % from != 0) throw std::invalid_argument("cyc_lift: target order not a multiple");
    int f = to / from;
    CycPoly r(to, 0);
    for (size_t i = 0; i < a.size(); ++i) r[i * f % to] += a[i];
    return r;
}

std::complex<double> cyc_eval(const CycPoly& a, int order) {
    std::complex<double> z = 0;
    constexpr double tau = 6.283185307179586476925286766559;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        double ang = tau * static_cast<double>(i % order) / order;
        z += static_cast<double>(a[i]) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return z;
}

Cyc::Cyc(int order, CycPoly num, Int den) : order_(order), num_(std::move(num)), den_(den) {
    if (order_ <= 0) throw std::invalid_argument("Cyc: order must be positive");
    if (den_ == 0) throw std::invalid_argument("Cyc: zero denominator");
    num_.resize(order_, 0);
    normalize();
}

Cyc Cyc::from_rat(const Rat& q) {
    return Cyc(1, CycPoly{q.numerator()}, q.denominator());
}

Cyc Cyc::root_of_unity(const Rat& phase) {
    Rat p = rat_mod1(phase);
    int n = static_cast<int>(p.denominator());
    CycPoly c(n, 0);
    c[static_cast<size_t>(p.numerator())] = 1;
    return Cyc(n, std::move(c));
}

void Cyc::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        for (Int& c : num_) c = -c;
    }
    Int g = den_;
    for (Int c : num_) g = std::gcd(g, c < 0 ? -c : c);
    if (g > 1) {
        den_ /= g;
        for (Int& c : num_) c /= g;
    }
}

Cyc Cyc::operator+(const Cyc& o) const {
    int n = static_cast<int>(std::lcm(order_, o.order_));
    CycPoly a = cyc_lift(num_, order_, n);
    CycPoly b = cyc_lift(o.num_, o.order_, n);
    Int d = std::lcm(den_, o.den_);
    Int fa = d / den_, fb = d / o.den_;
    CycPoly r(n, 0);
    for (int i = 0; i < n; ++i) r[i] = a[i] * fa + b[i] * fb;
    return Cyc(n, std::move(r), d);
}

Cyc Cyc::operator-(const Cyc& o) const { return *this + (-o); }

Cyc Cyc::operator-() const {
    CycPoly r = num_;
    for (Int& c : r) c = -c;
    return Cyc(order_, std::move(r), den_);
}

Cyc Cyc::operator*(const Cyc& o) const {
    int n = static_cast<int>(std::lcm(order_, o.order_));
    CycPoly a = cyc_lift(num_, order_, n);
    CycPoly b = cyc_lift(o.num_, o.order_, n);
    return Cyc(n, cyc_mul(a, b, n), den_ * o.den_);
}

Cyc Cyc::conj() const { return Cyc(order_, cyc_conj(num_, order_), den_); }

Cyc Cyc::scaled(const Rat& q) const {
    CycPoly r = num_;
    for (Int& c : r) c *= q.numerator();
    return Cyc(order_, std::move(r), den_ * q.denominator());
}

Cyc Cyc::pow(int k) const {
    if (k < 0) throw std::invalid_argument("Cyc::pow: negative exponent");
    Cyc r = from_rat(1);
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
}

bool Cyc::is_zero() const { return cyc_is_zero(num_, order_); }

std::optional<Rat> Cyc::rational() const {
    auto v = cyc_integer_value(num_, order_);
    if (!v) return std::nullopt;
    return Rat(*v, den_);
}

std::complex<double> Cyc::to_complex() const {
    return cyc_eval(num_, order_) / static_cast<double>(den_);
}

}  // namespace unbias
