#include "unbias/field.hpp"

#include <stdexcept>

namespace unbias {

namespace {

Int mod_p(Int v, Int p) {
    v %= p;
    return v < 0 ? v + p : v;
}

// Remainder of a modulo b over Z_p; b monic, ascending coefficients.
std::vector<Int> poly_mod(std::vector<Int> a, const std::vector<Int>& b, Int p) {
    int db = static_cast<int>(b.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        Int c = a[i] % p;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) a[i - db + j] = mod_p(a[i - db + j] - c * b[j], p);
    }
    a.resize(db);
    for (Int& c : a) c = mod_p(c, p);
    return a;
}

bool poly_divides(const std::vector<Int>& d, const std::vector<Int>& a, Int p) {
    for (Int c : poly_mod(a, d, p))
        if (c % p != 0) return false;
    return true;
}

}  // namespace

bool FieldElement::is_zero() const {
    for (Int c : coeffs)
        if (c != 0) return false;
    return true;
}

bool is_irreducible_mod_p(const std::vector<Int>& poly, Int p) {
    int k = static_cast<int>(poly.size()) - 1;
    if (k < 1 || poly[k] != 1) return false;
    if (k == 1) return true;
    for (int d = 1; 2 * d <= k; ++d) {
        // all monic divisor candidates of degree d
        Int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (Int code = 0; code < count; ++code) {
            std::vector<Int> cand(d + 1, 0);
            Int c = code;
            for (int i = 0; i < d; ++i) {
                cand[i] = c % p;
                c /= p;
            }
            cand[d] = 1;
            if (poly_divides(cand, poly, p)) return false;
        }
    }
    return true;
}

std::vector<Int> default_irreducible(Int p, int k) {
    Int count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    // lexicographic over (c_{k-1}, ..., c_0), smallest first
    for (Int code = 0; code < count; ++code) {
        std::vector<Int> cand(k + 1, 0);
        Int c = code;
        for (int i = k - 1; i >= 0; --i) {
            cand[i] = c % p;
            c /= p;
        }
        cand[k] = 1;
        if (is_irreducible_mod_p(cand, p)) return cand;
    }
    throw std::logic_error("default_irreducible: none found");
}

FiniteField::FiniteField(Int p, int k, std::vector<Int> h) : p_(p), k_(k), h_(std::move(h)) {
    if (!is_prime(p_)) throw std::invalid_argument("FiniteField: p must be prime");
    if (k_ < 1) throw std::invalid_argument("FiniteField: k must be positive");
    if (static_cast<int>(h_.size()) != k_ + 1)
        throw std::invalid_argument("FiniteField: modulus must have degree k");
    for (Int& c : h_) c = mod_p(c, p_);
    if (h_[k_] != 1) throw std::invalid_argument("FiniteField: modulus must be monic");
    if (!is_irreducible_mod_p(h_, p_))
        throw std::invalid_argument("FiniteField: modulus is reducible");
    order_ = 1;
    for (int i = 0; i < k_; ++i) order_ *= p_;
}

FiniteField::FiniteField(Int p, int k) : FiniteField(p, k, default_irreducible(p, k)) {}

void FiniteField::check(const FieldElement& a) const {
    if (static_cast<int>(a.coeffs.size()) != k_)
        throw std::invalid_argument("FiniteField: element size mismatch");
}

FieldElement FiniteField::zero() const { return FieldElement{std::vector<Int>(k_, 0)}; }

FieldElement FiniteField::one() const {
    std::vector<Int> c(k_, 0);
    c[0] = 1;
    return FieldElement{std::move(c)};
}

FieldElement FiniteField::element(std::vector<Int> coeffs) const {
    if (static_cast<int>(coeffs.size()) != k_)
        throw std::invalid_argument("FiniteField: element size mismatch");
    for (Int& c : coeffs) c = mod_p(c, p_);
    return FieldElement{std::move(coeffs)};
}

FieldElement FiniteField::from_int(Int v) const { return at(mod_p(v, order_)); }

FieldElement FiniteField::add(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    std::vector<Int> c(k_);
    for (int i = 0; i < k_; ++i) c[i] = mod_p(a.coeffs[i] + b.coeffs[i], p_);
    return FieldElement{std::move(c)};
}

FieldElement FiniteField::neg(const FieldElement& a) const {
    check(a);
    std::vector<Int> c(k_);
    for (int i = 0; i < k_; ++i) c[i] = mod_p(-a.coeffs[i], p_);
    return FieldElement{std::move(c)};
}

FieldElement FiniteField::sub(const FieldElement& a, const FieldElement& b) const {
    return add(a, neg(b));
}

FieldElement FiniteField::mul(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    std::vector<Int> prod(2 * k_ - 1, 0);
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) prod[i + j] += a.coeffs[i] * b.coeffs[j];
    std::vector<Int> r = poly_mod(std::move(prod), h_, p_);
    r.resize(k_, 0);
    return FieldElement{std::move(r)};
}

FieldElement FiniteField::pow(const FieldElement& a, Int e) const {
    if (e < 0) return pow(inv(a), -e);
    FieldElement r = one();
    FieldElement base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FieldElement FiniteField::inv(const FieldElement& a) const {
    check(a);
    if (a.is_zero()) throw std::domain_error("FiniteField: inverse of zero");
    return pow(a, order_ - 2);
}

FieldElement FiniteField::scalar_mul(Int c, const FieldElement& a) const {
    check(a);
    std::vector<Int> r(k_);
    for (int i = 0; i < k_; ++i) r[i] = mod_p(c * a.coeffs[i], p_);
    return FieldElement{std::move(r)};
}

std::vector<FieldElement> FiniteField::elements() const {
    std::vector<FieldElement> out;
    out.reserve(static_cast<size_t>(order_));
    for (Int i = 0; i < order_; ++i) out.push_back(at(i));
    return out;
}

Int FiniteField::index(const FieldElement& a) const {
    check(a);
    Int idx = 0;
    for (int i = 0; i < k_; ++i) idx = idx * p_ + a.coeffs[i];
    return idx;
}

FieldElement FiniteField::at(Int idx) const {
    std::vector<Int> c(k_);
    for (int i = k_ - 1; i >= 0; --i) {
        c[i] = idx % p_;
        idx /= p_;
    }
    return FieldElement{std::move(c)};
}

AbelianGroup FiniteField::additive_group() const {
    return AbelianGroup(std::vector<Int>(k_, p_));
}

GroupElement FiniteField::to_group(const FieldElement& a) const {
    check(a);
    return GroupElement{a.coeffs};
}

FieldElement FiniteField::from_group(const GroupElement& g) const {
    if (static_cast<int>(g.coords.size()) != k_)
        throw std::invalid_argument("FiniteField: group element rank mismatch");
    return element(g.coords);
}

TorusElement FiniteField::half_square(const FieldElement& x) const {
    if (p_ != 2) throw std::domain_error("half_square: requires characteristic 2");
    check(x);
    // square over Z[x]
    std::vector<Int> sq(2 * k_ - 1, 0);
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) sq[i + j] += x.coeffs[i] * x.coeffs[j];
    // reduce modulo h keeping integer coefficients (h is monic)
    for (int i = static_cast<int>(sq.size()) - 1; i >= k_; --i) {
        Int c = sq[i];
        if (c == 0) continue;
        for (int j = 0; j <= k_; ++j) sq[i - k_ + j] -= c * h_[j];
    }
    sq.resize(k_, 0);
    // halve and reduce into R_2^k
    std::vector<Rat> coords(k_);
    for (int i = 0; i < k_; ++i) coords[i] = rat_mod(Rat(sq[i], 2), 2);
    return TorusElement{std::move(coords)};
}

bool is_prime(Int n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool prime_power_decompose(Int n, Int& p, int& k) {
    if (n < 2) return false;
    Int d = 2;
    while (d * d <= n && n % d != 0) ++d;
    p = (d * d <= n) ? d : n;
    Int m = n;
    k = 0;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    return m == 1;
}

}  // namespace unbias
