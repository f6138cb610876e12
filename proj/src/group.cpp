#include "unbias/group.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace unbias {

bool GroupElement::is_zero() const {
    for (Int c : coords)
        if (c != 0) return false;
    return true;
}

bool TorusElement::is_integral() const {
    for (const Rat& c : coords)
        if (!is_integer(c)) return false;
    return true;
}

GroupElement TorusElement::to_group() const {
    if (!is_integral()) throw std::domain_error("TorusElement: not integral");
    GroupElement g;
    for (const Rat& c : coords) g.coords.push_back(c.numerator());
    return g;
}

TorusElement to_torus(const GroupElement& g) {
    TorusElement t;
    for (Int c : g.coords) t.coords.emplace_back(c);
    return t;
}

AbelianGroup::AbelianGroup(std::vector<Int> moduli) : moduli_(std::move(moduli)) {
    order_ = 1;
    for (Int d : moduli_) {
        if (d < 1) throw std::invalid_argument("AbelianGroup: modulus must be >= 1");
        order_ *= d;
    }
}

GroupElement AbelianGroup::zero() const {
    return GroupElement{std::vector<Int>(moduli_.size(), 0)};
}

GroupElement AbelianGroup::element(std::vector<Int> coords) const {
    if (coords.size() != moduli_.size())
        throw std::invalid_argument("AbelianGroup: coordinate count mismatch");
    for (size_t i = 0; i < coords.size(); ++i) {
        coords[i] %= moduli_[i];
        if (coords[i] < 0) coords[i] += moduli_[i];
    }
    return GroupElement{std::move(coords)};
}

TorusElement AbelianGroup::torus(std::vector<Rat> coords) const {
    if (coords.size() != moduli_.size())
        throw std::invalid_argument("AbelianGroup: coordinate count mismatch");
    for (size_t i = 0; i < coords.size(); ++i) coords[i] = rat_mod(coords[i], moduli_[i]);
    return TorusElement{std::move(coords)};
}

void AbelianGroup::check(const GroupElement& g) const {
    if (g.coords.size() != moduli_.size())
        throw std::invalid_argument("AbelianGroup: element rank mismatch");
}

void AbelianGroup::check(const TorusElement& g) const {
    if (g.coords.size() != moduli_.size())
        throw std::invalid_argument("AbelianGroup: element rank mismatch");
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    check(a);
    check(b);
    std::vector<Int> c(moduli_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = (a.coords[i] + b.coords[i]) % moduli_[i];
    return GroupElement{std::move(c)};
}

GroupElement AbelianGroup::neg(const GroupElement& a) const {
    check(a);
    std::vector<Int> c(moduli_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] == 0 ? 0 : moduli_[i] - a.coords[i];
    return GroupElement{std::move(c)};
}

GroupElement AbelianGroup::sub(const GroupElement& a, const GroupElement& b) const {
    return add(a, neg(b));
}

GroupElement AbelianGroup::mul(const GroupElement& a, Int k) const {
    check(a);
    std::vector<Int> c(moduli_.size());
    for (size_t i = 0; i < c.size(); ++i) {
        Int v = (a.coords[i] * (k % moduli_[i])) % moduli_[i];
        c[i] = v < 0 ? v + moduli_[i] : v;
    }
    return GroupElement{std::move(c)};
}

TorusElement AbelianGroup::add(const TorusElement& a, const TorusElement& b) const {
    check(a);
    check(b);
    std::vector<Rat> c(moduli_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = rat_mod(a.coords[i] + b.coords[i], moduli_[i]);
    return TorusElement{std::move(c)};
}

TorusElement AbelianGroup::neg(const TorusElement& a) const {
    check(a);
    std::vector<Rat> c(moduli_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = rat_mod(-a.coords[i], moduli_[i]);
    return TorusElement{std::move(c)};
}

TorusElement AbelianGroup::sub(const TorusElement& a, const TorusElement& b) const {
    return add(a, neg(b));
}

std::vector<GroupElement> AbelianGroup::elements() const {
    std::vector<GroupElement> out;
    out.reserve(static_cast<size_t>(order_));
    for (Int i = 0; i < order_; ++i) out.push_back(at(i));
    return out;
}

Int AbelianGroup::index(const GroupElement& g) const {
    check(g);
    Int idx = 0;
    for (size_t i = 0; i < moduli_.size(); ++i) idx = idx * moduli_[i] + g.coords[i];
    return idx;
}

GroupElement AbelianGroup::at(Int idx) const {
    std::vector<Int> c(moduli_.size());
    for (size_t i = moduli_.size(); i-- > 0;) {
        c[i] = idx % moduli_[i];
        idx /= moduli_[i];
    }
    return GroupElement{std::move(c)};
}

bool AbelianGroup::in_torus_star(const TorusElement& x) const {
    check(x);
    for (size_t i = 0; i < x.coords.size(); ++i)
        if (is_integer(x.coords[i]) && x.coords[i].numerator() != 0) return true;
    return false;
}

bool AbelianGroup::in_torus_star_float(const std::vector<double>& coords, double tol) const {
    if (coords.size() != moduli_.size())
        throw std::invalid_argument("AbelianGroup: element rank mismatch");
    for (size_t i = 0; i < coords.size(); ++i) {
        double c = coords[i] - std::floor(coords[i] / moduli_[i]) * moduli_[i];
        double nearest = std::round(c);
        if (std::abs(c - nearest) < tol) {
            double v = nearest == moduli_[i] ? 0.0 : nearest;
            if (std::abs(v) > tol) return true;
        }
    }
    return false;
}

Rat character(const TorusElement& a, const TorusElement& b, const AbelianGroup& G) {
    if (a.coords.size() != G.rank() || b.coords.size() != G.rank())
        throw std::invalid_argument("character: rank mismatch");
    Rat phase = 0;
    for (size_t j = 0; j < G.rank(); ++j)
        phase += a.coords[j] * b.coords[j] / Rat(G.moduli()[j]);
    return rat_mod1(phase);
}

Rat character(const GroupElement& a, const GroupElement& b, const AbelianGroup& G) {
    return character(to_torus(a), to_torus(b), G);
}

Rat character(const GroupElement& a, const TorusElement& b, const AbelianGroup& G) {
    return character(to_torus(a), b, G);
}

Cyc character_sum(const TorusElement& x, const AbelianGroup& G) {
    Cyc sum = Cyc::from_rat(0);
    for (const GroupElement& y : G.elements())
        sum += Cyc::root_of_unity(character(y, x, G));
    return sum;
}

bool character_sum_is_zero(const TorusElement& x, const AbelianGroup& G) {
    return character_sum(x, G).is_zero();
}

std::string to_string(const GroupElement& g) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < g.coords.size(); ++i) os << (i ? "," : "") << g.coords[i];
    os << ')';
    return os.str();
}

std::string to_string(const TorusElement& t) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < t.coords.size(); ++i) {
        if (i) os << ',';
        os << t.coords[i].numerator();
        if (t.coords[i].denominator() != 1) os << '/' << t.coords[i].denominator();
    }
    os << ')';
    return os.str();
}

}  // namespace unbias
