#include "lip/poly.hpp"

#include <sstream>

namespace lip {

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(FieldPtr field, Elem c) {
    return Poly(std::move(field), {c});
}

Poly Poly::x(FieldPtr field) { return Poly(std::move(field), {0, 1}); }

Poly Poly::linear_root(FieldPtr field, Elem c) {
    Elem nc = field->neg(c);
    return Poly(std::move(field), {nc, 1});
}

bool Poly::operator==(const Poly& g) const {
    return field_->same(*g.field_) && coeffs_ == g.coeffs_;
}

Poly Poly::operator+(const Poly& g) const {
    require_same_field(*field_, *g.field_);
    std::vector<Elem> c(std::max(coeffs_.size(), g.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = field_->add(coeff(i), g.coeff(i));
    return Poly(field_, std::move(c));
}

Poly Poly::operator-(const Poly& g) const {
    require_same_field(*field_, *g.field_);
    std::vector<Elem> c(std::max(coeffs_.size(), g.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = field_->sub(coeff(i), g.coeff(i));
    return Poly(field_, std::move(c));
}

Poly Poly::operator*(const Poly& g) const {
    require_same_field(*field_, *g.field_);
    if (is_zero() || g.is_zero()) return Poly(field_);
    std::vector<Elem> c(coeffs_.size() + g.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j)
            c[i + j] = field_->add(c[i + j], field_->mul(coeffs_[i], g.coeffs_[j]));
    }
    return Poly(field_, std::move(c));
}

Poly Poly::scaled(Elem c) const {
    std::vector<Elem> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_->mul(coeffs_[i], c);
    return Poly(field_, std::move(v));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& g) const {
    require_same_field(*field_, *g.field_);
    if (g.is_zero()) throw DivisionByZeroPoly("polynomial division by zero");
    std::vector<Elem> rem = coeffs_;
    std::vector<Elem> quot;
    const Elem lead_inv = field_->inv(g.leading());
    if (rem.size() >= g.coeffs_.size())
        quot.assign(rem.size() - g.coeffs_.size() + 1, 0);
    while (rem.size() >= g.coeffs_.size() && !rem.empty()) {
        Elem c = field_->mul(rem.back(), lead_inv);
        std::size_t shift = rem.size() - g.coeffs_.size();
        quot[shift] = c;
        for (std::size_t i = 0; i < g.coeffs_.size(); ++i)
            rem[shift + i] = field_->sub(rem[shift + i], field_->mul(c, g.coeffs_[i]));
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    return {Poly(field_, std::move(quot)), Poly(field_, std::move(rem))};
}

bool Poly::divides(const Poly& g) const {
    return g.divrem(*this).second.is_zero();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_->inv(leading()));
}

Elem Poly::eval(Elem a) const {
    Elem r = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        r = field_->add(field_->mul(r, a), coeffs_[i]);
    return r;
}

bool Poly::is_irreducible() const {
    int deg = degree();
    if (deg < 1) throw DegreeZeroInput("irreducibility requires degree >= 1");
    const std::uint32_t q = field_->q();
    for (int d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= q;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<Elem> g(d + 1);
            std::uint64_t t = idx;
            for (int i = 0; i < d; ++i) { g[i] = static_cast<Elem>(t % q); t /= q; }
            g[d] = 1;
            if (Poly(field_, std::move(g)).divides(*this)) return false;
        }
    }
    return true;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (i == 0 || coeffs_[i] != 1) out << coeffs_[i];
        if (i > 0 && coeffs_[i] != 1) out << "*";
        if (i == 1) out << "x";
        if (i > 1) out << "x^" << i;
    }
    return out.str();
}

Poly poly_gcd(const Poly& f, const Poly& g) {
    require_same_field(*f.field(), *g.field());
    if (f.is_zero() && g.is_zero()) throw BothZero("gcd of two zero polynomials");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = a.divrem(b).second;
        a = b;
        b = r;
    }
    return a.monic();
}

Poly poly_lcm(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroInput("lcm requires nonzero inputs");
    Poly d = poly_gcd(f, g);
    return (f * g).divrem(d).first.monic();
}

Poly poly_from_roots(const FieldPtr& field, const std::vector<Elem>& roots) {
    Poly r = Poly::constant(field, 1);
    for (Elem a : roots) r = r * Poly::linear_root(field, a);
    return r;
}

std::vector<Poly> irreducibles(const FieldPtr& field, std::uint32_t degree,
                               std::size_t limit) {
    std::vector<Poly> out;
    if (degree == 0) {
        if (limit > 0) out.push_back(Poly::constant(field, 1));
        return out;
    }
    const std::uint32_t q = field->q();
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < degree; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count && out.size() < limit; ++idx) {
        std::vector<Elem> c(degree + 1);
        std::uint64_t t = idx;
        // ascending integer encoding sum c_i q^i: c_0 varies fastest
        for (std::uint32_t i = 0; i < degree; ++i) {
            c[i] = static_cast<Elem>(t % q);
            t /= q;
        }
        c[degree] = 1;
        Poly f(field, std::move(c));
        if (f.is_irreducible()) out.push_back(std::move(f));
    }
    return out;
}

int moebius(long long m) {
    int r = 1;
    for (long long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            m /= d;
            if (m % d == 0) return 0;
            r = -r;
        }
    }
    if (m > 1) r = -r;
    return r;
}

long long count_irreducibles(long long q, long long n) {
    if (n < 1) throw NonPositiveDegree("degree must be positive");
    long long sum = 0;
    for (long long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        long long pw = 1;
        for (long long i = 0; i < n / d; ++i) pw *= q;
        sum += moebius(d) * pw;
    }
    return sum / n;
}

} // namespace lip
