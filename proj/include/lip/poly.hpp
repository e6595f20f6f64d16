#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lip/gf.hpp"

namespace lip {

/// Dense univariate polynomial over a Field, coefficients lowest degree
/// first with no trailing zeros. The zero polynomial has an empty
/// coefficient vector and degree() == -1 (treated as below every integer).
class Poly {
public:
    explicit Poly(FieldPtr field) : field_(std::move(field)) {}
    Poly(FieldPtr field, std::vector<Elem> coeffs);

    static Poly zero(FieldPtr field) { return Poly(std::move(field)); }
    static Poly constant(FieldPtr field, Elem c);
    static Poly x(FieldPtr field);
    /// x - c
    static Poly linear_root(FieldPtr field, Elem c);

    const FieldPtr& field() const { return field_; }
    const std::vector<Elem>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    Elem leading() const { return coeffs_.back(); }
    Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

    bool operator==(const Poly& g) const;

    Poly operator+(const Poly& g) const;
    Poly operator-(const Poly& g) const;
    Poly operator*(const Poly& g) const;
    Poly scaled(Elem c) const;

    /// (quotient, remainder) with deg(rem) < deg(g); g must be nonzero.
    std::pair<Poly, Poly> divrem(const Poly& g) const;
    bool divides(const Poly& g) const;

    Poly monic() const;
    Elem eval(Elem a) const;

    /// True iff this polynomial has no nontrivial factor. Trial division
    /// by all monic polynomials of degree <= deg/2; requires deg >= 1.
    bool is_irreducible() const;

    std::string to_string() const;

private:
    FieldPtr field_;
    std::vector<Elem> coeffs_;
};

/// Monic gcd; gcd(f, 0) = monic(f). Errors if both are zero.
Poly poly_gcd(const Poly& f, const Poly& g);

/// Monic lcm = monic(f*g / gcd); both inputs must be nonzero.
Poly poly_lcm(const Poly& f, const Poly& g);

/// prod (x - a_i)
Poly poly_from_roots(const FieldPtr& field, const std::vector<Elem>& roots);

/// Monic irreducibles of exactly the given degree, ordered by the
/// ascending integer encoding sum c_i q^i of the non-leading
/// coefficients, truncated to `limit` entries. Degree 0 returns {1}.
std::vector<Poly> irreducibles(const FieldPtr& field, std::uint32_t degree,
                               std::size_t limit);

/// N_q(n) = (1/n) sum_{d|n} mu(d) q^(n/d), the number of monic
/// irreducible polynomials of degree n over GF(q).
long long count_irreducibles(long long q, long long n);

/// Moebius function.
int moebius(long long m);

} // namespace lip
