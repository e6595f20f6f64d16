#pragma once

#include "lip/pairs.hpp"
#include "lip/poly.hpp"

namespace lip {

/// Parameters of a (possibly extended) generalized Reed-Solomon code:
/// distinct evaluation points a, nonzero column multipliers v, and the
/// denominator polynomial P. The code is the set of evaluation vectors
/// (v_i f(a_i) / P(a_i)) over all f with deg f < deg P; the extended
/// variant adds a final coordinate v_n (x f / P)(infinity).
struct GrsSpec {
    FieldPtr field;
    std::vector<Elem> a; // length n, or n-1 when extended
    std::vector<Elem> v; // length n
    Poly p;
    bool extended = false;

    std::size_t n() const { return extended ? a.size() + 1 : a.size(); }
    std::size_t k() const { return p.degree() < 0 ? 0 : static_cast<std::size_t>(p.degree()); }

    /// Throws unless points are distinct, multipliers nonzero,
    /// P is nonzero with no root among the points and deg P <= n.
    void validate() const;

    /// Canonical spec: a = first n (or n-1) field elements in encoding
    /// order, v = all ones.
    static GrsSpec canonical(FieldPtr field, std::size_t n, Poly p, bool extended);
};

/// The [n, deg P, n - deg P + 1]_q MDS code of the spec (extended or not).
LinearCode grs_code(const GrsSpec& spec);

/// MDS pair construction: picks irreducibles f, L, h of degrees
/// k1-ell, ell, k2-ell (degree 0 -> the constant 1) lexicographically,
/// avoiding evaluation-point roots, sets P = f L and Q = h L, and
/// returns the resulting (extended when n = q+1) GRS pair with
/// intersection dimension exactly ell. When a needed linear factor
/// collides with all n evaluation points, the extended construction
/// (n-1 points plus the coordinate at infinity) is tried before giving
/// up with DegreeConditionViolated.
IntersectionPair grs_pair(const FieldPtr& field, std::size_t n, std::size_t k1,
                          std::size_t k2, std::size_t ell);

/// The two denominator polynomials grs_pair would use, exposed so
/// theorem-check grids can reuse the selection rule.
std::pair<Poly, Poly> grs_pair_polys(const FieldPtr& field, std::size_t n,
                                     std::size_t k1, std::size_t k2, std::size_t ell,
                                     bool extended);

/// A root-free polynomial of the given degree over the points of the
/// canonical spec, built from cached irreducibles; throws
/// DegreeConditionViolated when none exists (degree-1 factor needed but
/// every field element is an evaluation point).
Poly admissible_denominator(const FieldPtr& field, std::size_t n, std::size_t degree,
                            bool extended);

struct TheoremCheck {
    LinearCode lhs;
    LinearCode rhs;
    bool equal;
};

/// Verifies GRS(P) cap GRS(Q) = GRS(gcd(P, Q)) by computing both sides
/// independently. Preconditions (shared points/multipliers, root-free
/// product, degree bound deg P + deg Q <= n + deg gcd) are checked.
TheoremCheck grs_intersection_theorem_check(const GrsSpec& spec_p, const GrsSpec& spec_q);

/// Verifies GRS(P) + GRS(Q) = GRS(lcm(P, Q)).
TheoremCheck grs_sum_theorem_check(const GrsSpec& spec_p, const GrsSpec& spec_q);

/// First `count` monic irreducibles of the given degree that have no
/// root among `points` (only degree-1 candidates can have one), cached
/// per field and degree. Throws DegreeConditionViolated when fewer exist.
std::vector<Poly> admissible_irreducibles(const FieldPtr& field, std::uint32_t degree,
                                          const std::vector<Elem>& points,
                                          std::size_t count);

} // namespace lip
