#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "lip/errors.hpp"

namespace lip {

/// A field element, encoded as a single integer in [0, q).
/// The value is the base-p encoding of the coefficient vector
/// (c_0, ..., c_{e-1}) of the residue class: value = sum c_i p^i.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Exact arithmetic in GF(p^e).
///
/// The modulus is the first monic irreducible of degree e over GF(p)
/// in ascending order of the base-p coefficient encoding sum c_i p^i.
/// This makes element encodings reproducible across runs: Field(p, e)
/// always denotes the same concrete field.
///
/// Immutable after construction; safe to share across threads.
class Field {
public:
    /// Constructs GF(p^e). Requires p prime, e >= 1, p^e <= 2^16.
    static FieldPtr make(std::uint32_t p, std::uint32_t e);

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t q() const { return q_; }

    /// Modulus coefficients, constant term first, length e+1, monic.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    bool same(const Field& other) const { return p_ == other.p_ && e_ == other.e_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, long long n) const;

    /// a^(p^h) for 0 <= h < e.
    Elem frobenius(Elem a, std::uint32_t h) const;

    /// All field elements in encoding order: 0, 1, ..., q-1.
    std::vector<Elem> elements() const;

private:
    Field(std::uint32_t p, std::uint32_t e);

    Elem mul_slow(Elem a, Elem b) const;

    std::uint32_t p_, e_, q_;
    std::vector<std::uint32_t> modulus_;
    // x^(e+i) reduced mod the modulus, for i = 0 .. e-2 (encoded elements)
    std::vector<Elem> reduction_;
    // full multiplication table when q is small enough to afford one
    std::vector<Elem> mul_table_;
    std::vector<Elem> inv_table_;
};

/// Throws FieldMismatch unless a and b denote the same field.
void require_same_field(const Field& a, const Field& b);

} // namespace lip
