#pragma once

#include <functional>
#include <optional>
#include <string>

#include "lip/matrix.hpp"

namespace lip {

/// An [n, k]_q linear code held as a canonical (RREF) generator matrix.
/// Two equal codes have identical generators, so code equality is a
/// matrix comparison. The parity check and minimum distance are cached
/// lazily; recomputation under concurrent readers is harmless because
/// both are deterministic.
class LinearCode {
public:
    /// Code spanned by the rows of G; dependent rows are allowed.
    static LinearCode from_generator(const Matrix& g);

    /// The zero code {0} of the given length.
    static LinearCode zero_code(const FieldPtr& field, std::size_t n);

    const FieldPtr& field() const { return gen_.field(); }
    std::size_t n() const { return gen_.cols(); }
    std::size_t k() const { return gen_.rows(); }
    const Matrix& generator() const { return gen_; }

    bool operator==(const LinearCode& c) const { return gen_ == c.gen_; }

    /// (n-k) x n full-rank matrix H with C = {v : H v^t = 0}, in RREF.
    const Matrix& parity_check() const;

    LinearCode dual() const;

    /// Dual with respect to the p^h-twisted inner product
    /// sum u_i c_i^(p^h); h = 0 is the Euclidean dual.
    LinearCode galois_dual(std::uint32_t h) const;

    std::size_t hull_dim() const;

    /// Minimum Hamming weight over all nonzero codewords, by message-space
    /// enumeration on whichever of the code and its dual is cheaper.
    /// Errors on the zero code and when both enumerations exceed the guard.
    std::size_t min_distance() const;

    bool is_mds() const { return k() >= 1 && min_distance() == n() - k() + 1; }

    /// Equivalent code generated by gen * A, for a monomial matrix A.
    LinearCode apply_monomial(const Matrix& a) const;

    /// True iff v is a codeword.
    bool contains(const std::vector<Elem>& v) const;

    std::string name;

private:
    explicit LinearCode(Matrix gen) : gen_(std::move(gen)) {}

    Matrix gen_;
    mutable std::optional<Matrix> parity_;
    mutable std::optional<std::size_t> min_dist_;
};

LinearCode intersect(const LinearCode& c1, const LinearCode& c2);
LinearCode code_sum(const LinearCode& c1, const LinearCode& c2);

/// Enumerates every codeword of the code generated by G exactly once
/// (including zero), visiting q^rows vectors.
void for_each_codeword(const Matrix& g,
                       const std::function<void(const std::vector<Elem>&)>& fn);

/// Enumeration guard for min_distance: q^k must stay below this.
inline constexpr std::uint64_t kEnumerationGuard = 1ull << 22;

struct CodeSummary {
    std::size_t n, k, d;
    std::uint32_t q;
    bool mds;
};

CodeSummary summarize(const LinearCode& c);

} // namespace lip
