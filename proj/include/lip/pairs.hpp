#pragma once

#include <map>
#include <optional>

#include "lip/code.hpp"

namespace lip {

/// Two codes of the same field and length together with the dimension
/// of their intersection.
struct IntersectionPair {
    LinearCode c1;
    LinearCode c2;
    std::size_t ell;

    /// Builds the pair and computes ell via the intersection.
    static IntersectionPair make(LinearCode c1, LinearCode c2);
};

/// ell = k1 - rank(G1 H2^t). Independent of the choice of generator and
/// parity-check matrices, and equal to dim(C1 cap C2).
std::size_t ell_by_rank(const LinearCode& c1, const LinearCode& c2);

struct EllBounds {
    std::size_t lo, hi;
};

/// max(0, k1+k2-n) <= ell <= min(k1, k2).
EllBounds ell_bounds(std::size_t n, std::size_t k1, std::size_t k2);

enum class PairClass { LCP, LcdConfig, HullConfig, Generic };

/// LCD-config: c2 = dual(c1) with ell = 0; hull-config: c2 = dual(c1)
/// with ell > 0; LCP: ell = 0 and k1 + k2 = n otherwise.
PairClass classify(const IntersectionPair& pair);

const char* pair_class_name(PairClass c);

struct TuneResult {
    Matrix monomial;
    IntersectionPair pair;
};

/// Seeded randomized search over weighted permutation matrices A for one
/// making (C1 A, C2) a target_ell-intersection pair. Throws
/// NotFoundWithinBudget on exhaustion (which proves nothing).
TuneResult tune_by_monomial(const LinearCode& c1, const LinearCode& c2,
                            std::size_t target_ell, std::size_t budget,
                            std::uint64_t seed);

/// Shrinks C2 to a subcode so the pair meets in dimension gamma exactly,
/// keeping C1 and the length; dim(C2') = k2 - ell + gamma and the new
/// minimum distance is >= the old one.
IntersectionPair reduce_ell(const IntersectionPair& pair, std::size_t gamma);

/// Appends ell - gamma coordinates, one per step, so the pair meets in
/// dimension gamma; dimensions are preserved, length grows to
/// n + ell - gamma, d(C1') = d1 and d(C2') >= d2.
IntersectionPair extend_length(const IntersectionPair& pair, std::size_t gamma);

/// From an n x n super-regular matrix A: C = span of the first i rows,
/// D = span of the first ell of those i rows plus the first j of the
/// remaining rows. Both codes are MDS and meet in dimension ell.
IntersectionPair pair_from_superregular(const Matrix& a, std::size_t i,
                                        std::size_t j, std::size_t ell);

struct ProbeResult {
    std::map<std::size_t, std::optional<IntersectionPair>> witnesses;
};

/// For each ell in the admissible range, tries GRS constructions (when
/// n <= q+1) and seeded monomial tuning of fixed seed codes. Records a
/// witness pair or leaves the slot empty; never claims nonexistence.
ProbeResult conjecture_probe(const FieldPtr& field, std::size_t n, std::size_t k1,
                             std::size_t k2, std::uint64_t seed = 0,
                             std::size_t budget = 2000);

} // namespace lip
