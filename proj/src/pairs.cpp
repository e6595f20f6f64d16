#include "lip/pairs.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "lip/errors.hpp"
#include "lip/grs.hpp"

namespace lip {

IntersectionPair IntersectionPair::make(LinearCode c1, LinearCode c2) {
    std::size_t ell = intersect(c1, c2).k();
    return IntersectionPair{std::move(c1), std::move(c2), ell};
}

std::size_t ell_by_rank(const LinearCode& c1, const LinearCode& c2) {
    require_same_field(*c1.field(), *c2.field());
    if (c1.n() != c2.n()) throw LengthMismatch("codes have different lengths");
    Matrix prod = c1.generator() * c2.parity_check().transposed();
    return c1.k() - rank(prod);
}

EllBounds ell_bounds(std::size_t n, std::size_t k1, std::size_t k2) {
    if (k1 > n || k2 > n) throw InvalidDims("dimensions exceed length");
    std::size_t lo = (k1 + k2 > n) ? k1 + k2 - n : 0;
    return {lo, std::min(k1, k2)};
}

PairClass classify(const IntersectionPair& pair) {
    // the dual relationship subsumes the complementary-dimension test
    // (k + (n-k) = n always), so it is examined first
    if (pair.c2 == pair.c1.dual())
        return pair.ell == 0 ? PairClass::LcdConfig : PairClass::HullConfig;
    if (pair.ell == 0 && pair.c1.k() + pair.c2.k() == pair.c1.n())
        return PairClass::LCP;
    return PairClass::Generic;
}

const char* pair_class_name(PairClass c) {
    switch (c) {
        case PairClass::LCP: return "LCP";
        case PairClass::LcdConfig: return "LCD-config";
        case PairClass::HullConfig: return "hull-config";
        case PairClass::Generic: return "generic";
    }
    return "generic";
}

TuneResult tune_by_monomial(const LinearCode& c1, const LinearCode& c2,
                            std::size_t target_ell, std::size_t budget,
                            std::uint64_t seed) {
    EllBounds b = ell_bounds(c1.n(), c1.k(), c2.k());
    if (target_ell < b.lo || target_ell > b.hi)
        throw InvalidDims("target ell outside admissible bounds");
    if (budget < 1) throw InvalidDims("budget must be positive");

    const std::size_t n = c1.n();
    const FieldPtr& field = c1.field();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Elem> weight_dist(1, field->q() - 1);

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Elem> weights(n, 1);

    for (std::size_t trial = 0; trial < budget; ++trial) {
        if (trial > 0) {
            std::shuffle(perm.begin(), perm.end(), rng);
            for (Elem& w : weights) w = weight_dist(rng);
        }
        Matrix a = weighted_permutation(field, n, perm, weights);
        LinearCode moved = c1.apply_monomial(a);
        if (ell_by_rank(moved, c2) == target_ell)
            return {std::move(a), IntersectionPair::make(std::move(moved), c2)};
    }
    throw NotFoundWithinBudget("no monomial matrix found within budget");
}

namespace {

// Rows of `base` followed by rows of `gen` that grow the rank, giving a
// basis of span(gen) extended from the (independent) rows of `base`.
Matrix extend_basis(const Matrix& base, const Matrix& gen) {
    Matrix acc = base;
    std::size_t r = rank(acc);
    for (std::size_t i = 0; i < gen.rows(); ++i) {
        Matrix trial = acc.vstack(gen.take_rows({i}));
        std::size_t tr = rank(trial);
        if (tr > r) {
            acc = std::move(trial);
            r = tr;
        }
    }
    return acc;
}

std::vector<Elem> appended(const std::vector<Elem>& v, Elem last) {
    std::vector<Elem> w = v;
    w.push_back(last);
    return w;
}

} // namespace

IntersectionPair reduce_ell(const IntersectionPair& pair, std::size_t gamma) {
    if (gamma > pair.ell) throw GammaOutOfRange("gamma must satisfy 0 <= gamma <= ell");
    if (gamma == pair.ell) return pair;

    Matrix inter = intersect(pair.c1, pair.c2).generator();
    Matrix b2 = extend_basis(inter, pair.c2.generator());
    // drop the first ell - gamma intersection basis vectors
    std::vector<std::size_t> keep;
    for (std::size_t i = pair.ell - gamma; i < b2.rows(); ++i) keep.push_back(i);
    LinearCode c2p = keep.empty()
                         ? LinearCode::zero_code(pair.c1.field(), pair.c1.n())
                         : LinearCode::from_generator(b2.take_rows(keep));
    return IntersectionPair::make(pair.c1, std::move(c2p));
}

IntersectionPair extend_length(const IntersectionPair& pair, std::size_t gamma) {
    if (gamma > pair.ell) throw GammaOutOfRange("gamma must satisfy 0 <= gamma <= ell");
    IntersectionPair cur = pair;
    while (cur.ell > gamma) {
        const FieldPtr& field = cur.c1.field();
        Matrix inter = intersect(cur.c1, cur.c2).generator();
        Matrix b1 = extend_basis(inter, cur.c1.generator());
        Matrix b2 = extend_basis(inter, cur.c2.generator());
        std::size_t ell_cur = inter.rows();

        // append 0 to every C1 basis vector; append 1 only to the last
        // intersection basis vector inside the C2 basis
        Matrix g1(field, b1.rows(), cur.c1.n() + 1);
        for (std::size_t i = 0; i < b1.rows(); ++i) {
            std::vector<Elem> r = appended(b1.row(i), 0);
            for (std::size_t j = 0; j < r.size(); ++j) g1.set(i, j, r[j]);
        }
        Matrix g2(field, b2.rows(), cur.c2.n() + 1);
        for (std::size_t i = 0; i < b2.rows(); ++i) {
            std::vector<Elem> r = appended(b2.row(i), i == ell_cur - 1 ? 1 : 0);
            for (std::size_t j = 0; j < r.size(); ++j) g2.set(i, j, r[j]);
        }
        IntersectionPair next = IntersectionPair::make(LinearCode::from_generator(g1),
                                                       LinearCode::from_generator(g2));
        if (next.ell != cur.ell - 1)
            throw Error("length extension failed to reduce the intersection");
        cur = std::move(next);
    }
    return cur;
}

IntersectionPair pair_from_superregular(const Matrix& a, std::size_t i, std::size_t j,
                                        std::size_t ell) {
    if (a.rows() != a.cols()) throw DimensionMismatch("matrix must be square");
    const std::size_t n = a.rows();
    if (i > n || j > n - i || ell > i) throw IndexOutOfRange("row selection out of range");
    if (!is_super_regular(a)) throw NotSuperRegular("matrix is not super-regular");

    LinearCode c = (i == 0) ? LinearCode::zero_code(a.field(), n) : [&] {
        std::vector<std::size_t> rows(i);
        std::iota(rows.begin(), rows.end(), std::size_t{0});
        return LinearCode::from_generator(a.take_rows(rows));
    }();

    std::vector<std::size_t> drows;
    for (std::size_t r = 0; r < ell; ++r) drows.push_back(r);
    for (std::size_t r = 0; r < j; ++r) drows.push_back(i + r);
    LinearCode d = drows.empty() ? LinearCode::zero_code(a.field(), n)
                                 : LinearCode::from_generator(a.take_rows(drows));

    return IntersectionPair::make(std::move(c), std::move(d));
}

namespace {

LinearCode seeded_code(const FieldPtr& field, std::size_t n, std::size_t k,
                       std::mt19937_64& rng) {
    if (k == 0) return LinearCode::zero_code(field, n);
    std::uniform_int_distribution<Elem> dist(0, field->q() - 1);
    for (int attempt = 0; attempt < 256; ++attempt) {
        Matrix g(field, k, n);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) g.set(i, j, dist(rng));
        if (rank(g) == k) return LinearCode::from_generator(g);
    }
    throw Error("failed to sample a full-rank generator");
}

} // namespace

ProbeResult conjecture_probe(const FieldPtr& field, std::size_t n, std::size_t k1,
                             std::size_t k2, std::uint64_t seed, std::size_t budget) {
    const std::uint32_t q = field->q();
    if ((q != 2 && q != 3 && q != 4) || n > 8)
        throw SearchSpaceTooLarge("probe limited to q in {2,3,4} and n <= 8");

    ProbeResult result;
    EllBounds b = ell_bounds(n, k1, k2);
    for (std::size_t ell = b.lo; ell <= b.hi; ++ell) {
        std::optional<IntersectionPair> witness;

        if (q >= 3 && n <= q + 1 && k1 + k2 <= n + ell) {
            try {
                witness = grs_pair(field, n, k1, k2, ell);
            } catch (const Error&) {
                // fall through to the randomized route
            }
        }
        if (!witness) {
            // constructive sampling: seed C1 with ell basis rows of C2 so
            // the intersection contains (and with luck equals) that span
            std::mt19937_64 rng(seed);
            std::uniform_int_distribution<Elem> dist(0, q - 1);
            for (std::size_t trial = 0; trial < budget && !witness; ++trial) {
                LinearCode c2 = seeded_code(field, n, k2, rng);
                Matrix g1(field, k1, n);
                for (std::size_t i = 0; i < k1; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        g1.set(i, j, i < ell ? c2.generator().at(i, j) : dist(rng));
                if (rank(g1) < k1) continue;
                LinearCode c1 = LinearCode::from_generator(g1);
                if (ell_by_rank(c1, c2) == ell)
                    witness = IntersectionPair::make(std::move(c1), std::move(c2));
            }
        }
        result.witnesses.emplace(ell, std::move(witness));
    }
    return result;
}

} // namespace lip
