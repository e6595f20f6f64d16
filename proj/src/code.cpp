#include "lip/code.hpp"

#include <algorithm>

#include "lip/errors.hpp"

namespace lip {

LinearCode LinearCode::from_generator(const Matrix& g) {
    if (g.cols() == 0) throw EmptyMatrix("generator must have at least one column");
    RrefResult r = rref(g);
    std::vector<std::size_t> keep(r.rank);
    for (std::size_t i = 0; i < r.rank; ++i) keep[i] = i;
    return LinearCode(r.r.take_rows(keep));
}

LinearCode LinearCode::zero_code(const FieldPtr& field, std::size_t n) {
    return LinearCode(Matrix(field, 0, n));
}

const Matrix& LinearCode::parity_check() const {
    if (!parity_) parity_ = kernel(gen_);
    return *parity_;
}

LinearCode LinearCode::dual() const {
    if (k() == n()) return zero_code(field(), n());
    return from_generator(parity_check());
}

LinearCode LinearCode::galois_dual(std::uint32_t h) const {
    if (h >= field()->e()) throw InvalidExponentIndex("galois dual index out of range");
    // {u : sum_i u_i c_i^(p^h) = 0 for all c} = kernel of the entrywise
    // Frobenius twist of the generator
    Matrix twisted(field(), k(), n());
    for (std::size_t i = 0; i < k(); ++i)
        for (std::size_t j = 0; j < n(); ++j)
            twisted.set(i, j, field()->frobenius(gen_.at(i, j), h));
    if (k() == 0) return from_generator(Matrix::identity(field(), n()));
    return from_generator(kernel(twisted));
}

std::size_t LinearCode::hull_dim() const {
    return intersect(*this, dual()).k();
}

namespace {

// enumerate messages depth-first, maintaining the partial codeword
void enumerate_rec(const Matrix& g, std::size_t row, std::vector<Elem>& acc,
                   const std::function<void(const std::vector<Elem>&)>& fn) {
    if (row == g.rows()) {
        fn(acc);
        return;
    }
    const Field& f = *g.field();
    enumerate_rec(g, row + 1, acc, fn); // coefficient 0
    std::vector<Elem> saved = acc;
    for (Elem c = 1; c < f.q(); ++c) {
        for (std::size_t j = 0; j < g.cols(); ++j)
            acc[j] = f.add(saved[j], f.mul(c, g.at(row, j)));
        enumerate_rec(g, row + 1, acc, fn);
    }
    acc = saved;
}

std::uint64_t pow_checked(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        r *= base;
        if (r > cap) return cap + 1;
    }
    return r;
}

// minimum number of linearly dependent columns of H (n-k x n), i.e. the
// minimum distance computed from the parity-check side
std::size_t min_dependent_columns(const Matrix& h) {
    std::size_t n = h.cols();
    for (std::size_t w = 1; w <= n; ++w) {
        std::vector<std::size_t> sel(w);
        for (std::size_t i = 0; i < w; ++i) sel[i] = i;
        while (true) {
            Matrix sub(h.field(), h.rows(), w);
            for (std::size_t i = 0; i < h.rows(); ++i)
                for (std::size_t j = 0; j < w; ++j) sub.set(i, j, h.at(i, sel[j]));
            if (rank(sub) < w) return w;
            // advance combination
            std::size_t i = w;
            while (i-- > 0) {
                if (sel[i] < n - w + i) {
                    ++sel[i];
                    for (std::size_t j = i + 1; j < w; ++j) sel[j] = sel[j - 1] + 1;
                    break;
                }
                if (i == 0) goto next_w;
            }
        }
    next_w:;
    }
    return n + 1; // unreachable for k >= 1
}

} // namespace

void for_each_codeword(const Matrix& g,
                       const std::function<void(const std::vector<Elem>&)>& fn) {
    std::vector<Elem> acc(g.cols(), 0);
    enumerate_rec(g, 0, acc, fn);
}

std::size_t LinearCode::min_distance() const {
    if (min_dist_) return *min_dist_;
    if (k() == 0) throw ZeroCode("minimum distance of the zero code is undefined");
    std::size_t d = n() + 1;
    if (pow_checked(field()->q(), k(), kEnumerationGuard) <= kEnumerationGuard) {
        for_each_codeword(gen_, [&](const std::vector<Elem>& w) {
            std::size_t wt = 0;
            for (Elem v : w)
                if (v != 0) ++wt;
            if (wt > 0 && wt < d) d = wt;
        });
    } else if (n() <= 24) {
        d = min_dependent_columns(parity_check());
    } else {
        throw TooLargeToEnumerate("code too large for distance computation");
    }
    min_dist_ = d;
    return d;
}

LinearCode LinearCode::apply_monomial(const Matrix& a) const {
    if (!a.is_monomial()) throw NotMonomial("matrix is not a weighted permutation");
    if (a.rows() != n()) throw DimensionMismatch("monomial size must equal code length");
    return from_generator(gen_ * a);
}

bool LinearCode::contains(const std::vector<Elem>& v) const {
    if (v.size() != n()) throw LengthMismatch("vector length must equal code length");
    const Matrix& h = parity_check();
    const Field& f = *field();
    for (std::size_t i = 0; i < h.rows(); ++i) {
        Elem s = 0;
        for (std::size_t j = 0; j < n(); ++j) s = f.add(s, f.mul(h.at(i, j), v[j]));
        if (s != 0) return false;
    }
    return true;
}

LinearCode intersect(const LinearCode& c1, const LinearCode& c2) {
    require_same_field(*c1.field(), *c2.field());
    if (c1.n() != c2.n()) throw LengthMismatch("codes have different lengths");
    Matrix stacked = c1.parity_check().vstack(c2.parity_check());
    if (stacked.rows() == 0)
        return LinearCode::from_generator(Matrix::identity(c1.field(), c1.n()));
    Matrix basis = kernel(stacked);
    if (basis.rows() == 0) return LinearCode::zero_code(c1.field(), c1.n());
    return LinearCode::from_generator(basis);
}

LinearCode code_sum(const LinearCode& c1, const LinearCode& c2) {
    require_same_field(*c1.field(), *c2.field());
    if (c1.n() != c2.n()) throw LengthMismatch("codes have different lengths");
    return LinearCode::from_generator(c1.generator().vstack(c2.generator()));
}

CodeSummary summarize(const LinearCode& c) {
    CodeSummary s;
    s.n = c.n();
    s.k = c.k();
    s.q = c.field()->q();
    s.d = c.min_distance();
    s.mds = (s.d == s.n - s.k + 1);
    return s;
}

} // namespace lip
