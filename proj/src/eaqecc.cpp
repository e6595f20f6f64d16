#include "lip/eaqecc.hpp"

#include <sstream>

#include "lip/errors.hpp"

namespace lip {

long long EaqeccParams::singleton_slack() const {
    if (!d) throw DistanceTooExpensive("slack requires a known distance");
    return static_cast<long long>(n) + static_cast<long long>(c) -
           static_cast<long long>(k) - 2 * (static_cast<long long>(*d) - 1);
}

std::string EaqeccParams::to_string() const {
    std::ostringstream out;
    out << "[[" << n << ", " << k << ", ";
    if (d)
        out << *d;
    else
        out << "?";
    out << "; " << c << "]]_" << q;
    return out.str();
}

EaqeccParams eaqecc_from_parity(const Matrix& h1, const Matrix& h2, std::size_t d1,
                                std::size_t d2) {
    require_same_field(*h1.field(), *h2.field());
    if (h1.cols() != h2.cols()) throw DimensionMismatch("parity checks disagree on length");
    const std::size_t n = h1.cols();
    const std::size_t k1 = n - h1.rows();
    const std::size_t k2 = n - h2.rows();
    const std::size_t c = rank(h1 * h2.transposed());

    EaqeccParams p;
    p.n = n;
    p.k = k1 + k2 - n + c;
    p.d = std::min(d1, d2);
    p.c = c;
    p.q = h1.field()->q();
    p.degenerate = (p.k == 0);
    return p;
}

namespace {

// min_distance where feasible; empty when the guard trips, and a flag
// for the zero-code case (no distance at all)
std::optional<std::size_t> try_distance(const LinearCode& c, bool& saw_zero_code) {
    try {
        return c.min_distance();
    } catch (const ZeroCode&) {
        saw_zero_code = true;
        return std::nullopt;
    } catch (const TooLargeToEnumerate&) {
        return std::nullopt;
    }
}

} // namespace

EaqeccParams eaqecc_from_pair(const IntersectionPair& pair) {
    const std::size_t k1 = pair.c1.k();
    const std::size_t k2 = pair.c2.k();
    const std::size_t c = k1 - pair.ell;

    // cross-check against the parity-check route (D1 = C1 dual, D2 = C2)
    LinearCode d1code = pair.c1.dual();
    std::size_t c_rank = rank(d1code.parity_check() * pair.c2.parity_check().transposed());
    if (c_rank != c)
        throw CertificationFailure("entanglement count disagrees between routes");

    bool saw_zero = false;
    std::optional<std::size_t> d_dual = try_distance(d1code, saw_zero);
    std::optional<std::size_t> d2 = try_distance(pair.c2, saw_zero);

    EaqeccParams p;
    p.n = pair.c1.n();
    p.k = k2 - pair.ell;
    p.c = c;
    p.q = pair.c1.field()->q();
    if (d_dual && d2)
        p.d = std::min(*d_dual, *d2);
    else if (saw_zero && (d_dual || d2))
        p.d = d_dual ? d_dual : d2; // the zero-code side imposes no constraint
    p.degenerate = (p.k == 0) || saw_zero;
    return p;
}

MdsEaqecc mds_eaqecc(const FieldPtr& field, std::size_t n, std::size_t k,
                     std::size_t ell) {
    if (k > n || ell > std::min(k, n - k))
        throw ParameterOutOfRange("need k <= n and ell <= min(k, n-k)");
    IntersectionPair pair = grs_pair(field, n, k, n - k, ell);

    EaqeccParams p;
    p.n = n;
    p.k = n - k - ell;
    p.d = k + 1;
    p.c = k - ell;
    p.q = field->q();
    p.degenerate = (p.k == 0) || k == 0 || k == n;
    if (p.singleton_slack() != 0)
        throw CertificationFailure("constructed parameters miss the Singleton bound");
    return {std::move(p), std::move(pair)};
}

CodeCatalog CodeCatalog::builtins(const FieldPtr& field, std::size_t max_n) {
    CodeCatalog cat;
    for (std::size_t n = 1; n <= max_n; ++n) {
        LinearCode full = LinearCode::from_generator(Matrix::identity(field, n));
        full.name = "full";
        cat.add(std::move(full));
        if (n >= 2) {
            Matrix ones(field, 1, n, std::vector<Elem>(n, 1));
            LinearCode rep = LinearCode::from_generator(ones);
            rep.name = "repetition";
            LinearCode par = rep.dual();
            par.name = "parity";
            cat.add(std::move(rep));
            cat.add(std::move(par));
        }
    }
    if (field->q() == 2 && max_n >= 7) {
        Matrix g(field, 4, 7,
                 {1, 0, 0, 0, 0, 1, 1,
                  0, 1, 0, 0, 1, 0, 1,
                  0, 0, 1, 0, 1, 1, 0,
                  0, 0, 0, 1, 1, 1, 1});
        LinearCode hamming = LinearCode::from_generator(g);
        hamming.name = "hamming_7_4";
        LinearCode simplex = hamming.dual();
        simplex.name = "simplex_7_3";
        cat.add(std::move(hamming));
        cat.add(std::move(simplex));
    }
    return cat;
}

void CodeCatalog::add(LinearCode code) {
    for (const LinearCode& c : codes_)
        if (c.n() == code.n() && c.k() == code.k()) return; // first entry wins
    codes_.push_back(std::move(code));
}

const LinearCode& CodeCatalog::get(std::size_t n, std::size_t k) const {
    for (const LinearCode& c : codes_)
        if (c.n() == n && c.k() == k) return c;
    std::ostringstream msg;
    msg << "no [" << n << ", " << k << "] code in the catalog";
    throw CatalogMiss(msg.str());
}

bool CodeCatalog::has(std::size_t n, std::size_t k) const {
    for (const LinearCode& c : codes_)
        if (c.n() == n && c.k() == k) return true;
    return false;
}

std::vector<CatalogEntry> catalog_search(const FieldPtr& field, std::size_t n_lo,
                                         std::size_t n_hi, std::size_t r,
                                         const CodeCatalog& catalog) {
    (void)field;
    if (n_lo < 1 || n_lo > n_hi || 2 * r >= n_lo)
        throw InvalidDims("need 1 <= n_lo <= n_hi and r < n/2");

    std::vector<CatalogEntry> out;
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        for (std::size_t k2 = n - r; k2 <= n; ++k2) {
            for (std::size_t k1 = r; k1 + r < n; ++k1) {
                if (!catalog.has(n, k2) || !catalog.has(n, n - k1)) continue;
                LinearCode c2 = catalog.get(n, k2);
                LinearCode c1 = catalog.get(n, n - k1).dual();
                IntersectionPair pair = IntersectionPair::make(std::move(c1), std::move(c2));
                EaqeccParams params = eaqecc_from_pair(pair);
                if (params.net_rate() <= 0.0) continue;
                CatalogEntry entry;
                entry.n = n;
                entry.k1 = k1;
                entry.k2 = k2;
                entry.ell = pair.ell;
                entry.half_rate = (2 * pair.ell + 2 * r <= n);
                entry.params = std::move(params);
                out.push_back(std::move(entry));
            }
        }
    }
    return out;
}

} // namespace lip
