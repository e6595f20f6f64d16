#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lip/grs.hpp"

namespace lip {

/// Parameters [[n, k, d; c]]_q of an entanglement-assisted quantum code:
/// k logical qudits in n physical qudits using c maximally entangled
/// pairs. The Singleton slack is n + c - k - 2(d-1); zero slack with
/// 0 <= c <= n-1 is the MDS case.
struct EaqeccParams {
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<std::size_t> d; // empty when a distance was not computable
    std::size_t c = 0;
    std::uint32_t q = 0;

    bool degenerate = false; // k = 0 or a zero/full constituent code

    double rate() const { return static_cast<double>(k) / static_cast<double>(n); }
    double net_rate() const {
        return (static_cast<double>(k) - static_cast<double>(c)) / static_cast<double>(n);
    }
    /// n + c - k - 2(d-1); requires a known distance.
    long long singleton_slack() const;
    bool mds() const { return d && singleton_slack() == 0 && valid(); }
    /// The Singleton bound's domain and inequality: 0 <= c <= n-1 and
    /// slack >= 0.
    bool valid() const { return c + 1 <= n && (!d || singleton_slack() >= 0); }

    std::string to_string() const;
};

/// [[n, k1 + k2 - n + c, min(d1, d2); c]] with c = rank(H1 H2^t), from
/// full-rank parity checks of [n, k1, d1] and [n, k2, d2] codes.
EaqeccParams eaqecc_from_parity(const Matrix& h1, const Matrix& h2, std::size_t d1,
                                std::size_t d2);

/// [[n, k2 - ell, min(d(C1^dual), d2); k1 - ell]]_q from a pair. Sides
/// whose distance enumeration exceeds the guard leave d empty.
EaqeccParams eaqecc_from_pair(const IntersectionPair& pair);

struct MdsEaqecc {
    EaqeccParams params;
    IntersectionPair pair;
};

/// Certified [[n, n-k-ell, k+1; k-ell]]_q MDS EAQECC built from the GRS
/// pair with k1 = k, k2 = n-k; Singleton slack is exactly zero.
MdsEaqecc mds_eaqecc(const FieldPtr& field, std::size_t n, std::size_t k,
                     std::size_t ell);

/// A small named table of codes standing in for a best-known-codes
/// database: built-ins (Hamming [7,4,3]_2 and its dual, repetition,
/// parity, full codes) plus anything registered by the caller.
class CodeCatalog {
public:
    /// Catalog with the built-in binary codes for lengths up to max_n.
    static CodeCatalog builtins(const FieldPtr& field, std::size_t max_n);

    void add(LinearCode code);
    /// Throws CatalogMiss when no [n, k] code is present.
    const LinearCode& get(std::size_t n, std::size_t k) const;
    bool has(std::size_t n, std::size_t k) const;

    const std::vector<LinearCode>& codes() const { return codes_; }

private:
    std::vector<LinearCode> codes_;
};

struct CatalogEntry {
    EaqeccParams params;
    std::size_t n, k1, k2, ell;
    bool half_rate; // ell <= n/2 - r, guaranteeing rate >= 1/2
};

/// Positive-net-rate search: for n in [n_lo, n_hi], r <= k1 < n-r <= k2 <= n,
/// takes C2 = catalog [n, k2] and C1 = dual of catalog [n, n-k1], computes
/// ell and emits [[n, k2-ell, d(C2); k1-ell]]. Grid cells without catalog
/// codes are skipped.
std::vector<CatalogEntry> catalog_search(const FieldPtr& field, std::size_t n_lo,
                                         std::size_t n_hi, std::size_t r,
                                         const CodeCatalog& catalog);

} // namespace lip
