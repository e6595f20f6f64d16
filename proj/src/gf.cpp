#include "lip/gf.hpp"

#include <map>
#include <mutex>

namespace lip {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// --- polynomial helpers over GF(p), coefficients constant-term first ---

using PVec = std::vector<std::uint32_t>;

void ptrim(PVec& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// remainder of f by monic g, in place arithmetic mod p
PVec prem(PVec f, const PVec& g, std::uint32_t p) {
    ptrim(f);
    while (f.size() >= g.size() && !f.empty()) {
        std::uint32_t c = f.back();
        std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::uint32_t t = (c * g[i]) % p;
            f[shift + i] = (f[shift + i] + p - t) % p;
        }
        ptrim(f);
    }
    return f;
}

// trial division by every monic polynomial of degree 1 .. deg/2
bool pirreducible(const PVec& f, std::uint32_t p) {
    std::size_t deg = f.size() - 1;
    if (deg == 0) return false;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            PVec g(d + 1);
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < d; ++i) { g[i] = t % p; t /= p; }
            g[d] = 1;
            if (prem(f, g, p).empty()) return false;
        }
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree e over GF(p),
// comparing (c_0, ..., c_{e-1}) with the constant term most significant.
PVec canonical_modulus(std::uint32_t p, std::uint32_t e) {
    if (e == 1) return PVec{0, 1}; // x
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        PVec f(e + 1);
        std::uint64_t t = idx;
        // idx enumerates (c_0, ..., c_{e-1}) by ascending base-p encoding
        for (std::uint32_t i = 0; i < e; ++i) {
            f[i] = t % p;
            t /= p;
        }
        f[e] = 1;
        if (pirreducible(f, p)) return f;
    }
    throw UnsupportedSize("no irreducible modulus found"); // unreachable
}

} // namespace

Field::Field(std::uint32_t p, std::uint32_t e) : p_(p), e_(e) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > (1u << 16)) throw UnsupportedSize("field size exceeds 2^16");
    }
    q_ = static_cast<std::uint32_t>(q);
    modulus_ = canonical_modulus(p, e);

    if (e_ > 1) {
        // reduction_[i] encodes x^(e+i) mod modulus
        reduction_.resize(e_ - 1);
        // x^e = -(c_0 + c_1 x + ... + c_{e-1} x^{e-1})
        std::vector<std::uint32_t> cur(e_);
        for (std::uint32_t i = 0; i < e_; ++i) cur[i] = (p_ - modulus_[i]) % p_;
        for (std::uint32_t i = 0; i + 1 < e_; ++i) {
            Elem enc = 0;
            for (std::uint32_t j = e_; j-- > 0;) enc = enc * p_ + cur[j];
            reduction_[i] = enc;
            if (i + 2 < e_) {
                // multiply cur by x and reduce
                std::uint32_t top = cur[e_ - 1];
                for (std::uint32_t j = e_; j-- > 1;) cur[j] = cur[j - 1];
                cur[0] = 0;
                for (std::uint32_t j = 0; j < e_; ++j) {
                    std::uint32_t t = (top * ((p_ - modulus_[j]) % p_)) % p_;
                    cur[j] = (cur[j] + t) % p_;
                }
            }
        }
    }

    if (q_ <= 256) {
        mul_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (Elem a = 0; a < q_; ++a)
            for (Elem b = 0; b <= a; ++b) {
                Elem m = mul_slow(a, b);
                mul_table_[static_cast<std::size_t>(a) * q_ + b] = m;
                mul_table_[static_cast<std::size_t>(b) * q_ + a] = m;
            }
        inv_table_.assign(q_, 0);
        for (Elem a = 1; a < q_; ++a)
            for (Elem b = 1; b < q_; ++b)
                if (mul_table_[static_cast<std::size_t>(a) * q_ + b] == 1) {
                    inv_table_[a] = b;
                    break;
                }
    }
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t e) {
    if (!is_prime(p)) throw NonPrimeCharacteristic("characteristic must be prime");
    if (e < 1) throw UnsupportedSize("extension degree must be positive");

    static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto& slot = cache[{p, e}];
    if (!slot) slot = FieldPtr(new Field(p, e));
    return slot;
}

Elem Field::add(Elem a, Elem b) const {
    if (e_ == 1) return (a + b) % p_;
    Elem r = 0, mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        r += ((a % p_ + b % p_) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

Elem Field::neg(Elem a) const {
    if (e_ == 1) return (p_ - a) % p_;
    Elem r = 0, mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        r += ((p_ - a % p_) % p_) * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul_slow(Elem a, Elem b) const {
    if (e_ == 1) return (a * b) % p_;
    std::vector<std::uint32_t> av(e_), bv(e_);
    for (std::uint32_t i = 0; i < e_; ++i) { av[i] = a % p_; a /= p_; }
    for (std::uint32_t i = 0; i < e_; ++i) { bv[i] = b % p_; b /= p_; }
    std::vector<std::uint32_t> prod(2 * e_ - 1, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
        if (av[i] == 0) continue;
        for (std::uint32_t j = 0; j < e_; ++j)
            prod[i + j] = (prod[i + j] + av[i] * bv[j]) % p_;
    }
    // fold coefficients of x^e .. x^(2e-2) back using precomputed reductions
    Elem acc = 0;
    std::uint32_t mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) { acc += prod[i] * mult; mult *= p_; }
    for (std::uint32_t i = e_; i < 2 * e_ - 1; ++i) {
        if (prod[i] == 0) continue;
        Elem red = reduction_[i - e_];
        // acc += prod[i] * red, digitwise
        Elem r = 0;
        std::uint32_t m2 = 1;
        Elem av2 = acc, bv2 = red;
        for (std::uint32_t j = 0; j < e_; ++j) {
            r += ((av2 % p_ + prod[i] * (bv2 % p_)) % p_) * m2;
            av2 /= p_;
            bv2 /= p_;
            m2 *= p_;
        }
        acc = r;
    }
    return acc;
}

Elem Field::mul(Elem a, Elem b) const {
    if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a) * q_ + b];
    return mul_slow(a, b);
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    if (!inv_table_.empty()) return inv_table_[a];
    return pow(a, static_cast<long long>(q_) - 2);
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, long long n) const {
    if (n < 0) {
        a = inv(a);
        n = -n;
    }
    Elem r = 1;
    while (n > 0) {
        if (n & 1) r = mul(r, a);
        a = mul(a, a);
        n >>= 1;
    }
    return r;
}

Elem Field::frobenius(Elem a, std::uint32_t h) const {
    if (h >= e_) throw InvalidExponentIndex("frobenius exponent index out of range");
    long long exp = 1;
    for (std::uint32_t i = 0; i < h; ++i) exp *= p_;
    return pow(a, exp);
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> v(q_);
    for (Elem i = 0; i < q_; ++i) v[i] = i;
    return v;
}

void require_same_field(const Field& a, const Field& b) {
    if (!a.same(b)) throw FieldMismatch("operands belong to different fields");
}

} // namespace lip
