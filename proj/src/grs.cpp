#include "lip/grs.hpp"

#include <map>
#include <mutex>
#include <set>

#include "lip/errors.hpp"

namespace lip {

void GrsSpec::validate() const {
    std::set<Elem> pts(a.begin(), a.end());
    if (pts.size() != a.size()) throw RepeatedNode("evaluation points must be distinct");
    if (v.size() != n()) throw DimensionMismatch("multiplier count must equal length");
    for (Elem m : v)
        if (m == 0) throw ZeroWeight("column multipliers must be nonzero");
    if (p.is_zero()) throw ZeroInput("denominator polynomial must be nonzero");
    if (p.degree() > static_cast<int>(n()))
        throw DegreeTooLarge("deg(P) must not exceed the length");
    for (Elem x : a)
        if (p.eval(x) == 0) throw RootAtEvaluationPoint("P vanishes at an evaluation point");
    if (!extended && a.size() > field->q())
        throw ParameterOutOfRange("length exceeds field size");
    if (extended && a.size() > field->q())
        throw ParameterOutOfRange("extended length exceeds q+1");
}

GrsSpec GrsSpec::canonical(FieldPtr field, std::size_t n, Poly p, bool extended) {
    std::size_t pts = extended ? n - 1 : n;
    GrsSpec spec{field, {}, {}, std::move(p), extended};
    spec.a.resize(pts);
    for (std::size_t i = 0; i < pts; ++i) spec.a[i] = static_cast<Elem>(i);
    spec.v.assign(n, 1);
    return spec;
}

LinearCode grs_code(const GrsSpec& spec) {
    spec.validate();
    const std::size_t n = spec.n();
    const std::size_t k = spec.k();
    const Field& f = *spec.field;
    if (k == 0) return LinearCode::zero_code(spec.field, n);

    // rows are the evaluations of the monomial basis f = 1, x, ..., x^{k-1}
    Matrix g(spec.field, k, n);
    for (std::size_t i = 0; i < spec.a.size(); ++i) {
        Elem scale = f.mul(spec.v[i], f.inv(spec.p.eval(spec.a[i])));
        Elem power = 1;
        for (std::size_t j = 0; j < k; ++j) {
            g.set(j, i, f.mul(scale, power));
            power = f.mul(power, spec.a[i]);
        }
    }
    if (spec.extended) {
        // (x f / P)(infinity) is nonzero only for the top basis row
        g.set(k - 1, n - 1, f.mul(spec.v[n - 1], f.inv(spec.p.leading())));
    }
    return LinearCode::from_generator(g);
}

std::vector<Poly> admissible_irreducibles(const FieldPtr& field, std::uint32_t degree,
                                          const std::vector<Elem>& points,
                                          std::size_t count) {
    if (degree == 0) {
        if (count > 1)
            throw DegreeConditionViolated("only one degree-0 denominator exists");
        return {Poly::constant(field, 1)};
    }
    if (degree == 1) {
        // only linear candidates can vanish at an evaluation point
        std::set<Elem> used(points.begin(), points.end());
        std::vector<Poly> out;
        for (const Poly& cand : irreducibles(field, 1, field->q())) {
            Elem root = field->neg(cand.coeff(0));
            if (!used.count(root)) out.push_back(cand);
            if (out.size() == count) return out;
        }
        throw DegreeConditionViolated(
            "degree-1 factor required but every field element is an evaluation point");
    }

    static std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>,
                    std::vector<Poly>>
        cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto& slot = cache[{field->p(), field->e(), degree}];
    if (slot.size() < count) slot = irreducibles(field, degree, count);
    if (slot.size() < count)
        throw DegreeConditionViolated("not enough irreducibles of the requested degree");
    return {slot.begin(), slot.begin() + count};
}

std::pair<Poly, Poly> grs_pair_polys(const FieldPtr& field, std::size_t n,
                                     std::size_t k1, std::size_t k2, std::size_t ell,
                                     bool extended) {
    std::vector<Elem> points(extended ? n - 1 : n);
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Elem>(i);

    const std::uint32_t df = static_cast<std::uint32_t>(k1 - ell);
    const std::uint32_t dl = static_cast<std::uint32_t>(ell);
    const std::uint32_t dh = static_cast<std::uint32_t>(k2 - ell);

    Poly l = admissible_irreducibles(field, dl, points, 1)[0];
    Poly f = admissible_irreducibles(field, df, points, 1)[0];
    Poly h = (df == dh && df >= 1)
                 ? admissible_irreducibles(field, dh, points, 2)[1]
                 : admissible_irreducibles(field, dh, points, 1)[0];
    return {f * l, h * l};
}

IntersectionPair grs_pair(const FieldPtr& field, std::size_t n, std::size_t k1,
                          std::size_t k2, std::size_t ell) {
    const std::uint32_t q = field->q();
    if (q < 3) throw ParameterOutOfRange("construction requires q >= 3");
    if (k1 > n || k2 > n || n > q + 1 || n < 1)
        throw ParameterOutOfRange("need k1, k2 <= n <= q+1");
    if (ell > std::min(k1, k2)) throw ParameterOutOfRange("ell exceeds min(k1, k2)");
    if (k1 + k2 > n + ell)
        throw DegreeConditionViolated("k1 + k2 must not exceed n + ell");

    auto build = [&](bool extended) {
        auto [p, qpoly] = grs_pair_polys(field, n, k1, k2, ell, extended);
        LinearCode c1 = grs_code(GrsSpec::canonical(field, n, p, extended));
        LinearCode c2 = grs_code(GrsSpec::canonical(field, n, qpoly, extended));
        IntersectionPair pair = IntersectionPair::make(std::move(c1), std::move(c2));
        if (pair.ell != ell) throw Error("construction delivered an unexpected ell");
        return pair;
    };
    if (n == q + 1) return build(true);
    try {
        return build(false);
    } catch (const DegreeConditionViolated&) {
        // a linear factor collided with the evaluation points; the
        // extended code frees one point and may still realize the
        // requested parameters
        return build(true);
    }
}

Poly admissible_denominator(const FieldPtr& field, std::size_t n, std::size_t degree,
                            bool extended) {
    std::vector<Elem> points(extended ? n - 1 : n);
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Elem>(i);

    if (degree == 0) return Poly::constant(field, 1);
    if (degree == 1) return admissible_irreducibles(field, 1, points, 1)[0];

    Poly result = Poly::constant(field, 1);
    std::size_t r = degree;
    if (r % 2 == 1) {
        result = result * admissible_irreducibles(field, 3, points, 1)[0];
        r -= 3;
    }
    if (r > 0) {
        Poly g2 = admissible_irreducibles(field, 2, points, 1)[0];
        for (std::size_t i = 0; i < r / 2; ++i) result = result * g2;
    }
    return result;
}

namespace {

void require_shared_frame(const GrsSpec& sp, const GrsSpec& sq) {
    if (!sp.field->same(*sq.field) || sp.a != sq.a || sp.v != sq.v ||
        sp.extended != sq.extended)
        throw TheoremPreconditionViolated(
            "specs must share evaluation points, multipliers and extension flag");
    sp.validate();
    sq.validate();
}

} // namespace

TheoremCheck grs_intersection_theorem_check(const GrsSpec& spec_p, const GrsSpec& spec_q) {
    require_shared_frame(spec_p, spec_q);
    Poly l = poly_gcd(spec_p.p, spec_q.p);
    if (spec_p.p.degree() + spec_q.p.degree() >
        static_cast<int>(spec_p.n()) + l.degree())
        throw TheoremPreconditionViolated(
            "degree condition deg(P) + deg(Q) <= n + deg(gcd) violated");

    LinearCode lhs = intersect(grs_code(spec_p), grs_code(spec_q));
    GrsSpec spec_l = spec_p;
    spec_l.p = l;
    LinearCode rhs = grs_code(spec_l);
    bool equal = (lhs == rhs);
    return {std::move(lhs), std::move(rhs), equal};
}

TheoremCheck grs_sum_theorem_check(const GrsSpec& spec_p, const GrsSpec& spec_q) {
    require_shared_frame(spec_p, spec_q);
    Poly m = poly_lcm(spec_p.p, spec_q.p);
    if (m.degree() > static_cast<int>(spec_p.n()))
        throw LcmDegreeTooLarge("deg(lcm) exceeds the length");

    LinearCode lhs = code_sum(grs_code(spec_p), grs_code(spec_q));
    GrsSpec spec_m = spec_p;
    spec_m.p = m;
    LinearCode rhs = grs_code(spec_m);
    bool equal = (lhs == rhs);
    return {std::move(lhs), std::move(rhs), equal};
}

} // namespace lip
