#ifndef NOC_RESOLVER_HPP
#define NOC_RESOLVER_HPP

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "noc/orbitdata.hpp"
#include "noc/ratfun.hpp"

namespace noc {

// all exponent vectors over vt of weighted degree exactly d
inline std::vector<Exp> weighted_monomials(const VarTablePtr& vt, int d) {
    std::vector<Exp> out;
    Exp cur(vt->arity(), 0);
    auto rec = [&](auto&& self, std::size_t i, int rem) -> void {
        if (i == vt->arity()) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        int w = vt->weight(i);
        for (int k = 0; k * w <= rem; ++k) {
            cur[i] = static_cast<unsigned>(k);
            self(self, i + 1, rem - k * w);
        }
        cur[i] = 0;
    };
    rec(rec, 0, d);
    return out;
}

struct SolveClassError : std::runtime_error {
    long solspace_dim;
    bool inconsistent;
    SolveClassError(const std::string& what, long dim, bool inc)
        : std::runtime_error(what), solspace_dim(dim), inconsistent(inc) {}
};

// the T_C slice data of the codimension-1 family: torus weights of the
// C-stabilizer and the two slice directions
struct SliceData {
    // u-side (2a, a+b, 2b), v-side (2a+2b, a+3b, 4a)
    VarTablePtr params = make_table({{"alpha", 1}, {"beta", 1}});
    Poly weight_c_direction() const { // (0,0,z^2): 4a-4b
        return Poly::var(params, 0, Rational(4)) + Poly::var(params, 1, Rational(-4));
    }
    Poly weight_g_direction() const { // (0,0,xz-y^2): 2a-2b
        return Poly::var(params, 0, Rational(2)) + Poly::var(params, 1, Rational(-2));
    }
    std::vector<Poly> restriction_images() const {
        Poly a = Poly::var(params, 0), b = Poly::var(params, 1);
        std::vector<Poly> uw = {Rational(2) * a, a + b, Rational(2) * b};
        std::vector<Poly> vw = {Rational(2) * a + Rational(2) * b, a + Rational(3) * b,
                                Rational(4) * a};
        std::vector<Poly> images;
        for (int i = 1; i <= 3; ++i) images.push_back(elem_sym(i, uw));
        for (int i = 1; i <= 3; ++i) images.push_back(elem_sym(i, vw));
        return images;
    }
};

namespace detail {

// restriction images of the generic A_mu stabilizer torus (alpha = beta in
// the slice torus): u_i -> sigma_i(2a,2a,2a), v_i -> sigma_i(4a,4a,4a)
inline std::vector<Poly> amu_torus_images() {
    static VarTablePtr pt = make_table({{"alpha", 1}});
    Poly a = Poly::var(pt, 0);
    std::vector<Poly> uw = {Rational(2) * a, Rational(2) * a, Rational(2) * a};
    std::vector<Poly> vw = {Rational(4) * a, Rational(4) * a, Rational(4) * a};
    std::vector<Poly> images;
    for (int i = 1; i <= 3; ++i) images.push_back(elem_sym(i, uw));
    for (int i = 1; i <= 3; ++i) images.push_back(elem_sym(i, vw));
    return images;
}

// rows of "sum_k x_k * restricted(mono_k) == rhs" matched per parameter
// monomial; feeding stops early once the reducer has full rank
inline void feed_restriction_rows(RowReducer& red, const std::vector<Exp>& basis,
                                  const std::vector<Poly>& images, const Poly& rhs) {
    const std::size_t n = basis.size();
    if (red.full_rank()) return;
    VarTablePtr vt = chern_table();
    // restricted basis monomials, with power caching
    std::vector<std::vector<Poly>> pows(images.size());
    VarTablePtr target = images[0].table();
    auto power = [&](std::size_t i, unsigned k) -> const Poly& {
        auto& cache = pows[i];
        if (cache.empty()) cache.push_back(Poly::constant(target, Rational(1)));
        while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
        return cache[k];
    };
    std::vector<Poly> restricted;
    restricted.reserve(n);
    for (const auto& e : basis) {
        Poly t = Poly::constant(target, Rational(1));
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) t = t * power(i, e[i]);
        restricted.push_back(std::move(t));
    }
    std::map<Exp, std::size_t, GradedLexFirst> monos;
    for (const auto& r : restricted)
        for (const auto& [e, c] : r.terms()) monos.emplace(e, monos.size());
    for (const auto& [e, c] : rhs.terms()) monos.emplace(e, monos.size());
    for (const auto& [e, idx] : monos) {
        std::vector<Rational> row(n, Rational(0));
        for (std::size_t k = 0; k < n; ++k) {
            auto it = restricted[k].terms().find(e);
            if (it != restricted[k].terms().end()) row[k] = it->second;
        }
        Rational rv(0);
        if (auto it = rhs.terms().find(e); it != rhs.terms().end()) rv = it->second;
        red.add_row(std::move(row), rv);
        if (red.full_rank()) return;
    }
}

} // namespace detail

// The restriction-equation solver: the unique weighted-homogeneous class of
// degree d = codim vanishing on every other orbit of codim <= d and on the
// generic A_mu torus, and restricting to the Euler class on the target orbit.
// Every imposed condition is re-verified on the solved class, including the
// ones the eliminator never consumed.
inline Poly solve_class(const OrbitRecord& target) {
    if (target.codim < 2)
        throw std::invalid_argument("solve_class: requires codim >= 2");
    if (target.name == "0")
        throw std::invalid_argument("solve_class: the zero orbit's class is not computed");
    const int d = target.codim;
    VarTablePtr vt = chern_table();
    const std::vector<Exp> basis = weighted_monomials(vt, d);
    const std::size_t n = basis.size();

    // constraint sources ordered by expansion cost
    std::vector<const OrbitRecord*> sources;
    for (const auto& o : orbit_table())
        if (o.name != target.name && o.codim <= d) sources.push_back(&o);
    std::sort(sources.begin(), sources.end(), [](const OrbitRecord* a, const OrbitRecord* b) {
        if (a->params.size() != b->params.size()) return a->params.size() < b->params.size();
        if (a->codim != b->codim) return a->codim < b->codim;
        return a->name < b->name;
    });

    RowReducer red(n);
    // target Euler condition first (the inhomogeneous part), then vanishing
    Poly euler = euler_class(target);
    auto target_images = restriction_images(target);
    detail::feed_restriction_rows(red, basis, target_images, euler);
    auto amu = detail::amu_torus_images();
    if (d >= 2)
        detail::feed_restriction_rows(red, basis, amu, Poly::zero(amu[0].table()));
    for (const auto* o : sources) {
        if (red.full_rank()) break;
        auto images = restriction_images(*o);
        detail::feed_restriction_rows(red, basis, images, Poly::zero(images[0].table()));
    }

    if (red.inconsistent())
        throw SolveClassError("solve_class(" + target.name + "): inconsistent system", 0, true);
    if (!red.full_rank()) {
        long dim = red.nullity();
        std::ostringstream os;
        os << "solve_class(" << target.name << "): non-unique, solution space dimension " << dim;
        throw SolveClassError(os.str(), dim, false);
    }
    auto x = *red.solve_unique();
    Poly cls(vt);
    for (std::size_t k = 0; k < n; ++k) cls.add_term(basis[k], x[k]);

    // post-hoc: re-assert every restriction condition directly
    if (restrict_class(target, cls) != euler)
        throw SolveClassError("solve_class(" + target.name + "): Euler condition failed", 0, true);
    if (!cls.substitute(amu).is_zero())
        throw SolveClassError("solve_class(" + target.name + "): A_mu condition failed", 0, true);
    for (const auto* o : sources)
        if (!restrict_class(*o, cls).is_zero())
            throw SolveClassError(
                "solve_class(" + target.name + "): vanishing fails on " + o->name, 0, true);
    return cls;
}

enum class Mu { finite, infinity };

// Thm 3.3 slice computation: [A_mu] = A u1 + B v1 with the slice torus
// restriction equal to the class of the parabola inside N_C
inline Poly class_Amu(Mu mu) {
    SliceData slice;
    auto images = slice.restriction_images();
    Poly target = mu == Mu::finite ? slice.weight_c_direction() : slice.weight_g_direction();
    // unknowns (A, B): A * r(u1) + B * r(v1) = target
    const Poly& ru1 = images[0];
    const Poly& rv1 = images[3];
    RowReducer red(2);
    std::map<Exp, char, GradedLexFirst> monos;
    for (const auto& [e, c] : ru1.terms()) monos.emplace(e, 0);
    for (const auto& [e, c] : rv1.terms()) monos.emplace(e, 0);
    for (const auto& [e, c] : target.terms()) monos.emplace(e, 0);
    for (const auto& [e, unused] : monos) {
        auto coeff = [&](const Poly& p) {
            auto it = p.terms().find(e);
            return it == p.terms().end() ? Rational(0) : it->second;
        };
        red.add_row({coeff(ru1), coeff(rv1)}, coeff(target));
    }
    if (red.inconsistent() || !red.full_rank())
        throw SolveClassError("class_Amu: slice system not uniquely solvable", red.nullity(),
                              red.inconsistent());
    auto x = *red.solve_unique();
    VarTablePtr vt = chern_table();
    return Poly::var(vt, "u1", x[0]) + Poly::var(vt, "v1", x[1]);
}

// --------------------------------------------------- Poincare series check

inline VarTablePtr series_table() {
    static VarTablePtr vt = make_table({{"t", 1}});
    return vt;
}

// t^codim / prod_j (1 - t^{d_j})
inline RatFun orbit_poincare_term(const OrbitRecord& o) {
    VarTablePtr vt = series_table();
    Poly t = Poly::var(vt, 0);
    Poly one = Poly::constant(vt, Rational(1));
    Poly num = t.pow(static_cast<unsigned>(o.codim));
    Poly den = one;
    for (int d : o.poincare_degrees) den = den * (one - t.pow(static_cast<unsigned>(d)));
    return RatFun(num, den);
}

struct PoincareReport {
    bool pass;
    RatFun residue;
};

// (1+t)/(1-t) + sum over the 24 orbits == 1/((1-t)^2 (1-t^2)^2 (1-t^3)^2)
inline PoincareReport poincare_identity_check() {
    VarTablePtr vt = series_table();
    Poly t = Poly::var(vt, 0);
    Poly one = Poly::constant(vt, Rational(1));
    RatFun total(one + t, one - t);
    for (const auto& o : orbit_table()) total += orbit_poincare_term(o);
    Poly rhs_den = (one - t).pow(2) * (one - t.pow(2)).pow(2) * (one - t.pow(3)).pow(2);
    RatFun rhs(one, rhs_den);
    RatFun residue = total - rhs;
    return {residue.is_zero(), residue};
}

// --------------------------------------------------------- printed classes

// the seven classes displayed in the paper's orbit-class theorem
inline const std::map<std::string, Poly>& printed_classes() {
    static const std::map<std::string, Poly> table = [] {
        VarTablePtr vt = chern_table();
        Poly u1 = Poly::var(vt, "u1"), u2 = Poly::var(vt, "u2"), u3 = Poly::var(vt, "u3");
        Poly v1 = Poly::var(vt, "v1"), v2 = Poly::var(vt, "v2"), v3 = Poly::var(vt, "v3");
        auto R = [](long x) { return Rational(x); };
        std::map<std::string, Poly> m;
        m.emplace("C", R(8) * (v1 - R(2) * u1).pow(2));
        m.emplace("D", R(-3) * u2 + R(3) * v2 - R(16) * u1 * v1 + R(3) * v1.pow(2) +
                           R(17) * u1.pow(2));
        m.emplace("D*", R(12) * u2 - R(3) * v2 - R(20) * u1 * v1 + R(6) * v1.pow(2) +
                            R(16) * u1.pow(2));
        m.emplace("E", R(3) * u3 + R(3) * v3 - R(3) * u1 * u2 + u2 * v1 - R(6) * u1 * v1.pow(2) +
                           R(13) * u1.pow(2) * v1 - R(2) * u1 * v2 - R(8) * u1.pow(3) + v1.pow(3));
        m.emplace("E*", R(-24) * u3 + R(3) * v3 - R(24) * u1 * u2 + R(16) * u2 * v1 -
                            R(16) * u1 * v1.pow(2) + R(20) * u1.pow(2) * v1 - R(6) * v1 * v2 +
                            R(10) * u1 * v2 - R(8) * u1.pow(3) + R(4) * v1.pow(3));
        m.emplace("F", R(2) * (v1 - R(2) * u1) *
                           (R(6) * u1.pow(2) - R(4) * u1 * v1 - R(6) * u2 + R(3) * v2));
        m.emplace("F*", R(2) * (v1 - R(2) * u1) *
                            (R(5) * u1.pow(2) - R(8) * u1 * v1 + R(9) * u2 - R(3) * v2 +
                             R(3) * v1.pow(2)));
        return m;
    }();
    return table;
}

inline bool has_integer_coefficients(const Poly& p) {
    for (const auto& [e, c] : p.terms())
        if (!c.is_integer()) return false;
    return true;
}

// all solved orbit classes, keyed by orbit name (codim >= 2, zero orbit
// excluded); computed once
inline const std::map<std::string, Poly>& all_classes() {
    static const std::map<std::string, Poly> classes = [] {
        std::map<std::string, Poly> m;
        for (const auto& o : orbit_table()) {
            if (o.codim < 2 || o.name == "0") continue;
            m.emplace(o.name, solve_class(o));
        }
        return m;
    }();
    return classes;
}

} // namespace noc

#endif
