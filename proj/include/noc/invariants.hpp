#ifndef NOC_INVARIANTS_HPP
#define NOC_INVARIANTS_HPP

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "noc/linsolve.hpp"
#include "noc/net.hpp"
#include "noc/poly.hpp"
#include "noc/wedge.hpp"

namespace noc {

// --------------------------------------------------------------- net space

// coordinate functions of Noc: n{slot}{monomial}, slot 1..3, monomial 1..6
inline VarTablePtr net_table() {
    static VarTablePtr vt = [] {
        std::vector<std::pair<std::string, int>> v;
        for (int s = 1; s <= 3; ++s)
            for (int m = 1; m <= 6; ++m)
                v.emplace_back("n" + std::to_string(s) + std::to_string(m), 1);
        return make_table(v);
    }();
    return vt;
}

inline std::vector<Rational> net_coords(const Net& n) {
    std::vector<Rational> v;
    v.reserve(18);
    for (int s = 0; s < 3; ++s)
        for (int m = 0; m < 6; ++m) v.push_back(n.rows[s][m]);
    return v;
}

// ------------------------------------------------------------ Plucker map

// 3x3 minor polynomial of columns (i,j,k) of the generic 3x6 net matrix
inline const std::vector<Poly>& plucker_polys() {
    static const std::vector<Poly> minors = [] {
        VarTablePtr vt = net_table();
        auto entry = [&](int r, int c) { return Poly::var(vt, 6 * r + c); };
        std::vector<Poly> out;
        for (const auto& tri : wedge_triples()) {
            Poly det = Poly::zero(vt);
            const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
            for (int p = 0; p < 6; ++p) {
                Poly t = entry(0, tri[perm[p][0]]) * entry(1, tri[perm[p][1]]) *
                         entry(2, tri[perm[p][2]]);
                det += p < 3 ? t : -t;
            }
            out.push_back(det);
        }
        return out;
    }();
    return minors;
}

// psi(n) = M1 ^ M2 ^ M3 in e-basis coordinates (the 20 minors)
inline Wedge3 plucker(const Net& n) {
    Wedge3 out;
    out.basis = WedgeBasis::e;
    std::vector<Rational> coords = net_coords(n);
    const auto& minors = plucker_polys();
    for (int i = 0; i < 20; ++i) out.coords[i] = minors[i].eval(coords);
    return out;
}

// symbolic psi: minors evaluated on polynomial net coordinates
inline std::array<Poly, 20> plucker_symbolic(const std::vector<Poly>& coords) {
    std::array<Poly, 20> out;
    const auto& minors = plucker_polys();
    for (int i = 0; i < 20; ++i) out[i] = minors[i].substitute(coords);
    return out;
}

// --------------------------------------------------------------------- J6

inline Rational J6(const Net& n) { return I2(plucker(n)); }

// J6 = I2  o  psi expanded once over the 18 net coordinates
inline const Poly& J6_poly() {
    static const Poly p = I2_poly().substitute(plucker_polys());
    return p;
}

// Salmon's theta from the printed u_{ijk}-formula, composed with psi
inline const Poly& salmon_theta_poly() {
    static const Poly p = [] {
        VarTablePtr vt = t_table();
        auto tv = [&](const std::string& ijk) { return Poly::var(vt, "t" + ijk); };
        auto R = [](long x) { return Rational(x); };
        Poly m8 = tv("235") * tv("235") - R(8) * tv("146") * tv("146");
        m8 += R(4) * tv("146") * tv("235") + R(4) * tv("135") * tv("345") -
              R(4) * tv("125") * tv("256") - R(4) * tv("234") * tv("236");
        m8 += R(8) * tv("145") * tv("156") - R(8) * tv("134") * tv("346") +
              R(8) * tv("126") * tv("246");
        m8 += R(8) * tv("123") * tv("456") - R(8) * tv("136") * tv("245") +
              R(8) * tv("124") * tv("356");
        Poly theta_t = m8 * Rational(-1, 8);
        return theta_t.substitute(plucker_polys());
    }();
    return p;
}

// ---------------------------------------------------------------- cubics

inline constexpr std::array<std::array<int, 3>, 10> kCubExp = {
    {{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
     {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}}};
inline const std::array<std::string, 10> kCubNames = {"x3", "x2y", "x2z", "xy2", "xyz",
                                                      "xz2", "y3", "y2z", "yz2", "z3"};

inline VarTablePtr cubic_table() {
    static VarTablePtr vt = [] {
        std::vector<std::pair<std::string, int>> v;
        for (const auto& n : kCubNames) v.emplace_back(n, 1);
        return make_table(v);
    }();
    return vt;
}

// ternary cubic with exact coefficients over the basis above
struct Cubic {
    std::array<Rational, 10> c{};

    friend bool operator==(const Cubic& a, const Cubic& b) { return a.c == b.c; }
    friend bool operator!=(const Cubic& a, const Cubic& b) { return !(a == b); }
};

inline int cubic_index(int ex, int ey, int ez) {
    for (int i = 0; i < 10; ++i)
        if (kCubExp[i][0] == ex && kCubExp[i][1] == ey && kCubExp[i][2] == ez) return i;
    throw std::invalid_argument("cubic_index: bad exponents");
}

// ------------------------------------------------------- determinant map

// coefficients of det(l1 M1 + l2 M2 + l3 M3) as polynomials in the 18 net
// coordinates; quadric row -> symmetric matrix with halved off-diagonals
inline const std::array<Poly, 10>& det_map_polys() {
    static const std::array<Poly, 10> polys = [] {
        VarTablePtr vt = net_table();
        auto entry = [&](int net, int r, int c) {
            // symmetric matrix of conic row `net`: [[m1, m2/2, m3/2],[., m4, m5/2],[., ., m6]]
            static const int idx[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
            static const int half[3][3] = {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
            Poly e = Poly::var(vt, 6 * net + idx[r][c]);
            return half[r][c] ? e * Rational(1, 2) : e;
        };
        std::array<Poly, 10> out;
        for (auto& p : out) p = Poly::zero(vt);
        for (int k1 = 0; k1 < 3; ++k1)
            for (int k2 = 0; k2 < 3; ++k2)
                for (int k3 = 0; k3 < 3; ++k3) {
                    // det with row r taken from M_{k_r}
                    Poly det =
                        entry(k1, 0, 0) * (entry(k2, 1, 1) * entry(k3, 2, 2) -
                                           entry(k2, 1, 2) * entry(k3, 2, 1)) -
                        entry(k1, 0, 1) * (entry(k2, 1, 0) * entry(k3, 2, 2) -
                                           entry(k2, 1, 2) * entry(k3, 2, 0)) +
                        entry(k1, 0, 2) * (entry(k2, 1, 0) * entry(k3, 2, 1) -
                                           entry(k2, 1, 1) * entry(k3, 2, 0));
                    int e[3] = {0, 0, 0};
                    ++e[k1], ++e[k2], ++e[k3];
                    out[cubic_index(e[0], e[1], e[2])] += det;
                }
        return out;
    }();
    return polys;
}

// delta: the plane cubic det(l1 M1 + l2 M2 + l3 M3) of a net
inline Cubic det_map(const Net& n) {
    Cubic out;
    std::vector<Rational> coords = net_coords(n);
    const auto& polys = det_map_polys();
    for (int i = 0; i < 10; ++i) out.c[i] = polys[i].eval(coords);
    return out;
}

// the (-x, -y, z) reparameterization used for the Weierstrass-form check;
// never applied silently inside det_map
inline Cubic reparam_minus_xy(const Cubic& f) {
    Cubic out = f;
    for (int i = 0; i < 10; ++i)
        if ((kCubExp[i][0] + kCubExp[i][1]) % 2) out.c[i] = -out.c[i];
    return out;
}

// -------------------------------------------------- sl3 derivation actions

// E_{p,q} (replace variable q by p, 1-based) acting on a cubic as a derivation
inline Cubic lie_act_cubic(int p, int q, const Cubic& f) {
    --p, --q;
    Cubic out;
    for (int m = 0; m < 10; ++m) {
        if (f.c[m].is_zero() || kCubExp[m][q] == 0) continue;
        std::array<int, 3> e = {kCubExp[m][0], kCubExp[m][1], kCubExp[m][2]};
        int mult = e[q];
        --e[q];
        ++e[p];
        out.c[cubic_index(e[0], e[1], e[2])] += Rational(mult) * f.c[m];
    }
    return out;
}

// E_{p,q} on a net through GL(U): the derivation acts on each conic
inline Net lie_act_net_u(int p, int q, const Net& n) {
    --p, --q;
    Net out;
    for (int slot = 0; slot < 3; ++slot)
        for (int m = 0; m < 6; ++m) {
            if (n.rows[slot][m].is_zero() || kQuadExp[m][q] == 0) continue;
            std::array<int, 3> e = {kQuadExp[m][0], kQuadExp[m][1], kQuadExp[m][2]};
            int mult = e[q];
            --e[q];
            ++e[p];
            for (int m2 = 0; m2 < 6; ++m2)
                if (kQuadExp[m2][0] == e[0] && kQuadExp[m2][1] == e[1] && kQuadExp[m2][2] == e[2])
                    out.rows[slot][m2] += Rational(mult) * n.rows[slot][m];
        }
    return out;
}

// E_{p,q} on a net through GL(V): conic q lands in slot p
inline Net lie_act_net_v(int p, int q, const Net& n) {
    --p, --q;
    Net out;
    for (int m = 0; m < 6; ++m) out.rows[p][m] = n.rows[q][m];
    return out;
}

// derivation on polynomial functions induced by a linear vector field:
// images[i] is the linear polynomial (A x)_i
inline Poly apply_derivation(const Poly& P, const std::vector<Poly>& images) {
    VarTablePtr vt = P.table();
    Poly out(vt);
    for (const auto& [e, c] : P.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i] || images[i].is_zero()) continue;
            Exp de = e;
            --de[i];
            out += Poly::term(vt, de, c * Rational(static_cast<long>(e[i]))) * images[i];
        }
    }
    return out;
}

// vector-field images for the 6+6 off-diagonal sl3 x sl3 generators on Noc
inline std::vector<std::vector<Poly>> net_generator_fields() {
    VarTablePtr vt = net_table();
    std::vector<std::vector<Poly>> out;
    auto field_from = [&](auto&& act) {
        std::vector<Poly> images(18, Poly::zero(vt));
        for (int j = 0; j < 18; ++j) {
            Net basis;
            basis.rows[j / 6][j % 6] = Rational(1);
            Net img = act(basis);
            for (int i = 0; i < 18; ++i) {
                const Rational& a = img.rows[i / 6][i % 6];
                if (!a.is_zero()) images[i] += Poly::var(vt, j, a);
            }
        }
        return images;
    };
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q) {
            if (p == q) continue;
            out.push_back(field_from([&](const Net& n) { return lie_act_net_u(p, q, n); }));
            out.push_back(field_from([&](const Net& n) { return lie_act_net_v(p, q, n); }));
        }
    return out;
}

// ------------------------------------------------------------- Aronhold

namespace detail {

// degree-d monomials in the 10 cubic coefficients whose total (x,y,z)-weight
// is balanced at (d,d,d); any sl3-invariant is supported there (the diagonal
// commutators [E_pq, E_qp] act by the weight differences)
inline std::vector<std::vector<int>> balanced_cubic_monomials(int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start, int left, int wx, int wy, int wz) -> void {
        if (left == 0) {
            if (wx == d && wy == d && wz == d) out.push_back(cur);
            return;
        }
        for (int i = start; i < 10; ++i) {
            if (wx + kCubExp[i][0] > d || wy + kCubExp[i][1] > d || wz + kCubExp[i][2] > d)
                continue;
            cur.push_back(i);
            self(self, i, left - 1, wx + kCubExp[i][0], wy + kCubExp[i][1], wz + kCubExp[i][2]);
            cur.pop_back();
        }
    };
    rec(rec, 0, d, 0, 0, 0);
    return out;
}

// derivation of a coefficient monomial under E_{p,q}; returns image-monomial
// -> coefficient
inline std::map<std::vector<int>, Rational> derive_cubic_monomial(int p, int q,
                                                                  const std::vector<int>& mon) {
    // (L gamma)_j = sum_m mult(m -> j) gamma_m  for the replace-q-by-p action
    --p, --q;
    std::map<std::vector<int>, Rational> out;
    for (std::size_t pos = 0; pos < mon.size(); ++pos) {
        if (pos && mon[pos] == mon[pos - 1]) continue; // dedupe repeated factors
        int j = mon[pos];
        int count = 0;
        for (int x : mon) count += (x == j);
        // d/dgamma_j replaced by (L gamma)_j: all m with E(m) containing j
        for (int m = 0; m < 10; ++m) {
            if (kCubExp[m][q] == 0) continue;
            std::array<int, 3> e = {kCubExp[m][0], kCubExp[m][1], kCubExp[m][2]};
            int mult = e[q];
            --e[q];
            ++e[p];
            if (e[0] != kCubExp[j][0] || e[1] != kCubExp[j][1] || e[2] != kCubExp[j][2]) continue;
            std::vector<int> nm = mon;
            nm.erase(nm.begin() + static_cast<long>(pos));
            nm.insert(std::lower_bound(nm.begin(), nm.end(), m), m);
            Rational add = Rational(count) * Rational(mult);
            auto it = out.find(nm);
            if (it == out.end()) out.emplace(std::move(nm), add);
            else it->second += add;
        }
    }
    return out;
}

// unique (up to scale) SL3-invariant of the given degree, as a Poly over the
// cubic coefficient table; throws if the kernel is not 1-dimensional
inline Poly invariant_of_degree(int d) {
    auto basis = balanced_cubic_monomials(d);
    const std::size_t n = basis.size();
    RowReducer red(n);
    for (int p = 1; p <= 3 && !red.inconsistent(); ++p) {
        for (int q = 1; q <= 3; ++q) {
            if (p == q) continue;
            std::map<std::vector<int>, std::map<std::size_t, Rational>> rows;
            for (std::size_t i = 0; i < n; ++i)
                for (auto& [img, coef] : derive_cubic_monomial(p, q, basis[i]))
                    rows[img][i] = coef;
            for (const auto& [img, row] : rows) {
                std::vector<Rational> r(n, Rational(0));
                for (const auto& [i, coef] : row) r[i] = coef;
                red.add_row(std::move(r), Rational(0));
            }
        }
    }
    if (red.nullity() != 1)
        throw std::logic_error("aronhold: invariant space of degree " + std::to_string(d) +
                               " has dimension " + std::to_string(red.nullity()));
    auto kern = red.kernel_basis();
    VarTablePtr vt = cubic_table();
    Poly inv(vt);
    for (std::size_t i = 0; i < n; ++i) {
        if (kern[0][i].is_zero()) continue;
        Exp e(10, 0);
        for (int idx : basis[i]) ++e[idx];
        inv.add_term(e, kern[0][i]);
    }
    return inv;
}

// cubic-table substitution images of the Weierstrass family y2z + x3 + a x z2 + b z3
inline std::vector<Poly> weierstrass_images(const VarTablePtr& ab) {
    std::vector<Poly> im(10, Poly::zero(ab));
    im[cubic_index(3, 0, 0)] = Poly::constant(ab, Rational(1));
    im[cubic_index(0, 2, 1)] = Poly::constant(ab, Rational(1));
    im[cubic_index(1, 0, 2)] = Poly::var(ab, 0);
    im[cubic_index(0, 0, 3)] = Poly::var(ab, 1);
    return im;
}

} // namespace detail

// The degree-4 and degree-6 generators of the invariant ring of ternary
// cubics, normalized so that on y2z + x3 + a x z2 + b z3 they evaluate to
// (a, b) exactly. Built by the exact kernel of the six E_{ij} derivations;
// full sl3-annihilation is re-asserted on the normalized results.
struct AronholdPolys {
    Poly a4, b6;
};

inline const AronholdPolys& aronhold_polys() {
    static const AronholdPolys polys = [] {
        Poly A = detail::invariant_of_degree(4);
        Poly B = detail::invariant_of_degree(6);
        VarTablePtr ab = make_table({{"wa", 1}, {"wb", 1}});
        auto im = detail::weierstrass_images(ab);
        Poly Aw = A.substitute(im), Bw = B.substitute(im);
        // restrictions must be scalar multiples of a resp. b
        Poly a = Poly::var(ab, 0), b = Poly::var(ab, 1);
        if (Aw.is_zero() || Bw.is_zero())
            throw std::logic_error("aronhold: invariant vanishes on the Weierstrass family");
        Rational ka = Aw.leading_coefficient();
        Rational kb = Bw.leading_coefficient();
        if (Aw != a * ka || Bw != b * kb)
            throw std::logic_error("aronhold: Weierstrass restriction is not (const*a, const*b)");
        AronholdPolys out{A * ka.inv(), B * kb.inv()};
        // re-assert invariance in the full coefficient space
        VarTablePtr vt = cubic_table();
        for (int p = 1; p <= 3; ++p)
            for (int q = 1; q <= 3; ++q) {
                if (p == q) continue;
                std::vector<Poly> field(10, Poly::zero(vt));
                for (int j = 0; j < 10; ++j) {
                    Cubic basis;
                    basis.c[j] = Rational(1);
                    Cubic img = lie_act_cubic(p, q, basis);
                    for (int i = 0; i < 10; ++i)
                        if (!img.c[i].is_zero()) field[i] += Poly::var(vt, j, img.c[i]);
                }
                if (!apply_derivation(out.a4, field).is_zero() ||
                    !apply_derivation(out.b6, field).is_zero())
                    throw std::logic_error("aronhold: derivation does not annihilate the invariant");
            }
        return out;
    }();
    return polys;
}

// (a, b) of a ternary cubic in the Weierstrass normalization
inline std::pair<Rational, Rational> aronhold(const Cubic& f) {
    const auto& ap = aronhold_polys();
    std::vector<Rational> vals(f.c.begin(), f.c.end());
    return {ap.a4.eval(vals), ap.b6.eval(vals)};
}

// ---------------------------------------------------------------- J12, k

inline Rational J12(const Net& n) {
    return Rational(-48) * aronhold(det_map(n)).first;
}

// J12 = -48 a o delta expanded once over the 18 net coordinates
inline const Poly& J12_poly() {
    static const Poly p = [] {
        std::vector<Poly> det(det_map_polys().begin(), det_map_polys().end());
        return aronhold_polys().a4.substitute(det) * Rational(-48);
    }();
    return p;
}

struct StabilityResult {
    enum class Kind { nullcone, finite_k, infinite_k } kind;
    Rational k; // meaningful for finite_k only
    Rational j6, j12;
};

// nullcone iff J6 = J12 = 0; otherwise k = J6^2 / J12 (infinite when J12 = 0)
inline StabilityResult stability(const Net& n) {
    Rational j6 = J6(n), j12 = J12(n);
    if (j6.is_zero() && j12.is_zero())
        return {StabilityResult::Kind::nullcone, Rational(0), j6, j12};
    if (j12.is_zero()) return {StabilityResult::Kind::infinite_k, Rational(0), j6, j12};
    return {StabilityResult::Kind::finite_k, j6 * j6 / j12, j6, j12};
}

// ------------------------------------------------------------- the slice

// nu_{c,g} = (y2 + 2xz, 2yz, -x2 + 2g(xz - y2) + c z2)
inline Net nu_cg(const Rational& c, const Rational& g) {
    Net n = make_net("y2+2xz", "2yz", "-x2");
    n.rows[2][2] += Rational(2) * g;  // xz
    n.rows[2][3] += Rational(-2) * g; // y2
    n.rows[2][5] += c;                // z2
    return n;
}

inline VarTablePtr cg_table() {
    static VarTablePtr vt = make_table({{"c", 1}, {"g", 1}});
    return vt;
}

// the 18 net coordinates of nu_{c,g} as polynomials in (c, g)
inline std::vector<Poly> nu_cg_coords() {
    VarTablePtr vt = cg_table();
    Poly c = Poly::var(vt, 0), g = Poly::var(vt, 1);
    std::vector<Poly> coords(18, Poly::zero(vt));
    auto set = [&](int slot, int mon, const Poly& val) { coords[6 * slot + mon] = val; };
    set(0, 3, Poly::constant(vt, Rational(1)));  // y2
    set(0, 2, Poly::constant(vt, Rational(2)));  // 2xz
    set(1, 4, Poly::constant(vt, Rational(2)));  // 2yz
    set(2, 0, Poly::constant(vt, Rational(-1))); // -x2
    set(2, 2, Rational(2) * g);
    set(2, 3, Rational(-2) * g);
    set(2, 5, c);
    return coords;
}

// J6 and J12 restricted to the slice, as polynomials in (c, g)
inline std::pair<Poly, Poly> slice_invariants() {
    auto coords = nu_cg_coords();
    Poly j6 = J6_poly().substitute(coords);
    std::vector<Poly> det;
    for (const auto& p : det_map_polys()) det.push_back(p.substitute(coords));
    Poly j12 = aronhold_polys().a4.substitute(det) * Rational(-48);
    return {j6, j12};
}

// a and b pulled back to the slice
inline std::pair<Poly, Poly> slice_ab() {
    auto coords = nu_cg_coords();
    std::vector<Poly> det;
    for (const auto& p : det_map_polys()) det.push_back(p.substitute(coords));
    return {aronhold_polys().a4.substitute(det), aronhold_polys().b6.substitute(det)};
}

// ---------------------------------------------------------- discriminant

struct DiscriminantReport {
    bool proportional;
    Rational constant;        // the c with c * delta_pullback == (J6^2-J12)^2 (J6^2-4J12)
    Rational printed_s551;    // -2^8 3^3, the older printed constant
    Rational printed_s71;     // 48^3
};

// Delta = 4a^3 + 27b^2 pulled back along delta, compared on the slice with
// (J6^2 - J12)^2 (J6^2 - 4 J12); the two printed constants disagree, the true
// one is reported
inline DiscriminantReport discriminant_check() {
    auto [a, b] = slice_ab();
    auto [j6, j12] = slice_invariants();
    Poly delta = Rational(4) * a.pow(3) + Rational(27) * b.pow(2);
    Poly rhs = (j6.pow(2) - j12).pow(2) * (j6.pow(2) - Rational(4) * j12);
    DiscriminantReport rep{false, Rational(0), Rational(-6912), Rational(110592)};
    if (delta.is_zero() || rhs.is_zero()) return rep;
    // rhs == constant * delta ?
    auto q = try_divide(rhs, delta);
    if (!q || !q->is_constant()) return rep;
    rep.proportional = true;
    rep.constant = q->constant_value();
    return rep;
}

// --------------------------------------------------------- Jacobi maps

inline VarTablePtr xi_table() {
    static VarTablePtr vt = make_table({{"xi", 1}, {"eta", 1}, {"nu", 1}});
    return vt;
}

namespace detail {

inline Poly xi_monomial(const VarTablePtr& vt, const std::array<int, 3>& e, const Rational& c) {
    Exp exp(3);
    exp[0] = static_cast<unsigned>(e[0]);
    exp[1] = static_cast<unsigned>(e[1]);
    exp[2] = static_cast<unsigned>(e[2]);
    return Poly::term(vt, exp, c);
}

inline long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace detail

// pi1(e_{ijk}): the (i,j,k) minor of the derivative matrix of the quadric
// monomial basis, a cubic in (xi, eta, nu)
inline const std::array<Poly, 20>& pi1_images() {
    static const std::array<Poly, 20> images = [] {
        VarTablePtr vt = xi_table();
        Poly x = Poly::var(vt, 0), e = Poly::var(vt, 1), n = Poly::var(vt, 2);
        Poly z = Poly::zero(vt);
        // columns: partials of (xi2, xi.eta, xi.nu, eta2, eta.nu, nu2)
        std::array<std::array<Poly, 6>, 3> M = {{{Rational(2) * x, e, n, z, z, z},
                                                 {z, x, z, Rational(2) * e, n, z},
                                                 {z, z, x, z, e, Rational(2) * n}}};
        std::array<Poly, 20> out;
        int idx = 0;
        for (const auto& tri : wedge_triples()) {
            auto A = [&](int r, int c) { return M[r][tri[c]]; };
            out[idx++] = A(0, 0) * (A(1, 1) * A(2, 2) - A(1, 2) * A(2, 1)) -
                         A(0, 1) * (A(1, 0) * A(2, 2) - A(1, 2) * A(2, 0)) +
                         A(0, 2) * (A(1, 0) * A(2, 1) - A(1, 1) * A(2, 0));
        }
        return out;
    }();
    return images;
}

// pi2(e_{ijk}): the (i,j,k) minor of the printed matrix with z-denominators
// cleared; every minor is a genuine cubic in (x, y, z)
inline const std::array<Poly, 20>& pi2_images() {
    static const std::array<Poly, 20> images = [] {
        VarTablePtr vt = make_table({{"x", 1}, {"y", 1}, {"z", 1}});
        Poly x = Poly::var(vt, 0), y = Poly::var(vt, 1), z = Poly::var(vt, 2);
        Poly zero = Poly::zero(vt);
        // column 6 carries (x2/z, y2/z, 2xy/z); stored multiplied by z
        std::array<std::array<Poly, 6>, 3> M = {{{z, zero, -x, zero, zero, x * x},
                                                 {zero, zero, zero, z, -y, y * y},
                                                 {zero, z, -y, zero, -x, Rational(2) * x * y}}};
        std::array<Poly, 20> out;
        int idx = 0;
        for (const auto& tri : wedge_triples()) {
            auto A = [&](int r, int c) { return M[r][tri[c]]; };
            Poly det = A(0, 0) * (A(1, 1) * A(2, 2) - A(1, 2) * A(2, 1)) -
                       A(0, 1) * (A(1, 0) * A(2, 2) - A(1, 2) * A(2, 0)) +
                       A(0, 2) * (A(1, 0) * A(2, 1) - A(1, 1) * A(2, 0));
            bool uses_col6 = tri[0] == 5 || tri[1] == 5 || tri[2] == 5;
            out[idx++] = uses_col6 && !det.is_zero() ? divide_exact(det, z) : det;
        }
        return out;
    }();
    return images;
}

// the Jacobian covariant det(d M_i / d var_j) of a net, computed directly
inline Poly jac_covariant(const Net& n) {
    VarTablePtr vt = xi_table();
    std::array<Poly, 3> conics;
    for (int s = 0; s < 3; ++s) {
        conics[s] = Poly::zero(vt);
        for (int m = 0; m < 6; ++m)
            if (!n.rows[s][m].is_zero())
                conics[s] += detail::xi_monomial(vt, kQuadExp[m], n.rows[s][m]);
    }
    auto d = [&](const Poly& f, int var) {
        Poly out(vt);
        for (const auto& [e, c] : f.terms()) {
            if (!e[var]) continue;
            Exp de = e;
            --de[var];
            out += Poly::term(vt, de, c * Rational(static_cast<long>(e[var])));
        }
        return out;
    };
    // rows: partials, columns: conics
    std::array<std::array<Poly, 3>, 3> A;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) A[r][c] = d(conics[c], r);
    return A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
           A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
           A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
}

// pi1 applied to a Plucker-space point
inline Poly pi1_apply(const Wedge3& vec) {
    if (vec.basis != WedgeBasis::e) throw std::invalid_argument("pi1_apply: wants e-basis");
    Poly acc = Poly::zero(xi_table());
    const auto& im = pi1_images();
    for (int i = 0; i < 20; ++i)
        if (!vec.coords[i].is_zero()) acc += im[i] * vec.coords[i];
    return acc;
}

struct JacobiDualReport {
    // scaled dual images: factors[l] * extraction_l equals the target
    std::array<Rational, 10> pi1_factors, pi2_factors;
    bool pi1_ok = false, pi2_ok = false;
};

// coefficient-extraction dual images of pi1 and pi2 against the Table 2
// generators: (b!c!) * extr_1(x^a y^b z^c) == 8 w_l and
// (a!/6) * extr_2 == -(1/3) w_l^*; the printed examples are the factor-1 rows
inline JacobiDualReport jacobi_dual_check() {
    JacobiDualReport rep;
    const auto& g = table2_generators();
    rep.pi1_ok = rep.pi2_ok = true;
    for (int l = 0; l < 10; ++l) {
        const auto& e = kCubExp[l];
        // pi1: coefficient of xi^a eta^b nu^c across the images
        Wedge3 form;
        form.basis = WedgeBasis::t;
        Exp key(3);
        key[0] = static_cast<unsigned>(e[0]);
        key[1] = static_cast<unsigned>(e[1]);
        key[2] = static_cast<unsigned>(e[2]);
        for (int n = 0; n < 20; ++n) {
            auto it = pi1_images()[n].terms().find(key);
            if (it != pi1_images()[n].terms().end()) form.coords[n] = it->second;
        }
        Rational f1 = Rational(detail::factorial(e[1]) * detail::factorial(e[2]));
        rep.pi1_factors[l] = f1;
        if (!(form * f1 == g.w_t[l + 1] * Rational(8))) rep.pi1_ok = false;

        Wedge3 form2;
        form2.basis = WedgeBasis::t;
        for (int n = 0; n < 20; ++n) {
            auto it = pi2_images()[n].terms().find(key);
            if (it != pi2_images()[n].terms().end()) form2.coords[n] = it->second;
        }
        Rational f2 = Rational(detail::factorial(e[0]), 6);
        rep.pi2_factors[l] = f2;
        if (!(form2 * f2 == g.ws_t[l + 1] * Rational(-1, 3))) rep.pi2_ok = false;
    }
    return rep;
}

} // namespace noc

#endif
