#ifndef NOC_WEDGE_HPP
#define NOC_WEDGE_HPP

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "noc/net.hpp"
#include "noc/poly.hpp"

namespace noc {

// the 20 triples i<j<k over the 6 quadric-monomial slots (0-based)
inline const std::vector<std::array<int, 3>>& wedge_triples() {
    static const std::vector<std::array<int, 3>> triples = [] {
        std::vector<std::array<int, 3>> t;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                for (int k = j + 1; k < 6; ++k) t.push_back({i, j, k});
        return t;
    }();
    return triples;
}

inline int wedge_index(int i, int j, int k) {
    const auto& ts = wedge_triples();
    for (std::size_t n = 0; n < ts.size(); ++n)
        if (ts[n][0] == i && ts[n][1] == j && ts[n][2] == k) return static_cast<int>(n);
    throw std::invalid_argument("wedge_index: not a sorted triple");
}

inline std::string wedge_name(int idx) {
    const auto& t = wedge_triples()[idx];
    return std::to_string(t[0] + 1) + std::to_string(t[1] + 1) + std::to_string(t[2] + 1);
}

// the t_{ijk} coordinate functions on the Plucker space, all weight 1
inline VarTablePtr t_table() {
    static VarTablePtr vt = [] {
        std::vector<std::pair<std::string, int>> v;
        for (std::size_t n = 0; n < wedge_triples().size(); ++n)
            v.emplace_back("t" + wedge_name(static_cast<int>(n)), 1);
        return make_table(v);
    }();
    return vt;
}

// e-basis: an element of the Plucker space (wedges of conics), coordinates
// over e_{ijk}; t-basis: a linear form on it (wedges of the dual quadrics),
// coordinates over t_{ijk}; the bases are dual: t_{ijk}(e_{lmn}) = delta
enum class WedgeBasis { e, t };

struct Wedge3 {
    WedgeBasis basis = WedgeBasis::e;
    std::array<Rational, 20> coords{};

    friend bool operator==(const Wedge3& a, const Wedge3& b) {
        return a.basis == b.basis && a.coords == b.coords;
    }
    friend bool operator!=(const Wedge3& a, const Wedge3& b) { return !(a == b); }

    Wedge3 operator*(const Rational& c) const {
        Wedge3 r = *this;
        for (auto& v : r.coords) v *= c;
        return r;
    }
    Wedge3 operator+(const Wedge3& o) const {
        if (basis != o.basis) throw std::invalid_argument("Wedge3: basis mismatch");
        Wedge3 r = *this;
        for (int i = 0; i < 20; ++i) r.coords[i] += o.coords[i];
        return r;
    }
    bool is_zero() const {
        for (const auto& v : coords)
            if (!v.is_zero()) return false;
        return true;
    }
};

// dual pairing: a t-basis form applied to an e-basis element
inline Rational pair(const Wedge3& form, const Wedge3& vec) {
    if (form.basis != WedgeBasis::t || vec.basis != WedgeBasis::e)
        throw std::invalid_argument("pair: wants (t-form, e-vector)");
    Rational s(0);
    for (int i = 0; i < 20; ++i) s += form.coords[i] * vec.coords[i];
    return s;
}

namespace detail {

// elements of wedge^3 S^2(U) written over plain monomial wedges m_i^m_j^m_k
// (m = x2, xy, xz, y2, yz, z2); the Table 2 generators live here
using MonWedge = std::map<std::array<int, 3>, Rational>;

inline void monwedge_add(MonWedge& w, std::array<int, 3> tri, const Rational& c) {
    if (c.is_zero()) return;
    int sign = 1;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 2; ++b)
            if (tri[b] > tri[b + 1]) {
                std::swap(tri[b], tri[b + 1]);
                sign = -sign;
            }
    if (tri[0] == tri[1] || tri[1] == tri[2]) return;
    Rational add = sign > 0 ? c : -c;
    auto it = w.find(tri);
    if (it == w.end()) {
        w.emplace(tri, add);
    } else {
        it->second += add;
        if (it->second.is_zero()) w.erase(it);
    }
}

inline MonWedge monwedge_scale(const MonWedge& w, const Rational& c) {
    MonWedge r;
    if (c.is_zero()) return r;
    for (const auto& [tri, v] : w) r.emplace(tri, v * c);
    return r;
}

// E_{p,q}: replace each occurrence of variable q by variable p (1-based),
// extended as a derivation over the wedge
inline MonWedge lie_act_wedge(int p, int q, const MonWedge& w) {
    --p, --q;
    MonWedge out;
    for (const auto& [tri, c] : w) {
        for (int pos = 0; pos < 3; ++pos) {
            int m = tri[pos];
            if (kQuadExp[m][q] == 0) continue;
            std::array<int, 3> e = {kQuadExp[m][0], kQuadExp[m][1], kQuadExp[m][2]};
            int mult = e[q];
            --e[q];
            ++e[p];
            for (int m2 = 0; m2 < kQuadMonomials; ++m2) {
                if (kQuadExp[m2][0] != e[0] || kQuadExp[m2][1] != e[1] || kQuadExp[m2][2] != e[2])
                    continue;
                std::array<int, 3> ntri = tri;
                ntri[pos] = m2;
                monwedge_add(out, ntri, c * Rational(mult));
            }
        }
    }
    return out;
}

// scaling to t-coordinates: m_i = t_i / s_i with s = (1,2,2,1,2,1)
inline Wedge3 monwedge_to_t(const MonWedge& w) {
    static constexpr std::array<int, 6> s = {1, 2, 2, 1, 2, 1};
    Wedge3 out;
    out.basis = WedgeBasis::t;
    for (const auto& [tri, c] : w)
        out.coords[wedge_index(tri[0], tri[1], tri[2])] =
            c / Rational(s[tri[0]] * s[tri[1]] * s[tri[2]]);
    return out;
}

struct MonTerm {
    long coef;
    int i, j, k; // 1-based monomial slots, as printed (possibly unsorted)
};

inline MonWedge monwedge_from(const std::vector<MonTerm>& terms) {
    MonWedge w;
    for (const auto& t : terms)
        monwedge_add(w, {t.i - 1, t.j - 1, t.k - 1}, Rational(t.coef));
    return w;
}

} // namespace detail

// the twenty un-normalized generators w_1..w_10, w_1*..w_10* of Table 2,
// generated by the printed E_{ij} recursions and checked against the printed
// closed forms; a mismatch is a transcription or operator bug
struct Table2Generators {
    std::array<detail::MonWedge, 11> w, ws; // 1-based
    std::array<Wedge3, 11> w_t, ws_t;       // same, in t-coordinates
};

inline const Table2Generators& table2_generators() {
    static const Table2Generators gens = [] {
        using detail::MonWedge;
        using detail::lie_act_wedge;
        using detail::monwedge_from;
        using detail::monwedge_scale;
        Table2Generators g;
        auto& w = g.w;
        auto& ws = g.ws;
        w[1] = monwedge_from({{1, 1, 2, 3}});
        w[2] = lie_act_wedge(2, 1, w[1]);
        w[3] = lie_act_wedge(3, 1, w[1]);
        w[4] = lie_act_wedge(2, 1, w[2]);
        w[5] = lie_act_wedge(3, 1, w[2]);
        w[6] = lie_act_wedge(3, 1, w[3]);
        w[7] = lie_act_wedge(2, 1, w[4]);
        w[8] = lie_act_wedge(3, 1, w[4]);
        w[9] = lie_act_wedge(3, 1, w[5]);
        w[10] = lie_act_wedge(3, 1, w[6]);
        ws[10] = monwedge_from({{1, 1, 2, 4}});
        ws[9] = monwedge_scale(lie_act_wedge(3, 2, ws[10]), Rational(-1));
        ws[8] = monwedge_scale(lie_act_wedge(3, 2, ws[9]), Rational(-1, 2));
        ws[7] = monwedge_scale(lie_act_wedge(3, 2, ws[8]), Rational(-1, 3));
        ws[6] = monwedge_scale(lie_act_wedge(3, 1, ws[10]), Rational(-1));
        ws[5] = monwedge_scale(lie_act_wedge(3, 1, ws[9]), Rational(-1));
        ws[4] = monwedge_scale(lie_act_wedge(2, 1, ws[7]), Rational(-1));
        ws[3] = monwedge_scale(lie_act_wedge(3, 1, ws[6]), Rational(-1));
        ws[2] = monwedge_scale(lie_act_wedge(2, 1, ws[4]), Rational(-1));
        ws[1] = monwedge_scale(lie_act_wedge(2, 1, ws[2]), Rational(-1));

        // printed closed forms
        auto expect = [](const MonWedge& got, const std::vector<detail::MonTerm>& printed,
                         const std::string& label) {
            if (got != monwedge_from(printed))
                throw std::logic_error("Table 2 generator " + label +
                                       " disagrees with the printed closed form");
        };
        expect(w[2], {{-1, 1, 3, 4}, {1, 1, 2, 5}}, "w2");
        expect(w[3], {{1, 1, 5, 3}, {1, 1, 2, 6}}, "w3");
        expect(w[4], {{2, 2, 4, 3}, {2, 1, 4, 5}}, "w4");
        expect(w[5], {{1, 1, 4, 6}, {2, 3, 2, 5}}, "w5");
        expect(w[6], {{2, 1, 5, 6}, {2, 3, 2, 6}}, "w6");
        expect(w[7], {{6, 2, 4, 5}}, "w7");
        expect(w[8], {{2, 2, 4, 6}, {2, 3, 4, 5}}, "w8");
        expect(w[9], {{2, 2, 5, 6}, {2, 3, 4, 6}}, "w9");
        expect(w[10], {{6, 3, 5, 6}}, "w10");
        expect(ws[9], {{-1, 1, 3, 4}, {-2, 1, 2, 5}}, "w9*");
        expect(ws[8], {{2, 1, 3, 5}, {1, 1, 2, 6}}, "w8*");
        expect(ws[7], {{-1, 1, 3, 6}}, "w7*");
        expect(ws[6], {{2, 2, 3, 4}, {1, 1, 4, 5}}, "w6*");
        expect(ws[5], {{-4, 2, 3, 5}, {-1, 1, 4, 6}}, "w5*");
        expect(ws[4], {{2, 2, 3, 6}, {1, 1, 5, 6}}, "w4*");
        expect(ws[3], {{2, 2, 4, 6}, {-4, 3, 4, 5}}, "w3*");
        expect(ws[2], {{2, 3, 4, 6}, {-4, 2, 5, 6}}, "w2*");
        expect(ws[1], {{6, 4, 5, 6}}, "w1*");
        // the alternate recursions for the left column
        if (w[8] != monwedge_scale(lie_act_wedge(3, 2, w[7]), Rational(1, 3)) ||
            w[9] != monwedge_scale(lie_act_wedge(3, 2, w[8]), Rational(1, 2)) ||
            w[10] != lie_act_wedge(3, 2, w[9]))
            throw std::logic_error("Table 2: E_32 recursions disagree");
        for (int i = 1; i <= 10; ++i) {
            g.w_t[i] = detail::monwedge_to_t(w[i]);
            g.ws_t[i] = detail::monwedge_to_t(ws[i]);
        }
        return g;
    }();
    return gens;
}

// the printed 18-term expansion of -8 I_2 over the t-coordinates
inline Poly minus8_I2_printed() {
    VarTablePtr vt = t_table();
    auto tv = [&](const std::string& ijk) { return Poly::var(vt, "t" + ijk); };
    auto R = [](long x) { return Rational(x); };
    Poly p = tv("235") * tv("235") - R(8) * tv("146") * tv("146");
    p += R(-8) * tv("134") * tv("346") + R(8) * tv("126") * tv("246") + R(8) * tv("145") * tv("156");
    p += R(6) * tv("123") * tv("456") - R(6) * tv("136") * tv("245") + R(6) * tv("124") * tv("356");
    p += R(-4) * tv("125") * tv("256") + R(4) * tv("135") * tv("345") - R(4) * tv("234") * tv("236");
    p += R(2) * tv("134") * tv("256") - R(2) * tv("125") * tv("346") + R(2) * tv("135") * tv("246") -
         R(2) * tv("126") * tv("345");
    p += R(2) * tv("145") * tv("236") + R(2) * tv("156") * tv("234") - R(2) * tv("146") * tv("235");
    return p;
}

// I_2 as a quadratic polynomial in the 20 t-variables, built two ways:
// -sum_i w_i w_i^* from the Table 2 generators, asserted equal to the
// printed formula (I_2 = -(1/8) * minus8_I2_printed)
inline const Poly& I2_poly() {
    static const Poly p = [] {
        const auto& g = table2_generators();
        VarTablePtr vt = t_table();
        Poly sum(vt);
        for (int i = 1; i <= 10; ++i) {
            Poly wi(vt), wsi(vt);
            for (int n = 0; n < 20; ++n) {
                if (!g.w_t[i].coords[n].is_zero()) wi += Poly::var(vt, n, g.w_t[i].coords[n]);
                if (!g.ws_t[i].coords[n].is_zero()) wsi += Poly::var(vt, n, g.ws_t[i].coords[n]);
            }
            sum += wi * wsi;
        }
        Poly from_gens = sum * Rational(-1);
        Poly from_print = minus8_I2_printed() * Rational(-1, 8);
        if (from_gens != from_print)
            throw std::logic_error("I2: generator construction disagrees with the printed formula");
        return from_gens;
    }();
    return p;
}

// evaluate I_2 on a point of the Plucker space (e-basis coordinates)
inline Rational I2(const Wedge3& vec) {
    if (vec.basis != WedgeBasis::e)
        throw std::invalid_argument("I2: expects e-basis coordinates");
    std::vector<Rational> vals(vec.coords.begin(), vec.coords.end());
    return I2_poly().eval(vals);
}

} // namespace noc

#endif
