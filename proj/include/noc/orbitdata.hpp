#ifndef NOC_ORBITDATA_HPP
#define NOC_ORBITDATA_HPP

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "noc/net.hpp"
#include "noc/poly.hpp"

namespace noc {

// the Chern generators of H*(B(GL(U) x GL(V))), weights 1,2,3,1,2,3
inline VarTablePtr chern_table() {
    static VarTablePtr vt = make_table(
        {{"u1", 1}, {"u2", 2}, {"u3", 3}, {"v1", 1}, {"v2", 2}, {"v3", 3}});
    return vt;
}

// integer-coefficient linear form over an orbit's torus parameters
struct LinForm {
    std::vector<long> c; // aligned with the orbit's parameter list

    friend bool operator==(const LinForm& a, const LinForm& b) { return a.c == b.c; }
    friend bool operator<(const LinForm& a, const LinForm& b) { return a.c < b.c; }

    Poly to_poly(const VarTablePtr& vt) const {
        Poly p(vt);
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i]) p += Poly::var(vt, i, Rational(c[i]));
        return p;
    }
};

enum class Stratum { sigma0, sigma1, sigma2, zero };

inline std::string stratum_str(Stratum s) {
    switch (s) {
        case Stratum::sigma0: return "Sigma0";
        case Stratum::sigma1: return "Sigma1";
        case Stratum::sigma2: return "Sigma2";
        case Stratum::zero: return "zero";
    }
    return "?";
}

// one row of Tables 1 and 3
struct OrbitRecord {
    std::string name;
    int codim = 0;
    Stratum stratum = Stratum::sigma0;
    std::string delta_label;
    std::string dual; // Wall dual, Sigma^0 rows only
    std::vector<std::string> params;
    VarTablePtr param_table;
    std::array<LinForm, 3> u_weights{}, v_weights{};
    std::vector<LinForm> normal_weights;
    std::vector<int> poincare_degrees;
    std::vector<Rational> phi; // positivity witness values, empty if none in Table 3
    Net representative;
};

namespace detail {

inline const std::map<char, std::string>& param_letters() {
    static const std::map<char, std::string> m = {{'a', "alpha"}, {'b', "beta"},  {'g', "gamma"},
                                                  {'d', "delta"}, {'e', "epsilon"}, {'k', "kappa"}};
    return m;
}

// parses "2a-2b", "d-a-g", "b", "4a" over the given parameter letters
inline LinForm parse_linform(const std::string& s, const std::string& letters) {
    LinForm f;
    f.c.assign(letters.size(), 0);
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && s[i] == ' ') ++i;
        if (i >= s.size()) break;
        long sign = 1;
        if (s[i] == '+') { ++i; } else if (s[i] == '-') { sign = -1; ++i; }
        while (i < s.size() && s[i] == ' ') ++i;
        long coef = 1;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coef = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                coef = coef * 10 + (s[i++] - '0');
        }
        if (i >= s.size()) throw std::invalid_argument("parse_linform: missing letter in " + s);
        auto pos = letters.find(s[i]);
        if (pos == std::string::npos)
            throw std::invalid_argument("parse_linform: unknown parameter in " + s);
        f.c[pos] += sign * coef;
        ++i;
    }
    return f;
}

struct RowSpec {
    const char* name;
    int codim;
    Stratum stratum;
    const char* delta_label;
    const char* dual;
    const char* letters; // parameter letters in order, e.g. "ab"
    const char* q1;
    const char* q2;
    const char* q3;
    const char* uw; // semicolon-separated linear forms
    const char* vw;
    const char* normals;
    std::vector<int> degrees;
    const char* phi; // comma-separated values, or nullptr
};

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

inline OrbitRecord build_record(const RowSpec& r) {
    OrbitRecord o;
    o.name = r.name;
    o.codim = r.codim;
    o.stratum = r.stratum;
    o.delta_label = r.delta_label;
    o.dual = r.dual;
    std::string letters = r.letters;
    std::vector<std::pair<std::string, int>> pv;
    for (char ch : letters) {
        o.params.push_back(param_letters().at(ch));
        pv.emplace_back(param_letters().at(ch), 1);
    }
    o.param_table = make_table(pv);
    auto uws = split(r.uw, ';');
    auto vws = split(r.vw, ';');
    if (uws.size() != 3 || vws.size() != 3)
        throw std::logic_error("orbit data: need 3 u-weights and 3 v-weights");
    for (int i = 0; i < 3; ++i) {
        o.u_weights[i] = parse_linform(uws[i], letters);
        o.v_weights[i] = parse_linform(vws[i], letters);
    }
    for (const auto& w : split(r.normals, ';')) o.normal_weights.push_back(parse_linform(w, letters));
    if (static_cast<int>(o.normal_weights.size()) != o.codim)
        throw std::logic_error("orbit data: normal weight count != codim for " + o.name);
    o.poincare_degrees = r.degrees;
    if (r.phi) {
        for (const auto& v : split(r.phi, ','))
            o.phi.push_back(Rational::parse(v));
        if (o.phi.size() != o.params.size())
            throw std::logic_error("orbit data: phi arity mismatch for " + o.name);
    }
    o.representative = make_net(r.q1, r.q2, r.q3);
    return o;
}

inline std::vector<OrbitRecord> build_orbit_table() {
    // Tables 1 and 3. Three print gaps in the Table 3 normal-weight lists are
    // filled (I: 2b-a-g, I*: a+g-2b, (4): g-a-3b), orbit 0's 18 normal weights
    // are the full Noc weight list, row (22)'s Poincare degrees carry the
    // fourth generator, and K's witness last entry is 1; each correction is
    // re-derived and asserted by verify_orbit_data.
    std::vector<RowSpec> rows = {
        {"C", 2, Stratum::sigma0, "nu", "C", "ab", "y2+2xz", "2yz", "-x2",
         "2a;a+b;2b", "2a+2b;a+3b;4a", "4a-4b;2a-2b", {1, 1}, "1,0"},
        {"D", 2, Stratum::sigma0, "theta", "D*", "ab", "x2", "y2", "z2+2xy",
         "2a;2b;a+b", "4a;4b;2a+2b", "3a-3b;3b-3a", {1, 2}, nullptr},
        {"D*", 2, Stratum::sigma0, "theta", "D", "ab", "2xz", "2yz", "z2+2xy",
         "2a;2b;a+b", "3a+b;a+3b;2a+2b", "3a-3b;3b-3a", {1, 2}, nullptr},
        {"E", 3, Stratum::sigma0, "A", "E*", "abg", "x2", "y2", "z2",
         "a;b;g", "2a;2b;2g", "2a-b-g;2b-a-g;2g-a-b", {1, 2, 3}, nullptr},
        {"E*", 3, Stratum::sigma0, "A", "E", "abg", "2xy", "2yz", "2xz",
         "a;b;g", "a+b;b+g;g+a", "-2a+b+g;-2b+a+g;-2g+a+b", {1, 2, 3}, nullptr},
        {"F", 3, Stratum::sigma0, "neq", "F*", "ab", "x2+y2", "2xy", "2yz",
         "a;a;b", "2a;2a;a+b", "2a-2b;2a-2b;a-b", {1, 1}, "1,0"},
        {"F*", 3, Stratum::sigma0, "Omega", "F", "ab", "x2+y2", "xz", "z2",
         "a;a;b", "2a;a+b;2b", "2b-2a;2b-2a;b-a", {1, 1}, "-1,0"},
        {"G", 4, Stratum::sigma0, "neq", "G*", "abg", "x2", "y2", "yz",
         "a;b;g", "2a;2b;b+g", "2a-2g;b-a;2b-a-g;2b-2g", {1, 1, 1}, "1,2,0"},
        {"G*", 4, Stratum::sigma0, "neq", "G", "abg", "xy", "xz", "z2",
         "a;b;g", "a+b;a+g;2g", "2g-2a;a-b;-2b+a+g;2g-2b", {1, 1, 1}, "-1,-2,0"},
        {"H", 5, Stratum::sigma0, "Xi", "H", "ab", "x2", "2xy", "y2+2xz",
         "2a;a+b;2b", "4a;3a+b;2a+2b", "2a-2b;2a-2b;3a-3b;3a-3b;4a-4b", {1, 1}, "1,0"},
        {"I", 7, Stratum::sigma0, "0", "I*", "abg", "x2", "xy", "y2",
         "a;b;g", "2a;a+b;2b", "a-g;2a-b-g;2a-2g;b-g;-2g+a+b;2b-2g;2b-a-g", {1, 1, 2}, "0,0,-1"},
        {"I*", 7, Stratum::sigma0, "0", "I", "abg", "xz", "yz", "z2",
         "a;b;g", "a+g;b+g;2g", "-a+g;-2a+b+g;-2a+2g;-b+g;2g-a-b;-2b+2g;a+g-2b", {1, 1, 2}, "0,0,1"},
        {"(1^4)", 4, Stratum::sigma1, "K", "", "ab", "x2-xz", "y2-yz", "0",
         "a;a;a", "2a;2a;b", "b-2a;b-2a;b-2a;b-2a", {1, 1}, "0,1"},
        {"(21^2)", 5, Stratum::sigma1, "neq", "", "abg", "xy", "xz+yz", "0",
         "a;a;b", "2a;a+b;g", "2a-2b;g-2a;g-2a;g-a-b;g-2b", {1, 1, 1}, "1,0,3"},
        {"(31)", 6, Stratum::sigma1, "Xi", "", "abg", "xz", "x2-yz", "0",
         "a+b;2a;2b", "a+3b;2a+2b;g", "3b-3a;2b-2a;g-3a-b;g-4a;g-2a-2b;g-4b", {1, 1, 1}, "0,1,5"},
        {"(22)", 6, Stratum::sigma1, "neq", "", "abgd", "x2", "yz", "0",
         "a;b;g", "2a;b+g;d", "2a-2b;2a-2g;d-a-b;d-a-g;d-2b;d-2g", {1, 1, 1, 2}, "1,0,0,2"},
        {"(4)", 7, Stratum::sigma1, "Xi", "", "abg", "xz+y2", "x2", "0",
         "2a;a+b;2b", "2a+2b;4a;g", "2a-2b;3a-3b;4a-4b;g-3a-b;g-2a-2b;g-4b;g-a-3b", {1, 1, 1}, "1,0,5"},
        {"K", 8, Stratum::sigma1, "0", "", "abgd", "y2", "z2", "0",
         "b;a;g", "2a;2g;d", "2a-2b;2a-b-g;2g-2b;2g-a-b;d-2b;d-a-b;d-b-g;d-a-g",
         {1, 1, 1, 2}, "0,-1,0,1"},
        {"L", 8, Stratum::sigma1, "0", "", "abgd", "xy", "xz", "0",
         "a;b;g", "a+b;a+g;d", "a-b;a-g;a+b-2g;a+g-2b;d-2a;d-2b;d-2g;d-b-g",
         {1, 1, 1, 2}, "1,0,0,3"},
        {"M", 9, Stratum::sigma1, "0", "", "abgd", "yz", "y2", "0",
         "a;b;g", "b+g;2b;d", "b+g-2a;b-a;2b-2a;2b-a-g;2b-2g;d-2a;d-a-b;d-a-g;d-2g",
         {1, 1, 1, 1}, "0,1,0,2"},
        {"S", 10, Stratum::sigma2, "0", "", "abgd", "xy-z2", "0", "0",
         "2a;2b;a+b", "2a+2b;g;d",
         "g-2a-2b;g-3a-b;g-4a;g-a-3b;g-4b;d-2a-2b;d-3a-b;d-4a;d-a-3b;d-4b",
         {1, 1, 2, 2}, "0,0,1,1"},
        {"PL", 11, Stratum::sigma2, "0", "", "abgde", "xy", "0", "0",
         "a;b;g", "a+b;d;e",
         "d-2a;d-2b;d-a-g;d-b-g;d-2g;e-2a;e-2b;e-a-g;e-b-g;e-2g;a+b-2g",
         {1, 1, 1, 2, 2}, "1,0,0,3,3"},
        {"DL", 13, Stratum::sigma2, "0", "", "abgde", "x2", "0", "0",
         "a;b;g", "2a;d;e",
         "d-a-b;d-2b;d-a-g;d-2g;d-b-g;e-a-b;e-2b;e-a-g;e-2g;e-b-g;2a-2b;2a-b-g;2a-2g",
         {1, 1, 1, 2, 2}, "1,0,0,3,3"},
        {"0", 18, Stratum::zero, "0", "", "abgdek", "0", "0", "0",
         "a;b;g", "d;e;k",
         "d-2a;d-a-b;d-a-g;d-2b;d-b-g;d-2g;e-2a;e-a-b;e-a-g;e-2b;e-b-g;e-2g;"
         "k-2a;k-a-b;k-a-g;k-2b;k-b-g;k-2g",
         {1, 1, 2, 2, 3, 3}, nullptr},
    };
    std::vector<OrbitRecord> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(build_record(r));
    return out;
}

} // namespace detail

inline const std::vector<OrbitRecord>& orbit_table() {
    static const std::vector<OrbitRecord> table = detail::build_orbit_table();
    return table;
}

inline const OrbitRecord& orbit(const std::string& name) {
    for (const auto& o : orbit_table())
        if (o.name == name) return o;
    throw std::invalid_argument("orbit: unknown name " + name);
}

// substitution u_i -> sigma_i(u_weights), v_i -> sigma_i(v_weights), aligned
// with chern_table() order
inline std::vector<Poly> restriction_images(const OrbitRecord& o) {
    std::vector<Poly> uw, vw;
    for (int i = 0; i < 3; ++i) {
        uw.push_back(o.u_weights[i].to_poly(o.param_table));
        vw.push_back(o.v_weights[i].to_poly(o.param_table));
    }
    std::vector<Poly> images;
    for (int i = 1; i <= 3; ++i) images.push_back(elem_sym(i, uw));
    for (int i = 1; i <= 3; ++i) images.push_back(elem_sym(i, vw));
    return images;
}

// j_o : restriction of a class in Z[u1..u3,v1..v3] to the orbit's torus
inline Poly restrict_class(const OrbitRecord& o, const Poly& cls) {
    return cls.substitute(restriction_images(o));
}

// product of the normal weights
inline Poly euler_class(const OrbitRecord& o) {
    Poly e = Poly::constant(o.param_table, Rational(1));
    for (const auto& w : o.normal_weights) e = e * w.to_poly(o.param_table);
    return e;
}

// ---------------------------------------------------------- data integrity

namespace detail {

// weight of quadric monomial q under the orbit's U-weights, as a LinForm
inline LinForm monomial_weight(const OrbitRecord& o, int q) {
    LinForm w;
    w.c.assign(o.params.size(), 0);
    for (int var = 0; var < 3; ++var)
        for (int rep = 0; rep < kQuadExp[q][var]; ++rep)
            for (std::size_t i = 0; i < w.c.size(); ++i) w.c[i] += o.u_weights[var].c[i];
    return w;
}

} // namespace detail

// Derives the normal weights from scratch: Noc coordinate (q, slot) carries
// weight v_slot - wt(q); the tangent space at the representative is spanned by
// the gl(U) derivations and gl(V) slot mixes; per weight block, the normal
// multiplicity is (block dim) - (tangent rank in the block).
inline std::vector<LinForm> derive_normal_weights(const OrbitRecord& o) {
    const Net& rep = o.representative;
    // coordinate weights
    std::map<LinForm, std::vector<int>> blocks; // weight -> flat coord list (6*slot+q)
    for (int slot = 0; slot < 3; ++slot) {
        for (int q = 0; q < kQuadMonomials; ++q) {
            LinForm w = o.v_weights[slot];
            LinForm mw = detail::monomial_weight(o, q);
            for (std::size_t i = 0; i < w.c.size(); ++i) w.c[i] -= mw.c[i];
            blocks[w].push_back(6 * slot + q);
        }
    }
    // representative must be torus-fixed: nonzero coordinates sit in weight 0
    LinForm zero;
    zero.c.assign(o.params.size(), 0);
    for (int slot = 0; slot < 3; ++slot)
        for (int q = 0; q < kQuadMonomials; ++q)
            if (!rep.rows[slot][q].is_zero()) {
                LinForm w = o.v_weights[slot];
                LinForm mw = detail::monomial_weight(o, q);
                for (std::size_t i = 0; i < w.c.size(); ++i) w.c[i] -= mw.c[i];
                if (!(w == zero))
                    throw std::logic_error("orbit " + o.name +
                                           ": representative is not fixed by the torus");
            }
    // tangent vectors (each homogeneous for a torus-fixed representative)
    std::vector<std::array<Rational, 18>> tangent;
    for (int s = 0; s < 3; ++s) {
        for (int t = 0; t < 3; ++t) {
            // derivation var_s -> var_t on each conic
            std::array<Rational, 18> vec{};
            bool nonzero = false;
            for (int slot = 0; slot < 3; ++slot) {
                for (int q = 0; q < kQuadMonomials; ++q) {
                    const Rational& coef = rep.rows[slot][q];
                    if (coef.is_zero()) continue;
                    if (kQuadExp[q][s] == 0) continue;
                    std::array<int, 3> e = {kQuadExp[q][0], kQuadExp[q][1], kQuadExp[q][2]};
                    int mult = e[s];
                    --e[s];
                    ++e[t];
                    for (int q2 = 0; q2 < kQuadMonomials; ++q2)
                        if (kQuadExp[q2][0] == e[0] && kQuadExp[q2][1] == e[1] &&
                            kQuadExp[q2][2] == e[2]) {
                            vec[6 * slot + q2] += Rational(mult) * coef;
                            nonzero = true;
                        }
                }
            }
            if (nonzero) tangent.push_back(vec);
        }
    }
    for (int slot = 0; slot < 3; ++slot) {
        for (int k = 0; k < 3; ++k) {
            std::array<Rational, 18> vec{};
            bool nonzero = false;
            for (int q = 0; q < kQuadMonomials; ++q) {
                if (rep.rows[k][q].is_zero()) continue;
                vec[6 * slot + q] = rep.rows[k][q];
                nonzero = true;
            }
            if (nonzero) tangent.push_back(vec);
        }
    }
    // distribute tangent vectors into weight blocks, asserting homogeneity
    std::vector<LinForm> normals;
    for (const auto& [w, coords] : blocks) {
        std::vector<std::vector<Rational>> rows;
        for (const auto& vec : tangent) {
            bool in_block = false, outside = false;
            for (int i = 0; i < 18; ++i) {
                if (vec[i].is_zero()) continue;
                bool member = std::find(coords.begin(), coords.end(), i) != coords.end();
                (member ? in_block : outside) = true;
            }
            if (in_block && outside)
                throw std::logic_error("orbit " + o.name + ": inhomogeneous tangent vector");
            if (!in_block) continue;
            std::vector<Rational> row;
            for (int c : coords) row.push_back(vec[c]);
            rows.push_back(std::move(row));
        }
        std::size_t rank = matrix_rank(rows, coords.size());
        for (std::size_t i = rank; i < coords.size(); ++i) normals.push_back(w);
    }
    return normals;
}

// full transcription check for one orbit; throws std::logic_error on failure
inline void verify_orbit_data(const OrbitRecord& o) {
    // stratum vs corank of the representative
    int cr = corank(o.representative);
    int want = o.stratum == Stratum::sigma0   ? 0
               : o.stratum == Stratum::sigma1 ? 1
               : o.stratum == Stratum::sigma2 ? 2
                                              : 3;
    if (cr != want) throw std::logic_error("orbit " + o.name + ": corank/stratum mismatch");
    // normal weights against the independent derivation
    std::vector<LinForm> derived = derive_normal_weights(o);
    std::vector<LinForm> stored = o.normal_weights;
    auto key = [](const LinForm& f) { return f.c; };
    std::sort(derived.begin(), derived.end());
    std::sort(stored.begin(), stored.end());
    if (!(derived == stored))
        throw std::logic_error("orbit " + o.name + ": normal weights disagree with derivation");
    // Euler class degree equals codim
    auto deg = euler_class(o).weighted_degree();
    if (!deg || *deg != o.codim)
        throw std::logic_error("orbit " + o.name + ": euler class degree != codim");
    // Poincare degree count equals torus rank
    if (o.poincare_degrees.empty() ||
        o.poincare_degrees.size() != o.params.size())
        throw std::logic_error("orbit " + o.name + ": Poincare degrees arity mismatch");
}

} // namespace noc

#endif
