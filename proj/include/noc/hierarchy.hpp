#ifndef NOC_HIERARCHY_HPP
#define NOC_HIERARCHY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "noc/invariants.hpp"
#include "noc/resolver.hpp"

namespace noc {

// ------------------------------------------------------------- positivity

// strict rational feasibility of { w . phi > 0 } by Fourier-Motzkin; returns
// a witness scaled to integers, or nullopt when infeasible
inline std::optional<std::vector<Rational>> strict_feasible(
    std::vector<std::vector<Rational>> rows, std::size_t nvars) {
    // eliminate variables from the back
    std::vector<std::vector<std::vector<Rational>>> stages;
    std::vector<std::vector<Rational>> cur = std::move(rows);
    for (std::size_t v = nvars; v-- > 0;) {
        stages.push_back(cur);
        std::vector<std::vector<Rational>> next;
        std::vector<const std::vector<Rational>*> pos, neg;
        for (const auto& r : cur) {
            int s = r[v].sign();
            if (s > 0) pos.push_back(&r);
            else if (s < 0) neg.push_back(&r);
            else next.push_back(r);
        }
        for (const auto* p : pos)
            for (const auto* n : neg) {
                // (-n_v) * p + p_v * n cancels variable v, multipliers positive
                std::vector<Rational> comb(v, Rational(0));
                Rational mp = -(*n)[v], mn = (*p)[v];
                bool nonzero = false;
                for (std::size_t i = 0; i < v; ++i) {
                    comb[i] = mp * (*p)[i] + mn * (*n)[i];
                    if (!comb[i].is_zero()) nonzero = true;
                }
                if (!nonzero) return std::nullopt; // derived 0 > 0
                next.push_back(std::move(comb));
            }
        // rows still involving v but one-sided are satisfiable by extreme phi_v
        for (auto& r : next) r.resize(v);
        cur = std::move(next);
    }
    // anything left is a 0 > 0 row that reached the bottom through zero signs
    if (!cur.empty()) return std::nullopt;
    // feasible; back-substitute
    std::vector<Rational> phi(nvars, Rational(0));
    for (std::size_t v = 0; v < nvars; ++v) {
        const auto& stage = stages[stages.size() - 1 - v]; // rows over vars 0..v
        std::optional<Rational> lo, hi;
        for (const auto& r : stage) {
            if (r[v].is_zero()) continue;
            Rational rest(0);
            for (std::size_t i = 0; i < v; ++i) rest += r[i] * phi[i];
            Rational bound = -rest / r[v];
            if (r[v].sign() > 0) {
                if (!lo || bound > *lo) lo = bound;
            } else {
                if (!hi || bound < *hi) hi = bound;
            }
        }
        if (lo && hi)
            phi[v] = (*lo + *hi) * Rational(1, 2);
        else if (lo)
            phi[v] = *lo + Rational(1);
        else if (hi)
            phi[v] = *hi - Rational(1);
        else
            phi[v] = Rational(0);
    }
    // scale to integers
    mpz_class l = 1;
    for (const auto& x : phi) {
        mpz_class d = x.den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    Rational scale{mpz_class(l)};
    for (auto& x : phi) x *= scale;
    return phi;
}

struct PositivityWitness {
    std::vector<Rational> phi; // aligned with the orbit's parameters
    bool from_table;           // Table 3 supplied (and verified) it
};

inline bool witness_valid(const OrbitRecord& o, const std::vector<Rational>& phi) {
    if (phi.size() != o.params.size()) return false;
    for (const auto& w : o.normal_weights) {
        Rational s(0);
        for (std::size_t i = 0; i < phi.size(); ++i) s += Rational(w.c[i]) * phi[i];
        if (s.sign() <= 0) return false;
    }
    return true;
}

// Def 6.1 positivity: a functional strictly positive on all normal weights.
// The Table 3 witness is verified first when present.
inline std::optional<PositivityWitness> positivity(const OrbitRecord& o) {
    if (!o.phi.empty() && witness_valid(o, o.phi)) return PositivityWitness{o.phi, true};
    std::vector<std::vector<Rational>> rows;
    for (const auto& w : o.normal_weights) {
        std::vector<Rational> r;
        for (long c : w.c) r.push_back(Rational(c));
        rows.push_back(std::move(r));
    }
    auto phi = strict_feasible(std::move(rows), o.params.size());
    if (!phi) return std::nullopt;
    return PositivityWitness{*phi, false};
}

// -------------------------------------------------------------- incidence

// Incidence test for positive v: v lies in the closure of eta iff the class
// of eta restricted to v's stabilizer torus is nonzero
inline bool incident(const Poly& eta_class, const OrbitRecord& v) {
    if (!positivity(v))
        throw std::invalid_argument("incident: target orbit " + v.name + " is not positive");
    return !restrict_class(v, eta_class).is_zero();
}

// ------------------------------------------------------- adjacency graph

struct AdjacencyGraph {
    struct Node {
        std::string name;
        int codim;
        std::optional<Rational> k; // k-invariant for the semistable members
        bool positive;
    };
    std::vector<Node> nodes;
    std::vector<std::pair<std::string, std::string>> edges;   // eta -> v, v in closure(eta)
    std::vector<std::pair<std::string, std::string>> flagged; // undetermined pairs

    bool has_edge(const std::string& a, const std::string& b) const {
        return std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end();
    }
};

// Assembles the orbit hierarchy: Thm 6.2 incidence for every positive target,
// the k-matching rule for edges into the semistable orbits D, D*, E, E*, and
// an explicit flag on the semistable pairs neither mechanism settles.
inline AdjacencyGraph build_hierarchy() {
    AdjacencyGraph g;
    const auto& classes = all_classes();

    struct Source {
        std::string name;
        int codim;
        Poly cls;
        std::optional<Rational> k;
        bool in_nullcone;
    };
    std::vector<Source> sources;
    // codimension-1 family nodes
    sources.push_back({"A", 1, class_Amu(Mu::finite), std::nullopt, false});
    sources.push_back({"B", 1, class_Amu(Mu::finite), Rational(1), false});
    sources.push_back({"B*", 1, class_Amu(Mu::finite), Rational(4), false});
    sources.push_back({"A_inf", 1, class_Amu(Mu::infinity), Rational(0), false});
    for (const auto& o : orbit_table()) {
        if (o.codim < 2 || o.name == "0") continue;
        auto st = stability(o.representative);
        std::optional<Rational> k;
        if (st.kind == StabilityResult::Kind::finite_k) k = st.k;
        sources.push_back({o.name, o.codim, classes.at(o.name), k,
                           st.kind == StabilityResult::Kind::nullcone});
    }

    std::map<std::string, bool> is_positive;
    for (const auto& o : orbit_table()) is_positive[o.name] = positivity(o).has_value();
    for (const auto& s : sources) {
        bool pos = is_positive.count(s.name) ? is_positive[s.name] : true;
        g.nodes.push_back({s.name, s.codim, s.k, pos});
    }
    g.nodes.push_back({"0", 18, std::nullopt, is_positive["0"]});

    for (const auto& s : sources) {
        for (const auto& o : orbit_table()) {
            if (o.codim <= s.codim) continue;
            if (is_positive[o.name]) {
                if (incident(s.cls, o)) g.edges.emplace_back(s.name, o.name);
            } else {
                // semistable target: k-matching from the 5.5 table
                auto st = stability(o.representative);
                if (s.name == "B" || s.name == "B*") {
                    if (s.k && st.kind == StabilityResult::Kind::finite_k && *s.k == st.k)
                        g.edges.emplace_back(s.name, o.name);
                } else if (s.name == "A" || s.name == "A_inf" || s.in_nullcone) {
                    // closures of nullcone orbits stay in the nullcone, and a
                    // generic / k=0 family member has the wrong k: no edge
                } else if (s.k && st.kind == StabilityResult::Kind::finite_k) {
                    if (*s.k == st.k)
                        g.flagged.emplace_back(s.name, o.name); // equal k: undetermined here
                }
            }
        }
    }
    return g;
}

// closure incidence must be transitive over the computed graph
inline bool graph_transitive(const AdjacencyGraph& g) {
    for (const auto& [a, b] : g.edges)
        for (const auto& [c, d] : g.edges)
            if (b == c && !g.has_edge(a, d)) return false;
    return true;
}

inline bool codim_increases_along_edges(const AdjacencyGraph& g) {
    std::map<std::string, int> codim;
    for (const auto& n : g.nodes) codim[n.name] = n.codim;
    for (const auto& [a, b] : g.edges)
        if (codim.at(a) >= codim.at(b)) return false;
    return true;
}

} // namespace noc

#endif
