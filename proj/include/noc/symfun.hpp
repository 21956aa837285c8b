#ifndef NOC_SYMFUN_HPP
#define NOC_SYMFUN_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "noc/linsolve.hpp"
#include "noc/poly.hpp"

namespace noc {

// ---------------------------------------------------------------- partitions

using Partition = std::vector<int>; // weakly decreasing, positive entries

inline void check_partition(const Partition& lam) {
    for (std::size_t i = 0; i < lam.size(); ++i) {
        if (lam[i] <= 0) throw std::invalid_argument("Partition: entries must be positive");
        if (i && lam[i] > lam[i - 1])
            throw std::invalid_argument("Partition: entries must be weakly decreasing");
    }
}

inline int partition_size(const Partition& lam) {
    return std::accumulate(lam.begin(), lam.end(), 0);
}

// printed as concatenated digits when all parts are < 10 ("544111"),
// parenthesized otherwise ("(10,4)")
inline std::string partition_str(const Partition& lam) {
    if (lam.empty()) return "()";
    bool digits = std::all_of(lam.begin(), lam.end(), [](int x) { return x < 10; });
    std::ostringstream os;
    if (digits) {
        for (int x : lam) os << x;
    } else {
        os << "(";
        for (std::size_t i = 0; i < lam.size(); ++i) os << (i ? "," : "") << lam[i];
        os << ")";
    }
    return os.str();
}

inline Partition parse_partition(const std::string& s) {
    Partition lam;
    if (s.empty() || s == "()") return lam;
    if (s.front() == '(') {
        if (s.back() != ')') throw std::invalid_argument("Partition: unbalanced parentheses");
        std::string body = s.substr(1, s.size() - 2);
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ',')) lam.push_back(std::stoi(tok));
    } else {
        for (char ch : s) {
            if (ch < '1' || ch > '9') throw std::invalid_argument("Partition: bad digit string");
            lam.push_back(ch - '0');
        }
    }
    check_partition(lam);
    return lam;
}

// all partitions of d with lambda_{p+1} <= m (the (m,p)-hook condition)
inline std::vector<Partition> hook_partitions(int d, int m, int p) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        int cap = std::min(rem, maxpart);
        if (static_cast<int>(cur.size()) >= p) cap = std::min(cap, m);
        for (int part = cap; part >= 1; --part) {
            cur.push_back(part);
            self(self, rem - part, part);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

// map Partition -> coefficient, all keys of equal size, no zero coefficients
struct SchurCombo {
    std::map<Partition, Rational, std::greater<Partition>> terms;

    void add(const Partition& lam, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms.find(lam);
        if (it == terms.end()) {
            terms.emplace(lam, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    bool operator==(const SchurCombo& o) const { return terms == o.terms; }
    bool operator!=(const SchurCombo& o) const { return !(*this == o); }

    SchurCombo operator*(const Rational& c) const {
        SchurCombo r;
        for (const auto& [lam, v] : terms) r.add(lam, v * c);
        return r;
    }

    std::string str() const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [lam, c] : terms) {
            Rational a = c;
            if (first) {
                if (a.sign() < 0) { os << "-"; a = -a; }
            } else {
                os << (a.sign() < 0 ? " - " : " + ");
                if (a.sign() < 0) a = -a;
            }
            if (a != Rational(1)) os << a.str() << "*";
            os << "D" << partition_str(lam);
            first = false;
        }
        return os.str();
    }
};

// ----------------------------------------------------------- quotient basis

// m source roots a1..am, p target roots b1..bp; the quotient Chern classes
// c_k are the degree-k parts of prod(1+b_j) / prod(1+a_i)
struct RootContext {
    int m, p;
    VarTablePtr roots; // a1..am, b1..bp, all weight 1
    VarTablePtr elems; // A1..Am weight i, B1..Bp weight j (elementary coords)

    RootContext(int m_, int p_) : m(m_), p(p_) {
        if (m < 1 || p < 1) throw std::invalid_argument("RootContext: need m,p >= 1");
        std::vector<std::pair<std::string, int>> rv, ev;
        for (int i = 1; i <= m; ++i) rv.emplace_back("a" + std::to_string(i), 1);
        for (int j = 1; j <= p; ++j) rv.emplace_back("b" + std::to_string(j), 1);
        for (int i = 1; i <= m; ++i) ev.emplace_back("A" + std::to_string(i), i);
        for (int j = 1; j <= p; ++j) ev.emplace_back("B" + std::to_string(j), j);
        roots = make_table(rv);
        elems = make_table(ev);
    }

    std::vector<Poly> alpha_roots() const {
        std::vector<Poly> v;
        for (int i = 0; i < m; ++i) v.push_back(Poly::var(roots, i));
        return v;
    }
    std::vector<Poly> beta_roots() const {
        std::vector<Poly> v;
        for (int j = 0; j < p; ++j) v.push_back(Poly::var(roots, m + j));
        return v;
    }
};

namespace detail {

// c_k over the elementary table: c_k = B_k - sum_{j>=1} A_j c_{k-j}
inline std::vector<Poly> chern_elems(const RootContext& ctx, int maxdeg) {
    std::vector<Poly> c;
    c.push_back(Poly::constant(ctx.elems, Rational(1)));
    for (int k = 1; k <= maxdeg; ++k) {
        Poly ck = k <= ctx.p ? Poly::var(ctx.elems, ctx.m + k - 1) : Poly::zero(ctx.elems);
        for (int j = 1; j <= std::min(k, ctx.m); ++j)
            ck -= Poly::var(ctx.elems, j - 1) * c[k - j];
        c.push_back(ck);
    }
    return c;
}

// polynomial in the abstract variables c_1, c_2, ...: multiset of indices
// (sorted descending, index 0 omitted) -> coefficient
using CPoly = std::map<std::vector<int>, Rational>;

// Jacobi-Trudi determinant det(c_{lambda_i + j - i}) as a CPoly, by
// column-major expansion over row subsets; c_k = 0 for k < 0
inline CPoly jacobi_trudi_cpoly(const Partition& lam) {
    check_partition(lam);
    const int r = static_cast<int>(lam.size());
    if (r == 0) return {{{}, Rational(1)}};
    const int d = partition_size(lam);
    std::map<std::uint32_t, CPoly> dp;
    dp[0] = {{{}, Rational(1)}};
    for (int j = 0; j < r; ++j) {
        std::map<std::uint32_t, CPoly> ndp;
        for (const auto& [mask, val] : dp) {
            for (int i = 0; i < r; ++i) {
                if (mask & (1u << i)) continue;
                int k = lam[i] + j - i;
                if (k < 0 || k > d) continue;
                // sign: position of i among rows of mask|{i}, plus column parity
                int idx = 0;
                for (int t = 0; t < i; ++t)
                    if (mask & (1u << t)) ++idx;
                bool neg = ((idx + j) % 2) != 0;
                std::uint32_t nmask = mask | (1u << i);
                CPoly& dst = ndp[nmask];
                for (const auto& [mon, coef] : val) {
                    int deg = k;
                    for (int e : mon) deg += e;
                    if (deg > d) continue;
                    std::vector<int> nm = mon;
                    if (k > 0) {
                        nm.insert(std::upper_bound(nm.begin(), nm.end(), k, std::greater<int>()), k);
                    }
                    Rational add = neg ? -coef : coef;
                    auto it = dst.find(nm);
                    if (it == dst.end()) {
                        dst.emplace(std::move(nm), add);
                    } else {
                        it->second += add;
                        if (it->second.is_zero()) dst.erase(it);
                    }
                }
            }
        }
        dp = std::move(ndp);
    }
    return dp[(r >= 32 ? 0xffffffffu : ((1u << r) - 1u))];
}

// evaluates CPoly given the c_k in some polynomial ring, caching products of
// the c's keyed by index multiset
class CProductCache {
  public:
    CProductCache(const std::vector<Poly>& cks, VarTablePtr table)
        : cks_(cks), one_(Poly::constant(table, Rational(1))) {}

    const Poly& product(const std::vector<int>& mon) {
        auto it = cache_.find(mon);
        if (it != cache_.end()) return it->second;
        Poly val = one_;
        if (!mon.empty()) {
            std::vector<int> parent(mon.begin(), mon.end() - 1);
            int k = mon.back();
            if (k >= static_cast<int>(cks_.size()))
                throw std::invalid_argument("CProductCache: c index beyond truncation");
            val = product(parent) * cks_[k];
        }
        return cache_.emplace(mon, std::move(val)).first->second;
    }

    Poly eval(const CPoly& cp) {
        Poly acc = one_ * Rational(0);
        for (const auto& [mon, coef] : cp) acc += product(mon) * coef;
        return acc;
    }

  private:
    const std::vector<Poly>& cks_;
    Poly one_;
    std::map<std::vector<int>, Poly> cache_;
};

// expands monomials in the elementary coordinates back into root variables
class ElementaryExpander {
  public:
    explicit ElementaryExpander(const RootContext& ctx) : ctx_(ctx) {
        for (int i = 1; i <= ctx.m; ++i) elem_polys_.push_back(elem_sym(i, ctx.alpha_roots()));
        for (int j = 1; j <= ctx.p; ++j) elem_polys_.push_back(elem_sym(j, ctx.beta_roots()));
        cache_[Exp(ctx.m + ctx.p, 0)] = Poly::constant(ctx.roots, Rational(1));
    }

    const Poly& expand(const Exp& e) {
        auto it = cache_.find(e);
        if (it != cache_.end()) return it->second;
        Exp parent = e;
        std::size_t i = 0;
        while (parent[i] == 0) ++i;
        --parent[i];
        Poly val = expand(parent) * elem_polys_[i];
        return cache_.emplace(e, std::move(val)).first->second;
    }

    Poly expand_poly(const Poly& p_elems) {
        Poly acc = Poly::zero(ctx_.roots);
        for (const auto& [e, c] : p_elems.terms()) acc += expand(e) * c;
        return acc;
    }

  private:
    const RootContext& ctx_;
    std::vector<Poly> elem_polys_;
    std::map<Exp, Poly> cache_;
};

} // namespace detail

// ------------------------------------------------------------- public ops

// degree-k quotient Chern class as a polynomial in the roots
inline Poly quotient_chern(const RootContext& ctx, int k) {
    if (k < 0) throw std::invalid_argument("quotient_chern: k must be >= 0");
    auto ce = detail::chern_elems(ctx, k);
    detail::ElementaryExpander ex(ctx);
    return ex.expand_poly(ce[k]);
}

// Schur polynomial Delta_lambda = det(c_{lambda_i+j-i}) in root variables
inline Poly schur(const RootContext& ctx, const Partition& lam) {
    auto cp = detail::jacobi_trudi_cpoly(lam);
    int d = partition_size(lam);
    auto ce = detail::chern_elems(ctx, d);
    detail::CProductCache cache(ce, ctx.elems);
    detail::ElementaryExpander ex(ctx);
    return ex.expand_poly(cache.eval(cp));
}

// rewrites a polynomial symmetric in the alpha's and in the beta's over the
// elementary coordinates A_i = e_i(alpha), B_j = e_j(beta); rejects
// non-symmetric input (detected by a non-sorted leading exponent)
inline Poly symmetric_to_elementary(const RootContext& ctx, const Poly& p) {
    if (!same_table(p.table(), ctx.roots))
        throw std::invalid_argument("symmetric_to_elementary: wrong table");
    detail::ElementaryExpander ex(ctx);
    Poly rem = p;
    Poly out = Poly::zero(ctx.elems);
    while (!rem.is_zero()) {
        const auto& [e, c] = *rem.terms().begin();
        for (int i = 1; i < ctx.m; ++i)
            if (e[i - 1] < e[i])
                throw std::invalid_argument("symmetric_to_elementary: not symmetric in the alphas");
        for (int j = 1; j < ctx.p; ++j)
            if (e[ctx.m + j - 1] < e[ctx.m + j])
                throw std::invalid_argument("symmetric_to_elementary: not symmetric in the betas");
        Exp f(ctx.m + ctx.p, 0);
        for (int i = 0; i < ctx.m; ++i)
            f[i] = e[i] - (i + 1 < ctx.m ? e[i + 1] : 0);
        for (int j = 0; j < ctx.p; ++j)
            f[ctx.m + j] = e[ctx.m + j] - (j + 1 < ctx.p ? e[ctx.m + j + 1] : 0);
        Rational coef = c;
        out.add_term(f, coef);
        rem -= ex.expand(f) * coef;
    }
    return out;
}

struct SchurExpandError : std::runtime_error {
    explicit SchurExpandError(const std::string& what) : std::runtime_error(what) {}
};

// expands p (homogeneous, bi-symmetric, in root variables) over the Schur
// polynomials Delta_lambda with |lambda| = deg p and lambda_{p+1} <= m; exact
// linear solve by monomial matching in elementary coordinates, with the
// independence of the candidate set asserted
inline SchurCombo schur_expand(const Poly& p, const RootContext& ctx) {
    if (p.is_zero()) return {};
    auto wd = p.weighted_degree();
    if (!wd) throw SchurExpandError("schur_expand: input not homogeneous");
    const int d = static_cast<int>(*wd);
    Poly p_ab = symmetric_to_elementary(ctx, p);

    const std::vector<Partition> cands = hook_partitions(d, ctx.m, ctx.p);
    const std::size_t n = cands.size();
    auto ce = detail::chern_elems(ctx, d);
    detail::CProductCache cache(ce, ctx.elems);
    std::vector<Poly> deltas;
    deltas.reserve(n);
    for (const auto& lam : cands) deltas.push_back(cache.eval(detail::jacobi_trudi_cpoly(lam)));

    // all elementary monomials that can appear
    std::map<Exp, std::size_t, GradedLexFirst> monomials;
    auto note = [&](const Poly& q) {
        for (const auto& [e, c] : q.terms()) monomials.emplace(e, monomials.size());
    };
    for (const auto& dl : deltas) note(dl);
    note(p_ab);

    RowReducer red(n);
    bool solved = false;
    std::vector<Rational> x;
    for (const auto& [e, idx] : monomials) {
        std::vector<Rational> row(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            auto it = deltas[i].terms().find(e);
            if (it != deltas[i].terms().end()) row[i] = it->second;
        }
        Rational rhs(0);
        if (auto it = p_ab.terms().find(e); it != p_ab.terms().end()) rhs = it->second;
        red.add_row(std::move(row), rhs);
        if (red.inconsistent()) throw SchurExpandError("schur_expand: not in the span");
        if (red.full_rank()) {
            x = *red.solve_unique();
            solved = true;
            break;
        }
    }
    if (!solved) {
        std::ostringstream os;
        os << "schur_expand: basis degenerate (kernel dimension " << red.nullity() << ")";
        throw SchurExpandError(os.str());
    }
    // exact verification covers every monomial equation not fed above
    Poly residual = p_ab;
    for (std::size_t i = 0; i < n; ++i)
        if (!x[i].is_zero()) residual -= deltas[i] * x[i];
    if (!residual.is_zero()) throw SchurExpandError("schur_expand: not in the span");

    SchurCombo out;
    for (std::size_t i = 0; i < n; ++i) out.add(cands[i], x[i]);
    return out;
}

// evaluate a SchurCombo back to a root polynomial
inline Poly schur_combo_eval(const RootContext& ctx, const SchurCombo& sc, int degree) {
    auto ce = detail::chern_elems(ctx, degree);
    detail::CProductCache cache(ce, ctx.elems);
    Poly acc = Poly::zero(ctx.elems);
    for (const auto& [lam, c] : sc.terms)
        acc += cache.eval(detail::jacobi_trudi_cpoly(lam)) * c;
    detail::ElementaryExpander ex(ctx);
    return ex.expand_poly(acc);
}

} // namespace noc

#endif
