#ifndef NOC_POLY_HPP
#define NOC_POLY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "noc/rational.hpp"
#include "noc/vartable.hpp"

namespace noc {

using Exp = std::vector<unsigned>;

// graded-lex, leading term first: higher total degree first, ties broken
// lexicographically (earlier variable wins)
struct GradedLexFirst {
    bool operator()(const Exp& a, const Exp& b) const {
        unsigned da = 0, db = 0;
        for (unsigned e : a) da += e;
        for (unsigned e : b) db += e;
        if (da != db) return da > db;
        return a > b;
    }
};

struct not_divisible : std::runtime_error {
    not_divisible() : std::runtime_error("polynomial division is not exact") {}
};

// Sparse multivariate polynomial over Rational, dense exponent vectors over a
// declared variable table. No zero coefficients are ever stored.
class Poly {
  public:
    using TermMap = std::map<Exp, Rational, GradedLexFirst>;

    Poly() = default;
    explicit Poly(VarTablePtr vt) : vt_(std::move(vt)) {}

    static Poly zero(VarTablePtr vt) { return Poly(std::move(vt)); }
    static Poly constant(VarTablePtr vt, const Rational& c) {
        Poly p(std::move(vt));
        if (!c.is_zero()) p.terms_[Exp(p.vt_->arity(), 0)] = c;
        return p;
    }
    static Poly var(VarTablePtr vt, std::size_t i, const Rational& c = Rational(1)) {
        Poly p(std::move(vt));
        if (i >= p.vt_->arity()) throw std::invalid_argument("Poly::var: index out of range");
        if (!c.is_zero()) {
            Exp e(p.vt_->arity(), 0);
            e[i] = 1;
            p.terms_[e] = c;
        }
        return p;
    }
    static Poly var(const VarTablePtr& vt, const std::string& name, const Rational& c = Rational(1)) {
        return var(vt, vt->index_of(name), c);
    }
    static Poly term(VarTablePtr vt, const Exp& e, const Rational& c) {
        Poly p(std::move(vt));
        if (e.size() != p.vt_->arity()) throw std::invalid_argument("Poly::term: bad exponent arity");
        if (!c.is_zero()) p.terms_[e] = c;
        return p;
    }

    const VarTablePtr& table() const { return vt_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        const Exp& e = terms_.begin()->first;
        return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
    }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::invalid_argument("Poly: not a constant");
        return terms_.begin()->second;
    }

    void add_term(const Exp& e, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        check_table(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_table(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return a * Rational(-1); }

    friend Poly operator*(const Poly& a, const Rational& c) {
        Poly r(a.vt_);
        if (c.is_zero()) return r;
        for (const auto& [e, v] : a.terms_) r.terms_[e] = v * c;
        return r;
    }
    friend Poly operator*(const Rational& c, const Poly& a) { return a * c; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_table(b);
        Poly r(a.vt_);
        if (a.terms_.empty() || b.terms_.empty()) return r;
        const Poly& small = a.terms_.size() <= b.terms_.size() ? a : b;
        const Poly& big = a.terms_.size() <= b.terms_.size() ? b : a;
        Exp e(a.vt_ ? a.vt_->arity() : 0, 0);
        for (const auto& [es, cs] : small.terms_) {
            for (const auto& [eb, cb] : big.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = es[i] + eb[i];
                r.add_term(e, cs * cb);
            }
        }
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly pow(unsigned k) const {
        Poly r = Poly::constant(vt_, Rational(1));
        Poly base = *this;
        while (k) {
            if (k & 1u) r = r * base;
            base = k > 1 ? base * base : base;
            k >>= 1u;
        }
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return same_table(a.vt_, b.vt_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // total (unweighted) degree; -1 for the zero polynomial
    long degree() const {
        long d = -1;
        for (const auto& [e, c] : terms_) {
            long t = 0;
            for (unsigned x : e) t += x;
            d = std::max(d, t);
        }
        return d;
    }

    long weighted_term_degree(const Exp& e) const {
        long d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<long>(e[i]) * vt_->weight(i);
        return d;
    }

    // d if every monomial has weighted degree d, nullopt if inhomogeneous;
    // the zero polynomial reports degree 0
    std::optional<long> weighted_degree() const {
        if (terms_.empty()) return 0;
        std::optional<long> d;
        for (const auto& [e, c] : terms_) {
            long t = weighted_term_degree(e);
            if (!d)
                d = t;
            else if (*d != t)
                return std::nullopt;
        }
        return d;
    }

    // substitute variable i -> images[i]; all images over one common table
    Poly substitute(const std::vector<Poly>& images) const {
        if (images.size() != vt_->arity())
            throw std::invalid_argument("Poly::substitute: need an image for every variable");
        VarTablePtr target = images.empty() ? vt_ : images[0].table();
        for (const auto& im : images)
            if (!same_table(im.table(), target))
                throw std::invalid_argument("Poly::substitute: images over mismatched tables");
        Poly r(target);
        // per-variable power cache
        std::vector<std::vector<Poly>> pows(images.size());
        auto power = [&](std::size_t i, unsigned k) -> const Poly& {
            auto& cache = pows[i];
            if (cache.empty()) cache.push_back(Poly::constant(target, Rational(1)));
            while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
            return cache[k];
        };
        for (const auto& [e, c] : terms_) {
            Poly t = Poly::constant(target, c);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i]) t = t * power(i, e[i]);
            r += t;
        }
        return r;
    }

    Poly substitute(const std::map<std::string, Poly>& images) const {
        std::vector<Poly> v;
        v.reserve(vt_->arity());
        for (std::size_t i = 0; i < vt_->arity(); ++i) {
            auto it = images.find(vt_->name(i));
            if (it == images.end())
                throw std::invalid_argument("Poly::substitute: no image for " + vt_->name(i));
            v.push_back(it->second);
        }
        return substitute(v);
    }

    Rational eval(const std::vector<Rational>& vals) const {
        if (vals.size() != vt_->arity())
            throw std::invalid_argument("Poly::eval: need a value for every variable");
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (unsigned k = 0; k < e[i]; ++k) t *= vals[i];
            acc += t;
        }
        return acc;
    }

    // exact division; throws not_divisible if the remainder is nonzero
    friend Poly divide_exact(const Poly& a, const Poly& b) {
        auto q = try_divide(a, b);
        if (!q) throw not_divisible();
        return std::move(*q);
    }

    friend std::optional<Poly> try_divide(const Poly& a, const Poly& b) {
        a.check_table(b);
        if (b.terms_.empty()) throw std::invalid_argument("Poly: division by zero polynomial");
        Poly rem = a, quo(a.vt_);
        const auto& [eb, cb] = *b.terms_.begin();
        while (!rem.terms_.empty()) {
            const auto& [er, cr] = *rem.terms_.begin();
            Exp eq(er.size());
            for (std::size_t i = 0; i < er.size(); ++i) {
                if (er[i] < eb[i]) return std::nullopt;
                eq[i] = er[i] - eb[i];
            }
            Rational cq = cr / cb;
            quo.add_term(eq, cq);
            // rem -= (cq * x^eq) * b
            Exp e(er.size());
            for (const auto& [e2, c2] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = eq[i] + e2[i];
                rem.add_term(e, -(cq * c2));
            }
        }
        return quo;
    }

    // canonical string: graded-lex order, explicit '*' and '^'
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a.sign() < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a.sign() < 0 ? " - " : " + ");
                if (a.sign() < 0) a = -a;
            }
            bool any_var = std::any_of(e.begin(), e.end(), [](unsigned x) { return x > 0; });
            bool need_coeff = !any_var || a != Rational(1);
            if (need_coeff) os << a.str();
            bool need_star = need_coeff;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (!e[i]) continue;
                if (need_star) os << "*";
                os << vt_->name(i);
                if (e[i] > 1) os << "^" << e[i];
                need_star = true;
            }
            first = false;
        }
        return os.str();
    }

    // gcd of coefficient numerators / lcm of denominators; (0,1)-normalized
    // so that dividing by it leaves integer, content-free coefficients
    Rational coefficient_content() const {
        if (terms_.empty()) return Rational(1);
        mpz_class g = 0, l = 1;
        for (const auto& [e, c] : terms_) {
            mpz_class n = c.num(), d = c.den();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        mpq_class q(g, l);
        q.canonicalize();
        return Rational(q);
    }

    Rational leading_coefficient() const {
        if (terms_.empty()) return Rational(0);
        return terms_.begin()->second;
    }

  private:
    void check_table(const Poly& o) const {
        if (!same_table(vt_, o.vt_))
            throw std::invalid_argument("Poly: variable table mismatch");
    }

    VarTablePtr vt_;
    TermMap terms_;
};

enum class PolyOp { add, sub, mul };

inline Poly poly_arith(const Poly& a, const Poly& b, PolyOp op) {
    switch (op) {
        case PolyOp::add: return a + b;
        case PolyOp::sub: return a - b;
        case PolyOp::mul: return a * b;
    }
    throw std::invalid_argument("poly_arith: bad op");
}

// elementary symmetric polynomial sigma_i of the given values
inline Poly elem_sym(std::size_t i, const std::vector<Poly>& vals) {
    if (vals.empty()) throw std::invalid_argument("elem_sym: no values");
    if (i > vals.size()) throw std::invalid_argument("elem_sym: index out of range");
    VarTablePtr vt = vals[0].table();
    std::vector<Poly> sig(vals.size() + 1, Poly::zero(vt));
    sig[0] = Poly::constant(vt, Rational(1));
    for (const auto& v : vals)
        for (std::size_t k = vals.size(); k >= 1; --k) sig[k] += sig[k - 1] * v;
    return sig[i];
}

} // namespace noc

#endif
