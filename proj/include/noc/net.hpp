#ifndef NOC_NET_HPP
#define NOC_NET_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "noc/linsolve.hpp"
#include "noc/rational.hpp"

namespace noc {

// quadratic-form coefficient order fixed throughout: (x2, xy, xz, y2, yz, z2)
inline constexpr int kQuadMonomials = 6;
inline const std::array<std::string, 6> kQuadNames = {"x2", "xy", "xz", "y2", "yz", "z2"};
// exponent vectors over (x,y,z)
inline constexpr std::array<std::array<int, 3>, 6> kQuadExp = {
    {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}}};

// A net of conics: three ternary quadratic forms with exact coefficients,
// stored as a 3x6 matrix over the monomial basis above.
struct Net {
    std::array<std::array<Rational, 6>, 3> rows{};

    Net() = default;
    Net(std::array<Rational, 6> r0, std::array<Rational, 6> r1, std::array<Rational, 6> r2)
        : rows{r0, r1, r2} {}

    friend bool operator==(const Net& a, const Net& b) { return a.rows == b.rows; }
    friend bool operator!=(const Net& a, const Net& b) { return !(a == b); }

    Net scaled(const Rational& c) const {
        Net r = *this;
        for (auto& row : r.rows)
            for (auto& v : row) v *= c;
        return r;
    }
};

namespace detail {

// parses quadric strings like "y2+2xz", "-x2", "x2-xz", "0"
inline std::array<Rational, 6> parse_quadric(const std::string& s) {
    std::array<Rational, 6> out{};
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && s[i] == ' ') ++i; };
    skip_ws();
    if (s == "0" || s.empty()) return out;
    while (i < s.size()) {
        long sign = 1;
        skip_ws();
        if (s[i] == '+') { ++i; } else if (s[i] == '-') { sign = -1; ++i; }
        skip_ws();
        long coef = 1;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coef = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                coef = coef * 10 + (s[i++] - '0');
        }
        bool matched = false;
        for (int q = 0; q < kQuadMonomials; ++q) {
            const auto& nm = kQuadNames[q];
            if (s.compare(i, nm.size(), nm) == 0) {
                out[q] += Rational(sign * coef);
                i += nm.size();
                matched = true;
                break;
            }
        }
        if (!matched) throw std::invalid_argument("parse_quadric: bad term in '" + s + "'");
        skip_ws();
    }
    return out;
}

} // namespace detail

inline Net make_net(const std::string& q1, const std::string& q2, const std::string& q3) {
    return Net(detail::parse_quadric(q1), detail::parse_quadric(q2), detail::parse_quadric(q3));
}

// 3 - rank of the 3x6 coefficient matrix
inline int corank(const Net& n) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : n.rows) rows.emplace_back(r.begin(), r.end());
    return 3 - static_cast<int>(matrix_rank(rows, 6));
}

} // namespace noc

#endif
