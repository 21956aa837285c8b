#ifndef NOC_VARTABLE_HPP
#define NOC_VARTABLE_HPP

#include <initializer_list>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace noc {

// Ordered list of named variables with positive integer weights (grading).
// Tables are immutable and shared; polynomials hold a pointer to theirs.
class VarTable {
  public:
    VarTable(std::vector<std::string> names, std::vector<int> weights)
        : names_(std::move(names)), weights_(std::move(weights)) {
        if (names_.size() != weights_.size())
            throw std::invalid_argument("VarTable: names/weights size mismatch");
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (weights_[i] < 1) throw std::invalid_argument("VarTable: weight must be >= 1");
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw std::invalid_argument("VarTable: duplicate variable " + names_[i]);
        }
    }

    std::size_t arity() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    int weight(std::size_t i) const { return weights_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    std::size_t index_of(const std::string& n) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == n) return i;
        throw std::invalid_argument("VarTable: unknown variable " + n);
    }
    bool has(const std::string& n) const {
        for (const auto& s : names_)
            if (s == n) return true;
        return false;
    }

    friend bool operator==(const VarTable& a, const VarTable& b) {
        return a.names_ == b.names_ && a.weights_ == b.weights_;
    }
    friend bool operator!=(const VarTable& a, const VarTable& b) { return !(a == b); }

  private:
    std::vector<std::string> names_;
    std::vector<int> weights_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

inline VarTablePtr make_table(std::initializer_list<std::pair<std::string, int>> vars) {
    std::vector<std::string> n;
    std::vector<int> w;
    for (const auto& [name, weight] : vars) {
        n.push_back(name);
        w.push_back(weight);
    }
    return std::make_shared<const VarTable>(std::move(n), std::move(w));
}

inline VarTablePtr make_table(const std::vector<std::pair<std::string, int>>& vars) {
    std::vector<std::string> n;
    std::vector<int> w;
    for (const auto& [name, weight] : vars) {
        n.push_back(name);
        w.push_back(weight);
    }
    return std::make_shared<const VarTable>(std::move(n), std::move(w));
}

inline bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
    return a == b || (a && b && *a == *b);
}

} // namespace noc

#endif
