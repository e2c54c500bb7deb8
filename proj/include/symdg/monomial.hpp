#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace symdg {

// A power product x1^e1 ... xn^en on a fixed ambient dimension n.
// Coordinates are 1-based throughout the library.
class Monomial {
public:
    explicit Monomial(int dim) : exps_(static_cast<size_t>(dim), 0u) {
        if (dim <= 0) throw std::invalid_argument("Monomial: dimension must be positive");
    }

    int dim() const { return static_cast<int>(exps_.size()); }

    uint32_t exp(int i) const { return exps_.at(static_cast<size_t>(i - 1)); }

    void set_exp(int i, uint32_t e) { exps_.at(static_cast<size_t>(i - 1)) = e; }

    int total_degree() const {
        return static_cast<int>(std::accumulate(exps_.begin(), exps_.end(), 0u));
    }

    bool is_unit() const { return total_degree() == 0; }

    Monomial times(const Monomial& o) const {
        Monomial r(*this);
        for (size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
        return r;
    }

    // Graded-lexicographic order: total degree first, then exponent vector.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
        return a.exps_ <=> b.exps_;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) = default;

    const std::vector<uint32_t>& exponents() const { return exps_; }

private:
    std::vector<uint32_t> exps_;
};

}  // namespace symdg
