#pragma once

#include <map>
#include <stdexcept>

#include "symdg/monomial.hpp"
#include "symdg/rational.hpp"

namespace symdg {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Invariant: no stored zero coefficients; all monomials share the ambient
// dimension. Values are immutable in spirit: every operation returns a new
// polynomial.
class Polynomial {
public:
    explicit Polynomial(int dim) : dim_(dim) {
        if (dim <= 0) throw std::invalid_argument("Polynomial: dimension must be positive");
    }

    static Polynomial constant(int dim, const Rational& c) {
        Polynomial p(dim);
        p.add_term(Monomial(dim), c);
        return p;
    }

    static Polynomial coordinate(int dim, int i) {
        check_index(dim, i);
        Monomial m(dim);
        m.set_exp(i, 1);
        Polynomial p(dim);
        p.add_term(m, Rational(1));
        return p;
    }

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (m.dim() != dim_) throw DimensionMismatch("Polynomial: monomial dimension mismatch");
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial operator+(const Polynomial& o) const {
        check_dim(o);
        Polynomial r(*this);
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        check_dim(o);
        Polynomial r(dim_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.add_term(ma.times(mb), ca * cb);
        return r;
    }

    Polynomial scaled(const Rational& c) const {
        Polynomial r(dim_);
        if (c == 0) return r;
        for (const auto& [m, k] : terms_) r.add_term(m, k * c);
        return r;
    }

    // Partial derivative with respect to the i-th coordinate, 1 <= i <= dim.
    Polynomial derivative(int i) const {
        check_index(dim_, i);
        Polynomial r(dim_);
        for (const auto& [m, c] : terms_) {
            uint32_t e = m.exp(i);
            if (e == 0) continue;
            Monomial m2 = m;
            m2.set_exp(i, e - 1);
            r.add_term(m2, c * Rational(e));
        }
        return r;
    }

    // Substitute rational values for the coordinates.
    Rational eval(const std::vector<Rational>& point) const {
        if (static_cast<int>(point.size()) != dim_)
            throw DimensionMismatch("Polynomial::eval: point dimension mismatch");
        Rational total = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (int i = 1; i <= dim_; ++i)
                for (uint32_t k = 0; k < m.exp(i); ++k) t *= point[static_cast<size_t>(i - 1)];
            total += t;
        }
        return total;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

private:
    static void check_index(int dim, int i) {
        if (i < 1 || i > dim) throw std::out_of_range("Polynomial: coordinate index out of range");
    }
    void check_dim(const Polynomial& o) const {
        if (o.dim_ != dim_) throw DimensionMismatch("Polynomial: dimension mismatch");
    }

    int dim_;
    std::map<Monomial, Rational> terms_;
};

}  // namespace symdg
