#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "symdg/polynomial.hpp"

namespace symdg {

// Strictly increasing wedge index sets are stored as bitmasks: bit (i-1)
// stands for the coordinate i. Supports ambient dimensions up to 32.
using IndexBits = uint32_t;

inline int wedge_degree(IndexBits b) { return std::popcount(b); }

inline IndexBits bit_of(int i) { return IndexBits(1) << (i - 1); }

// Parity of the shuffle that sorts the concatenation of two disjoint sorted
// index sets I, J (I first). Counts pairs i in I, j in J with i > j.
inline int merge_sign(IndexBits I, IndexBits J) {
    int inversions = 0;
    for (int j = 0; J >> (j); ++j) {
        if (J & (IndexBits(1) << j)) inversions += std::popcount(I >> (j + 1));
    }
    return (inversions & 1) ? -1 : 1;
}

// Number of set bits of I strictly below coordinate i (1-based).
inline int bits_below(IndexBits I, int i) {
    return std::popcount(I & (bit_of(i) - 1));
}

inline std::vector<int> bits_to_indices(IndexBits b) {
    std::vector<int> v;
    for (int i = 1; b; ++i) {
        if (b & 1) v.push_back(i);
        b >>= 1;
    }
    return v;
}

struct TermKey {
    Monomial mono;
    IndexBits bits;

    friend std::strong_ordering operator<=>(const TermKey& a, const TermKey& b) {
        if (auto c = wedge_degree(a.bits) <=> wedge_degree(b.bits); c != 0) return c;
        if (auto c = a.bits <=> b.bits; c != 0) return c;
        return a.mono <=> b.mono;
    }
    friend bool operator==(const TermKey& a, const TermKey& b) = default;
};

enum class Basis { Form, Vector };

// Graded sum of basis wedge terms with polynomial coefficients. The same
// carrier houses differential forms (dx basis) and polyvector fields
// (coordinate vector basis); the tag keeps the two from mixing.
template <Basis B>
class GradedSum {
public:
    explicit GradedSum(int dim) : dim_(dim) {
        if (dim <= 0 || dim > 32)
            throw std::invalid_argument("GradedSum: dimension out of range");
    }

    static GradedSum zero(int dim) { return GradedSum(dim); }

    static GradedSum from_polynomial(const Polynomial& p) {
        GradedSum r(p.dim());
        for (const auto& [m, c] : p.terms()) r.add_term(m, 0, c);
        return r;
    }

    static GradedSum basis(int dim, IndexBits bits) {
        GradedSum r(dim);
        r.add_term(Monomial(dim), bits, Rational(1));
        return r;
    }

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<TermKey, Rational>& terms() const { return terms_; }

    void add_term(const Monomial& m, IndexBits bits, const Rational& c) {
        if (m.dim() != dim_) throw DimensionMismatch("GradedSum: monomial dimension mismatch");
        if (bits >> dim_) throw std::out_of_range("GradedSum: wedge index exceeds dimension");
        if (c == 0) return;
        TermKey k{m, bits};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(std::move(k), c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    GradedSum operator+(const GradedSum& o) const {
        check_dim(o);
        GradedSum r(*this);
        for (const auto& [k, c] : o.terms_) r.add_term(k.mono, k.bits, c);
        return r;
    }

    GradedSum operator-() const {
        GradedSum r(*this);
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }

    GradedSum operator-(const GradedSum& o) const { return *this + (-o); }

    GradedSum scaled(const Rational& c) const {
        GradedSum r(dim_);
        if (c == 0) return r;
        for (const auto& [k, v] : terms_) r.add_term(k.mono, k.bits, v * c);
        return r;
    }

    GradedSum scaled(const Polynomial& p) const {
        check_poly(p);
        GradedSum r(dim_);
        for (const auto& [m, c] : p.terms())
            for (const auto& [k, v] : terms_) r.add_term(k.mono.times(m), k.bits, v * c);
        return r;
    }

    // -1 when the element mixes several wedge degrees (or is zero).
    int pure_degree() const {
        int d = -1;
        for (const auto& [k, c] : terms_) {
            int kd = wedge_degree(k.bits);
            if (d == -1) d = kd;
            else if (d != kd) return -1;
        }
        return d;
    }

    int max_degree() const {
        int d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, wedge_degree(k.bits));
        return d;
    }

    GradedSum homogeneous_piece(int degree) const {
        GradedSum r(dim_);
        for (const auto& [k, c] : terms_)
            if (wedge_degree(k.bits) == degree) r.add_term(k.mono, k.bits, c);
        return r;
    }

    // Polynomial coefficient of a pure basis element.
    Polynomial coefficient(IndexBits bits) const {
        Polynomial p(dim_);
        for (const auto& [k, c] : terms_)
            if (k.bits == bits) p.add_term(k.mono, c);
        return p;
    }

    friend bool operator==(const GradedSum& a, const GradedSum& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

    void check_dim(const GradedSum& o) const {
        if (o.dim_ != dim_) throw DimensionMismatch("GradedSum: dimension mismatch");
    }
    void check_poly(const Polynomial& p) const {
        if (p.dim() != dim_) throw DimensionMismatch("GradedSum: polynomial dimension mismatch");
    }

private:
    int dim_;
    std::map<TermKey, Rational> terms_;
};

using DifferentialForm = GradedSum<Basis::Form>;
using Polyvector = GradedSum<Basis::Vector>;

template <Basis B>
GradedSum<B> wedge(const GradedSum<B>& a, const GradedSum<B>& b) {
    a.check_dim(b);
    GradedSum<B> r(a.dim());
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            if (ka.bits & kb.bits) continue;
            int s = merge_sign(ka.bits, kb.bits);
            r.add_term(ka.mono.times(kb.mono), ka.bits | kb.bits, ca * cb * s);
        }
    }
    return r;
}

DifferentialForm exterior_derivative(const DifferentialForm& w);

// Contraction of a form by a single coordinate vector with a polynomial
// coefficient.
DifferentialForm contract_basis_vector(int k, const DifferentialForm& w);

// Interior product P -| w. A decomposable k-vector contracts by iterating
// 1-vector contractions, first wedge factor first; degree underflow gives 0.
DifferentialForm interior_product(const Polyvector& P, const DifferentialForm& w);

// Cartan's magic formula; X must have pure degree 1.
DifferentialForm lie_derivative(const Polyvector& X, const DifferentialForm& w);

// Directional derivative X(f) of a function by a degree-1 field.
Polynomial apply_vector(const Polyvector& X, const Polynomial& f);

// Schouten bracket. Coincides with the commutator on vector fields and is
// extended as a bi-derivation; [X, f] = X(f) on functions.
Polyvector schouten_bracket(const Polyvector& P, const Polyvector& Q);

}  // namespace symdg
