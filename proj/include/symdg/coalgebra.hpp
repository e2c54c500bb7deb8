#pragma once

#include <functional>
#include <span>

#include "symdg/exterior.hpp"

namespace symdg {

// A letter of the word algebra: the suspension s(mono * dx_bits) of one basis
// form, with the rational coefficient folded out into the word coefficient.
// The suspended degree of s(a) is |a| - 1, so suspended 0-forms sit in
// degree -1.
struct Letter {
    Monomial mono;
    IndexBits bits;

    int suspended_degree() const { return wedge_degree(bits) - 1; }
    int parity() const { return suspended_degree() & 1; }

    friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
        if (auto c = wedge_degree(a.bits) <=> wedge_degree(b.bits); c != 0) return c;
        if (auto c = a.bits <=> b.bits; c != 0) return c;
        return a.mono <=> b.mono;
    }
    friend bool operator==(const Letter& a, const Letter& b) = default;
};

using Word = std::vector<Letter>;

inline int word_length(const Word& w) { return static_cast<int>(w.size()); }

inline int word_first_degree(const Word& w) {
    int d = 0;
    for (const auto& L : w) d += L.suspended_degree();
    return d;
}

// Sign rule of the wedge-word quotient: transposing adjacent letters of
// suspended degrees p, q multiplies by (-1)^{pq+1}. Hence a repeated letter
// of even suspended degree annihilates a word, while letters of odd
// suspended degree (suspended 0-forms, 2-forms, ...) may repeat.
inline int transposition_exponent(const Letter& a, const Letter& b) {
    return (a.parity() * b.parity() + 1) & 1;
}

// Sorts raw letters into the canonical order, accumulating the reordering
// sign into coeff. Returns false when the word is zero.
bool normalize_letters(Word& letters, Rational& coeff);

// Finite sum of canonical words with rational coefficients.
class WordSum {
public:
    explicit WordSum(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, Rational>& terms() const { return terms_; }

    // Adds a raw (not necessarily ordered) word.
    void add(Word letters, Rational coeff);

    WordSum operator+(const WordSum& o) const;
    WordSum operator-(const WordSum& o) const;
    WordSum scaled(const Rational& c) const;

    int max_length() const {
        int n = 0;
        for (const auto& [w, c] : terms_) n = std::max(n, word_length(w));
        return n;
    }

    friend bool operator==(const WordSum& a, const WordSum& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

private:
    int dim_;
    std::map<Word, Rational> terms_;
};

// normalize_word of the public surface: a single raw word as a WordSum.
// The empty word is outside the coalgebra (it has no counit).
WordSum normalize_word(int dim, const Word& letters, const Rational& coeff);

// Formal sum of Word (x) Word pairs.
class TensorSum {
public:
    explicit TensorSum(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<Word, Word>, Rational>& terms() const { return terms_; }

    void add(const Word& l, const Word& r, const Rational& c) {
        if (c == 0) return;
        auto key = std::make_pair(l, r);
        auto it = terms_.find(key);
        if (it == terms_.end()) terms_.emplace(std::move(key), c);
        else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend bool operator==(const TensorSum& a, const TensorSum& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

private:
    int dim_;
    std::map<std::pair<Word, Word>, Rational> terms_;
};

// Twisted sign of a permutation: perm lists original positions in output
// order; every inverted pair (a, b) contributes (-1)^{p_a p_b + 1}.
int twisted_permutation_sign(std::span<const int> perm, std::span<const Letter> letters);

// Comultiplication: nabla(a_1^...^a_n) = sum over (k, n-k) splits and
// shuffles with the sign (-1)^{sigma + k(n-k)}. Words of length 1 are
// primitive (the coalgebra has no counit).
TensorSum comultiplication(const WordSum& w);

// Sum of single letters: the value space of corestriction components.
using LetterSum = std::map<Letter, Rational>;

// One corestriction component f_k : words of length k -> letters. first_degree
// is the change of total suspended degree; the extension of a k-component
// changes word length by 1-k.
struct Component {
    int arity;
    int first_degree;
    std::function<LetterSum(std::span<const Letter>)> eval;
};

struct ComponentFamily {
    int dim;
    std::vector<Component> components;
};

// Coderivation determined by a component family via
//   F(a_1^...^a_n) = sum_{k<=n} sum_{sigma in S_n} (-1)^sigma
//                    1/(k!(n-k)!) f_k(a_{sigma(1)}^...) ^ a_{sigma(k+1)} ^ ...
// The k = n term is included so that F restricted to length-k words projects
// back to f_k.
class Coderivation {
public:
    explicit Coderivation(ComponentFamily fam) : fam_(std::move(fam)) {}

    const ComponentFamily& family() const { return fam_; }
    int dim() const { return fam_.dim; }

    WordSum apply(const WordSum& w) const;

    // Skewed variant: each bi-homogeneous piece D of first degree m acts as
    // (-1)^{m * length} D on a word.
    WordSum apply_bar(const WordSum& w) const;

    // True when every component has arity >= 2, so the operator strictly
    // lowers word length.
    bool strictly_lowers_length() const;

private:
    ComponentFamily fam_;
};

inline Coderivation extend_coderivation(ComponentFamily fam) {
    return Coderivation(std::move(fam));
}

// Commutator component of two single components (phi of arity k, psi of
// arity l); extends to the bigraded commutator of the two extensions.
Component component_commutator(int dim, const Component& phi, const Component& psi);

// Cup product of two components along the suspended multiplication
// s(a) . s(b) = s(a ^ b):
//   (phi u psi)(a_1 ^ ... ^ a_{k+l}) = 1/(k!l!) sum_sigma (-1)^{sigma'}
//       phi(...) . psi(...),
// sigma' = sigma + (|psi|+1) sum_{i<=k}|a_{sigma(i)}| + (k-1)(l-1) + |phi|.
Component cup_product(int dim, const Component& phi, const Component& psi);

// Bigraded commutator of two extended coderivations applied to w:
// C1 C2 - (-1)^{m1 m2 + s1 s2} C2 C1 for single-component coderivations of
// bidegrees (m_i, s_i = 1 - arity_i).
WordSum bigraded_commutator_apply(const Coderivation& c1, const Coderivation& c2,
                                  const WordSum& w);

std::string render_canonical(const WordSum& w);
std::string render_word(const Word& w);

}  // namespace symdg
