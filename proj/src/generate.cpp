#include "symdg/generate.hpp"

namespace symdg {

Monomial Rng::monomial(int dim, int max_degree) {
    Monomial m(dim);
    int budget = uniform(0, max_degree);
    for (int t = 0; t < budget; ++t) {
        int i = uniform(1, dim);
        m.set_exp(i, m.exp(i) + 1);
    }
    return m;
}

Polynomial Rng::polynomial(int dim, int max_degree, int max_terms) {
    Polynomial p(dim);
    int terms = uniform(1, max_terms);
    for (int t = 0; t < terms; ++t) p.add_term(monomial(dim, max_degree), small_rational());
    return p;
}

DifferentialForm Rng::form(int dim, int degree, int max_poly_degree, int max_terms) {
    DifferentialForm w(dim);
    if (degree > dim) return w;
    int terms = uniform(1, max_terms);
    for (int t = 0; t < terms; ++t) {
        IndexBits bits = 0;
        while (wedge_degree(bits) < degree) bits |= bit_of(uniform(1, dim));
        w.add_term(monomial(dim, max_poly_degree), bits, small_rational());
    }
    return w;
}

DifferentialForm Rng::closed_form(int dim, int degree, int max_poly_degree) {
    if (degree == 0)
        return DifferentialForm::from_polynomial(Polynomial::constant(dim, small_rational()));
    DifferentialForm primitive = form(dim, degree - 1, max_poly_degree);
    DifferentialForm w = exterior_derivative(primitive);
    if (w.is_zero()) {
        // Fall back to a constant-coefficient basis form.
        IndexBits bits = 0;
        while (wedge_degree(bits) < degree) bits |= bit_of(uniform(1, dim));
        w.add_term(Monomial(dim), bits, small_rational());
    }
    return w;
}

Polyvector Rng::vector_field(int dim, int max_poly_degree, int max_terms) {
    Polyvector v(dim);
    int terms = uniform(1, max_terms);
    for (int t = 0; t < terms; ++t)
        v.add_term(monomial(dim, max_poly_degree), bit_of(uniform(1, dim)), small_rational());
    if (v.is_zero()) v.add_term(Monomial(dim), bit_of(1), Rational(1));
    return v;
}

Polyvector Rng::polyvector(int dim, int degree, int max_poly_degree, int max_terms) {
    Polyvector v(dim);
    if (degree > dim) return v;
    int terms = uniform(1, max_terms);
    for (int t = 0; t < terms; ++t) {
        IndexBits bits = 0;
        while (wedge_degree(bits) < degree) bits |= bit_of(uniform(1, dim));
        v.add_term(monomial(dim, max_poly_degree), bits, small_rational());
    }
    return v;
}

Letter Rng::letter(int dim, int max_form_degree, int max_poly_degree) {
    int degree = uniform(0, std::min(dim, max_form_degree));
    IndexBits bits = 0;
    while (wedge_degree(bits) < degree) bits |= bit_of(uniform(1, dim));
    return Letter{monomial(dim, max_poly_degree), bits};
}

WordSum Rng::word(int dim, int length, int max_form_degree, int max_poly_degree) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Word w;
        for (int i = 0; i < length; ++i) w.push_back(letter(dim, max_form_degree, max_poly_degree));
        WordSum s(dim);
        s.add(w, Rational(1));
        if (!s.is_zero()) return s;
    }
    // Letters of pairwise distinct degree-1 bits always survive.
    Word w;
    for (int i = 0; i < length; ++i) {
        Monomial m(dim);
        m.set_exp(uniform(1, dim), static_cast<uint32_t>(i + 1));
        w.push_back(Letter{m, 0});
    }
    WordSum s(dim);
    s.add(w, Rational(1));
    return s;
}

WordSum Rng::closed_word(int dim, int length, int max_form_degree) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Word w;
        for (int i = 0; i < length; ++i) {
            int degree = uniform(0, std::min(dim, max_form_degree));
            IndexBits bits = 0;
            while (wedge_degree(bits) < degree) bits |= bit_of(uniform(1, dim));
            // A monomial supported inside the wedge set keeps the form closed.
            Monomial m(dim);
            for (int j : bits_to_indices(bits))
                if (coin()) m.set_exp(j, static_cast<uint32_t>(uniform(1, 2)));
            w.push_back(Letter{m, bits});
        }
        WordSum s(dim);
        s.add(w, Rational(1));
        if (!s.is_zero()) return s;
    }
    Word w;
    for (int i = 0; i < length; ++i) w.push_back(Letter{Monomial(dim), 0});
    WordSum s(dim);
    s.add(w, Rational(1));
    return s;
}

}  // namespace symdg
