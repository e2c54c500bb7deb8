#pragma once

#include <random>

#include "symdg/coalgebra.hpp"

namespace symdg {

// Deterministic generator: all randomness in the library flows through one
// seeded mt19937_64, and no std distribution objects are used so identical
// seeds give identical streams on every platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t raw() { return eng_(); }

    int uniform(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(raw() % static_cast<uint64_t>(hi - lo + 1));
    }

    bool coin() { return (raw() & 1) != 0; }

    Rational small_rational() {
        static const int nums[] = {1, -1, 2, -2, 3, -3, 1, -1};
        Rational r(nums[raw() % 8]);
        if (raw() % 4 == 0) r /= 2;
        return r;
    }

    Monomial monomial(int dim, int max_degree);
    Polynomial polynomial(int dim, int max_degree, int max_terms = 3);

    // Homogeneous form of the given wedge degree.
    DifferentialForm form(int dim, int degree, int max_poly_degree, int max_terms = 3);

    // d of a random form, plus a constant when degree is 0; always closed.
    DifferentialForm closed_form(int dim, int degree, int max_poly_degree);

    Polyvector vector_field(int dim, int max_poly_degree, int max_terms = 2);
    Polyvector polyvector(int dim, int degree, int max_poly_degree, int max_terms = 3);

    Letter letter(int dim, int max_form_degree, int max_poly_degree);

    // Non-vanishing canonical word of exactly the requested length, letters
    // of form degree <= max_form_degree.
    WordSum word(int dim, int length, int max_form_degree, int max_poly_degree);

    // Word whose letters are all closed basis forms (monomial-free in the
    // nonzero degrees, or plain constants).
    WordSum closed_word(int dim, int length, int max_form_degree);

private:
    std::mt19937_64 eng_;
};

}  // namespace symdg
