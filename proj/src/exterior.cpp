#include "symdg/exterior.hpp"

namespace symdg {

DifferentialForm exterior_derivative(const DifferentialForm& w) {
    DifferentialForm r(w.dim());
    for (const auto& [k, c] : w.terms()) {
        for (int i = 1; i <= w.dim(); ++i) {
            uint32_t e = k.mono.exp(i);
            if (e == 0) continue;
            if (k.bits & bit_of(i)) continue;
            Monomial m2 = k.mono;
            m2.set_exp(i, e - 1);
            int s = (bits_below(k.bits, i) & 1) ? -1 : 1;  // sort dx_i into dx_I
            r.add_term(m2, k.bits | bit_of(i), c * Rational(e) * s);
        }
    }
    return r;
}

DifferentialForm contract_basis_vector(int k, const DifferentialForm& w) {
    DifferentialForm r(w.dim());
    for (const auto& [key, c] : w.terms()) {
        if (!(key.bits & bit_of(k))) continue;
        int s = (bits_below(key.bits, k) & 1) ? -1 : 1;
        r.add_term(key.mono, key.bits & ~bit_of(k), c * s);
    }
    return r;
}

DifferentialForm interior_product(const Polyvector& P, const DifferentialForm& w) {
    if (P.dim() != w.dim()) throw DimensionMismatch("interior_product: dimension mismatch");
    DifferentialForm r(w.dim());
    for (const auto& [pk, pc] : P.terms()) {
        DifferentialForm cur = w;
        for (int i : bits_to_indices(pk.bits)) cur = contract_basis_vector(i, cur);
        DifferentialForm scaled = cur.scaled(pc);
        for (const auto& [k, c] : scaled.terms()) r.add_term(k.mono.times(pk.mono), k.bits, c);
    }
    return r;
}

DifferentialForm lie_derivative(const Polyvector& X, const DifferentialForm& w) {
    if (!X.is_zero() && X.pure_degree() != 1)
        throw std::invalid_argument("lie_derivative: field must have pure degree 1");
    return exterior_derivative(interior_product(X, w)) +
           interior_product(X, exterior_derivative(w));
}

Polynomial apply_vector(const Polyvector& X, const Polynomial& f) {
    if (!X.is_zero() && X.pure_degree() != 1)
        throw std::invalid_argument("apply_vector: field must have pure degree 1");
    if (X.dim() != f.dim()) throw DimensionMismatch("apply_vector: dimension mismatch");
    Polynomial r(f.dim());
    for (const auto& [k, c] : X.terms()) {
        int i = bits_to_indices(k.bits).front();
        Polynomial piece = f.derivative(i).scaled(c);
        for (const auto& [m, v] : piece.terms()) r.add_term(m.times(k.mono), v);
    }
    return r;
}

namespace {

// Left derivative by the odd coordinate basis direction k: kills terms not
// containing k, otherwise removes it with the sign of moving it to the front.
Polyvector odd_derivative(int k, const Polyvector& P) {
    Polyvector r(P.dim());
    for (const auto& [key, c] : P.terms()) {
        if (!(key.bits & bit_of(k))) continue;
        int s = (bits_below(key.bits, k) & 1) ? -1 : 1;
        r.add_term(key.mono, key.bits & ~bit_of(k), c * s);
    }
    return r;
}

Polyvector poly_derivative(int k, const Polyvector& P) {
    Polyvector r(P.dim());
    for (const auto& [key, c] : P.terms()) {
        uint32_t e = key.mono.exp(k);
        if (e == 0) continue;
        Monomial m2 = key.mono;
        m2.set_exp(k, e - 1);
        r.add_term(m2, key.bits, c * Rational(e));
    }
    return r;
}

}  // namespace

Polyvector schouten_bracket(const Polyvector& P, const Polyvector& Q) {
    P.check_dim(Q);
    const int n = P.dim();
    Polyvector r(n);
    // Bilinear over homogeneous term pairs; the odd-coordinate presentation
    //   [P,Q] = (-1)^{p-1} sum_k dP/dtheta_k ^ dQ/dx_k
    //         + (-1)^{(p-1)(q-1)+q} sum_k dQ/dtheta_k ^ dP/dx_k,
    // calibrated so that the Leibniz rule reads
    //   [P, Q^R] = [P,Q]^R + (-1)^{(p-1)q} Q^[P,R].
    for (const auto& [ka, ca] : P.terms()) {
        Polyvector a(n);
        a.add_term(ka.mono, ka.bits, ca);
        long long p = wedge_degree(ka.bits);
        for (const auto& [kb, cb] : Q.terms()) {
            Polyvector b(n);
            b.add_term(kb.mono, kb.bits, cb);
            long long q = wedge_degree(kb.bits);
            int s1 = parity_sign(p - 1);
            int s2 = parity_sign((p - 1) * (q - 1) + q);
            for (int k = 1; k <= n; ++k) {
                r = r + wedge(odd_derivative(k, a), poly_derivative(k, b)).scaled(Rational(s1));
                r = r + wedge(odd_derivative(k, b), poly_derivative(k, a)).scaled(Rational(s2));
            }
        }
    }
    return r;
}

}  // namespace symdg
