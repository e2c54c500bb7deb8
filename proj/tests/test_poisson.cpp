#include <doctest.h>

#include "helpers.hpp"
#include "symdg/generate.hpp"

using namespace symdg;
using th::F;
using th::P;
using th::V;

TEST_CASE("fixtures load and certify") {
    auto r2 = th::load("r2_symplectic.json");
    auto r4 = th::load("r4_symplectic.json");
    auto so3 = th::load("so3_star.json");
    auto quad = th::load("quadratic.json");
    auto bad = th::load("nonpoisson.json");
    CHECK(r2->is_poisson());
    CHECK(r4->is_poisson());
    CHECK(so3->is_poisson());
    CHECK(quad->is_poisson());
    CHECK_FALSE(bad->is_poisson());
    // The non-Poisson witness is an explicit trivector.
    CHECK(bad->schouten_square() == V(3, "-2x1 @1^@2^@3"));
}

TEST_CASE("structure file: index order and validation") {
    auto S = poisson_from_json_text(
        R"({"dim":2,"bivector":[{"i":2,"j":1,"c":"1"}]})");
    CHECK(S.bivector() == V(2, "-1 @1^@2"));
    CHECK_THROWS(poisson_from_json_text(R"({"dim":2})"));
    CHECK_THROWS(poisson_from_json_text(R"({"dim":2,"bivector":[{"i":1,"j":5,"c":"1"}]})"));
    CHECK_THROWS_AS(PoissonStructure(2, V(2, "@1")), std::invalid_argument);
}

TEST_CASE("function bracket: frozen examples and the chain-rule oracle") {
    auto r2 = th::load("r2_symplectic.json");
    auto so3 = th::load("so3_star.json");
    CHECK(function_bracket(*r2, P(2, "x1"), P(2, "x2")) == P(2, "1"));
    CHECK(function_bracket(*so3, P(3, "x1"), P(3, "x2")) == P(3, "x3"));
    CHECK(function_bracket(*r2, P(2, "x1^2"), P(2, "x2")) == P(2, "2x1"));

    // Chain-rule oracle {f,g} = sum pi_ij (d_i f d_j g - d_j f d_i g),
    // written out with explicit loops against pairing_coeff.
    Rng rng(61);
    for (int t = 0; t < 30; ++t) {
        Polynomial f = rng.polynomial(3, 3), g = rng.polynomial(3, 3);
        Polynomial want(3);
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j)
                want = want +
                       so3->pairing_coeff(i, j) * (f.derivative(i) * g.derivative(j) -
                                                   f.derivative(j) * g.derivative(i));
        CHECK(function_bracket(*so3, f, g) == want);
    }
}

TEST_CASE("function bracket: antisymmetry, Leibniz, Jacobi on Poisson fixtures") {
    Rng rng(67);
    for (const char* name : {"so3_star.json", "quadratic.json", "r4_symplectic.json"}) {
        auto S = th::load(name);
        int n = S->dim();
        for (int t = 0; t < 15; ++t) {
            Polynomial f = rng.polynomial(n, 2), g = rng.polynomial(n, 2),
                       h = rng.polynomial(n, 2);
            CHECK(function_bracket(*S, f, g) == -function_bracket(*S, g, f));
            CHECK(function_bracket(*S, f, g * h) ==
                  function_bracket(*S, f, g) * h + g * function_bracket(*S, f, h));
            Polynomial jac = function_bracket(*S, f, function_bracket(*S, g, h)) +
                             function_bracket(*S, g, function_bracket(*S, h, f)) +
                             function_bracket(*S, h, function_bracket(*S, f, g));
            CHECK(jac.is_zero());
        }
    }
}

TEST_CASE("anchor: frozen examples and the Hamiltonian normalization") {
    auto r2 = th::load("r2_symplectic.json");
    CHECK(anchor(*r2, F(2, "dx1")) == V(2, "@2"));
    CHECK(anchor(*r2, F(2, "dx2")) == V(2, "-1 @1"));
    CHECK(anchor(*r2, DifferentialForm(2)).is_zero());
    CHECK_THROWS_AS(anchor(*r2, F(2, "dx1^dx2")), std::invalid_argument);

    Rng rng(71);
    auto so3 = th::load("so3_star.json");
    for (int t = 0; t < 30; ++t) {
        Polynomial f = rng.polynomial(3, 2), g = rng.polynomial(3, 2);
        DifferentialForm df = exterior_derivative(DifferentialForm::from_polynomial(f));
        CHECK(apply_vector(anchor(*so3, df), g) == function_bracket(*so3, f, g));
    }
}

TEST_CASE("koszul bracket on 1-forms: frozen examples") {
    auto r2 = th::load("r2_symplectic.json");
    CHECK(koszul_bracket_1(*r2, F(2, "dx1"), F(2, "dx2")).is_zero());
    CHECK(koszul_bracket_1(*r2, F(2, "2x1 dx1"), F(2, "dx2")) == F(2, "2 dx1"));
    CHECK(koszul_bracket_1(*r2, F(2, "x1 dx2"), F(2, "dx1")).is_zero());
}

TEST_CASE("exact forms: {df, dg} = d{f, g}") {
    Rng rng(73);
    for (const char* name : {"r2_symplectic.json", "so3_star.json", "quadratic.json"}) {
        auto S = th::load(name);
        int n = S->dim();
        for (int t = 0; t < 40; ++t) {
            Polynomial f = rng.polynomial(n, 3), g = rng.polynomial(n, 3);
            DifferentialForm df = exterior_derivative(DifferentialForm::from_polynomial(f));
            DifferentialForm dg = exterior_derivative(DifferentialForm::from_polynomial(g));
            DifferentialForm want =
                exterior_derivative(DifferentialForm::from_polynomial(function_bracket(*S, f, g)));
            CHECK(koszul_bracket_1(*S, df, dg) == want);
            CHECK(koszul_bracket(*S, df, dg) == want);
        }
    }
}

TEST_CASE("koszul bracket: base case agrees with the 1-form bracket") {
    Rng rng(79);
    auto so3 = th::load("so3_star.json");
    for (int t = 0; t < 30; ++t) {
        DifferentialForm a = rng.form(3, 1, 2);
        DifferentialForm b = rng.form(3, 1, 2);
        CHECK(koszul_bracket(*so3, a, b) == koszul_bracket_1(*so3, a, b));
    }
}

TEST_CASE("koszul bracket: closed 1-form against closed form simplifies") {
    Rng rng(83);
    auto so3 = th::load("so3_star.json");
    for (int t = 0; t < 30; ++t) {
        DifferentialForm a = rng.closed_form(3, 1, 2);
        DifferentialForm w = rng.closed_form(3, rng.uniform(1, 3), 2);
        DifferentialForm lie = lie_derivative(anchor(*so3, a), w);
        CHECK(koszul_bracket(*so3, a, w) == lie);
        CHECK(lie == exterior_derivative(interior_product(anchor(*so3, a), w)));
    }
}

TEST_CASE("koszul bracket: graded antisymmetry in the shifted grading") {
    Rng rng(89);
    auto quad = th::load("quadratic.json");
    for (int t = 0; t < 30; ++t) {
        int k1 = rng.uniform(0, 3), k2 = rng.uniform(0, 3);
        DifferentialForm a = rng.form(3, k1, 2);
        DifferentialForm b = rng.form(3, k2, 2);
        CHECK(koszul_bracket(*quad, a, b) ==
              koszul_bracket(*quad, b, a)
                  .scaled(Rational(-parity_sign(static_cast<long long>(k1 - 1) * (k2 - 1)))));
    }
}

TEST_CASE("tilde-pi: frozen examples and the dual formula") {
    auto r2 = th::load("r2_symplectic.json");
    CHECK(tilde_pi(*r2, F(2, "dx1"), F(2, "dx2")) == F(2, "1"));
    CHECK(tilde_pi(*r2, F(2, "x1x2"), F(2, "x2 dx1^dx2")).is_zero());
    DifferentialForm lhs = tilde_pi(*r2, F(2, "dx1^dx2"), F(2, "dx1"));
    CHECK(lhs == tilde_pi_contraction(*r2, F(2, "dx1^dx2"), F(2, "dx1")));
    CHECK(lhs == F(2, "dx1"));

    Rng rng(97);
    auto so3 = th::load("so3_star.json");
    for (int t = 0; t < 40; ++t) {
        DifferentialForm a = rng.form(3, rng.uniform(0, 3), 2);
        DifferentialForm b = rng.form(3, rng.uniform(0, 3), 2);
        CHECK(tilde_pi(*so3, a, b) == tilde_pi_contraction(*so3, a, b));
        // Bilinear over the function ring.
        Polynomial f = rng.polynomial(3, 2);
        CHECK(tilde_pi(*so3, a.scaled(f), b) == tilde_pi(*so3, a, b).scaled(f));
        // Graded antisymmetry in the shifted grading:
        // pi~(a, b) = -(-1)^{(|a|-1)(|b|-1)} pi~(b, a).
        if (a.pure_degree() >= 0 && b.pure_degree() >= 0)
            CHECK(tilde_pi(*so3, a, b) ==
                  tilde_pi(*so3, b, a).scaled(Rational(-parity_sign(
                      static_cast<long long>(a.pure_degree() - 1) * (b.pure_degree() - 1)))));
    }
}

TEST_CASE("tilde-pi equals the pairing on 1-forms") {
    Rng rng(101);
    for (const char* name : {"r2_symplectic.json", "so3_star.json", "quadratic.json"}) {
        auto S = th::load(name);
        int n = S->dim();
        for (int t = 0; t < 20; ++t) {
            DifferentialForm a = rng.form(n, 1, 2);
            DifferentialForm b = rng.form(n, 1, 2);
            CHECK(tilde_pi(*S, a, b) ==
                  DifferentialForm::from_polynomial(form_pairing(*S, a, b)));
        }
    }
}

TEST_CASE("nikonov route: frozen behavior on closed and exact forms") {
    auto so3 = th::load("so3_star.json");
    Rng rng(103);
    for (int t = 0; t < 25; ++t) {
        // Closed inputs: the bracket is d pi~(a, b), an exact form.
        DifferentialForm a = rng.closed_form(3, rng.uniform(1, 2), 2);
        DifferentialForm b = rng.closed_form(3, rng.uniform(1, 3), 2);
        CHECK(nikonov_bracket(*so3, a, b) ==
              exterior_derivative(tilde_pi(*so3, a, b)));
        // Exact 1-forms: d{f, g}.
        Polynomial f = rng.polynomial(3, 2), g = rng.polynomial(3, 2);
        DifferentialForm df = exterior_derivative(DifferentialForm::from_polynomial(f));
        DifferentialForm dg = exterior_derivative(DifferentialForm::from_polynomial(g));
        CHECK(nikonov_bracket(*so3, df, dg) ==
              exterior_derivative(
                  DifferentialForm::from_polynomial(function_bracket(*so3, f, g))));
    }
}

TEST_CASE("nikonov route equals the recursive extension on Poisson structures") {
    Rng rng(107);
    for (const char* name : {"so3_star.json", "quadratic.json", "r4_symplectic.json"}) {
        auto S = th::load(name);
        int n = S->dim();
        for (int t = 0; t < 25; ++t) {
            DifferentialForm a = rng.form(n, rng.uniform(0, std::min(3, n)), 2);
            DifferentialForm b = rng.form(n, rng.uniform(0, std::min(3, n)), 2);
            CHECK(koszul_bracket(*S, a, b) == nikonov_bracket(*S, a, b));
        }
    }
}

TEST_CASE("spec cross-validation example: {dx1, x1 dx1^dx2} two ways") {
    auto r2 = th::load("r2_symplectic.json");
    DifferentialForm a = F(2, "dx1");
    DifferentialForm b = F(2, "x1 dx1^dx2");
    CHECK(koszul_bracket(*r2, a, b) == nikonov_bracket(*r2, a, b));
}

TEST_CASE("jacobiator: zero on Poisson, witnessed nonzero on the non-Poisson fixture") {
    auto so3 = th::load("so3_star.json");
    Rng rng(109);
    for (int t = 0; t < 25; ++t) {
        DifferentialForm a = rng.form(3, 1, 2);
        DifferentialForm b = rng.form(3, 1, 2);
        DifferentialForm g = rng.form(3, rng.uniform(1, 2), 2);
        CHECK(jacobiator(*so3, a, b, g).is_zero());
    }
    CHECK(jacobiator(*so3, DifferentialForm(3), F(3, "dx1"), F(3, "dx2")).is_zero());

    // Exact 1-forms: J(df, dg, dh) = d J(f, g, h) = 0 for Poisson.
    Polynomial f = P(3, "x1^2"), g = P(3, "x2x3"), h = P(3, "x1 + x3");
    auto d_of = [](const Polynomial& p) {
        return exterior_derivative(DifferentialForm::from_polynomial(p));
    };
    CHECK(jacobiator(*so3, d_of(f), d_of(g), d_of(h)).is_zero());

    auto bad = th::load("nonpoisson.json");
    bool witness = false;
    for (int t = 0; t < 40 && !witness; ++t) {
        DifferentialForm a = rng.form(3, 1, 1);
        DifferentialForm b = rng.form(3, 1, 1);
        DifferentialForm c = rng.form(3, 1, 1);
        witness = !jacobiator(*bad, a, b, c).is_zero();
    }
    CHECK(witness);
}

TEST_CASE("push-down: bracket of closed forms is closed") {
    auto quad = th::load("quadratic.json");
    Rng rng(113);
    for (int t = 0; t < 20; ++t) {
        DifferentialForm a = rng.closed_form(3, rng.uniform(1, 2), 2);
        DifferentialForm b = rng.closed_form(3, rng.uniform(1, 2), 2);
        CHECK(exterior_derivative(koszul_bracket(*quad, a, b)).is_zero());
    }
}
