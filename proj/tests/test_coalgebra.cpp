#include <doctest.h>

#include "helpers.hpp"
#include "symdg/checks.hpp"
#include "symdg/formality.hpp"
#include "symdg/generate.hpp"

using namespace symdg;
using th::F;

namespace {

Letter L(int dim, const std::string& form) {
    DifferentialForm w = parse_form(form, dim);
    REQUIRE(w.terms().size() == 1);
    const auto& [k, c] = *w.terms().begin();
    REQUIRE(c == 1);
    return Letter{k.mono, k.bits};
}

WordSum one_word(int dim, std::initializer_list<Letter> ls, int coeff = 1) {
    return normalize_word(dim, Word(ls), Rational(coeff));
}

void letter_sum_add(LetterSum& acc, const LetterSum& v, const Rational& scale) {
    for (const auto& [letter, c] : v) {
        Rational x = c * scale;
        if (x == 0) continue;
        auto it = acc.find(letter);
        if (it == acc.end()) acc.emplace(letter, x);
        else {
            it->second += x;
            if (it->second == 0) acc.erase(it);
        }
    }
}

}  // namespace

TEST_CASE("letter order and degrees") {
    Letter f = L(2, "x1");        // suspended 0-form, degree -1
    Letter a = L(2, "dx1");       // suspended 1-form, degree 0
    Letter w = L(2, "dx1^dx2");   // suspended 2-form, degree 1
    CHECK(f.suspended_degree() == -1);
    CHECK(a.suspended_degree() == 0);
    CHECK(w.suspended_degree() == 1);
    CHECK(f < a);
    CHECK(a < w);
}

TEST_CASE("normalize_word: transposition sign and vanishing squares") {
    // Transposing two suspended 1-forms costs -1.
    WordSum swapped = one_word(2, {L(2, "dx2"), L(2, "dx1")});
    WordSum sorted = one_word(2, {L(2, "dx1"), L(2, "dx2")}, -1);
    CHECK(swapped == sorted);

    // A repeated letter of even suspended degree annihilates the word;
    // letters of odd suspended degree commute and may repeat.
    WordSum square(2);
    square.add(Word{L(2, "dx1"), L(2, "dx1")}, Rational(1));
    CHECK(square.is_zero());

    WordSum fsquare(2);
    fsquare.add(Word{L(2, "x1"), L(2, "x1")}, Rational(1));
    CHECK_FALSE(fsquare.is_zero());

    WordSum wsquare(2);
    wsquare.add(Word{L(2, "dx1^dx2"), L(2, "dx1^dx2")}, Rational(1));
    CHECK_FALSE(wsquare.is_zero());

    // Transposing a suspended 0-form past a suspended 2-form: degrees -1 and
    // 1, sign (-1)^{(-1)(1)+1} = +1.
    CHECK(one_word(2, {L(2, "dx1^dx2"), L(2, "x1")}) ==
          one_word(2, {L(2, "x1"), L(2, "dx1^dx2")}));

    CHECK_THROWS_AS(normalize_word(2, Word{}, Rational(1)), std::invalid_argument);
}

TEST_CASE("normalize_word is idempotent on random words") {
    Rng rng(127);
    for (int t = 0; t < 60; ++t) {
        WordSum w = rng.word(3, rng.uniform(1, 4), 2, 2);
        const auto& [letters, c] = *w.terms().begin();
        WordSum again = normalize_word(3, letters, c);
        CHECK(again == w);
    }
}

TEST_CASE("comultiplication: frozen length-2 example and primitives") {
    // Both letters of suspended degree 0: nabla(a^b) = -(a(x)b) + (b(x)a).
    Letter a = L(2, "dx1"), b = L(2, "dx2");
    TensorSum got = comultiplication(one_word(2, {a, b}));
    TensorSum want(2);
    want.add(Word{a}, Word{b}, Rational(-1));
    want.add(Word{b}, Word{a}, Rational(1));
    CHECK(got == want);

    CHECK(comultiplication(one_word(2, {a})).is_zero());
}

TEST_CASE("coalgebra suite: coassociativity, coderivation square, commutators, bar") {
    auto so3 = th::load("so3_star.json");
    CheckConfig cfg;
    cfg.seed = 5;
    cfg.trials = 25;
    cfg.max_word_length = 4;
    CheckReport r = run_check("coalgebra", so3, cfg);
    INFO(r.counterexample.value_or("pass"));
    CHECK(r.pass);
}

TEST_CASE("extension formula: single-letter components act as signed sums") {
    const int dim = 3;
    Component d = d_component(dim);
    Coderivation D(ComponentFamily{dim, {d}});
    Letter a = L(dim, "x3 dx1");
    Letter b = L(dim, "dx2");
    // d~ s(x3 dx1) = -s(dx3^dx1) = +s(dx1^dx3), d~ s(dx2) = 0.
    WordSum got = D.apply(one_word(dim, {a, b}));
    WordSum want = one_word(dim, {L(dim, "dx1^dx3"), b});
    CHECK(got == want);
}

TEST_CASE("extension formula: restriction to length k projects back to f_k") {
    auto so3 = th::load("so3_star.json");
    Rng rng(131);
    for (int t = 0; t < 40; ++t) {
        Component comp;
        switch (rng.uniform(0, 2)) {
            case 0: comp = multiplication_component(3); break;
            case 1: comp = pi_component(so3); break;
            default: comp = bracket_component(so3); break;
        }
        Coderivation C(ComponentFamily{3, {comp}});
        Letter a = rng.letter(3, 2, 2), b = rng.letter(3, 2, 2);
        Word pair{a, b};
        WordSum w(3);
        w.add(pair, Rational(1));
        if (w.is_zero()) continue;
        // The extension on a length-2 word is the component itself (the
        // stored word may differ from (a, b) by the transposition sign).
        const auto& [canon, coeff] = *w.terms().begin();
        LetterSum direct = comp.eval(canon);
        WordSum want(3);
        for (const auto& [letter, c] : direct) want.add(Word{letter}, c * coeff);
        CHECK(C.apply(w) == want);
    }
}

TEST_CASE("extension formula: arity-2 component on a three-letter word") {
    // f2 applied to a^b^c spreads over the three splits with shuffle signs;
    // for suspended degree 0 letters these are +, -, +.
    auto so3 = th::load("so3_star.json");
    Component m = multiplication_component(3);
    Coderivation M(ComponentFamily{3, {m}});
    Letter a = L(3, "dx1"), b = L(3, "dx2"), c = L(3, "x1 dx3");
    WordSum w = one_word(3, {a, b, c});
    WordSum want(3);
    auto put = [&](const Letter& x, const Letter& y, const Letter& tail, int sign) {
        for (const auto& [letter, coeff] : m.eval(Word{x, y}))
            want.add(Word{letter, tail}, coeff * sign);
    };
    put(a, b, c, 1);
    put(a, c, b, -1);
    put(b, c, a, 1);
    CHECK(M.apply(w) == want);
}

TEST_CASE("component commutator: arity-1 pair is a composition difference") {
    const int dim = 2;
    Rng rng(137);
    Polyvector X = rng.vector_field(dim, 2);
    Component d = d_component(dim);
    Component ix = contraction_component(X);
    Component comm = component_commutator(dim, d, ix);
    for (int t = 0; t < 20; ++t) {
        Letter a = rng.letter(dim, 2, 2);
        Word arg{a};
        LetterSum lhs = comm.eval(arg);
        // d(i_X a) - (-1)^{(1)(-1)} i_X(d a) = d i_X a + i_X d a.
        LetterSum want;
        for (const auto& [mid, c] : ix.eval(arg)) letter_sum_add(want, d.eval(Word{mid}), c);
        for (const auto& [mid, c] : d.eval(arg)) letter_sum_add(want, ix.eval(Word{mid}), c);
        CHECK(lhs == want);
    }
}

TEST_CASE("component commutator of d and a contraction gives the Lie component") {
    const int dim = 3;
    Rng rng(139);
    for (int t = 0; t < 20; ++t) {
        Polyvector X = rng.vector_field(dim, 2);
        Component comm = component_commutator(dim, d_component(dim), contraction_component(X));
        Component lie = lie_component(X);
        Letter a = rng.letter(dim, 3, 2);
        CHECK(comm.eval(Word{a}) == lie.eval(Word{a}));
    }
}

TEST_CASE("bar transform: first degree zero acts untouched") {
    auto so3 = th::load("so3_star.json");
    Coderivation Br(ComponentFamily{3, {bracket_component(so3)}});
    Rng rng(149);
    for (int t = 0; t < 15; ++t) {
        WordSum w = rng.word(3, rng.uniform(1, 3), 2, 2);
        CHECK(Br.apply(w) == Br.apply_bar(w));
    }
}

TEST_CASE("cup product: zero component absorbs") {
    const int dim = 2;
    Component zero{1, 0, [](std::span<const Letter>) { return LetterSum{}; }};
    Component cup = cup_product(dim, d_component(dim), zero);
    Rng rng(151);
    for (int t = 0; t < 10; ++t) {
        Letter a = rng.letter(dim, 2, 2), b = rng.letter(dim, 2, 2);
        CHECK(cup.eval(Word{a, b}).empty());
    }
}

TEST_CASE("cup product: graded commutativity") {
    const int dim = 3;
    Rng rng(157);
    for (int t = 0; t < 25; ++t) {
        Polyvector X = rng.vector_field(dim, 2);
        Polyvector Y = rng.vector_field(dim, 2);
        std::vector<Component> pool = {d_component(dim), lie_component(X),
                                       contraction_component(Y)};
        const Component& phi = pool[static_cast<size_t>(rng.uniform(0, 2))];
        const Component& psi = pool[static_cast<size_t>(rng.uniform(0, 2))];
        Component pq = cup_product(dim, phi, psi);
        Component qp = cup_product(dim, psi, phi);
        long long e = static_cast<long long>(phi.first_degree) * psi.first_degree +
                      static_cast<long long>(phi.arity - 1) * (psi.arity - 1);
        int sign = parity_sign(e);
        Letter a = rng.letter(dim, 2, 2), b = rng.letter(dim, 2, 2);
        Word arg{a, b};
        LetterSum lhs = pq.eval(arg);
        LetterSum want;
        letter_sum_add(want, qp.eval(arg), Rational(sign));
        CHECK(lhs == want);
    }
}

TEST_CASE("cup product: differentiations distribute over cups") {
    const int dim = 3;
    Rng rng(163);
    for (int t = 0; t < 12; ++t) {
        Polyvector X = rng.vector_field(dim, 1);
        Polyvector Y = rng.vector_field(dim, 1);
        Polyvector Z = rng.vector_field(dim, 1);
        std::vector<Component> deltas = {d_component(dim), contraction_component(Z),
                                         lie_component(Z)};
        Component delta = deltas[static_cast<size_t>(rng.uniform(0, 2))];
        Component phi = contraction_component(X);
        Component psi = lie_component(Y);
        Component cup = cup_product(dim, phi, psi);

        Component lhs = component_commutator(dim, delta, cup);
        Component r1 = cup_product(dim, component_commutator(dim, delta, phi), psi);
        Component r2 = cup_product(dim, phi, component_commutator(dim, delta, psi));
        int sign = parity_sign(static_cast<long long>(delta.first_degree) * phi.first_degree);

        Letter a = rng.letter(dim, 2, 1), b = rng.letter(dim, 2, 1);
        Word arg{a, b};
        LetterSum want = r1.eval(arg);
        letter_sum_add(want, r2.eval(arg), Rational(sign));
        CHECK(lhs.eval(arg) == want);
    }
}

TEST_CASE("first structure equations of the Lie family at component level") {
    auto so3 = th::load("so3_star.json");
    const int dim = 3;
    Component d = d_component(dim);
    Component br = bracket_component(so3);
    Rng rng(167);
    // d~ squares to zero on letters.
    for (int t = 0; t < 20; ++t) {
        Letter a = rng.letter(dim, 3, 2);
        LetterSum dd;
        for (const auto& [mid, c] : d.eval(Word{a})) letter_sum_add(dd, d.eval(Word{mid}), c);
        CHECK(dd.empty());
    }
    // The differential is a derivation of the bracket: [d~, s{}] = 0.
    Component comm = component_commutator(dim, d, br);
    for (int t = 0; t < 20; ++t) {
        Letter a = rng.letter(dim, 2, 2), b = rng.letter(dim, 2, 2);
        CHECK(comm.eval(Word{a, b}).empty());
    }
}
