#include "symdg/checks.hpp"

#include <functional>
#include <json.hpp>
#include <map>
#include <sstream>

#include "symdg/render.hpp"

namespace symdg {

namespace {

struct Ctx {
    std::shared_ptr<const PoissonStructure> S;
    CheckConfig cfg;
    Rng rng;
    int trial = 0;

    int dim() const { return S->dim(); }
    int pd() const { return cfg.max_poly_degree; }

    std::string fail(std::initializer_list<std::pair<const char*, std::string>> parts) const {
        std::ostringstream o;
        o << "trial " << trial;
        for (const auto& [k, v] : parts) o << "; " << k << " = " << v;
        return o.str();
    }
};

using Checker = std::function<CheckReport(Ctx&)>;

CheckReport pass_report(const Ctx& c, const std::string& name) {
    return CheckReport{name, c.cfg.seed, c.cfg.trials, true, std::nullopt, std::nullopt};
}

CheckReport fail_report(const Ctx& c, const std::string& name, std::string counterexample) {
    return CheckReport{name, c.cfg.seed, c.cfg.trials, false, std::move(counterexample),
                       std::nullopt};
}

// ---------------------------------------------------------------- brackets

CheckReport check_jacobi(Ctx& c) {
    static const int mixes[][3] = {{1, 1, 1}, {1, 1, 2}, {1, 2, 2}};
    for (c.trial = 0; c.trial < c.cfg.trials; ++c.trial) {
        const int* mix = mixes[c.trial % 3];
        DifferentialForm w1 = c.rng.form(c.dim(), std::min(mix[0], c.dim()), c.pd());
        DifferentialForm w2 = c.rng.form(c.dim(), std::min(mix[1], c.dim()), c.pd());
        DifferentialForm w3 = c.rng.form(c.dim(), std::min(mix[2], c.dim()), c.pd());
        DifferentialForm j = jacobiator(*c.S, w1, w2, w3);
        if (!j.is_zero())
            return fail_report(c, "jacobi",
                               c.fail({{"w1", render_canonical(w1)},
                                       {"w2", render_canonical(w2)},
                                       {"w3", render_canonical(w3)},
                                       {"jacobiator", render_canonical(j)}}));
    }
    return pass_report(c, "jacobi");
}

CheckReport check_module_rule(Ctx& c) {
    for (c.trial = 0; c.trial < c.cfg.trials; ++c.trial) {
        DifferentialForm a = c.rng.form(c.dim(), 1, c.pd());
        DifferentialForm b = c.rng.form(c.dim(), 1, c.pd());
        Polynomial f = c.rng.polynomial(c.dim(), c.pd());
        DifferentialForm lhs = koszul_bracket(*c.S, a, b.scaled(f));
        DifferentialForm rhs = koszul_bracket(*c.S, a, b).scaled(f) +
                               b.scaled(apply_vector(anchor(*c.S, a), f));
        if (!(lhs == rhs))
            return fail_report(c, "module-rule",
                               c.fail({{"alpha", render_canonical(a)},
                                       {"beta", render_canonical(b)},
                                       {"f", render_canonical(f)},
                                       {"lhs", render_canonical(lhs)},
                                       {"rhs", render_canonical(rhs)}}));
    }
    return pass_report(c, "module-rule");
}

CheckReport check_anchor_hom(Ctx& c) {
    for (c.trial = 0; c.trial < c.cfg.trials; ++c.trial) {
        DifferentialForm a = c.rng.form(c.dim(), 1, c.pd());
        DifferentialForm b = c.rng.form(c.dim(), 1, c.pd());
        Polyvector lhs = schouten_bracket(anchor(*c.S, a), anchor(*c.S, b));
        Polyvector rhs = anchor(*c.S, koszul_bracket_1(*c.S, a, b));
        if (!(lhs == rhs))
            return fail_report(c, "anchor-hom",
                               c.fail({{"alpha", render_canonical(a)},
                                       {"beta", render_canonical(b)},
                                       {"lhs", render_canonical(lhs)},
                                       {"rhs", render_canonical(rhs)}}));
    }
    return pass_report(c, "anchor-hom");
}

CheckReport check_d_derivation(Ctx& c) {
    for (c.trial = 0; c.trial < c.cfg.trials; ++c.trial) {
        int k1 = c.rng.uniform(0, std::min(3, c.dim()));
        int k2 = c.rng.uniform(0, std::min(3, c.dim()));
        DifferentialForm w1 = c.rng.form(c.dim(), k1, c.pd());
        DifferentialForm w2 = c.rng.form(c.dim(), k2, c.pd());
        DifferentialForm lhs = exterior_derivative(koszul_bracket(*c.S, w1, w2));
        DifferentialForm rhs =
            koszul_bracket(*c.S, exterior_derivative(w1), w2) +
            koszul_bracket(*c.S, w1, exterior_derivative(w2)).scaled(Rational(parity_sign(k1 - 1)));
        if (!(lhs == rhs))
            return fail_report(c, "d-derivation",
                               c.fail({{"w1", render_canonical(w1)},
                                       {"w2", render_canonical(w2)},
                                       {"lhs", render_canonical(lhs)},
                                       {"rhs", render_canonical(rhs)}}));
    }
    return pass_report(c, "d-derivation");
}

CheckReport check_well_defined(Ctx& c) {
    for (c.trial = 0; c.trial < c.cfg.trials; ++c.trial) {
        int k1 = c.rng.uniform(0, std::min(2, c.dim()));
        DifferentialForm w1 = c.rng.form(c.dim(), k1, c.pd());
        DifferentialForm w2 = c.rng.form(c.dim(), 1, c.pd());
        DifferentialForm w3 = c.rng.form(c.dim(), std::min(c.rng.uniform(1, 2), c.dim()), c.pd());
        Polynomial f = c.rng.polynomial(c.dim(), c.pd());
        DifferentialForm lhs = koszul_bracket(*c.S, w1, wedge(w2.scaled(f), w3));
        DifferentialForm rhs = koszul_bracket(*c.S, w1, wedge(w2, w3.scaled(f)));
        if (!(lhs == rhs))
            return fail_report(c, "well-defined",
                               c.fail({{"w1", render_canonical(w1)},
                                       {"w2", render_canonical(w2)},
                                       {"w3", render_canonical(w3)},
                                       {"f", render_canonical(f)},
                                       {"lhs", render_canonical(lhs)},
                                       {"rhs", render_canonical(rhs)}}));
    }
    return pass_report(c, "well-defined");
}

CheckReport check_nikonov(Ctx& c) {
    for (c.trial = 0; c.trial < c.cfg.trials; ++c.trial) {
        int k1 = c.rng.uniform(0, std::min(3, c.dim()));
        int k2 = c.rng.uniform(0, std::min(3, c.dim()));
        DifferentialForm w1 = c.rng.form(c.dim(), k1, c.pd());
        DifferentialForm w2 = c.rng.form(c.dim(), k2, c.pd());
        DifferentialForm kb = koszul_bracket(*c.S, w1, w2);
        DifferentialForm nb = nikonov_bracket(*c.S, w1, w2);
        if (!(kb == nb))
            return fail_report(c, "nikonov",
                               c.fail({{"w1", render_canonical(w1)},
                                       {"w2", render_canonical(w2)},
                                       {"koszul", render_canonical(kb)},
                                       {"nikonov", render_canonical(nb)}}));
        // Closed pair: the bracket is exact with primitive pi~(a, b).
        DifferentialForm ca = c.rng.closed_form(c.dim(), c.rng.uniform(1, std::min(2, c.dim())),
                                                c.pd());
        DifferentialForm cb = c.rng.closed_form(c.dim(), c.rng.uniform(1, std::min(3, c.dim())),
                                                c.pd());
        DifferentialForm lhs = koszul_bracket(*c.S, ca, cb);
        DifferentialForm rhs = exterior_derivative(tilde_pi(*c.S, ca, cb));
        if (!(lhs == rhs))
            return fail_report(c, "nikonov",
                               c.fail({{"closed1", render_canonical(ca)},
                                       {"closed2", render_canonical(cb)},
                                       {"bracket", render_canonical(lhs)},
                                       {"d tilde-pi", render_canonical(rhs)}}));
    }
    return pass_report(c, "nikonov");
}

CheckReport check_tilde_pi_dual(Ctx& c) {
    for (c.trial = 0; c.trial < c.cfg.trials; ++c.trial) {
        int k1 = c.rng.uniform(0, std::min(3, c.dim()));
        int k2 = c.rng.uniform(0, std::min(3, c.dim()));
        DifferentialForm w1 = c.rng.form(c.dim(), k1, c.pd());
        DifferentialForm w2 = c.rng.form(c.dim(), k2, c.pd());
        DifferentialForm sum = tilde_pi(*c.S, w1, w2);
        DifferentialForm con = tilde_pi_contraction(*c.S, w1, w2);
        if (!(sum == con))
            return fail_report(c, "tilde-pi-dual",
                               c.fail({{"w1", render_canonical(w1)},
                                       {"w2", render_canonical(w2)},
                                       {"sum formula", render_canonical(sum)},
                                       {"contraction", render_canonical(con)}}));
        DifferentialForm a = c.rng.form(c.dim(), 1, c.pd());
        DifferentialForm b = c.rng.form(c.dim(), 1, c.pd());
        DifferentialForm lhs = tilde_pi(*c.S, a, b);
        DifferentialForm rhs = DifferentialForm::from_polynomial(form_pairing(*c.S, a, b));
        if (!(lhs == rhs))
            return fail_report(c, "tilde-pi-dual",
                               c.fail({{"alpha", render_canonical(a)},
                                       {"beta", render_canonical(b)},
                                       {"tilde-pi", render_canonical(lhs)},
                                       {"pairing", render_canonical(rhs)}}));
    }
    return pass_report(c, "tilde-pi-dual");
}

// ---------------------------------------------------------------- coalgebra

using TripleSum = std::map<std::tuple<Word, Word, Word>, Rational>;

void triple_add(TripleSum& t, const Word& a, const Word& b, const Word& w, const Rational& c) {
    if (c == 0) return;
    auto key = std::make_tuple(a, b, w);
    auto it = t.find(key);
    if (it == t.end()) t.emplace(std::move(key), c);
    else {
        it->second += c;
        if (it->second == 0) t.erase(it);
    }
}

Component random_single_component(Ctx& c) {
    switch (c.rng.uniform(0, 5)) {
        case 0: return d_component(c.dim());
        case 1: return lie_component(c.rng.vector_field(c.dim(), c.pd()));
        case 2: return contraction_component(c.rng.vector_field(c.dim(), c.pd()));
        case 3: return multiplication_component(c.dim());
        case 4: return pi_component(c.S);
        default: return bracket_component(c.S);
    }
}

CheckReport check_coalgebra(Ctx& c) {
    const int dim = c.dim();
    for (c.trial = 0; c.trial < c.cfg.trials; ++c.trial) {
        // Coassociativity (nabla (x) 1) nabla = (1 (x) nabla) nabla.
        {
            int len = c.rng.uniform(2, std::max(2, c.cfg.max_word_length));
            WordSum w = c.rng.word(dim, len, std::min(2, dim), c.pd());
            TensorSum first = comultiplication(w);
            TripleSum left, right;
            for (const auto& [pairw, coeff] : first.terms()) {
                WordSum lw(dim);
                lw.add(pairw.first, Rational(1));
                TensorSum again = comultiplication(lw);
                for (const auto& [p2, c2] : again.terms())
                    triple_add(left, p2.first, p2.second, pairw.second, coeff * c2);
                WordSum rw(dim);
                rw.add(pairw.second, Rational(1));
                TensorSum again2 = comultiplication(rw);
                for (const auto& [p2, c2] : again2.terms())
                    triple_add(right, pairw.first, p2.first, p2.second, coeff * c2);
            }
            if (!(left == right))
                return fail_report(c, "coalgebra",
                                   c.fail({{"identity", "coassociativity"},
                                           {"word", render_canonical(w)}}));
        }
        // Coderivation square (7) for the extension of a random component.
        // With the comultiplication's global (-1)^{kl} factor the square
        // commutes with the signs
        //   nabla(D a) = (-1)^{|D|' l'} D(a_1) (x) a_2
        //              + (-1)^{|D| |a_1|} a_1 (x) D(a_2),
        // where l' is the length of the right tensor factor; for length-
        // preserving operators this is the plain bidegree rule.
        {
            Component comp = random_single_component(c);
            Coderivation C(ComponentFamily{dim, {comp}});
            int len = c.rng.uniform(std::max(2, comp.arity), 4);
            WordSum w = c.rng.word(dim, len, std::min(2, dim), c.pd());
            TensorSum lhs = comultiplication(C.apply(w));
            TensorSum rhs(dim);
            long long m = comp.first_degree, s = 1 - comp.arity;
            TensorSum source = comultiplication(w);
            for (const auto& [pairw, coeff] : source.terms()) {
                WordSum lw(dim), rw(dim);
                lw.add(pairw.first, Rational(1));
                rw.add(pairw.second, Rational(1));
                int lsign = parity_sign(s * word_length(pairw.second));
                WordSum dl = C.apply(lw);
                for (const auto& [dw, dc] : dl.terms())
                    rhs.add(dw, pairw.second, coeff * dc * lsign);
                int rsign = parity_sign(m * word_first_degree(pairw.first));
                WordSum dr = C.apply(rw);
                for (const auto& [dw, dc] : dr.terms())
                    rhs.add(pairw.first, dw, coeff * dc * rsign);
            }
            if (!(lhs == rhs))
                return fail_report(c, "coalgebra",
                                   c.fail({{"identity", "coderivation square"},
                                           {"word", render_canonical(w)}}));
        }
        // Extension of the commutator against the commutator of extensions.
        {
            Component phi = random_single_component(c);
            Component psi = random_single_component(c);
            Coderivation cphi(ComponentFamily{dim, {phi}});
            Coderivation cpsi(ComponentFamily{dim, {psi}});
            Coderivation comm(ComponentFamily{dim, {component_commutator(dim, phi, psi)}});
            int len = c.rng.uniform(1, c.cfg.max_word_length);
            WordSum w = c.rng.word(dim, len, std::min(2, dim), c.pd());
            WordSum lhs = comm.apply(w);
            WordSum rhs = bigraded_commutator_apply(cphi, cpsi, w);
            if (!(lhs == rhs))
                return fail_report(c, "coalgebra",
                                   c.fail({{"identity", "commutator extension"},
                                           {"word", render_canonical(w)},
                                           {"lhs", render_canonical(lhs)},
                                           {"rhs", render_canonical(rhs)}}));
        }
        // Skewed operators intertwine the modified commutator with the
        // total-degree commutator.
        {
            Component phi = random_single_component(c);
            Component psi = random_single_component(c);
            Coderivation cphi(ComponentFamily{dim, {phi}});
            Coderivation cpsi(ComponentFamily{dim, {psi}});
            int len = c.rng.uniform(1, c.cfg.max_word_length);
            WordSum w = c.rng.word(dim, len, std::min(2, dim), c.pd());
            long long t1 = phi.first_degree + (1 - phi.arity);
            long long t2 = psi.first_degree + (1 - psi.arity);
            WordSum lhs = cphi.apply_bar(cpsi.apply_bar(w)) -
                          cpsi.apply_bar(cphi.apply_bar(w)).scaled(Rational(parity_sign(t1 * t2)));
            long long defcom = static_cast<long long>(phi.first_degree) * (1 - psi.arity);
            Component mixed = scale_component(component_commutator(dim, phi, psi),
                                              Rational(parity_sign(defcom)));
            Coderivation cm(ComponentFamily{dim, {mixed}});
            WordSum rhs = cm.apply_bar(w);
            if (!(lhs == rhs))
                return fail_report(c, "coalgebra",
                                   c.fail({{"identity", "skewed commutator"},
                                           {"word", render_canonical(w)},
                                           {"lhs", render_canonical(lhs)},
                                           {"rhs", render_canonical(rhs)}}));
        }
    }
    return pass_report(c, "coalgebra");
}

CheckReport check_cartan(Ctx& c) {
    const int dim = c.dim();
    for (c.trial = 0; c.trial < c.cfg.trials; ++c.trial) {
        Polyvector X = c.rng.vector_field(dim, c.pd());
        Polyvector Y = c.rng.vector_field(dim, c.pd());
        Polyvector XY = schouten_bracket(X, Y);
        Coderivation D(ComponentFamily{dim, {d_component(dim)}});
        Coderivation LX(ComponentFamily{dim, {lie_component(X)}});
        Coderivation LY(ComponentFamily{dim, {lie_component(Y)}});
        Coderivation IX(ComponentFamily{dim, {contraction_component(X)}});
        Coderivation IY(ComponentFamily{dim, {contraction_component(Y)}});

        int len = c.rng.uniform(1, std::min(3, c.cfg.max_word_length));
        WordSum w = c.rng.word(dim, len, std::min(2, dim), c.pd());

        struct Case {
            const char* name;
            WordSum lhs;
            WordSum rhs;
        };
        WordSum zero(dim);
        std::vector<Case> cases;
        cases.push_back({"[L_X,L_Y] = L_[X,Y]", bigraded_commutator_apply(LX, LY, w),
                         XY.is_zero() ? zero
                                      : Coderivation(ComponentFamily{dim, {lie_component(XY)}})
                                            .apply(w)});
        cases.push_back({"[I_X,I_Y] = 0", bigraded_commutator_apply(IX, IY, w), zero});
        cases.push_back({"[L_X,I_Y] = I_[X,Y]", bigraded_commutator_apply(LX, IY, w),
                         XY.is_zero()
                             ? zero
                             : Coderivation(ComponentFamily{dim, {contraction_component(XY)}})
                                   .apply(w)});
        cases.push_back({"[D,L_X] = 0", bigraded_commutator_apply(D, LX, w), zero});
        cases.push_back({"[D,I_X] = L_X", bigraded_commutator_apply(D, IX, w), LX.apply(w)});
        cases.push_back({"D^2 = 0", D.apply(D.apply(w)), zero});
        for (const auto& cs : cases) {
            if (!(cs.lhs == cs.rhs))
                return fail_report(c, "cartan",
                                   c.fail({{"identity", cs.name},
                                           {"X", render_canonical(X)},
                                           {"Y", render_canonical(Y)},
                                           {"word", render_canonical(w)},
                                           {"lhs", render_canonical(cs.lhs)},
                                           {"rhs", render_canonical(cs.rhs)}}));
        }
    }
    return pass_report(c, "cartan");
}

CheckReport check_m_central(Ctx& c) {
    const int dim = c.dim();
    for (c.trial = 0; c.trial < c.cfg.trials; ++c.trial) {
        Polyvector X = c.rng.vector_field(dim, c.pd());
        Coderivation M(ComponentFamily{dim, {multiplication_component(dim)}});
        Coderivation D(ComponentFamily{dim, {d_component(dim)}});
        Coderivation LX(ComponentFamily{dim, {lie_component(X)}});
        Coderivation IX(ComponentFamily{dim, {contraction_component(X)}});
        int len = c.rng.uniform(2, std::min(3, std::max(2, c.cfg.max_word_length)));
        WordSum w = c.rng.word(dim, len, std::min(2, dim), c.pd());
        struct Case {
            const char* name;
            WordSum lhs;
        };
        std::vector<Case> cases;
        cases.push_back({"[M,I_X]", bigraded_commutator_apply(M, IX, w)});
        cases.push_back({"[M,L_X]", bigraded_commutator_apply(M, LX, w)});
        cases.push_back({"[M,D]", bigraded_commutator_apply(M, D, w)});
        for (const auto& cs : cases) {
            if (!cs.lhs.is_zero())
                return fail_report(c, "m-central",
                                   c.fail({{"identity", cs.name},
                                           {"X", render_canonical(X)},
                                           {"word", render_canonical(w)},
                                           {"value", render_canonical(cs.lhs)}}));
        }
    }
    return pass_report(c, "m-central");
}

CheckReport check_lemma_pi_d(Ctx& c) {
    const int dim = c.dim();
    Component pi = pi_component(c.S);
    Component d = d_component(dim);
    Component comm = component_commutator(dim, pi, d);
    Component target = bracket_component(c.S);
    for (c.trial = 0; c.trial < c.cfg.trials; ++c.trial) {
        Letter a = c.rng.letter(dim, std::min(3, dim), c.pd());
        Letter b = c.rng.letter(dim, std::min(3, dim), c.pd());
        Word pair{a, b};
        LetterSum lhs = comm.eval(pair);
        LetterSum rhs = target.eval(pair);
        if (!(lhs == rhs)) {
            WordSum l(dim), r(dim);
            for (const auto& [L, x] : lhs) l.add(Word{L}, x);
            for (const auto& [L, x] : rhs) r.add(Word{L}, x);
            return fail_report(c, "lemma-pi-d",
                               c.fail({{"letters", render_word(pair)},
                                       {"commutator", render_canonical(l)},
                                       {"bracket", render_canonical(r)}}));
        }
    }
    return pass_report(c, "lemma-pi-d");
}

CheckReport check_main_theorem(Ctx& c) {
    const int dim = c.dim();
    bool plain_ok = true;
    std::string plain_where;
    for (c.trial = 0; c.trial < c.cfg.trials; ++c.trial) {
        int len = 1 + (c.trial % c.cfg.max_word_length);
        WordSum w = c.rng.word(dim, len, std::min(3, dim), c.pd());
        DefectReport skewed = main_theorem_defect(c.S, w, TheoremVariant::Skewed);
        if (!skewed.zero)
            return fail_report(c, "main-theorem",
                               c.fail({{"word", skewed.word},
                                       {"lhs", skewed.lhs},
                                       {"rhs", skewed.rhs},
                                       {"defect", render_canonical(skewed.defect)}}));
        if (plain_ok) {
            DefectReport plain = main_theorem_defect(c.S, w, TheoremVariant::Plain);
            if (!plain.zero) {
                plain_ok = false;
                plain_where = "plain variant defect at word " + plain.word;
            }
        }
    }
    CheckReport r = pass_report(c, "main-theorem");
    r.note = plain_ok ? "plain variant: PASS" : ("plain variant: FAIL (" + plain_where + ")");
    return r;
}

CheckReport check_homotopy(Ctx& c) {
    const int dim = c.dim();
    for (c.trial = 0; c.trial < c.cfg.trials; ++c.trial) {
        int d1 = c.rng.uniform(1, std::min(2, dim));
        int d2 = c.rng.uniform(1, std::min(3, dim));
        DifferentialForm a = c.rng.closed_form(dim, d1, c.pd());
        DifferentialForm b = c.rng.closed_form(dim, d2, c.pd());
        DifferentialForm f2 = homotopy_f2(*c.S, a, b);
        DifferentialForm want = koszul_bracket(*c.S, a, b);
        if (!(exterior_derivative(f2) == want))
            return fail_report(c, "homotopy",
                               c.fail({{"identity", "d f2 = bracket"},
                                       {"alpha", render_canonical(a)},
                                       {"beta", render_canonical(b)},
                                       {"d f2", render_canonical(exterior_derivative(f2))},
                                       {"bracket", render_canonical(want)}}));
        int d3 = c.rng.uniform(1, std::min(2, dim));
        DifferentialForm g = c.rng.closed_form(dim, d3, c.pd());
        DifferentialForm f3 = homotopy_f3(*c.S, a, b, g);
        DifferentialForm p3 = pi3(*c.S, a, b, g);
        if (!(exterior_derivative(f3) == p3))
            return fail_report(c, "homotopy",
                               c.fail({{"identity", "d f3 = pi3"},
                                       {"a1", render_canonical(a)},
                                       {"a2", render_canonical(b)},
                                       {"a3", render_canonical(g)},
                                       {"d f3", render_canonical(exterior_derivative(f3))},
                                       {"pi3", render_canonical(p3)}}));
    }
    return pass_report(c, "homotopy");
}

CheckReport check_linfty(Ctx& c) {
    const int dim = c.dim();
    ComponentFamily family{dim, {d_component(dim), bracket_component(c.S)}};
    for (c.trial = 0; c.trial < c.cfg.trials; ++c.trial) {
        int len = 1 + (c.trial % c.cfg.max_word_length);
        WordSum w = c.rng.word(dim, len, std::min(2, dim), c.pd());
        DefectReport r = linfty_defect(family, w);
        if (!r.zero)
            return fail_report(c, "linfty",
                               c.fail({{"word", r.word}, {"defect", render_canonical(r.defect)}}));
    }
    return pass_report(c, "linfty");
}

const std::map<std::string, Checker>& registry() {
    static const std::map<std::string, Checker> reg = {
        {"jacobi", check_jacobi},
        {"module-rule", check_module_rule},
        {"anchor-hom", check_anchor_hom},
        {"d-derivation", check_d_derivation},
        {"well-defined", check_well_defined},
        {"nikonov", check_nikonov},
        {"tilde-pi-dual", check_tilde_pi_dual},
        {"coalgebra", check_coalgebra},
        {"cartan", check_cartan},
        {"m-central", check_m_central},
        {"lemma-pi-d", check_lemma_pi_d},
        {"main-theorem", check_main_theorem},
        {"homotopy", check_homotopy},
        {"linfty", check_linfty},
    };
    return reg;
}

}  // namespace

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, f] : registry()) v.push_back(k);
        return v;
    }();
    return names;
}

CheckReport run_check(const std::string& name,
                      const std::shared_ptr<const PoissonStructure>& S, const CheckConfig& cfg) {
    auto it = registry().find(name);
    if (it == registry().end()) throw std::invalid_argument("unknown check: " + name);
    Ctx c{S, cfg, Rng(cfg.seed)};
    return it->second(c);
}

std::string report_text(const CheckReport& r) {
    std::ostringstream o;
    o << "check " << r.check << ": seed=" << r.seed << " trials=" << r.trials << " -> "
      << (r.pass ? "PASS" : "FAIL");
    if (r.note) o << "\n  note: " << *r.note;
    if (r.counterexample) o << "\n  counterexample: " << *r.counterexample;
    return o.str();
}

std::string report_json(const CheckReport& r) {
    nlohmann::json j;
    j["check"] = r.check;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["pass"] = r.pass;
    if (r.counterexample) j["counterexample"] = *r.counterexample;
    if (r.note) j["note"] = *r.note;
    return j.dump();
}

}  // namespace symdg
