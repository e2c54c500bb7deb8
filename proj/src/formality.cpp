#include "symdg/formality.hpp"

namespace symdg {

DifferentialForm form_of_letter(int dim, const Letter& L) {
    DifferentialForm w(dim);
    w.add_term(L.mono, L.bits, Rational(1));
    return w;
}

LetterSum letterize(const DifferentialForm& w) {
    LetterSum v;
    for (const auto& [k, c] : w.terms()) v.emplace(Letter{k.mono, k.bits}, c);
    return v;
}

DifferentialForm unsuspend(int dim, const LetterSum& v) {
    DifferentialForm w(dim);
    for (const auto& [L, c] : v) w.add_term(L.mono, L.bits, c);
    return w;
}

DifferentialForm unsuspend_words(const WordSum& ws) {
    DifferentialForm w(ws.dim());
    for (const auto& [word, c] : ws.terms()) {
        if (word_length(word) != 1) continue;
        w.add_term(word.front().mono, word.front().bits, c);
    }
    return w;
}

WordSum suspend_form(const DifferentialForm& w) {
    WordSum out(w.dim());
    for (const auto& [k, c] : w.terms()) out.add(Word{Letter{k.mono, k.bits}}, c);
    return out;
}

Component d_component(int dim) {
    return Component{1, 1, [dim](std::span<const Letter> a) {
                         return letterize(-exterior_derivative(form_of_letter(dim, a[0])));
                     }};
}

Component lie_component(const Polyvector& X) {
    if (X.pure_degree() != 1)
        throw std::invalid_argument("lie_component: field must have pure degree 1");
    int dim = X.dim();
    return Component{1, 0, [dim, X](std::span<const Letter> a) {
                         return letterize(lie_derivative(X, form_of_letter(dim, a[0])));
                     }};
}

Component contraction_component(const Polyvector& X) {
    if (X.pure_degree() != 1)
        throw std::invalid_argument("contraction_component: field must have pure degree 1");
    int dim = X.dim();
    return Component{1, -1, [dim, X](std::span<const Letter> a) {
                         return letterize(-interior_product(X, form_of_letter(dim, a[0])));
                     }};
}

Component multiplication_component(int dim) {
    return Component{2, 1, [dim](std::span<const Letter> a) {
                         int s = parity_sign(wedge_degree(a[0].bits));
                         DifferentialForm prod =
                             wedge(form_of_letter(dim, a[0]), form_of_letter(dim, a[1]));
                         return letterize(prod.scaled(Rational(s)));
                     }};
}

Component pi_component(std::shared_ptr<const PoissonStructure> S) {
    // (a, b) -> -s(pi~(a, b)); the same component arises as the cup square
    // of the suspended contractions over any splitting of the bivector.
    int dim = S->dim();
    return Component{2, -1, [dim, S](std::span<const Letter> a) {
                         DifferentialForm t =
                             tilde_pi(*S, form_of_letter(dim, a[0]), form_of_letter(dim, a[1]));
                         return letterize(-t);
                     }};
}

Component bracket_component(std::shared_ptr<const PoissonStructure> S) {
    int dim = S->dim();
    return Component{2, 0, [dim, S](std::span<const Letter> a) {
                         return letterize(koszul_bracket(*S, form_of_letter(dim, a[0]),
                                                         form_of_letter(dim, a[1])));
                     }};
}

Coderivation make_coderivation(const OperatorKind& kind) {
    using Tag = OperatorKind::Tag;
    switch (kind.tag) {
        case Tag::D:
            return Coderivation(ComponentFamily{kind.dim, {d_component(kind.dim)}});
        case Tag::Lie:
            return Coderivation(ComponentFamily{kind.field.dim(), {lie_component(kind.field)}});
        case Tag::Contraction:
            return Coderivation(
                ComponentFamily{kind.field.dim(), {contraction_component(kind.field)}});
        case Tag::Multiplication:
            return Coderivation(ComponentFamily{kind.dim, {multiplication_component(kind.dim)}});
        case Tag::Pi:
            return Coderivation(
                ComponentFamily{kind.structure->dim(), {pi_component(kind.structure)}});
        case Tag::BracketExtension:
            return Coderivation(
                ComponentFamily{kind.structure->dim(), {bracket_component(kind.structure)}});
    }
    throw std::logic_error("make_coderivation: unknown tag");
}

WordSum exp_nilpotent(const Coderivation& C, const WordSum& w, int sign, bool barred) {
    if (!C.strictly_lowers_length())
        throw std::invalid_argument("exp_nilpotent: operator must strictly lower word length");
    WordSum acc = w;
    WordSum cur = w;
    Rational coeff(1);
    for (unsigned r = 1; !cur.is_zero(); ++r) {
        cur = barred ? C.apply_bar(cur) : C.apply(cur);
        coeff = coeff * Rational(sign) / Rational(r);
        acc = acc + cur.scaled(coeff);
    }
    return acc;
}

DefectReport main_theorem_defect(const std::shared_ptr<const PoissonStructure>& S,
                                 const WordSum& w, TheoremVariant variant) {
    const int dim = S->dim();
    Coderivation D(ComponentFamily{dim, {d_component(dim)}});
    Coderivation Pi(ComponentFamily{dim, {pi_component(S)}});
    Coderivation Br(ComponentFamily{dim, {bracket_component(S)}});

    WordSum lhs(dim), rhs(dim);
    if (variant == TheoremVariant::Plain) {
        lhs = exp_nilpotent(Pi, D.apply(exp_nilpotent(Pi, w, 1)), 1);
        rhs = D.apply(w) + Br.apply(w);
    } else {
        lhs = exp_nilpotent(Pi, D.apply_bar(exp_nilpotent(Pi, w, -1, true)), 1, true);
        rhs = D.apply_bar(w) + Br.apply_bar(w);
    }
    WordSum defect = lhs - rhs;
    return DefectReport{render_canonical(w), render_canonical(lhs), render_canonical(rhs), defect,
                        defect.is_zero()};
}

WordSum formality_mechanism_defect(const std::shared_ptr<const PoissonStructure>& S,
                                   const WordSum& w) {
    const int dim = S->dim();
    Coderivation D(ComponentFamily{dim, {d_component(dim)}});
    Coderivation Pi(ComponentFamily{dim, {pi_component(S)}});
    Coderivation Br(ComponentFamily{dim, {bracket_component(S)}});
    WordSum moved = exp_nilpotent(Pi, w, -1);
    return D.apply(moved) + Br.apply(moved);
}

namespace {

void require_closed(const DifferentialForm& w, const char* who) {
    if (!exterior_derivative(w).is_zero())
        throw std::invalid_argument(std::string(who) + ": input form is not closed");
}

// Homogeneous-piece loop for trilinear operations.
template <typename F>
DifferentialForm trilinear_over_pieces(const DifferentialForm& a1, const DifferentialForm& a2,
                                       const DifferentialForm& a3, F&& f) {
    DifferentialForm r(a1.dim());
    for (int d1 = 0; d1 <= a1.max_degree(); ++d1) {
        DifferentialForm p1 = a1.homogeneous_piece(d1);
        if (p1.is_zero()) continue;
        for (int d2 = 0; d2 <= a2.max_degree(); ++d2) {
            DifferentialForm p2 = a2.homogeneous_piece(d2);
            if (p2.is_zero()) continue;
            for (int d3 = 0; d3 <= a3.max_degree(); ++d3) {
                DifferentialForm p3 = a3.homogeneous_piece(d3);
                if (p3.is_zero()) continue;
                r = r + f(p1, d1, p2, d2, p3, d3);
            }
        }
    }
    return r;
}

}  // namespace

DifferentialForm homotopy_f2(const PoissonStructure& S, const DifferentialForm& a,
                             const DifferentialForm& b) {
    require_closed(a, "homotopy_f2");
    require_closed(b, "homotopy_f2");
    return tilde_pi(S, a, b);
}

// Signs below realize the corestriction of (1/2) Pi o Pi to length-3 words
// at form level; q_i = |a_i| - 1 are the suspended degrees. On inputs of
// even wedge degree all three coefficients are +1/2.
DifferentialForm homotopy_f3(const PoissonStructure& S, const DifferentialForm& a1,
                             const DifferentialForm& a2, const DifferentialForm& a3) {
    require_closed(a1, "homotopy_f3");
    require_closed(a2, "homotopy_f3");
    require_closed(a3, "homotopy_f3");
    return trilinear_over_pieces(
        a1, a2, a3,
        [&S](const DifferentialForm& p1, int d1, const DifferentialForm& p2, int d2,
             const DifferentialForm& p3, int d3) {
            long long q1 = d1 - 1, q2 = d2 - 1, q3 = d3 - 1;
            DifferentialForm r = tilde_pi(S, tilde_pi(S, p1, p2), p3);
            r = r + tilde_pi(S, tilde_pi(S, p1, p3), p2)
                        .scaled(Rational(parity_sign(q2 * q3 + 1)));
            r = r + tilde_pi(S, tilde_pi(S, p2, p3), p1)
                        .scaled(Rational(parity_sign(q1 * (q2 + q3))));
            return r.scaled(Rational(1, 2));
        });
}

// The trilinear bracket combination whose potential is f3: it matches the
// three-term {pi~, .} sum with the same shuffle coefficients as f3.
DifferentialForm pi3(const PoissonStructure& S, const DifferentialForm& a1,
                     const DifferentialForm& a2, const DifferentialForm& a3) {
    return trilinear_over_pieces(
        a1, a2, a3,
        [&S](const DifferentialForm& p1, int d1, const DifferentialForm& p2, int d2,
             const DifferentialForm& p3, int d3) {
            long long q1 = d1 - 1, q2 = d2 - 1, q3 = d3 - 1;
            DifferentialForm r = koszul_bracket(S, tilde_pi(S, p1, p2), p3);
            r = r + koszul_bracket(S, tilde_pi(S, p1, p3), p2)
                        .scaled(Rational(parity_sign(q2 * q3 + 1)));
            r = r + koszul_bracket(S, tilde_pi(S, p2, p3), p1)
                        .scaled(Rational(parity_sign(q1 * (q2 + q3))));
            return r;
        });
}

Component scale_component(const Component& c, const Rational& factor) {
    auto inner = c.eval;
    Component out;
    out.arity = c.arity;
    out.first_degree = c.first_degree;
    out.eval = [inner, factor](std::span<const Letter> args) {
        LetterSum v = inner(args);
        LetterSum r;
        for (const auto& [L, x] : v) {
            Rational y = x * factor;
            if (y != 0) r.emplace(L, y);
        }
        return r;
    };
    return out;
}

DefectReport linfty_defect(const ComponentFamily& family, const WordSum& w) {
    const int dim = family.dim;
    // {l, l} = sum over ordered component pairs of the degree-corrected
    // commutator (-1)^{m_i (1 - k_j)} [l_i, l_j], extended and evaluated.
    WordSum total(dim);
    for (const auto& ci : family.components) {
        for (const auto& cj : family.components) {
            Component comm = component_commutator(dim, ci, cj);
            long long e = static_cast<long long>(ci.first_degree) * (1 - cj.arity);
            Component scaled = scale_component(comm, Rational(parity_sign(e)));
            Coderivation ext(ComponentFamily{dim, {scaled}});
            total = total + ext.apply(w);
        }
    }
    return DefectReport{render_canonical(w), render_canonical(total), "0", total,
                        total.is_zero()};
}

}  // namespace symdg
