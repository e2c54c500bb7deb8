#pragma once

#include <memory>

#include "symdg/coalgebra.hpp"
#include "symdg/poisson.hpp"

namespace symdg {

// Letters suspend basis forms: s(a) for the single-term form a. Components
// below follow the suspension conventions
//   d~ s(a) = -s(da),  i~_X s(a) = -s(i_X a),  L~_X s(a) = s(L_X a),
//   m(s(a)^s(b)) = (-1)^{|a|} s(a^b),
//   pi~~(s(a)^s(b)) = (-1)^{|a|} s(pi~(a,b)),
//   s{}(s(a)^s(b)) = s({a,b}).
DifferentialForm form_of_letter(int dim, const Letter& L);
LetterSum letterize(const DifferentialForm& w);
DifferentialForm unsuspend(int dim, const LetterSum& v);

// Projects the length-1 part of a word sum back to a form.
DifferentialForm unsuspend_words(const WordSum& w);

WordSum suspend_form(const DifferentialForm& w);  // a single-letter word sum

Component d_component(int dim);
Component lie_component(const Polyvector& X);
Component contraction_component(const Polyvector& X);
Component multiplication_component(int dim);
Component pi_component(std::shared_ptr<const PoissonStructure> S);
Component bracket_component(std::shared_ptr<const PoissonStructure> S);

struct OperatorKind {
    enum class Tag { D, Lie, Contraction, Multiplication, Pi, BracketExtension } tag;
    int dim = 0;
    Polyvector field{1};  // for Lie / Contraction
    std::shared_ptr<const PoissonStructure> structure;  // for Pi / BracketExtension
};

Coderivation make_coderivation(const OperatorKind& kind);

// Exact exponential sum(sign^r C^r / r!) of a strictly length-lowering
// operator; throws when a component of arity < 2 would make the series
// infinite. barred selects the skewed action of C.
WordSum exp_nilpotent(const Coderivation& C, const WordSum& w, int sign, bool barred = false);

struct DefectReport {
    std::string word;
    std::string lhs;
    std::string rhs;
    WordSum defect;
    bool zero;
};

enum class TheoremVariant { Plain, Skewed };

// Plain:  e^Pi o D o e^Pi  vs  D + bracket extension.
// Skewed: e^{Pi-} o D- o e^{-Pi-}  vs  D- + bracket extension.
DefectReport main_theorem_defect(const std::shared_ptr<const PoissonStructure>& S,
                                 const WordSum& w, TheoremVariant variant);

// (D + bracket extension) applied to e^{-Pi} w; zero on words of closed
// letters over a Poisson structure.
WordSum formality_mechanism_defect(const std::shared_ptr<const PoissonStructure>& S,
                                   const WordSum& w);

// Homotopy stages at form level. f2 and f3 require closed inputs.
DifferentialForm homotopy_f2(const PoissonStructure& S, const DifferentialForm& a,
                             const DifferentialForm& b);
DifferentialForm homotopy_f3(const PoissonStructure& S, const DifferentialForm& a1,
                             const DifferentialForm& a2, const DifferentialForm& a3);
DifferentialForm pi3(const PoissonStructure& S, const DifferentialForm& a1,
                     const DifferentialForm& a2, const DifferentialForm& a3);

// {l, l}(w) for a component family, via commutators of components and the
// extension; zero for the Lie family (d-component + bracket component) of a
// Poisson structure.
DefectReport linfty_defect(const ComponentFamily& family, const WordSum& w);

Component scale_component(const Component& c, const Rational& factor);

}  // namespace symdg
