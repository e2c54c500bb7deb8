#include "symdg/render.hpp"

#include <sstream>

namespace symdg {

std::string render_monomial(const Monomial& m) {
    std::ostringstream o;
    bool any = false;
    for (int i = 1; i <= m.dim(); ++i) {
        uint32_t e = m.exp(i);
        if (e == 0) continue;
        any = true;
        o << 'x' << i;
        if (e > 1) o << '^' << e;
    }
    return any ? o.str() : std::string("1");
}

std::string render_index_bits(IndexBits bits, Basis basis) {
    std::ostringstream o;
    bool first = true;
    for (int i : bits_to_indices(bits)) {
        if (!first) o << '^';
        first = false;
        if (basis == Basis::Form) o << "dx" << i;
        else o << '@' << i;
    }
    return o.str();
}

namespace {

struct OutTerm {
    Rational coeff;
    Monomial mono;
    IndexBits bits;
};

std::string join_terms(const std::vector<OutTerm>& terms, Basis basis) {
    if (terms.empty()) return "0";
    std::ostringstream o;
    bool first = true;
    for (const auto& t : terms) {
        bool neg = t.coeff < 0;
        Rational mag = neg ? Rational(-t.coeff) : t.coeff;
        if (first) {
            if (neg) o << '-';
        } else {
            o << (neg ? " - " : " + ");
        }
        first = false;
        std::string body;
        if (t.mono.is_unit()) {
            body = to_string(mag);
        } else if (mag == 1) {
            body = render_monomial(t.mono);
        } else {
            body = to_string(mag) + "*" + render_monomial(t.mono);
        }
        o << body;
        if (t.bits != 0) o << ' ' << render_index_bits(t.bits, basis);
    }
    return o.str();
}

template <Basis B>
std::string render_graded(const GradedSum<B>& w) {
    // Bases ascend by (degree, index set); monomials descend inside a basis.
    std::vector<OutTerm> out;
    std::vector<OutTerm> group;
    auto flush = [&] {
        for (auto it = group.rbegin(); it != group.rend(); ++it) out.push_back(*it);
        group.clear();
    };
    IndexBits cur = 0;
    bool have = false;
    for (const auto& [k, c] : w.terms()) {
        if (have && k.bits != cur) flush();
        cur = k.bits;
        have = true;
        group.push_back({c, k.mono, k.bits});
    }
    flush();
    return join_terms(out, B);
}

}  // namespace

std::string render_canonical(const Polynomial& p) {
    std::vector<OutTerm> out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        out.push_back({it->second, it->first, 0});
    return join_terms(out, Basis::Form);
}

std::string render_canonical(const DifferentialForm& w) { return render_graded(w); }

std::string render_canonical(const Polyvector& v) { return render_graded(v); }

}  // namespace symdg
