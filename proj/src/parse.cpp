#include "symdg/parse.hpp"

#include <cctype>

namespace symdg {

namespace {

enum class TermKind { Scalar, Form, Vector };

struct ParsedTerm {
    Rational coeff;
    Monomial mono;
    TermKind kind;
    IndexBits bits;
};

class Parser {
public:
    Parser(const std::string& text, int dim) : s_(text), dim_(dim) {
        if (dim < 1 || dim > 32) throw ParseError("dimension out of range", 0);
    }

    std::vector<ParsedTerm> run() {
        std::vector<ParsedTerm> terms;
        skip_ws();
        if (eof()) throw ParseError("empty expression", pos_);
        int sign = consume_sign_opt();
        terms.push_back(term(sign));
        skip_ws();
        while (!eof()) {
            char c = peek();
            int s;
            if (c == '+') s = 1;
            else if (c == '-') s = -1;
            else throw ParseError(std::string("unexpected character '") + c + "'", pos_);
            ++pos_;
            skip_ws();
            terms.push_back(term(s));
            skip_ws();
        }
        return terms;
    }

private:
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool lookahead(const char* lit) const {
        size_t p = pos_;
        for (const char* q = lit; *q; ++q, ++p)
            if (p >= s_.size() || s_[p] != *q) return false;
        return true;
    }

    int consume_sign_opt() {
        if (!eof() && peek() == '-') {
            ++pos_;
            skip_ws();
            return -1;
        }
        return 1;
    }

    uint64_t integer() {
        skip_ws();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected a number", pos_);
        uint64_t v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<uint64_t>(peek() - '0');
            if (v > (1ull << 62)) throw ParseError("number literal too large", pos_);
            ++pos_;
        }
        return v;
    }

    int index() {
        size_t at = pos_;
        uint64_t v = integer();
        if (v < 1 || static_cast<int>(v) > dim_)
            throw ParseError("coordinate index out of range for dimension " +
                                 std::to_string(dim_),
                             at);
        return static_cast<int>(v);
    }

    Rational rational() {
        uint64_t num = integer();
        skip_ws();
        if (!eof() && peek() == '/') {
            ++pos_;
            size_t at = pos_;
            uint64_t den = integer();
            if (den == 0) throw ParseError("zero denominator", at);
            return Rational(Integer(num), Integer(den));
        }
        return Rational(num);
    }

    bool at_monom() const { return !eof() && peek() == 'x'; }
    bool at_form_basis() const { return lookahead("dx"); }
    bool at_vec_basis() const { return !eof() && peek() == '@'; }

    void monom_into(Monomial& m) {
        ++pos_;  // 'x'
        int i = index();
        uint32_t e = 1;
        skip_ws();
        if (!eof() && peek() == '^') {
            ++pos_;
            size_t at = pos_;
            uint64_t v = integer();
            if (v > 64) throw ParseError("exponent too large", at);
            e = static_cast<uint32_t>(v);
        }
        m.set_exp(i, m.exp(i) + e);
    }

    // Wedge list of basis indices in written order; the inversion sign is
    // absorbed, a repeated index zeroes the term.
    std::pair<IndexBits, int> wedge_list(bool form) {
        std::vector<int> order;
        while (true) {
            if (form) pos_ += 2;  // 'dx'
            else ++pos_;          // '@'
            order.push_back(index());
            skip_ws();
            size_t save = pos_;
            if (!eof() && peek() == '^') {
                ++pos_;
                skip_ws();
                if (form && at_form_basis()) continue;
                if (!form && at_vec_basis()) continue;
                pos_ = save;  // '^' belongs to something else; stop
            }
            break;
        }
        IndexBits bits = 0;
        int inversions = 0;
        for (size_t a = 0; a < order.size(); ++a) {
            for (size_t b = a + 1; b < order.size(); ++b) {
                if (order[a] == order[b]) return {0, 0};  // repeated factor
                if (order[a] > order[b]) ++inversions;
            }
            bits |= bit_of(order[a]);
        }
        return {bits, (inversions & 1) ? -1 : 1};
    }

    ParsedTerm term(int sign) {
        skip_ws();
        if (eof()) throw ParseError("expected a term", pos_);
        Rational c(sign);
        Monomial m(dim_);
        bool have_coeff = false;
        if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            c *= rational();
            have_coeff = true;
            skip_ws();
            if (!eof() && peek() == '*') {
                ++pos_;
                skip_ws();
                if (!at_monom()) throw ParseError("expected a monomial after '*'", pos_);
            }
        }
        while (at_monom()) {
            monom_into(m);
            have_coeff = true;
            skip_ws();
            if (!eof() && peek() == '*') {
                size_t save = pos_;
                ++pos_;
                skip_ws();
                if (!at_monom()) { pos_ = save; break; }
            }
        }
        skip_ws();
        if (at_form_basis()) {
            auto [bits, s] = wedge_list(true);
            return {c * s, m, TermKind::Form, bits};
        }
        if (at_vec_basis()) {
            auto [bits, s] = wedge_list(false);
            return {c * s, m, TermKind::Vector, bits};
        }
        if (!have_coeff) throw ParseError("expected a term", pos_);
        return {c, m, TermKind::Scalar, 0};
    }

    const std::string& s_;
    int dim_;
    size_t pos_ = 0;
};

}  // namespace

ParsedValue parse_expression(const std::string& text, int dim) {
    Parser p(text, dim);
    auto terms = p.run();
    bool any_form = false, any_vec = false;
    for (const auto& t : terms) {
        // A wedge term that vanished by a repeated index still fixes the kind.
        any_form |= (t.kind == TermKind::Form);
        any_vec |= (t.kind == TermKind::Vector);
    }
    if (any_form && any_vec)
        throw ParseError("expression mixes form and vector basis factors", 0);
    if (any_form) {
        DifferentialForm w(dim);
        for (const auto& t : terms) w.add_term(t.mono, t.bits, t.coeff);
        return w;
    }
    if (any_vec) {
        Polyvector v(dim);
        for (const auto& t : terms) v.add_term(t.mono, t.bits, t.coeff);
        return v;
    }
    Polynomial poly(dim);
    for (const auto& t : terms) poly.add_term(t.mono, t.coeff);
    return poly;
}

Polynomial parse_polynomial(const std::string& text, int dim) {
    auto v = parse_expression(text, dim);
    if (auto* p = std::get_if<Polynomial>(&v)) return *p;
    throw ParseError("expected a polynomial expression", 0);
}

DifferentialForm parse_form(const std::string& text, int dim) {
    auto v = parse_expression(text, dim);
    if (auto* w = std::get_if<DifferentialForm>(&v)) return *w;
    if (auto* p = std::get_if<Polynomial>(&v)) return DifferentialForm::from_polynomial(*p);
    throw ParseError("expected a differential form expression", 0);
}

Polyvector parse_polyvector(const std::string& text, int dim) {
    auto v = parse_expression(text, dim);
    if (auto* w = std::get_if<Polyvector>(&v)) return *w;
    if (auto* p = std::get_if<Polynomial>(&v)) return Polyvector::from_polynomial(*p);
    throw ParseError("expected a polyvector expression", 0);
}

}  // namespace symdg
