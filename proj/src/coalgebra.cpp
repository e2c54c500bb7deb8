#include "symdg/coalgebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "symdg/render.hpp"

namespace symdg {

bool normalize_letters(Word& letters, Rational& coeff) {
    // Insertion sort with adjacent transpositions; each swap of letters of
    // suspended degrees p, q contributes (-1)^{pq+1}.
    const size_t n = letters.size();
    int exponent = 0;
    for (size_t i = 1; i < n; ++i) {
        size_t j = i;
        while (j > 0 && letters[j] < letters[j - 1]) {
            exponent += transposition_exponent(letters[j], letters[j - 1]);
            std::swap(letters[j], letters[j - 1]);
            --j;
        }
    }
    for (size_t i = 1; i < n; ++i) {
        if (letters[i] == letters[i - 1] && letters[i].parity() == 0) return false;
    }
    if (exponent & 1) coeff = -coeff;
    return true;
}

void WordSum::add(Word letters, Rational coeff) {
    if (coeff == 0) return;
    for (const auto& L : letters) {
        if (L.mono.dim() != dim_) throw DimensionMismatch("WordSum: letter dimension mismatch");
        if (L.bits >> dim_) throw std::out_of_range("WordSum: wedge index exceeds dimension");
    }
    if (!normalize_letters(letters, coeff)) return;
    auto it = terms_.find(letters);
    if (it == terms_.end()) {
        terms_.emplace(std::move(letters), std::move(coeff));
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

WordSum WordSum::operator+(const WordSum& o) const {
    if (o.dim_ != dim_) throw DimensionMismatch("WordSum: dimension mismatch");
    WordSum r(*this);
    for (const auto& [w, c] : o.terms_) r.add(w, c);
    return r;
}

WordSum WordSum::operator-(const WordSum& o) const {
    if (o.dim_ != dim_) throw DimensionMismatch("WordSum: dimension mismatch");
    WordSum r(*this);
    for (const auto& [w, c] : o.terms_) r.add(w, -c);
    return r;
}

WordSum WordSum::scaled(const Rational& c) const {
    WordSum r(dim_);
    if (c == 0) return r;
    for (const auto& [w, v] : terms_) r.add(w, v * c);
    return r;
}

WordSum normalize_word(int dim, const Word& letters, const Rational& coeff) {
    if (letters.empty())
        throw std::invalid_argument("normalize_word: the empty word is not an element");
    WordSum r(dim);
    r.add(letters, coeff);
    return r;
}

int twisted_permutation_sign(std::span<const int> perm, std::span<const Letter> letters) {
    int exponent = 0;
    for (size_t u = 0; u < perm.size(); ++u) {
        for (size_t v = u + 1; v < perm.size(); ++v) {
            if (perm[u] > perm[v])
                exponent += transposition_exponent(letters[static_cast<size_t>(perm[u])],
                                                   letters[static_cast<size_t>(perm[v])]);
        }
    }
    return (exponent & 1) ? -1 : 1;
}

TensorSum comultiplication(const WordSum& ws) {
    TensorSum out(ws.dim());
    for (const auto& [w, c] : ws.terms()) {
        const int n = word_length(w);
        if (n < 2) continue;  // primitive
        const uint32_t full = (uint32_t(1) << n) - 1;
        for (uint32_t mask = 1; mask < full; ++mask) {
            int k = std::popcount(mask);
            int l = n - k;
            Word left, right;
            int exponent = k * l;
            for (int u = 0; u < n; ++u) {
                if (mask & (uint32_t(1) << u)) {
                    left.push_back(w[static_cast<size_t>(u)]);
                } else {
                    // Every chosen letter after position u jumps over w[u].
                    for (int v = u + 1; v < n; ++v)
                        if (mask & (uint32_t(1) << v))
                            exponent += transposition_exponent(w[static_cast<size_t>(v)],
                                                               w[static_cast<size_t>(u)]);
                    right.push_back(w[static_cast<size_t>(u)]);
                }
            }
            Rational coeff = (exponent & 1) ? -c : c;
            out.add(left, right, coeff);
        }
    }
    return out;
}

namespace {

std::vector<int> identity_perm(int n) {
    std::vector<int> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

}  // namespace

WordSum Coderivation::apply(const WordSum& ws) const {
    WordSum out(fam_.dim);
    for (const auto& [w, c] : ws.terms()) {
        const int n = word_length(w);
        for (const auto& comp : fam_.components) {
            const int k = comp.arity;
            if (k > n) continue;
            Rational factor = Rational(1) / Rational(factorial(static_cast<unsigned>(k)) *
                                                     factorial(static_cast<unsigned>(n - k)));
            auto perm = identity_perm(n);
            std::sort(perm.begin(), perm.end());
            do {
                int sign = twisted_permutation_sign(perm, w);
                Word head(static_cast<size_t>(k), Letter{Monomial(fam_.dim), 0});
                for (int u = 0; u < k; ++u) head[static_cast<size_t>(u)] = w[static_cast<size_t>(perm[static_cast<size_t>(u)])];
                LetterSum value = comp.eval(head);
                if (value.empty()) continue;
                Word tail;
                for (int u = k; u < n; ++u) tail.push_back(w[static_cast<size_t>(perm[static_cast<size_t>(u)])]);
                for (const auto& [b, cb] : value) {
                    Word result;
                    result.reserve(tail.size() + 1);
                    result.push_back(b);
                    result.insert(result.end(), tail.begin(), tail.end());
                    out.add(std::move(result), c * factor * cb * sign);
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    return out;
}

WordSum Coderivation::apply_bar(const WordSum& ws) const {
    WordSum out(fam_.dim);
    for (const auto& [w, c] : ws.terms()) {
        WordSum single(fam_.dim);
        single.add(w, c);
        const int n = word_length(w);
        for (const auto& comp : fam_.components) {
            Coderivation one(ComponentFamily{fam_.dim, {comp}});
            int s = parity_sign(static_cast<long long>(comp.first_degree) * n);
            out = out + one.apply(single).scaled(Rational(s));
        }
    }
    return out;
}

bool Coderivation::strictly_lowers_length() const {
    for (const auto& comp : fam_.components)
        if (comp.arity < 2) return false;
    return true;
}

Component component_commutator(int dim, const Component& phi, const Component& psi) {
    const int k = phi.arity, l = psi.arity;
    const int arity = k + l - 1;
    const int eps = (phi.first_degree * psi.first_degree + (k - 1) * (l - 1)) & 1;
    auto phi_eval = phi.eval, psi_eval = psi.eval;

    Component out;
    out.arity = arity;
    out.first_degree = phi.first_degree + psi.first_degree;
    out.eval = [dim, k, l, eps, phi_eval, psi_eval](std::span<const Letter> args) {
        const int n = static_cast<int>(args.size());
        LetterSum acc;
        auto accumulate = [&acc](const LetterSum& v, const Rational& c) {
            for (const auto& [b, cb] : v) {
                Rational x = cb * c;
                if (x == 0) continue;
                auto it = acc.find(b);
                if (it == acc.end()) acc.emplace(b, x);
                else {
                    it->second += x;
                    if (it->second == 0) acc.erase(it);
                }
            }
        };

        Rational f1 = Rational(1) / Rational(factorial(static_cast<unsigned>(l)) *
                                             factorial(static_cast<unsigned>(k - 1)));
        Rational f2 = Rational(1) / Rational(factorial(static_cast<unsigned>(l - 1)) *
                                             factorial(static_cast<unsigned>(k)));
        (void)dim;
        auto perm = identity_perm(n);
        do {
            int sign = twisted_permutation_sign(perm, args);
            // phi(psi(first l) ^ rest)
            {
                Word inner;
                for (int u = 0; u < l; ++u) inner.push_back(args[static_cast<size_t>(perm[static_cast<size_t>(u)])]);
                LetterSum mid = psi_eval(inner);
                for (const auto& [b, cb] : mid) {
                    Word outer;
                    outer.push_back(b);
                    for (int u = l; u < n; ++u) outer.push_back(args[static_cast<size_t>(perm[static_cast<size_t>(u)])]);
                    accumulate(phi_eval(outer), f1 * cb * sign);
                }
            }
            // psi(phi(first k) ^ rest)
            {
                Word inner;
                for (int u = 0; u < k; ++u) inner.push_back(args[static_cast<size_t>(perm[static_cast<size_t>(u)])]);
                LetterSum mid = phi_eval(inner);
                for (const auto& [b, cb] : mid) {
                    Word outer;
                    outer.push_back(b);
                    for (int u = k; u < n; ++u) outer.push_back(args[static_cast<size_t>(perm[static_cast<size_t>(u)])]);
                    int s2 = (eps & 1) ? -1 : 1;
                    accumulate(psi_eval(outer), f2 * cb * sign * Rational(-s2));
                }
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return acc;
    };
    return out;
}

Component cup_product(int dim, const Component& phi, const Component& psi) {
    const int k = phi.arity, l = psi.arity;
    const int mphi = phi.first_degree, mpsi = psi.first_degree;
    auto phi_eval = phi.eval, psi_eval = psi.eval;

    Component out;
    out.arity = k + l;
    out.first_degree = mphi + mpsi + 1;
    out.eval = [dim, k, l, mphi, mpsi, phi_eval, psi_eval](std::span<const Letter> args) {
        const int n = static_cast<int>(args.size());
        LetterSum acc;
        Rational factor = Rational(1) / Rational(factorial(static_cast<unsigned>(k)) *
                                                 factorial(static_cast<unsigned>(l)));
        auto perm = identity_perm(n);
        do {
            long long exponent = 0;
            int tw = twisted_permutation_sign(perm, args);
            for (int u = 0; u < k; ++u)
                exponent += args[static_cast<size_t>(perm[static_cast<size_t>(u)])].suspended_degree();
            exponent *= (mpsi + 1);
            exponent += static_cast<long long>(k - 1) * (l - 1) + mphi;
            int sign = tw * parity_sign(exponent);

            Word first, second;
            for (int u = 0; u < k; ++u) first.push_back(args[static_cast<size_t>(perm[static_cast<size_t>(u)])]);
            for (int u = k; u < n; ++u) second.push_back(args[static_cast<size_t>(perm[static_cast<size_t>(u)])]);
            LetterSum lv = phi_eval(first);
            if (lv.empty()) continue;
            LetterSum rv = psi_eval(second);
            for (const auto& [x, cx] : lv) {
                for (const auto& [y, cy] : rv) {
                    if (x.bits & y.bits) continue;
                    int ms = merge_sign(x.bits, y.bits);
                    Letter prod{x.mono.times(y.mono), x.bits | y.bits};
                    Rational c = cx * cy * factor * sign * ms;
                    if (c == 0) continue;
                    auto it = acc.find(prod);
                    if (it == acc.end()) acc.emplace(prod, c);
                    else {
                        it->second += c;
                        if (it->second == 0) acc.erase(it);
                    }
                }
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        (void)dim;
        return acc;
    };
    return out;
}

WordSum bigraded_commutator_apply(const Coderivation& c1, const Coderivation& c2,
                                  const WordSum& w) {
    if (c1.family().components.size() != 1 || c2.family().components.size() != 1)
        throw std::invalid_argument("bigraded_commutator_apply: single-component operators only");
    const auto& a = c1.family().components.front();
    const auto& b = c2.family().components.front();
    long long m1 = a.first_degree, m2 = b.first_degree;
    long long s1 = 1 - a.arity, s2 = 1 - b.arity;
    int sign = parity_sign(m1 * m2 + s1 * s2);
    return c1.apply(c2.apply(w)) - c2.apply(c1.apply(w)).scaled(Rational(sign));
}

std::string render_word(const Word& w) {
    std::ostringstream o;
    bool first = true;
    for (const auto& L : w) {
        if (!first) o << " ^ ";
        first = false;
        o << "s(";
        std::string body = render_monomial(L.mono);
        if (L.bits == 0) {
            o << body;
        } else {
            if (body != "1") o << body << ' ';
            o << render_index_bits(L.bits, Basis::Form);
        }
        o << ')';
    }
    return o.str();
}

std::string render_canonical(const WordSum& ws) {
    if (ws.is_zero()) return "0";
    std::ostringstream o;
    bool first = true;
    for (const auto& [w, c] : ws.terms()) {
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) o << '-';
        } else {
            o << (neg ? " - " : " + ");
        }
        first = false;
        if (mag != 1) o << to_string(mag) << ' ';
        o << render_word(w);
    }
    return o.str();
}

}  // namespace symdg
