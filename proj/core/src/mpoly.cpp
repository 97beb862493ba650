#include "polyres/mpoly.hpp"

#include "polyres/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace polyres {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(Symbol s, unsigned e) {
    Monomial m;
    if (e > 0) m.factors_.push_back({s, e});
    m.finish();
    return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
    Monomial m;
    m.factors_ = std::move(factors);
    m.finish();
    return m;
}

void Monomial::finish() {
    std::sort(factors_.begin(), factors_.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    size_t w = 0;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].second == 0) continue;
        if (w > 0 && factors_[w - 1].first == factors_[i].first) {
            factors_[w - 1].second += factors_[i].second;
        } else {
            factors_[w++] = factors_[i];
        }
    }
    factors_.erase(factors_.begin() + static_cast<ptrdiff_t>(w), factors_.end());

    degree_ = 0;
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& [s, e] : factors_) {
        degree_ += e;
        uint64_t x = s.raw() * 0x9ddfea08eb382d69ULL + e;
        x ^= x >> 29;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 32;
        h = h * 0x100000001b3ULL ^ x;
    }
    hash_ = static_cast<size_t>(h);
}

unsigned Monomial::exponent_of(Symbol s) const {
    for (const auto& [sym, e] : factors_)
        if (sym == s) return e;
    return 0;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial m;
    m.factors_.reserve(factors_.size() + other.factors_.size());
    size_t i = 0, j = 0;
    while (i < factors_.size() && j < other.factors_.size()) {
        if (factors_[i].first == other.factors_[j].first) {
            m.factors_.push_back({factors_[i].first, factors_[i].second + other.factors_[j].second});
            ++i, ++j;
        } else if (factors_[i].first < other.factors_[j].first) {
            m.factors_.push_back(factors_[i++]);
        } else {
            m.factors_.push_back(other.factors_[j++]);
        }
    }
    for (; i < factors_.size(); ++i) m.factors_.push_back(factors_[i]);
    for (; j < other.factors_.size(); ++j) m.factors_.push_back(other.factors_[j]);
    m.finish();
    return m;
}

Monomial Monomial::divided_by_one(Symbol s) const {
    Monomial m;
    m.factors_.reserve(factors_.size());
    for (const auto& f : factors_) {
        if (f.first == s) {
            if (f.second > 1) m.factors_.push_back({f.first, f.second - 1});
        } else {
            m.factors_.push_back(f);
        }
    }
    m.finish();
    return m;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    for (size_t i = 0; i < fa.size() && i < fb.size(); ++i) {
        if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first;
        // equal symbols: the word with more copies here is lexicographically
        // smaller (aab < abb)
        if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
    }
    return false; // equal degree and common prefix exhausted => equal
}

// ---------------------------------------------------------------------------
// MPoly arithmetic

MPoly MPoly::constant(Rational c) {
    MPoly p;
    if (c != 0) p.terms_.emplace(Monomial::unit(), std::move(c));
    return p;
}

MPoly MPoly::variable(Symbol s) {
    MPoly p;
    p.terms_.emplace(Monomial::of(s), Rational(1));
    return p;
}

MPoly MPoly::term(Monomial m, Rational c) {
    MPoly p;
    if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational MPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Symbol> MPoly::symbols() const {
    std::set<Symbol> seen;
    for (const auto& [m, c] : terms_)
        for (const auto& [s, e] : m.factors()) seen.insert(s);
    return {seen.begin(), seen.end()};
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly out = *this;
    out += o;
    return out;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly out = *this;
    out -= o;
    return out;
}

MPoly MPoly::operator-() const {
    MPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly out;
    out.add_product(*this, o, Rational(1));
    return out;
}

MPoly& MPoly::operator*=(const MPoly& o) {
    *this = *this * o;
    return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

void MPoly::add_product(const MPoly& a, const MPoly& b, const Rational& scale) {
    if (scale == 0 || a.is_zero() || b.is_zero()) return;
    if (&a == this) {
        MPoly detached = a;
        add_product(detached, b, scale);
        return;
    }
    if (&b == this) {
        MPoly detached = b;
        add_product(a, detached, scale);
        return;
    }
    const MPoly& outer = a.terms_.size() <= b.terms_.size() ? a : b;
    const MPoly& inner = a.terms_.size() <= b.terms_.size() ? b : a;
    Rational c;
    for (const auto& [ma, ca] : outer.terms_) {
        c = ca * scale;
        for (const auto& [mb, cb] : inner.terms_) add_term(ma.times(mb), c * cb);
    }
}

void MPoly::add_scaled(const MPoly& a, const Rational& scale) {
    if (scale == 0) return;
    if (&a == this) {
        MPoly detached = a;
        add_scaled(detached, scale);
        return;
    }
    for (const auto& [m, c] : a.terms_) add_term(m, c * scale);
}

MPoly MPoly::pow(long e) const {
    if (e < 0) throw InputError("polynomial power: negative exponent rejected");
    MPoly result = constant(Rational(1));
    if (e == 0) return result;
    MPoly base = *this;
    while (true) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e == 0) break;
        base *= base;
    }
    return result;
}

MPoly MPoly::derivative(Symbol s) const {
    MPoly out;
    for (const auto& [m, c] : terms_) {
        unsigned e = m.exponent_of(s);
        if (e == 0) continue;
        out.add_term(m.divided_by_one(s), c * e);
    }
    return out;
}

MPoly MPoly::evaluate(const std::map<Symbol, MPoly>& assignment) const {
    MPoly out;
    for (const auto& [m, c] : terms_) {
        MPoly acc = constant(c);
        std::vector<Monomial::Factor> residual;
        for (const auto& [s, e] : m.factors()) {
            auto it = assignment.find(s);
            if (it == assignment.end()) {
                residual.push_back({s, e});
            } else {
                acc *= it->second.pow(e);
                if (acc.is_zero()) break;
            }
        }
        if (acc.is_zero()) continue;
        if (!residual.empty()) acc *= term(Monomial::from_factors(std::move(residual)), Rational(1));
        out += acc;
    }
    return out;
}

MPoly MPoly::graded_component(const std::map<Symbol, std::vector<int>>& weights,
                              const std::vector<int>& target) const {
    MPoly out;
    std::vector<long long> acc(target.size());
    for (const auto& [m, c] : terms_) {
        std::fill(acc.begin(), acc.end(), 0);
        for (const auto& [s, e] : m.factors()) {
            auto it = weights.find(s);
            if (it == weights.end())
                throw InputError("graded_component: symbol '" + s.name() + "' has no weight");
            if (it->second.size() != target.size())
                throw InputError("graded_component: weight dimension mismatch for '" + s.name() + "'");
            for (size_t i = 0; i < acc.size(); ++i)
                acc[i] += static_cast<long long>(e) * it->second[i];
        }
        bool match = true;
        for (size_t i = 0; i < acc.size(); ++i) match = match && acc[i] == target[i];
        if (match) out.add_term(m, c);
    }
    return out;
}

bool operator==(const MPoly& a, const MPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [m, c] : a.terms_) {
        auto it = b.terms_.find(m);
        if (it == b.terms_.end() || it->second != c) return false;
    }
    return true;
}

std::vector<std::pair<Monomial, Rational>> MPoly::sorted_terms() const {
    std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    return out;
}

// ---------------------------------------------------------------------------
// Canonical text form
//
//   poly   := "0" | [ "-" ] term { ("+" | "-") term }
//   term   := rational [ "*" factors ] | factors
//   factors:= factor { "*" factor }
//   factor := symbol [ "^" integer ]
//   rational := integer [ "/" integer ]
//
// Printing emits terms in canonical order, omits unit coefficients and unit
// exponents, and renders rationals as p/q.

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : sorted_terms()) {
        bool negative = c < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        Rational a = negative ? Rational(-c) : c;
        if (m.is_unit()) {
            out += polyres::to_string(a);
            continue;
        }
        bool need_star = false;
        if (a != 1) {
            out += polyres::to_string(a);
            need_star = true;
        }
        for (const auto& [s, e] : m.factors()) {
            if (need_star) out += "*";
            out += s.name();
            if (e > 1) out += "^" + std::to_string(e);
            need_star = true;
        }
    }
    return out;
}

namespace {

struct Lexer {
    const std::string& s;
    size_t i = 0;

    explicit Lexer(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    std::string integer() {
        skip_ws();
        std::string out;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out += s[i++];
        if (out.empty()) throw InputError("polynomial parse: expected an integer at offset " + std::to_string(i));
        return out;
    }

    std::string symbol_token() {
        skip_ws();
        std::string out;
        out += s[i++]; // leading letter, already validated by caller
        while (i < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '_'))
            out += s[i++];
        return out;
    }
};

} // namespace

MPoly MPoly::parse(const std::string& text) {
    Lexer lx(text);
    MPoly out;
    if (lx.done()) throw InputError("polynomial parse: empty input");

    bool first = true;
    while (!lx.done()) {
        int sign = 1;
        if (lx.eat('-')) {
            sign = -1;
        } else if (lx.eat('+')) {
            // explicit plus
        } else if (!first) {
            throw InputError("polynomial parse: expected '+' or '-' at offset " + std::to_string(lx.i));
        }
        first = false;

        Rational coef(sign);
        Monomial mono = Monomial::unit();
        bool expect_factor = true;
        while (expect_factor) {
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num = lx.integer();
                std::string lit = num;
                if (lx.eat('/')) lit += "/" + lx.integer();
                coef *= parse_rational(lit);
            } else if (c == 'f' || c == 'A' || c == 't') {
                Symbol sym = Symbol::parse(lx.symbol_token());
                unsigned long e = 1;
                if (lx.eat('^')) {
                    std::string num = lx.integer();
                    if (num.size() > 6) throw InputError("polynomial parse: exponent too large");
                    e = std::stoul(num);
                }
                mono = mono.times(Monomial::of(sym, static_cast<unsigned>(e)));
            } else {
                throw InputError("polynomial parse: unexpected character at offset " + std::to_string(lx.i));
            }
            expect_factor = lx.eat('*');
        }
        out.add_term(mono, coef);
    }
    return out;
}

} // namespace polyres
