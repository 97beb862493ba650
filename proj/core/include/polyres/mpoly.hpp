#pragma once

#include "polyres/rational.hpp"
#include "polyres/symbol.hpp"

#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace polyres {

/// Product of symbol powers. Factors are kept sorted by symbol with no zero
/// exponents, so equal monomials have identical representations. Immutable
/// after construction; the hash is precomputed.
class Monomial {
public:
    using Factor = std::pair<Symbol, unsigned>;

    Monomial() = default; // the unit monomial

    static Monomial unit() { return Monomial(); }
    static Monomial of(Symbol s, unsigned e = 1);
    /// Sorts, merges duplicates, drops zero exponents.
    static Monomial from_factors(std::vector<Factor> factors);

    bool is_unit() const { return factors_.empty(); }
    unsigned long total_degree() const { return degree_; }
    const std::vector<Factor>& factors() const { return factors_; }
    unsigned exponent_of(Symbol s) const;

    Monomial times(const Monomial& other) const;
    /// Lowers the exponent of s by one. Pre: exponent_of(s) >= 1.
    Monomial divided_by_one(Symbol s) const;

    size_t hash() const { return hash_; }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.hash_ == b.hash_ && a.factors_ == b.factors_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    void finish(); // sorts/merges factors_, computes degree_ and hash_

    std::vector<Factor> factors_;
    unsigned long degree_ = 0;
    size_t hash_ = 0x9e3779b97f4a7c15ULL;
};

/// Graded order used for canonical printing and serialization: lower total
/// degree first; within a degree, the lexicographically smaller word of
/// symbols (with multiplicity) comes first.
bool canonical_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
    size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Exact sparse multivariate polynomial over arbitrary-precision rationals.
/// No zero coefficients are stored; equal polynomials have equal canonical
/// forms. Values are immutable in spirit: arithmetic returns new values and
/// the engines share MPoly instances read-only across threads.
class MPoly {
public:
    MPoly() = default; // zero

    static MPoly zero() { return MPoly(); }
    static MPoly constant(Rational c);
    static MPoly variable(Symbol s);
    static MPoly term(Monomial m, Rational c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    size_t term_count() const { return terms_.size(); }

    /// Coefficient of m, zero if absent.
    Rational coeff(const Monomial& m) const;
    Rational constant_term() const { return coeff(Monomial::unit()); }

    /// All distinct symbols occurring in the polynomial, sorted.
    std::vector<Symbol> symbols() const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator-() const;
    MPoly operator*(const MPoly& o) const;
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const Rational& c);
    MPoly pow(long e) const; // negative exponents are rejected

    /// this += a * b * scale, without materializing the product.
    void add_product(const MPoly& a, const MPoly& b, const Rational& scale);
    /// this += a * scale.
    void add_scaled(const MPoly& a, const Rational& scale);
    void add_term(const Monomial& m, const Rational& c);

    MPoly derivative(Symbol s) const;

    /// Substitutes the given symbols; unassigned symbols stay symbolic.
    MPoly evaluate(const std::map<Symbol, MPoly>& assignment) const;

    /// Sum of the terms whose weighted multidegree equals target. Every
    /// symbol occurring in the polynomial must have a weight of the same
    /// dimension as target.
    MPoly graded_component(const std::map<Symbol, std::vector<int>>& weights,
                           const std::vector<int>& target) const;

    /// Terms in canonical order.
    std::vector<std::pair<Monomial, Rational>> sorted_terms() const;

    /// Canonical text form, e.g. "t3 + t1*t2 + 1/6*t1^3"; "0" for zero.
    std::string to_string() const;
    /// Inverse of to_string(); also accepts unnormalized sums of terms.
    static MPoly parse(const std::string& text);

    friend bool operator==(const MPoly& a, const MPoly& b);
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

private:
    std::unordered_map<Monomial, Rational, MonomialHash> terms_;
};

inline MPoly operator*(const Rational& c, const MPoly& p) {
    MPoly out = p;
    out *= c;
    return out;
}

} // namespace polyres
