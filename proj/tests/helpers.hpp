#pragma once

#include "polyres/mpoly.hpp"
#include "polyres/poly_system.hpp"

#include <random>
#include <vector>

namespace polyres::testing {

inline MPoly P(const std::string& text) { return MPoly::parse(text); }

inline Symbol fsym(int poly, std::initializer_list<int> idx) {
    return Symbol::coeff(poly, std::vector<int>(idx));
}

inline Symbol asym(int r, int c) { return Symbol::matrix(r, c); }

inline Symbol tsym(std::initializer_list<int> grading) {
    return Symbol::tvar(std::vector<int>(grading));
}

inline Rational rnd_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

/// Small random polynomial over a mixed symbol pool; exercises all three
/// namespaces.
inline MPoly rnd_poly(std::mt19937_64& rng, int max_terms = 5) {
    static const std::vector<Symbol> pool = {
        Symbol::coeff(1, {1}),    Symbol::coeff(1, {2}),    Symbol::coeff(2, {1, 2}),
        Symbol::matrix(1, 1),     Symbol::matrix(2, 1),     Symbol::tvar({1}),
        Symbol::tvar({2, 1}),
    };
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> nfac(0, 3);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> expo(1, 3);

    MPoly out;
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        std::vector<Monomial::Factor> factors;
        int f = nfac(rng);
        for (int i = 0; i < f; ++i)
            factors.push_back({pool[pick(rng)], static_cast<unsigned>(expo(rng))});
        out.add_term(Monomial::from_factors(std::move(factors)), rnd_rational(rng));
    }
    return out;
}

} // namespace polyres::testing
