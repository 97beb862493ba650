#pragma once

#include "polyres/mpoly.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace polyres {

/// Sorted (nondecreasing) monomial multi-index, 1-based variable numbers.
using MultiIndex = std::vector<int>;

/// All sorted multi-indices of the given length over 1..nvars, in
/// lexicographic order. There are C(nvars+degree-1, degree) of them.
std::vector<MultiIndex> sorted_multi_indices(int nvars, int degree);

/// Homogeneous polynomial of fixed degree in n variables, stored per
/// monomial: coeffs[idx] multiplies x_{idx1}*...*x_{idxr} once. Coefficients
/// are MPoly values, so symbolic and numeric polynomials share one type.
class HomogeneousPoly {
public:
    HomogeneousPoly(int nvars, int degree);

    /// Generic polynomial whose every coefficient is its own Coeff symbol
    /// tagged with poly_index.
    static HomogeneousPoly symbolic(int poly_index, int nvars, int degree);

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }

    /// Validates the index (length, range, sortedness); a zero value erases.
    void set_coeff(const MultiIndex& index, MPoly value);
    const MPoly& coeff(const MultiIndex& index) const; // zero when absent
    const std::map<MultiIndex, MPoly>& coeffs() const { return coeffs_; }

    bool is_numeric() const; // every coefficient a rational constant

    /// Scales every coefficient.
    void scale(const Rational& c);

private:
    int nvars_;
    int degree_;
    std::map<MultiIndex, MPoly> coeffs_;
};

/// n homogeneous polynomials in n variables with degree vector (r_1..r_n).
class PolySystem {
public:
    explicit PolySystem(std::vector<HomogeneousPoly> polys);

    int n() const { return static_cast<int>(polys_.size()); }
    const std::vector<int>& degrees() const { return degrees_; }
    /// 0-based access; poly(i) owns the f{i+1}_* symbol alphabet.
    const HomogeneousPoly& poly(int i) const { return polys_.at(i); }
    const std::vector<HomogeneousPoly>& polys() const { return polys_; }

    bool is_numeric() const;

private:
    std::vector<HomogeneousPoly> polys_;
    std::vector<int> degrees_;
};

struct DegreeData {
    std::vector<long long> d_vec; // d_i = (prod r_j) / r_i
    long long d_total = 0;        // sum d_i
};

PolySystem build_symbolic(int n, const std::vector<int>& degrees);
DegreeData degree_data(const std::vector<int>& degrees);

/// Exact value of a numeric polynomial at a rational point. Throws
/// InputError when symbolic coefficients remain.
Rational evaluate_poly(const HomogeneousPoly& p, const std::vector<Rational>& point);

/// Numeric system built so that every polynomial vanishes at root exactly:
/// each is a seeded random rational combination of the binomials
/// x_a*m - (root_a/root_b)*x_b*m over monomials m of degree r_i - 1, with b
/// a fixed nonzero coordinate of root. Deterministic per seed.
PolySystem force_common_root(int n, const std::vector<int>& degrees,
                             const std::vector<Rational>& root, uint64_t seed);

/// Dense numeric system with small random rational coefficients.
PolySystem random_numeric_system(int n, const std::vector<int>& degrees, uint64_t seed);

// JSON interchange. Schema:
//   {"schema": 1, "n": int, "degrees": [int...],
//    "mode": "symbolic"|"numeric"|"mixed",
//    "polynomials": [{"monomials": [{"index": [int...], "coeff": "3/2"}]}]}
// Omitted monomials have coefficient zero; in symbolic mode "polynomials"
// may be omitted entirely. Coefficients are strings in the canonical
// polynomial text form (plain rationals in numeric mode). Unsorted indices
// are rejected.
PolySystem parse_system_json(const std::string& text);
std::string serialize_system_json(const PolySystem& system, int indent = 2);

} // namespace polyres
