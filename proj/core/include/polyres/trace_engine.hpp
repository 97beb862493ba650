#pragma once

#include "polyres/poly_system.hpp"

#include <map>
#include <vector>

namespace polyres {

/// n x n matrix of nonnegative derivative/entry orders: E[i][j] records how
/// many derivatives in A_{ij} the operator product takes, equivalently how
/// many times a closed walk uses the edge i -> j.
struct ExponentMatrix {
    explicit ExponentMatrix(int n) : n(n), cells(static_cast<size_t>(n) * n, 0) {}

    int n;
    std::vector<int> cells; // row-major

    int& at(int i, int j) { return cells[static_cast<size_t>(i) * n + j]; }
    int at(int i, int j) const { return cells[static_cast<size_t>(i) * n + j]; }

    int row_sum(int i) const;
    int col_sum(int j) const;
    int total() const;
};

struct TraceOptions {
    /// Refuse a trace whose predicted exponent-matrix enumeration exceeds
    /// this many candidates.
    unsigned long long budget_cap = 10'000'000;
    /// Worker count for trace-table population; entries are independent.
    int jobs = 1;
    /// Share the walk-count memo table across the exponent matrices of one
    /// trace instead of clearing it per matrix. Residual states coincide
    /// heavily between matrices, so this is a large speedup; results are
    /// identical either way (the equivalence is covered by the oracle tests).
    bool shared_walk_cache = true;
};

/// r/(r*k)!, the k-th series coefficient of the generalized shift operator.
Rational shift_coefficient(int r, int k);

/// tr A^m expanded over matrix symbols: the sum over all n^m cyclic index
/// sequences. Enumeration-scale only; refuses when n^m exceeds the cap.
MPoly trace_power(int n, int m, unsigned long long budget_cap = 10'000'000);

/// Multinomial expansion of p^k read as a polynomial in n formal row
/// variables: maps each exponent vector (sum = degree*k) to its coefficient
/// in the polynomial's own coefficient alphabet. k = 0 gives {0 -> 1}.
using RowExpansion = std::map<std::vector<int>, MPoly>;
RowExpansion row_operator_expansion(const HomogeneousPoly& p, int k);

/// Number of rooted closed walks (length-m index sequences) whose edge-usage
/// matrix is exactly E. Zero immediately when row sums and column sums
/// disagree or the support digraph is disconnected; otherwise a memoized
/// dynamic program over (residual edge counts, current vertex), summed over
/// all start vertices.
Integer walk_count(const ExponentMatrix& E);

/// The multigraded trace T_{k1..kn}:
///   [prod r_i / prod (r_i k_i)!] * (1/m) *
///       sum_E [prod_i rowcoeff_i(E row i)] * walk_count(E) * prod E_ij!
/// with m = sum r_i k_i; E ranges over matrices whose row i is drawn from
/// the i-th row operator expansion and whose column sums balance.
MPoly multigraded_trace(const PolySystem& system, const std::vector<int>& kvec,
                        const TraceOptions& options = {});

/// T_k = k * sum over all kvec with sum k of the multigraded traces.
MPoly aggregated_trace(const PolySystem& system, int k, const TraceOptions& options = {});

/// Independent small-scale oracle: literal repeated symbolic differentiation
/// of trace_power, restricted to A = 0. Hard-capped at m <= 10, n <= 3.
MPoly naive_trace_oracle(const PolySystem& system, const std::vector<int>& kvec);

/// Predicted number of exponent-matrix candidates for one trace (the
/// quantity the budget guard compares against the cap).
unsigned long long estimate_trace_enumeration(const PolySystem& system,
                                              const std::vector<int>& kvec);

/// Grading vector -> trace polynomial. Entries for distinct gradings are
/// independent pure computations; population may run on several workers.
class TraceTable {
public:
    const MPoly& at(const std::vector<int>& kvec) const;
    bool contains(const std::vector<int>& kvec) const { return entries_.count(kvec) > 0; }
    void insert(std::vector<int> kvec, MPoly value);
    const std::map<std::vector<int>, MPoly>& entries() const { return entries_; }

    /// T_k from the stored multigraded entries (all gradings with component
    /// sum k must be present).
    MPoly aggregated(int k) const;

private:
    std::map<std::vector<int>, MPoly> entries_;
};

TraceTable compute_trace_table(const PolySystem& system,
                               const std::vector<std::vector<int>>& kvecs,
                               const TraceOptions& options = {});

} // namespace polyres
