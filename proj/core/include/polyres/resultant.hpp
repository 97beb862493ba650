#pragma once

#include "polyres/schur.hpp"
#include "polyres/trace_engine.hpp"

#include <map>
#include <vector>

namespace polyres {

enum class GradingMode {
    Single, // R = (-1)^d P_d{ t_k := -T_k/k }, needs all gradings with sum <= d
    Multi,  // R = (-1)^(sum d_i) P_dvec{ t_kvec := -T_kvec }, needs kvec <= dvec
};

struct BudgetReport {
    unsigned long long max_enumeration = 0; // largest predicted E enumeration
    unsigned long long cap = 0;
    size_t traces_computed = 0;
};

struct ResultantResult {
    MPoly value;
    DegreeData degrees;
    GradingMode mode = GradingMode::Multi;
    size_t term_count = 0;
    BudgetReport budget;
};

/// Assembles the resultant of the system from its trace table. Multi mode is
/// the default: it needs only the componentwise box of gradings and runs
/// faster; both modes agree exactly.
ResultantResult resultant(const PolySystem& system, GradingMode mode = GradingMode::Multi,
                          const TraceOptions& options = {});

/// Components of exp(-sum of traces) by total degree in the coefficients, up
/// to the requested depth. Component 0 is 1; components above the resultant
/// degree d vanish identically; component d is (-1)^d times the resultant.
std::map<int, MPoly> deformed_expansion(const PolySystem& system, int depth,
                                        const TraceOptions& options = {});

/// The full inhomogeneous polynomial obtained by deforming the diagonal map:
/// the sum of all deformed_expansion components up to degree d.
MPoly deformed_resultant(const PolySystem& system, const TraceOptions& options = {});

/// Determinant through the trace formula
///   sum_m (-1)^(m+n)/m! sum_{k_1+..+k_m=n} prod tr(M^{k_j})/k_j,
/// exact on any square MPoly matrix; equals the Leibniz determinant.
MPoly determinant_special(const std::vector<std::vector<MPoly>>& matrix);

/// Classical (r1+r2) x (r1+r2) Sylvester-matrix resultant of two binary
/// forms; the independent n = 2 oracle. Matches resultant() up to a global
/// sign recorded per degree pair.
MPoly sylvester_resultant(const HomogeneousPoly& f, const HomogeneousPoly& g);

/// Exact rational value of the resultant at a numeric system's coefficients,
/// computed by running the trace pipeline over constants (the symbolic
/// resultant is never materialized). Exactly zero iff the system is
/// degenerate.
Rational solvability_probe(const PolySystem& system, const TraceOptions& options = {});

} // namespace polyres
