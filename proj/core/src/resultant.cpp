#include "polyres/resultant.hpp"

#include "polyres/errors.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace polyres {

namespace {

bool all_zero(const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

// All vectors 0 <= v <= bound componentwise, lexicographic. Every k - v with
// v != 0 appears strictly earlier, which makes the order valid for the
// recurrence fills below.
std::vector<std::vector<int>> box_lattice(const std::vector<int>& bound) {
    std::vector<std::vector<int>> out;
    std::vector<int> v(bound.size(), 0);
    out.push_back(v);
    while (true) {
        int pos = static_cast<int>(bound.size()) - 1;
        while (pos >= 0 && v[pos] == bound[pos]) {
            v[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++v[pos];
        out.push_back(v);
    }
    return out;
}

// All nonzero vectors with component sum <= depth.
std::vector<std::vector<int>> simplex_kvecs(int n, int depth) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n) {
            if (!all_zero(cur)) out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur.push_back(v);
            self(self, pos + 1, left - v);
            cur.pop_back();
        }
    };
    rec(rec, 0, depth);
    return out;
}

// Values of the multi-Schur polynomials at t_kvec := -T_kvec, filled over a
// lattice by the series-exponential recurrence
//   k_i * G_k = sum_{0 < v <= k} v_i * (-T_v) * G_{k-v}.
std::map<std::vector<int>, MPoly> schur_values(const TraceTable& traces,
                                               const std::vector<std::vector<int>>& lattice) {
    std::map<std::vector<int>, MPoly> g;
    for (const auto& k : lattice) {
        if (all_zero(k)) {
            g[k] = MPoly::constant(Rational(1));
            continue;
        }
        int pivot = 0;
        while (k[pivot] == 0) ++pivot;
        MPoly acc;
        for (const auto& v : box_lattice(k)) {
            if (all_zero(v) || v[pivot] == 0) continue;
            std::vector<int> rest(k.size());
            for (size_t i = 0; i < k.size(); ++i) rest[i] = k[i] - v[i];
            auto it = g.find(rest);
            if (it == g.end()) throw InputError("internal: lattice fill order broken");
            acc.add_product(traces.at(v), it->second, frac(-v[pivot], k[pivot]));
        }
        g[k] = std::move(acc);
    }
    return g;
}

BudgetReport make_report(const PolySystem& system,
                         const std::vector<std::vector<int>>& kvecs,
                         const TraceOptions& options) {
    BudgetReport report;
    report.cap = options.budget_cap;
    report.traces_computed = kvecs.size();
    for (const auto& kv : kvecs)
        report.max_enumeration = std::max(report.max_enumeration,
                                          estimate_trace_enumeration(system, kv));
    return report;
}

} // namespace

ResultantResult resultant(const PolySystem& system, GradingMode mode,
                          const TraceOptions& options) {
    DegreeData dd = degree_data(system.degrees());
    ResultantResult out;
    out.degrees = dd;
    out.mode = mode;

    if (mode == GradingMode::Multi) {
        std::vector<int> dvec;
        for (long long d : dd.d_vec) {
            if (d > 1'000'000) throw InputError("degree vector too large for assembly");
            dvec.push_back(static_cast<int>(d));
        }
        auto lattice = box_lattice(dvec);
        std::vector<std::vector<int>> kvecs;
        for (const auto& k : lattice)
            if (!all_zero(k)) kvecs.push_back(k);

        out.budget = make_report(system, kvecs, options);
        TraceTable traces = compute_trace_table(system, kvecs, options);
        auto g = schur_values(traces, lattice);
        out.value = std::move(g.at(dvec));
        if (dd.d_total % 2 != 0) out.value *= Rational(-1);
    } else {
        if (dd.d_total > 1'000'000) throw InputError("total degree too large for assembly");
        int d = static_cast<int>(dd.d_total);
        auto kvecs = simplex_kvecs(system.n(), d);
        out.budget = make_report(system, kvecs, options);
        TraceTable traces = compute_trace_table(system, kvecs, options);

        // scalar recurrence j*G_j = -sum_{i=1..j} T_i * G_{j-i}
        std::vector<MPoly> tk(d + 1), g(d + 1);
        for (int k = 1; k <= d; ++k) tk[k] = traces.aggregated(k);
        g[0] = MPoly::constant(Rational(1));
        for (int j = 1; j <= d; ++j) {
            MPoly acc;
            for (int i = 1; i <= j; ++i) acc.add_product(tk[i], g[j - i], Rational(-1, j));
            g[j] = std::move(acc);
        }
        out.value = std::move(g[d]);
        if (d % 2 != 0) out.value *= Rational(-1);
    }

    out.term_count = out.value.term_count();
    return out;
}

std::map<int, MPoly> deformed_expansion(const PolySystem& system, int depth,
                                        const TraceOptions& options) {
    if (depth < 0) throw InputError("deformed_expansion: depth must be nonnegative");
    auto kvecs = simplex_kvecs(system.n(), depth);
    TraceTable traces = compute_trace_table(system, kvecs, options);

    // lattice ordered by component sum, then lex, so dependencies come first
    std::vector<std::vector<int>> lattice = kvecs;
    lattice.push_back(std::vector<int>(system.n(), 0));
    std::sort(lattice.begin(), lattice.end(), [](const auto& a, const auto& b) {
        int sa = std::accumulate(a.begin(), a.end(), 0);
        int sb = std::accumulate(b.begin(), b.end(), 0);
        if (sa != sb) return sa < sb;
        return a < b;
    });

    auto g = schur_values(traces, lattice);
    std::map<int, MPoly> components;
    for (int s = 0; s <= depth; ++s) components[s] = MPoly();
    for (const auto& [k, value] : g) {
        int s = std::accumulate(k.begin(), k.end(), 0);
        components[s] += value;
    }
    return components;
}

MPoly deformed_resultant(const PolySystem& system, const TraceOptions& options) {
    DegreeData dd = degree_data(system.degrees());
    if (dd.d_total > 1'000'000) throw InputError("total degree too large for assembly");
    auto components = deformed_expansion(system, static_cast<int>(dd.d_total), options);
    MPoly out;
    for (const auto& [s, c] : components) out += c;
    return out;
}

// ---------------------------------------------------------------------------
// Determinant special case

MPoly determinant_special(const std::vector<std::vector<MPoly>>& matrix) {
    const int n = static_cast<int>(matrix.size());
    if (n == 0) throw InputError("determinant of an empty matrix");
    for (const auto& row : matrix)
        if (static_cast<int>(row.size()) != n)
            throw InputError("determinant requires a square matrix");
    if (n > 20) throw BudgetError("determinant_special capped at n <= 20", {}, 0, 0);

    // traces of matrix powers tr M^1 .. tr M^n
    std::vector<MPoly> tr(n + 1);
    std::vector<std::vector<MPoly>> power = matrix;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            std::vector<std::vector<MPoly>> next(n, std::vector<MPoly>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int l = 0; l < n; ++l)
                        next[i][j].add_product(power[i][l], matrix[l][j], Rational(1));
            power = std::move(next);
        }
        for (int i = 0; i < n; ++i) tr[k] += power[i][i];
    }

    // sum over ordered partitions of n: (-1)^(m+n)/m! * prod tr M^{k_j} / k_j
    MPoly out;
    OrderedPartitionStream stream({n});
    while (auto p = stream.next()) {
        MPoly prod = MPoly::constant(Rational(1));
        Rational w(((p->m() + n) % 2 == 0) ? 1 : -1);
        w /= factorial(static_cast<unsigned long>(p->m()));
        for (const auto& part : p->parts) {
            prod *= tr[part[0]];
            w /= part[0];
        }
        out.add_scaled(prod, w);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Sylvester oracle (n = 2)

namespace {

// Subset dynamic program over columns; rows r..size-1 against the free
// columns in mask.
MPoly minor_det(const std::vector<std::vector<MPoly>>& m, unsigned mask, int r,
                std::unordered_map<unsigned, MPoly>& memo) {
    const int size = static_cast<int>(m.size());
    if (r == size) return MPoly::constant(Rational(1));
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;

    MPoly acc;
    int seen = 0;
    for (int j = 0; j < size; ++j) {
        if (!(mask & (1u << j))) continue;
        if (!m[r][j].is_zero()) {
            Rational sign(seen % 2 == 0 ? 1 : -1);
            acc.add_product(m[r][j], minor_det(m, mask & ~(1u << j), r + 1, memo), sign);
        }
        ++seen;
    }
    memo.emplace(mask, acc);
    return acc;
}

MPoly permutation_determinant(const std::vector<std::vector<MPoly>>& m) {
    std::unordered_map<unsigned, MPoly> memo;
    unsigned full = (1u << m.size()) - 1;
    return minor_det(m, full, 0, memo);
}

} // namespace

MPoly sylvester_resultant(const HomogeneousPoly& f, const HomogeneousPoly& g) {
    if (f.nvars() != 2 || g.nvars() != 2)
        throw InputError("sylvester_resultant is defined for binary forms only");
    const int r1 = f.degree(), r2 = g.degree();
    const int size = r1 + r2;
    if (size > 16) throw BudgetError("sylvester_resultant capped at r1 + r2 <= 16", {}, 0, 0);

    // f = sum_j a_j x1^(r1-j) x2^j; index (1,..,1,2,..,2) with j twos
    auto band = [](const HomogeneousPoly& p, int j) {
        MultiIndex idx;
        for (int i = 0; i < p.degree() - j; ++i) idx.push_back(1);
        for (int i = 0; i < j; ++i) idx.push_back(2);
        return p.coeff(idx);
    };

    std::vector<std::vector<MPoly>> m(size, std::vector<MPoly>(size));
    for (int t = 0; t < r2; ++t)
        for (int j = 0; j <= r1; ++j) m[t][t + j] = band(f, j);
    for (int t = 0; t < r1; ++t)
        for (int j = 0; j <= r2; ++j) m[r2 + t][t + j] = band(g, j);

    return permutation_determinant(m);
}

Rational solvability_probe(const PolySystem& system, const TraceOptions& options) {
    if (!system.is_numeric())
        throw InputError("solvability_probe requires a numeric system");
    ResultantResult r = resultant(system, GradingMode::Multi, options);
    if (!r.value.is_constant())
        throw InputError("internal: numeric resultant did not reduce to a constant");
    return r.value.constant_term();
}

} // namespace polyres
