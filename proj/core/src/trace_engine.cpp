#include "polyres/trace_engine.hpp"

#include "polyres/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <memory>
#include <numeric>
#include <thread>
#include <unordered_map>

namespace polyres {

int ExponentMatrix::row_sum(int i) const {
    int s = 0;
    for (int j = 0; j < n; ++j) s += at(i, j);
    return s;
}

int ExponentMatrix::col_sum(int j) const {
    int s = 0;
    for (int i = 0; i < n; ++i) s += at(i, j);
    return s;
}

int ExponentMatrix::total() const {
    return std::accumulate(cells.begin(), cells.end(), 0);
}

Rational shift_coefficient(int r, int k) {
    if (r < 1) throw InputError("shift_coefficient: r must be positive");
    if (k < 0) throw InputError("shift_coefficient: k must be nonnegative");
    Rational out(r);
    out /= factorial(static_cast<unsigned long>(r) * k);
    return out;
}

MPoly trace_power(int n, int m, unsigned long long budget_cap) {
    if (n < 1 || m < 1) throw InputError("trace_power: n and m must be positive");
    double size = std::pow(static_cast<double>(n), m);
    unsigned long long estimate =
        size > 1e18 ? ~0ULL : static_cast<unsigned long long>(size);
    if (size > static_cast<double>(budget_cap))
        throw BudgetError("trace_power refused: n^m = " + std::to_string(estimate) +
                              " sequences exceeds the cap",
                          {}, estimate, budget_cap);

    // small memo: the oracle suites request the same tr A^m many times
    static std::mutex cache_mutex;
    static std::map<std::pair<int, int>, MPoly> cache;
    if (estimate <= 1'000'000) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({n, m});
        if (it != cache.end()) return it->second;
    }

    MPoly out;
    std::vector<int> seq(m, 0); // 0-based vertex sequence
    while (true) {
        std::vector<Monomial::Factor> factors;
        factors.reserve(m);
        for (int t = 0; t < m; ++t) {
            int a = seq[t], b = seq[(t + 1) % m];
            factors.push_back({Symbol::matrix(a + 1, b + 1), 1});
        }
        out.add_term(Monomial::from_factors(std::move(factors)), Rational(1));

        int pos = m - 1;
        while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
        if (pos < 0) break;
        ++seq[pos];
    }

    if (estimate <= 1'000'000) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        cache.emplace(std::make_pair(n, m), out);
    }
    return out;
}

RowExpansion row_operator_expansion(const HomogeneousPoly& p, int k) {
    if (k < 0) throw InputError("row_operator_expansion: k must be nonnegative");
    const int n = p.nvars();
    RowExpansion acc;
    acc[std::vector<int>(n, 0)] = MPoly::constant(Rational(1));
    if (k == 0) return acc;

    // base: the polynomial itself, monomial indices turned into exponent vectors
    RowExpansion base;
    for (const auto& [idx, c] : p.coeffs()) {
        std::vector<int> e(n, 0);
        for (int v : idx) ++e[v - 1];
        base[e] += c;
    }

    for (int step = 0; step < k; ++step) {
        RowExpansion next;
        for (const auto& [ea, ca] : acc) {
            for (const auto& [eb, cb] : base) {
                std::vector<int> e(n);
                for (int i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
                next[e].add_product(ca, cb, Rational(1));
            }
        }
        for (auto it = next.begin(); it != next.end();) {
            if (it->second.is_zero())
                it = next.erase(it);
            else
                ++it;
        }
        acc = std::move(next);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Closed-walk counting

namespace {

bool support_connected(const ExponentMatrix& E) {
    const int n = E.n;
    std::vector<int> comp(n, -1);
    int root = -1;
    for (int i = 0; i < n && root < 0; ++i)
        if (E.row_sum(i) > 0) root = i;
    if (root < 0) return false;

    std::vector<int> stack{root};
    comp[root] = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w) {
            if (comp[w] >= 0) continue;
            if (E.at(v, w) > 0 || E.at(w, v) > 0) {
                comp[w] = 0;
                stack.push_back(w);
            }
        }
    }
    for (int i = 0; i < n; ++i)
        if (comp[i] < 0 && (E.row_sum(i) > 0 || E.col_sum(i) > 0)) return false;
    return true;
}

struct WalkDp {
    const ExponentMatrix& E;
    int n;
    std::vector<uint64_t> stride;   // mixed-radix strides per cell
    std::vector<int> residual;      // current residual edge counts
    int start = 0;
    std::unordered_map<uint64_t, Integer> memo;

    explicit WalkDp(const ExponentMatrix& e) : E(e), n(e.n), residual(e.cells) {
        stride.resize(e.cells.size());
        uint64_t s = 1;
        for (size_t c = 0; c < e.cells.size(); ++c) {
            stride[c] = s;
            s *= static_cast<uint64_t>(e.cells[c]) + 1;
        }
    }

    uint64_t states() const {
        uint64_t s = 1;
        for (size_t c = 0; c < E.cells.size(); ++c) {
            uint64_t radix = static_cast<uint64_t>(E.cells[c]) + 1;
            if (s > (1ULL << 58) / radix)
                throw BudgetError("walk_count: residual state space too large", {}, 0, 0);
            s *= radix;
        }
        return s;
    }

    Integer count_from(uint64_t residual_index, int cur) {
        if (residual_index == 0) return Integer(cur == start ? 1 : 0);
        uint64_t key = residual_index * static_cast<uint64_t>(n) + cur;
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        Integer total(0);
        const size_t row_base = static_cast<size_t>(cur) * n;
        for (int j = 0; j < n; ++j) {
            size_t cell = row_base + j;
            if (residual[cell] == 0) continue;
            --residual[cell];
            total += count_from(residual_index - stride[cell], j);
            ++residual[cell];
        }
        memo.emplace(key, total);
        return total;
    }
};

} // namespace

Integer walk_count(const ExponentMatrix& E) {
    if (E.total() == 0) return Integer(0);
    for (int i = 0; i < E.n; ++i)
        if (E.row_sum(i) != E.col_sum(i)) return Integer(0);
    if (!support_connected(E)) return Integer(0);

    WalkDp dp(E);
    dp.states(); // guards against residual-index overflow
    uint64_t full_index = 0;
    for (size_t c = 0; c < E.cells.size(); ++c)
        full_index += dp.stride[c] * static_cast<uint64_t>(E.cells[c]);

    Integer total(0);
    for (int s = 0; s < E.n; ++s) {
        if (E.row_sum(s) == 0) continue;
        dp.start = s;
        dp.memo.clear();
        total += dp.count_from(full_index, s);
    }
    return total;
}

// ---------------------------------------------------------------------------
// Multigraded traces

namespace {

// Walk counter whose memo table persists across the exponent matrices of one
// trace. Keys are content-addressed: the residual cells in a fixed
// mixed-radix encoding wide enough for any matrix of the trace, plus the
// current and start vertices. Counts use plain 64-bit integers, which is
// exact because every count is bounded by n^m; callers must check that bound
// fits (beyond it the per-matrix big-integer path is used instead).
struct SharedWalkCounter {
    int n;
    std::vector<uint64_t> stride;
    std::vector<int> residual;
    int start = 0;
    std::unordered_map<uint64_t, unsigned long long> memo;

    // cell_max[i][j]: largest value cell (i,j) can take over the whole trace
    SharedWalkCounter(int n, const std::vector<int>& cell_max) : n(n) {
        stride.resize(cell_max.size());
        uint64_t s = 1;
        bool ok = true;
        for (size_t c = 0; c < cell_max.size(); ++c) {
            stride[c] = s;
            uint64_t radix = static_cast<uint64_t>(cell_max[c]) + 1;
            ok = ok && s <= (1ULL << 56) / radix;
            if (!ok) break;
            s *= radix;
        }
        if (!ok || s > (1ULL << 56) / (static_cast<uint64_t>(n) * n + 1))
            throw BudgetError("trace walk cache: state space too large", {}, 0, 0);
    }

    unsigned long long count(const ExponentMatrix& E) {
        for (int i = 0; i < n; ++i)
            if (E.row_sum(i) != E.col_sum(i)) return 0;
        if (!support_connected(E)) return 0;

        residual = E.cells;
        uint64_t base = 0;
        for (size_t c = 0; c < residual.size(); ++c)
            base += stride[c] * static_cast<uint64_t>(residual[c]);

        unsigned long long total = 0;
        for (int s = 0; s < n; ++s) {
            if (E.row_sum(s) == 0) continue;
            start = s;
            total += count_from(base, s);
        }
        return total;
    }

private:
    unsigned long long count_from(uint64_t residual_index, int cur) {
        if (residual_index == 0) return cur == start ? 1 : 0;
        uint64_t key = (residual_index * n + cur) * n + start;
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        unsigned long long total = 0;
        const size_t row_base = static_cast<size_t>(cur) * n;
        for (int j = 0; j < n; ++j) {
            size_t cell = row_base + j;
            if (residual[cell] == 0) continue;
            --residual[cell];
            total += count_from(residual_index - stride[cell], j);
            ++residual[cell];
        }
        memo.emplace(key, total);
        return total;
    }
};

void validate_kvec(const PolySystem& system, const std::vector<int>& kvec) {
    if (static_cast<int>(kvec.size()) != system.n())
        throw InputError("grading vector length must equal n");
    bool nonzero = false;
    for (int k : kvec) {
        if (k < 0) throw InputError("grading components must be nonnegative");
        nonzero = nonzero || k > 0;
    }
    if (!nonzero) throw InputError("the zero grading has no trace (t_0...0 = 0)");
}

unsigned long long binomial_bound(int n, int m) {
    // C(n + m - 1, n - 1), saturating
    long double v = 1;
    for (int i = 1; i <= n - 1; ++i) v = v * (m + i) / i;
    if (v > 1e18) return ~0ULL;
    return static_cast<unsigned long long>(v);
}

struct TraceAccumulator {
    std::vector<RowExpansion> rows;
    std::vector<int> col_target;
    int n;
    MPoly sum;
    SharedWalkCounter* shared = nullptr;

    // chosen row entries for rows 0..n-2
    std::vector<const std::pair<const std::vector<int>, MPoly>*> chosen;

    void recurse(int row, std::vector<int>& col_partial) {
        if (row == n - 1) {
            std::vector<int> last(n);
            for (int j = 0; j < n; ++j) {
                last[j] = col_target[j] - col_partial[j];
                if (last[j] < 0) return;
            }
            auto it = rows[row].find(last);
            if (it == rows[row].end()) return;

            ExponentMatrix E(n);
            for (int i = 0; i < n - 1; ++i)
                for (int j = 0; j < n; ++j) E.at(i, j) = (*chosen[i]).first[j];
            for (int j = 0; j < n; ++j) E.at(n - 1, j) = last[j];

            Integer wc = shared ? Integer(static_cast<unsigned long>(shared->count(E)))
                                : walk_count(E);
            if (wc == 0) return;

            Integer weight = wc;
            for (int c : E.cells) weight *= factorial(static_cast<unsigned long>(c));

            MPoly prod = it->second;
            for (int i = 0; i < n - 1; ++i) prod *= (*chosen[i]).second;
            sum.add_scaled(prod, Rational(weight));
            return;
        }
        for (const auto& entry : rows[row]) {
            bool fits = true;
            for (int j = 0; j < n && fits; ++j)
                fits = col_partial[j] + entry.first[j] <= col_target[j];
            if (!fits) continue;
            for (int j = 0; j < n; ++j) col_partial[j] += entry.first[j];
            chosen[row] = &entry;
            recurse(row + 1, col_partial);
            for (int j = 0; j < n; ++j) col_partial[j] -= entry.first[j];
        }
    }
};

} // namespace

unsigned long long estimate_trace_enumeration(const PolySystem& system,
                                              const std::vector<int>& kvec) {
    validate_kvec(system, kvec);
    const int n = system.n();
    unsigned long long est = 1;
    for (int i = 0; i < n - 1; ++i) {
        unsigned long long rows = binomial_bound(n, system.degrees()[i] * kvec[i]);
        if (rows != 0 && est > ~0ULL / rows) return ~0ULL;
        est *= rows;
    }
    return est;
}

MPoly multigraded_trace(const PolySystem& system, const std::vector<int>& kvec,
                        const TraceOptions& options) {
    validate_kvec(system, kvec);
    const int n = system.n();

    unsigned long long est = estimate_trace_enumeration(system, kvec);
    if (est > options.budget_cap) {
        std::string name;
        for (size_t i = 0; i < kvec.size(); ++i) name += (i ? "," : "") + std::to_string(kvec[i]);
        throw BudgetError("trace (" + name + ") refused: predicted enumeration of " +
                              std::to_string(est) + " exceeds the budget cap " +
                              std::to_string(options.budget_cap),
                          kvec, est, options.budget_cap);
    }

    long m = 0;
    for (int i = 0; i < n; ++i) m += static_cast<long>(system.degrees()[i]) * kvec[i];

    TraceAccumulator acc{{}, {}, n, {}, nullptr, {}};
    acc.rows.reserve(n);
    for (int i = 0; i < n; ++i)
        acc.rows.push_back(row_operator_expansion(system.poly(i), kvec[i]));
    acc.col_target.resize(n);
    for (int j = 0; j < n; ++j) acc.col_target[j] = system.degrees()[j] * kvec[j];
    acc.chosen.resize(n);

    std::unique_ptr<SharedWalkCounter> shared;
    if (options.shared_walk_cache && m * std::log2(static_cast<double>(n) + 0.01) < 61.0) {
        std::vector<int> cell_max(static_cast<size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                cell_max[static_cast<size_t>(i) * n + j] =
                    std::min(acc.col_target[i], acc.col_target[j]);
        try {
            shared = std::make_unique<SharedWalkCounter>(n, cell_max);
            acc.shared = shared.get();
        } catch (const BudgetError&) {
            // state space too wide to pack; fall back to per-matrix counting
        }
    }

    std::vector<int> col_partial(n, 0);
    acc.recurse(0, col_partial);

    // prefactor: prod r_i / prod (r_i k_i)! / m
    Rational pref(1);
    for (int i = 0; i < n; ++i) pref *= system.degrees()[i];
    for (int i = 0; i < n; ++i)
        pref /= factorial(static_cast<unsigned long>(system.degrees()[i]) * kvec[i]);
    pref /= Rational(m);

    acc.sum *= pref;
    return std::move(acc.sum);
}

namespace {

void compositions_of(int k, int parts, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        cur.push_back(k);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= k; ++v) {
        cur.push_back(v);
        compositions_of(k - v, parts - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

MPoly aggregated_trace(const PolySystem& system, int k, const TraceOptions& options) {
    if (k < 1) throw InputError("aggregated_trace: k must be positive");
    std::vector<std::vector<int>> kvecs;
    std::vector<int> cur;
    compositions_of(k, system.n(), cur, kvecs);

    MPoly sum;
    for (const auto& kv : kvecs) sum += multigraded_trace(system, kv, options);
    sum *= Rational(k);
    return sum;
}

MPoly naive_trace_oracle(const PolySystem& system, const std::vector<int>& kvec) {
    validate_kvec(system, kvec);
    const int n = system.n();
    if (n > 3) throw InputError("naive_trace_oracle capped at n <= 3");
    long m = 0;
    for (int i = 0; i < n; ++i) m += static_cast<long>(system.degrees()[i]) * kvec[i];
    if (m > 10) throw InputError("naive_trace_oracle capped at m <= 10");

    // drops every term still containing a matrix symbol of the given row;
    // once a row's operators are all applied, such terms die at A = 0 anyway
    auto restrict_row = [n](const MPoly& p, int row) {
        MPoly out;
        for (const auto& [mono, c] : p.sorted_terms()) {
            bool has_row = false;
            for (const auto& [s, e] : mono.factors())
                has_row = has_row ||
                          (s.kind() == SymbolKind::Matrix && s.matrix_row() == row);
            if (!has_row) out.add_term(mono, c);
        }
        return out;
    };

    MPoly cur = trace_power(n, static_cast<int>(m));
    for (int i = 0; i < n; ++i) {
        // apply f-hat_i = f_i(d/dA_i1, ..., d/dA_in), k_i times
        for (int rep = 0; rep < kvec[i]; ++rep) {
            MPoly next;
            for (const auto& [idx, c] : system.poly(i).coeffs()) {
                MPoly d = cur;
                for (int v : idx) d = d.derivative(Symbol::matrix(i + 1, v));
                if (d.is_zero()) continue;
                next += c * d;
            }
            cur = std::move(next);
        }
        cur = restrict_row(cur, i + 1);
    }
    MPoly restricted = std::move(cur);

    Rational pref(1);
    for (int i = 0; i < n; ++i) pref *= system.degrees()[i];
    for (int i = 0; i < n; ++i)
        pref /= factorial(static_cast<unsigned long>(system.degrees()[i]) * kvec[i]);
    pref /= Rational(m);
    restricted *= pref;
    return restricted;
}

// ---------------------------------------------------------------------------
// Trace table

const MPoly& TraceTable::at(const std::vector<int>& kvec) const {
    auto it = entries_.find(kvec);
    if (it == entries_.end()) throw InputError("trace table: missing grading entry");
    return it->second;
}

void TraceTable::insert(std::vector<int> kvec, MPoly value) {
    entries_[std::move(kvec)] = std::move(value);
}

MPoly TraceTable::aggregated(int k) const {
    if (k < 1) throw InputError("aggregated trace index must be positive");
    MPoly sum;
    bool any = false;
    for (const auto& [kv, t] : entries_) {
        int s = std::accumulate(kv.begin(), kv.end(), 0);
        if (s == k) {
            sum += t;
            any = true;
        }
    }
    if (!any) throw InputError("trace table holds no gradings of component sum " + std::to_string(k));
    sum *= Rational(k);
    return sum;
}

TraceTable compute_trace_table(const PolySystem& system,
                               const std::vector<std::vector<int>>& kvecs,
                               const TraceOptions& options) {
    // fail fast: check every budget before computing anything
    for (const auto& kv : kvecs) {
        unsigned long long est = estimate_trace_enumeration(system, kv);
        if (est > options.budget_cap) {
            std::string name;
            for (size_t i = 0; i < kv.size(); ++i) name += (i ? "," : "") + std::to_string(kv[i]);
            throw BudgetError("trace (" + name + ") refused: predicted enumeration of " +
                                  std::to_string(est) + " exceeds the budget cap " +
                                  std::to_string(options.budget_cap),
                              kv, est, options.budget_cap);
        }
    }

    std::vector<MPoly> results(kvecs.size());
    int jobs = std::max(1, options.jobs);
    if (jobs == 1 || kvecs.size() <= 1) {
        for (size_t i = 0; i < kvecs.size(); ++i)
            results[i] = multigraded_trace(system, kvecs[i], options);
    } else {
        std::atomic<size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto worker = [&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= kvecs.size()) return;
                try {
                    results[i] = multigraded_trace(system, kvecs[i], options);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }

    TraceTable table;
    for (size_t i = 0; i < kvecs.size(); ++i) table.insert(kvecs[i], std::move(results[i]));
    return table;
}

} // namespace polyres
