#include "polyres/schur.hpp"

#include "polyres/errors.hpp"

#include <algorithm>
#include <numeric>

namespace polyres {

namespace {

// Literal enumeration over ordered partitions is the oracle route; it is
// exponential, so it refuses beyond this component sum.
constexpr int kEnumerateCap = 8;

int component_sum(const std::vector<int>& v) {
    return std::accumulate(v.begin(), v.end(), 0);
}

bool all_zero(const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

// Appends, in lexicographic order, every sequence of `parts_left` nonzero
// vectors summing to `rest` onto `prefix`, emitting into `out`.
void emit_sequences(const std::vector<int>& rest, int parts_left,
                    std::vector<std::vector<int>>& prefix,
                    std::vector<std::vector<std::vector<int>>>& out) {
    int rest_sum = component_sum(rest);
    if (parts_left == 0) {
        if (rest_sum == 0) out.push_back(prefix);
        return;
    }
    if (rest_sum < parts_left) return; // each remaining part needs mass >= 1

    // iterate candidate first parts v, 0 < v <= rest, in lexicographic order
    std::vector<int> v(rest.size(), 0);
    const int dim = static_cast<int>(rest.size());
    while (true) {
        // next vector <= rest in lex order (odometer from the right)
        int pos = dim - 1;
        while (pos >= 0 && v[pos] == rest[pos]) {
            v[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++v[pos];

        std::vector<int> next_rest(dim);
        for (int i = 0; i < dim; ++i) next_rest[i] = rest[i] - v[i];
        prefix.push_back(v);
        emit_sequences(next_rest, parts_left - 1, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

OrderedPartitionStream::OrderedPartitionStream(std::vector<int> target)
    : target_(std::move(target)) {
    if (target_.empty()) throw InputError("ordered partitions: empty target");
    for (int x : target_)
        if (x < 0) throw InputError("ordered partitions: target components must be nonnegative");
    if (all_zero(target_)) throw InputError("ordered partitions: target must be nonzero");
    sum_ = component_sum(target_);
}

void OrderedPartitionStream::fill_for_current_m() {
    buffer_.clear();
    pos_ = 0;
    std::vector<std::vector<int>> prefix;
    emit_sequences(target_, m_, prefix, buffer_);
}

std::optional<VectorPartition> OrderedPartitionStream::next() {
    while (pos_ >= buffer_.size()) {
        if (m_ >= sum_) return std::nullopt;
        ++m_;
        fill_for_current_m();
    }
    VectorPartition p;
    p.parts = buffer_[pos_++];
    p.target = target_;
    return p;
}

std::vector<VectorPartition> ordered_partitions(const std::vector<int>& target) {
    OrderedPartitionStream stream(target);
    std::vector<VectorPartition> out;
    while (auto p = stream.next()) out.push_back(std::move(*p));
    return out;
}

LatticePath to_lattice_path(const VectorPartition& partition) {
    LatticePath path;
    std::vector<int> pos(partition.target.size(), 0);
    path.positions.push_back(pos);
    for (const auto& v : partition.parts) {
        for (size_t i = 0; i < pos.size(); ++i) pos[i] += v[i];
        path.positions.push_back(pos);
    }
    return path;
}

VectorPartition to_partition(const LatticePath& path) {
    if (path.positions.size() < 2) throw InputError("lattice path needs at least one step");
    VectorPartition p;
    p.target = path.positions.back();
    for (size_t s = 1; s < path.positions.size(); ++s) {
        std::vector<int> v(p.target.size());
        for (size_t i = 0; i < v.size(); ++i)
            v[i] = path.positions[s][i] - path.positions[s - 1][i];
        p.parts.push_back(std::move(v));
    }
    return p;
}

std::optional<LatticePath> LatticePathStream::next() {
    auto p = inner_.next();
    if (!p) return std::nullopt;
    return to_lattice_path(*p);
}

// ---------------------------------------------------------------------------
// Schur polynomials

MPoly schur_poly(int k, const std::map<int, MPoly>& t, SchurMethod method) {
    if (k < 0) throw InputError("schur_poly: k must be nonnegative");
    if (k == 0) return MPoly::constant(Rational(1));
    for (int i = 1; i <= k; ++i)
        if (!t.count(i)) throw InputError("schur_poly: missing argument t" + std::to_string(i));

    if (method == SchurMethod::Enumerate) {
        if (k > kEnumerateCap)
            throw BudgetError("schur_poly ENUMERATE capped at k <= " + std::to_string(kEnumerateCap),
                              {k}, 1ULL << (k - 1), 1ULL << (kEnumerateCap - 1));
        MPoly out;
        OrderedPartitionStream stream({k});
        while (auto p = stream.next()) {
            MPoly prod = MPoly::constant(Rational(1));
            for (const auto& v : p->parts) prod *= t.at(v[0]);
            Rational w(1);
            w /= factorial(static_cast<unsigned long>(p->m()));
            out.add_scaled(prod, w);
        }
        return out;
    }

    // k*P_k = sum_{i=1..k} i * t_i * P_{k-i}
    std::vector<MPoly> p(k + 1);
    p[0] = MPoly::constant(Rational(1));
    for (int j = 1; j <= k; ++j) {
        MPoly acc;
        for (int i = 1; i <= j; ++i)
            acc.add_product(t.at(i), p[j - i], Rational(i));
        acc *= Rational(1, j);
        p[j] = std::move(acc);
    }
    return p[k];
}

namespace {

// Lattice of all vectors 0 <= v <= bound componentwise, in lexicographic
// order (so every prefix-sum dependency appears earlier).
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

} // namespace

MPoly multi_schur(const std::vector<int>& target,
                  const std::map<std::vector<int>, MPoly>& t,
                  MultiSchurMethod method) {
    if (target.empty()) throw InputError("multi_schur: empty target");
    for (int x : target)
        if (x < 0) throw InputError("multi_schur: target components must be nonnegative");
    if (all_zero(target)) return MPoly::constant(Rational(1));

    auto lattice = box_lattice(target);
    for (const auto& v : lattice) {
        if (all_zero(v)) continue;
        if (!t.count(v)) {
            std::string name;
            for (size_t i = 0; i < v.size(); ++i) name += (i ? "," : "") + std::to_string(v[i]);
            throw InputError("multi_schur: missing argument t(" + name + ")");
        }
    }

    if (method == MultiSchurMethod::Enumerate) {
        int sum = component_sum(target);
        if (sum > kEnumerateCap)
            throw BudgetError("multi_schur ENUMERATE capped at component sum <= " +
                                  std::to_string(kEnumerateCap),
                              target, 0, 0);
        MPoly out;
        OrderedPartitionStream stream(target);
        while (auto p = stream.next()) {
            MPoly prod = MPoly::constant(Rational(1));
            for (const auto& v : p->parts) prod *= t.at(v);
            Rational w(1);
            w /= factorial(static_cast<unsigned long>(p->m()));
            out.add_scaled(prod, w);
        }
        return out;
    }

    // exp of the truncated series: acc = sum_m S^m / m!, truncated to the box
    std::map<std::vector<int>, MPoly> series;
    for (const auto& v : lattice)
        if (!all_zero(v)) series[v] = t.at(v);

    std::map<std::vector<int>, MPoly> acc, power;
    acc[std::vector<int>(target.size(), 0)] = MPoly::constant(Rational(1));
    power = acc;
    int max_m = component_sum(target);
    for (int m = 1; m <= max_m; ++m) {
        std::map<std::vector<int>, MPoly> next;
        for (const auto& [u, pu] : power) {
            for (const auto& [v, sv] : series) {
                std::vector<int> w(u.size());
                bool fits = true;
                for (size_t i = 0; i < u.size(); ++i) {
                    w[i] = u[i] + v[i];
                    fits = fits && w[i] <= target[i];
                }
                if (fits) next[w].add_product(pu, sv, Rational(1));
            }
        }
        power = std::move(next);
        Rational inv_fact(1);
        inv_fact /= factorial(static_cast<unsigned long>(m));
        for (const auto& [v, pv] : power) acc[v].add_scaled(pv, inv_fact);
    }
    auto it = acc.find(target);
    return it == acc.end() ? MPoly() : it->second;
}

std::map<int, MPoly> symbolic_t_table(int k) {
    std::map<int, MPoly> t;
    for (int i = 1; i <= k; ++i) t[i] = MPoly::variable(Symbol::tvar({i}));
    return t;
}

std::map<std::vector<int>, MPoly> symbolic_multi_t_table(const std::vector<int>& target) {
    std::map<std::vector<int>, MPoly> t;
    for (const auto& v : box_lattice(target)) {
        if (all_zero(v)) continue;
        t[v] = MPoly::variable(Symbol::tvar(v));
    }
    return t;
}

} // namespace polyres
