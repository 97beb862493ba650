#pragma once

#include "polyres/mpoly.hpp"

#include <map>
#include <optional>
#include <vector>

namespace polyres {

/// Ordered partition (composition) of a nonnegative integer vector into
/// nonzero vector parts. Dimension 1 covers ordinary integer partitions.
struct VectorPartition {
    std::vector<std::vector<int>> parts;
    std::vector<int> target;

    int m() const { return static_cast<int>(parts.size()); }
};

/// Lattice path from the origin to target; velocities are partition parts.
struct LatticePath {
    std::vector<std::vector<int>> positions; // positions[0] = 0, back() = target
};

LatticePath to_lattice_path(const VectorPartition& partition);
VectorPartition to_partition(const LatticePath& path);

/// Streams every ordered partition of target exactly once, in the canonical
/// order: part count m ascending, part sequences lexicographic within m.
/// Single consumer.
class OrderedPartitionStream {
public:
    explicit OrderedPartitionStream(std::vector<int> target);

    std::optional<VectorPartition> next();

private:
    void fill_for_current_m();

    std::vector<int> target_;
    int sum_ = 0;
    int m_ = 0;
    std::vector<std::vector<std::vector<int>>> buffer_;
    size_t pos_ = 0;
};

/// Materialized convenience wrapper around the stream.
std::vector<VectorPartition> ordered_partitions(const std::vector<int>& target);

class LatticePathStream {
public:
    explicit LatticePathStream(std::vector<int> target) : inner_(std::move(target)) {}
    std::optional<LatticePath> next();

private:
    OrderedPartitionStream inner_;
};

enum class SchurMethod {
    Enumerate,  // literal sum over ordered partitions (oracle; capped)
    Recurrence, // k*P_k = sum_i i*t_i*P_{k-i}
};

enum class MultiSchurMethod {
    Enumerate, // literal sum over vector ordered partitions (oracle; capped)
    SeriesExp, // exponentiate the truncated series, extract the component
};

/// P_k of the arguments t_1..t_k (all required; there is no t_0). P_0 = 1.
MPoly schur_poly(int k, const std::map<int, MPoly>& t,
                 SchurMethod method = SchurMethod::Recurrence);

/// Multi-Schur P_target; t must cover every nonzero vector <= target
/// componentwise. The empty target yields 1.
MPoly multi_schur(const std::vector<int>& target,
                  const std::map<std::vector<int>, MPoly>& t,
                  MultiSchurMethod method = MultiSchurMethod::SeriesExp);

/// t-tables whose entries are the abstract t symbols themselves.
std::map<int, MPoly> symbolic_t_table(int k);
std::map<std::vector<int>, MPoly> symbolic_multi_t_table(const std::vector<int>& target);

} // namespace polyres
