#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace polyres {

enum class SymbolKind : unsigned { Coeff = 0, Matrix = 1, TVar = 2 };

/// One variable of the engine's alphabet, packed into 64 bits.
///
/// Three namespaces exist:
///   Coeff  -- coefficient of a homogeneous polynomial: a 1-based polynomial
///             index plus a sorted (nondecreasing) monomial multi-index.
///             Printed "f1_112" (polynomial 1, monomial x1*x1*x2).
///   Matrix -- entry of the auxiliary matrix paired against the differential
///             operators. Printed "A12" (row 1, column 2).
///   TVar   -- abstract Schur argument indexed by a grading vector. Printed
///             "t3" (scalar) or "t2_1" (vector).
///
/// Bit layout, high to low:
///   [63:62] kind
///   Coeff : [61:56] poly index 1..63, then twelve 4-bit monomial indices
///           1..15, left-aligned, zero padded
///   Matrix: [61:54] row 1..255, [53:46] column 1..255
///   TVar  : [61:58] dimension 1..12, then twelve 4-bit components 0..15,
///           left-aligned
///
/// Unsigned comparison of the packed word realizes the documented total
/// order: kind first, then indices lexicographically (TVar additionally
/// orders by dimension; mixed-dimension gradings never occur in one
/// polynomial in practice). Inputs beyond the packed ranges are rejected
/// with InputError; the supported ranges comfortably cover every system the
/// budget guards allow through.
class Symbol {
public:
    static Symbol coeff(int poly_index, const std::vector<int>& multi_index);
    static Symbol matrix(int row, int col);
    static Symbol tvar(const std::vector<int>& grading);

    SymbolKind kind() const { return static_cast<SymbolKind>(raw_ >> 62); }

    int poly_index() const;              // Coeff
    std::vector<int> multi_index() const; // Coeff, sorted nondecreasing
    int matrix_row() const;              // Matrix
    int matrix_col() const;              // Matrix
    std::vector<int> grading() const;    // TVar

    /// Canonical text name, e.g. "f1_12", "A21", "t2_0_1".
    std::string name() const;

    /// Inverse of name(). Throws InputError on malformed names.
    static Symbol parse(const std::string& name);

    friend bool operator==(Symbol a, Symbol b) { return a.raw_ == b.raw_; }
    friend bool operator!=(Symbol a, Symbol b) { return a.raw_ != b.raw_; }
    friend bool operator<(Symbol a, Symbol b) { return a.raw_ < b.raw_; }
    friend bool operator>(Symbol a, Symbol b) { return a.raw_ > b.raw_; }
    friend bool operator<=(Symbol a, Symbol b) { return a.raw_ <= b.raw_; }
    friend bool operator>=(Symbol a, Symbol b) { return a.raw_ >= b.raw_; }

    uint64_t raw() const { return raw_; }

private:
    explicit Symbol(uint64_t raw) : raw_(raw) {}
    uint64_t raw_ = 0;
};

struct SymbolHash {
    size_t operator()(Symbol s) const {
        uint64_t x = s.raw();
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        x *= 0xc4ceb9fe1a85ec53ULL;
        x ^= x >> 33;
        return static_cast<size_t>(x);
    }
};

} // namespace polyres
