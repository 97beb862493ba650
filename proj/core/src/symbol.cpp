#include "polyres/symbol.hpp"

#include "polyres/errors.hpp"

#include <cctype>

namespace polyres {
namespace {

constexpr int kMaxIndices = 12;

uint64_t kind_bits(SymbolKind k) { return static_cast<uint64_t>(k) << 62; }

[[noreturn]] void bad(const std::string& msg) { throw InputError(msg); }

// Splits "1_12_3" into {1, 12, 3}.
std::vector<int> split_numbers(const std::string& s) {
    std::vector<int> out;
    size_t i = 0;
    while (i < s.size()) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) bad("malformed symbol index list: '" + s + "'");
        int v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > 1'000'000) bad("symbol index too large: '" + s + "'");
            ++i;
        }
        out.push_back(v);
        if (i < s.size()) {
            if (s[i] != '_') bad("malformed symbol index list: '" + s + "'");
            ++i;
            if (i == s.size()) bad("trailing '_' in symbol: '" + s + "'");
        }
    }
    return out;
}

// "112" -> {1,1,2} when no underscore is present, else full numbers.
std::vector<int> parse_index_tail(const std::string& s) {
    if (s.empty()) bad("empty symbol index list");
    if (s.find('_') == std::string::npos) {
        std::vector<int> out;
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) bad("malformed symbol indices: '" + s + "'");
            out.push_back(c - '0');
        }
        return out;
    }
    return split_numbers(s);
}

} // namespace

Symbol Symbol::coeff(int poly_index, const std::vector<int>& multi_index) {
    if (poly_index < 1 || poly_index > 63)
        bad("coefficient symbol: polynomial index " + std::to_string(poly_index) + " out of range 1..63");
    if (multi_index.empty() || multi_index.size() > kMaxIndices)
        bad("coefficient symbol: multi-index length out of range 1..12");
    int prev = 1;
    for (int v : multi_index) {
        if (v < 1 || v > 15) bad("coefficient symbol: variable index " + std::to_string(v) + " out of range 1..15");
        if (v < prev) bad("coefficient symbol: multi-index not sorted nondecreasing");
        prev = v;
    }
    uint64_t w = kind_bits(SymbolKind::Coeff) | (static_cast<uint64_t>(poly_index) << 56);
    int shift = 52;
    for (int v : multi_index) {
        w |= static_cast<uint64_t>(v) << shift;
        shift -= 4;
    }
    return Symbol(w);
}

Symbol Symbol::matrix(int row, int col) {
    if (row < 1 || row > 255 || col < 1 || col > 255)
        bad("matrix symbol: index out of range 1..255");
    uint64_t w = kind_bits(SymbolKind::Matrix) |
                 (static_cast<uint64_t>(row) << 54) |
                 (static_cast<uint64_t>(col) << 46);
    return Symbol(w);
}

Symbol Symbol::tvar(const std::vector<int>& grading) {
    if (grading.empty() || grading.size() > kMaxIndices)
        bad("t symbol: grading dimension out of range 1..12");
    uint64_t w = kind_bits(SymbolKind::TVar) | (static_cast<uint64_t>(grading.size()) << 58);
    int shift = 54;
    for (int v : grading) {
        if (v < 0 || v > 15) bad("t symbol: grading component " + std::to_string(v) + " out of range 0..15");
        w |= static_cast<uint64_t>(v) << shift;
        shift -= 4;
    }
    return Symbol(w);
}

int Symbol::poly_index() const { return static_cast<int>((raw_ >> 56) & 0x3f); }

std::vector<int> Symbol::multi_index() const {
    std::vector<int> out;
    int shift = 52;
    for (int i = 0; i < kMaxIndices; ++i, shift -= 4) {
        int v = static_cast<int>((raw_ >> shift) & 0xf);
        if (v == 0) break; // indices are 1-based, zero marks the end
        out.push_back(v);
    }
    return out;
}

int Symbol::matrix_row() const { return static_cast<int>((raw_ >> 54) & 0xff); }
int Symbol::matrix_col() const { return static_cast<int>((raw_ >> 46) & 0xff); }

std::vector<int> Symbol::grading() const {
    int dim = static_cast<int>((raw_ >> 58) & 0xf);
    std::vector<int> out(dim);
    int shift = 54;
    for (int i = 0; i < dim; ++i, shift -= 4)
        out[i] = static_cast<int>((raw_ >> shift) & 0xf);
    return out;
}

std::string Symbol::name() const {
    switch (kind()) {
        case SymbolKind::Coeff: {
            std::string s = "f" + std::to_string(poly_index()) + "_";
            auto idx = multi_index();
            bool small = true;
            for (int v : idx) small = small && v <= 9;
            for (size_t i = 0; i < idx.size(); ++i) {
                if (i > 0 && !small) s += "_";
                s += std::to_string(idx[i]);
            }
            return s;
        }
        case SymbolKind::Matrix: {
            int r = matrix_row(), c = matrix_col();
            if (r <= 9 && c <= 9) return "A" + std::to_string(r) + std::to_string(c);
            return "A" + std::to_string(r) + "_" + std::to_string(c);
        }
        case SymbolKind::TVar: {
            auto g = grading();
            std::string s = "t";
            for (size_t i = 0; i < g.size(); ++i) {
                if (i > 0) s += "_";
                s += std::to_string(g[i]);
            }
            return s;
        }
    }
    bad("corrupt symbol");
}

Symbol Symbol::parse(const std::string& name) {
    if (name.empty()) bad("empty symbol name");
    char head = name[0];
    std::string tail = name.substr(1);
    if (head == 'f') {
        size_t us = tail.find('_');
        if (us == std::string::npos) bad("coefficient symbol needs an '_': '" + name + "'");
        std::string poly = tail.substr(0, us);
        if (poly.empty()) bad("missing polynomial index in '" + name + "'");
        for (char c : poly)
            if (!std::isdigit(static_cast<unsigned char>(c))) bad("malformed symbol: '" + name + "'");
        return coeff(std::stoi(poly), parse_index_tail(tail.substr(us + 1)));
    }
    if (head == 'A') {
        auto idx = parse_index_tail(tail);
        if (idx.size() != 2) bad("matrix symbol needs two indices: '" + name + "'");
        return matrix(idx[0], idx[1]);
    }
    if (head == 't') {
        return tvar(split_numbers(tail));
    }
    bad("unknown symbol namespace: '" + name + "'");
}

} // namespace polyres
