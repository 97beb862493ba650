#include "polyres/poly_system.hpp"

#include "polyres/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>

namespace polyres {

using json = nlohmann::ordered_json;

std::vector<MultiIndex> sorted_multi_indices(int nvars, int degree) {
    std::vector<MultiIndex> out;
    MultiIndex cur(degree, 1);
    if (degree == 0) {
        out.push_back({});
        return out;
    }
    while (true) {
        out.push_back(cur);
        // next nondecreasing sequence over 1..nvars
        int pos = degree - 1;
        while (pos >= 0 && cur[pos] == nvars) --pos;
        if (pos < 0) break;
        int v = cur[pos] + 1;
        for (int i = pos; i < degree; ++i) cur[i] = v;
    }
    return out;
}

// ---------------------------------------------------------------------------
// HomogeneousPoly

HomogeneousPoly::HomogeneousPoly(int nvars, int degree) : nvars_(nvars), degree_(degree) {
    if (nvars < 1) throw InputError("polynomial needs at least one variable");
    if (degree < 1) throw InputError("polynomial degree must be positive");
}

HomogeneousPoly HomogeneousPoly::symbolic(int poly_index, int nvars, int degree) {
    HomogeneousPoly p(nvars, degree);
    for (const auto& idx : sorted_multi_indices(nvars, degree))
        p.coeffs_[idx] = MPoly::variable(Symbol::coeff(poly_index, idx));
    return p;
}

void HomogeneousPoly::set_coeff(const MultiIndex& index, MPoly value) {
    if (static_cast<int>(index.size()) != degree_)
        throw InputError("coefficient index length " + std::to_string(index.size()) +
                         " does not match degree " + std::to_string(degree_));
    int prev = 1;
    for (int v : index) {
        if (v < 1 || v > nvars_)
            throw InputError("coefficient index entry " + std::to_string(v) + " out of range 1.." +
                             std::to_string(nvars_));
        if (v < prev) throw InputError("coefficient index is not sorted nondecreasing");
        prev = v;
    }
    if (value.is_zero())
        coeffs_.erase(index);
    else
        coeffs_[index] = std::move(value);
}

const MPoly& HomogeneousPoly::coeff(const MultiIndex& index) const {
    static const MPoly kZero;
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? kZero : it->second;
}

bool HomogeneousPoly::is_numeric() const {
    for (const auto& [idx, c] : coeffs_)
        if (!c.is_constant()) return false;
    return true;
}

void HomogeneousPoly::scale(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return;
    }
    for (auto& [idx, v] : coeffs_) v *= c;
}

// ---------------------------------------------------------------------------
// PolySystem

PolySystem::PolySystem(std::vector<HomogeneousPoly> polys) : polys_(std::move(polys)) {
    if (polys_.empty()) throw InputError("a system needs at least one polynomial");
    for (const auto& p : polys_) {
        if (p.nvars() != n())
            throw InputError("every polynomial must have n = " + std::to_string(n()) + " variables");
        degrees_.push_back(p.degree());
    }
}

bool PolySystem::is_numeric() const {
    for (const auto& p : polys_)
        if (!p.is_numeric()) return false;
    return true;
}

PolySystem build_symbolic(int n, const std::vector<int>& degrees) {
    if (n < 1) throw InputError("n must be positive");
    if (static_cast<int>(degrees.size()) != n)
        throw InputError("degree vector length must equal n");
    std::vector<HomogeneousPoly> polys;
    for (int i = 0; i < n; ++i) {
        if (degrees[i] < 1) throw InputError("degrees must be positive");
        polys.push_back(HomogeneousPoly::symbolic(i + 1, n, degrees[i]));
    }
    return PolySystem(std::move(polys));
}

DegreeData degree_data(const std::vector<int>& degrees) {
    if (degrees.empty()) throw InputError("degree vector must be nonempty");
    long long prod = 1;
    for (int r : degrees) {
        if (r < 1) throw InputError("degrees must be positive");
        if (prod > (1LL << 40) / r) throw InputError("degree product too large");
        prod *= r;
    }
    DegreeData out;
    for (int r : degrees) out.d_vec.push_back(prod / r);
    for (long long d : out.d_vec) out.d_total += d;
    return out;
}

Rational evaluate_poly(const HomogeneousPoly& p, const std::vector<Rational>& point) {
    if (static_cast<int>(point.size()) != p.nvars())
        throw InputError("evaluation point has wrong dimension");
    Rational total(0);
    for (const auto& [idx, c] : p.coeffs()) {
        if (!c.is_constant())
            throw InputError("evaluate_poly requires numeric coefficients; evaluate them first");
        Rational term = c.constant_term();
        for (int v : idx) term *= point[v - 1];
        total += term;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Random generators

namespace {

Rational random_rational(std::mt19937_64& rng, bool nonzero) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    int p = num(rng);
    while (nonzero && p == 0) p = num(rng);
    Rational q(p, den(rng));
    q.canonicalize();
    return q;
}

} // namespace

PolySystem force_common_root(int n, const std::vector<int>& degrees,
                             const std::vector<Rational>& root, uint64_t seed) {
    if (static_cast<int>(root.size()) != n) throw InputError("root has wrong dimension");
    int b = -1;
    for (int i = 0; i < n; ++i)
        if (root[i] != 0) {
            b = i;
            break;
        }
    if (b < 0) throw InputError("force_common_root: root must not be the zero vector");

    std::mt19937_64 rng(seed);
    std::vector<HomogeneousPoly> polys;
    for (int i = 0; i < n; ++i) {
        HomogeneousPoly p(n, degrees.at(i));
        std::map<MultiIndex, Rational> acc;
        // generators x_a*m - (root_a/root_b)*x_b*m all vanish at root
        for (const auto& m : sorted_multi_indices(n, degrees[i] - 1)) {
            for (int a = 0; a < n; ++a) {
                if (a == b) continue;
                Rational w = random_rational(rng, false);
                if (w == 0) continue;
                MultiIndex ia = m;
                ia.push_back(a + 1);
                std::sort(ia.begin(), ia.end());
                MultiIndex ib = m;
                ib.push_back(b + 1);
                std::sort(ib.begin(), ib.end());
                acc[ia] += w;
                acc[ib] -= w * root[a] / root[b];
            }
        }
        for (const auto& [idx, c] : acc)
            if (c != 0) p.set_coeff(idx, MPoly::constant(c));
        polys.push_back(std::move(p));
    }
    return PolySystem(std::move(polys));
}

PolySystem random_numeric_system(int n, const std::vector<int>& degrees, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<HomogeneousPoly> polys;
    for (int i = 0; i < n; ++i) {
        HomogeneousPoly p(n, degrees.at(i));
        for (const auto& idx : sorted_multi_indices(n, degrees[i]))
            p.set_coeff(idx, MPoly::constant(random_rational(rng, true)));
        polys.push_back(std::move(p));
    }
    return PolySystem(std::move(polys));
}

// ---------------------------------------------------------------------------
// JSON interchange

namespace {

bool is_default_symbolic(const HomogeneousPoly& p, int poly_index) {
    auto all = sorted_multi_indices(p.nvars(), p.degree());
    for (const auto& idx : all)
        if (p.coeff(idx) != MPoly::variable(Symbol::coeff(poly_index, idx))) return false;
    return true;
}

} // namespace

PolySystem parse_system_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    try {
        if (!doc.is_object()) throw InputError("system document must be a JSON object");
        int n = doc.at("n").get<int>();
        std::vector<int> degrees = doc.at("degrees").get<std::vector<int>>();
        if (n < 1) throw InputError("n must be positive");
        if (static_cast<int>(degrees.size()) != n)
            throw InputError("degrees length must equal n");
        std::string mode = doc.value("mode", "symbolic");
        if (mode != "symbolic" && mode != "numeric" && mode != "mixed")
            throw InputError("mode must be symbolic, numeric or mixed");

        if (!doc.contains("polynomials")) {
            if (mode != "symbolic")
                throw InputError("mode '" + mode + "' requires a polynomials array");
            return build_symbolic(n, degrees);
        }

        const json& parr = doc.at("polynomials");
        if (!parr.is_array() || static_cast<int>(parr.size()) != n)
            throw InputError("polynomials must be an array of n entries");

        std::vector<HomogeneousPoly> polys;
        for (int i = 0; i < n; ++i) {
            if (degrees[i] < 1) throw InputError("degrees must be positive");
            HomogeneousPoly p(n, degrees[i]);
            const json& pj = parr.at(i);
            if (pj.contains("monomials")) {
                for (const json& mj : pj.at("monomials")) {
                    MultiIndex idx = mj.at("index").get<MultiIndex>();
                    if (!std::is_sorted(idx.begin(), idx.end()))
                        throw InputError("monomial index is not sorted nondecreasing (canonical form)");
                    if (!p.coeff(idx).is_zero())
                        throw InputError("duplicate monomial index in polynomial " + std::to_string(i + 1));
                    MPoly c = MPoly::parse(mj.at("coeff").get<std::string>());
                    if (mode == "numeric" && !c.is_constant())
                        throw InputError("numeric mode requires constant coefficients");
                    p.set_coeff(idx, std::move(c));
                }
            }
            polys.push_back(std::move(p));
        }
        return PolySystem(std::move(polys));
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed system document: ") + e.what());
    }
}

std::string serialize_system_json(const PolySystem& system, int indent) {
    json doc;
    doc["schema"] = 1;
    doc["n"] = system.n();
    doc["degrees"] = system.degrees();

    bool symbolic = true, numeric = true;
    for (int i = 0; i < system.n(); ++i) {
        symbolic = symbolic && is_default_symbolic(system.poly(i), i + 1);
        numeric = numeric && system.poly(i).is_numeric();
    }
    doc["mode"] = symbolic ? "symbolic" : (numeric ? "numeric" : "mixed");
    if (!symbolic) {
        json parr = json::array();
        for (const auto& p : system.polys()) {
            json monomials = json::array();
            for (const auto& [idx, c] : p.coeffs()) {
                json mj;
                mj["index"] = idx;
                mj["coeff"] = c.to_string();
                monomials.push_back(std::move(mj));
            }
            json pj;
            pj["monomials"] = std::move(monomials);
            parr.push_back(std::move(pj));
        }
        doc["polynomials"] = std::move(parr);
    }
    return doc.dump(indent);
}

} // namespace polyres
