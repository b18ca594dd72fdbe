#include "act/tensor_io.hpp"

#include <fstream>

#include "act/catalog.hpp"

namespace act {

namespace {

using nlohmann::json;

Rational parse_rational_field(const json& v, const char* what) {
    if (v.is_number_integer()) return rat(v.get<long>());
    if (v.is_string()) {
        auto q = parse_rational(v.get<std::string>());
        if (q) return *q;
    }
    throw input_error(std::string(what) + ": expected an exact rational (integer or \"p/q\" string)");
}

GaussianRational parse_gaussian_field(const json& v, const char* what) {
    if (v.is_object()) {
        GaussianRational z;
        if (v.contains("re")) z.re = parse_rational_field(v.at("re"), what);
        if (v.contains("im")) z.im = parse_rational_field(v.at("im"), what);
        return z;
    }
    return GaussianRational(parse_rational_field(v, what));
}

template <class K>
K parse_scalar(const json& v, const char* what);
template <>
Rational parse_scalar<Rational>(const json& v, const char* what) {
    return parse_rational_field(v, what);
}
template <>
GaussianRational parse_scalar<GaussianRational>(const json& v, const char* what) {
    return parse_gaussian_field(v, what);
}

json scalar_to_json(const Rational& q) { return to_string(q); }
json scalar_to_json(const GaussianRational& z) {
    if (is_zero(z.im)) return to_string(z.re);
    return json{{"re", to_string(z.re)}, {"im", to_string(z.im)}};
}

template <class K>
Matrix<K> parse_matrix(const json& rows, int n, const char* what) {
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw input_error(std::string(what) + ": expected an " + std::to_string(n) + "-row matrix");
    Matrix<K> m(n, n);
    for (int i = 0; i < n; ++i) {
        const json& row = rows.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw input_error(std::string(what) + ": row " + std::to_string(i + 1) + " has wrong length");
        for (int j = 0; j < n; ++j) m.at(i, j) = parse_scalar<K>(row.at(static_cast<std::size_t>(j)), what);
    }
    return m;
}

// Exact congruence diagonalization: returns a basis matrix B (columns are the
// new basis in old coordinates) with B^T G B diagonal.
std::pair<Matrix<Rational>, std::vector<Rational>> congruence_diagonalize(Matrix<Rational> g) {
    const int n = g.rows();
    Matrix<Rational> basis = Matrix<Rational>::identity(n);
    auto add_basis = [&](int dst, int src, const Rational& f) {
        // e_dst += f e_src: congruence row+col update on g, column update on B
        for (int c = 0; c < n; ++c) g.at(dst, c) = g.at(dst, c) + f * g.at(src, c);
        for (int r = 0; r < n; ++r) g.at(r, dst) = g.at(r, dst) + f * g.at(r, src);
        for (int r = 0; r < n; ++r) basis.at(r, dst) = basis.at(r, dst) + f * basis.at(r, src);
    };
    auto swap_basis = [&](int a, int b) {
        for (int c = 0; c < n; ++c) std::swap(g.at(a, c), g.at(b, c));
        for (int r = 0; r < n; ++r) std::swap(g.at(r, a), g.at(r, b));
        for (int r = 0; r < n; ++r) std::swap(basis.at(r, a), basis.at(r, b));
    };
    for (int k = 0; k < n; ++k) {
        if (is_zero(g.at(k, k))) {
            int with_diag = -1, with_off = -1;
            for (int j = k + 1; j < n; ++j) {
                if (with_diag < 0 && !is_zero(g.at(j, j))) with_diag = j;
                if (with_off < 0 && !is_zero(g.at(k, j))) with_off = j;
            }
            if (with_diag >= 0)
                swap_basis(k, with_diag);
            else if (with_off >= 0)
                add_basis(k, with_off, Rational(1));
            else
                throw input_error("metric is degenerate");
        }
        Rational pivot = g.at(k, k);
        for (int j = k + 1; j < n; ++j) {
            if (is_zero(g.at(k, j))) continue;
            add_basis(j, k, Rational(-g.at(k, j) / pivot));
        }
    }
    std::vector<Rational> diag;
    diag.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) diag.push_back(g.at(i, i));
    return {basis, diag};
}

// Canonical space + exact change of basis from a diagonal rational metric.
std::pair<Space, Matrix<Rational>> canonicalize_metric(const Matrix<Rational>& g, Field field) {
    const int n = g.rows();
    auto [basis, diag] = congruence_diagonalize(g);
    std::vector<int> order;
    for (int i = 0; i < n; ++i)
        if (sgn(diag[static_cast<std::size_t>(i)]) > 0) order.push_back(i);
    int p = static_cast<int>(order.size());
    for (int i = 0; i < n; ++i)
        if (sgn(diag[static_cast<std::size_t>(i)]) < 0) order.push_back(i);
    Matrix<Rational> m(n, n);
    for (int newcol = 0; newcol < n; ++newcol) {
        int oldcol = order[static_cast<std::size_t>(newcol)];
        const Rational& d = diag[static_cast<std::size_t>(oldcol)];
        auto root = rational_sqrt(rat_abs(d));
        if (!root)
            throw input_error(
                "metric canonicalization needs every congruence-diagonal entry to be +/- a rational "
                "square (got " + to_string(d) + "); supply a +/-1 diagonal metric or rescale");
        Rational inv = 1 / *root;
        for (int r = 0; r < n; ++r) m.at(r, newcol) = basis.at(r, oldcol) * inv;
    }
    return {Space::make(p, n - p, field), m};
}

template <class K>
DenseComponents<K> transform_components(const DenseComponents<K>& dense, const Matrix<Rational>& b, int n) {
    // successive one-index contractions with B
    DenseComponents<K> cur = dense;
    for (int slot = 0; slot < 4; ++slot) {
        DenseComponents<K> next(cur.size(), K(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        // contract the first index, then rotate index roles
                        K acc = K(0);
                        for (int m = 0; m < n; ++m) {
                            const Rational& f = b.at(m, i);
                            if (is_zero(f)) continue;
                            acc = acc + K(f) * cur[dense_index(n, m, j, k, l)];
                        }
                        // store rotated so that after 4 passes all indices are transformed
                        next[dense_index(n, j, k, l, i)] = acc;
                    }
        cur = std::move(next);
    }
    return cur;
}

struct SpaceSpec {
    Space space;
    std::optional<Matrix<Rational>> basis_change;  // set when a metric was canonicalized
};

SpaceSpec parse_space(const json& j) {
    if (!j.contains("dimension")) throw input_error("tensor file: missing \"dimension\"");
    int n = j.at("dimension").get<int>();
    if (n < 2 || n > 12) throw input_error("tensor file: dimension must be in [2, 12]");
    Field field = Field::real;
    if (j.contains("field")) {
        std::string f = j.at("field").get<std::string>();
        if (f == "complex")
            field = Field::complex;
        else if (f != "real")
            throw input_error("tensor file: field must be \"real\" or \"complex\"");
    }
    if (j.contains("signature")) {
        const json& sig = j.at("signature");
        if (!sig.is_array() || sig.size() != 2) throw input_error("tensor file: signature must be [p, q]");
        int p = sig.at(0).get<int>(), q = sig.at(1).get<int>();
        if (p + q != n) throw input_error("tensor file: signature entries must sum to the dimension");
        return {Space::make(p, q, field), std::nullopt};
    }
    Matrix<Rational> g(n, n);
    if (j.contains("metric_diag")) {
        const json& d = j.at("metric_diag");
        if (!d.is_array() || static_cast<int>(d.size()) != n)
            throw input_error("tensor file: metric_diag must list n entries");
        for (int i = 0; i < n; ++i) g.at(i, i) = parse_rational_field(d.at(static_cast<std::size_t>(i)), "metric_diag");
    } else if (j.contains("metric")) {
        g = parse_matrix<Rational>(j.at("metric"), n, "metric");
        if (!g.is_symmetric()) throw input_error("tensor file: metric must be symmetric");
    } else {
        throw input_error("tensor file: one of \"signature\", \"metric_diag\", \"metric\" is required");
    }
    auto [space, basis] = canonicalize_metric(g, field);
    bool is_identity_change = true;
    for (int i = 0; i < n && is_identity_change; ++i)
        for (int jj = 0; jj < n && is_identity_change; ++jj)
            if (basis.at(i, jj) != (i == jj ? Rational(1) : Rational(0))) is_identity_change = false;
    if (is_identity_change) return {space, std::nullopt};
    return {space, basis};
}

template <class K>
CurvatureTensor<K> load_components(const Space& s, const std::optional<Matrix<Rational>>& basis,
                                   const json& comps) {
    const int n = s.n;
    if (!comps.is_array()) throw input_error("tensor file: \"components\" must be an array");
    DenseComponents<K> dense(static_cast<std::size_t>(n) * n * n * n, K(0));
    std::vector<bool> seen(dense.size(), false);
    for (const json& entry : comps) {
        int idx[4];
        const char* names[4] = {"i", "j", "k", "l"};
        for (int a = 0; a < 4; ++a) {
            if (!entry.contains(names[a])) throw input_error("tensor file: component entry missing index");
            idx[a] = entry.at(names[a]).get<int>();
            if (idx[a] < 1 || idx[a] > n)
                throw input_error("tensor file: component index " + std::to_string(idx[a]) +
                                  " out of range 1.." + std::to_string(n));
            --idx[a];
        }
        K value = parse_scalar<K>(entry.at("value"), "component value");
        // expand the full symmetry orbit of the listed entry
        struct Image {
            int i, j, k, l;
            int sign;
        };
        std::vector<Image> orbit;
        auto push_orbit = [&orbit](int i, int j, int k, int l, int sign) {
            orbit.push_back({i, j, k, l, sign});
            orbit.push_back({j, i, k, l, -sign});
            orbit.push_back({i, j, l, k, -sign});
            orbit.push_back({j, i, l, k, sign});
        };
        push_orbit(idx[0], idx[1], idx[2], idx[3], 1);
        push_orbit(idx[2], idx[3], idx[0], idx[1], 1);
        for (const Image& im : orbit) {
            std::size_t di = dense_index(n, im.i, im.j, im.k, im.l);
            K v = im.sign < 0 ? K(K(0) - value) : value;
            if (seen[di]) {
                if (dense[di] != v)
                    throw symmetry_violation_error(SymmetryReport{
                        {{SymmetryViolation::Family::antisymmetry, im.i, im.j, im.k, im.l,
                          "conflicting values for one symmetry orbit"}}});
            } else {
                seen[di] = true;
                dense[di] = v;
            }
        }
    }
    if (basis) dense = transform_components(dense, *basis, n);
    SymmetryReport rep = CurvatureTensor<K>::validate_dense(s, dense);
    if (!rep.ok()) throw symmetry_violation_error(std::move(rep));
    return CurvatureTensor<K>::from_dense(s, dense);
}

template <class K>
CurvatureTensor<K> build_constructor(const Space& s, const std::string& name, const json& params) {
    if (name == "constant_curvature") return catalog::constant_curvature(s, parse_scalar<K>(params.at("k"), "k"));
    if (name == "rank_one_generator")
        return catalog::rank_one_generator(s, parse_matrix<K>(params.at("phi"), s.n, "phi"));
    if (name == "clifford_tensor") {
        K lambda0 = parse_scalar<K>(params.at("lambda0"), "lambda0");
        std::vector<K> lambdas;
        for (const json& l : params.at("lambdas")) lambdas.push_back(parse_scalar<K>(l, "lambdas"));
        catalog::AnticommutingStructure<K> cs;
        if (params.contains("operators")) {
            cs.space = s;
            for (const json& op : params.at("operators")) cs.js.push_back(parse_matrix<K>(op, s.n, "operators"));
        } else {
            cs = catalog::standard_anticommuting<K>(s, static_cast<int>(lambdas.size()));
        }
        return catalog::clifford_tensor(s, cs, lambda0, lambdas);
    }
    if (name == "random_act") {
        std::uint64_t seed = params.at("seed").get<std::uint64_t>();
        int generators = params.at("generators").get<int>();
        long bound = params.value("bound", 5L);
        return catalog::random_act<K>(s, seed, generators, bound);
    }
    if (name == "nilpotent_example") return catalog::nilpotent_example<K>(s.p, s.q);
    if (name == "zero") return CurvatureTensor<K>::zero(s);
    throw input_error("tensor file: unknown constructor \"" + name + "\"");
}

} // namespace

LoadedTensor load_tensor_json(const json& j) {
    if (!j.is_object()) throw input_error("tensor file: top level must be an object");
    if (j.contains("convention") && j.at("convention").get<std::string>() != kComponentConvention)
        throw input_error(std::string("tensor file: unsupported component convention; expected \"") +
                          kComponentConvention + "\"");
    SpaceSpec ss = parse_space(j);
    const Space& s = ss.space;

    bool complex_field = s.field == Field::complex;
    LoadedTensor out;
    json norm;
    norm["dimension"] = s.n;
    norm["field"] = to_string(s.field);
    norm["signature"] = {s.p, s.q};
    norm["convention"] = kComponentConvention;

    if (j.contains("components")) {
        if (complex_field) {
            auto t = load_components<GaussianRational>(s, ss.basis_change, j.at("components"));
            norm["components"] = tensor_components_json(t);
            out.tensor = std::move(t);
        } else {
            auto t = load_components<Rational>(s, ss.basis_change, j.at("components"));
            norm["components"] = tensor_components_json(t);
            out.tensor = std::move(t);
        }
    } else if (j.contains("constructor")) {
        const json& ctor = j.at("constructor");
        std::string name = ctor.at("name").get<std::string>();
        json params = ctor.value("parameters", json::object());
        if (complex_field)
            out.tensor = build_constructor<GaussianRational>(s, name, params);
        else
            out.tensor = build_constructor<Rational>(s, name, params);
        norm["constructor"] = {{"name", name}, {"parameters", params}};
    } else {
        throw input_error("tensor file: either \"components\" or \"constructor\" is required");
    }
    out.spec = std::move(norm);
    return out;
}

LoadedTensor load_tensor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open tensor file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw input_error("tensor file " + path + ": " + e.what());
    }
    try {
        return load_tensor_json(j);
    } catch (const json::exception& e) {
        throw input_error("tensor file " + path + ": " + e.what());
    }
}

template <class K>
json tensor_components_json(const CurvatureTensor<K>& t) {
    const int n = t.space().n;
    json arr = json::array();
    // canonical representatives only: i<j, k<l, (i,j) <= (k,l)
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    if (detail::pair_index(n, i, j) > detail::pair_index(n, k, l)) continue;
                    K v = t.component(i, j, k, l);
                    if (is_zero(v)) continue;
                    arr.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"l", l + 1},
                                   {"value", scalar_to_json(v)}});
                }
    return arr;
}

template json tensor_components_json<Rational>(const CurvatureTensor<Rational>&);
template json tensor_components_json<GaussianRational>(const CurvatureTensor<GaussianRational>&);

json save_tensor_json(const LoadedTensor& t) { return t.spec; }

void save_tensor_file(const LoadedTensor& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write tensor file: " + path);
    out << save_tensor_json(t).dump(2) << "\n";
}

json constructor_spec_json(int p, int q, const std::string& field, const std::string& name,
                           const json& parameters) {
    json j;
    j["dimension"] = p + q;
    j["field"] = field;
    j["signature"] = {p, q};
    j["convention"] = kComponentConvention;
    j["constructor"] = {{"name", name}, {"parameters", parameters}};
    return j;
}

} // namespace act
