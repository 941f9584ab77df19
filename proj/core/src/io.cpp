#include "hrnr/io.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "hrnr/errors.hpp"
#include "hrnr/version.hpp"

namespace hrnr {

namespace {

using nlohmann::json;

// JSON has no infinity; residuals that are +inf are written as this sentinel.
constexpr double kInfSentinel = 1e300;

double json_safe(double v) {
    if (std::isinf(v)) return v > 0 ? kInfSentinel : -kInfSentinel;
    return v;
}

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw InputError("matrix file: expected an object with \"n\" and \"entries\"");
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1)
        throw InputError("matrix file: \"n\" must be a positive integer");
    const std::size_t n = j["n"].get<std::size_t>();
    const json& e = j["entries"];
    if (!e.is_array() || e.size() != n)
        throw InputError("matrix file: non-square entries (row count mismatch)");
    ComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = e[i];
        if (!row.is_array() || row.size() != n)
            throw InputError("matrix file: non-square entries (column count mismatch)");
        for (std::size_t k = 0; k < n; ++k) {
            const json& cell = row[k];
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
                !cell[1].is_number())
                throw InputError("matrix file: entry must be a [re, im] number pair");
            const double re = cell[0].get<double>();
            const double im = cell[1].get<double>();
            if (!std::isfinite(re) || !std::isfinite(im))
                throw InputError("matrix file: non-finite entry");
            a(i, k) = cplx(re, im);
        }
    }
    return a;
}

}  // namespace

ComplexMatrix matrix_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("matrix file: malformed JSON: ") + e.what());
    }
    return matrix_from_json(j);
}

ComplexMatrix read_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open matrix file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return matrix_from_json_text(buf.str());
}

std::string matrix_to_json_text(const ComplexMatrix& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.dim(); ++j)
            row.push_back(json::array({a(i, j).real(), a(i, j).imag()}));
        rows.push_back(std::move(row));
    }
    json j;
    j["n"] = a.dim();
    j["entries"] = std::move(rows);
    return j.dump();
}

std::string poly_to_json_text(const TrivariatePoly& p) {
    const double cutoff = 1e-12 * (1.0 + p.max_abs_coeff());
    json coeffs = json::array();
    const int n = p.degree();
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n - i; ++j) {
            const double c = p.coeff(i, j, n - i - j);
            if (std::abs(c) <= cutoff) continue;
            json item;
            item["i"] = i;
            item["j"] = j;
            item["k"] = n - i - j;
            item["c"] = c;
            coeffs.push_back(std::move(item));
        }
    json j;
    j["degree"] = n;
    j["coeffs"] = std::move(coeffs);
    return j.dump();
}

std::string region_to_json_text(const ConvexRegion& r) {
    json j;
    j["classification"] = to_string(r.classification);
    if (r.classification != RegionKind::empty) {
        json verts = json::array();
        for (const Vec2& v : r.vertices) verts.push_back(json::array({v.x, v.y}));
        j["vertices"] = std::move(verts);
    }
    j["chebyshev"] = {{"center", json::array({r.chebyshev_center.x, r.chebyshev_center.y})},
                      {"radius", r.chebyshev_radius}};
    return j.dump();
}

std::string factors_to_json_text(const std::vector<LinearFactor>& fs) {
    json arr = json::array();
    for (const LinearFactor& f : fs)
        arr.push_back({{"a", f.a}, {"b", f.b}, {"multiplicity", f.multiplicity}});
    json j;
    j["factors"] = std::move(arr);
    return j.dump();
}

std::string vsets_to_json_text(const VSets& v) {
    json sets = json::array();
    for (std::size_t l = 0; l < v.sets.size(); ++l) {
        json pts = json::array();
        for (const cplx& p : v.sets[l]) pts.push_back(json::array({p.real(), p.imag()}));
        sets.push_back({{"l", l + 1}, {"points", std::move(pts)}});
    }
    json j;
    j["V"] = std::move(sets);
    j["top"] = json::array();
    if (v.top.has_value()) j["top"].push_back(json::array({v.top->real(), v.top->imag()}));
    return j.dump();
}

std::string membership_to_json_text(const MembershipResult& m) {
    json j;
    j["verdict"] = to_string(m.verdict);
    j["margin"] = m.margin;
    return j.dump();
}

std::string report_to_json_text(const EquivalenceReport& rep) {
    json a_res = json::array();
    for (double d : rep.cond_a_residuals) a_res.push_back(json_safe(d));
    json j;
    j["tool"] = "hrnr";
    j["version"] = std::string(kVersion);
    j["grid"] = rep.grid;
    j["tol_geo"] = rep.tol_geo;
    j["tol_poly"] = rep.tol_poly;
    j["cond_a"] = {{"holds", rep.cond_a}, {"residuals", std::move(a_res)}};
    j["cond_b"] = {{"holds", rep.cond_b}, {"residual", json_safe(rep.cond_b_residual)}};
    j["cond_c"] = {{"holds", rep.cond_c}, {"residual", json_safe(rep.cond_c_residual)}};
    j["consistent"] = rep.consistent;
    return j.dump();
}

cplx parse_complex_point(const std::string& text) {
    // trim outer whitespace
    std::size_t b = text.find_first_not_of(" \t");
    std::size_t e = text.find_last_not_of(" \t");
    if (b == std::string::npos) throw InputError("complex point: empty string");
    const std::string s = text.substr(b, e - b + 1);

    for (char ch : s)
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '+' || ch == '-' ||
              ch == '.' || ch == 'e' || ch == 'E' || ch == 'i'))
            throw InputError("complex point: unexpected character in \"" + s + "\"");

    const char* p = s.c_str();
    auto parse_number = [&](const char*& q, double& out) -> bool {
        // sign-only prefixes of 'i' are handled by the caller
        char* endp = nullptr;
        const double v = std::strtod(q, &endp);
        if (endp == q) return false;
        q = endp;
        out = v;
        return true;
    };

    double first = 0.0;
    bool have_first = parse_number(p, first);
    if (!have_first) {
        // forms: "i", "+i", "-i"
        double sign = 1.0;
        if (*p == '+' || *p == '-') {
            if (*p == '-') sign = -1.0;
            ++p;
        }
        if (*p == 'i' && *(p + 1) == '\0') return cplx(0.0, sign);
        throw InputError("complex point: cannot parse \"" + s + "\"");
    }
    if (*p == '\0') return cplx(first, 0.0);  // pure real
    if (*p == 'i' && *(p + 1) == '\0') return cplx(0.0, first);  // pure imaginary

    // real followed by signed imaginary
    if (*p != '+' && *p != '-')
        throw InputError("complex point: expected sign before imaginary part in \"" + s + "\"");
    const char* q = p;
    double second = 0.0;
    if (parse_number(q, second)) {
        if (*q == 'i' && *(q + 1) == '\0') return cplx(first, second);
        throw InputError("complex point: trailing characters in \"" + s + "\"");
    }
    // bare "+i" / "-i"
    double sign = (*p == '-') ? -1.0 : 1.0;
    ++p;
    if (*p == 'i' && *(p + 1) == '\0') return cplx(first, sign);
    throw InputError("complex point: cannot parse \"" + s + "\"");
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open output file: " + path);
    out << content;
    if (!out) throw InputError("failed writing output file: " + path);
}

}  // namespace hrnr
