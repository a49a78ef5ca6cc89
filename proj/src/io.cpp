#include "ptb/io.hpp"

#include <fstream>
#include <sstream>

#include "ptb/errors.hpp"

namespace ptb {

namespace {

json int_to_json(const Int& v) {
    // JSON numbers are only exact up to 2^53; bigger values go out as strings
    static const Int lo = -(Int(1) << 53), hi = Int(1) << 53;
    if (v >= lo && v <= hi) return json(static_cast<int64_t>(v));
    return json(v.str());
}

json vshape_to_json(const VShape& v) {
    json j;
    j["s"] = v.s;
    j["r"] = v.r;
    j["dim"] = v_shape_dim(v);
    return j;
}

VShape vshape_from_json(const json& j) {
    VShape v{j.at("s").get<int>(), j.at("r").get<int>()};
    return v;
}

} // namespace

Matrix<Rational> matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw InputError("matrix JSON needs fields 'n' and 'entries'");
    if (!j.at("n").is_number_integer()) throw InputError("'n' must be an integer");
    int n = j.at("n").get<int>();
    if (n < 2) throw InputError("sections are defined for n >= 2");
    size_t dim = static_cast<size_t>(n) + 1;
    const json& rows = j.at("entries");
    if (!rows.is_array() || rows.size() != dim)
        throw InputError("'entries' must have n+1 rows");
    std::vector<std::vector<Rational>> out;
    for (const json& row : rows) {
        if (!row.is_array() || row.size() != dim)
            throw InputError("'entries' rows must have n+1 columns");
        std::vector<Rational> r;
        for (const json& cell : row) {
            if (cell.is_number_integer())
                r.emplace_back(cell.get<int64_t>());
            else if (cell.is_string()) {
                try {
                    r.push_back(parse_rational(cell.get<std::string>()));
                } catch (const std::invalid_argument& e) {
                    throw InputError(e.what());
                }
            } else
                throw InputError("matrix entries must be integers or 'p/q' strings");
        }
        out.push_back(std::move(r));
    }
    return Matrix<Rational>::from_rows(out);
}

json matrix_to_json(int n, const Matrix<Rational>& a) {
    json j;
    j["n"] = n;
    json rows = json::array();
    for (size_t i = 0; i < a.rows; ++i) {
        json row = json::array();
        for (size_t k = 0; k < a.cols; ++k) row.push_back(format_rational(a.at(i, k)));
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j;
}

Matrix<Fp> fp_matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("q") || !j.contains("entries"))
        throw InputError("prime-field matrix JSON needs fields 'q' and 'entries'");
    if (!j.at("q").is_number_integer()) throw InputError("'q' must be an integer");
    int64_t q = j.at("q").get<int64_t>();
    if (q < 3 || q > INT32_MAX) throw InputError("modulus out of range (need 2 < q < 2^31)");
    try {
        check_modulus(static_cast<uint32_t>(q));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    const json& rows = j.at("entries");
    if (!rows.is_array() || rows.empty()) throw InputError("'entries' must be a nonempty array");
    std::vector<std::vector<int64_t>> out;
    for (const json& row : rows) {
        if (!row.is_array() || row.size() != rows.size())
            throw InputError("'entries' must be square");
        std::vector<int64_t> r;
        for (const json& cell : row) {
            if (!cell.is_number_integer())
                throw InputError("prime-field entries must be integers");
            r.push_back(cell.get<int64_t>());
        }
        out.push_back(std::move(r));
    }
    return fp_matrix(static_cast<uint32_t>(q), out);
}

json fp_matrix_to_json(const Matrix<Fp>& a) {
    json j;
    j["q"] = a.e[0].q;
    json rows = json::array();
    for (size_t i = 0; i < a.rows; ++i) {
        json row = json::array();
        for (size_t k = 0; k < a.cols; ++k) row.push_back(a.at(i, k).v);
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j;
}

json report_to_json(const SectionReport& r) {
    json j;
    j["n"] = r.n;
    j["degree"] = int_to_json(r.degree);
    j["reducible"] = r.reducible;
    if (r.reducible) {
        j["reducible_kind"] = r.reducible_kind;
        j["component_degree"] = int_to_json(r.component_degree);
        j["component_type"] = r.component_type;
        j["component_intersection"] = vshape_to_json(r.component_intersection);
    } else {
        json shapes = json::array();
        for (const SingShape& s : r.sing_shapes) {
            json e;
            e["factor_degree"] = s.factor_degree;
            e["multiplicity"] = s.multiplicity;
            e["shape"] = vshape_to_json(s.shape);
            shapes.push_back(e);
        }
        j["sing_shapes"] = shapes;
    }
    j["sing_dim"] = r.sing_dim;
    j["smooth"] = r.smooth;
    j["dual_member"] = r.dual_member;
    j["canonical"] = r.canonical;
    return j;
}

namespace {

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw InputError("expected an integer or decimal string");
}

} // namespace

SectionReport report_from_json(const json& j) {
    SectionReport r;
    r.n = j.at("n").get<int>();
    r.degree = int_from_json(j.at("degree"));
    r.reducible = j.at("reducible").get<bool>();
    if (r.reducible) {
        r.reducible_kind = j.at("reducible_kind").get<std::string>();
        r.component_degree = int_from_json(j.at("component_degree"));
        r.component_type = j.at("component_type").get<std::string>();
        r.component_intersection = vshape_from_json(j.at("component_intersection"));
    } else {
        for (const json& e : j.at("sing_shapes")) {
            SingShape s;
            s.factor_degree = e.at("factor_degree").get<int>();
            s.multiplicity = e.at("multiplicity").get<int>();
            s.shape = vshape_from_json(e.at("shape"));
            r.sing_shapes.push_back(s);
        }
    }
    r.sing_dim = j.at("sing_dim").get<int>();
    r.smooth = j.at("smooth").get<bool>();
    r.dual_member = j.at("dual_member").get<bool>();
    r.canonical = j.at("canonical").get<bool>();
    return r;
}

json count_report_to_json(const CountReport& r) {
    json j;
    j["q"] = r.q;
    j["n"] = r.n;
    j["h_points"] = r.h_points;
    j["sing_enumerated"] = r.sing_enumerated;
    j["sing_predicted"] = r.sing_predicted;
    json shapes = json::array();
    for (const ShapeCount& s : r.shapes) {
        json e;
        e["eigenvalue"] = s.eigenvalue;
        e["s"] = s.s;
        e["r"] = s.r;
        e["enumerated"] = s.enumerated;
        e["predicted"] = s.predicted;
        shapes.push_back(e);
    }
    j["shapes"] = shapes;
    j["match"] = r.match;
    return j;
}

json split_report_to_json(const SplitReport& r) {
    json j;
    j["q"] = r.q;
    j["n"] = r.n;
    j["lambda"] = r.lambda;
    j["kind"] = r.kind;
    j["h_points"] = r.h_points;
    j["d1"] = r.d1;
    j["d2"] = r.d2;
    j["intersection"] = r.both;
    j["intersection_predicted"] = r.intersection_predicted;
    j["union_matches"] = r.union_matches;
    j["intersection_matches"] = r.intersection_matches;
    j["match"] = r.match;
    return j;
}

json chart_check_to_json(const ChartCheck& c) {
    json j;
    j["i"] = c.i;
    j["j"] = c.j;
    j["chart_singular"] = c.chart_singular;
    j["global_in_chart"] = c.global_in_chart;
    j["match"] = c.match;
    return j;
}

namespace {

template <class K, class CoeffFn>
json chart_to_json_impl(const ChartEquation<K>& eq, CoeffFn&& coeff) {
    json j;
    j["n"] = eq.n;
    j["i"] = eq.i;
    j["j"] = eq.j;
    j["variables"] = eq.var_names;
    j["degree"] = eq.p.total_degree();
    json terms = json::array();
    for (const auto& [e, k] : eq.p.terms) {
        json t;
        t["exponents"] = e;
        t["coefficient"] = coeff(k);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

} // namespace

json chart_to_json(const ChartEquation<Rational>& eq) {
    return chart_to_json_impl(eq, [](const Rational& k) { return format_rational(k); });
}

json chart_to_json(const ChartEquation<Fp>& eq) {
    json j = chart_to_json_impl(eq, [](const Fp& k) { return std::to_string(k.v); });
    json out;
    out["q"] = eq.p.terms.empty() ? 0 : eq.p.terms.begin()->second.q;
    for (auto& [key, val] : j.items()) out[key] = val;
    return out;
}

std::vector<CatalogEntry> catalog_from_json(const json& j) {
    if (!j.is_array()) throw InputError("catalog must be a JSON array");
    std::vector<CatalogEntry> out;
    for (const json& e : j) {
        CatalogEntry c;
        if (!e.is_object() || !e.contains("q")) throw InputError("catalog entry needs 'q'");
        int64_t q = e.at("q").get<int64_t>();
        if (q < 3 || q > INT32_MAX) throw InputError("catalog entry modulus out of range");
        try {
            check_modulus(static_cast<uint32_t>(q));
        } catch (const std::invalid_argument& ex) {
            throw InputError(ex.what());
        }
        c.q = static_cast<uint32_t>(q);
        try {
            if (e.contains("blocks")) {
                for (const json& b : e.at("blocks")) {
                    JordanBlock blk;
                    blk.eigenvalue = b.at("eigenvalue").get<int64_t>();
                    blk.size = b.at("size").get<int>();
                    if (blk.size < 1) throw InputError("Jordan block size must be >= 1");
                    c.blocks.push_back(blk);
                }
            } else if (e.contains("entries")) {
                for (const json& row : e.at("entries")) {
                    std::vector<int64_t> r;
                    for (const json& cell : row) r.push_back(cell.get<int64_t>());
                    c.raw_entries.push_back(std::move(r));
                }
            } else {
                throw InputError("catalog entry needs 'blocks' or 'entries'");
            }
            if (e.contains("label")) c.label = e.at("label").get<std::string>();
        } catch (const json::exception& ex) {
            throw InputError(std::string("malformed catalog entry: ") + ex.what());
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json load_json_file(const std::string& path) {
    std::string bytes = read_file(path);
    json j = json::parse(bytes, nullptr, false);
    if (j.is_discarded()) throw InputError("invalid JSON in file: " + path);
    return j;
}

std::string fnv1a_digest(const std::string& bytes) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

} // namespace ptb
