#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ptb/chart.hpp"
#include "ptb/classify.hpp"
#include "ptb/lab.hpp"
#include "ptb/matrix.hpp"
#include "ptb/rational.hpp"

namespace ptb {

using json = nlohmann::ordered_json;

// Rational matrices: {"n": N, "entries": [["p/q", ...], ...]}, (n+1)x(n+1).
Matrix<Rational> matrix_from_json(const json& j);
json matrix_to_json(int n, const Matrix<Rational>& a);

// Prime-field matrices: {"q": Q, "entries": [[0, 1, ...], ...]}.
Matrix<Fp> fp_matrix_from_json(const json& j);
json fp_matrix_to_json(const Matrix<Fp>& a);

json report_to_json(const SectionReport& r);
SectionReport report_from_json(const json& j);

json count_report_to_json(const CountReport& r);
json split_report_to_json(const SplitReport& r);
json chart_check_to_json(const ChartCheck& c);

json chart_to_json(const ChartEquation<Rational>& eq);
json chart_to_json(const ChartEquation<Fp>& eq);

// Catalog: [{"q": Q, "blocks": [{"eigenvalue": e, "size": s}, ...]} |
//           {"q": Q, "entries": [[...]]}], optional "label" per entry.
std::vector<CatalogEntry> catalog_from_json(const json& j);

json load_json_file(const std::string& path);   // throws InputError
std::string fnv1a_digest(const std::string& bytes);
std::string read_file(const std::string& path); // throws InputError

} // namespace ptb
