#include "randcolor/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace randcolor::io {

namespace {

Json int_list(std::span<const std::int64_t> xs)
{
    Json out = Json::array();
    for (auto x : xs) out.push_back(x);
    return out;
}

template <class T>
Json optional_value(const std::optional<T>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> optional_from(const Json& j, const char* key)
{
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

std::string joined(std::span<const std::int64_t> xs, char sep)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

std::string csv_cell(const std::optional<double>& v)
{
    return v ? format_double(*v) : std::string();
}

} // namespace

std::string format_double(double x)
{
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Json rational_to_json(const Rational& q)
{
    return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}, {"float", to_double(q)}};
}

Rational rational_from_json(const Json& j)
{
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(to_integer(j.get<std::int64_t>()));
    if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
        throw std::invalid_argument("rational must be {\"num\", \"den\"} or \"a/b\"");
    }
    return make_rational(Integer(j.at("num").get<std::string>()), Integer(j.at("den").get<std::string>()));
}

Json moments_to_json(const GraphStats& g, const Composition& c, const MomentReport& r)
{
    Json per_color = Json::array();
    for (std::size_t i = 0; i < c.parts(); ++i) {
        per_color.push_back(Json{{"color", i + 1},
                                 {"size", c[i]},
                                 {"mean", rational_to_json(r.per_color_mean[i])},
                                 {"var", rational_to_json(r.per_color_var[i])}});
    }
    return Json{{"n", g.n},
                {"m", g.m},
                {"sigma2", g.sigma2.get_str()},
                {"classes", int_list(c.classes())},
                {"per_color", per_color},
                {"mean_M", rational_to_json(r.mean_M)},
                {"mean_L", rational_to_json(r.mean_L)},
                {"var_common", rational_to_json(r.var_common)},
                {"a_c", rational_to_json(r.a_c)},
                {"b_c", rational_to_json(r.b_c)},
                {"rho", rational_to_json(r.rho)},
                {"zeta_sq", rational_to_json(r.zeta_sq)},
                {"imbalance_sq", rational_to_json(r.imbalance_sq)},
                {"normalized_var", rational_to_json(r.normalized_var)}};
}

std::string moments_to_csv(const GraphStats& g, const Composition& c, const MomentReport& r)
{
    std::string out = std::string(moments_csv_header) + "\n";
    out += std::to_string(g.n) + "," + std::to_string(g.m) + "," + joined(c.classes(), ';') + "," +
           g.sigma2.get_str();
    for (const Rational* q : {&r.mean_M, &r.mean_L, &r.var_common, &r.a_c, &r.b_c, &r.rho, &r.zeta_sq,
                              &r.imbalance_sq, &r.normalized_var}) {
        out += "," + format_double(to_double(*q));
    }
    return out + "\n";
}

Json regime_row_to_json(const experiments::RegimeRow& row)
{
    return Json{{"n", row.n},
                {"m", row.m},
                {"classes", int_list(row.classes)},
                {"zeta_sq", rational_to_json(row.zeta_sq)},
                {"rho", rational_to_json(row.rho)},
                {"imbalance_sq", rational_to_json(row.imbalance_sq)},
                {"normalized_var", rational_to_json(row.normalized_var)},
                {"rho_zeta_product", rational_to_json(row.rho_zeta_product)},
                {"pz_bound", rational_to_json(row.pz_bound)},
                {"trials", optional_value(row.trials)},
                {"empirical_mean", optional_value(row.empirical_mean)},
                {"empirical_mean_se", optional_value(row.empirical_mean_se)},
                {"empirical_var", optional_value(row.empirical_var)},
                {"empirical_var_se", optional_value(row.empirical_var_se)},
                {"deviation_prob", optional_value(row.deviation_prob)},
                {"predicted_regime", to_string(row.predicted_regime)}};
}

experiments::RegimeRow regime_row_from_json(const Json& j)
{
    experiments::RegimeRow row;
    row.n = j.at("n").get<std::int64_t>();
    row.m = j.at("m").get<std::int64_t>();
    row.classes = j.at("classes").get<std::vector<std::int64_t>>();
    row.zeta_sq = rational_from_json(j.at("zeta_sq"));
    row.rho = rational_from_json(j.at("rho"));
    row.imbalance_sq = rational_from_json(j.at("imbalance_sq"));
    row.normalized_var = rational_from_json(j.at("normalized_var"));
    row.rho_zeta_product = rational_from_json(j.at("rho_zeta_product"));
    row.pz_bound = rational_from_json(j.at("pz_bound"));
    row.trials = optional_from<std::int64_t>(j, "trials");
    row.empirical_mean = optional_from<double>(j, "empirical_mean");
    row.empirical_mean_se = optional_from<double>(j, "empirical_mean_se");
    row.empirical_var = optional_from<double>(j, "empirical_var");
    row.empirical_var_se = optional_from<double>(j, "empirical_var_se");
    row.deviation_prob = optional_from<double>(j, "deviation_prob");
    row.predicted_regime = experiments::regime_from_string(j.at("predicted_regime").get<std::string>());
    return row;
}

Json regime_rows_to_json(std::span<const experiments::RegimeRow> rows)
{
    Json out = Json::array();
    for (const auto& r : rows) out.push_back(regime_row_to_json(r));
    return out;
}

std::vector<experiments::RegimeRow> regime_rows_from_json(const Json& j)
{
    if (!j.is_array()) throw std::invalid_argument("regime rows must be a JSON array");
    std::vector<experiments::RegimeRow> out;
    for (const auto& item : j) out.push_back(regime_row_from_json(item));
    return out;
}

std::string regime_rows_to_csv(std::span<const experiments::RegimeRow> rows)
{
    std::string out = std::string(regime_csv_header) + "\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n) + "," + std::to_string(r.m) + "," + joined(r.classes, ';');
        for (const Rational* q : {&r.zeta_sq, &r.rho, &r.imbalance_sq, &r.normalized_var, &r.rho_zeta_product,
                                  &r.pz_bound}) {
            out += "," + format_double(to_double(*q));
        }
        out += "," + (r.trials ? std::to_string(*r.trials) : std::string());
        for (const auto* v : {&r.empirical_mean, &r.empirical_mean_se, &r.empirical_var, &r.empirical_var_se,
                              &r.deviation_prob}) {
            out += "," + csv_cell(*v);
        }
        out += "," + to_string(r.predicted_regime) + "\n";
    }
    return out;
}

Json regime_metadata(const experiments::FamilySpec& family, const experiments::RegimeResult& result,
                     std::size_t trials, std::uint64_t seed)
{
    return Json{{"family", family.graph.text()},
                {"coloring", family.coloring.text()},
                {"grid", int_list(family.grid)},
                {"trials", trials},
                {"seed", seed},
                {"thresholds",
                 Json{{"zeta_sq_min", result.thresholds.zeta_sq_min},
                      {"imbalance_min", result.thresholds.imbalance_min},
                      {"zeta_exponent_min", result.thresholds.zeta_exponent_min}}},
                {"zeta_sq_exponent", optional_value(result.zeta_exponent)},
                {"normalized_var_exponent", optional_value(result.normalized_var_exponent)},
                {"predicted_regime", to_string(result.regime)}};
}

Json comparison_to_json(const experiments::ComparisonRecord& rec)
{
    const auto& e = rec.empirical;
    return Json{{"n", rec.n},
                {"m", rec.m},
                {"classes", int_list(rec.classes)},
                {"trials", rec.trials},
                {"seed", rec.seed},
                {"exact_mean", rational_to_json(rec.exact_mean)},
                {"exact_var", rational_to_json(rec.exact_var)},
                {"empirical_mean", e.mean},
                {"empirical_mean_se", e.mean_se},
                {"empirical_var", e.var},
                {"empirical_var_se", e.var_se},
                {"min_M", e.min},
                {"max_M", e.max},
                {"mean_pass", rec.mean_pass},
                {"var_pass", rec.var_pass},
                {"L_constant", rec.l_constant}};
}

Json ratio_to_json(const randgraph::RatioCriterion& r)
{
    Json out{{"n", r.n},
             {"mode", to_string(r.mode)},
             {"numerator", r.numerator},
             {"denominator", r.denominator},
             {"ratio", r.ratio}};
    if (r.exact_ratio) out["exact_ratio"] = rational_to_json(*r.exact_ratio);
    if (r.mode == randgraph::RatioMode::MonteCarlo) {
        out["ratio_se"] = r.ratio_se;
        out["numerator_se"] = r.numerator_se;
        out["mean_m_se"] = r.mean_m_se;
    }
    if (r.pre_erasure_ratio) out["pre_erasure_ratio"] = *r.pre_erasure_ratio;
    out["verdict"] = to_string(r.verdict);
    return out;
}

Json sweep_to_json(const randgraph::RatioSweep& sweep)
{
    Json points = Json::array();
    for (const auto& p : sweep.points) points.push_back(ratio_to_json(p));
    return Json{{"points", points}, {"exponent", optional_value(sweep.exponent)}, {"verdict", to_string(sweep.verdict)}};
}

Json assumption_to_json(const randgraph::AssumptionCheck& check)
{
    Json points = Json::array();
    for (const auto& p : check.points) {
        points.push_back(Json{{"n", p.n},
                              {"mean_m", p.mean_m},
                              {"var_m", p.var_m},
                              {"var_m_over_mean_sq", p.var_m_over_mean_sq}});
    }
    return Json{{"points", points}, {"exponent", optional_value(check.exponent)}, {"holds", check.holds}};
}

Json verification_to_json(const experiments::VerificationSummary& s)
{
    return Json{{"graphs", s.graphs},
                {"cells", s.cells},
                {"event_checks", s.event_checks},
                {"mismatches", s.mismatches},
                {"ok", s.ok()}};
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace randcolor::io
