#pragma once

// JSON and CSV output. Exact rationals are written as
// {"num": "...", "den": "...", "float": x}; num and den are decimal strings
// because they outgrow 64 bits.

#include "randcolor/experiments.hpp"
#include "randcolor/graph.hpp"
#include "randcolor/moments.hpp"
#include "randcolor/randgraph.hpp"

#include <json.hpp>

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace randcolor::io {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& q);
/// Accepts the object form or a plain string "a/b".
Rational rational_from_json(const Json& j);

Json moments_to_json(const GraphStats& g, const Composition& c, const MomentReport& r);

/// Column order of regime CSV files.
inline constexpr const char* regime_csv_header =
    "n,m,classes,zeta_sq,rho,imbalance_sq,normalized_var,rho_zeta_product,pz_bound,"
    "trials,empirical_mean,empirical_mean_se,empirical_var,empirical_var_se,deviation_prob,"
    "predicted_regime";

inline constexpr const char* moments_csv_header =
    "n,m,classes,sigma2,mean_M,mean_L,var_common,a_c,b_c,rho,zeta_sq,imbalance_sq,normalized_var";

Json regime_row_to_json(const experiments::RegimeRow& row);
experiments::RegimeRow regime_row_from_json(const Json& j);

/// JSON array of rows.
Json regime_rows_to_json(std::span<const experiments::RegimeRow> rows);
std::vector<experiments::RegimeRow> regime_rows_from_json(const Json& j);

/// Header line plus one line per row; classes are ';'-separated, empty
/// cells for missing empirical values.
std::string regime_rows_to_csv(std::span<const experiments::RegimeRow> rows);

std::string moments_to_csv(const GraphStats& g, const Composition& c, const MomentReport& r);

/// Thresholds, exponents and the verdict of a regime run (rows excluded).
Json regime_metadata(const experiments::FamilySpec& family, const experiments::RegimeResult& result,
                     std::size_t trials, std::uint64_t seed);

Json comparison_to_json(const experiments::ComparisonRecord& rec);
Json ratio_to_json(const randgraph::RatioCriterion& r);
Json sweep_to_json(const randgraph::RatioSweep& sweep);
Json assumption_to_json(const randgraph::AssumptionCheck& check);
Json verification_to_json(const experiments::VerificationSummary& summary);

/// Two-space indented JSON with a trailing newline.
std::string dump(const Json& j);

/// Fixed 17-significant-digit rendering shared by the CSV writers.
std::string format_double(double x);

/// Writes the whole file; throws std::runtime_error naming the path.
void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

} // namespace randcolor::io
