#pragma once

// Pieces of the command-line tool that are worth testing on their own:
// literal parsing, the seeded grid generator, JSON/CSV encodings and the
// ordered parallel sweep.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kernint/partial_fractions.hpp"
#include "kernint/series.hpp"
#include "kernint/verify.hpp"

namespace kernint::cli {

/// `RE`, `RE+IMi`, `RE-IMi` or `IMi` (no spaces). Throws ParseError.
complex parse_complex(std::string_view text);

/// `1`, `inf` or a positive number.
UpperLimit parse_upper(std::string_view text);

/// A single value, a comma list, or `start:step:stop` (stop included when
/// within half a step).
std::vector<double> parse_real_grid(std::string_view text);

/// Like parse_real_grid, except that list entries may be complex literals.
std::vector<complex> parse_complex_grid(std::string_view text);

/// state ← state·6364136223846793005 + 1442695040888963407 (mod 2^64);
/// uniform() returns the top 53 bits scaled into [0, 1).
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    double uniform();

private:
    std::uint64_t state_;
};

/// Six draws per point:
///   n = 1 + ⌊6u₁⌋;
///   u₂ < ½: p = ⌊(2n−1)u₃⌋ − (n−1) (integer), else p = (1.8u₃ − 0.9)n;
///   θ = 0.05 + (2π − 0.1)u₄;  ζ = πu₅;  upper = ∞ if u₆ ≥ ¾, else 1.
std::vector<IntegrandSpec> random_specs(std::size_t count, std::uint64_t seed);

nlohmann::json to_json(const complex& z);
nlohmann::json to_json(const UpperLimit& upper);
nlohmann::json to_json(const IntegrandSpec& spec);
nlohmann::json to_json(const EvalReport& report);
nlohmann::json to_json(const Decomposition& d);
nlohmann::json to_json(const SeriesResult& r);
nlohmann::json to_json(const ParadoxReport& r);

/// Accepts a bare spec object or a report carrying one under "spec".
IntegrandSpec spec_from_json(const nlohmann::json& j);

/// A JSON array of specs or reports, or one JSON value per line.
std::vector<IntegrandSpec> read_grid(const std::string& text);

inline constexpr std::string_view csv_header =
    "n,p_re,p_im,theta,zeta,upper,domain,closed,pf,quad,series,max_abs_err,verdict";

std::string csv_row(const EvalReport& report);

/// Shortest round-trip decimal form.
std::string format_double(double x);

/// verify_point over specs; reports are returned in input order.
std::vector<EvalReport> sweep(const std::vector<IntegrandSpec>& specs, double tol, ThetaPolicy policy,
                              unsigned threads);

}  // namespace kernint::cli
