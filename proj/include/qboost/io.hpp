#pragma once

// File formats of the command-line tool.
//
// Scatter CSV, one row per point:
//
//   model,param1,param2,param3,a,delta,accardi_defined,boost_defined
//
//   classical  param1..3 = p, q_r, q_n
//   quantum    param1..2 = phi, alpha; param3 empty
//   empirical  param1..3 = P(R), P(X|R), P(X|~R); empty when unobserved
//
// Reals use 17 significant digits ("%.17g") and parse back bit-exactly. An
// undefined a or delta is an empty cell. Flags are "true"/"false".
//
// Count file for estimate_from_counts: five non-negative integers
// N N_R N_XR N_XN N_X separated by whitespace; lines whose first
// non-blank character is '#' are comments.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "qboost/stream_sim.hpp"
#include "qboost/sweep.hpp"

namespace qboost {

inline constexpr std::string_view kCsvHeader =
    "model,param1,param2,param3,a,delta,accardi_defined,boost_defined";

std::string format_real(double value);

void write_csv(std::span<const ScatterPoint> points, std::ostream& out);
// Throws IoFailure.
void export_csv(std::span<const ScatterPoint> points, const std::filesystem::path& path);
// Throws MalformedInput.
std::vector<ScatterPoint> parse_csv(std::istream& in);

// Two whitespace-separated columns "a delta" for points with both defined.
void write_gnuplot(std::span<const ScatterPoint> points, std::ostream& out);

nlohmann::json to_json(const EstimateWithError& e);
nlohmann::json to_json(const ScatterPoint& point);
nlohmann::json to_json(const SweepSummary& summary);
nlohmann::json to_json(const SweepResult& result);
nlohmann::json to_json(const SimResult& result);

struct CollectionCounts {
    std::uint64_t n = 0;                   // documents examined
    std::uint64_t n_relevant = 0;          // N_R
    std::uint64_t n_term_relevant = 0;     // N_XR
    std::uint64_t n_term_non_relevant = 0; // N_XN
    std::uint64_t n_term = 0;              // N_X, measured directly
};

// Throws MalformedInput on syntax errors or inconsistent counts.
CollectionCounts parse_counts(std::istream& in);
// Throws IoFailure when the file cannot be read, MalformedInput otherwise.
CollectionCounts read_counts(const std::filesystem::path& path);

// Rates P(R) = N_R/N, P(X|R) = N_XR/N_R, P(X|~R) = N_XN/(N-N_R),
// P(X) = N_X/N and P(R|X) = N_XR/N_X feed the Accardi invariant and the
// boost; standard errors treat the five rates as independent binomials.
ScatterPoint estimate_from_counts(const CollectionCounts& counts);
ScatterPoint estimate_from_file(const std::filesystem::path& path);

}  // namespace qboost
