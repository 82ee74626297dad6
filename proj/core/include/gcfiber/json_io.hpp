#pragma once

// JSON and CSV forms of triangles, pattern fragments, fiber reports and
// sample dumps.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gcfiber/fixtures.hpp"
#include "gcfiber/pattern.hpp"
#include "gcfiber/symplectic_check.hpp"
#include "gcfiber/tolerance.hpp"
#include "gcfiber/triangle.hpp"

namespace gcfiber {

std::string_view library_version() noexcept;

/// {"lambda": [...], "rows": [[row 1], ..., [row n-1]], "tolerances"?, "seed"?, "expected"?}
struct TriangleDocument {
  GCTriangle triangle;
  ToleranceConfig tolerances;
  std::optional<std::uint64_t> seed;
  std::optional<FixtureExpectation> expected;
  std::string name;
};

/// Numbers may be decimal strings or JSON integers; floats are refused since
/// they cannot be read exactly. Throws Error(Parse).
TriangleDocument parse_triangle_document(const nlohmann::json& doc);
TriangleDocument read_triangle_document(const std::filesystem::path& path);

nlohmann::json triangle_to_json(const GCTriangle& t);
nlohmann::json expectation_to_json(const FixtureExpectation& e);
nlohmann::json fixture_to_json(const Fixture& f);

nlohmann::json topology_to_json(const TopologyDescriptor& t);
nlohmann::json chains_to_json(const std::vector<Chain>& chains);
nlohmann::json pattern_fragment(const PatternAnalysis& a);
nlohmann::json report_to_json(const FiberReport& r);
nlohmann::json samples_to_json(const GCTriangle& t, RandomSeed seed, int steps,
                               const std::vector<HermitianMatrix>& samples);

std::string pattern_csv_header();
std::string pattern_csv_row(const std::string& name, const PatternAnalysis& a);
std::string report_csv_header();
std::string report_csv_row(const std::string& name, const FiberReport& r);

/// Human-readable differences between a file's expectations and what was
/// computed. Empty when everything matches.
std::vector<std::string> expectation_mismatches(const FixtureExpectation& expected, const PatternAnalysis& a);
std::vector<std::string> expectation_mismatches(const FixtureExpectation& expected, const FiberReport& r);

/// Writes to a sibling temporary file, then renames over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace gcfiber
