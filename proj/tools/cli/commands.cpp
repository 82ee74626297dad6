#include "commands.hpp"

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <filesystem>
#include <optional>
#include <ostream>

#include "gcfiber/error.hpp"
#include "gcfiber/fiber_build.hpp"
#include "gcfiber/fixtures.hpp"
#include "gcfiber/json_io.hpp"
#include "gcfiber/pattern.hpp"
#include "gcfiber/symplectic_check.hpp"

namespace gcfiber::cli {
namespace {

using nlohmann::json;

struct Options {
  std::string input;
  std::string out_path;
  std::string format = "json";
  std::optional<std::uint64_t> seed;
  std::optional<double> tol_iso;
  int samples = 10;
  int count = 1;
  int steps = 0;
  int n_max = 7;
  std::string out_dir;
};

class Failure : public std::runtime_error {
 public:
  Failure(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse: return kParse;
    case ErrorCode::InvalidTriangle:
    case ErrorCode::NonContiguousChain: return kInvalidTriangle;
    case ErrorCode::InterlacingViolation:
    case ErrorCode::SpectrumMismatch:
    case ErrorCode::NonConvergence: return kConstruction;
    default: return kUsage;
  }
}

void emit(const Options& o, const std::string& content, std::ostream& out) {
  if (o.out_path.empty())
    out << content;
  else
    write_file_atomic(o.out_path, content);
}

TriangleDocument load(const Options& o) {
  auto doc = read_triangle_document(o.input);
  const auto check = validate_triangle(doc.triangle, 0.0);
  if (!check) throw Failure(kInvalidTriangle, "invalid triangle: " + check.describe());
  return doc;
}

RandomSeed seed_for(const Options& o, const TriangleDocument& doc) {
  if (o.seed) return RandomSeed{*o.seed};
  return RandomSeed{doc.seed.value_or(0)};
}

std::string display_name(const Options& o, const TriangleDocument& doc) {
  return doc.name.empty() ? std::filesystem::path(o.input).stem().string() : doc.name;
}

int cmd_analyze(const Options& o, std::ostream& out, std::ostream& err) {
  const auto doc = load(o);
  const auto a = analyze_pattern(doc.triangle);
  std::vector<std::string> mismatches;
  if (doc.expected) mismatches = expectation_mismatches(*doc.expected, a);
  if (o.format == "csv") {
    emit(o, pattern_csv_header() + pattern_csv_row(display_name(o, doc), a), out);
  } else {
    auto j = pattern_fragment(a);
    if (doc.expected) j["expected_mismatches"] = mismatches;
    emit(o, j.dump(2) + "\n", out);
  }
  for (const auto& m : mismatches) err << "expectation mismatch: " << m << '\n';
  return mismatches.empty() ? kOk : kInconsistent;
}

int cmd_sample(const Options& o, std::ostream& out) {
  if (o.format != "json") throw Failure(kUsage, "sample dumps are JSON only");
  const auto doc = load(o);
  const auto seed = seed_for(o, doc);
  const auto samples = sample_fiber(doc.triangle, o.count, o.steps, seed, doc.tolerances.eps_spec);
  emit(o, samples_to_json(doc.triangle, seed, o.steps, samples).dump() + "\n", out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto doc = load(o);
  ToleranceConfig cfg = doc.tolerances;
  if (o.tol_iso) cfg.eps_iso = *o.tol_iso;
  const auto report = full_report(doc.triangle, o.samples, cfg, seed_for(o, doc));
  std::vector<std::string> mismatches;
  if (doc.expected) mismatches = expectation_mismatches(*doc.expected, report);
  if (o.format == "csv") {
    emit(o, report_csv_header() + report_csv_row(display_name(o, doc), report), out);
  } else {
    auto j = report_to_json(report);
    if (doc.expected) j["expected_mismatches"] = mismatches;
    emit(o, j.dump(2) + "\n", out);
  }
  for (const auto& w : report.warnings) err << "warning: " << w << '\n';
  for (const auto& m : mismatches) err << "expectation mismatch: " << m << '\n';
  return report.consistent && mismatches.empty() ? kOk : kInconsistent;
}

int cmd_corpus(const Options& o, std::ostream& out) {
  if (o.n_max < 2 || o.n_max > 8) throw Failure(kUsage, "--n-max must lie in 2..8");
  const std::filesystem::path dir(o.out_dir);
  std::filesystem::create_directories(dir);
  const auto corpus = build_corpus(o.n_max, RandomSeed{o.seed.value_or(0)});
  json files = json::array();
  std::string csv = "name,family,n,expected_dimension,expected_classification\n";
  for (const auto& f : corpus) {
    const auto file = f.name + ".json";
    write_file_atomic(dir / file, fixture_to_json(f).dump(2) + "\n");
    files.push_back(file);
    csv += f.name + "," + f.family + "," + std::to_string(f.triangle.n()) + "," + std::to_string(f.expected.dimension) +
           "," + std::string(to_string(f.expected.kind)) + "\n";
  }
  if (o.format == "csv")
    emit(o, csv, out);
  else
    emit(o, json{{"count", corpus.size()}, {"out_dir", dir.string()}, {"files", files}}.dump(2) + "\n", out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Gelfand-Cetlin fibers on U(n) coadjoint orbits", "gcfiber"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--out", o.out_path, "Write the result to this file instead of stdout");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", o.seed, "Random seed");
  app.add_option("--tol-iso", o.tol_iso, "Isotropy residual bound")->check(CLI::PositiveNumber);
  app.add_option("--samples", o.samples, "Sample points per verification")->check(CLI::PositiveNumber);

  auto* analyze = app.add_subcommand("analyze", "Equality pattern, dimension, classification, topology");
  analyze->add_option("input", o.input, "Triangle JSON file")->required();
  auto* sample = app.add_subcommand("sample", "Points of the fiber");
  sample->add_option("input", o.input, "Triangle JSON file")->required();
  sample->add_option("--count", o.count, "Number of samples")->check(CLI::PositiveNumber);
  sample->add_option("--steps", o.steps, "Fiber steps per sample")->check(CLI::NonNegativeNumber);
  auto* verify = app.add_subcommand("verify", "Numeric verification report");
  verify->add_option("input", o.input, "Triangle JSON file")->required();
  auto* corpus = app.add_subcommand("corpus", "Write the regression fixtures");
  corpus->add_option("--n-max", o.n_max, "Largest triangle size");
  corpus->add_option("--out-dir", o.out_dir, "Directory for fixture files")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(o, out, err);
    if (*sample) return cmd_sample(o, out);
    if (*verify) return cmd_verify(o, out, err);
    if (*corpus) return cmd_corpus(o, out);
  } catch (const Failure& f) {
    err << f.what() << '\n';
    return f.code();
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace gcfiber::cli
