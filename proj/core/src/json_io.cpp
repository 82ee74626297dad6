#include "gcfiber/json_io.hpp"

#include <fstream>
#include <sstream>

#include "gcfiber/error.hpp"

#ifndef GCFIBER_VERSION_STRING
#define GCFIBER_VERSION_STRING "0.0.0"
#endif

namespace gcfiber {
namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::Parse, what); }

Exact exact_number(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_decimal(v.get<std::string>());
    } catch (const Error&) {
      parse_fail(where + ": '" + v.get<std::string>() + "' is not a decimal number");
    }
  }
  if (v.is_number_integer()) return v.is_number_unsigned() ? Exact(v.get<std::uint64_t>()) : Exact(v.get<std::int64_t>());
  if (v.is_number_float()) parse_fail(where + ": floating-point literals are not exact; quote the value as a string");
  parse_fail(where + ": expected a decimal string");
}

std::vector<Exact> exact_list(const json& v, const std::string& where) {
  if (!v.is_array()) parse_fail(where + ": expected an array");
  std::vector<Exact> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(exact_number(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

json exact_list_json(const std::vector<Exact>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_decimal_string(v));
  return out;
}

FiberKind parse_kind(const std::string& s) {
  for (auto k : {FiberKind::Regular, FiberKind::Elliptic, FiberKind::Diamond, FiberKind::MultiDiamond,
                 FiberKind::SymmetricOverlapping, FiberKind::GeneralDegenerate})
    if (to_string(k) == s) return k;
  parse_fail("unknown classification '" + s + "'");
}

std::vector<int> int_list(const json& v, const std::string& where) {
  if (!v.is_array()) parse_fail(where + ": expected an array of integers");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) parse_fail(where + ": expected integers");
    out.push_back(x.get<int>());
  }
  return out;
}

TopologyDescriptor parse_topology(const json& v) {
  if (!v.is_object()) parse_fail("expected.topology: expected an object");
  TopologyDescriptor t;
  t.su_factors = int_list(v.value("su", json::array()), "expected.topology.su");
  t.torus_dim = v.value("torus", 0);
  t.certified = v.value("certified", false);
  return t;
}

FixtureExpectation parse_expectation(const json& v) {
  if (!v.is_object()) parse_fail("expected: expected an object");
  for (const char* key : {"dimension", "classification", "lagrangian"})
    if (!v.contains(key)) parse_fail(std::string("expected: missing '") + key + "'");
  FixtureExpectation e;
  if (!v["dimension"].is_number_integer()) parse_fail("expected.dimension: expected an integer");
  e.dimension = v["dimension"].get<int>();
  if (!v["classification"].is_string()) parse_fail("expected.classification: expected a string");
  e.kind = parse_kind(v["classification"].get<std::string>());
  if (!v["lagrangian"].is_boolean()) parse_fail("expected.lagrangian: expected a boolean");
  e.lagrangian = v["lagrangian"].get<bool>();
  if (v.contains("topology")) e.topology = parse_topology(v["topology"]);
  if (v.contains("g_dims")) e.g_dims = int_list(v["g_dims"], "expected.g_dims");
  if (v.contains("h_prime_dims")) e.h_prime_dims = int_list(v["h_prime_dims"], "expected.h_prime_dims");
  return e;
}

ToleranceConfig parse_tolerances(const json& v) {
  if (!v.is_object()) parse_fail("tolerances: expected an object");
  ToleranceConfig cfg;
  auto read = [&](const char* key, double& slot) {
    if (!v.contains(key)) return;
    const auto& x = v[key];
    if (x.is_number()) {
      slot = x.get<double>();
    } else if (x.is_string()) {
      try {
        slot = to_double(parse_decimal(x.get<std::string>()));
      } catch (const Error&) {
        parse_fail(std::string("tolerances.") + key + ": not a number");
      }
    } else {
      parse_fail(std::string("tolerances.") + key + ": not a number");
    }
  };
  read("eps_eq", cfg.eps_eq);
  read("eps_spec", cfg.eps_spec);
  read("eps_rank", cfg.eps_rank);
  read("eps_iso", cfg.eps_iso);
  try {
    cfg.validate();
  } catch (const Error& e) {
    parse_fail(std::string("tolerances: ") + e.what());
  }
  return cfg;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ";" : "") + std::to_string(v[i]);
  return out;
}

std::string describe(const std::vector<int>& v) { return "(" + join(v) + ")"; }

void compare_common(const FixtureExpectation& e, int dimension, FiberKind kind, bool lagrangian,
                    const TopologyDescriptor& topo, const std::vector<int>& g_dims, std::vector<std::string>& out) {
  if (e.dimension != dimension)
    out.push_back("dimension: expected " + std::to_string(e.dimension) + ", got " + std::to_string(dimension));
  if (e.kind != kind)
    out.push_back("classification: expected " + std::string(to_string(e.kind)) + ", got " + std::string(to_string(kind)));
  if (e.lagrangian != lagrangian) out.push_back("lagrangian flag differs");
  if (e.topology) {
    if (e.topology->su_factors != topo.su_factors || e.topology->torus_dim != topo.torus_dim ||
        e.topology->certified != topo.certified)
      out.push_back("topology differs");
  }
  if (e.g_dims && *e.g_dims != g_dims)
    out.push_back("g_dims: expected " + describe(*e.g_dims) + ", got " + describe(g_dims));
}

}  // namespace

std::string_view library_version() noexcept { return GCFIBER_VERSION_STRING; }

TriangleDocument parse_triangle_document(const json& doc) {
  if (!doc.is_object()) parse_fail("triangle document must be a JSON object");
  if (!doc.contains("lambda")) parse_fail("missing 'lambda'");
  if (!doc.contains("rows")) parse_fail("missing 'rows'");
  TriangleDocument out;
  auto lambda = exact_list(doc["lambda"], "lambda");
  if (lambda.empty()) parse_fail("lambda: must not be empty");
  const auto& rows_json = doc["rows"];
  if (!rows_json.is_array()) parse_fail("rows: expected an array of rows");
  std::vector<std::vector<Exact>> rows;
  for (std::size_t k = 0; k < rows_json.size(); ++k)
    rows.push_back(exact_list(rows_json[k], "rows[" + std::to_string(k) + "]"));
  try {
    out.triangle = GCTriangle::from_parts(std::move(lambda), std::move(rows));
  } catch (const Error& e) {
    parse_fail(std::string("triangle shape: ") + e.what());
  }
  if (doc.contains("tolerances")) out.tolerances = parse_tolerances(doc["tolerances"]);
  if (doc.contains("seed")) {
    const auto& s = doc["seed"];
    if (s.is_number_unsigned()) {
      out.seed = s.get<std::uint64_t>();
    } else if (s.is_string()) {
      try {
        std::size_t used = 0;
        const auto text = s.get<std::string>();
        out.seed = std::stoull(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing characters");
      } catch (const std::exception&) {
        parse_fail("seed: expected a non-negative integer");
      }
    } else {
      parse_fail("seed: expected a non-negative integer");
    }
  }
  if (doc.contains("expected")) out.expected = parse_expectation(doc["expected"]);
  if (doc.contains("name") && doc["name"].is_string()) out.name = doc["name"].get<std::string>();
  return out;
}

TriangleDocument read_triangle_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    parse_fail(path.string() + ": " + e.what());
  }
  return parse_triangle_document(doc);
}

json triangle_to_json(const GCTriangle& t) {
  json rows = json::array();
  for (int k = 1; k < t.n(); ++k) rows.push_back(exact_list_json(t.row(k)));
  return json{{"lambda", exact_list_json(t.lambda())}, {"rows", rows}};
}

json topology_to_json(const TopologyDescriptor& t) {
  return json{{"su", t.su_factors}, {"torus", t.torus_dim}, {"certified", t.certified}};
}

json expectation_to_json(const FixtureExpectation& e) {
  json out{{"dimension", e.dimension}, {"classification", std::string(to_string(e.kind))}, {"lagrangian", e.lagrangian}};
  if (e.topology) out["topology"] = topology_to_json(*e.topology);
  if (e.g_dims) out["g_dims"] = *e.g_dims;
  if (e.h_prime_dims) out["h_prime_dims"] = *e.h_prime_dims;
  return out;
}

json fixture_to_json(const Fixture& f) {
  json out = triangle_to_json(f.triangle);
  out["name"] = f.name;
  out["family"] = f.family;
  out["expected"] = expectation_to_json(f.expected);
  return out;
}

json chains_to_json(const std::vector<Chain>& chains) {
  json out = json::array();
  for (const auto& c : chains) {
    std::vector<int> rows;
    for (std::size_t a = 0; a < c.row_counts.size(); ++a) rows.push_back(c.first_row + static_cast<int>(a));
    json positions = json::array();
    for (const auto& p : c.positions) positions.push_back({p.i, p.k});
    out.push_back(json{{"value", to_decimal_string(c.value)},
                       {"rows", rows},
                       {"row_counts", c.row_counts},
                       {"positions", positions},
                       {"forced", c.all_forced}});
  }
  return out;
}

json pattern_fragment(const PatternAnalysis& a) {
  return json{{"dimension", a.dimension},
              {"N", a.regular_dim},
              {"classification", std::string(to_string(a.classification.kind))},
              {"lagrangian", a.classification.lagrangian},
              {"chains", chains_to_json(a.chains)},
              {"topology", topology_to_json(a.topology)}};
}

json report_to_json(const FiberReport& r) {
  json points = json::array();
  for (const auto& p : r.points)
    points.push_back(json{{"commutant_rank", p.commutant_rank},
                          {"border_rank", p.border_rank},
                          {"union_rank", p.union_rank},
                          {"isotropy", p.isotropy},
                          {"h_prime", p.h_prime},
                          {"rank_stable", p.rank_stable}});
  return json{{"version", std::string(library_version())},
              {"triangle", triangle_to_json(r.triangle)},
              {"dimension", r.dim_combinatorial},
              {"N", r.regular_dim},
              {"classification", std::string(to_string(r.classification.kind))},
              {"lagrangian", r.classification.lagrangian},
              {"chains", chains_to_json(r.chains)},
              {"topology", topology_to_json(r.topology)},
              {"dim_combinatorial", r.dim_combinatorial},
              {"dim_groups", r.dim_groups},
              {"dim_numeric", r.dim_numeric},
              {"isotropy_residual", r.isotropy_residual},
              {"h_prime_dims", r.h_prime_dims},
              {"g_dims", r.g_dims},
              {"u_lambda", r.u_lambda},
              {"consistent", r.consistent},
              {"spans_agree", r.spans_agree},
              {"rank_stable", r.rank_stable},
              {"samples", r.samples},
              {"steps_per_sample", r.steps_per_sample},
              {"seed", r.seed.value},
              {"tolerances",
               {{"eps_eq", r.tolerances.eps_eq},
                {"eps_spec", r.tolerances.eps_spec},
                {"eps_rank", r.tolerances.eps_rank},
                {"eps_iso", r.tolerances.eps_iso}}},
              {"warnings", r.warnings},
              {"points", points}};
}

json samples_to_json(const GCTriangle& t, RandomSeed seed, int steps, const std::vector<HermitianMatrix>& samples) {
  json mats = json::array();
  for (const auto& a : samples) {
    json rows = json::array();
    for (std::size_t r = 0; r < a.size(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < a.size(); ++c) row.push_back({a(r, c).real(), a(r, c).imag()});
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  return json{{"version", std::string(library_version())},
              {"triangle", triangle_to_json(t)},
              {"seed", seed.value},
              {"steps_per_sample", steps},
              {"samples", mats}};
}

std::string pattern_csv_header() { return "name,n,N,dimension,classification,lagrangian,chains,su,torus,certified\n"; }

std::string pattern_csv_row(const std::string& name, const PatternAnalysis& a) {
  std::ostringstream os;
  os << name << ',' << a.n << ',' << a.regular_dim << ',' << a.dimension << ',' << to_string(a.classification.kind)
     << ',' << (a.classification.lagrangian ? "true" : "false") << ',' << a.chains.size() << ','
     << join(a.topology.su_factors) << ',' << a.topology.torus_dim << ',' << (a.topology.certified ? "true" : "false")
     << '\n';
  return os.str();
}

std::string report_csv_header() {
  return "name,n,N,dim_combinatorial,dim_groups,dim_numeric,classification,lagrangian,isotropy_residual,"
         "g_dims,h_prime_dims,consistent\n";
}

std::string report_csv_row(const std::string& name, const FiberReport& r) {
  std::ostringstream os;
  os.precision(6);
  os << name << ',' << r.triangle.n() << ',' << r.regular_dim << ',' << r.dim_combinatorial << ',' << r.dim_groups
     << ',' << r.dim_numeric << ',' << to_string(r.classification.kind) << ','
     << (r.classification.lagrangian ? "true" : "false") << ',' << std::scientific << r.isotropy_residual << ','
     << join(r.g_dims) << ',' << join(r.h_prime_dims) << ',' << (r.consistent ? "true" : "false") << '\n';
  return os.str();
}

std::vector<std::string> expectation_mismatches(const FixtureExpectation& expected, const PatternAnalysis& a) {
  std::vector<std::string> out;
  compare_common(expected, a.dimension, a.classification.kind, a.classification.lagrangian, a.topology, a.g_dims, out);
  return out;
}

std::vector<std::string> expectation_mismatches(const FixtureExpectation& expected, const FiberReport& r) {
  std::vector<std::string> out;
  compare_common(expected, r.dim_combinatorial, r.classification.kind, r.classification.lagrangian, r.topology,
                 r.g_dims, out);
  if (expected.h_prime_dims && *expected.h_prime_dims != r.h_prime_dims)
    out.push_back("h_prime_dims: expected " + describe(*expected.h_prime_dims) + ", got " + describe(r.h_prime_dims));
  return out;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error(ErrorCode::InvalidArgument, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace gcfiber
