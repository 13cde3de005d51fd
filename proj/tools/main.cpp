// specrep: certify real-rootedness / hyperbolicity and build spectral
// representations and definite pencils. Run `specrep --help` for usage.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "specrep/serialize.hpp"

using namespace specrep;
using io::Json;

namespace {

enum Exit : int { kOk = 0, kFalse = 1, kPrecondition = 2, kUsageExit = 3, kInternal = 4 };

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::kParse:
    case ErrorKind::kUsage: return kUsageExit;
    case ErrorKind::kNotFound: return kFalse;
    case ErrorKind::kInternalCheckFailed: return kInternal;
    default: return kPrecondition;
  }
}

struct Job {
  std::string command;
  std::string input;             // expression, or JSON text for verify
  std::string kind = "hermitian";
  std::optional<int> bound;
  std::optional<size_t> max_candidates;
  std::optional<std::string> direction;
  std::vector<std::string> factors;
  std::optional<int> float_digits;
  int max_degree = kMaxCertifyDegree;
};

struct Outcome {
  Json doc;
  int exit = kOk;
};

std::string slurp(const std::string& path) {
  std::ifstream in;
  std::istream* src = &std::cin;
  if (path != "-") {
    in.open(path);
    if (!in) fail(ErrorKind::kUsage, "cannot read '" + path + "'");
    src = &in;
  }
  return std::string(std::istreambuf_iterator<char>(*src), std::istreambuf_iterator<char>());
}

std::string trim(std::string s) {
  const auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
  return s;
}

Direction parse_direction(const std::string& text) {
  Direction e;
  std::stringstream ss(text);
  std::string part;
  size_t k = 0;
  while (std::getline(ss, part, ',')) {
    if (k == 3) fail(ErrorKind::kUsage, "direction needs exactly 3 comma-separated rationals");
    e[k++] = parse_rational(trim(part));
  }
  if (k != 3) fail(ErrorKind::kUsage, "direction needs exactly 3 comma-separated rationals");
  return e;
}

RepKind parse_kind(const std::string& k) {
  if (k == "hermitian") return RepKind::kHermitian;
  if (k == "symmetric") return RepKind::kSymmetric;
  fail(ErrorKind::kUsage, "--kind must be hermitian or symmetric");
}

std::optional<int> env_bound() {
  const char* v = std::getenv("SPECREP_SEARCH_BOUND");
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  const long b = std::strtol(v, &end, 10);
  if (*end != '\0' || b < 0 || b > 1000) fail(ErrorKind::kUsage, "SPECREP_SEARCH_BOUND must be an integer in [0, 1000]");
  return static_cast<int>(b);
}

SymmetricSearch search_options(const Job& job) {
  SymmetricSearch opts;
  if (job.bound) {
    if (*job.bound < 0) fail(ErrorKind::kUsage, "--bound must be nonnegative");
    opts.degree_bound = *job.bound;
  } else if (auto b = env_bound()) {
    opts.degree_bound = *b;
  }
  if (job.max_candidates) opts.max_candidates_per_ideal = *job.max_candidates;
  return opts;
}

Json stats_json(const SearchStats& st, int bound) {
  return Json{{"degree_bound", bound},
              {"ideals_tried", st.ideals_tried},
              {"candidates_examined", st.candidates_examined},
              {"generators_found", st.generators_found},
              {"two_squares", st.used_two_squares}};
}

Outcome run_certify(const Job& job) {
  const MPoly p = parse_poly(job.input);
  const bool ternary = job.direction.has_value() || p.uses(kY) || p.uses(kZ);
  Certificate c;
  Json extra;
  if (ternary) {
    const Direction e = parse_direction(job.direction.value_or("0,0,1"));
    c = certify_hyperbolic(p, e, job.max_degree);
    extra = Json{{"form", to_string(p)}, {"e", Json::array({e[0].get_str(), e[1].get_str(), e[2].get_str()})}};
  } else {
    c = certify_real_rooted(p.to_bipoly(), job.max_degree);
  }
  Json doc = io::certificate_json(c);
  if (!extra.is_null()) doc["input"] = extra;
  return {doc, c.verdict ? kOk : kFalse};
}

Outcome run_analyze(const Job& job) {
  const CurveData cd = analyze_curve(parse_bipoly(job.input));
  return {io::curve_json(cd), kOk};
}

Outcome run_represent(const Job& job) {
  const BiPoly f = parse_bipoly(job.input);
  if (parse_kind(job.kind) == RepKind::kHermitian) return {io::representation_json(hermitian_representation(f), job.float_digits), kOk};
  const SymmetricSearch opts = search_options(job);
  SearchStats st;
  auto rep = symmetric_representation_search(f, opts, &st);
  const int bound = opts.degree_bound >= 0 ? opts.degree_bound : default_search_bound(f);
  if (!rep) {
    Json doc = io::error_json(Error(ErrorKind::kNotFound, "no symmetric representation within the search bound; "
                                                          "this is not a proof that none exists"),
                              kFalse);
    doc["search"] = stats_json(st, bound);
    return {doc, kFalse};
  }
  Json doc = io::representation_json(*rep, job.float_digits);
  doc["search"] = stats_json(st, bound);
  return {doc, kOk};
}

Outcome run_hv(const Job& job) {
  const Direction e = parse_direction(job.direction.value_or("0,0,1"));
  const RepKind kind = parse_kind(job.kind);
  const SymmetricSearch opts = search_options(job);
  std::vector<MPoly> factors;
  for (const auto& s : job.factors) factors.push_back(parse_poly(s));
  if (factors.empty()) {
    if (trim(job.input).empty()) fail(ErrorKind::kUsage, "hv needs a form or --factor arguments");
    factors.push_back(parse_poly(job.input));
  } else if (!trim(job.input).empty()) {
    MPoly prod(1);
    for (const auto& f : factors) prod *= f;
    if (prod != parse_poly(job.input)) fail(ErrorKind::kInvalidArgument, "the product of the factors is not the given form");
  }
  return {io::pencil_json(hv_representation(factors, e, kind, opts), job.float_digits), kOk};
}

Outcome run_verify(const Job& job) {
  const Json in = io::parse_json(job.input);
  const std::string type = io::document_type(in);
  std::string why;
  bool ok = false;
  if (type == "certificate") {
    ok = check_certificate(io::certificate_from_json(in), &why);
  } else if (type == "curve") {
    const CurveData claimed = io::curve_from_json(in);
    const CurveData fresh = analyze_curve(claimed.f);
    ok = fresh.disc == claimed.disc && fresh.smooth == claimed.smooth &&
         fresh.branch_points.size() == claimed.branch_points.size() &&
         std::equal(fresh.branch_points.begin(), fresh.branch_points.end(), claimed.branch_points.begin(),
                    [](const BranchPoint& a, const BranchPoint& b) { return a.a == b.a && a.t0 == b.t0 && a.e == b.e; });
    if (!ok) why = "curve data does not match a fresh analysis";
  } else if (type == "representation") {
    const SpectralRep rep = io::representation_from_json(in);
    ok = verify_representation(rep.f, rep, &why);
    if (ok && rep.lattice && mult_matrix(*rep.lattice) != rep.m_i) {
      ok = false;
      why = "M_I is not multiplication by t on the stated lattice";
    }
  } else if (type == "pencil") {
    ok = verify_pencil(io::pencil_from_json(in), &why);
  } else {
    fail(ErrorKind::kParse, "cannot verify a document of type '" + type + "'");
  }
  Json doc{{"schema", io::kSchema}, {"type", "verification"}, {"document", type}, {"valid", ok}};
  if (!ok) doc["reason"] = why;
  return {doc, ok ? kOk : kFalse};
}

Outcome run_job(const Job& job) {
  try {
    if (job.command == "certify") return run_certify(job);
    if (job.command == "analyze") return run_analyze(job);
    if (job.command == "represent") return run_represent(job);
    if (job.command == "hv") return run_hv(job);
    if (job.command == "verify") return run_verify(job);
    fail(ErrorKind::kUsage, "unknown command '" + job.command + "'");
  } catch (const Error& e) {
    const int code = exit_code_for(e.kind());
    return {io::error_json(e, code), code};
  } catch (const std::exception& e) {
    const Error err(ErrorKind::kInternalCheckFailed, e.what());
    return {io::error_json(err, kInternal), kInternal};
  }
}

Job job_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorKind::kUsage, "manifest line must be a JSON object");
  Job job;
  try {
    job.command = j.at("command").get<std::string>();
    if (j.contains("document")) {
      job.input = j["document"].dump();
    } else if (j.contains("input")) {
      job.input = j["input"].get<std::string>();
    } else if (j.contains("input_file")) {
      job.input = slurp(j["input_file"].get<std::string>());
    }
    if (j.contains("kind")) job.kind = j["kind"].get<std::string>();
    if (j.contains("bound")) job.bound = j["bound"].get<int>();
    if (j.contains("max_candidates")) job.max_candidates = j["max_candidates"].get<size_t>();
    if (j.contains("e")) job.direction = j["e"].get<std::string>();
    if (j.contains("factors")) job.factors = j["factors"].get<std::vector<std::string>>();
    if (j.contains("float")) job.float_digits = j["float"].get<int>();
    if (j.contains("max_degree")) job.max_degree = j["max_degree"].get<int>();
  } catch (const Json::exception& e) {
    fail(ErrorKind::kUsage, std::string("bad manifest job: ") + e.what());
  }
  return job;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) fail(ErrorKind::kUsage, "cannot write '" + path + "'");
  out << text << "\n";
}

int run_manifest(const std::string& path, unsigned jobs, const std::string& output, bool pretty) {
  std::vector<std::string> lines;
  {
    std::stringstream ss(slurp(path));
    std::string line;
    while (std::getline(ss, line))
      if (!trim(line).empty()) lines.push_back(line);
  }
  std::vector<Outcome> results(lines.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k; (k = next++) < lines.size();) {
      try {
        results[k] = run_job(job_from_json(io::parse_json(lines[k])));
      } catch (const Error& e) {
        results[k] = {io::error_json(e, exit_code_for(e.kind())), exit_code_for(e.kind())};
      }
      results[k].doc["job"] = k;
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(lines.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  std::string text;
  int worst = kOk;
  for (const auto& r : results) {
    if (!text.empty()) text += "\n";
    text += r.doc.dump(pretty ? 2 : -1);
    worst = std::max(worst, r.exit);
  }
  write_output(output, text);
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact real-rootedness certificates, spectral representations and definite pencils."};
  app.set_version_flag("--version", "specrep 1.0");
  app.fallthrough();  // inherited: global flags may follow the subcommand
  Job job;
  std::string output, input_file, manifest;
  bool pretty = false;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::optional<int> float_digits;

  app.add_option("-o,--output", output, "Write JSON here instead of stdout");
  app.add_flag("--pretty", pretty, "Indent JSON output");
  app.add_option("--manifest", manifest, "Run one job per JSON line of this file (\"-\" for stdin)");
  app.add_option("-j,--jobs", jobs, "Parallel jobs for --manifest")->check(CLI::Range(1u, 1024u));

  auto add_input = [&](CLI::App* sub, const char* what) {
    sub->add_option("expr", job.input, what);
    sub->add_option("-i,--input", input_file, "Read the input from a file (\"-\" for stdin)");
    sub->add_option("--float", float_digits, "Also emit floating-point values with this many digits")
        ->check(CLI::Range(1, 17));
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--kind", job.kind, "hermitian or symmetric")->check(CLI::IsMember({"hermitian", "symmetric"}));
    sub->add_option("--bound", job.bound,
                    "Symmetric search degree bound (default: $SPECREP_SEARCH_BOUND, else 2n + deg disc)");
    sub->add_option("--max-candidates", job.max_candidates, "Symmetric search candidates per ideal");
  };

  CLI::App* certify = app.add_subcommand("certify", "Certify real-rootedness of f(x, t), or hyperbolicity of F(x, y, z)");
  add_input(certify, "Polynomial in x, t (or a ternary form in x, y, z)");
  certify->add_option("--e", job.direction, "Hyperbolicity direction a,b,c (forms only; default 0,0,1)");
  certify->add_option("--max-degree", job.max_degree, "Refuse inputs of larger t-degree")->check(CLI::Range(1, 16));

  CLI::App* analyze = app.add_subcommand("analyze", "Discriminant, branch points and smoothness of f(x, t) = 0");
  add_input(analyze, "Polynomial in x, t");

  CLI::App* represent = app.add_subcommand("represent", "Spectral representation det(tI - M(x)) = f");
  add_input(represent, "Polynomial in x, t");
  add_search(represent);

  CLI::App* hv = app.add_subcommand("hv", "Definite pencil A x + B y + C z with determinant F");
  add_input(hv, "Ternary form in x, y, z");
  add_search(hv);
  hv->add_option("--e", job.direction, "Hyperbolicity direction a,b,c (default 0,0,1)");
  hv->add_option("--factor", job.factors, "Factor of F (repeatable); blocks are composed diagonally");

  CLI::App* verify = app.add_subcommand("verify", "Re-check a JSON artifact produced by this tool");
  verify->add_option("file", input_file, "JSON document (\"-\" for stdin)")->required();

  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    std::cout << io::error_json(Error(ErrorKind::kUsage, e.what()), kUsageExit).dump() << "\n";
    return kUsageExit;
  }

  try {
    if (!manifest.empty()) {
      if (!app.get_subcommands().empty()) fail(ErrorKind::kUsage, "--manifest cannot be combined with a subcommand");
      return run_manifest(manifest, jobs, output, pretty);
    }
    if (app.get_subcommands().empty()) fail(ErrorKind::kUsage, "a subcommand is required (see --help)");
    job.command = app.get_subcommands().front()->get_name();
    job.float_digits = float_digits;
    if (!input_file.empty()) {
      if (!job.input.empty()) fail(ErrorKind::kUsage, "give the input inline or with --input, not both");
      job.input = slurp(input_file);
    }
    if (job.command != "hv" && trim(job.input).empty()) fail(ErrorKind::kUsage, "missing input");
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    std::cout << io::error_json(e, exit_code_for(e.kind())).dump() << "\n";
    return exit_code_for(e.kind());
  }

  const Outcome r = run_job(job);
  if (r.doc.value("type", "") == "error") std::cerr << r.doc.value("message", "") << "\n";
  try {
    write_output(output, r.doc.dump(pretty ? 2 : -1));
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kUsageExit;
  }
  return r.exit;
}
