#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "format.hpp"
#include "json_schema.hpp"
#include "pairsuite/bounds.hpp"
#include "pairsuite/experiments.hpp"
#include "pairsuite/pair_list_decoder.hpp"
#include "pairsuite/selftest.hpp"

namespace {

using namespace pairsuite;
using pairsuite::cli::format_double;
using pairsuite::cli::join_symbols;
using pairsuite::cli::write_csv_row;
using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

enum Exit : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kGuard = 3, kDomain = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSearchSpaceTooLarge:
    case ErrorCode::kSizeTooLarge:
    case ErrorCode::kOrderTooLarge:
      return kGuard;
    default:
      return kDomain;
  }
}

struct Common {
  std::string format = "csv";
  std::string out;
  bool timing = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", c.out, "Write output to this file instead of stdout");
  cmd->add_flag("--timing", c.timing, "Report elapsed wall time (JSON field, or stderr for CSV)");
}

// What a command hands back for emission.
struct Output {
  Json params = Json::object();
  Json result = Json::object();
  std::optional<std::uint64_t> seed;
  std::function<void(std::ostream&)> csv;
  int status = kOk;
};

std::uint64_t parse_seed(const std::string& s) {
  if (s == "random") {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  std::uint64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw UsageError("--seed must be an integer or 'random'");
  return v;
}

double parse_double(const std::string& s, const char* what) {
  double v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw UsageError(std::string("bad number in ") + what);
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

Json symbols_json(std::span<const Elem> s) {
  Json a = Json::array();
  for (Elem e : s) a.push_back(e.value);
  return a;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

// ---- bounds

struct BoundsArgs {
  std::uint64_t q = 0;
  std::string grid = "0:1:0.01";
  std::vector<double> deltas;
};

Output cmd_bounds(const BoundsArgs& a) {
  if (a.q < 2) throw UsageError("--q must be >= 2");
  std::vector<double> grid = a.deltas;
  Output o;
  o.params["q"] = a.q;
  if (grid.empty()) {
    const auto parts = split(a.grid, ':');
    if (parts.size() != 3) throw UsageError("--grid expects start:stop:step");
    const double start = parse_double(parts[0], "--grid"), stop = parse_double(parts[1], "--grid"),
                 step = parse_double(parts[2], "--grid");
    if (!(step > 0.0) || stop < start) throw UsageError("--grid needs step > 0 and stop >= start");
    grid = make_grid(start, stop, step);
    o.params["grid"] = {{"start", start}, {"stop", stop}, {"step", step}};
  } else {
    o.params["deltas"] = grid;
  }
  for (double d : grid)
    if (!(d >= 0.0 && d <= 1.0)) throw UsageError("grid points must lie in [0, 1]");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw UsageError("grid must be strictly increasing");

  const BoundReport rep = bound_report(a.q, grid);
  const std::string coeff = rep.johnson_list_coefficient.str();
  o.result["johnson_list_coefficient"] = coeff;
  o.result["johnson_delta_max"] = johnson_delta_max(a.q);
  Json rows = Json::array();
  for (const BoundRow& r : rep.rows) {
    rows.push_back({{"delta", r.delta},
                    {"gv_pair", r.gv_pair},
                    {"gv_hamming", r.gv_hamming},
                    {"singleton", r.singleton},
                    {"johnson_tau", r.johnson_tau}});
  }
  o.result["rows"] = rows;
  o.csv = [rep, coeff](std::ostream& out) {
    write_csv_row(out, {"delta", "gv_pair", "gv_hamming", "singleton", "johnson_tau", "johnson_list_coefficient"});
    for (const BoundRow& r : rep.rows) {
      write_csv_row(out, {format_double(r.delta), format_double(r.gv_pair), format_double(r.gv_hamming),
                          format_double(r.singleton), format_double(r.johnson_tau), coeff});
    }
  };
  return o;
}

// ---- ball

struct BallArgs {
  std::size_t n = 0;
  std::uint64_t q = 0;
  std::size_t r = 0;
  bool verify = false;
};

Output cmd_ball(const BallArgs& a) {
  if (a.q < 2) throw UsageError("--q must be >= 2");
  Output o;
  o.params = {{"n", a.n}, {"q", a.q}, {"r", a.r}, {"verify", a.verify}};
  const BigInt size = ball_size_exact(a.n, a.q, a.r);
  o.result["size"] = size.str();
  std::string verified = "skipped";
  if (a.verify) {
    const auto field = Field::of_order(a.q);
    if (space_size(a.q, a.n) > kMaxEnumeration)
      fail(ErrorCode::kSearchSpaceTooLarge, "--verify needs q^n <= 2^24");
    std::uint64_t count = 0;
    const std::vector<Elem> center(a.n, Elem{0});
    for_each_in_ball(*field, center, a.r, [&](std::span<const Elem>) { ++count; });
    const bool ok = BigInt(count) == size;
    o.result["enumerated"] = std::to_string(count);
    o.result["verified"] = ok;
    verified = bool_str(ok);
    if (!ok) o.status = kCheckFailed;
  } else {
    o.result["verified"] = nullptr;
  }
  o.csv = [a, size, verified](std::ostream& out) {
    write_csv_row(out, {"n", "q", "r", "size", "verified"});
    write_csv_row(out, {std::to_string(a.n), std::to_string(a.q), std::to_string(a.r), size.str(), verified});
  };
  return o;
}

// ---- decode

struct DecodeArgs {
  std::uint64_t q = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::size_t> errors;
  std::optional<std::size_t> radius;
  std::string seed = "0";
  std::string message;
  bool random_message = false;
  bool force = false;
  std::string pattern = "spread";
};

Output cmd_decode(const DecodeArgs& a) {
  const auto field = Field::of_order(a.q);
  const CodeSpec spec(field, a.n, a.k);
  const std::uint64_t seed = parse_seed(a.seed);
  Rng rng(seed);

  std::optional<std::size_t> guaranteed;
  try {
    guaranteed = decode_radius(spec);
  } catch (const Error&) {
    if (!a.force || !a.radius) throw;
  }
  const std::size_t t = a.errors.value_or(guaranteed.value_or(0));
  if (t > a.n) throw UsageError("--errors must not exceed n");
  if (guaranteed && t > *guaranteed && !a.force)
    throw UsageError("--errors exceeds the decode radius " + std::to_string(*guaranteed) + "; pass --force to explore");
  std::size_t radius = a.radius.value_or(guaranteed.value_or(0));
  if (!a.radius && a.force) radius = std::max(radius, t);

  std::vector<Elem> coeffs;
  if (!a.message.empty()) {
    for (const std::string& part : split(a.message, ',')) {
      std::uint64_t v = 0;
      const auto res = std::from_chars(part.data(), part.data() + part.size(), v);
      if (res.ec != std::errc() || res.ptr != part.data() + part.size()) throw UsageError("--message expects c0,c1,...");
      coeffs.push_back(field->element(v));
    }
  } else {
    coeffs.resize(a.k);
    for (Elem& c : coeffs) c = Elem{static_cast<std::uint32_t>(uniform_below(rng, a.q))};
  }
  const Polynomial f = message_polynomial(spec, coeffs);
  const Word c = rs_encode(spec, f);
  const ErrorPattern pattern = a.pattern == "burst" ? ErrorPattern::kBurst : ErrorPattern::kSpread;
  const Word y = inject_pair_errors(c, t, rng, pattern);
  const DecodeResult dec = list_decode(spec, y, radius);
  const bool contained = dec.contains(f);

  Output o;
  o.seed = seed;
  o.params = {{"q", a.q}, {"n", a.n}, {"k", a.k}, {"errors", t}, {"radius", radius}, {"pattern", a.pattern},
              {"force", a.force}, {"message_source", a.message.empty() ? "random" : "given"}};
  const auto k = a.k;
  o.result["transmitted"] = symbols_json(f.padded(k));
  o.result["codeword"] = symbols_json(c.symbols());
  o.result["received"] = symbols_json(y.symbols());
  o.result["pair_distance"] = pair_distance(c, y);
  Json cands = Json::array();
  for (const Candidate& cd : dec.candidates) {
    cands.push_back({{"message", symbols_json(cd.message.padded(k))},
                     {"codeword", symbols_json(cd.codeword.symbols())},
                     {"distance", cd.distance}});
  }
  o.result["candidates"] = cands;
  o.result["containment"] = contained;
  const DecodeDiagnostics& dg = dec.diagnostics;
  Json flags = Json::array();
  if (!dg.completeness_guaranteed) flags.push_back("completeness-not-guaranteed");
  o.result["diagnostics"] = {{"degree_parameter", dg.degree_parameter},
                             {"nullspace_dimension", dg.nullspace_dimension},
                             {"roots_found", dg.roots_found},
                             {"roots_low_degree", dg.roots_low_degree},
                             {"completeness_guaranteed", dg.completeness_guaranteed},
                             {"flags", flags}};
  o.csv = [=](std::ostream& out) {
    write_csv_row(out, {"q", "n", "k", "errors", "radius", "seed", "transmitted", "received", "containment",
                        "completeness_guaranteed", "candidate_index", "candidate_message", "candidate_distance"});
    std::vector<std::string> head{std::to_string(a.q), std::to_string(a.n),  std::to_string(a.k),
                                  std::to_string(t),   std::to_string(radius), std::to_string(seed),
                                  join_symbols(f.padded(k)), join_symbols(y.symbols()), bool_str(contained),
                                  bool_str(dg.completeness_guaranteed)};
    if (dec.candidates.empty()) {
      auto row = head;
      row.insert(row.end(), {"", "", ""});
      write_csv_row(out, row);
    }
    for (std::size_t i = 0; i < dec.candidates.size(); ++i) {
      auto row = head;
      row.insert(row.end(), {std::to_string(i), join_symbols(dec.candidates[i].message.padded(k)),
                             std::to_string(dec.candidates[i].distance)});
      write_csv_row(out, row);
    }
  };
  return o;
}

// ---- experiment

struct ExperimentArgs {
  std::uint64_t q = 0;
  std::size_t n = 0;
  double tau = 0;
  double epsilon = 0;
  std::size_t trials = 0;
  std::string seed = "0";
};

Output cmd_experiment(const ExperimentArgs& a) {
  const std::uint64_t seed = parse_seed(a.seed);
  Field::of_order(a.q);
  const ExperimentReport rep = gv_list_experiment(a.q, a.n, a.tau, a.epsilon, a.trials, seed);
  Output o;
  o.seed = seed;
  o.params = {{"q", a.q}, {"n", a.n}, {"tau", a.tau}, {"epsilon", a.epsilon}, {"trials", a.trials}};
  o.result["seed_scheme"] = rep.seed_scheme;
  o.result["kappa"] = rep.kappa;
  o.result["rate"] = rep.rate;
  o.result["code_size"] = rep.code_size;
  o.result["radius"] = rep.radius;
  o.result["list_threshold"] = rep.list_threshold;
  o.result["sample_centers"] = rep.sample_centers;
  Json trials = Json::array();
  for (const TrialRecord& t : rep.per_trial) {
    trials.push_back({{"seed", t.seed},
                      {"max_list", t.max_list},
                      {"sampled_max_list", t.sampled_max_list},
                      {"within_threshold", t.max_list <= rep.list_threshold}});
  }
  o.result["per_trial"] = trials;
  o.result["fraction_within_threshold"] = rep.fraction_within_threshold;
  o.csv = [rep](std::ostream& out) {
    write_csv_row(out, {"q", "n", "tau", "epsilon", "kappa", "rate", "code_size", "radius", "list_threshold", "trial",
                        "trial_seed", "max_list", "sampled_max_list", "within_threshold"});
    for (std::size_t i = 0; i < rep.per_trial.size(); ++i) {
      const TrialRecord& t = rep.per_trial[i];
      write_csv_row(out, {std::to_string(rep.q), std::to_string(rep.n), format_double(rep.tau),
                          format_double(rep.epsilon), format_double(rep.kappa), format_double(rep.rate),
                          std::to_string(rep.code_size), std::to_string(rep.radius),
                          std::to_string(rep.list_threshold), std::to_string(i), std::to_string(t.seed),
                          std::to_string(t.max_list), std::to_string(t.sampled_max_list),
                          bool_str(t.max_list <= rep.list_threshold)});
    }
  };
  return o;
}

// ---- selftest

Output cmd_selftest(const std::string& fault) {
  const SelfTestFault f = fault == "ball-correction" ? SelfTestFault::kBallCorrection : SelfTestFault::kNone;
  const auto suites = selftest_suites(f);
  Output o;
  bool all = true;
  Json list = Json::array();
  for (const SuiteOutcome& s : suites) {
    all = all && s.passed;
    list.push_back({{"name", s.name}, {"passed", s.passed}, {"note", s.note}});
  }
  if (!fault.empty()) o.params["inject_fault"] = fault;
  o.result["suites"] = list;
  o.result["passed"] = all;
  o.status = all ? kOk : kCheckFailed;
  o.csv = [suites](std::ostream& out) {
    write_csv_row(out, {"suite", "status", "note"});
    for (const SuiteOutcome& s : suites) write_csv_row(out, {s.name, s.passed ? "PASS" : "FAIL", s.note});
  };
  return o;
}

// ---- validate

int cmd_validate(const std::string& schema_path, const std::string& input) {
  auto load = [](const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::kDomainError, "cannot open " + path);
    try {
      return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorCode::kDomainError, path + ": " + e.what());
    }
  };
  const nlohmann::json schema = load(schema_path);
  nlohmann::json doc;
  if (input == "-") {
    try {
      doc = nlohmann::json::parse(std::cin);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorCode::kDomainError, std::string("stdin: ") + e.what());
    }
  } else {
    doc = load(input);
  }
  const auto errs = pairsuite::cli::validate_json(schema, doc);
  for (const auto& e : errs) std::cerr << e << '\n';
  std::cout << (errs.empty() ? "valid" : "invalid") << '\n';
  return errs.empty() ? kOk : kCheckFailed;
}

int emit(const std::string& command, const std::vector<std::string>& argv, const Common& c, Output o,
         std::chrono::steady_clock::time_point start) {
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream buf;
  if (c.format == "json") {
    Json rec;
    rec["schema_version"] = kSchemaVersion;
    rec["command"] = command;
    rec["argv"] = argv;
    rec["params"] = o.params;
    rec["result"] = o.result;
    if (o.seed) rec["seed"] = *o.seed;
    if (c.timing) rec["elapsed_seconds"] = elapsed;
    buf << rec.dump(2) << '\n';
  } else {
    o.csv(buf);
    if (c.timing) std::cerr << "elapsed_seconds," << format_double(elapsed) << '\n';
  }
  if (c.out.empty()) {
    std::cout << buf.str();
  } else {
    std::ofstream file(c.out, std::ios::binary);
    if (!file) throw Error(ErrorCode::kDomainError, "cannot write " + c.out);
    file << buf.str();
  }
  return o.status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbol-pair codes: bounds, ball sizes, list decoding of Reed-Solomon codes, random-code experiments"};
  app.require_subcommand(1);

  Common common;

  BoundsArgs bounds;
  auto* c_bounds = app.add_subcommand("bounds", "Rate and radius bounds on a relative-distance grid");
  c_bounds->add_option("--q", bounds.q, "Alphabet size")->required();
  auto* grid_opt = c_bounds->add_option("--grid", bounds.grid, "start:stop:step")->capture_default_str();
  c_bounds->add_option("--delta", bounds.deltas, "Explicit comma-separated grid")->delimiter(',')->excludes(grid_opt);
  add_common(c_bounds, common);

  BallArgs ball;
  auto* c_ball = app.add_subcommand("ball", "Exact symbol-pair ball size");
  c_ball->add_option("--n", ball.n, "Length")->required();
  c_ball->add_option("--q", ball.q, "Alphabet size")->required();
  c_ball->add_option("--r", ball.r, "Pair radius")->required();
  c_ball->add_flag("--verify", ball.verify, "Cross-check by enumeration");
  add_common(c_ball, common);

  DecodeArgs dec;
  auto* c_dec = app.add_subcommand("decode", "Encode, corrupt with pair errors, list decode");
  c_dec->add_option("--q", dec.q, "Field order")->required();
  c_dec->add_option("--n", dec.n, "Code length, at most q - 1")->required();
  c_dec->add_option("--k", dec.k, "Dimension")->required();
  c_dec->add_option("--errors", dec.errors, "Pair-error budget (default: decode radius)");
  c_dec->add_option("--radius", dec.radius, "Decoding radius (default: decode radius)");
  c_dec->add_option("--seed", dec.seed, "Integer seed or 'random'");
  auto* msg_opt = c_dec->add_option("--message", dec.message, "Message coefficients c0,c1,...");
  c_dec->add_flag("--random", dec.random_message, "Draw the message from the seed (default)")->excludes(msg_opt);
  c_dec->add_flag("--force", dec.force, "Allow budgets or radii beyond the guarantee");
  c_dec->add_option("--pattern", dec.pattern, "Error placement")->check(CLI::IsMember({"spread", "burst"}));
  add_common(c_dec, common);

  ExperimentArgs exp;
  auto* c_exp = app.add_subcommand("experiment", "List-size audit of random codes at the pair GV rate");
  c_exp->add_option("--q", exp.q, "Alphabet size")->required();
  c_exp->add_option("--n", exp.n, "Length")->required();
  c_exp->add_option("--tau", exp.tau, "Relative pair radius")->required();
  c_exp->add_option("--epsilon", exp.epsilon, "Rate slack")->required();
  c_exp->add_option("--trials", exp.trials, "Number of sampled codes")->required();
  c_exp->add_option("--seed", exp.seed, "Integer seed or 'random'");
  add_common(c_exp, common);

  std::string fault;
  auto* c_self = app.add_subcommand("selftest", "Oracle suites at pinned parameters");
  c_self->add_option("--inject-fault", fault)->check(CLI::IsMember({"ball-correction"}))->group("");
  add_common(c_self, common);

  std::string schema_path, input = "-";
  auto* c_val = app.add_subcommand("validate", "Check a JSON record against a schema");
  c_val->add_option("--schema", schema_path, "Schema file")->required();
  c_val->add_option("input", input, "JSON file, or - for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::string> args(argv + 1, argv + argc);
  try {
    if (c_val->parsed()) return cmd_validate(schema_path, input);
    if (c_bounds->parsed()) return emit("bounds", args, common, cmd_bounds(bounds), start);
    if (c_ball->parsed()) return emit("ball", args, common, cmd_ball(ball), start);
    if (c_dec->parsed()) return emit("decode", args, common, cmd_decode(dec), start);
    if (c_exp->parsed()) return emit("experiment", args, common, cmd_experiment(exp), start);
    if (c_self->parsed()) return emit("selftest", args, common, cmd_selftest(fault), start);
  } catch (const UsageError& e) {
    std::cerr << "pairsuite: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "pairsuite: " << e.what() << '\n';
    return exit_for(e.code());
  }
  return kUsage;
}
