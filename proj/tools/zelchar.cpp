// Command-line front end: reciprocal characters, q-characters, Mackey
// restrictions and verification sweeps for integral multisegments.

#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zelchar/charring.hpp"
#include "zelchar/domtab.hpp"
#include "zelchar/json_io.hpp"
#include "zelchar/mackey.hpp"
#include "zelchar/multiseg.hpp"
#include "zelchar/qchar.hpp"
#include "zelchar/verify.hpp"

namespace {

using namespace zelchar;

enum Exit { kOk = 0, kDiscrepancy = 1, kUsage = 2, kResource = 3 };

struct Options {
  std::string input;
  int rank = 0;
  int factors = 1;
  bool dominant_only = false;
  std::string format = "text";
  std::vector<std::string> routes;
  int max_height = 3;
  std::string window = "0:1";
  std::vector<int> ranks{1};
  std::size_t start_index = 0;
  unsigned threads = 0;
  int shuffle_cap = kDefaultShuffleCap;
};

bool json_output(const Options& opt) { return opt.format == "json"; }

bool use_bigint() {
  const char* env = std::getenv("QCHAR_COEFF");
  return env != nullptr && std::string(env) == "bigint";
}

std::pair<int, int> parse_window(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(ErrorKind::ParseError, "window must be lo:hi");
  try {
    std::size_t used = 0;
    int lo = std::stoi(text.substr(0, colon), &used);
    if (used != colon) throw Error(ErrorKind::ParseError, "bad window \"" + text + "\"");
    std::string rest = text.substr(colon + 1);
    int hi = std::stoi(rest, &used);
    if (used != rest.size()) throw Error(ErrorKind::ParseError, "bad window \"" + text + "\"");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::ParseError, "bad window \"" + text + "\"");
  }
}

int run_dominant(const Options& opt) {
  const Multisegment m = parse_multisegment(opt.input);
  if (opt.rank > 0) {
    const DrinfeldPoly<Count> projected = to_drinfeld(projected_reciprocal(m, opt.rank), opt.rank);
    if (json_output(opt)) {
      std::cout << to_json(projected).dump() << "\n";
      return kOk;
    }
    for (const auto& [mono, c] : projected.terms()) std::cout << c << " * " << to_string(mono) << "\n";
    return kOk;
  }
  const AMatrixRow row = a_matrix_row(m);
  if (json_output(opt)) {
    Json entries = Json::array();
    for (const auto& [n, a] : row.entries) entries.push_back({{"n", to_json(n)}, {"a", a}});
    std::cout << Json{{"source", to_json(m)}, {"entries", entries}}.dump() << "\n";
    return kOk;
  }
  for (const auto& [n, a] : row.entries) std::cout << a << " * " << to_string(n) << "\n";
  return kOk;
}

int run_amatrix(const Options& opt) {
  const Multisegment m = parse_multisegment(opt.input);
  std::vector<Route> routes;
  for (const auto& name : opt.routes) {
    Route r = parse_route(name);
    if (r == Route::Product) throw Error(ErrorKind::ParseError, "the product route has no per-n counts");
    if (r != Route::ATableau) routes.push_back(r);
  }
  std::map<std::string, MultisegmentCounts> columns;
  columns["a-tableau"] = a_matrix_row(m).entries;
  const OrderedMultisegment m_ord = admissible_ordering(m);
  for (Route r : routes) {
    if (r == Route::Mackey) columns["mackey"] = a_row_via_mackey(m_ord);
    if (r == Route::JDominant) columns["j-dominant"] = a_row_via_J(m_ord);
    if (r == Route::Shuffle) columns["shuffle"] = a_row_via_shuffle(m, opt.shuffle_cap);
  }
  std::set<Multisegment> keys;
  for (const auto& [name, counts] : columns) {
    for (const auto& [n, a] : counts) keys.insert(n);
  }
  bool agree = true;
  for (const auto& [name, counts] : columns) agree = agree && counts == columns["a-tableau"];

  auto lookup = [](const MultisegmentCounts& counts, const Multisegment& n) {
    auto it = counts.find(n);
    return it == counts.end() ? Count{0} : it->second;
  };
  if (json_output(opt)) {
    Json entries = Json::array();
    for (const auto& n : keys) {
      Json counts;
      for (const auto& [name, col] : columns) counts[name] = lookup(col, n);
      entries.push_back({{"n", to_json(n)}, {"counts", counts}});
    }
    std::cout << Json{{"source", to_json(m)}, {"entries", entries}, {"agree", agree}}.dump() << "\n";
  } else {
    for (const auto& n : keys) {
      std::cout << to_string(n);
      for (const auto& [name, col] : columns) std::cout << "  " << name << "=" << lookup(col, n);
      std::cout << "\n";
    }
  }
  return agree ? kOk : kDiscrepancy;
}

template <class C>
int run_qchar_with(const Options& opt) {
  const Multisegment m = parse_multisegment(opt.input);
  SegPoly<C> f = opt.dominant_only ? dominant_qchar<C>(m, opt.rank) : standard_qchar<C>(m, opt.rank);
  const DrinfeldPoly<C> y = to_drinfeld(f, opt.rank);
  if (json_output(opt)) {
    std::cout << to_json(y).dump() << "\n";
  } else {
    std::cout << to_string(y) << "\n";
  }
  return kOk;
}

int run_qchar(const Options& opt) {
  return use_bigint() ? run_qchar_with<BigInt>(opt) : run_qchar_with<Count>(opt);
}

int run_restrict(const Options& opt) {
  const Multisegment m = parse_multisegment(opt.input);
  if (opt.factors < 1) throw Error(ErrorKind::ParseError, "--s must be at least 1");
  std::map<RestrictionTerm, Count> terms;
  for (auto& t : mackey_restriction(admissible_ordering(m), opt.factors)) ++terms[t];
  if (json_output(opt)) {
    Json out = Json::array();
    for (const auto& [t, c] : terms) {
      Json parts = Json::array();
      for (const auto& part : t.parts) parts.push_back(to_json(part));
      out.push_back({{"count", c}, {"parts", parts}});
    }
    std::cout << Json{{"source", to_json(m)}, {"s", opt.factors}, {"terms", out}}.dump() << "\n";
    return kOk;
  }
  for (const auto& [t, c] : terms) std::cout << c << " * " << to_string(t) << "\n";
  return kOk;
}

Json discrepancy_json(const Discrepancy& d) {
  Json j{{"m", to_string(d.m)}, {"route_a", d.route_a}, {"route_b", d.route_b}, {"detail", d.detail}};
  j["rank"] = d.rank ? Json(*d.rank) : Json(nullptr);
  return j;
}

int run_verify(const Options& opt) {
  const Multisegment m = parse_multisegment(opt.input);
  const auto theorem = check_theorem_A(m, opt.rank);
  const auto bijection = check_bijection(m);
  if (json_output(opt)) {
    Json out{{"m", to_string(m)}, {"rank", opt.rank}};
    out["theorem_A"] = theorem ? discrepancy_json(*theorem) : Json("ok");
    out["bijection"] = bijection ? discrepancy_json(*bijection) : Json("ok");
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "theorem-A: " << (theorem ? "FAIL " + theorem->detail : std::string("ok")) << "\n";
    std::cout << "bijection: " << (bijection ? "FAIL " + bijection->detail : std::string("ok")) << "\n";
  }
  return theorem || bijection ? kDiscrepancy : kOk;
}

int run_sweep(const Options& opt) {
  SweepConfig config;
  config.max_height = opt.max_height;
  std::tie(config.lo, config.hi) = parse_window(opt.window);
  config.ranks = opt.ranks;
  if (!opt.routes.empty()) {
    config.routes.clear();
    for (const auto& name : opt.routes) config.routes.insert(parse_route(name));
  }
  config.start_index = opt.start_index;
  config.threads = opt.threads;
  config.shuffle_cap = opt.shuffle_cap;
  const SweepReport report = sweep(config);

  if (json_output(opt)) {
    for (const auto& rec : report.records) {
      Json j{{"index", rec.index}, {"m", to_string(rec.m)},  {"route_a", rec.route_a},
             {"route_b", rec.route_b}, {"ok", rec.ok}};
      j["rank"] = rec.rank ? Json(*rec.rank) : Json(nullptr);
      if (!rec.ok) j["detail"] = rec.detail;
      std::cout << j.dump() << "\n";
    }
    std::cerr << Json{{"multisegments", report.multisegments},
                      {"comparisons", report.comparisons},
                      {"discrepancies", report.discrepancies.size()},
                      {"seconds", report.seconds}}
                     .dump()
              << "\n";
  } else {
    for (const auto& d : report.discrepancies) {
      std::cout << "DISCREPANCY " << to_string(d.m) << " " << d.route_a << " vs " << d.route_b;
      if (d.rank) std::cout << " N=" << *d.rank;
      std::cout << ": " << d.detail << "\n";
    }
    std::cout << "multisegments: " << report.multisegments << "\n"
              << "comparisons: " << report.comparisons << "\n"
              << "discrepancies: " << report.discrepancies.size() << "\n"
              << "seconds: " << report.seconds << "\n";
  }
  return report.discrepancies.empty() ? kOk : kDiscrepancy;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Overflow:
    case ErrorKind::CapExceeded: return kResource;
    case ErrorKind::NonDivisible: return kDiscrepancy;
    default: return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reciprocal characters and dominant q-characters of integral multisegments."};
  app.footer(
      "Multisegments are written like \"[1,1]+2*[2,2]+[3,3]\"; \"0\" is the empty one.\n"
      "Y(l,p) stands for the Drinfeld variable Y(l, v^p).\n"
      "Set QCHAR_COEFF=bigint for arbitrary-precision q-character coefficients.\n"
      "Exit status: 0 ok, 1 discrepancy, 2 usage or parse error, 3 overflow or cap exceeded.");
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* dominant = app.add_subcommand("dominant", "Reciprocal character as A(m,n) * n lines");
  dominant->add_option("multisegment", opt.input)->required();
  dominant->add_option("--n", opt.rank, "Project through P_N and print Y(l,p) terms")->check(CLI::PositiveNumber);
  add_format(dominant);

  auto* amatrix = app.add_subcommand("amatrix", "Row n -> A(m,n) with counts per route");
  amatrix->add_option("multisegment", opt.input)->required();
  amatrix->add_option("--routes", opt.routes, "Extra routes: mackey, j-dominant, shuffle")->delimiter(',');
  amatrix->add_option("--shuffle-cap", opt.shuffle_cap, "Height cap for the shuffle route");
  add_format(amatrix);

  auto* qchar = app.add_subcommand("qchar", "q-character of the standard module in Y(l,p) notation");
  qchar->add_option("multisegment", opt.input)->required();
  qchar->add_option("--n", opt.rank, "Rank N of sl(N+1)")->required()->check(CLI::PositiveNumber);
  qchar->add_flag("--dominant", opt.dominant_only, "Only the dominant part");
  add_format(qchar);

  auto* restrict_cmd = app.add_subcommand("restrict", "Mackey decomposition into s factors");
  restrict_cmd->add_option("multisegment", opt.input)->required();
  restrict_cmd->add_option("--s", opt.factors, "Number of factors")->required()->check(CLI::PositiveNumber);
  add_format(restrict_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Reciprocal versus dominant q-character and transfer bijection checks for one m");
  verify_cmd->add_option("multisegment", opt.input)->required();
  verify_cmd->add_option("--n", opt.rank, "Rank N")->required()->check(CLI::PositiveNumber);
  add_format(verify_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "Exhaustive route comparison over a family");
  sweep_cmd->add_option("--max-height", opt.max_height, "Largest support height")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--window", opt.window, "Endpoint window lo:hi");
  sweep_cmd->add_option("--n", opt.ranks, "Ranks to check, comma separated")->delimiter(',');
  sweep_cmd->add_option("--routes", opt.routes, "Routes: mackey, j-dominant, shuffle, product")->delimiter(',');
  sweep_cmd->add_option("--start-index", opt.start_index, "Skip the first multisegments of the enumeration");
  sweep_cmd->add_option("--threads", opt.threads, "Worker threads (0 = hardware)");
  sweep_cmd->add_option("--shuffle-cap", opt.shuffle_cap, "Height cap for the shuffle route");
  add_format(sweep_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*dominant) return run_dominant(opt);
    if (*amatrix) return run_amatrix(opt);
    if (*qchar) return run_qchar(opt);
    if (*restrict_cmd) return run_restrict(opt);
    if (*verify_cmd) return run_verify(opt);
    if (*sweep_cmd) return run_sweep(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return kUsage;
}
