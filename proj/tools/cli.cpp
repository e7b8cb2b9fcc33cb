#include "cli.hpp"

#include "commands.hpp"
#include "report.hpp"

#include <antichain/bounds.hpp>
#include <antichain/certificates.hpp>
#include <antichain/error.hpp>
#include <antichain/family_io.hpp>
#include <antichain/search.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace antichain::cli {

using nlohmann::json;

namespace {

struct Common {
  bool pretty = false;
  unsigned workers = 1;
  std::uint64_t node_cap = 0;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InvalidArgument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

IntersectionSpec parse_L(const std::string &text) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty())
      continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used != item.size())
      throw InvalidArgument("bad intersection size '" + item + "' in --L");
    values.push_back(v);
  }
  if (values.empty())
    throw InvalidArgument("--L needs at least one value, e.g. --L 0,1");
  return IntersectionSpec(std::move(values));
}

unsigned resolve_workers(unsigned flag) {
  const char *env = std::getenv("ANTICHAIN_WORKERS");
  if (!env || !*env)
    return std::max(1U, flag);
  char *end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 1024)
    throw InvalidArgument("ANTICHAIN_WORKERS must be an integer in [1, 1024]");
  return static_cast<unsigned>(v);
}

SearchOptions search_options(const Common &c, SymmetryMode mode) {
  SearchOptions o;
  o.node_cap = c.node_cap;
  o.workers = resolve_workers(c.workers);
  o.symmetry = mode;
  return o;
}

Outcome property(std::string name, bool holds, std::string summary, json detail = json::object()) {
  return Outcome{std::move(name), holds ? Status::pass : Status::fail, "set-family predicates",
                 std::move(summary), std::move(detail)};
}

// ---- check ---------------------------------------------------------------

struct CheckArgs {
  std::string file;
  bool sperner = false, intersecting = false;
  std::optional<int> uniform;
  std::string L;
  std::optional<int> diameter, setwise, ball, punctured;
};

void cmd_check(RunReport &report, const CheckArgs &a) {
  const std::string bytes = read_file(a.file);
  report.add_input(bytes);
  const Family f = parse_family(bytes);

  json props{{"n", f.n()}, {"size", f.size()}, {"sperner", is_sperner(f)},
             {"intersecting", is_intersecting(f)}, {"uniform", f.empty() || is_uniform(f, f[0].size())}};
  props["lym"] = to_fraction_string(lym_statistic(f));
  if (!f.empty()) {
    props["rank"] = f.rank();
    props["diameter"] = symmetric_diameter(f);
    props["max_setwise_difference"] = max_setwise_diff(f);
    props["common_core"] = to_json(common_core(f));
  }
  report.set_result({{"family", to_json(f)}, {"properties", props}});

  if (a.sperner) {
    const bool s = is_sperner(f);
    report.add(property("sperner", s, s ? "no member contains another" : "some member contains another"));
    if (s) {
      const Rational lym = lym_statistic(f);
      Outcome o{"lym", lym <= 1 ? Status::pass : Status::fail, "LYM inequality",
                "sum 1/C(n,|A|) = " + to_fraction_string(lym) + " <= 1", json::object()};
      report.add(std::move(o));
    }
  }
  if (a.intersecting) {
    const bool s = is_intersecting(f);
    report.add(property("intersecting", s, s ? "pairwise intersecting" : "two members are disjoint"));
  }
  if (a.uniform) {
    const bool s = is_uniform(f, *a.uniform);
    report.add(property("uniform", s, "every member has size " + std::to_string(*a.uniform)));
  }
  if (!a.L.empty()) {
    const auto L = parse_L(a.L);
    const bool s = is_L_intersecting(f, L);
    report.add(property("L-intersecting", s, "pairwise intersections in " + L.to_string()));
  }
  if (a.diameter) {
    const bool s = f.empty() || symmetric_diameter(f) <= *a.diameter;
    report.add(property("diameter", s, "pairwise |A xor B| <= " + std::to_string(*a.diameter)));
  }
  if (a.setwise) {
    const bool s = f.empty() || max_setwise_diff(f) <= *a.setwise;
    report.add(property("setwise", s, "pairwise |A \\ B| <= " + std::to_string(*a.setwise)));
  }
  if (a.ball) {
    const auto c = ball_cover_center(f, *a.ball);
    report.add(property("ball-cover", c.has_value(),
                        "inside a translate of K(n," + std::to_string(*a.ball) + ")",
                        c ? json{{"translate", to_json(*c)}} : json::object()));
  }
  if (a.punctured) {
    const auto c = punctured_ball_cover(f, *a.punctured);
    report.add(property("punctured-ball-cover", c.has_value(),
                        "inside a translate of K_y(n," + std::to_string(*a.punctured) + ")",
                        c ? json{{"translate", to_json(c->center)}, {"y", c->y}} : json::object()));
  }
}

// ---- certify -------------------------------------------------------------

struct CertifyArgs {
  std::string file;
  std::string system;
  std::optional<int> k;
  std::string L;
  bool dump_polys = false;
  bool normalize = false;
};

void cmd_certify(RunReport &report, const CertifyArgs &a) {
  const std::string bytes = read_file(a.file);
  report.add_input(bytes);
  const Family f = parse_family(bytes);
  if (f.empty())
    throw InvalidArgument("certificates need a non-empty family");

  CertificateReport cert;
  std::string source;
  json extra = json::object();
  if (a.system == "katona") {
    const int k = a.k.value_or(f[0].size() - 1);
    cert = katona_certificate(f, k);
    source = "Katona shadow inequality";
  } else if (a.system == "symmetric") {
    const int k = a.k.value_or(symmetric_diameter(f) / 2);
    if (a.normalize) {
      const auto norm = normalise_for_symmetric(f);
      cert = symmetric_certificate(norm.even_part, k);
      cert.translation = norm.translation;
      extra = {{"even_part", norm.even_part.size()}, {"odd_part", norm.odd_part.size()},
               {"family_bound", Integer(2 * cert.implied_bound).str()}};
    } else {
      cert = symmetric_certificate(f, k);
    }
    source = "odd-diameter stability (even-part system)";
  } else if (a.system == "setwise") {
    const int k = a.k.value_or(max_setwise_diff(f));
    cert = setwise_certificate(f, k);
    source = "bounded set-wise differences";
  } else if (a.system == "snevily") {
    std::vector<int> sizes;
    if (a.L.empty()) {
      for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
          sizes.push_back(popcount(f[i].bits() & f[j].bits()));
      std::sort(sizes.begin(), sizes.end());
      sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
      if (sizes.empty())
        sizes.push_back(0);
    }
    const auto L = a.L.empty() ? IntersectionSpec(std::move(sizes)) : parse_L(a.L);
    cert = snevily_certificate(f, L);
    source = "L-intersecting Sperner bound";
  } else {
    throw InvalidArgument("unknown system '" + a.system + "'");
  }

  json result = to_json(cert, a.dump_polys);
  if (!extra.empty())
    result["normalisation"] = extra;
  report.set_result(result);
  const auto verdict = [](bool ok) { return ok ? Status::pass : Status::fail; };
  report.add(Outcome{"triangular", verdict(cert.triangular_ok), source,
                     "evaluation matrix is triangular with nonzero diagonal", json::object()});
  report.add(Outcome{"rank", verdict(cert.rank_ok), source,
                     "exact rank " + std::to_string(cert.rank) + " of " +
                         std::to_string(cert.poly_count()) + " polynomials",
                     json::object()});
  report.add(Outcome{"diagonal", verdict(cert.diagonal_ok), source,
                     "diagonal values match the closed form", json::object()});
  report.add(Outcome{"inequality", verdict(cert.inequality_ok), source, cert.witnessed_inequality,
                     {{"implied_bound", cert.implied_bound.str()}}});
}

// ---- bounds --------------------------------------------------------------

void cmd_bounds(RunReport &report, const BoundQuery &q) {
  if (q.n < 0)
    throw InvalidArgument("--n must be non-negative");
  const auto bounds = bounds_table(q);
  json table = json::array();
  for (const auto &b : bounds)
    table.push_back(to_json(b));
  report.set_result({{"bounds", std::move(table)}});
  report.add(Outcome{"bounds", Status::pass, "closed-form bounds",
                     std::to_string(bounds.size()) + " applicable bounds", json::object()});
}

// ---- search --------------------------------------------------------------

struct SearchArgs {
  std::string mode = "diameter";
  int n = 0;
  std::optional<int> d, k, t, t_cap;
  std::string L;
  bool sperner = false;
  std::string symmetry = "auto";
};

SymmetryMode parse_symmetry(const std::string &s) {
  if (s == "auto")
    return SymmetryMode::automatic;
  if (s == "on")
    return SymmetryMode::on;
  if (s == "off")
    return SymmetryMode::off;
  throw InvalidArgument("--symmetry must be auto, on or off");
}

int require(const std::optional<int> &v, const char *flag, const std::string &mode) {
  if (!v)
    throw InvalidArgument("mode " + mode + " needs " + flag);
  return *v;
}

Outcome audit_outcome(const AuditReport &audit) {
  Outcome o;
  o.name = audit.name;
  o.source = audit.t ? "set-wise difference dichotomy" : "odd-diameter stability dichotomy";
  o.status = audit.ok() ? Status::pass : Status::fail;
  o.summary = std::to_string(audit.families_checked) + " maximal families, " +
              std::to_string(audit.violations.size()) + " violations, " +
              std::to_string(audit.claim_violations) + " structural violations";
  return o;
}

void cmd_search(RunReport &report, const SearchArgs &a, const Common &c) {
  const auto opts = search_options(c, parse_symmetry(a.symmetry));
  if (a.mode == "audit" || a.mode == "setwise-audit") {
    const int k = require(a.k, "--k", a.mode);
    const auto audit = a.mode == "audit" ? dichotomy_audit(a.n, k)
                                         : setwise_dichotomy_audit(a.n, k, require(a.t, "--t", a.mode));
    report.set_result(to_json(audit));
    report.add(audit_outcome(audit));
    return;
  }
  SearchResult r;
  std::string source;
  if (a.mode == "diameter") {
    r = extremal_diameter(a.n, require(a.d, "--d", a.mode), opts);
    source = "Kleitman diameter theorem";
  } else if (a.mode == "lsperner") {
    if (a.L.empty())
      throw InvalidArgument("mode lsperner needs --L");
    r = extremal_L_sperner(a.n, parse_L(a.L), opts);
    source = "L-intersecting Sperner conjecture (finite instance)";
  } else if (a.mode == "setwise") {
    r = extremal_setwise(a.n, require(a.k, "--k", a.mode), a.t_cap, a.sperner, opts);
    source = a.sperner ? "Sperner families with set-wise differences" : "bounded set-wise differences";
  } else {
    throw InvalidArgument("unknown --mode '" + a.mode + "'");
  }
  report.set_result(to_json(r, false));
  report.timing()["explored_nodes"] = r.explored_nodes;
  report.add(search_outcome(r.predicate_name, source, r));
}

} // namespace

Outcome search_outcome(std::string name, std::string source, const SearchResult &r) {
  Outcome o;
  o.name = std::move(name);
  o.source = std::move(source);
  o.detail = {{"optimum", r.optimum}, {"verdict", to_string(r.verdict)}};
  if (r.compared_bound)
    o.detail["bound"] = r.compared_bound->value.str();
  switch (r.verdict) {
  case Verdict::counterexample:
    o.status = Status::fail;
    o.detail["witness"] = to_json(r.witness);
    o.summary = "COUNTEREXAMPLE: optimum " + std::to_string(r.optimum) + " exceeds " +
                r.compared_bound->value.str();
    return o;
  case Verdict::inconclusive:
    o.status = Status::inconclusive;
    o.summary = "node budget exhausted; best so far " + std::to_string(r.optimum);
    return o;
  case Verdict::bound_tight:
    o.summary = "optimum " + std::to_string(r.optimum) + " attains the bound";
    break;
  case Verdict::consistent:
    o.summary = "optimum " + std::to_string(r.optimum) + " below the bound " +
                (r.compared_bound ? r.compared_bound->value.str() : std::string("?"));
    break;
  }
  for (const auto &check : r.extra_checks)
    if (!check.holds) {
      o.status = Status::fail;
      o.summary += "; exceeds " + check.bound.name + " = " + check.bound.value.str();
      o.detail["witness"] = to_json(r.witness);
    }
  return o;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact verification tools for extremal set-family bounds", "antichain"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--pretty", common.pretty, "Human-readable rendering instead of JSON");

  CheckArgs check;
  auto *c = app.add_subcommand("check", "Evaluate set-family predicates on a family file");
  c->add_option("file", check.file, "Family JSON file")->required();
  c->add_flag("--sperner", check.sperner);
  c->add_flag("--intersecting", check.intersecting);
  c->add_option("--uniform", check.uniform, "Require every member to have size k");
  c->add_option("--L", check.L, "Allowed intersection sizes, comma separated");
  c->add_option("--diameter", check.diameter, "Require pairwise |A xor B| <= d");
  c->add_option("--setwise", check.setwise, "Require pairwise |A \\ B| <= k");
  c->add_option("--ball", check.ball, "Require a translate of K(n,k) to contain the family");
  c->add_option("--punctured", check.punctured, "Require a translate of K_y(n,k) to contain the family");

  CertifyArgs certify;
  auto *cf = app.add_subcommand("certify", "Build and verify a polynomial independence certificate");
  cf->add_option("file", certify.file, "Family JSON file")->required();
  cf->add_option("--system", certify.system)
      ->required()
      ->check(CLI::IsMember({"katona", "symmetric", "setwise", "snevily"}));
  cf->add_option("--k", certify.k, "Level parameter (derived from the family when omitted)");
  cf->add_option("--L", certify.L, "Intersection sizes for the snevily system");
  cf->add_flag("--dump-polys", certify.dump_polys, "Include every polynomial in the report");
  cf->add_flag("--normalize", certify.normalize,
               "symmetric: translate and certify the even part of an odd-diameter family");

  BoundQuery query;
  auto *b = app.add_subcommand("bounds", "Evaluate every applicable closed-form bound");
  b->add_option("--n", query.n)->required();
  b->add_option("--k", query.k);
  b->add_option("--s", query.s);
  b->add_option("--t", query.t);
  b->add_option("--d", query.d);

  SearchArgs search;
  auto *s = app.add_subcommand("search", "Exact extremal search or dichotomy audit");
  s->add_option("--mode", search.mode)
      ->check(CLI::IsMember({"diameter", "setwise", "lsperner", "audit", "setwise-audit"}));
  s->add_option("--n", search.n)->required();
  s->add_option("--d", search.d);
  s->add_option("--k", search.k);
  s->add_option("--t", search.t, "Rank for setwise-audit");
  s->add_option("--t-cap", search.t_cap, "Rank cap for setwise mode");
  s->add_option("--L", search.L);
  s->add_flag("--sperner", search.sperner);
  s->add_option("--symmetry", search.symmetry, "auto, on or off");
  s->add_option("--node-cap", common.node_cap, "Search budget; 0 means unlimited");
  s->add_option("--workers", common.workers, "Worker threads (ANTICHAIN_WORKERS overrides)");

  SuiteOptions suite;
  auto *v = app.add_subcommand("verify-suite", "Run the small-n verification matrix");
  v->add_option("--max-n", suite.max_n, "Largest ground set (at most 7)");
  v->add_option("--seed", suite.seed, "Seed for the randomized certificate runs");
  v->add_option("--samples", suite.samples, "Randomized runs per certificate system");
  v->add_option("--node-cap", common.node_cap);
  v->add_option("--workers", common.workers);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  RunReport report(args);
  int code = kPass;
  try {
    if (app.got_subcommand(c)) {
      cmd_check(report, check);
    } else if (app.got_subcommand(cf)) {
      cmd_certify(report, certify);
    } else if (app.got_subcommand(b)) {
      cmd_bounds(report, query);
    } else if (app.got_subcommand(s)) {
      cmd_search(report, search, common);
    } else if (app.got_subcommand(v)) {
      if (suite.max_n < 1 || suite.max_n > kSuiteMaxN)
        throw SizeCapError("--max-n must lie in [1, " + std::to_string(kSuiteMaxN) + "]");
      suite.node_cap = common.node_cap;
      suite.workers = resolve_workers(common.workers);
      run_verify_suite(report, suite);
    }
    code = report.exit_code();
  } catch (const PreconditionError &e) {
    report.add(Outcome{"precondition", Status::error, "", e.what(), {{"hypothesis", e.hypothesis()}}});
    err << "precondition '" << e.hypothesis() << "' violated: " << e.what() << "\n";
    code = kUsage;
  } catch (const InternalError &e) {
    report.add(Outcome{"internal", Status::fail, "", e.what(), json::object()});
    err << "internal consistency failure: " << e.what() << "\n";
    code = kFailure;
  } catch (const Error &e) {
    report.add(Outcome{"input", Status::error, "", e.what(), json::object()});
    err << "error: " << e.what() << "\n";
    code = kUsage;
  }
  if (common.pretty)
    out << report.render_pretty();
  else
    out << report.to_json().dump(2) << "\n";
  return code;
}

} // namespace antichain::cli
