#pragma once

// The powmon command line: eval, analyze, iso, suite, example-rank4.
// Exit codes: 0 pass, 1 property failure, 2 applicability or usage error,
// 3 parse error.

#include "powmon/finset.hpp"
#include "powmon/iso.hpp"
#include "powmon/literal.hpp"
#include "powmon/monoid_io.hpp"
#include "powmon/structure.hpp"
#include "powmon/suites.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace powmon::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kParse = 3 };

// ---------------------------------------------------------------------------
// Expressions
//
//   expr   := chain ('|' chain)?
//   chain  := power ('*' power)*
//   power  := atom ('^' INT)*
//   atom   := set | 'rev' '(' expr ')' | '(' expr ')'
//
// 'X | Y' asks whether X divides Y and yields the largest cofactor.

class Evaluator {
 public:
  Evaluator(MonoidPtr monoid, std::size_t cap) : monoid_(std::move(monoid)), cap_(cap) {}

  /// The value of `text`, or std::nullopt when a top-level division fails.
  std::optional<FinSubset1> evaluate(std::string_view text) {
    literal::Cursor c(text);
    auto left = chain(c);
    std::optional<FinSubset1> out = left;
    if (c.accept('|')) {
      auto right = chain(c);
      out = divides(left, right, cap_).cofactor;
    }
    if (!c.at_end()) c.fail("unexpected input");
    return out;
  }

 private:
  FinSubset1 chain(literal::Cursor& c) {
    auto x = power(c);
    while (c.accept('*')) x = set_product(x, power(c));
    return x;
  }

  FinSubset1 power(literal::Cursor& c) {
    auto x = atom(c);
    while (c.accept('^')) {
      auto n = c.integer();
      if (n < 0) c.fail("negative exponent");
      if (n > std::numeric_limits<std::uint64_t>::max()) c.fail("exponent too large");
      x = set_power(x, static_cast<std::uint64_t>(n));
    }
    return x;
  }

  FinSubset1 atom(literal::Cursor& c) {
    if (c.peek() == '{') return FinSubset1::make(monoid_, literal::parse_element_list(c, monoid_->signature()));
    if (c.accept_word("rev")) {
      c.expect('(');
      auto x = chain(c);
      c.expect(')');
      return reversion(x);
    }
    if (c.accept('(')) {
      auto x = chain(c);
      c.expect(')');
      return x;
    }
    c.fail("expected a set literal, rev(...) or '('");
  }

  MonoidPtr monoid_;
  std::size_t cap_;
};

// ---------------------------------------------------------------------------
// Shared options

struct Options {
  std::int64_t window = 8;
  std::optional<std::uint64_t> seed;
  std::size_t samples = 1000;
  std::size_t max_set_size = 6;
  std::size_t cap = kDefaultDivisionCap;
  std::string format = "json";

  suites::SuiteConfig config() const {
    suites::SuiteConfig c;
    c.window_bound = window;
    c.sample_count = samples;
    c.max_set_size = max_set_size;
    c.division_cap = cap;
    if (seed) {
      c.seed = *seed;
    } else if (const char* env = std::getenv("POWMON_SEED"); env && *env) {
      try {
        std::size_t used = 0;
        c.seed = std::stoull(env, &used, 0);
        if (env[used] != '\0') throw std::invalid_argument(env);
      } catch (const std::exception&) {
        throw InvalidArgument(std::string("POWMON_SEED is not an integer: ") + env);
      }
    }
    c.validate();
    return c;
  }

  bool human() const { return format == "human"; }
};

namespace detail {

inline std::string truncated(const std::vector<GroupElement>& v, std::size_t limit = 24) {
  std::string s;
  for (std::size_t i = 0; i < v.size() && i < limit; ++i) s += (i ? " " : "") + format_element(v[i]);
  if (v.size() > limit) s += " ... (" + std::to_string(v.size()) + " total)";
  return s.empty() ? "-" : s;
}

inline std::string valuation_text(const ValuationVerdict& v) {
  auto s = to_string(v.status);
  if (v.witness) s += "(" + format_element(*v.witness) + ")";
  return s;
}

inline std::string first_failure(const std::vector<suites::SuiteReport>& reports) {
  for (const auto& r : reports)
    if (!r.failures.empty()) return r.suite + ": " + r.failures.front().dump();
  for (const auto& r : reports)
    if (!r.passed()) return r.suite + ": " + to_string(r.verdict);
  return {};
}

inline int emit_reports(const std::vector<suites::SuiteReport>& reports, const Options& o, json header,
                        std::ostream& out, std::ostream& err) {
  bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  if (o.human()) {
    out << suites::render_human(reports);
    out << (ok ? "PASS" : "FAIL") << '\n';
  } else {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(suites::to_json(r));
    header["config"] = suites::to_json(o.config());
    header["reports"] = arr;
    header["verdict"] = ok ? "PASS" : "FAIL";
    out << header.dump(2) << '\n';
  }
  if (!ok) err << "first failure: " << first_failure(reports) << '\n';
  return ok ? kPass : kFail;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Subcommands

inline int cmd_eval(const std::string& expr, const std::string& monoid_file, const Options& o, std::ostream& out) {
  MonoidPtr m = monoid_file.empty() ? MonoidSpec::full_n0() : io::load_monoid(monoid_file);
  Evaluator ev(m, o.cap);
  auto value = ev.evaluate(expr);
  if (o.human()) {
    out << (value ? value->to_string() : "NO") << '\n';
  } else {
    json j{{"expression", expr}, {"monoid", m->label()}};
    if (value) {
      j["result"] = value->to_string();
      j["size"] = value->size();
    } else {
      j["result"] = nullptr;
    }
    out << j.dump(2) << '\n';
  }
  return kPass;
}

inline int cmd_analyze(const std::string& file, const Options& o, std::ostream& out) {
  auto cfg = o.config();
  auto m = io::load_monoid(file);
  const auto window = cfg.window();
  auto members = members_in_window(*m, window);
  std::vector<GroupElement> unit_list, nonunits;
  for (const auto& u : members) (m->contains(inverse(u)) ? unit_list : nonunits).push_back(u);
  auto verdicts = parallel_map(nonunits, [&](const GroupElement& u) { return is_irreducible(*m, u, window); });
  std::vector<GroupElement> irreducibles;
  bool up_to_window = false;
  for (std::size_t i = 0; i < nonunits.size(); ++i)
    if (verdicts[i].status != IrreducibleStatus::Reducible) {
      irreducibles.push_back(nonunits[i]);
      up_to_window |= verdicts[i].status == IrreducibleStatus::IrreducibleUpToWindow;
    }
  auto valuation = is_valuation(*m, window);
  auto decomposition = decompose(*m, window);
  auto closure = validate_decomposition(*m, decomposition, cfg.sample_count, cfg.seed);
  bool closure_ok = std::all_of(closure.begin(), closure.end(), [](const auto& c) { return c.failures.empty(); });

  if (o.human()) {
    out << "monoid        " << m->label() << " (" << m->family_name() << ")\n"
        << "window        " << window.bound << " (" << members.size() << " members)\n"
        << "reduced       " << (is_reduced(*m) ? "yes" : "no") << '\n'
        << "valuation     " << detail::valuation_text(valuation) << '\n'
        << "units         " << detail::truncated(unit_list) << '\n'
        << "irreducibles  " << detail::truncated(irreducibles) << (up_to_window ? "  [up to window]" : "") << '\n'
        << "H_v           " << detail::truncated(decomposition.pseudo_units) << '\n'
        << "H_v^c         " << detail::truncated(decomposition.complement) << '\n'
        << "undetermined  " << detail::truncated(decomposition.undetermined) << '\n';
    for (const auto& c : closure)
      out << "closure       " << c.property << ": " << c.passed << "/" << c.checked << " passed, " << c.inconclusive
          << " inconclusive\n";
  } else {
    json irr = json::array();
    for (std::size_t i = 0; i < nonunits.size(); ++i)
      if (verdicts[i].status != IrreducibleStatus::Reducible)
        irr.push_back({{"element", format_element(nonunits[i])}, {"status", to_string(verdicts[i].status)}});
    json valuation_json{{"status", to_string(valuation.status)}};
    if (valuation.witness) valuation_json["witness"] = format_element(*valuation.witness);
    auto dec = to_json(decomposition);
    json closure_json = json::array();
    for (const auto& c : closure) closure_json.push_back(to_json(c));
    json j{{"monoid", io::monoid_to_json(*m)},
           {"window", window.bound},
           {"members", members.size()},
           {"reduced", is_reduced(*m)},
           {"valuation", valuation_json},
           {"units", elements_json(unit_list)},
           {"irreducibles", irr},
           {"decomposition", dec},
           {"closure", closure_json}};
    out << j.dump(2) << '\n';
  }
  return closure_ok ? kPass : kFail;
}

inline int cmd_iso(const std::string& h_file, const std::string& k_file, const Options& o, std::ostream& out,
                   std::ostream& err) {
  auto cfg = o.config();
  auto h = io::load_monoid(h_file), k = io::load_monoid(k_file);
  auto f = build_translation_iso(h, k);
  auto reports = suites::run_suites({"two_sets", "cardinality", "homomorphism"}, f, cfg);
  if (o.human()) out << "iso " << h->label() << " -> " << k->label() << " (" << to_string(f.kind()) << ")\n";
  return detail::emit_reports(reports, o, json{{"iso", to_json(f)}}, out, err);
}

inline int cmd_suite(const std::string& h_file, const std::string& k_file, const std::vector<std::string>& names,
                     const Options& o, std::ostream& out, std::ostream& err) {
  auto cfg = o.config();
  auto h = io::load_monoid(h_file);
  auto k = k_file.empty() ? h : io::load_monoid(k_file);
  auto f = build_translation_iso(h, k);
  auto reports = suites::run_suites(names, f, cfg);
  return detail::emit_reports(reports, o, json{{"iso", to_json(f)}}, out, err);
}

inline QuadraticSurd parse_slope(const std::string& text) {
  literal::Cursor c(text);
  Integer num = c.integer(), den = 1;
  if (c.accept('/')) den = c.integer();
  if (!c.at_end()) c.fail("expected P or P/Q");
  if (den <= 0) throw InvalidArgument("slope denominator must be positive");
  return QuadraticSurd::rational(num, den);
}

inline int cmd_example_rank4(const std::string& slope, const Options& o, std::ostream& out, std::ostream& err) {
  auto cfg = o.config();
  auto alpha = slope.empty() ? QuadraticSurd::sqrt(2) : parse_slope(slope);
  auto report = suites::run_example_rank4(cfg, alpha);
  return detail::emit_reports({report}, o, json{{"scenario", "example_rank4"}}, out, err);
}

// ---------------------------------------------------------------------------
// Entry point

/// Runs one invocation; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in reduced finitary power monoids", "powmon"};
  app.require_subcommand(1);
  Options o;
  std::uint64_t seed = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--window", o.window, "window bound B (free coordinates in [-B, B])")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed, "sampling seed (default " + std::to_string(suites::kDefaultSeed) + ")");
    sub->add_option("--samples", o.samples, "samples per suite")->check(CLI::PositiveNumber);
    sub->add_option("--max-set-size", o.max_set_size, "largest sampled set, identity included")
        ->check(CLI::Range(2, 1000));
    sub->add_option("--cap", o.cap, "largest set accepted by divisibility")->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "human"}));
  };

  std::string expr, monoid_file;
  auto* eval = app.add_subcommand("eval", "evaluate a set expression, e.g. '{0,1}^3 * rev({0,1,3})'");
  eval->add_option("expression", expr)->required();
  eval->add_option("--monoid", monoid_file, "monoid definition file (default N0)");
  add_common(eval);

  std::string file;
  auto* analyze = app.add_subcommand("analyze", "units, irreducibles, valuation verdict and decomposition");
  analyze->add_option("monoid", file)->required();
  add_common(analyze);

  std::string h_file, k_file;
  auto* iso = app.add_subcommand("iso", "build the translation isomorphism H -> K and test it");
  iso->add_option("H", h_file)->required();
  iso->add_option("K", k_file)->required();
  add_common(iso);

  std::string sh, sk;
  std::vector<std::string> names;
  auto* suite = app.add_subcommand("suite", "run property suites against the isomorphism H -> K");
  suite->add_option("H", sh)->required();
  suite->add_option("K", sk, "codomain (default H)");
  suite->add_option("--suite", names, "suite names (default all)")->check(CLI::IsMember(suites::suite_names()));
  add_common(suite);

  std::string slope;
  auto* rank4 = app.add_subcommand("example-rank4", "the rank-4 pair of non-valuation monoids");
  rank4->add_option("--slope", slope, "replace sqrt(2) by the rational slope P/Q");
  add_common(rank4);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  for (auto* sub : {eval, analyze, iso, suite, rank4})
    if (sub->parsed() && sub->count("--seed")) o.seed = seed;

  try {
    if (eval->parsed()) return cmd_eval(expr, monoid_file, o, out);
    if (analyze->parsed()) return cmd_analyze(file, o, out);
    if (iso->parsed()) return cmd_iso(h_file, k_file, o, out, err);
    if (suite->parsed()) return cmd_suite(sh, sk, names, o, out, err);
    return cmd_example_rank4(slope, o, out, err);
  } catch (const ApplicabilityFailed& e) {
    err << "APPLICABILITY_FAILED " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const DichotomyViolation& e) {
    err << "property failure: " << e.what() << '\n';
    return kFail;
  } catch (const InternalError& e) {
    err << "property failure: " << e.what() << '\n';
    return kFail;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace powmon::cli
