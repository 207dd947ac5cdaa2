// besselmoments: Bessel moments, sum-rule checks and exact sequences from the command line.

#include <chrono>
#include <cmath>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "besselmoments/errors.hpp"
#include "besselmoments/exact_seq.hpp"
#include "besselmoments/hilbert.hpp"
#include "besselmoments/moment.hpp"
#include "besselmoments/sum_rules.hpp"
#include "result_cache.hpp"

namespace {

using nlohmann::json;
using namespace bm;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitPrecision = 3;

struct Settings {
  int digits = PrecisionContext::kDefaultDigits;
  int max_level = PrecisionContext::kDefaultMaxLevel;
  bool text = false;
  bool no_cache = false;
  bool fused = false;
};

struct Check {
  std::string op;
  json inputs;
  // Returns the envelope fields beyond the common ones: value, error_bound, optional pass/exact/expected.
  std::function<json(MomentEngine&)> run;
};

std::string value_string(const Real& v, int digits) { return v.to_string(digits); }
std::string bound_string(const Real& e) { return e.to_string(3, MPFR_RNDU); }

class Runner {
 public:
  explicit Runner(const Settings& s)
      : settings_(s),
        ctx_(s.digits, PrecisionContext::kDefaultGuard, s.max_level),
        engine_(ctx_),
        cache_(cli::ResultCache::default_dir()) {}

  const PrecisionContext& ctx() const { return ctx_; }

  json run(const Check& check) {
    const auto start = std::chrono::steady_clock::now();
    const std::string key = cli::ResultCache::canonical_key(check.op, check.inputs, settings_.digits,
                                                            settings_.max_level);
    json env;
    bool hit = false;
    if (!settings_.no_cache) {
      if (auto cached = cache_.load(key, settings_.digits)) {
        env = std::move(*cached);
        hit = true;
      }
    }
    if (!hit) {
      env = check.run(engine_);
      env["command"] = check.op;
      env["inputs"] = check.inputs;
      env["precision_digits"] = settings_.digits;
      env.erase("elapsed_ms");
      env.erase("cache_hit");
      if (!settings_.no_cache) cache_.store(key, settings_.digits, env);
    }
    env["cache_hit"] = hit;
    env["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                            .count();
    return env;
  }

 private:
  Settings settings_;
  PrecisionContext ctx_;
  MomentEngine engine_;
  cli::ResultCache cache_;
};

// ---- checks ---------------------------------------------------------------

Check moment_check(int a, int b, int c, int p) {
  MomentSpec spec{a, b, c, p};
  spec.validate();
  return {"moment", json{{"a", a}, {"b", b}, {"c", c}, {"pi_power", p}}, [spec](MomentEngine& engine) {
            const MomentResult& r = engine.moment(spec);
            const int d = engine.context().target_digits();
            return json{{"value", value_string(r.value.value, d)}, {"error_bound", bound_string(r.value.err)}};
          }};
}

Check sum_rule_check(SumRuleFamily family, int n, int k, bool fused) {
  const SumRuleSpec spec{family, n, k};
  spec.validate();
  json inputs{{"rule", family == SumRuleFamily::Z ? "Z" : "Y"}, {"n", n}, {"k", k}, {"fused", fused},
              {"name", spec.name()}};
  return {"verify", inputs, [spec, fused](MomentEngine& engine) {
            const SumRuleReport r = verify_sum_rule(spec, engine, fused);
            const int d = engine.context().target_digits();
            return json{{"value", value_string(r.value.value, d)},
                        {"error_bound", bound_string(r.value.err)},
                        {"pass", r.pass}};
          }};
}

Check crandall_check(int n, bool fused) {
  if (n < 1) throw InvalidSpecError("crandall needs n >= 1");
  return {"verify", json{{"rule", "crandall"}, {"n", n}, {"fused", fused}}, [n, fused](MomentEngine& engine) {
            const BoundedReal v = crandall_numeric(n, engine, fused);
            const ExactInteger exact = crandall(n);
            const Real diff = abs(v.value - to_real(exact, engine.context().bits()));
            const int d = engine.context().target_digits();
            return json{{"value", value_string(v.value, d)},
                        {"error_bound", bound_string(v.err)},
                        {"exact", to_string(exact)},
                        {"pass", diff <= v.err}};
          }};
}

Real parse_point(const std::string& text, const PrecisionContext& ctx) {
  if (text.find('/') != std::string::npos) return to_real(parse_rational(text), ctx.bits());
  static const std::regex decimal(R"([+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)");
  if (!std::regex_match(text, decimal)) throw InvalidSpecError("not a number: '" + text + "'");
  return ctx.make(text);
}

Check hilbert_check(const std::string& fn, const std::string& x) {
  const PVFunction f = parse_pv_function(fn);
  return {"verify", json{{"rule", "hilbert"}, {"function", std::string(to_string(f))}, {"x", x}},
          [f, x](MomentEngine& engine) {
            const PrecisionContext& ctx = engine.context();
            const Real xr = parse_point(x, ctx);
            const BoundedReal pv = hilbert_pv({f, xr}, ctx);
            const BoundedReal image = hilbert_image(f, xr, ctx);
            return json{{"value", value_string(pv.value, ctx.target_digits())},
                        {"error_bound", bound_string(pv.err)},
                        {"expected", value_string(image.value, ctx.target_digits())},
                        {"pass", pv.overlaps(image)}};
          }};
}

// Enough terms for the truncation bound (4|u|)^{N+1} to fall below 10^-(digits + 5).
long rogers_terms(const ExactRational& u, int digits) {
  const double q = 4.0 * std::abs(u.get_d());
  if (q == 0.0) return 10;
  return std::max(10L, static_cast<long>(std::ceil((digits + 5) * std::log(10.0) / -std::log(q))));
}

Check rogers_check_cmd(const std::string& u_text, std::optional<long> terms, int digits) {
  const ExactRational u = parse_rational(u_text);
  if (!(abs(u) * 4 < 1)) throw DomainError("rogers needs |u| < 1/4");
  const long N = terms.value_or(rogers_terms(u, digits));
  return {"verify", json{{"rule", "rogers"}, {"u", to_string(u)}, {"terms", N}}, [u, N](MomentEngine& engine) {
            const BoundedReal r = rogers_check(u, N, engine.context());
            return json{{"value", value_string(r.value, engine.context().target_digits())},
                        {"error_bound", bound_string(r.err)},
                        {"pass", r.value <= r.err}};
          }};
}

// Sum rules of weight 2n <= W, Crandall numbers from weight 8, the Hilbert table
// and two Rogers points.
std::vector<Check> all_checks(int max_weight, bool fused, int digits) {
  std::vector<Check> checks;
  for (int n = 2; 2 * n <= max_weight; ++n)
    for (int k = 1; 2 * k <= n; ++k) checks.push_back(sum_rule_check(SumRuleFamily::Z, n, k, fused));
  for (int n = 3; 2 * n <= max_weight; ++n)
    for (int k = 1; 2 * k <= n - 1; ++k) checks.push_back(sum_rule_check(SumRuleFamily::Y, n, k, fused));
  if (max_weight >= 8)
    for (int n = 1; n <= 3; ++n) checks.push_back(crandall_check(n, fused));
  for (const char* fn : {"kappa_sq", "iota_kappa_sgn", "kappa_plus", "kappa_minus", "iota_plus", "iota_minus"})
    for (const char* x : {"1/2", "1", "2", "5"}) checks.push_back(hilbert_check(fn, x));
  checks.push_back(rogers_check_cmd("1/16", std::nullopt, digits));
  checks.push_back(rogers_check_cmd("1/10", std::nullopt, digits));
  return checks;
}

int parse_int(const std::string& s, const char* what) {
  static const std::regex integer(R"([+-]?\d{1,9})");
  if (!std::regex_match(s, integer)) throw InvalidSpecError(std::string(what) + " must be an integer, got '" + s + "'");
  return std::stoi(s);
}

std::vector<Check> verify_checks(const std::vector<std::string>& sel, int max_weight, const Settings& s) {
  if (sel.empty()) throw InvalidSpecError("verify needs a selector: Z n k | Y n k | crandall n | hilbert fn x | rogers u [N] | all");
  const std::string& kind = sel[0];
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (sel.size() < lo || sel.size() > hi) throw InvalidSpecError("wrong number of arguments for 'verify " + kind + "'");
  };
  if (kind == "Z" || kind == "Y") {
    need(3, 3);
    return {sum_rule_check(kind == "Z" ? SumRuleFamily::Z : SumRuleFamily::Y, parse_int(sel[1], "n"),
                           parse_int(sel[2], "k"), s.fused)};
  }
  if (kind == "crandall") {
    need(2, 2);
    return {crandall_check(parse_int(sel[1], "n"), s.fused)};
  }
  if (kind == "hilbert") {
    need(3, 3);
    return {hilbert_check(sel[1], sel[2])};
  }
  if (kind == "rogers") {
    need(2, 3);
    std::optional<long> terms;
    if (sel.size() == 3) terms = parse_int(sel[2], "N");
    return {rogers_check_cmd(sel[1], terms, s.digits)};
  }
  if (kind == "all") {
    need(1, 1);
    if (max_weight < 4) throw InvalidSpecError("--max-weight must be at least 4");
    return all_checks(max_weight, s.fused, s.digits);
  }
  throw InvalidSpecError("unknown selector '" + kind + "'");
}

std::pair<long, long> parse_range(const std::string& text) {
  static const std::regex range(R"((\d{1,6})(?:\.\.(\d{1,6}))?)");
  std::smatch m;
  if (!std::regex_match(text, m, range)) throw InvalidSpecError("range must look like a..b, got '" + text + "'");
  const long lo = std::stol(m[1]);
  const long hi = m[2].matched ? std::stol(m[2]) : lo;
  if (hi < lo) throw InvalidSpecError("empty range '" + text + "'");
  return {lo, hi};
}

std::vector<json> sequence_values(const std::string& name, const std::string& range_text, long m, int digits) {
  const auto [lo, hi] = parse_range(range_text);
  const long first = name == "domb" ? 0 : 1;
  if (lo < first) throw InvalidSpecError(name + " is indexed from " + std::to_string(first));
  if (m < 1) throw InvalidSpecError("--m must be positive");
  std::vector<json> out;
  for (long n = lo; n <= hi; ++n) {
    json inputs{{"name", name}, {"n", n}};
    std::string value;
    if (name == "domb") {
      value = to_string(domb(n));
    } else if (name == "alpha") {
      value = to_string(alpha(n));
    } else if (name == "crandall") {
      value = to_string(crandall(n));
    } else if (name == "alpha_m") {
      value = to_string(alpha_m(m, n));
      inputs["m"] = m;
    } else if (name == "beta_m") {
      value = to_string(beta_m(m, n));
      inputs["m"] = m;
    } else if (name == "br") {
      value = to_string(broadhurst_roberts(m, n));
      inputs["M"] = m;
    } else {
      throw InvalidSpecError("unknown sequence '" + name + "' (domb, alpha, crandall, alpha_m, beta_m, br)");
    }
    out.push_back(json{{"command", "sequence"},
                       {"inputs", inputs},
                       {"value", value},
                       {"error_bound", "0"},
                       {"exact", true},
                       {"precision_digits", digits},
                       {"elapsed_ms", 0},
                       {"cache_hit", false}});
  }
  return out;
}

// ---- output ---------------------------------------------------------------

std::string describe(const json& env) {
  std::string out;
  for (const auto& [k, v] : env.at("inputs").items()) {
    if (!out.empty()) out += ' ';
    out += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return out;
}

void print_text(const std::vector<json>& envs) {
  std::vector<std::vector<std::string>> rows = {{"command", "inputs", "value", "error_bound", "status"}};
  for (const json& e : envs) {
    std::string status = e.contains("pass") ? (e["pass"].get<bool>() ? "PASS" : "FAIL") : "";
    if (e.value("cache_hit", false)) status += status.empty() ? "cached" : " (cached)";
    rows.push_back({e["command"], describe(e), e["value"], e["error_bound"], status});
  }
  std::vector<std::size_t> width(rows[0].size(), 0);
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    std::cout << line << '\n';
  }
}

void print_json(const json& env) { std::cout << env.dump() << std::endl; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arbitrary-precision Bessel moments, sum rules and exact sequences"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  app.add_option("--digits", s.digits, "Target decimal digits")->check(CLI::Range(5, 2000));
  auto* json_flag = app.add_flag("--json", "One JSON envelope per line (default)");
  auto* text_flag = app.add_flag("--text", s.text, "Human-readable table");
  json_flag->excludes(text_flag);
  app.add_flag("--no-cache", s.no_cache, "Neither read nor write the result cache");
  app.add_flag("--fused", s.fused, "Integrate sum rules as one combined integrand");
  app.add_option("--max-level", s.max_level, "Maximum quadrature refinement level")->check(CLI::Range(3, 20));

  int a = 0, b = 0, c = 0, pi_power = 0;
  auto* cmd_moment = app.add_subcommand("moment", "pi^p * int_0^inf I0^a K0^b t^c dt");
  cmd_moment->add_option("a", a, "Power of I0")->required();
  cmd_moment->add_option("b", b, "Power of K0")->required();
  cmd_moment->add_option("c", c, "Power of t")->required();
  cmd_moment->add_option("--pi-power", pi_power, "Extra factor pi^p");

  std::vector<std::string> selector;
  int max_weight = 8;
  auto* cmd_verify = app.add_subcommand("verify", "Z n k | Y n k | crandall n | hilbert fn x | rogers u [N] | all");
  cmd_verify->add_option("selector", selector, "What to verify")->required();
  cmd_verify->add_option("--max-weight", max_weight, "Largest sum-rule weight 2n for 'all'");

  std::string seq_name, seq_range;
  long seq_m = 1;
  auto* cmd_sequence = app.add_subcommand("sequence", "domb | alpha | crandall | alpha_m | beta_m | br over a..b");
  cmd_sequence->add_option("name", seq_name, "Sequence name")->required();
  cmd_sequence->add_option("range", seq_range, "Index range a..b")->required();
  cmd_sequence->add_option("--m", seq_m, "m for alpha_m and beta_m, M for br");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    std::vector<json> envs;
    if (*cmd_sequence) {
      envs = sequence_values(seq_name, seq_range, seq_m, s.digits);
      if (s.text)
        print_text(envs);
      else
        for (const json& e : envs) print_json(e);
      return kExitOk;
    }

    std::vector<Check> checks;
    if (*cmd_moment)
      checks.push_back(moment_check(a, b, c, pi_power));
    else
      checks = verify_checks(selector, max_weight, s);

    Runner runner(s);
    bool all_pass = true;
    for (const Check& check : checks) {
      json env = runner.run(check);
      if (env.contains("pass") && !env["pass"].get<bool>()) all_pass = false;
      if (!s.text) print_json(env);
      envs.push_back(std::move(env));
    }
    if (s.text) print_text(envs);
    return all_pass ? kExitOk : kExitVerifyFailed;
  } catch (const InvalidSpecError& e) {
    std::cerr << "error: invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const DivergenceError& e) {
    std::cerr << "error: divergent integral: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const DomainError& e) {
    std::cerr << "error: outside the domain: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const PrecisionError& e) {
    std::cerr << "error: precision target not met: " << e.what() << '\n';
    if (!e.best_value.empty()) std::cerr << "  best estimate " << e.best_value << " +/- " << e.best_err << '\n';
    return kExitPrecision;
  } catch (const OverflowError& e) {
    std::cerr << "error: exponent range exceeded: " << e.what() << '\n';
    return kExitPrecision;
  } catch (const ConsistencyError& e) {
    std::cerr << "error: internal consistency check failed: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
}
