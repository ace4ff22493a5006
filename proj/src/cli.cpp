#include "r2k/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "r2k/aut_io.hpp"
#include "r2k/config.hpp"
#include "r2k/element_io.hpp"
#include "r2k/error.hpp"
#include "r2k/report_json.hpp"
#include "r2k/suites.hpp"

namespace r2k::cli {

namespace {

struct Globals {
  std::string config_path = "r2k.json";
  bool config_given = false;
  std::size_t workers = 1;
};

Config resolve_config(const Globals& g) {
  if (!g.config_given && !std::filesystem::exists(g.config_path)) return Config::defaults();
  return load_config(g.config_path);
}

struct Session {
  Config config;
  Algebra alg;
  AuditOptions opt;

  explicit Session(const Globals& g) : config(resolve_config(g)), alg(config.embedding()) { opt.workers = g.workers; }

  std::int64_t window(std::optional<std::int64_t> flag) const {
    const std::int64_t n = flag.value_or(config.window);
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "window must be at least 1");
    return n;
  }
};

// Domain outcomes that are findings rather than bad input.
bool is_finding(ErrorCode c) {
  return c == ErrorCode::NotDerivation || c == ErrorCode::CentralNotKilled || c == ErrorCode::ClassificationMismatch;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out << text;
}

GradedMapTable load_table(const std::string& path, const Algebra& alg) {
  try {
    return table_from_json(Json::parse(read_file(path)), alg);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, "table '" + path + "' is not valid JSON: " + e.what());
  }
}

// Entries of `t` on the smaller window `radius`.
GradedMapTable restrict_table(const GradedMapTable& t, std::int64_t radius) {
  if (radius > t.window())
    throw Error(ErrorCode::WindowTooSmall, "table covers window " + std::to_string(t.window()) + ", asked for " +
                                               std::to_string(radius));
  if (radius == t.window()) return t;
  GradedMapTable out(t.degree(), t.parity(), radius);
  for (const auto& [s, v] : t.entries())
    if (in_window(s.index, radius)) out.set(s, v);
  return out;
}

struct AutFlags {
  std::string f, xi, eps, a, b;

  void attach(CLI::App* cmd) {
    cmd->add_option("--f", f, "values f(e_i) of the multiplicative hom, comma separated");
    cmd->add_option("--xi", xi, "1 or -1");
    cmd->add_option("--eps", eps, "1 or -1");
    cmd->add_option("--a", a, "shift in Gamma, comma separated coordinates");
    cmd->add_option("--b", b, "nonzero scalar");
  }
  AutParams params(const Algebra& alg) const { return aut_params_from_fields(f, xi, eps, a, b, alg.rank(), alg.num_vars()); }
};

// Prints the oracle verdict for σ(q) against σ(p1)∘σ(p2); true when they agree.
bool print_oracle(std::ostream& out, const std::string& label, const Algebra& alg, const AutParams& p1,
                  const AutParams& p2, const AutParams& q, std::int64_t radius) {
  const auto bad = compose_oracle(alg, p1, p2, q, radius);
  if (!bad) {
    out << label << ": agrees with the oracle on " << window_symbols(alg.rank(), radius).size()
        << " window symbols (N=" << radius << ")\n";
    return true;
  }
  out << label << ": disagrees with the oracle at " << to_string(bad->symbol) << "\n"
      << "  composed maps: " << to_string(bad->expected) << "\n"
      << "  law:           " << to_string(bad->actual) << "\n";
  return false;
}

bool want(const std::string& law, const char* which) { return law == "both" || law == which; }

int emit(std::ostream& out, const CheckReport& report, const std::string& format, const std::string& path) {
  const std::string text = emit_report(report, format);
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
    out << (report.passed() ? "pass" : "fail") << ": " << report.records.size() << " records, "
        << report.failure_count() << " failing; report written to " << path << "\n";
  }
  return report.passed() ? kOk : kAuditFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact kernel for the generalized Ramond N=2 superconformal algebra", "r2k"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--config", g.config_path, "config JSON file (default r2k.json)");
  app.add_option("--workers", g.workers, "worker threads for audits")->check(CLI::Range(1, 256));

  std::optional<std::int64_t> window;
  std::string format, law = "derived";
  const auto add_window = [&](CLI::App* cmd) { cmd->add_option("--window", window, "window radius N"); };
  const auto add_law = [&](CLI::App* cmd) {
    cmd->add_option("--law", law, "derived, printed (paper) or both")->check(CLI::IsMember({"derived", "paper", "both"}));
  };

  auto* bracket = app.add_subcommand("bracket", "super-bracket of two elements");
  std::string e1, e2;
  bracket->add_option("e1", e1)->required();
  bracket->add_option("e2", e2)->required();

  auto* apply = app.add_subcommand("apply-aut", "apply sigma(f, xi, eps, a, b) to an element");
  AutFlags apply_flags;
  apply_flags.attach(apply);
  std::string expr;
  apply->add_option("expr", expr)->required();

  auto* compose = app.add_subcommand("compose-aut", "parameters of sigma(left) o sigma(right)");
  std::string left, right;
  compose->add_option("--left", left, "parameters in flag form or JSON")->required();
  compose->add_option("--right", right, "parameters in flag form or JSON")->required();
  add_law(compose);
  add_window(compose);

  auto* invert = app.add_subcommand("invert-aut", "parameters of the inverse automorphism");
  AutFlags invert_flags;
  invert_flags.attach(invert);
  add_law(invert);
  add_window(invert);

  auto* make = app.add_subcommand("make-der", "write a derivation table");
  std::string kind, phi, e0 = "0", xi0 = "0", xi1 = "0", h0 = "0", eta = "0", gamma, element, out_path;
  make->add_option("--kind", kind)->required()->check(CLI::IsMember({"scaling", "odd-inner", "even-inner", "ad"}));
  make->add_option("--phi", phi, "values phi(e_i), comma separated");
  make->add_option("--e0", e0);
  make->add_option("--xi0", xi0);
  make->add_option("--xi1", xi1);
  make->add_option("--h0", h0);
  make->add_option("--eta", eta);
  make->add_option("--gamma", gamma, "degree of the inner derivation");
  make->add_option("--element", element, "element x for --kind ad");
  make->add_option("--out", out_path, "output file (stdout when omitted)");
  add_window(make);

  auto* check = app.add_subcommand("check-der", "Leibniz audit of a derivation table");
  std::string table_path, report_path;
  check->add_option("--table", table_path)->required();
  check->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  add_window(check);

  auto* decompose = app.add_subcommand("decompose-der", "classify a derivation table");
  decompose->add_option("--table", table_path)->required();
  add_window(decompose);

  auto* audit = app.add_subcommand("audit", "run a verification suite");
  std::string suite = "all";
  audit->add_option("--suite", suite)->check(CLI::IsMember({"structure", "derivations", "automorphisms", "all"}));
  audit->add_option("--report", report_path, "write the report here instead of stdout");
  audit->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  add_window(audit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "r2k: " << e.what() << "\n";
    return kUsageError;
  }
  g.config_given = app.get_option("--config")->count() > 0;

  try {
    Session s(g);
    const Algebra& alg = s.alg;
    const std::string fmt = format.empty() ? s.config.format : format;

    if (*bracket) {
      out << to_string(alg.bracket(parse_element(e1, alg), parse_element(e2, alg))) << "\n";
      return kOk;
    }
    if (*apply) {
      out << to_string(aut_apply(alg, apply_flags.params(alg), parse_element(expr, alg))) << "\n";
      return kOk;
    }
    if (*compose) {
      const std::int64_t n = s.window(window);
      const AutParams p1 = parse_aut_params(left, alg.rank(), alg.num_vars());
      const AutParams p2 = parse_aut_params(right, alg.rank(), alg.num_vars());
      bool ok = true;
      if (want(law, "derived")) {
        const AutParams q = aut_compose(p1, p2);
        out << "derived: " << to_string(q) << "\n";
        ok = print_oracle(out, "derived oracle", alg, p1, p2, q, n) && ok;
      }
      if (want(law, "paper")) {
        const AutParams q = compose_paper(p1, p2);
        out << "printed: " << to_string(q) << "\n";
        print_oracle(out, "printed oracle", alg, p1, p2, q, n);
      }
      return ok ? kOk : kAuditFailure;
    }
    if (*invert) {
      const std::int64_t n = s.window(window);
      const AutParams p = invert_flags.params(alg);
      const AutParams id = AutParams::identity(alg.rank());
      bool ok = true;
      if (want(law, "derived")) {
        const AutParams q = aut_inverse(p);
        out << "derived: " << to_string(q) << "\n";
        ok = print_oracle(out, "derived oracle (inverse after sigma)", alg, q, p, id, n) && ok;
        ok = print_oracle(out, "derived oracle (sigma after inverse)", alg, p, q, id, n) && ok;
      }
      if (want(law, "paper")) {
        const AutParams q = inverse_paper(p);
        out << "printed: " << to_string(q) << "\n";
        print_oracle(out, "printed oracle (inverse after sigma)", alg, q, p, id, n);
        print_oracle(out, "printed oracle (sigma after inverse)", alg, p, q, id, n);
      }
      return ok ? kOk : kAuditFailure;
    }
    if (*make) {
      const std::int64_t n = s.window(window);
      const std::size_t r = alg.rank(), v = alg.num_vars();
      const auto need_gamma = [&] {
        if (gamma.empty()) throw Error(ErrorCode::InvalidArgument, "--gamma is required for --kind " + kind);
        return parse_gamma(gamma, r);
      };
      DerivationRecipe recipe;
      if (kind == "scaling") {
        AdditiveHom hom{phi.empty() ? std::vector<Scalar>(r, Scalar(0)) : parse_scalar_list(phi, v)};
        if (hom.values.size() != r)
          throw Error(ErrorCode::RankMismatch, "phi has " + std::to_string(hom.values.size()) + " values, expected " +
                                                   std::to_string(r));
        recipe = Scaling{hom, parse_scalar(e0, v)};
      } else if (kind == "odd-inner") {
        recipe = OddInner{parse_scalar(xi0, v), parse_scalar(xi1, v), need_gamma()};
      } else if (kind == "even-inner") {
        recipe = EvenInner{parse_scalar(h0, v), parse_scalar(eta, v), need_gamma()};
      } else {
        if (element.empty()) throw Error(ErrorCode::InvalidArgument, "--element is required for --kind ad");
        recipe = AdRecipe{parse_element(element, alg)};
      }
      const std::string text = table_to_json(make_derivation(alg, recipe, n)).dump(2) + "\n";
      if (out_path.empty())
        out << text;
      else
        write_file(out_path, text);
      return kOk;
    }
    if (*check) {
      const GradedMapTable t = load_table(table_path, alg);
      const std::int64_t n = window ? s.window(window) : t.window();
      return emit(out, leibniz_audit(alg, restrict_table(t, n), n, s.opt), fmt, "");
    }
    if (*decompose) {
      const GradedMapTable t = load_table(table_path, alg);
      const std::int64_t n = window ? s.window(window) : t.window();
      out << to_string(decompose_derivation(alg, restrict_table(t, n))) << "\n";
      return kOk;
    }
    if (*audit) {
      const std::int64_t n = s.window(window);
      const CheckReport inj = injectivity_audit(alg.embedding(), n);
      if (!inj.passed()) {
        err << "r2k: the configured embedding is not injective on the window\n";
        emit(err, inj, "text", "");
        return kUsageError;
      }
      return emit(out, run_suite(alg, suite, n, s.opt), fmt, report_path);
    }
  } catch (const Error& e) {
    err << "r2k: " << e.what() << "\n";
    return is_finding(e.code()) ? kAuditFailure : kUsageError;
  } catch (const std::exception& e) {
    err << "r2k: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"r2k"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace r2k::cli
