#include "spherecalc/suite.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;
constexpr int kDefaultOrder = 32;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};


int parity_of(const std::string& s) {
  if (s == "even" || s == "0") return 0;
  if (s == "odd" || s == "1") return 1;
  throw UsageError("parity must be even or odd");
}

int default_order() {
  const char* env = std::getenv("SPHERE_CALC_ORDER");
  if (env == nullptr || *env == '\0') return kDefaultOrder;
  try {
    std::size_t used = 0;
    int v = std::stoi(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("SPHERE_CALC_ORDER is not an integer: ") + env);
  }
}

void report_error(const std::string& kind, const std::string& msg, bool json) {
  if (json) {
    sc::Json j;
    j["schema"] = sc::kSchema;
    j["kind"] = "error";
    j["error"] = kind;
    j["message"] = msg;
    std::cerr << sc::dump(j);
  } else {
    std::cerr << "error: " << msg << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structure equations for embedded and immersed spheres"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<int> order_opt;
  std::string format_str;
  std::string output;
  app.add_option("--order", order_opt, "Series truncation order (default $SPHERE_CALC_ORDER or 32)");
  app.add_option("--format", format_str, "text, json, latex, dot or ascii");
  app.add_option("--output,-o", output, "Write to this file instead of stdout");

  std::string fn;
  auto* series = app.add_subcommand("series", "Print a blowup series");
  series->add_option("--fn", fn, "B, S, Delta, Q, q or Qprime")->required();

  int n = 0, epsilon = 0;
  auto* embedded = app.add_subcommand("embedded", "Structure equation of an embedded sphere");
  embedded->add_option("--n", n, "Minus the self-intersection")->required()->check(CLI::Range(1, 64));
  embedded->add_option("--epsilon", epsilon, "w.sigma mod 2")->required()->check(CLI::Range(0, 1));

  int p = 0, s = 0, a = 0;
  auto* immersed = app.add_subcommand("immersed", "Normal form for an immersed sphere");
  immersed->add_option("--p", p, "Positive double points")->required()->check(CLI::NonNegativeNumber);
  immersed->add_option("--s", s, "Denominator exponent")->required()->check(CLI::NonNegativeNumber);
  immersed->add_option("--a", a, "Self-intersection")->required();

  int ft_p = 0, ft_a = 0;
  auto* finite = app.add_subcommand("finite-type", "Finite type order");
  finite->add_option("--p", ft_p, "Positive double points")->required()->check(CLI::NonNegativeNumber);
  finite->add_option("--a", ft_a, "Self-intersection")->required();

  auto* lens = app.add_subcommand("lens", "Flat connections on L(p,1)");
  lens->require_subcommand(1);
  int lp = 1, ln = 0;
  std::string lparity;
  auto* chi = lens->add_subcommand("chi", "Character variety");
  chi->add_option("--p", lp, "Lens space parameter")->required()->check(CLI::PositiveNumber);
  chi->add_option("--parity", lparity, "even or odd")->required();
  auto* poset = lens->add_subcommand("poset", "The poset J_n");
  poset->add_option("--p", lp, "Lens space parameter")->required()->check(CLI::PositiveNumber);
  poset->add_option("--parity", lparity, "even or odd")->required();
  poset->add_option("--n", ln, "Dimension bound index")->required()->check(CLI::NonNegativeNumber);

  std::string suite, relation;
  auto* verify = app.add_subcommand("verify", "Run identity checks");
  auto* suite_opt = verify->add_option("--suite", suite, "all, core, elliptic, blowup, embedded, immersed, lens, cli");
  auto* rel_opt = verify->add_option("--relation", relation, "Relation document (JSON)")->check(CLI::ExistingFile);
  suite_opt->excludes(rel_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  bool json = format_str == "json";
  try {
    int order = order_opt ? *order_opt : default_order();
    if (order < 8) throw UsageError("order must be at least 8");
    sc::Format format = sc::Format::text;
    if (!format_str.empty()) {
      try {
        format = sc::parse_format(format_str);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    } else if (poset->parsed()) {
      format = sc::Format::ascii;
    }

    std::string doc;
    bool falsified = false;
    std::string failure;
    if (series->parsed()) {
      sc::BlowupFunctions bf = sc::blowup_functions(order);
      doc = sc::emit_series(fn, sc::named_series(bf, fn), format);
    } else if (embedded->parsed()) {
      sc::BlowupFunctions bf = sc::blowup_functions(order);
      sc::EmbeddedRelation rel = sc::derive_embedded(n, epsilon, bf);
      auto rep = sc::verify_embedded(rel, bf);
      if (!rep.ok) {
        falsified = true;
        failure = rep.failures.front();
      }
      doc = sc::emit_embedded(rel, format);
    } else if (immersed->parsed()) {
      if (s > p) throw UsageError("need s <= p");
      sc::ImmersedEngine eng(std::max(order, sc::immersed_required_order(p, s, a)));
      const sc::NormalForm& nf = eng.derive(p, s, a);
      for (const auto& rec : eng.records()) {
        if (rec.ok()) continue;
        for (const auto& c : rec.checks)
          if (c.required && (c.status == sc::CheckStatus::failed || c.status == sc::CheckStatus::open)) {
            falsified = true;
            failure = rec.step + " (" + std::to_string(rec.p) + "," + std::to_string(rec.s) + "," +
                      std::to_string(rec.a) + "): " + c.name + " " + c.detail;
            break;
          }
        if (falsified) break;
      }
      doc = sc::emit_immersed(nf, order, format);
    } else if (finite->parsed()) {
      doc = sc::emit_finite_type(ft_p, ft_a, sc::finite_type_order(ft_p, ft_a), order, format);
    } else if (chi->parsed()) {
      int par = parity_of(lparity);
      doc = sc::emit_character_variety(lp, par, sc::character_variety(lp, par), format);
    } else if (poset->parsed()) {
      sc::PosetJ j = sc::build_poset(lp, parity_of(lparity), ln);
      auto v = sc::poset_violations(j);
      if (!v.empty()) {
        falsified = true;
        failure = v.front();
      }
      doc = sc::emit_poset(j, format);
    } else if (verify->parsed()) {
      sc::SuiteReport rep;
      if (!relation.empty()) {
        std::ifstream in(relation);
        sc::Json d;
        try {
          d = sc::Json::parse(in);
        } catch (const sc::Json::exception& e) {
          throw UsageError(std::string("relation file is not valid JSON: ") + e.what());
        }
        rep = sc::verify_relation_document(d, order);
      } else {
        rep = sc::run_suite(suite.empty() ? "all" : suite, order);
      }
      if (!rep.ok()) {
        falsified = true;
        const auto* f = rep.first_failure();
        failure = f->name + (f->detail.empty() ? "" : ": " + f->detail);
      }
      doc = sc::emit_suite(rep, format);
    }

    if (output.empty()) {
      std::cout << doc;
    } else {
      std::ofstream out(output, std::ios::binary);
      if (!out) throw UsageError("cannot write " + output);
      out << doc;
    }
    if (falsified) {
      report_error("falsified", failure, json);
      return kExitFalsified;
    }
    return 0;
  } catch (const UsageError& e) {
    report_error("usage", e.what(), json);
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    report_error("usage", e.what(), json);
    return kExitUsage;
  } catch (const sc::Json::exception& e) {
    report_error("usage", std::string("malformed document: ") + e.what(), json);
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    report_error("usage", std::string(e.what()) + " (raise --order)", json);
    return kExitUsage;
  } catch (const std::exception& e) {
    report_error("falsified", e.what(), json);
    return kExitFalsified;
  }
}
