#pragma once

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "catalog.hpp"
#include "errors.hpp"
#include "gaussian.hpp"
#include "parse.hpp"
#include "poly.hpp"

namespace conwaykit::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int parse = 2;
inline constexpr int verification = 3;
inline constexpr int data = 4;
}  // namespace exit_code

// --data beats $CONWAYKIT_DATA, which beats the directory baked in at build time.
inline std::string resolve_data_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("CONWAYKIT_DATA"); env && *env) return env;
#ifdef CONWAYKIT_DEFAULT_DATA_DIR
  return CONWAYKIT_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

namespace detail {

struct UsageError : Error {
  using Error::Error;
};

inline nlohmann::json natural_json(const Natural& n) {
  if (n <= std::numeric_limits<std::uint64_t>::max()) return n.convert_to<std::uint64_t>();
  return n.str();
}

inline nlohmann::json naturals_json(const std::vector<Natural>& v) {
  auto a = nlohmann::json::array();
  for (auto& x : v) a.push_back(natural_json(x));
  return a;
}

inline std::string joined(const std::vector<Natural>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i].str();
  return s;
}

inline std::string colors_text(const std::vector<Color>& c) {
  std::string s;
  for (auto x : c) s += color_letter(x);
  return s;
}

inline const char* severity_text(Severity s) { return s == Severity::Hard ? "hard" : "warning"; }

inline const FamilyRecord& family_or_throw(const Catalog& cat, const std::string& id) {
  auto* f = cat.find_family(id);
  if (!f) throw UsageError("unknown family id '" + id + "'");
  return *f;
}

inline std::vector<Natural> assignment_for(const FamilyRecord& f, const std::string& text) {
  auto a = parse_assignment(text);
  if (a.size() != f.n)
    throw ParseError(f.id + " takes " + std::to_string(f.n) + " values, got " + std::to_string(a.size()),
                     std::min(a.size(), std::size_t(f.n)) + 1, "value");
  return a;
}

}  // namespace detail

struct Context {
  bool json = false;
  std::string data_dir;
  std::ostream& out;

  Catalog catalog() const { return load_catalog(data_dir); }
  void emit(const nlohmann::json& j) const { out << j.dump(2) << "\n"; }
};

inline int cmd_gauss(const Context& ctx, const std::vector<std::string>& tokens) {
  std::string text;
  for (auto& t : tokens) text += (text.empty() ? "" : " ") + t;
  auto seq = parse_conway_notation(text);
  auto value = gauss_value(seq);
  auto sym = gauss_bracket(symbolic_sequence(static_cast<unsigned>(seq.size())));
  std::string head = "G[";
  for (std::size_t i = 0; i < seq.size(); ++i) head += (i ? ",a" : "a") + std::to_string(i + 1);
  head += "]";
  if (ctx.json) {
    ctx.emit({{"conways", detail::naturals_json(seq)},
              {"value", detail::natural_json(value)},
              {"bracket", to_string(sym)},
              {"bracket_machine", polynomial_to_json(sym)}});
  } else {
    ctx.out << value << "\n" << head << " = " << to_string(sym) << "\n";
  }
  return exit_code::ok;
}

inline int cmd_cf(const Context& ctx, const std::string& text) {
  auto f = parse_fraction(text);
  auto seq = cf_expand(f);
  if (ctx.json)
    ctx.emit({{"fraction", f.str()}, {"conways", detail::naturals_json(seq)}});
  else
    ctx.out << detail::joined(seq, " ") << "\n";
  return exit_code::ok;
}

inline int cmd_cfun(const Context& ctx, const std::string& id, const std::string& assign) {
  auto cat = ctx.catalog();
  auto& f = detail::family_or_throw(cat, id);
  if (assign.empty()) {
    if (ctx.json)
      ctx.emit(to_json(f));
    else
      ctx.out << to_string(f.cfunction) << "\n";
    return exit_code::ok;
  }
  auto a = detail::assignment_for(f, assign);
  auto v = evaluate(f.cfunction, a);
  if (ctx.json)
    ctx.emit({{"id", f.id}, {"assignment", detail::naturals_json(a)}, {"value", detail::natural_json(v)}});
  else
    ctx.out << v << "\n";
  return exit_code::ok;
}

inline int cmd_oracle(const Context& ctx, const std::string& id, const std::string& assign) {
  auto cat = ctx.catalog();
  auto& f = detail::family_or_throw(cat, id);
  auto a = detail::assignment_for(f, assign);
  auto r = oracle_check(cat, f, a);
  if (ctx.json) {
    ctx.emit({{"id", f.id},
              {"assignment", detail::naturals_json(a)},
              {"determinant", detail::natural_json(r.determinant)},
              {"cfunction", detail::natural_json(r.cfunction)},
              {"agree", r.agree()}});
  } else if (r.agree()) {
    ctx.out << r.determinant << "\n";
  } else {
    ctx.out << "determinant " << r.determinant << " but C-function gives " << r.cfunction << "\n";
  }
  return r.agree() ? exit_code::ok : exit_code::verification;
}

inline int cmd_verify(const Context& ctx, const std::vector<std::string>& ids, unsigned jobs, bool no_oracle) {
  auto cat = ctx.catalog();
  std::vector<const FamilyRecord*> which;
  if (ids.empty())
    for (auto& f : cat.families) which.push_back(&f);
  else
    for (auto& id : ids) which.push_back(&detail::family_or_throw(cat, id));

  VerifyOptions opt;
  opt.oracle = !no_oracle;
  auto reports = verify_all(cat, which, opt, jobs);

  std::size_t verified = 0, warnings = 0;
  std::map<std::string, std::vector<std::string>> failed_by_seed;
  for (auto& r : reports) {
    if (r.passed())
      ++verified;
    else
      failed_by_seed[r.seed].push_back(r.id);
    for (auto& c : r.checks) warnings += !c.passed && c.severity == Severity::Warning;
  }

  if (ctx.json) {
    nlohmann::json fams = nlohmann::json::array();
    for (auto& r : reports) {
      nlohmann::json checks = nlohmann::json::array();
      for (auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"severity", detail::severity_text(c.severity)},
                          {"passed", c.passed},
                          {"detail", c.detail}});
      fams.push_back({{"id", r.id}, {"seed", r.seed}, {"passed", r.passed()}, {"checks", checks}});
    }
    ctx.emit({{"families", fams},
              {"verified", verified},
              {"total", reports.size()},
              {"warnings", warnings},
              {"failures_by_seed", failed_by_seed}});
  } else {
    for (auto& r : reports) {
      ctx.out << r.id << " (" << r.seed << ")" << (r.passed() ? "" : "  FAILED") << "\n";
      for (auto& c : r.checks) {
        const char* mark = c.passed ? "pass" : c.severity == Severity::Hard ? "FAIL" : "warn";
        ctx.out << "  " << mark << "  " << c.name;
        if (!c.detail.empty()) ctx.out << ": " << c.detail;
        ctx.out << "\n";
      }
    }
    if (!failed_by_seed.empty()) {
      ctx.out << "failures by seed:\n";
      for (auto& [seed, fam] : failed_by_seed) {
        ctx.out << "  " << seed << ":";
        for (auto& id : fam) ctx.out << " " << id;
        ctx.out << "\n";
      }
    }
    ctx.out << verified << "/" << reports.size() << " verified";
    if (warnings) ctx.out << ", " << warnings << " warning" << (warnings == 1 ? "" : "s");
    ctx.out << "\n";
  }
  return verified == reports.size() ? exit_code::ok : exit_code::verification;
}

inline int cmd_families(const Context& ctx, unsigned conways, const std::string& seed) {
  auto cat = ctx.catalog();
  std::vector<FamilyRecord> sel;
  for (auto& f : cat.families)
    if ((conways == 0 || f.n == conways) && (seed.empty() || f.seed == seed)) sel.push_back(f);
  if (!seed.empty() && !cat.find_seed(seed)) throw detail::UsageError("unknown seed '" + seed + "'");
  if (ctx.json) {
    ctx.emit(families_to_json(sel));
  } else {
    for (auto& f : sel)
      ctx.out << f.id << "\t" << f.seed << "\t" << f.hand_string() << "\t" << to_string(f.cfunction) << "\n";
    ctx.out << sel.size() << " famil" << (sel.size() == 1 ? "y" : "ies") << "\n";
  }
  return exit_code::ok;
}

inline int cmd_enumerate(const Context& ctx, const std::string& seed_name) {
  auto cat = ctx.catalog();
  auto* seed = cat.find_seed(seed_name);
  if (!seed) throw detail::UsageError("unknown seed '" + seed_name + "'");
  auto en = enumerate_families(Diagram::from_pd(seed->diagram), &cat);
  std::size_t unmatched = 0;
  for (auto& c : en.candidates) unmatched += c.catalog_ids.empty();
  if (ctx.json) {
    nlohmann::json cands = nlohmann::json::array();
    for (auto& c : en.candidates)
      cands.push_back({{"colors", detail::colors_text(c.colors)},
                       {"cfunction", polynomial_to_json(c.cfunction)},
                       {"cfunction_text", to_string(c.cfunction)},
                       {"catalog_ids", c.catalog_ids}});
    ctx.emit({{"seed", seed->name},
              {"colorings", en.colorings},
              {"discarded_merge", en.discarded_merge},
              {"candidates", cands},
              {"catalog_count", seed->families},
              {"unmatched", unmatched}});
    return exit_code::ok;
  }
  ctx.out << "seed " << seed->name << ": " << en.colorings << " colorings, " << en.discarded_merge
          << " with merged conways, " << en.candidates.size() << " candidates\n";
  for (auto& c : en.candidates) {
    ctx.out << "  " << detail::colors_text(c.colors) << "  " << to_string(c.cfunction) << "  ";
    if (c.catalog_ids.empty()) {
      ctx.out << "(not in catalog)";
    } else {
      for (std::size_t i = 0; i < c.catalog_ids.size(); ++i) ctx.out << (i ? ", " : "") << c.catalog_ids[i];
    }
    ctx.out << "\n";
  }
  if (en.candidates.size() != seed->families || unmatched)
    ctx.out << "note: catalog lists " << seed->families << " families for this seed; " << unmatched
            << " candidate" << (unmatched == 1 ? "" : "s") << " unmatched\n";
  else
    ctx.out << "matches the catalog count of " << seed->families << "\n";
  return exit_code::ok;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conway functions of alternating knot families", "conwaykit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text", data_flag;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--data", data_flag, "catalog data directory");

  std::vector<std::string> gauss_tokens;
  auto* gauss = app.add_subcommand("gauss", "value and symbolic form of a Gaussian bracket");
  gauss->add_option("conways", gauss_tokens, "positive integers")->required();

  std::string fraction;
  auto* cf = app.add_subcommand("cf", "continued fraction of p/q as conways");
  cf->add_option("fraction", fraction, "p/q with p > q")->required();

  std::string id, assign;
  auto* cfun = app.add_subcommand("cfun", "C-function of a family, optionally evaluated");
  cfun->add_option("id", id, "family id")->required();
  cfun->add_option("--assign", assign, "comma-separated conway values");

  auto* oracle = app.add_subcommand("oracle", "diagram determinant for a family at an assignment");
  oracle->add_option("id", id, "family id")->required();
  oracle->add_option("--assign", assign, "comma-separated conway values")->required();

  std::vector<std::string> verify_ids;
  unsigned jobs = 0;
  bool no_oracle = false;
  auto* verify = app.add_subcommand("verify", "run the catalog checks");
  verify->add_option("--family", verify_ids, "restrict to these family ids");
  verify->add_option("--jobs", jobs, "worker threads (0: one per core)");
  verify->add_flag("--no-oracle", no_oracle, "skip the determinant oracle");

  unsigned conways = 0;
  std::string seed;
  auto* families = app.add_subcommand("families", "list catalog records");
  families->add_option("--conways", conways, "only families with this many conways")->check(CLI::Range(1, 6));
  families->add_option("--seed", seed, "only families over this seed");

  auto* enumerate = app.add_subcommand("enumerate", "enumerate families over a seed");
  enumerate->add_option("--seed", seed, "seed name")->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  }

  Context ctx{format == "json", resolve_data_dir(data_flag), out};
  try {
    if (gauss->parsed()) return cmd_gauss(ctx, gauss_tokens);
    if (cf->parsed()) return cmd_cf(ctx, fraction);
    if (cfun->parsed()) return cmd_cfun(ctx, id, assign);
    if (oracle->parsed()) return cmd_oracle(ctx, id, assign);
    if (verify->parsed()) return cmd_verify(ctx, verify_ids, jobs, no_oracle);
    if (families->parsed()) return cmd_families(ctx, conways, seed);
    if (enumerate->parsed()) return cmd_enumerate(ctx, seed);
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << "\n";
    return exit_code::data;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::parse;
  }
  return exit_code::usage;
}

}  // namespace conwaykit::cli
