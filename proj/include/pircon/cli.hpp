#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <pircon/fixtures.hpp>
#include <pircon/hecke.hpp>
#include <pircon/json_io.hpp>
#include <pircon/kernel.hpp>
#include <pircon/klpoly.hpp>

namespace pircon::cli {

namespace detail {

inline Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("BadInput", "cannot open '" + path + "'");
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) throw Error("BadInput", "'" + path + "' is not valid JSON");
  return j;
}

inline std::uint64_t env_budget() {
  const char* env = std::getenv("PIRCON_BUDGET");
  if (!env) return kDefaultBudget;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (!end || *end != '\0' || std::string(env).empty() || env[0] == '-')
    throw Error("BadInput", "PIRCON_BUDGET must be a nonnegative integer, got '" +
                                std::string(env) + "'");
  return static_cast<std::uint64_t>(v);
}

inline CoxeterSystem counterexample_533_group() {
  return CoxeterSystem::from_matrix({"s", "t", "p"}, {{1, 5, 3}, {5, 1, 3}, {3, 3, 1}});
}

inline void emit_table(std::ostream& out, const RTable& t, const std::string& format) {
  if (format == "json") {
    out << table_to_json(t).dump() << '\n';
    return;
  }
  size_t width = 1;
  for (int i = 0; i < t.base->size(); ++i) width = std::max(width, t.base->id(i).size());
  for (int u = 0; u < t.base->size(); ++u)
    for (int w = 0; w < t.base->size(); ++w) {
      if (!t.base->leq(u, w)) continue;
      out << std::left << std::setw(static_cast<int>(width)) << t.base->id(u) << "  "
          << std::setw(static_cast<int>(width)) << t.base->id(w) << "  " << t.at(u, w).str()
          << '\n';
    }
}

inline void emit_pair(std::ostream& out, const RTable& t, const std::string& pair,
                      const std::string& format) {
  auto comma = pair.find(',');
  if (comma == std::string::npos)
    throw Error("BadInput", "--pair wants two ids separated by a comma, or 'all'");
  const IntPolynomial& p = t.at(pair.substr(0, comma), pair.substr(comma + 1));
  if (format == "json")
    out << poly_to_json(p).dump() << '\n';
  else
    out << p.str() << '\n';
}

inline Json fixture_bundle(const Fixture& fx) {
  Json j;
  j["name"] = fx.name;
  j["poset"] = poset_to_json(*fx.poset);
  Json ms = Json::object();
  for (const auto& [name, pairs] : fx.matchings)
    ms[name] = matching_to_json(spm_from_ids(fx.poset, pairs));
  j["matchings"] = ms;
  j["refinement"] = refinement_to_json(fx.refinement);
  return j;
}

inline Json fixture_bundle_533() {
  Json j;
  j["name"] = "counterexample-533";
  j["group"] = group_to_json(counterexample_533_group());
  j["h"] = Json::array({"p"});
  j["w"] = "s-t-s-t-p-s";
  return j;
}

inline Json named_fixture(const std::string& name) {
  for (const auto& fx : poset_fixtures())
    if (fx.name == name) return fixture_bundle(fx);
  if (name == "counterexample-533") return fixture_bundle_533();
  throw Error("UnknownId", "no fixture named '" + name + "'");
}

inline GradedPoset::Ptr poset_input(const std::string& poset_path, const std::string& fixture) {
  if (!fixture.empty()) {
    Json j = named_fixture(fixture);
    if (!j.contains("poset"))
      throw Error("BadInput", "fixture '" + fixture + "' has no poset; it is a group fixture");
    return poset_from_json(j.at("poset"));
  }
  if (poset_path.empty()) throw Error("BadInput", "one of --poset or --fixture is needed");
  return poset_from_json(load_json(poset_path));
}

}  // namespace detail

/// Parses `args` (program name excluded), runs the selected subcommand and
/// writes its report to `out`.  Returns 0 on success, 1 when a computation
/// rejects its input (the message on `err` names the violated definition and
/// the witnessing elements) and 2 on malformed command lines.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"refined pircons, special partial matchings and R/KLS polynomial tables"};
  app.set_help_flag("--help", "print usage and exit");
  app.require_subcommand(1);

  std::string poset_path, refinement_path, matching_path, table_path, group_path;
  std::string fixture_name, name;
  std::string x = "q", format = "json", pair = "all", kind = "r", variant = "r", action;
  std::vector<std::string> h;
  std::uint64_t budget = 0;
  bool budget_given = false;
  int n = 2, d = 3;

  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", budget, "enumeration budget (default: PIRCON_BUDGET or built-in)")
        ->each([&](const std::string&) { budget_given = true; });
  };
  auto add_x = [&](CLI::App* sub) {
    sub->add_option("--x", x, "specialization of x")->check(CLI::IsMember({"q", "-1"}));
  };
  auto add_format = [&](CLI::App* sub) {
    return sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  };
  auto add_poset = [&](CLI::App* sub) {
    auto* po = sub->add_option("--poset", poset_path, "poset JSON file");
    auto* fo = sub->add_option("--fixture", fixture_name, "built-in fixture name");
    po->excludes(fo);
    fo->excludes(po);
  };

  CLI::App* rpoly = app.add_subcommand("rpoly", "R-polynomial table of a refined pircon");
  add_poset(rpoly);
  rpoly->add_option("--refinement", refinement_path, "refinement JSON file");
  add_x(rpoly);
  add_format(rpoly);
  add_budget(rpoly);
  rpoly->add_option("--pair", pair, "print one entry 'u,w' instead of the whole table");

  CLI::App* spm = app.add_subcommand("spm", "enumerate or validate special partial matchings");
  add_poset(spm);
  spm->add_option("--matching", matching_path, "matching JSON file to validate");
  add_format(spm);
  add_budget(spm);

  CLI::App* coherence = app.add_subcommand("coherence", "pairwise coherence of all matchings");
  add_poset(coherence);
  add_format(coherence);
  add_budget(coherence);

  CLI::App* classify = app.add_subcommand("classify", "pircon / zircon / dircon verdict");
  add_poset(classify);
  add_format(classify);
  add_budget(classify);

  CLI::App* parabolic = app.add_subcommand("parabolic", "parabolic R or P table of a quotient");
  auto* go = parabolic->add_option("--group", group_path, "group JSON file");
  auto* gf = parabolic->add_option("--fixture", fixture_name, "built-in group fixture name");
  go->excludes(gf);
  gf->excludes(go);
  auto* ho = parabolic->add_option("--h", h, "generator names spanning H")->delimiter(',');
  auto* wo = parabolic->add_option("--w", name, "top element, a '-'-joined word");
  parabolic->add_option("--kind", kind, "r or p table")->check(CLI::IsMember({"r", "p"}));
  add_x(parabolic);
  add_format(parabolic);

  CLI::App* klv = app.add_subcommand("klv", "tables on the twisted identities of S_2n");
  klv->add_option("--n", n, "half rank; the group is S_2n")
      ->required()
      ->check(CLI::PositiveNumber);
  klv->add_option("--variant", variant, "r or q recursion variant")
      ->check(CLI::IsMember({"r", "q"}));
  klv->add_option("--kind", kind, "r table or p (series from the kernel)")
      ->check(CLI::IsMember({"r", "p"}));
  add_format(klv);

  CLI::App* kernel = app.add_subcommand("kernel", "kernel identity and KLS polynomials");
  kernel->require_subcommand(1);
  CLI::App* kcheck = kernel->add_subcommand("check", "test K * bar(K) = delta");
  kcheck->add_option("--table", table_path, "table JSON file")->required();
  add_format(kcheck);
  CLI::App* kls = kernel->add_subcommand("kls", "KLS polynomials of a kernel table");
  kls->add_option("--table", table_path, "table JSON file")->required();
  add_format(kls);

  CLI::App* hecke = app.add_subcommand("hecke", "dihedral module relation verification");
  hecke->add_option("action", action, "optional 'verify' action")
      ->check(CLI::IsMember({"verify"}));
  hecke->add_option("--d", d, "dihedral parameter")->required()->check(CLI::Range(2, 64));
  add_x(hecke);
  CLI::Option* hecke_format = add_format(hecke);

  CLI::App* fixtures = app.add_subcommand("fixtures", "emit a built-in fixture as JSON");
  fixtures->add_option("name", name, "fixture name; omit to list the names");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (!budget_given) budget = detail::env_budget();

    if (app.got_subcommand(rpoly)) {
      auto base = detail::poset_input(poset_path, fixture_name);
      RefinedPircon rp = [&] {
        if (!refinement_path.empty())
          return RefinedPircon::from_pairs(
              base, refinement_from_json(detail::load_json(refinement_path)));
        if (!fixture_name.empty()) {
          Json bundle = detail::named_fixture(fixture_name);
          auto pairs = refinement_from_json(bundle.at("refinement"));
          if (!pairs.empty()) return RefinedPircon::from_pairs(base, pairs);
        }
        return RefinedPircon::first_refinement(base, budget);
      }();
      RTable t = r_polynomials(rp, parse_x(x));
      if (pair == "all")
        detail::emit_table(out, t, format);
      else
        detail::emit_pair(out, t, pair, format);
    } else if (app.got_subcommand(spm)) {
      auto base = detail::poset_input(poset_path, fixture_name);
      if (!matching_path.empty()) {
        auto M = matching_from_json(base, detail::load_json(matching_path));
        if (format == "json")
          out << Json{{"valid", true}, {"map", matching_to_json(M).at("map")}}.dump() << '\n';
        else
          out << "PASS " << M.key() << '\n';
      } else {
        auto ms = enumerate_spms(base, budget);
        if (format == "json") {
          Json arr = Json::array();
          for (const auto& M : ms) arr.push_back(matching_to_json(M));
          out << arr.dump() << '\n';
        } else {
          for (const auto& M : ms) out << M.key() << '\n';
        }
      }
    } else if (app.got_subcommand(coherence)) {
      auto base = detail::poset_input(poset_path, fixture_name);
      auto ms = enumerate_spms(base, budget);
      int k = static_cast<int>(ms.size());
      if (format == "json") {
        Json j;
        Json arr = Json::array();
        for (const auto& M : ms) arr.push_back(matching_to_json(M));
        j["matchings"] = arr;
        Json strict = Json::array(), coh = Json::array();
        for (int i = 0; i < k; ++i) {
          Json srow = Json::array(), crow = Json::array();
          for (int l = 0; l < k; ++l) {
            srow.push_back(strictly_coherent(ms[static_cast<size_t>(i)],
                                             ms[static_cast<size_t>(l)]));
            crow.push_back(
                s_coherent(ms[static_cast<size_t>(i)], ms[static_cast<size_t>(l)], ms));
          }
          strict.push_back(srow);
          coh.push_back(crow);
        }
        j["strictly_coherent"] = strict;
        j["coherent"] = coh;
        out << j.dump() << '\n';
      } else {
        for (int i = 0; i < k; ++i)
          out << "matching " << i << ": " << ms[static_cast<size_t>(i)].key() << '\n';
        for (int i = 0; i < k; ++i)
          for (int l = i + 1; l < k; ++l) {
            bool s = strictly_coherent(ms[static_cast<size_t>(i)], ms[static_cast<size_t>(l)]);
            bool c = s_coherent(ms[static_cast<size_t>(i)], ms[static_cast<size_t>(l)], ms);
            out << i << ' ' << l << " strict=" << (s ? "true" : "false")
                << " coherent=" << (c ? "true" : "false") << '\n';
          }
      }
    } else if (app.got_subcommand(classify)) {
      auto base = detail::poset_input(poset_path, fixture_name);
      bool pi = is_pircon(base, budget);
      bool zi = is_zircon(base, budget);
      bool di = is_dircon(base, budget);
      if (format == "json") {
        out << Json{{"pircon", pi}, {"zircon", zi}, {"dircon", di}}.dump() << '\n';
      } else {
        out << "pircon: " << (pi ? "true" : "false") << '\n'
            << "zircon: " << (zi ? "true" : "false") << '\n'
            << "dircon: " << (di ? "true" : "false") << '\n';
      }
    } else if (app.got_subcommand(parabolic)) {
      CoxeterSystem W = [&] {
        if (!group_path.empty()) return group_from_json(detail::load_json(group_path));
        if (fixture_name.empty())
          throw Error("BadInput", "one of --group or --fixture is needed");
        Json bundle = detail::named_fixture(fixture_name);
        if (!bundle.contains("group"))
          throw Error("BadInput", "fixture '" + fixture_name + "' has no group");
        return group_from_json(bundle.at("group"));
      }();
      if (!fixture_name.empty()) {
        Json bundle = detail::named_fixture(fixture_name);
        if (ho->count() == 0)
          for (const auto& g : bundle.at("h")) h.push_back(g.get<std::string>());
        if (wo->count() == 0) name = bundle.at("w").get<std::string>();
      }
      if (name.empty()) throw Error("BadInput", "--w names the top of the quotient interval");
      std::vector<int> H;
      for (const auto& g : h) H.push_back(W.gen_index(g));
      CoxWord v = W.parse(name);
      RTable t = kind == "p" ? parabolic_p(W, H, v, parse_x(x))
                             : parabolic_r(W, H, v, parse_x(x));
      detail::emit_table(out, t, format);
    } else if (app.got_subcommand(klv)) {
      RTable t = klv_polynomials(n, variant == "q" ? KlvVariant::Q : KlvVariant::R);
      if (kind == "p") t = kl_from_kernel(t);
      detail::emit_table(out, t, format);
    } else if (app.got_subcommand(kernel)) {
      RTable t = table_from_json(detail::load_json(table_path));
      IncidenceFunction K = IncidenceFunction::from_table(t);
      if (kernel->got_subcommand(kcheck)) {
        std::string witness;
        bool ok = is_kernel(K, &witness);
        if (format == "json") {
          Json j{{"kernel", ok}};
          if (!ok) j["witness"] = witness;
          out << j.dump() << '\n';
        } else {
          out << (ok ? "PASS" : "FAIL " + witness) << '\n';
        }
      } else {
        IncidenceFunction P = kls_polynomials(K);
        RTable result;
        result.x = t.x;
        result.base = P.base;
        result.entries = P.entries;
        detail::emit_table(out, result, format);
      }
    } else if (app.got_subcommand(hecke)) {
      DihedralModule mod(d, parse_x(x));
      auto report = hecke_report(mod);
      if (hecke_format->count() > 0 && format == "json") {
        Json checks = Json::array();
        bool all = true;
        for (const auto& [label, ok] : report) {
          checks.push_back(Json{{"name", label}, {"pass", ok}});
          all = all && ok;
        }
        out << Json{{"d", d}, {"x", x}, {"checks", checks}, {"all", all}}.dump() << '\n';
      } else {
        for (const auto& [label, ok] : report)
          out << (ok ? "PASS  " : "FAIL  ") << label << '\n';
      }
    } else if (app.got_subcommand(fixtures)) {
      if (name.empty()) {
        Json names = Json::array();
        for (const auto& fx : poset_fixtures()) names.push_back(fx.name);
        names.push_back("counterexample-533");
        out << names.dump() << '\n';
      } else {
        out << detail::named_fixture(name).dump() << '\n';
      }
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace pircon::cli
