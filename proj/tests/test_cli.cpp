#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <pircon/cli.hpp>

using namespace pircon;

namespace {

struct RunResult {
  int rc;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int rc = cli::run(std::move(args), out, err);
  return {rc, out.str(), err.str()};
}

std::string write_tmp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream f(path);
  f << content;
  return path.string();
}

IntPolynomial ip(std::vector<long long> c) { return IntPolynomial(std::move(c)); }

}  // namespace

TEST_CASE("the published example lines come out verbatim", "[cli]") {
  auto classify = run_cli({"classify", "--fixture", "nondircone"});
  CHECK(classify.rc == 0);
  CHECK(classify.out == "{\"pircon\":true,\"zircon\":false,\"dircon\":false}\n");

  auto rpoly = run_cli({"rpoly", "--fixture", "nonkernel", "--x", "q", "--pair", "d,a"});
  CHECK(rpoly.rc == 0);
  CHECK(rpoly.out == "[-1,1]\n");

  auto hecke = run_cli({"hecke", "--d", "3", "--x", "-1"});
  CHECK(hecke.rc == 0);
  std::istringstream lines(hecke.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    CHECK(line.substr(0, 6) == "PASS  ");
    ++count;
  }
  CHECK(count == 6);
}

TEST_CASE("output bytes are identical across runs", "[cli]") {
  std::vector<std::vector<std::string>> jobs = {
      {"rpoly", "--fixture", "nonkernel", "--x", "-1"},
      {"spm", "--fixture", "nondircone"},
      {"coherence", "--fixture", "nondircone"},
      {"classify", "--fixture", "esempio"},
      {"fixtures", "nonkernel"},
      {"fixtures", "counterexample-533"},
      {"klv", "--n", "2", "--variant", "q"},
      {"hecke", "verify", "--d", "4", "--format", "json"},
  };
  for (const auto& job : jobs) {
    auto a = run_cli(job);
    auto b = run_cli(job);
    CHECK(a.rc == 0);
    CHECK(a.rc == b.rc);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("file inputs feed the same pipelines as fixtures", "[cli]") {
  auto bundle = run_cli({"fixtures", "nonkernel"});
  REQUIRE(bundle.rc == 0);
  Json j = Json::parse(bundle.out);
  std::string poset = write_tmp("cli_nk_poset.json", j.at("poset").dump());
  std::string refinement = write_tmp("cli_nk_ref.json", j.at("refinement").dump());

  auto pairq = run_cli({"rpoly", "--poset", poset, "--refinement", refinement, "--x", "q",
                        "--pair", "d,a"});
  CHECK(pairq.rc == 0);
  CHECK(pairq.out == "[-1,1]\n");

  auto paire = run_cli({"rpoly", "--poset", poset, "--refinement", refinement, "--x", "-1",
                        "--pair", "e,a"});
  CHECK(paire.out == "[0,1,-2,1]\n");

  auto text = run_cli({"rpoly", "--poset", poset, "--refinement", refinement, "--pair", "d,a",
                       "--format", "text"});
  CHECK(text.out == "q - 1\n");

  auto table = run_cli({"rpoly", "--poset", poset, "--refinement", refinement, "--x", "q"});
  RTable t = table_from_json(Json::parse(table.out));
  CHECK(t.at("d", "a") == ip({-1, 1}));
  CHECK(t.at("e", "a") == ip({-1, 2, -1}));

  auto matching = write_tmp("cli_nk_match.json", j.at("matchings").at("top").dump());
  auto valid = run_cli({"spm", "--poset", poset, "--matching", matching});
  CHECK(valid.rc == 0);
  CHECK(Json::parse(valid.out).at("valid") == Json(true));

  auto bad = write_tmp("cli_nk_bad.json", "{\"map\":{\"0\":\"1\"}}");
  auto invalid = run_cli({"spm", "--poset", poset, "--matching", bad});
  CHECK(invalid.rc == 1);
  CHECK(invalid.err.find("TopNotMatchedDown") != std::string::npos);
}

TEST_CASE("kernel verdicts and KLS tables flow through files", "[cli]") {
  auto nk = run_cli({"rpoly", "--fixture", "nonkernel", "--x", "q"});
  auto nd = run_cli({"rpoly", "--fixture", "nondircone", "--x", "q"});
  std::string nk_path = write_tmp("cli_nk_table.json", nk.out);
  std::string nd_path = write_tmp("cli_nd_table.json", nd.out);

  auto pass = run_cli({"kernel", "check", "--table", nd_path});
  CHECK(pass.rc == 0);
  CHECK(pass.out == "{\"kernel\":true}\n");

  auto fail = run_cli({"kernel", "check", "--table", nk_path});
  CHECK(fail.rc == 0);
  CHECK(fail.out ==
        "{\"kernel\":false,\"witness\":\"(K * bar K) at ('0', '1') = -q^4 + 2*q^3 - q^2\"}\n");

  auto fail_text = run_cli({"kernel", "check", "--table", nk_path, "--format", "text"});
  CHECK(fail_text.out == "FAIL (K * bar K) at ('0', '1') = -q^4 + 2*q^3 - q^2\n");

  auto kls = run_cli({"kernel", "kls", "--table", nd_path});
  REQUIRE(kls.rc == 0);
  RTable p = table_from_json(Json::parse(kls.out));
  CHECK(p.at("0", "1") == ip({0, -1}));
  CHECK(p.at("m", "1") == IntPolynomial::zero());
}

TEST_CASE("klv tables match the library routes", "[cli]") {
  auto r = run_cli({"klv", "--n", "2"});
  REQUIRE(r.rc == 0);
  CHECK(Json::parse(r.out) == table_to_json(klv_polynomials(2, KlvVariant::R)));

  auto p = run_cli({"klv", "--n", "2", "--variant", "q", "--kind", "p"});
  REQUIRE(p.rc == 0);
  CHECK(Json::parse(p.out) ==
        table_to_json(kl_from_kernel(klv_polynomials(2, KlvVariant::Q))));
}

TEST_CASE("parabolic tables come from group fixtures or files", "[cli]") {
  auto t = run_cli({"parabolic", "--fixture", "counterexample-533", "--x", "q"});
  REQUIRE(t.rc == 0);
  RTable table = table_from_json(Json::parse(t.out));
  CHECK(table.at("e", "s") == ip({-1, 1}));
  CHECK(table.base->has_maximum());

  std::string group = write_tmp("cli_s3.json", "{\"type\":\"symmetric\",\"n\":3}");
  auto s3 = run_cli({"parabolic", "--group", group, "--w", "s1-s2-s1", "--kind", "p",
                     "--x", "-1"});
  REQUIRE(s3.rc == 0);
  RTable ps3 = table_from_json(Json::parse(s3.out));
  for (int u = 0; u < ps3.base->size(); ++u)
    for (int w = 0; w < ps3.base->size(); ++w)
      if (ps3.base->leq(u, w)) CHECK(ps3.at(u, w) == IntPolynomial::one());

  auto notrep = run_cli({"parabolic", "--group", group, "--h", "s1", "--w", "s1"});
  CHECK(notrep.rc == 1);
  CHECK(notrep.err.find("NotMinimalCosetRep") != std::string::npos);
}

TEST_CASE("exit codes separate usage errors from domain errors", "[cli]") {
  CHECK(run_cli({"rpoly", "--bogus"}).rc == 2);
  CHECK(run_cli({}).rc == 2);
  CHECK(run_cli({"klv"}).rc == 2);
  CHECK(run_cli({"kernel"}).rc == 2);
  CHECK(run_cli({"hecke", "--d", "1"}).rc == 2);

  auto help = run_cli({"--help"});
  CHECK(help.rc == 0);
  CHECK(help.out.find("Subcommands") != std::string::npos);

  auto missing = run_cli({"rpoly", "--poset", "/nonexistent.json"});
  CHECK(missing.rc == 1);
  CHECK(missing.err.find("BadInput") != std::string::npos);

  auto unknown = run_cli({"fixtures", "frieze"});
  CHECK(unknown.rc == 1);
  CHECK(unknown.err.find("UnknownId") != std::string::npos);

  auto neither = run_cli({"classify"});
  CHECK(neither.rc == 1);
  CHECK(neither.err.find("--poset or --fixture") != std::string::npos);
}

TEST_CASE("the enumeration budget comes from the flag or the environment", "[cli]") {
  setenv("PIRCON_BUDGET", "1", 1);
  auto starved = run_cli({"spm", "--fixture", "nondircone"});
  CHECK(starved.rc == 1);
  CHECK(starved.err.find("SizeLimitExceeded") != std::string::npos);

  auto overridden = run_cli({"spm", "--fixture", "nondircone", "--budget", "100000"});
  CHECK(overridden.rc == 0);

  setenv("PIRCON_BUDGET", "zebra", 1);
  auto garbled = run_cli({"classify", "--fixture", "nondircone"});
  CHECK(garbled.rc == 1);
  CHECK(garbled.err.find("PIRCON_BUDGET") != std::string::npos);

  unsetenv("PIRCON_BUDGET");
  CHECK(run_cli({"spm", "--fixture", "nondircone"}).rc == 0);
}

TEST_CASE("fixture bundles round-trip through parse and serialize", "[cli]") {
  for (const std::string name : {"nonkernel", "nondircone", "esempio"}) {
    auto emitted = run_cli({"fixtures", name});
    REQUIRE(emitted.rc == 0);
    Json j = Json::parse(emitted.out);

    Json again;
    again["name"] = j.at("name");
    auto base = poset_from_json(j.at("poset"));
    again["poset"] = poset_to_json(*base);
    Json ms = Json::object();
    for (const auto& [mname, mj] : j.at("matchings").items())
      ms[mname] = matching_to_json(matching_from_json(base, mj));
    again["matchings"] = ms;
    again["refinement"] = refinement_to_json(refinement_from_json(j.at("refinement")));
    CHECK(again.dump() + "\n" == emitted.out);
  }

  auto g = run_cli({"fixtures", "counterexample-533"});
  Json j = Json::parse(g.out);
  CHECK(group_to_json(group_from_json(j.at("group"))).dump() == j.at("group").dump());
}
