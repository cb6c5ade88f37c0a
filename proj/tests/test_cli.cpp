#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "suspla/cli.hpp"
#include "suspla/json_io.hpp"

using namespace suspla;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data_file(const std::string& name) {
  return std::string(SUSPLA_TEST_DATA) + "/" + name;
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/suspla_cli_") + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("version flag and usage errors") {
  const CliResult version = run({"--version"});
  CHECK(version.code == 0);
  CHECK(version.out == "suspla 0.1.0\n");

  CHECK(run({}).code == 3);
  CHECK(run({"frobnicate"}).code == 3);
  CHECK(run({"check"}).code == 3);
  CHECK(run({"envelope", "q", data_file("utow.json"), "--window", "3"}).code == 3);
  CHECK(run({"dl", "normalize", "Q1"}).code == 3);  // --p missing

  const CliResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("envelope") != std::string::npos);
}

TEST_CASE("dl normalize output is pinned") {
  const CliResult same = run({"dl", "normalize", "--p", "2", "Q2 Q2"});
  CHECK(same.code == 0);
  CHECK(same.out == "Q2 Q2\n");
  CHECK(same.err == "suspla 0.1.0\n");

  const CliResult multi = run({"dl", "normalize", "--p", "2", "Q3 Q1", "Q4 Q1", "Q1 Q0"});
  CHECK(multi.code == 0);
  CHECK(multi.out == "bQ3 bQ2\nQ3 Q2 + bQ3 bQ3\nbQ1 bQ1\n");

  const CliResult raw = run({"dl", "normalize", "--p", "2", "--e", "-9", "bQ2 Q0"});
  CHECK(raw.code == 0);
  CHECK(raw.out == "bQ1 Q1\n");

  const CliResult json = run({"dl", "normalize", "--p", "2", "--format", "json", "Q3 Q1"});
  CHECK(json.code == 0);
  const Json doc = parse_json_text(json.out);
  CHECK(doc.at("command") == "dl normalize");
  CHECK(doc.at("p") == 2);
  CHECK(doc.at("results").size() == 1);
  CHECK(doc.at("results")[0].at("normal_form") == "bQ3 bQ2");
  CHECK(doc.at("results")[0].at("terms") == Json::array({Json::array({1, "bQ3 bQ2"})}));

  /* Degree cap violations surface as the indeterminate exit code. */
  CHECK(run({"dl", "normalize", "--p", "2", "Q99"}).code == 2);
  CHECK(run({"dl", "normalize", "--p", "2", "--degree-cap", "200", "Q99"}).code == 0);
  /* Bad generator tokens are schema errors. */
  CHECK(run({"dl", "normalize", "--p", "2", "bQ0"}).code == 3);
  CHECK(run({"dl", "normalize", "--p", "4", "Q1"}).code == 3);
}

TEST_CASE("dl basis coproduct and e0 match the library") {
  const CliResult basis = run({"dl", "basis", "--p", "2", "--e", "0", "--degree", "6"});
  CHECK(basis.code == 0);
  CHECK(basis.out == "Q2 Q1\nQ3\nbQ2 Q1 bQ1\nbQ2 bQ2\n");

  const CliResult empty = run({"dl", "basis", "--p", "3", "--e", "0", "--degree", "5"});
  CHECK(empty.code == 0);
  CHECK(empty.out.empty());

  const CliResult bjson = run(
      {"dl", "basis", "--p", "2", "--e", "0", "--degree", "6", "--format", "json"});
  const Json bdoc = parse_json_text(bjson.out);
  CHECK(bdoc.at("count") == 4);
  CHECK(bdoc.at("basis")[1] == "Q3");

  const CliResult cop = run({"dl", "coproduct", "--p", "3", "bQ1"});
  CHECK(cop.code == 0);
  CHECK(cop.out == "Q0 (x) bQ1 + bQ1 (x) Q0\n");
  /* The coproduct only descends to excess quotients at e >= 0. */
  CHECK(run({"dl", "coproduct", "--p", "3", "--e", "-2", "bQ1"}).code == 3);

  const CliResult e0 = run({"dl", "e0", "--p", "3", "Q1", "Q2"});
  CHECK(e0.code == 0);
  CHECK(e0.out == "value: 0\ninternal_degree: 12\nlevel: 2\n");

  /* Q1 * Q0 is nonzero upstairs but its level jumps, so the E0 class dies. */
  const CliResult e0z = run({"dl", "e0", "--p", "2", "Q1", "Q0"});
  CHECK(e0z.code == 0);
  CHECK(e0z.out == "value: 0\ninternal_degree: 2\nlevel: 1\n");

  const CliResult e0nz = run({"dl", "e0", "--p", "2", "Q1", "Q1"});
  CHECK(e0nz.code == 0);
  CHECK(e0nz.out == "value: Q1 Q1\ninternal_degree: 4\nlevel: 2\n");
}

TEST_CASE("thread cap is honored and validated") {
  setenv("SUSPLA_THREADS", "notanumber", 1);
  CHECK(run({"dl", "normalize", "--p", "2", "Q1"}).code == 3);
  setenv("SUSPLA_THREADS", "0", 1);
  CHECK(run({"dl", "normalize", "--p", "2", "Q1"}).code == 3);

  setenv("SUSPLA_THREADS", "3", 1);
  CHECK(worker_count() == 3);
  const CliResult threaded =
      run({"dl", "normalize", "--p", "2", "Q3 Q1", "Q4 Q1", "Q1 Q0", "Q2 Q0", "Q5 Q2"});
  CHECK(threaded.code == 0);
  CHECK(threaded.out == "bQ3 bQ2\nQ3 Q2 + bQ3 bQ3\nbQ1 bQ1\nQ1 Q1\nbQ5 bQ3\n");

  unsetenv("SUSPLA_THREADS");
  CHECK(worker_count() >= 1);
}

TEST_CASE("check verdicts and exit codes for lie documents") {
  const CliResult ok = run({"check", data_file("nontf.json"), "--window", "3"});
  CHECK(ok.code == 0);
  CHECK(ok.out ==
        "kind: lie\n"
        "window: 1 Q Q^2 Q^3\n"
        "torsion_free: no\n"
        "torsion: yes\n"
        "note: torsion element x in degree Q\n"
        "verdict: pass\n");

  const CliResult bad = run({"check", data_file("bad_bracket.json"), "--window", "3"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("verdict: fail") != std::string::npos);
  CHECK(bad.out.find("witness: ") != std::string::npos);

  const CliResult json = run({"check", data_file("nontf.json"), "--window", "3", "--format", "json"});
  const Json doc = parse_json_text(json.out);
  CHECK(doc.at("kind") == "lie");
  CHECK(doc.at("verdict") == "pass");
  CHECK(doc.at("torsion") == true);
  CHECK(doc.at("window") == Json::array({"1", "Q", "Q^2", "Q^3"}));

  /* The free monoid refuses to run without a window. */
  CHECK(run({"check", data_file("nontf.json")}).code == 3);

  const std::string missing = temp_path("missing.json");
  std::remove(missing.c_str());
  CHECK(run({"check", missing}).code == 3);

  const std::string bad_text = temp_path("bad.json");
  std::ofstream(bad_text) << "not json";
  CHECK(run({"check", bad_text}).code == 3);
}

TEST_CASE("envelope emits a loadable document") {
  const CliResult doc_run =
      run({"envelope", "w", data_file("utow.json"), "--window", "3", "--lie-cap", "3"});
  CHECK(doc_run.code == 0);
  const Json doc = parse_json_text(doc_run.out);
  CHECK(doc.at("lie_cap") == 3);
  CHECK(doc.at("window") == Json::array({"1", "s", "s^2", "s^3"}));
  CHECK(doc.at("filtration").size() == 16);

  const PresentedBialgebra W = bialgebra_from_json(doc);
  CHECK(W.dim() == 16);
  for (int d = 0; d <= 3; ++d) CHECK(W.block(d).size() == 4);
  CHECK(check_bialgebra(W).overall().status == Status::Pass);
  const auto rigid = rigid_from_json(doc, W);
  REQUIRE(rigid.has_value());
  CHECK(check_rigid(W, *rigid).status == Status::Pass);

  /* --out writes the same bytes to a file and keeps stdout quiet. */
  const std::string out_path = temp_path("utow_w.json");
  const CliResult file_run = run({"envelope", "w", data_file("utow.json"), "--window", "3",
                                  "--lie-cap", "3", "--out", out_path});
  CHECK(file_run.code == 0);
  CHECK(file_run.out.empty());
  CHECK(slurp(out_path) == doc_run.out);

  const CliResult text_run = run({"envelope", "w", data_file("nontf.json"), "--window", "3",
                                  "--format", "text"});
  CHECK(text_run.code == 0);
  CHECK(text_run.out ==
        "window: 1 Q Q^2 Q^3\n"
        "lie_cap: 3\n"
        "dim: 7\n"
        "block[1]: dim 1\n"
        "block[Q]: dim 2\n"
        "block[Q^2]: dim 2\n"
        "block[Q^3]: dim 2\n"
        "bidegree[1,0]: 1\n"
        "bidegree[Q,0]: 1\n"
        "bidegree[Q,1]: 1\n"
        "bidegree[Q^2,0]: 1\n"
        "bidegree[Q^2,2]: 1\n"
        "bidegree[Q^3,0]: 1\n"
        "bidegree[Q^3,3]: 1\n");

  CHECK(run({"envelope", "z", data_file("nontf.json"), "--window", "3"}).code == 3);
  const CliResult z_run = run({"envelope", "z", data_file("nontf.json"), "--window", "3",
                               "--lie-cap", "3", "--format", "text"});
  CHECK(z_run.code == 0);
  CHECK(z_run.out.find("dim: 5\n") != std::string::npos);
}

TEST_CASE("gp and graded report the expected tables") {
  const std::string w_path = temp_path("nontf_w.json");
  REQUIRE(run({"envelope", "w", data_file("nontf.json"), "--window", "3", "--out", w_path}).code ==
          0);

  const CliResult gp = run({"gp", w_path, "--window", "3"});
  CHECK(gp.code == 0);
  CHECK(gp.out ==
        "window: 1 Q Q^2 Q^3\n"
        "gp[1]: dim 0\n"
        "gp[Q]: dim 1\n"
        "  basis: x\n"
        "gp[Q^2]: dim 1\n"
        "  basis: x*x\n"
        "gp[Q^3]: dim 1\n"
        "  basis: x*x*x\n"
        "gpg: pass\n"
        "pgc: pass\n");

  const CliResult gpj = run({"gp", w_path, "--window", "3", "--format", "json"});
  const Json gdoc = parse_json_text(gpj.out);
  CHECK(gdoc.at("per_degree").at("Q").at("dim") == 1);
  CHECK(gdoc.at("per_degree").at("1").at("dim") == 0);
  CHECK(gdoc.at("gpg") == "pass");

  /* A document without a rigid block cannot answer gp queries. */
  const Json stripped = [&] {
    Json d = load_json_file(w_path);
    d.erase("rigid");
    return d;
  }();
  const std::string stripped_path = temp_path("stripped.json");
  save_json_file(stripped_path, stripped);
  CHECK(run({"gp", stripped_path, "--window", "3"}).code == 3);

  const CliResult graded = run({"graded", data_file("nontf.json"), "--window", "3", "--format",
                                "text"});
  CHECK(graded.code == 0);
  CHECK(graded.out ==
        "window: 1 Q Q^2 Q^3\n"
        "lie_cap: 3\n"
        "bidegree[1,0]: 1\n"
        "bidegree[Q,0]: 1\n"
        "bidegree[Q,1]: 1\n"
        "bidegree[Q^2,0]: 1\n"
        "bidegree[Q^2,2]: 1\n"
        "bidegree[Q^3,0]: 1\n"
        "bidegree[Q^3,3]: 1\n");

  const CliResult gjson = run({"graded", data_file("nontf.json"), "--window", "3"});
  const Json gj = parse_json_text(gjson.out);
  CHECK(gj.at("bidegree_dims").at("Q^2").at("2") == 1);
  CHECK(check_bialgebra(bialgebra_from_json(gj)).overall().status == Status::Pass);
}

TEST_CASE("mm reports match the pinned examples") {
  const CliResult tf = run({"mm", "tf", data_file("nontf.json"), "--window", "3"});
  CHECK(tf.code == 1);
  CHECK(tf.out ==
        "mode: tf\n"
        "window: 1 Q Q^2 Q^3\n"
        "lie_cap: 3\n"
        "seed: 0\n"
        "witness: torsion element x in degree Q\n"
        "verdict: fail\n");

  const CliResult tfj = run({"mm", "tf", data_file("nontf.json"), "--window", "3", "--format",
                             "json", "--seed", "7"});
  CHECK(tfj.code == 1);
  const Json doc = parse_json_text(tfj.out);
  CHECK(doc.at("verdict") == "fail");
  CHECK(doc.at("seed") == 7);
  CHECK(doc.at("window") == Json::array({"1", "Q", "Q^2", "Q^3"}));
  CHECK(doc.at("witnesses") == Json::array({"torsion element x in degree Q"}));

  const CliResult ls = run({"mm", "ls", data_file("nontf.json"), "--window", "3"});
  CHECK(ls.code == 0);
  CHECK(ls.out.find("verdict: pass") != std::string::npos);
  CHECK(ls.out.find("dims[Q]: lie=1 primitives=1 quotient=2\n") != std::string::npos);

  const CliResult good = run({"mm", "tf", data_file("utow.json"), "--window", "3"});
  CHECK(good.code == 0);
  CHECK(good.out.find("dims[s^3]: envelope=4 envelope_of_primitives=4 lie=1 primitives=1\n") !=
        std::string::npos);
  CHECK(good.out.find("verdict: pass") != std::string::npos);

  /* Reruns are byte-identical. */
  const CliResult again = run({"mm", "tf", data_file("nontf.json"), "--window", "3"});
  CHECK(again.out == tf.out);
  CHECK(again.err == tf.err);
}
