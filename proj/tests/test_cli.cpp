#include <catch_amalgamated.hpp>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;

  json record() const { return json::parse(out); }
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "annular");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = annular::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json term(int N, int c, const char* num, const char* den) {
  return json{{"N", N}, {"c", c}, {"num", num}, {"den", den}};
}

}  // namespace

TEST_CASE("enumerate lists members in cycle notation") {
  const Run r = invoke({"enumerate", "--family", "a", "--n", "4", "--genus", "1"});
  REQUIRE(r.code == 0);
  const json j = r.record();
  CHECK(j.at("schema_version") == annular::cli::kSchemaVersion);
  CHECK(j.at("command") == "enumerate");
  CHECK(j.at("result").at("elements") == json::array({"(1,3)(2,4)"}));
  CHECK(j.at("result").at("count") == 1);
  CHECK(j.contains("timing_ms"));
}

TEST_CASE("enumerate symmetric annular pairings and empty genera") {
  CHECK(invoke({"enumerate", "--family", "nc2-delta", "--n", "2"}).record()["result"]["count"] ==
        1);
  const Run r = invoke({"enumerate", "--family", "a", "--n", "4", "--genus", "9"});
  CHECK(r.code == 0);
  CHECK(r.record()["result"]["count"] == 0);
  CHECK(r.record()["result"]["elements"].empty());
}

TEST_CASE("enumerate honors limit and csv") {
  const Run r = invoke({"enumerate", "--family", "a", "--n", "8", "--genus", "1", "--limit", "3"});
  CHECK(r.record()["result"]["count"] == 70);
  CHECK(r.record()["result"]["elements"].size() == 3);
  const Run c = invoke({"enumerate", "--family", "b", "--n", "4", "--k", "2", "--format", "csv"});
  CHECK(c.code == 0);
  CHECK(c.out == "family,n,genus,k,p,count,truncated\nb,4,,2,,4,false\n");
}

TEST_CASE("union families report their witnesses") {
  const Run r = invoke({"enumerate", "--family", "nc2-t", "--n", "4"});
  CHECK(r.record()["result"]["witnesses"]["(1,3)(2,4)"] == json::array({json::array({1, 3})}));
}

TEST_CASE("enumerate argument errors exit 2") {
  CHECK(invoke({"enumerate", "--family", "a", "--n", "4"}).code == 2);
  CHECK(invoke({"enumerate", "--family", "zzz", "--n", "4"}).code == 2);
  CHECK(invoke({"enumerate", "--family", "nc-t-p", "--n", "4"}).code == 2);
  CHECK(invoke({"enumerate", "--n", "4"}).code == 2);
  CHECK(invoke({"enumerate", "--family", "a", "--n", "4", "--genus", "x"}).code == 2);
  CHECK(invoke({}).code == 2);
}

TEST_CASE("cap overflow exits 1 and the flag beats the environment") {
  ::setenv("ANNULAR_MAX_ELEMENTS", "100000000", 1);
  const Run r = invoke({"enumerate", "--family", "a", "--n", "8", "--genus", "0",
                        "--max-elements", "10"});
  ::unsetenv("ANNULAR_MAX_ELEMENTS");
  CHECK(r.code == 1);
  CHECK(r.record()["error"]["kind"] == "cap_exceeded");

  ::setenv("ANNULAR_MAX_ELEMENTS", "10", 1);
  CHECK(invoke({"enumerate", "--family", "a", "--n", "8", "--genus", "0"}).code == 1);
  ::unsetenv("ANNULAR_MAX_ELEMENTS");

  const Run t = invoke({"enumerate", "--family", "a", "--n", "8", "--genus", "0",
                        "--max-elements", "10", "--on-overflow", "truncate"});
  CHECK(t.code == 0);
  CHECK(t.record()["result"]["truncated"] == true);
}

TEST_CASE("verify reports and exit codes") {
  const Run t = invoke({"verify", "--bijection", "torus-eq", "--n", "6"});
  CHECK(t.code == 0);
  const json rep = t.record()["result"]["reports"][0];
  CHECK(rep["domain_size"] == 10);
  CHECK(rep["codomain_size"] == 10);
  CHECK(rep["verified"] == true);

  const Run p = invoke({"verify", "--bijection", "phi1", "--n", "4"});
  CHECK(p.code == 0);
  CHECK(p.record()["result"]["reports"][0]["domain_size"] == 5);

  CHECK(invoke({"verify", "--bijection", "phi1", "--n", "3"}).code == 2);
  CHECK(invoke({"verify", "--bijection", "phi9", "--n", "4"}).code == 2);
  CHECK(invoke({"verify", "--bijection", "phi1", "--n", "4", "--p", "1"}).code == 2);
}

TEST_CASE("graded verification runs every grade unless one is given") {
  const Run all = invoke({"verify", "--bijection", "phi1-hat", "--n", "3"});
  CHECK(all.code == 0);
  CHECK(all.record()["result"]["reports"].size() == 3);
  const Run one = invoke({"verify", "--bijection", "a-tilde-eq", "--n", "3", "--p", "2"});
  CHECK(one.record()["result"]["reports"].size() == 1);
  CHECK(invoke({"verify", "--bijection", "lemma3", "--n", "3"}).record()["result"]["reports"]
            .size() == 2);
}

TEST_CASE("a failing verification exits 3 and still reports") {
  const Run r = invoke({"verify", "--bijection", "phi1-hat", "--n", "3", "--hat-map", "tau0"});
  CHECK(r.code == 3);
  CHECK(r.record()["result"]["verified"] == false);
}

TEST_CASE("symbolic moments") {
  const Run g = invoke({"moment", "--ensemble", "gue", "--order", "4", "--symbolic"});
  CHECK(g.code == 0);
  CHECK(g.record()["result"]["polynomial"]["terms"] ==
        json::array({term(3, 0, "1", "2"), term(1, 0, "1", "4")}));
  const Run l = invoke({"moment", "--ensemble", "lue", "--order", "2", "--symbolic"});
  CHECK(l.record()["result"]["polynomial"]["terms"] ==
        json::array({term(3, 2, "1", "1"), term(3, 1, "1", "1")}));
  const Run o = invoke({"moment", "--ensemble", "goe", "--order", "3", "--symbolic"});
  CHECK(o.record()["result"]["polynomial"]["terms"].empty());
  const Run ge = invoke({"moment", "--ensemble", "goe", "--order", "4", "--method", "genus"});
  CHECK(ge.record()["result"]["display"] == "1/8*N^3 + 5/16*N^2 + 5/16*N");
}

TEST_CASE("numeric and monte carlo moments") {
  const Run n = invoke({"moment", "--ensemble", "lue", "--order", "2", "--dim", "8",
                        "--rect-dim", "16"});
  CHECK(n.record()["result"]["exact"] == json{{"num", "3072"}, {"den", "1"}});
  const Run mc = invoke({"moment", "--ensemble", "goe", "--order", "2", "--dim", "10", "--mc",
                         "--samples", "2000", "--seed", "5", "--no-timing"});
  CHECK(mc.code == 0);
  const json res = mc.record()["result"];
  CHECK(res["mc"]["samples"] == 2000);
  CHECK(res.contains("z_score"));
  CHECK(invoke({"moment", "--ensemble", "lue", "--order", "2", "--dim", "8"}).code == 2);
  CHECK(invoke({"moment", "--ensemble", "gue", "--order", "14"}).code == 1);
  CHECK(invoke({"moment", "--ensemble", "xue", "--order", "2"}).code == 2);
}

TEST_CASE("classify reports memberships") {
  const Run a = invoke({"classify", "--perm", "(1,3)(2,4)", "--n", "4"});
  CHECK(a.code == 0);
  const json fam = a.record()["result"]["families"];
  CHECK(std::find(fam.begin(), fam.end(), json{{"family", "a"}, {"n", 4}, {"genus", 1}}) !=
        fam.end());
  bool torus = false;
  for (const auto& f : fam) {
    if (f["family"] == "nc2-t") torus = f["witnesses"] == json::array({json::array({1, 3})});
  }
  CHECK(torus);

  const json planar = invoke({"classify", "--perm", "(1,2)(3,4)", "--n", "4"})
                          .record()["result"]["families"];
  bool nc2 = false;
  for (const auto& f : planar) nc2 = nc2 || f["family"] == "nc2";
  CHECK(nc2);

  const json sym = invoke({"classify", "--perm", "(1,-4)(4,-1)(2,3)(-2,-3)", "--n", "4",
                           "--signed"})
                       .record()["result"];
  bool delta = false;
  for (const auto& f : sym["families"]) delta = delta || f["family"] == "nc2-delta";
  CHECK(delta);
  CHECK(sym["delta_symmetric"] == true);

  CHECK(invoke({"classify", "--perm", "(1,3", "--n", "4"}).code == 2);
  CHECK(invoke({"classify", "--perm", "(1,-3)", "--n", "4"}).code == 2);
}

TEST_CASE("identical invocations are byte-identical") {
  const std::vector<std::string> args = {"verify", "--bijection", "phi2", "--n", "4",
                                         "--no-timing", "--threads", "3"};
  const Run a = invoke(args);
  const Run b = invoke(args);
  CHECK(a.out == b.out);
  std::vector<std::string> one = args;
  one.back() = "1";
  CHECK(invoke(one).out == a.out);
}
