#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "cayint/cli.hpp"
#include "cayint/export.hpp"

using namespace cayint;

namespace {

struct Result {
  int status = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.status = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("dist") {
  auto r = run({"dist", "--model", "z2", "(0,0)", "(4,3)"});
  CHECK(r.status == cli::kOk);
  CHECK(r.out == "7\n");
  auto j = run({"--model", "sym-adjacent:5", "--format", "json", "dist", "e", "(2,5)"});
  CHECK(Json::parse(j.out)["distance"] == 5);
}

TEST_CASE("exit statuses") {
  CHECK(run({}).status == cli::kParseError);
  CHECK(run({"frobnicate"}).status == cli::kParseError);
  CHECK(run({"dist", "(0,0)", "(1,1)"}).status == cli::kParseError);
  CHECK(run({"dist", "--model", "z2", "(0,0)"}).status == cli::kParseError);
  CHECK(run({"dist", "--model", "sym-circular:5", "(1,6)", "e"}).status == cli::kParseError);
  CHECK(run({"dist", "--model", "nope:3", "e", "e"}).status == cli::kParseError);
  CHECK(run({"census", "--model", "sym-circular:5", "--figure", "7"}).status == cli::kParseError);
  CHECK(run({"dist", "--model", "z2", "--format", "dot", "e", "e"}).status == cli::kParseError);
  CHECK(run({"--help"}).status == cli::kOk);

  auto cap = run({"census", "--model", "z2", "--figure", "5"});
  CHECK(cap.status == cli::kUnsupported);
  CHECK(cap.err.find("finite") != std::string::npos);
  CHECK(run({"dist", "--model", "sym-circular:13", "e", "e"}).status == cli::kUnsupported);
  CHECK(run({"median", "--model", "sym-adjacent:4", "e", "(1,2)", "(2,3)", "--parity-check"})
            .status == cli::kUnsupported);
  CHECK(run({"normaliser", "--model", "z2"}).status == cli::kUnsupported);
}

TEST_CASE("geodesics") {
  auto r = run({"geodesics", "--model", "z2", "(0,0)", "(2,2)", "--enumerate"});
  REQUIRE(r.status == 0);
  auto j = Json::parse(r.out);
  CHECK(j["count"] == 6);
  CHECK(j["words"].size() == 6);
  CHECK(j["truncated"] == false);
  auto capped = run({"geodesics", "--model", "z2", "--max-words", "2", "(0,0)", "(2,2)", "--enumerate"});
  CHECK(Json::parse(capped.out)["truncated"] == true);
}

TEST_CASE("interval") {
  auto r = run({"interval", "--model", "sym-circular:4", "e", "(1,3,4,2)", "--stats"});
  REQUIRE(r.status == 0);
  auto j = Json::parse(r.out);
  CHECK(j["bottom"] == "e");
  CHECK(j["top"] == "(1,3,4,2)");
  CHECK(j["n"] == 3);
  CHECK(j["ranks"].size() == 4);
  // 3 + 4 + 3 cover edges: one middle edge per geodesic.
  CHECK(j["edges"].size() == 10);
  CHECK(j["stats"]["max_antichain"] == 4);
  CHECK(j["stats"]["is_sperner"] == false);
  CHECK(j["stats"]["geodesic_count"] == 4);

  auto dot = run({"interval", "--model", "z2", "--format", "dot", "(0,0)", "(1,1)"});
  CHECK(dot.out.rfind("digraph", 0) == 0);
  CHECK(dot.out.find("cluster_rank_2") != std::string::npos);
  CHECK(dot.out.find("label=\"(1,0)\"") != std::string::npos);

  auto partial = run({"interval", "--model", "z2", "(0,0)", "(4,3)", "--partial", "2"});
  auto p = Json::parse(partial.out);
  CHECK(p["forward_profile"] == Json::array({1, 2, 3}));
  CHECK(p["backward_profile"] == Json::array({1, 2, 3}));
}

TEST_CASE("classify") {
  auto r = run({"classify", "--model", "sym-adjacent:5", "--relation", "iso", "(1,3)", "(3,5)", "(2,5)"});
  REQUIRE(r.status == 0);
  auto j = Json::parse(r.out);
  CHECK(j["relation"] == "iso");
  REQUIRE(j["classes"].size() == 2);
  CHECK(j["classes"][0]["members"] == Json::array({"(1,3)", "(3,5)"}));
  auto all = run({"classify", "--model", "sym-circular:4", "--relation", "length", "--all"});
  CHECK(Json::parse(all.out)["classes"].size() == 5);
  CHECK(run({"classify", "--model", "sym-circular:4", "--relation", "bogus", "e"}).status ==
        cli::kParseError);
}

TEST_CASE("census") {
  auto r = run({"census", "--model", "sym-circular:5", "--figure", "5"});
  REQUIRE(r.status == 0);
  CHECK(r.out.rfind("signature,count,representative\n0,1,\"e\"\n1,5,", 0) == 0);
  auto sizes = run({"census", "--model", "sym-circular:5", "--figure", "6", "--threads", "2"});
  CHECK(sizes.out == run({"census", "--model", "sym-circular:5", "--figure", "6"}).out);
}

TEST_CASE("median") {
  auto r = run({"median", "--model", "sym-circular:5", "e", "(1,3)", "(2,4,5)"});
  REQUIRE(r.status == 0);
  auto j = Json::parse(r.out);
  CHECK(j["parity_ok"] == true);
  // Frozen from a whole-group scan of S5.
  CHECK(j["weight"] == 6);
  CHECK(j["medians"] == Json::array({"(2,3)", "(1,2)"}));
  CHECK(j.contains("deltas"));
  CHECK(j.contains("interior_size"));

  auto z = run({"median", "--model", "z2", "(0,0)", "(4,0)", "(0,4)"});
  CHECK(Json::parse(z.out)["parity_ok"].is_null());
  auto dot = run({"median", "--model", "sym-circular:4", "--format", "dot", "e", "(1,2)", "(3,4)"});
  CHECK(dot.out.find("shape=box") != std::string::npos);
}

TEST_CASE("normaliser") {
  auto r = run({"normaliser", "--model", "sym-circular:6", "--enumerate"});
  auto j = Json::parse(r.out);
  CHECK(j["order"] == 12);
  CHECK(j["members"].size() == 12);
  auto yes = run({"normaliser", "--model", "sym-circular:6", "--contains", "(1,6)(2,5)(3,4)", "--format", "text"});
  CHECK(yes.out == "yes\n");
  auto no = run({"normaliser", "--model", "sym-circular:6", "--contains", "(1,2)", "--format", "text"});
  CHECK(no.out == "no\n");
}

TEST_CASE("cache build and verify") {
  auto dir = std::filesystem::temp_directory_path() / "cayint-cli-cache";
  std::filesystem::remove_all(dir);
  auto b = run({"cache", "build", "--model", "sym-circular:6", "--cache-dir", dir.string()});
  CHECK(b.status == 0);
  auto v = run({"cache", "verify", "--model", "sym-circular:6", "--cache-dir", dir.string()});
  CHECK(v.status == 0);
  CHECK(v.out.rfind("ok:", 0) == 0);
  // The cached table is used for queries.
  auto d = run({"dist", "--model", "sym-circular:6", "--cache-dir", dir.string(), "e", "(1,4)"});
  CHECK(d.status == 0);
  CHECK(d.out == run({"dist", "--model", "sym-circular:6", "e", "(1,4)"}).out);
  CHECK(d.out == "5\n");

  auto wrong = run({"cache", "verify", "--model", "sym-adjacent:6", "--cache-dir", dir.string()});
  CHECK(wrong.status != 0);
  CHECK(run({"cache", "build", "--model", "sym-circular:6"}).status == cli::kParseError);
  CHECK(run({"cache", "build", "--model", "z2", "--cache-dir", dir.string()}).status ==
        cli::kUnsupported);
}

TEST_CASE("outputs are deterministic") {
  const std::vector<std::vector<std::string>> cmds{
      {"interval", "--model", "sym-circular:5", "(1,2)(3,4)", "(1,4,2,5)", "--stats"},
      {"classify", "--model", "sym-circular:5", "--relation", "iso", "--all"},
      {"median", "--model", "sym-circular:6", "(1,2)", "(3,5,6)", "(1,4)(2,6)"},
      {"census", "--model", "sym-circular:6", "--figure", "6", "--threads", "3"},
  };
  for (const auto& c : cmds) CHECK(run(c).out == run(c).out);
}

}
