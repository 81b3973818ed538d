#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "lasg/report_json.hpp"

using lasg::cli::ExitStatus;

namespace {

struct Result {
  ExitStatus status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  ExitStatus s = lasg::cli::run(args, in, out, err);
  return {s, out.str(), err.str()};
}

const std::string exp_path = testing::fixture_path("exp.tbl");
const std::string tb_path = testing::fixture_path("tb.tbl");

}  // namespace

TEST_CASE("check") {
  CHECK(run({"check", tb_path}).status == ExitStatus::Success);
  CHECK(run({"check", "-"}, "2\nx y\nx x\ny y").status == ExitStatus::PropertyFails);
  Result r = run({"check", "-"}, testing::read_fixture("exp.tbl"));
  CHECK(r.status == ExitStatus::Success);
  CHECK(r.out.find("e") != std::string::npos);
}

TEST_CASE("bad input and usage") {
  CHECK(run({"check", "-"}, "2\nx y\nx y\n").status == ExitStatus::InputError);
  CHECK(run({"check", "/nonexistent/file.tbl"}).status == ExitStatus::InputError);
  CHECK(run({}).status == ExitStatus::UsageError);
  CHECK(run({"frobnicate"}).status == ExitStatus::UsageError);
  CHECK(run({"verify", tb_path}).status == ExitStatus::UsageError);
  CHECK(run({"verify", tb_path, "--theorem", "T_NOPE"}).status == ExitStatus::UsageError);
  CHECK(run({"enumerate", "--order", "6"}).status == ExitStatus::LimitExceeded);
  CHECK(run({"enumerate", "--order", "2", "--filter", "bogus"}).status ==
        ExitStatus::UsageError);
  CHECK(run({"classify", tb_path, "--subset", "q"}).status == ExitStatus::InputError);
}

TEST_CASE("classify") {
  CHECK(run({"classify", exp_path, "--subset", "a,b,f", "--kind", "bi"}).status ==
        ExitStatus::Success);
  CHECK(run({"classify", exp_path, "--subset", "c", "--kind", "left"}).status ==
        ExitStatus::PropertyFails);
  Result j = run({"classify", exp_path, "--subset", "a,b", "--json"});
  CHECK(j.status == ExitStatus::Success);
  auto doc = lasg::Json::parse(j.out);
  CHECK(doc["semiprime"] == true);
}

TEST_CASE("intra") {
  CHECK(run({"intra", tb_path}).status == ExitStatus::Success);
  CHECK(run({"intra", exp_path}).status == ExitStatus::PropertyFails);
}

TEST_CASE("ideals") {
  Result r = run({"ideals", tb_path, "--kind", "left", "--json"});
  CHECK(r.status == ExitStatus::Success);
  CHECK(lasg::Json::parse(r.out).is_object());
}

TEST_CASE("enumerate stream round-trips") {
  Result r = run({"enumerate", "--order", "3", "--up-to-iso"});
  CHECK(r.status == ExitStatus::Success);
  CHECK(r.out.find("count: 20\n") != std::string::npos);
  auto models = lasg::parse_model_stream(r.out);
  CHECK(models.size() == 20);

  Result again = run({"check", "-"}, r.out);
  CHECK(again.status == ExitStatus::Success);
}

TEST_CASE("verify") {
  CHECK(run({"verify", tb_path, "--all"}).status == ExitStatus::Success);
  CHECK(run({"verify", exp_path, "--all"}).status == ExitStatus::Success);
  CHECK(run({"verify", tb_path, "--theorem", "T_SA_EQ_S", "--mode", "converse"}).status ==
        ExitStatus::PropertyFails);
  CHECK(run({"verify", tb_path, "--all", "--mode", "forward"}).status ==
        ExitStatus::Success);
  CHECK(run({"verify", "--theorem", "L_S_SQUARED", "--mode", "forward", "--order", "3"})
            .status == ExitStatus::Success);
}

TEST_CASE("verify JSON is deterministic") {
  for (const std::string& p : {exp_path, tb_path}) {
    Result a = run({"verify", p, "--all", "--json"});
    Result b = run({"verify", p, "--all", "--json"});
    CHECK(a.status == ExitStatus::Success);
    CHECK(a.out == b.out);
    auto doc = lasg::Json::parse(a.out);
    CHECK(doc.size() == lasg::theorem_count);
  }
}

TEST_CASE("affine") {
  CHECK(run({"affine", "--r", "1/2", "--points", "0,1,2"}).status == ExitStatus::Success);
  CHECK(run({"affine", "--r", "1", "--points", "0,1"}).status == ExitStatus::InputError);
  CHECK(run({"affine", "--r", "x", "--points", "0,1,2"}).status == ExitStatus::InputError);
  Result j = run({"affine", "--r", "-2/3", "--points", "-2,-1,0,1/2,1,3", "--json"});
  auto doc = lasg::Json::parse(j.out);
  CHECK(doc["r"] == "-2/3");
  CHECK(doc["triples_checked"] == 216);
}
