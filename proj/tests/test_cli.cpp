#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "repro.hpp"

#include "ugn/ring_text.hpp"

using ugn::cli::run;

namespace {

  struct Outcome {
    int         code;
    std::string out;
    std::string err;
  };

  Outcome call(std::vector<std::string> args, std::string const& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = run(args, in, out, err);
    return {code, out.str(), err.str()};
  }

  std::string temp_path(std::string const& name) {
    return (std::filesystem::temp_directory_path() / ("ugn_test_" + name)).string();
  }

  std::string write_translation_cert() {
    auto path = temp_path("tcert.json");
    auto j    = ugn::cli::translation_certificate_to_json(
        "Z", "G", "leavitt:n=2", ugn::cli::leavitt_translation_certificate());
    std::ofstream(path) << j.dump(2);
    return path;
  }

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"no-such-command"}).code == 2);
  CHECK(call({"folner", "--group", "Q8"}).code == 2);
  CHECK(call({"folner", "--group", "Z", "--eps", "x"}).code == 2);
  CHECK(call({"cert", "verify", "--in", "/nonexistent/file.json"}).code == 2);
  CHECK(call({"--format", "yaml", "monoid", "1 <= 2 in C(1,1)"}).code == 2);
}

TEST_CASE("folner") {
  auto found = call({"folner", "--group", "Z", "--eps", "1/2", "--F", "{0,1,2,3,4,5}"});
  CHECK(found.code == 0);
  auto none = call({"folner", "--group", "F2", "--eps", "1/2", "--rmax", "6"});
  CHECK(none.code == 1);
  CHECK(none.out.find("ratio") != std::string::npos);

  auto js = call({"--format", "json", "folner", "--group", "Z^2", "--eps", "1"});
  REQUIRE(js.code == 0);
  auto j = nlohmann::json::parse(js.out);
  CHECK(j["verdict"] == "pass");

  auto w = temp_path("folner.json");
  CHECK(call({"folner", "--group", "Z", "--eps", "1/10", "--rmax", "12", "--witness", w}).code == 0);
  CHECK(call({"verify", "--in", w}).code == 0);
  std::remove(w.c_str());
}

TEST_CASE("reports are deterministic") {
  auto a = call({"--format", "json", "paradox", "--group", "F2"});
  auto b = call({"--format", "json", "paradox", "--group", "F2"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("paradox and collapse") {
  auto w = temp_path("inj.json");
  CHECK(call({"paradox", "--group", "F2", "--witness", w}).code == 0);
  CHECK(call({"verify", "--in", w}).code == 0);
  CHECK(call({"collapse", "--witness-in", w}).code == 0);
  std::remove(w.c_str());
  CHECK(call({"paradox", "--group", "Z", "--V", "{0,1,2,3}"}).code == 1);
}

TEST_CASE("compress") {
  auto in  = write_translation_cert();
  auto out = temp_path("compressed.json");
  CHECK(call({"compress", "--in", in, "--F", "{0}", "--K", "{0}", "--out", out}).code == 0);
  auto c = ugn::rings::certificate_from_json(ugn::cli::read_file(out));
  CHECK(c.m == 2);
  CHECK(ugn::rings::verify_certificate(c).bgn());
  CHECK(call({"cert", "verify", "--in", out}).code == 0);
  CHECK(call({"compress", "--in", in, "--F", "{0,1}", "--K", "{-1,0,1}"}).code == 1);
  std::remove(in.c_str());
  std::remove(out.c_str());
}

TEST_CASE("cert subcommands") {
  auto l2 = temp_path("l2.json");
  auto l4 = temp_path("l4.json");
  auto op = temp_path("op.json");
  CHECK(call({"cert", "leavitt", "--n", "2", "--out", l2}).code == 0);
  CHECK(call({"cert", "extend", "--in", l2, "--target", "4", "--out", l4}).code == 0);
  CHECK(call({"cert", "verify", "--in", l4}).code == 0);
  CHECK(call({"cert", "opposite", "--in", l2, "--out", op}).code == 0);
  CHECK(call({"cert", "verify", "--in", op}).code == 0);
  CHECK(call({"cert", "product", "--in", l2, l2}).code == 0);
  CHECK(call({"cert", "hom", "--in", l2, "--map", "id"}).code == 0);
  CHECK(call({"cert", "block", "--in", l2, "--up", "2"}).code != 0);

  // An invalid certificate is a verified negative.
  auto bad = temp_path("bad.json");
  std::ofstream(bad) << R"({"ring": "leavitt:n=2", "n": 1, "m": 2,
                            "A": [["e1'"], ["e1'"]], "B": [["e1", "e2"]]})";
  auto r = call({"cert", "verify", "--in", bad});
  CHECK(r.code == 1);
  CHECK(r.out.find("(2,1)") != std::string::npos);
  for (auto const& p : {l2, l4, op, bad}) std::remove(p.c_str());
}

TEST_CASE("monoid queries") {
  CHECK(call({"monoid", "4 <= 3 in C(3,2)"}).code == 0);
  CHECK(call({"monoid", "3 <= 2 in C(3,2)"}).code == 1);
  CHECK(call({"monoid", "3*x1 <= 2*x1 in M(2,1,1)"}).code == 1);
  CHECK(call({"monoid", "x1 <= x1 in M(2,1,1)"}).code == 0);
  CHECK(call({"monoid", "garbage"}).code == 2);
}

TEST_CASE("normalize reads expressions from input") {
  auto r = call({"normalize", "--algebra", "leavitt:n=2"}, "e1'*e2\n# comment\n\ne2*e2'\n");
  CHECK(r.code == 0);
  CHECK(r.out == "0\n1 - e1 e1'\n");
  CHECK(call({"normalize", "--algebra", "weyl:n=1:a=1:b=1"}, "y*x1\n").code == 0);
  CHECK(call({"normalize", "--algebra", "leavitt:n=2"}, "e7\n").code == 2);
}

TEST_CASE("graded subcommands") {
  CHECK(call({"endo-graded", "--group", "C(2)", "--n", "2", "--l", "1", "--scalars", "Z/5"}).code
        == 0);
  CHECK(call({"endo-graded", "--group", "C(3)", "--n", "1", "--l", "2", "--scalars", "Z"}).code
        == 2);
  CHECK(call({"psi", "--algebra", "weyl:n=1:a=1:b=1", "--samples", "x1;y"}).code == 0);
  CHECK(call({"bs-check", "--k", "2", "--r", "3"}).code == 0);
  CHECK(call({"rosenblatt", "--k", "2", "--u", "{a}", "--v", "{b,a*b}"}).code == 0);
}

TEST_CASE("repro catalogue") {
  CHECK(call({"repro", "list"}).code == 0);
  CHECK(call({"repro", "leavitt-certificate", "--n", "2"}).code == 0);
  CHECK(call({"repro", "no-such-run"}).code == 2);
  CHECK(ugn::cli::find_repro("compression") != nullptr);
}
