#include "planecubic/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

namespace planecubic::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("planecubic_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

const std::string kExe = "[[3,1,4],[1,3,4],[4,4,12]]";
const std::string k369 = "[[3,1,4],[1,3,2],[4,2,10]]";
const std::string kMatrix =
    R"({"size":4,"field":"Q","entries":[["X0","0","0","X1^2"],["0","X1","0","0"],)"
    R"(["0","0","X2","0"],["X1^2","0","0","X0^3+X2^3"]]})";

TEST(CliTest, Discriminant) {
  const Outcome o = invoke({"lat", "disc", "--gram", kExe});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "32\n");
}

TEST(CliTest, MayanskiyReport) {
  const std::string file = temp_file("a_exe.json", kExe);
  const Outcome o = invoke({"fourfold", "mayanskiy", "--file", file});
  EXPECT_EQ(o.code, 0);
  std::istringstream lines(o.out);
  std::string line;
  int pass = 0;
  int labelled = 0;
  while (std::getline(lines, line)) {
    pass += line.rfind("PASS condition", 0) == 0;
    labelled += line.find("Mayanskiy conditions 3/4 (adopted definitions)") != std::string::npos;
  }
  EXPECT_EQ(pass, 6);
  EXPECT_EQ(labelled, 2);
}

TEST(CliTest, FileAndInlineAgree) {
  const std::string lattice = temp_file("lattice.json", k369);
  const std::string matrix = temp_file("matrix.json", kMatrix);
  const std::vector<std::vector<std::string>> lattice_commands = {
      {"lat", "disc"},          {"lat", "sig"},           {"lat", "even"},
      {"lat", "discgroup"},     {"lat", "complement", "--vectors", "[[1,0,0]]"},
      {"lat", "index", "--vectors", "[[1,0,0],[0,1,0],[0,0,2]]"},
      {"enum", "norm", "--norm", "10"},
      {"enum", "longroots", "--vec", "[1,0,0]"},
      {"fourfold", "delta", "--vec", "[0,0,1]"},
      {"fourfold", "oddelta"},  {"fourfold", "trivrat"},  {"fourfold", "mayanskiy"},
      {"fourfold", "pfaffian"}};
  for (const auto& cmd : lattice_commands) {
    for (const std::string mode : {"human", "json"}) {
      std::vector<std::string> inline_args = cmd, file_args = cmd;
      inline_args.insert(inline_args.end(), {"--gram", k369, "--output", mode});
      file_args.insert(file_args.end(), {"--file", lattice, "--output", mode});
      const Outcome a = invoke(inline_args);
      const Outcome b = invoke(file_args);
      EXPECT_EQ(a.code, 0) << cmd[0] << ' ' << cmd[1] << ": " << a.err;
      EXPECT_EQ(a.out, b.out) << cmd[0] << ' ' << cmd[1];
    }
  }
  for (const std::string sub : {"det", "build", "disccurve"}) {
    const Outcome a = invoke({"detrep", sub, "--matrix", kMatrix, "--output", "json"});
    const Outcome b = invoke({"detrep", sub, "--file", matrix, "--output", "json"});
    const Outcome c = invoke({"detrep", sub, "--matrix", matrix, "--output", "json"});
    EXPECT_EQ(a.code, 0) << sub << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << sub;
    EXPECT_EQ(a.out, c.out) << sub;
  }
}

TEST(CliTest, DetrepPipeline) {
  const std::string det = invoke({"detrep", "det", "--matrix", kMatrix}).out;
  const std::string curve = invoke({"detrep", "disccurve", "--matrix", kMatrix}).out;
  EXPECT_EQ(det, curve);
  const std::string cubic = invoke({"detrep", "build", "--matrix", kMatrix}).out;
  ASSERT_FALSE(cubic.empty());
  const std::string from_form =
      invoke({"detrep", "disccurve", "--form", cubic.substr(0, cubic.size() - 1)}).out;
  EXPECT_EQ(from_form, curve);
  const std::string form_file = temp_file("fermat.txt", "X0^6 + X1^6 + X2^6\n");
  const Outcome scan = invoke({"detrep", "smoothcurve", "--file", form_file, "--prime", "7"});
  EXPECT_EQ(scan.code, 0);
  EXPECT_EQ(scan.out, "smooth mod p (57 points scanned)\n");
}

TEST(CliTest, ReproIsDeterministic) {
  for (const std::string suite : {"exe", "p369", "mainteo"}) {
    const Outcome a = invoke({"repro", suite, "--output", "json"});
    const Outcome b = invoke({"repro", suite, "--output", "json"});
    EXPECT_EQ(a.code, 0) << suite << ": " << a.out;
    EXPECT_EQ(a.out, b.out) << suite;
    EXPECT_NE(a.out.find("\"citations\""), std::string::npos);
    EXPECT_NE(a.out.find("\"all_pass\": true"), std::string::npos) << suite;
  }
}

TEST(CliTest, JsonEnvelope) {
  const Outcome o = invoke({"lat", "disc", "--gram", kExe, "--output", "json"});
  for (const std::string key : {"\"command\": \"lat disc\"", "\"inputs\"", "\"result\": 32", "\"citations\""})
    EXPECT_NE(o.out.find(key), std::string::npos) << key;
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"lat"}).code, 2);
  EXPECT_EQ(invoke({"lat", "nosuch"}).code, 2);
  EXPECT_EQ(invoke({"lat", "disc"}).code, 2);
  EXPECT_EQ(invoke({"lat", "disc", "--gram", "[[1,2],[3,4]]"}).code, 2);
  EXPECT_EQ(invoke({"lat", "disc", "--gram", "[[1,2"}).code, 2);
  EXPECT_EQ(invoke({"lat", "disc", "--gram", kExe, "--file", "x"}).code, 2);
  EXPECT_EQ(invoke({"lat", "disc", "--file", "/nonexistent/planecubic.json"}).code, 2);
  EXPECT_EQ(invoke({"repro", "exe", "--output", "xml"}).code, 2);
  EXPECT_EQ(invoke({"repro", "exe", "--enum-cap", "0"}).code, 2);
  EXPECT_EQ(invoke({"repro", "exe", "--long-root-variant", "other"}).code, 2);
  EXPECT_EQ(invoke({"fourfold", "nsax", "--dns", "-9", "--eps", "3"}).code, 2);
  EXPECT_EQ(invoke({"enum", "longroots", "--gram", "[[24,24],[24,28]]"}).code, 2);
  EXPECT_EQ(invoke({"lat", "milgram", "--gram", kExe, "--enum-cap", "10"}).code, 2);
  EXPECT_EQ(invoke({"detrep", "smoothfourfold", "--form", "Z1^3+X0^3", "--prime", "11"}).code, 2);
  EXPECT_EQ(invoke({"detrep", "smoothfourfold", "--form", "Z1^3+X0^3", "--prime", "11",
                    "--scan-prime-cap", "11"})
                .code,
            0);
  // A reproduction check that fails under a non-default variant exits 1.
  EXPECT_EQ(invoke({"repro", "p369", "--long-root-variant", "against-A0"}).code, 1);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(CliTest, UsagePrintsGrammar) {
  const Outcome o = invoke({"lat", "disc"});
  EXPECT_NE(o.err.find("fourfold {delta|oddelta|trivrat|formula|nsax|family|mayanskiy|pfaffian}"),
            std::string::npos);
}

}  // namespace
}  // namespace planecubic::cli
