// Copyright 2026 The pgqlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult Exec(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + PGQLAB_BIN + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string Fx(const std::string& name) {
  return std::string(PGQLAB_FIXTURES) + "/" + name;
}

std::string WriteTemp(const std::string& name, const std::string& text) {
  std::string path = ::testing::TempDir() + name;
  FILE* f = fopen(path.c_str(), "w");
  fputs(text.c_str(), f);
  fclose(f);
  return path;
}

TEST(CliTest, EvalFormula) {
  RunResult r = Exec("eval --db " + Fx("chain.json") + " --formula " +
                    Fx("reach.fo") + " --order x,y");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"arity\":2,\"rows\":[[1,1],[1,2],[1,3],[1,4]]}\n");
}

TEST(CliTest, EvalQuery) {
  RunResult r = Exec("eval --db " + Fx("colored.json") + " --query " +
                    Fx("alternating.pgq"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"arity\":0,\"rows\":[[]]}\n");
}

TEST(CliTest, Classify) {
  EXPECT_EQ(Exec("classify --db " + Fx("weighted.json") + " --query " +
                Fx("increasing.pgq"))
                .out,
            "EXT(4)\n");
  EXPECT_EQ(Exec("classify --formula " + Fx("reach.fo")).out, "FO[TC^1]\n");
  EXPECT_EQ(Exec("classify --formula " + Fx("forall.fo")).out, "FO\n");
}

TEST(CliTest, TranslateReparses) {
  RunResult fwd = Exec("translate --query " + Fx("transfers.pgq") +
                      " --db " + Fx("bank.json") + " --to fotc");
  ASSERT_EQ(fwd.code, 0);
  std::string f = WriteTemp("t.fo", fwd.out);
  RunResult cls = Exec("classify --formula " + f);
  EXPECT_EQ(cls.code, 0);
  for (const char* s : {"iterate", "embed"}) {
    RunResult back = Exec("translate --formula " + Fx("reach.fo") +
                         " --schema R:2,U:1 --order x,y --to pgq --strategy " +
                         s);
    ASSERT_EQ(back.code, 0) << s;
    std::string q = WriteTemp(std::string("r_") + s + ".pgq", back.out);
    RunResult ev = Exec("eval --db " + Fx("chain.json") + " --query " + q);
    EXPECT_EQ(ev.out, "{\"arity\":2,\"rows\":[[1,1],[1,2],[1,3],[1,4]]}\n")
        << s;
  }
}

TEST(CliTest, ValidateView) {
  RunResult bad = Exec("validate-view --db " + Fx("view.json") +
                      " --rels N,E,S2,T,L,P");
  EXPECT_EQ(bad.code, 0);
  EXPECT_NE(bad.out.find("\"valid\":false"), std::string::npos);
  RunResult good = Exec("validate-view --db " + Fx("view.json") +
                       " --rels N,E,S,T,L0,P");
  EXPECT_NE(good.out.find("\"valid\":true"), std::string::npos);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(Exec("").code, 1);
  EXPECT_EQ(Exec("frobnicate").code, 1);
  EXPECT_EQ(Exec("eval --db " + Fx("chain.json")).code, 1);
  EXPECT_EQ(Exec("difftest --suite nope").code, 1);
  // Static: syntax error and unknown relation.
  std::string junk = WriteTemp("junk.pgq", "REL R UNION");
  EXPECT_EQ(Exec("eval --db " + Fx("chain.json") + " --query " + junk).code, 2);
  std::string unknown = WriteTemp("unknown.pgq", "REL Nope");
  EXPECT_EQ(Exec("eval --db " + Fx("chain.json") + " --query " + unknown).code,
            2);
  std::string declared = WriteTemp(
      "arity.pgq",
      "MATCH (x) OUTPUT(x) ON(REL N; REL E; REL S; REL T; REL L0; REL P) "
      "ARITY 2");
  EXPECT_EQ(Exec("eval --db " + Fx("view.json") + " --query " + declared).code,
            2);
  // Runtime: a view that is not a property graph.
  std::string view = WriteTemp(
      "badview.pgq", "MATCH (x) OUTPUT(x) ON(N; E; S2; T; L; P)");
  EXPECT_EQ(Exec("eval --db " + Fx("view.json") + " --query " + view).code, 3);
  // Mismatch under an injected fault.
  EXPECT_EQ(Exec("difftest --suite endpoint-vs-path --cases 200 --fault "
                "drop-zero-repetition")
                .code,
            4);
  EXPECT_EQ(Exec("difftest --suite alternating --cases 20").code, 0);
}

TEST(CliTest, SeedFromEnvironment) {
  std::string a = Exec("difftest --suite view-validation --cases 5 --seed 3").out;
  std::string b = Exec("difftest --suite view-validation --cases 5 --seed 9",
                      "PGQLAB_SEED=3")
                      .out;
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("\"seed\":3"), std::string::npos);
}

TEST(CliTest, Deterministic) {
  for (const std::string& args :
       {std::string("demo"),
        std::string("difftest --suite all --cases 10 --seed 5"),
        "translate --query " + Fx("composite.pgq") + " --db " +
            Fx("weighted.json") + " --to fotc --json"}) {
    RunResult a = Exec(args), b = Exec(args);
    EXPECT_EQ(a.code, b.code) << args;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty()) << args;
  }
}

}  // namespace
