// Copyright 2026 The Translucent Authors
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
//
////////////////////////////////////////////////////////////////////////////////

// Drives the `translucent` executable end to end.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "translucent/cli_io.hpp"
#include "translucent/escrow_params.hpp"

namespace translucent {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(TRANSLUCENT_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 512> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) {
    result.out += buf.data();
  }
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           (std::string("translucent_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  RunResult run(const std::string& args) const { return run_cli(args); }

  // toy23 setup plus both key pairs.
  void make_keys(std::uint32_t t = 3) const {
    ASSERT_EQ(run("setup --preset toy23 --out " + path("g")).exit_code, 0);
    ASSERT_EQ(run("escrow-keygen --global " + path("g") + " --t " +
                  std::to_string(t) + " --seed 1 --out-public " + path("ep") +
                  " --out-secret " + path("es"))
                  .exit_code,
              0);
    ASSERT_EQ(run("keygen --global " + path("g") + " --seed 2 --out-public " +
                  path("rp") + " --out-secret " + path("rs"))
                  .exit_code,
              0);
  }

  fs::path dir_;
};

TEST_F(CliTest, SetupWritesPresetAndCustomGroups) {
  ASSERT_EQ(run("setup --preset toy23 --out " + path("g")).exit_code, 0);
  EXPECT_EQ(decode_record_as<GlobalParams>(read_text_file(path("g"))),
            setup_global(Preset::kToy23));
  ASSERT_EQ(run("setup --rho 17 --g 5 --factors 2,b --seed ACLU-1999 --out " +
                path("c"))
                .exit_code,
            0);
  EXPECT_EQ(decode_record_as<GlobalParams>(read_text_file(path("c"))).u.residue(),
            BigNat(10));
  EXPECT_EQ(run("setup --rho 17 --g 2 --factors 2,b --seed s --out " + path("x"))
                .exit_code,
            2);
  EXPECT_EQ(run("setup --rho 16 --g 5 --factors 2,b --seed s --out " + path("x"))
                .exit_code,
            2);
  EXPECT_EQ(run("setup --preset toy99 --out " + path("x")).exit_code, 1);
  EXPECT_EQ(run("setup --rho 17 --out " + path("x")).exit_code, 1);
  EXPECT_FALSE(fs::exists(path("x")));
}

TEST_F(CliTest, HonestFlow) {
  make_keys();
  const EscrowSecret secret =
      decode_record_as<EscrowSecret>(read_text_file(path("es")));
  const std::string common = "--global " + path("g") + " --recipient " +
                             path("rp") + " --params " + path("ep") +
                             " --s d --k 3";
  for (std::uint32_t i = 1; i <= 3; ++i) {
    const std::string ct = path("ct" + std::to_string(i));
    ASSERT_EQ(run("encrypt " + common + " --i " + std::to_string(i) + " --out " + ct)
                  .exit_code,
              0);
    const RunResult bob =
        run("decrypt --global " + path("g") + " --secret " + path("rs") + " --ct " + ct);
    EXPECT_EQ(bob.exit_code, 0);
    EXPECT_EQ(bob.out, "d\n");
    const RunResult larry = run("escrow-decrypt --global " + path("g") +
                                " --escrow-secret " + path("es") + " --ct " + ct);
    EXPECT_EQ(larry.exit_code, 0);
    EXPECT_EQ(larry.out, i == secret.ell ? "d\n" : "not-attempted\n");
  }
}

TEST_F(CliTest, EncryptDrawsNonceFromSeed) {
  make_keys();
  const std::string common = "encrypt --global " + path("g") + " --recipient " +
                             path("rp") + " --params " + path("ep") +
                             " --s 5 --i 1 --seed 9 --out ";
  ASSERT_EQ(run(common + path("a")).exit_code, 0);
  ASSERT_EQ(run(common + path("b")).exit_code, 0);
  EXPECT_EQ(read_text_file(path("a")), read_text_file(path("b")));
  EXPECT_EQ(run("encrypt --global " + path("g") + " --recipient " + path("rp") +
                " --params " + path("ep") + " --s 5 --i 1 --out " + path("c"))
                .exit_code,
            1);
  EXPECT_EQ(run("encrypt --global " + path("g") + " --recipient " + path("rp") +
                " --params " + path("ep") + " --s 0 --k 3 --i 1 --out " + path("c"))
                .exit_code,
            2);
  EXPECT_EQ(run("encrypt --global " + path("g") + " --recipient " + path("rp") +
                " --params " + path("ep") + " --s 5 --k 3 --i 4 --out " + path("c"))
                .exit_code,
            2);
}

TEST_F(CliTest, MalformedFlow) {
  make_keys();
  const EscrowSecret secret =
      decode_record_as<EscrowSecret>(read_text_file(path("es")));
  const EscrowParams params =
      decode_record_as<EscrowParams>(read_text_file(path("ep")));
  const std::string i = std::to_string(secret.ell);
  const std::string common = "encrypt-malformed --global " + path("g") +
                             " --recipient " + path("rp") + " --params " +
                             path("ep") + " --s d --k 3 --i " + i;
  ASSERT_EQ(run(common + " --forge --seed 4 --out " + path("ct")).exit_code, 0);
  EXPECT_EQ(run("decrypt --global " + path("g") + " --secret " + path("rs") +
                " --ct " + path("ct"))
                .out,
            "d\n");
  const RunResult larry = run("escrow-decrypt --global " + path("g") +
                              " --escrow-secret " + path("es") + " --ct " + path("ct"));
  EXPECT_EQ(larry.exit_code, 0);
  EXPECT_NE(larry.out, "not-attempted\n");

  // An explicit off-list element, chosen here from the published chain.
  std::uint64_t v_hat = 1;
  while (std::find(params.chain.begin(), params.chain.end(),
                   GroupElement(BigNat(v_hat), BigNat(23))) != params.chain.end()) {
    ++v_hat;
  }
  ASSERT_EQ(run(common + " --vhat " + BigNat(v_hat).to_hex() + " --out " + path("ct2"))
                .exit_code,
            0);
  EXPECT_EQ(run(common + " --out " + path("ct3")).exit_code, 1);
  EXPECT_EQ(run(common + " --forge --vhat 3 --out " + path("ct3")).exit_code, 1);
}

TEST_F(CliTest, EscrowDecryptForce) {
  make_keys();
  const EscrowSecret secret =
      decode_record_as<EscrowSecret>(read_text_file(path("es")));
  const std::uint32_t other = secret.ell == 1 ? 2 : 1;
  ASSERT_EQ(run("encrypt --global " + path("g") + " --recipient " + path("rp") +
                " --params " + path("ep") + " --s d --k 3 --i " +
                std::to_string(other) + " --out " + path("ct"))
                .exit_code,
            0);
  const std::string base = "escrow-decrypt --global " + path("g") +
                           " --escrow-secret " + path("es") + " --ct " + path("ct");
  EXPECT_EQ(run(base).out, "not-attempted\n");
  const RunResult forced = run(base + " --force");
  EXPECT_EQ(forced.exit_code, 0);
  EXPECT_NE(forced.out, "not-attempted\n");
}

TEST_F(CliTest, VerifyParamsExitCodes) {
  make_keys(4);
  const RunResult ok =
      run("verify-params --global " + path("g") + " --params " + path("ep"));
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_EQ(ok.out, "well-formed: t=4 epoch=0\n");

  // A consistently encoded file whose chain is broken.
  EscrowParams tampered =
      decode_record_as<EscrowParams>(read_text_file(path("ep")));
  const BigNat v3 = tampered.chain[2].residue();
  tampered.chain[2] =
      GroupElement(v3 == BigNat(22) ? BigNat(1) : v3 + BigNat(1), BigNat(23));
  write_text_file_atomic(path("bad"), encode_record(tampered));
  const RunResult bad =
      run("verify-params --global " + path("g") + " --params " + path("bad"));
  EXPECT_EQ(bad.exit_code, 2);
  EXPECT_EQ(bad.out, "MALFORMED: t=4 epoch=0\n");

  // Chain from a different group.
  ASSERT_EQ(run("setup --preset test64 --out " + path("g64")).exit_code, 0);
  EXPECT_EQ(run("verify-params --global " + path("g64") + " --params " + path("ep"))
                .exit_code,
            2);
}

TEST_F(CliTest, BadFilesAndUsage) {
  make_keys();
  EXPECT_EQ(run("verify-params --global " + path("missing") + " --params " +
                path("ep"))
                .exit_code,
            1);
  write_text_file_atomic(path("trunc"), read_text_file(path("ep")).substr(0, 20));
  EXPECT_EQ(run("verify-params --global " + path("g") + " --params " + path("trunc"))
                .exit_code,
            2);
  // Wrong record kind.
  EXPECT_EQ(run("verify-params --global " + path("g") + " --params " + path("es"))
                .exit_code,
            2);
  EXPECT_EQ(run("").exit_code, 1);
  EXPECT_EQ(run("frobnicate").exit_code, 1);
  EXPECT_EQ(run("decrypt --global " + path("g")).exit_code, 1);
  EXPECT_EQ(run("--help").exit_code, 0);
}

TEST_F(CliTest, SimulateIsDeterministic) {
  const std::string args =
      "simulate --preset toy23 --t 4 --sessions 500 --epochs 2 --strategy "
      "evading --disclosure-at 100 --seed 77 --out-csv ";
  ASSERT_EQ(run(args + path("a.csv")).exit_code, 0);
  ASSERT_EQ(run(args + path("b.csv")).exit_code, 0);
  EXPECT_EQ(read_text_file(path("a.csv")), read_text_file(path("b.csv")));
  EXPECT_EQ(run(args + "-").out, read_text_file(path("a.csv")));
}

TEST_F(CliTest, SimulateStrategiesAndErrors) {
  const RunResult single = run(
      "simulate --preset toy23 --t 1 --sessions 10 --out-csv -");
  EXPECT_EQ(single.exit_code, 0);
  EXPECT_EQ(single.out,
            "epoch,sessions,attempted,correct,believed_rate,actual_rate,"
            "inferred_index\n0,10,10,10,1.0000,1.0000,\n");
  const RunResult malformed = run(
      "simulate --preset test64 --t 4 --sessions 10 --strategy malformed "
      "--index good --out-csv -");
  EXPECT_EQ(malformed.exit_code, 0);
  EXPECT_NE(malformed.out.find("\n0,10,10,0,1.0000,0.0000,\n"), std::string::npos);
  EXPECT_EQ(run("simulate --strategy sneaky --out-csv -").exit_code, 1);
  EXPECT_EQ(run("simulate --strategy malformed --index 9 --t 4 --out-csv -")
                .exit_code,
            1);
  EXPECT_EQ(run("simulate --sessions 10 --disclosure-at 11 --out-csv -").exit_code,
            1);
  EXPECT_EQ(run("simulate --t 1 --strategy evading --out-csv -").exit_code, 1);
}

}  // namespace
}  // namespace translucent
