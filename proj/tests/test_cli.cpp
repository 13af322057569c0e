// End-to-end tests of the conecert binary: exit codes, file formats, and the
// certificate round trip through `verify`.

#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#ifndef CONECERT_CLI_PATH
#error "CONECERT_CLI_PATH must point at the built binary"
#endif

namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("conecert_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    write("stable2.mat", "2 2\n-2 1\n1 -2\n");
    write("nonmetzler.mat", "2 2\n-1 -0.5\n0 -1\n");
    write("unstable.mat", "2 2\n0 1\n1 0\n");
    write("diag.mat", "2 2\n1 0\n0 2\n");
    write("b0.mat", "2 2\n0 0\n0 0\n");
    write("orthant2.spec", "orthant 2\n");
    write("bad.mat", "2 2\n1 2\n3 oops\n");
  }

  void TearDown() override { fs::remove_all(dir_); }

  void write(const std::string& name, const std::string& content) {
    std::ofstream out(dir_ / name);
    out << content;
  }

  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }

  int run(const std::string& args) const {
    std::string cmd = std::string(CONECERT_CLI_PATH) + " " + args +
                      " >" + path("stdout.txt") + " 2>" + path("stderr.txt");
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
  }

  std::string stdout_text() const {
    std::ifstream in(path("stdout.txt"));
    return std::string(std::istreambuf_iterator<char>(in), {});
  }

  fs::path dir_;
};

TEST_F(CliTest, StabilityPrintsWitness) {
  int rc = run("stability -A " + path("stable2.mat") + " -K " +
               path("orthant2.spec"));
  EXPECT_EQ(rc, 0);
  EXPECT_NE(stdout_text().find("v = "), std::string::npos);
}

TEST_F(CliTest, StabilityFailsOnUnstable) {
  int rc = run("stability -A " + path("unstable.mat") + " -K " +
               path("orthant2.spec"));
  EXPECT_EQ(rc, 1);
}

TEST_F(CliTest, CheckQmExitCodes) {
  EXPECT_EQ(run("check-qm -A " + path("stable2.mat") + " -K " +
                path("orthant2.spec")),
            0);
  int rc = run("check-qm -A " + path("nonmetzler.mat") + " -K " +
               path("orthant2.spec"));
  EXPECT_EQ(rc, 1);
  EXPECT_NE(stdout_text().find("violation"), std::string::npos);
}

TEST_F(CliTest, ParseErrorIsExitThree) {
  int rc = run("check-qm -A " + path("bad.mat") + " -K " +
               path("orthant2.spec"));
  EXPECT_EQ(rc, 3);
  EXPECT_EQ(run("check-qm -A " + path("missing.mat") + " -K " +
                path("orthant2.spec")),
            3);
}

TEST_F(CliTest, CheckDiffusiveAndNonneg) {
  EXPECT_EQ(run("check-diffusive -D " + path("diag.mat") + " -K " +
                path("orthant2.spec")),
            0);
  EXPECT_EQ(run("check-nonneg -B " + path("nonmetzler.mat") + " -K " +
                path("orthant2.spec")),
            1);
}

TEST_F(CliTest, LyapunovCertificateRoundTrip) {
  std::string cert = path("cert.json");
  EXPECT_EQ(run("lyapunov -A " + path("stable2.mat") + " -K " +
                path("orthant2.spec") + " -o " + cert),
            0);
  EXPECT_EQ(run("verify -i " + cert), 0);
}

TEST_F(CliTest, RiccatiCertificateRoundTrip) {
  std::string cert = path("ricc.json");
  EXPECT_EQ(run("riccati -A " + path("stable2.mat") + " -B " + path("b0.mat") +
                " -K " + path("orthant2.spec") + " -o " + cert),
            0);
  EXPECT_EQ(run("verify -i " + cert), 0);
}

TEST_F(CliTest, DStability) {
  EXPECT_EQ(run("d-stability -A " + path("stable2.mat") + " -E " +
                path("diag.mat") + " -K " + path("orthant2.spec")),
            0);
  // singular E is an input error
  EXPECT_EQ(run("d-stability -A " + path("stable2.mat") + " -E " +
                path("b0.mat") + " -K " + path("orthant2.spec")),
            3);
}

TEST_F(CliTest, CommonRiccatiFeasiblePair) {
  int rc = run("common-riccati --pairs " + path("stable2.mat") + " " +
               path("b0.mat") + " --resolution 30");
  EXPECT_EQ(rc, 0);
}

TEST_F(CliTest, CommonRiccatiCertifiedInfeasible) {
  int rc = run("common-riccati --pairs " + path("unstable.mat") + " " +
               path("b0.mat") + " --resolution 30");
  EXPECT_EQ(rc, 1);
}

TEST_F(CliTest, PsdDemo) {
  EXPECT_EQ(run("psd-demo"), 0);
  EXPECT_EQ(run("--format json psd-demo"), 0);
}

TEST_F(CliTest, ReproduceCounterexampleReportsDeviation) {
  std::string report = path("report.json");
  int rc = run("reproduce-counterexample --resolution 20 -o " + report);
  // the bundled data admits a common (D, Q), so the published infeasibility
  // claim does not reproduce and the command signals the deviation
  EXPECT_EQ(rc, 1);
  std::ifstream in(report);
  std::string text(std::istreambuf_iterator<char>(in), {});
  EXPECT_NE(text.find("\"verdict\": \"feasible\""), std::string::npos);
}

TEST_F(CliTest, TolOptionValidation) {
  EXPECT_EQ(run("--tol -1 check-qm -A " + path("stable2.mat") + " -K " +
                path("orthant2.spec")),
            3);
}

}  // namespace
