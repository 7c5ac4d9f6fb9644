#include <doctest.h>

#include "radix/cli.hpp"
#include "radix/rational.hpp"

using namespace radix;
using json = nlohmann::ordered_json;

namespace {

JobSpec job_of(std::string cmd, std::vector<RadicalDescriptor> rads) {
  JobSpec j;
  j.command = std::move(cmd);
  j.radicals = std::move(rads);
  return j;
}

}  // namespace

TEST_CASE("analyze on the cube root of two") {
  RunResult r = run_job(job_of("analyze", {{3, 2}}));
  CHECK(r.exit_code == 0);
  CHECK(r.report["schema"] == "radix-hopf/1");
  CHECK(r.report["structures"] == 1);
  CHECK(r.report["almost_classical"] == true);
  CHECK(r.report["complement"] == "Q(zeta_3)");
  CHECK(r.report["h_cyclic"] == true);
}

TEST_CASE("freeness with both bases") {
  JobSpec j = job_of("freeness", {{3, 2}});
  j.basis = "both";
  RunResult r = run_job(j);
  CHECK(r.exit_code == 0);
  CHECK(r.report["verdict"] == "free");
  CHECK(r.report["generator"] == "1+a+a^2");
  CHECK(r.report["paths_agree"] == true);
}

TEST_CASE("rank of 2 and -3 modulo cubes") {
  JobSpec j;
  j.command = "rank";
  j.exponent = 3;
  j.radicands = {2, -3};
  RunResult r = run_job(j);
  CHECK(r.exit_code == 0);
  CHECK(r.report["rank"] == 2);
}

TEST_CASE("negative verdicts exit with 2 and carry a witness") {
  RunResult r = run_job(job_of("product", {{3, 2}, {6, -3}}));
  CHECK(r.exit_code == 2);
  CHECK(r.report["witness"]["code"] == "NotStronglyDisjoint");

  JobSpec t;
  t.command = "analyze";
  t.exponent = 3;
  t.radicands = {2, 16};
  r = run_job(t);
  CHECK(r.exit_code == 2);
  CHECK(r.report["rank"] == 1);
}

TEST_CASE("malformed jobs exit with 1") {
  CHECK(run_job(job_of("nosuch", {{3, 2}})).exit_code == 1);
  CHECK(run_job(job_of("analyze", {{2, 4}})).exit_code == 1);
  JobSpec j = job_of("analyze", {{3, 2}});
  j.cap = 9;
  CHECK(run_job(j).exit_code == 1);
  CHECK(run_job(job_of("padic", {{3, 2}})).exit_code == 1);
}

TEST_CASE("reports re-parse and render deterministically") {
  std::vector<JobSpec> jobs = {job_of("analyze", {{3, 2}}),     job_of("enumerate", {{4, 2}}),
                               job_of("assoc-order", {{5, 2}}), job_of("product", {{2, 2}, {3, 3}}),
                               job_of("freeness", {{2, 2}, {3, 3}})};
  JobSpec pj = job_of("padic", {{3, 9}});
  pj.p = 3;
  jobs.push_back(pj);
  jobs[2].basis = "both";
  for (auto& j : jobs) {
    RunResult a = run_job(j), b = run_job(j);
    CHECK(a.exit_code == 0);
    std::string text = render(a.report, "json");
    CHECK(text == render(b.report, "json"));
    CHECK(json::parse(text) == a.report);
    std::string table = render(a.report, "table");
    CHECK(table.find("schema: radix-hopf/1") != std::string::npos);
    if (a.report.contains("verdict"))
      CHECK(table.find("verdict: " + a.report["verdict"].get<std::string>()) != std::string::npos);
  }
  CHECK(jobs.size() == 6);
  CHECK(run_job(jobs[3]).report["tensor"]["lattice_equal"] == true);
  CHECK(run_job(jobs[2]).report["paths_agree"] == true);
}
