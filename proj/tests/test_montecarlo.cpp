#include <cmath>

#include "doctest.h"
#include "myriad/errors.hpp"
#include "myriad/montecarlo.hpp"

using namespace myriad;

TEST_CASE("study is reproducible per seed") {
  const StudyResult a = run_study(0.0, 1.0, 20, 50, 99);
  const StudyResult b = run_study(0.0, 1.0, 20, 50, 99);
  REQUIRE(a.records.size() == 50);
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].a_hat == b.records[i].a_hat);
    CHECK(a.records[i].gamma_hat == b.records[i].gamma_hat);
    CHECK(a.records[i].iterations_gmf == b.records[i].iterations_gmf);
    CHECK(a.records[i].iterations_fast == b.records[i].iterations_fast);
  }
  CHECK(a.summary.mean_iter_gmf == b.summary.mean_iter_gmf);
}

TEST_CASE("summary aggregates the records") {
  const StudyResult r = run_study(0.0, 2.0, 15, 40, 7);
  double mean_a = 0.0;
  for (const TrialRecord& t : r.records) mean_a += t.a_hat;
  mean_a /= 40.0;
  CHECK(r.summary.mean_a == doctest::Approx(mean_a).epsilon(1e-12));

  double sd = 0.0;
  for (const TrialRecord& t : r.records) sd += (t.a_hat - mean_a) * (t.a_hat - mean_a);
  sd = std::sqrt(sd / 39.0);  // N-1 denominator
  CHECK(r.summary.sd_a == doctest::Approx(sd).epsilon(1e-12));

  double mse = 0.0;
  for (const TrialRecord& t : r.records) mse += t.a_hat * t.a_hat;
  CHECK(r.summary.mse_a == doctest::Approx(mse / 40.0).epsilon(1e-12));

  for (const TrialRecord& t : r.records) {
    CHECK(t.iterations_gmf >= 1);
    CHECK(t.iterations_fast >= 1);
  }
}

TEST_CASE("iteration counts are scale-equivariant") {
  // For location 0, scaling the noise level by a power of two scales every
  // intermediate quantity exactly, including the stopping test, so the
  // iteration-count sequences coincide bit for bit.
  const StudyResult g1 = run_study(0.0, 1.0, 20, 1000, 1234);
  const StudyResult g4 = run_study(0.0, 4.0, 20, 1000, 1234);
  REQUIRE(g1.records.size() == g4.records.size());
  for (std::size_t i = 0; i < g1.records.size(); ++i) {
    CHECK(g1.records[i].iterations_gmf == g4.records[i].iterations_gmf);
    CHECK(g1.records[i].iterations_fast == g4.records[i].iterations_fast);
    CHECK(g4.records[i].gamma_hat == 4.0 * g1.records[i].gamma_hat);
    CHECK(g4.records[i].a_hat == 4.0 * g1.records[i].a_hat);
  }
}

TEST_CASE("iteration counts fall as the sample grows") {
  const StudyResult n10 = run_study(0.0, 1.0, 10, 1500, 5);
  const StudyResult n50 = run_study(0.0, 1.0, 50, 1500, 5);
  const StudyResult n100 = run_study(0.0, 1.0, 100, 1500, 5);
  CHECK(n10.summary.mean_iter_gmf > n50.summary.mean_iter_gmf);
  CHECK(n50.summary.mean_iter_gmf > n100.summary.mean_iter_gmf);
  CHECK(n10.summary.mean_iter_fast > n50.summary.mean_iter_fast);
  CHECK(n50.summary.mean_iter_fast > n100.summary.mean_iter_fast);
}

TEST_CASE("study preconditions") {
  CHECK_THROWS_AS(run_study(0.0, 1.0, 2, 100, 1), PreconditionError);
  CHECK_THROWS_AS(run_study(0.0, 1.0, 10, 1, 1), PreconditionError);
  CHECK_THROWS_AS(run_study(0.0, -1.0, 10, 100, 1), PreconditionError);
}
