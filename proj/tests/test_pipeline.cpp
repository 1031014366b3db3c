#include <gtest/gtest.h>

#include "nakajima/json_io.hpp"
#include "nakajima/pipeline.hpp"
#include "nakajima/suites.hpp"

using namespace nakajima;

namespace {
CycScalar q(long v) { return CycScalar(1, v); }
std::string fixture(const std::string& name) { return std::string(NAKAJIMA_FIXTURES) + "/" + name; }
}  // namespace

TEST(Pipeline, RankOneMatchesFrozenFixture) {
  QuiverData d = quiver_from_json(read_json_file(fixture("cm_n1.json")));
  PipelineResult r = quiver_to_adelic(d);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.point.p, Poly::x());
  EXPECT_EQ(r.point.U.dim(), 1u);
  AdelicPoint frozen = adelic_from_json(read_json_file(fixture("cm_n1_adelic.json")));
  EXPECT_EQ(frozen.U, r.point.U);
  EXPECT_EQ(frozen.p, r.point.p);
  // The constant 1 generates U: the classical point of Wilson's Grassmannian for p = x.
  PointModel M = r.point.model();
  EXPECT_TRUE(r.point.U.contains(M.embed(0, Poly::constant(q(1)))));
}

TEST(Pipeline, Postconditions) {
  for (const auto& name : {"cm_n2.json", "cyclic_m2.json"}) {
    QuiverData d = quiver_from_json(read_json_file(fixture(name)));
    PipelineResult r = quiver_to_adelic(d);
    EXPECT_TRUE(r.primary.ok()) << name;
    EXPECT_TRUE(r.diff_matches) << name;
    EXPECT_TRUE(r.symb.is_base_point) << name;
    EXPECT_TRUE(r.dim_ok) << name;
    EXPECT_EQ(static_cast<long>(r.point.U.dim()), static_cast<long>(r.point.p.degree()) * d.r());
  }
}

TEST(Pipeline, EmptyVGivesBasePoint) {
  QuiverData d = zero_quiver(GroupAlgElem::one(1), {0}, {1});
  PipelineResult r = quiver_to_adelic(d);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.point.p.degree(), 0);
  EXPECT_EQ(r.point.U.dim(), 0u);
}

TEST(Pipeline, RejectsBadInput) {
  // With I = 0 the data is unstable; for generic tau it cannot be admissible either.
  QuiverData d = zero_quiver(GroupAlgElem::one(1), {1}, {1});
  d.J[0](0, 0) = q(1);
  EXPECT_FALSE(is_stable(d).stable);
  EXPECT_THROW(quiver_to_adelic(d), std::invalid_argument);
  QuiverData z = generate_cm(1, q(1));
  z.tau = GroupAlgElem::zero(1);
  EXPECT_THROW(quiver_to_adelic(z), std::invalid_argument);
}

TEST(Pipeline, DeterministicAcrossJobs) {
  QuiverData d = generate_cm(3, q(1));
  PipelineOptions a, b;
  b.jobs = 3;
  PipelineResult ra = quiver_to_adelic(d, a), rb = quiver_to_adelic(d, b);
  EXPECT_EQ(to_json(ra.point).dump(), to_json(rb.point).dump());
  EXPECT_EQ(ra.log, rb.log);
}

TEST(Pipeline, LargerBoundsAgree) {
  QuiverData d = generate_cm(2, q(1));
  PipelineOptions small, big;
  big.max_k = big.max_l = 4;
  EXPECT_EQ(quiver_to_adelic(d, small).point.U, quiver_to_adelic(d, big).point.U);
}
