#include <gtest/gtest.h>

#include <filesystem>

#include "nakajima/json_io.hpp"
#include "nakajima/suites.hpp"

using namespace nakajima;

namespace {
std::string fixture(const std::string& name) { return std::string(NAKAJIMA_FIXTURES) + "/" + name; }
}  // namespace

TEST(JsonIo, Scalars) {
  EXPECT_EQ(rational_from_json(to_json(Rational(-3, 7))), Rational(-3, 7));
  EXPECT_EQ(rational_from_json(Json(4)), Rational(4));
  CycScalar z = CycScalar::zeta_power(5, 3) + CycScalar(5, 2L);
  EXPECT_EQ(cyc_from_json(to_json(z), 5), z);
  EXPECT_EQ(cyc_from_json(Json("1/2"), 3), CycScalar(3, Rational(1, 2)));
}

TEST(JsonIo, GroupAlgebra) {
  GroupAlgElem t = GroupAlgElem::from_charvals({CycScalar(3, 1L), CycScalar(3, -2L), CycScalar::zeta_power(3, 1)});
  EXPECT_EQ(group_from_json(to_json(t)), t);
  EXPECT_EQ(group_from_json(to_json(t, true)), t);
  EXPECT_THROW(group_from_json(Json{{"m", 2}, {"charvals", {"1"}}}), std::invalid_argument);
}

TEST(JsonIo, ParseTau) {
  EXPECT_EQ(parse_tau("1", 2), GroupAlgElem::one(2));
  EXPECT_EQ(parse_tau("1,-1/2", 2), GroupAlgElem::from_charvals({CycScalar(2, 1L), CycScalar(2, Rational(-1, 2))}));
  EXPECT_EQ(parse_tau(R"({"m":1,"charvals":["3"]})", 1), GroupAlgElem::scalar(1, CycScalar(1, 3L)));
  EXPECT_THROW(parse_tau("1,2,3", 2), std::invalid_argument);
}

TEST(JsonIo, MatricesNestedAndFlat) {
  Json nested = Json::array({Json::array({"1", "2"}), Json::array({"3", "4"})});
  Json flat = Json::array({"1", "2", "3", "4"});
  EXPECT_EQ(matrix_from_json(nested, 2, 2, 1), matrix_from_json(flat, 2, 2, 1));
  EXPECT_THROW(matrix_from_json(flat, 3, 2, 1), std::invalid_argument);
}

TEST(JsonIo, QuiverRoundtrip) {
  QuiverData d = cyclic_m2_instance();
  QuiverData e = quiver_from_json(to_json(d));
  EXPECT_EQ(to_json(e), to_json(d));
  Json bad = to_json(d);
  bad["dimsV"] = {2, 1};
  EXPECT_THROW(quiver_from_json(bad), std::invalid_argument);
}

TEST(JsonIo, FixturesMatchGenerators) {
  EXPECT_EQ(read_json_file(fixture("cm_n1.json")), to_json(generate_cm(1, CycScalar(1, 1L))));
  EXPECT_EQ(read_json_file(fixture("cm_n2.json")), to_json(generate_cm(2, CycScalar(1, 1L))));
  EXPECT_EQ(read_json_file(fixture("cyclic_m2.json")), to_json(cyclic_m2_instance()));
}

TEST(JsonIo, AdelicRoundtrip) {
  AdelicPoint pt = adelic_from_json(read_json_file(fixture("cm_n1_adelic.json")));
  EXPECT_EQ(to_json(adelic_from_json(to_json(pt))), to_json(pt));
  auto path = std::filesystem::temp_directory_path() / "nakajima_adelic_roundtrip.json";
  write_json_file(path.string(), to_json(pt));
  EXPECT_EQ(adelic_from_json(read_json_file(path.string())).U, pt.U);
  std::filesystem::remove(path);
}

TEST(JsonIo, BAndQElements) {
  auto ctx = make_tau(GroupAlgElem::from_charvals({CycScalar(2, 1L), CycScalar(2, 3L)}));
  BElem b = BElem::y(ctx) * BElem::x(ctx) * BElem::group(ctx, 1);
  EXPECT_EQ(belem_from_json(to_json(b), ctx), b);
  QElem u = QElem::y(ctx) * QElem::x(ctx);
  Json j = to_json(u);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), u.group_terms().size());
}

TEST(JsonIo, ConfigHashStable) {
  Json a = {{"m", 2}, {"seed", 1}}, b = {{"seed", 1}, {"m", 2}};
  EXPECT_EQ(config_hash(a), config_hash(b));
  EXPECT_NE(config_hash(a), config_hash(Json{{"m", 3}, {"seed", 1}}));
  EXPECT_EQ(config_hash(a).size(), 16u);
}
