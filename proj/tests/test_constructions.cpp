#include "doctest.h"
#include "fixtures.hpp"
#include "srkit/bounds.hpp"
#include "srkit/constructions.hpp"

using namespace srk;

namespace {

ProfilePtr profile(std::uint32_t q, const char* blocks) {
  return Profile::create(Field::create(q), Profile::parse_blocks(blocks));
}

void check_msrd(const Construction& c, std::size_t d, std::size_t dim) {
  CHECK(c.code.dim() == dim);
  CHECK(c.distance == d);
  auto w = msrd_check(c.code);
  CHECK(w.is_msrd);
  REQUIRE(w.d);
  CHECK(*w.d == d);
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("gabidulin codes") {
  auto f2 = Field::create(2);
  auto g = gabidulin_mrd(f2, 2, 2, 2);
  CHECK(g.dim() == 2);
  CHECK(minimum_distance(g) == 2);
  CHECK(gabidulin_mrd(f2, 2, 3, 1).dim() == 6);
  auto g3 = gabidulin_mrd(f2, 2, 3, 2);
  CHECK(g3.dim() == 3);
  CHECK(minimum_distance(g3) == 2);
  auto f3 = Field::create(3);
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t d = 1; d <= n; ++d) {
      auto c = gabidulin_mrd(f3, n, 3, d);
      CHECK(c.dim() == 3 * (n - d + 1));
      if (c.dim() <= 6) {
        CHECK(minimum_distance(c) == d);
        // the dual is MRD with the complementary distance
        auto dd = dual(c);
        if (dd.dim() > 0 && dd.dim() <= 6) CHECK(minimum_distance(dd) == n - d + 2);
      }
    }
  CHECK_THROWS_AS(gabidulin_mrd(f2, 3, 2, 2), Error);
}

TEST_CASE("reed-solomon generators") {
  auto f4 = Field::create(4);
  auto id = rs_mds(f4, 3, 1);
  CHECK(id == Mat::identity(f4, 3));
  auto g = rs_mds(f4, 5, 3);
  CHECK(g.rows() == 3);
  CHECK(hamming_distance(g) == 3);
  for (std::size_t d = 1; d <= 5; ++d) CHECK(hamming_distance(rs_mds(f4, 5, d)) == d);
  try {
    rs_mds(f4, 6, 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LengthTooLong);
  }
}

TEST_CASE("mds lift") {
  auto f2 = Field::create(2);
  check_msrd(construct_mds_lift(f2, 2, 5, 3), 3, 6);
  CHECK(construct_mds_lift(f2, 2, 3, 1).code.dim() == 6);
  check_msrd(construct_mds_lift(f2, 1, 3, 2), 2, 2);
}

TEST_CASE("distance two") {
  auto a = construct_d2(profile(2, "2x2,1x2"));
  check_msrd(a, 2, 4);
  REQUIRE(a.dual);
  CHECK(a.dual->same_space(dual(a.code)));
  auto rep = construct_d2(profile(2, "2x2,2x2,2x2"));
  check_msrd(rep, 2, 10);
  REQUIRE(rep.dual);
  CHECK(rep.dual->same_space(dual(rep.code)));
  CHECK(minimum_distance(*rep.dual) == 6);
  for (const auto& b : rep.dual->basis()) CHECK(b.block(0) == b.block(1));
  auto b = construct_d2(profile(2, "2x2,1x1"));
  check_msrd(b, 2, 3);
  check_msrd(construct_d2(profile(3, "2x3,1x2")), 2, 5);
}

TEST_CASE("distance N and N-1") {
  check_msrd(construct_dN(profile(2, "2x2,1x1")), 3, 1);
  check_msrd(construct_dN(profile(3, "2x3,1x2,1x2")), 4, 2);
  check_msrd(construct_dN_minus(profile(2, "2x4,2x2")), 3, 4);
  CHECK_THROWS_AS(construct_dN_minus(profile(2, "2x2,2x2")), Error);
  CHECK_THROWS_AS(construct_dN_minus(profile(2, "2x4,1x2")), Error);
}

TEST_CASE("msrd111 and combine") {
  auto f2 = Field::create(2);
  auto a = construct_msrd111(f2, {{1, 2}, {1, 2}}, 2, Mat::identity(f2, 2));
  check_msrd(a, 3, 2);
  for (std::size_t t1 = 1; t1 <= 4; ++t1) {
    auto b = construct_msrd111(f2, std::vector<Block>(t1, Block{1, 2}), 3);
    check_msrd(b, t1 + 2, 2);
  }
  CHECK_THROWS_AS(construct_msrd111(f2, {{1, 2}}, 1), Error);
  auto c = construct_combine(f2, {{1, 4}}, 3, 2);
  check_msrd(c, 3, 4);
  auto c2 = construct_combine(f2, {{2, 4}, {1, 4}}, 3, 2);
  check_msrd(c2, 5, 4);
}

TEST_CASE("msrd111 extension") {
  auto f2 = Field::create(2);
  auto e = construct_msrd111_ext(f2, 2, 4);
  auto ref = fixture("msrd8_q2.src");
  CHECK(e.code.profile()->same_as(*ref.profile()));
  CHECK(e.code.same_space(ref));
  check_msrd(e, 6, 3);
  for (std::size_t s = 1; s <= 5; ++s) check_msrd(construct_msrd111_ext(f2, 3, s), s + 2, 4);
  CHECK_THROWS_AS(construct_msrd111_ext(f2, 1, 1), Error);
  CHECK_THROWS_AS(construct_msrd111_ext(f2, 2, 5), Error);
}

TEST_CASE("msrd code with a non-msrd dual") {
  for (std::uint32_t q : {2u, 3u}) {
    auto c = construct_dual_not_msrd(Field::create(q), 2);
    CHECK(msrd_check(c.code).is_msrd);
    REQUIRE(c.dual);
    CHECK(c.dual->same_space(dual(c.code)));
    CHECK(!msrd_check(*c.dual).is_msrd);
  }
}

TEST_CASE("lifting a single word") {
  auto p = profile(2, "2x2,1x2,1x2");
  // H is spanned over F_2 by (1,1,1) and x(1,1,1) in GF(4)^3
  auto c = construct_lifting(p, {2, 1, 1}, 2, {{1, 1, 1}, {2, 2, 2}});
  CHECK(c.distance == 4);
  CHECK(c.code.dim() == 2);
  CHECK(minimum_distance(c.code) == 4);
}

TEST_CASE("lifting meets the induced plotkin bound") {
  auto f2 = Field::create(2);
  auto tw = Tower::create(f2, 2);
  auto g = simplex_generator(tw.top(), 2);
  CHECK(g.cols() == 5);
  std::vector<std::vector<Elem>> h;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::uint32_t l = 0; l < 2; ++l) {
      std::vector<Elem> w(5);
      for (std::size_t c = 0; c < 5; ++c) w[c] = tw.top()->mul(tw.basis(l), g(r, c));
      h.push_back(w);
    }
  auto p = profile(2, "1x2x5");
  auto c = construct_lifting(p, std::vector<std::size_t>(5, 1), 2, h);
  CHECK(c.distance == 4);
  CHECK(minimum_distance(c.code) == 4);
  auto plotkin = induced_bounds(*p, 4).plotkin;
  REQUIRE(plotkin);
  CHECK(c.code.size() == *plotkin);
}

TEST_CASE("lifting hypotheses") {
  auto p = profile(2, "2x2,1x2");
  CHECK_THROWS_AS(construct_lifting(p, {2, 1}, 3, {{1, 1}}), Error);
  CHECK_THROWS_AS(construct_lifting(p, {2, 1}, 2, {{0, 0}}), Error);
}

TEST_CASE("simplex lift parameters") {
  auto s = construct_simplex_lift();
  CHECK(s.code.profile()->t() == 273);
  CHECK(s.code.size() == 4096);
  CHECK(s.distance == 768);
}

}
