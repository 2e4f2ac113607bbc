#include "doctest.h"
#include "srkit/bounds.hpp"

using namespace srk;

namespace {

ProfilePtr profile(std::uint32_t q, const char* blocks) {
  return Profile::create(Field::create(q), Profile::parse_blocks(blocks));
}

ProfilePtr squares(std::size_t t) {
  std::string s = "2x2x" + std::to_string(t);
  return profile(2, s.c_str());
}

std::optional<BigInt> value(const BoundReport& r, const char* name) {
  const BoundEntry* e = r.find(name);
  REQUIRE(e != nullptr);
  return e->value;
}

std::optional<BigInt> big(long long v) { return BigInt(v); }

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("first comparison table") {
  auto p = profile(2, "2x2,1x2x7,1x1x5");
  struct Col {
    std::size_t d;
    std::optional<BigInt> sing, plot, elias, sp, psp, td;
  };
  const Col cols[] = {
      {8, big(512), std::nullopt, big(9748), big(1502), big(455), std::nullopt},
      {9, big(128), std::nullopt, big(2036), big(232), big(136), std::nullopt},
      {11, big(16), big(22), big(43), big(50), big(14), big(6)},
  };
  for (const auto& c : cols) {
    auto r = bound_report(*p, c.d);
    CHECK(value(r, "Singleton") == c.sing);
    CHECK(value(r, "Induced Plotkin") == c.plot);
    CHECK(value(r, "Induced Elias") == c.elias);
    CHECK(value(r, "Sphere-Packing") == c.sp);
    CHECK(value(r, "Proj. Sphere-Packing") == c.psp);
    CHECK(value(r, "Total-Distance") == c.td);
  }
  CHECK(bound_report(*p, 8).best == std::vector<std::string>{"Proj. Sphere-Packing"});
  CHECK(bound_report(*p, 9).best == std::vector<std::string>{"Singleton"});
  CHECK(bound_report(*p, 11).best == std::vector<std::string>{"Total-Distance"});
}

TEST_CASE("second comparison table") {
  struct Col {
    std::size_t t, d;
    std::optional<BigInt> sing, plot, elias, sp, psp, td;
    const char* best;
  };
  const Col cols[] = {
      {4, 5, big(256), std::nullopt, big(366), big(119), big(146), std::nullopt, "Sphere-Packing"},
      {6, 8, big(1024), std::nullopt, big(721), big(958), big(528), std::nullopt, "Proj. Sphere-Packing"},
      {7, 10, big(1024), std::nullopt, big(391), big(863), big(528), std::nullopt, "Induced Elias"},
      {9, 14, big(1024), big(28), big(56), big(833), big(528), std::nullopt, "Induced Plotkin"},
      {17, 32, big(64), big(4), big(10), big(418), big(46), big(6), "Induced Plotkin"},
  };
  for (const auto& c : cols) {
    auto r = bound_report(*squares(c.t), c.d);
    CHECK(value(r, "Singleton") == c.sing);
    CHECK(value(r, "Induced Plotkin") == c.plot);
    CHECK(value(r, "Induced Elias") == c.elias);
    CHECK(value(r, "Sphere-Packing") == c.sp);
    CHECK(value(r, "Proj. Sphere-Packing") == c.psp);
    CHECK(value(r, "Total-Distance") == c.td);
    CHECK(r.best == std::vector<std::string>{c.best});
  }
}

TEST_CASE("singleton decomposition") {
  auto p = profile(2, "2x2,1x2x7,1x1x5");
  auto s = singleton_bound(*p, 9);
  CHECK(s.value == 128);
  CHECK(s.j == 7);
  CHECK(s.delta == 0);
  CHECK(singleton_bound(*p, 8).value == 512);
  auto one = singleton_bound(*p, 1);
  CHECK(one.value == p->cardinality());
  CHECK(one.j == 0);
}

TEST_CASE("distance one is trivial everywhere") {
  auto p = profile(3, "3x3,2x3,1x2");
  CHECK(sphere_packing_bound(*p, 1) == p->cardinality());
  CHECK(sphere_covering_dimension(*p, 1) == p->dim());
  auto ib = induced_bounds(*p, 1);
  CHECK(ib.singleton == ipow(std::uint64_t{27}, p->N()));
}

TEST_CASE("distance out of range") {
  auto p = profile(2, "2x2,1x1");
  CHECK_THROWS_AS(bound_report(*p, 0), Error);
  CHECK_THROWS_AS(bound_report(*p, 4), Error);
  CHECK_THROWS_AS(sphere_covering_dimension(*p, 4), Error);
  CHECK_THROWS_AS(projective_sphere_packing_bound(*p, 2), Error);
}

TEST_CASE("induced and total-distance examples") {
  auto p = profile(2, "2x2,1x2x7,1x1x5");
  auto ib = induced_bounds(*p, 11);
  CHECK(ib.singleton == 256);
  CHECK(ib.plotkin == big(22));
  CHECK(ib.elias == big(43));
  CHECK(total_distance_bound(*p, 8) == std::nullopt);
  CHECK(total_distance_bound(*p, 11) == big(6));
  auto ib17 = induced_bounds(*squares(17), 32);
  CHECK(ib17.plotkin == big(4));
  CHECK(ib17.elias == big(10));
}

TEST_CASE("equal m: singleton equals induced singleton") {
  for (const char* b : {"2x2x3", "1x3,2x3,3x3", "2x4,1x4"})
    for (std::uint32_t q : {2u, 3u}) {
      auto p = profile(q, b);
      for (std::size_t d = 1; d <= p->N(); ++d)
        CHECK(singleton_bound(*p, d).value == induced_bounds(*p, d).singleton);
    }
}

TEST_CASE("sphere packing never exceeds induced hamming for equal m") {
  for (const char* b : {"2x2x4", "1x2,2x2", "3x3,1x3x2"})
    for (std::uint32_t q : {2u, 3u}) {
      auto p = profile(q, b);
      for (std::size_t d = 1; d <= p->N(); ++d)
        CHECK(sphere_packing_bound(*p, d) <= induced_bounds(*p, d).hamming);
    }
}

TEST_CASE("projective bound decomposition") {
  auto p = profile(2, "2x2,1x2x7,1x1x5");
  auto b = projective_sphere_packing_bound(*p, 8);
  CHECK(b.value == 455);
  CHECK(projective_sphere_packing_bound(*squares(6), 8).value == 528);
  CHECK(projective_sphere_packing_bound(*p, 11).value == 14);
}

TEST_CASE("block count estimate") {
  CHECK(block_count_bound(4, 2, 4, 16) == 10);
  CHECK(block_count_bound(5, 5, 4, 16) == 0);
  BigInt prev = block_count_bound(10, 4, 8, 9);
  for (long long size = 10; size < 200; size += 7) {
    BigInt cur = block_count_bound(10, 4, 8, size);
    CHECK(cur <= prev);
    prev = cur;
  }
  CHECK_THROWS_AS(block_count_bound(4, 2, 4, 4), Error);
}

TEST_CASE("covering dimension") {
  auto p = profile(2, "2x2");
  CHECK(sphere_covering_dimension(*p, 2) == 1);
}

TEST_CASE("msrd block count") {
  auto a = msrd_block_count_bound(2, 2, 2, 4);
  CHECK(a.bound == 2);
  REQUIRE(a.square);
  CHECK(*a.square == 2);
  for (std::uint64_t q : {2u, 3u, 4u, 5u})
    for (std::size_t d = 3; d < 8; ++d) CHECK(msrd_block_count_bound(1, 1, q, d).bound == q + d - 2);
  auto b = msrd_block_count_bound(2, 2, 3, 3);
  CHECK(b.bound == 2);
  CHECK(*b.square == 3);
  CHECK_THROWS_AS(msrd_block_count_bound(2, 2, 2, 2), Error);
}

TEST_CASE("linear versions are floor logs") {
  auto p = profile(2, "2x2,1x2x7,1x1x5");
  auto r = bound_report(*p, 11);
  for (const auto& e : r.entries) {
    if (!e.value) {
      CHECK(!e.linear);
      continue;
    }
    CHECK(*e.linear == floor_log(*e.value, 2));
  }
  CHECK(r.find("Total-Distance")->linear == std::optional<std::uint64_t>(2));
}

}
