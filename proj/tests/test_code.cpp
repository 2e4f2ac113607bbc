#include "doctest.h"
#include "fixtures.hpp"
#include "srkit/code.hpp"
#include "srkit/constructions.hpp"

#include <random>

using namespace srk;

namespace {

LinearCode random_code(const ProfilePtr& p, std::size_t k, std::mt19937& rng) {
  std::vector<MatrixTuple> gens;
  for (std::size_t i = 0; i < k; ++i) {
    MatrixTuple x(p);
    for (auto& e : x.data()) e = rng() % p->q();
    gens.push_back(x);
  }
  return LinearCode::create(p, gens);
}

std::size_t brute_distance(const LinearCode& c) {
  std::size_t best = SIZE_MAX;
  for (const auto& x : codewords(c))
    if (!x.is_zero()) best = std::min(best, sumrank_weight(x));
  return best;
}

}  // namespace

TEST_SUITE("code") {

TEST_CASE("generators are reduced to an independent set") {
  auto f = Field::create(2);
  auto p = Profile::create(f, {{2, 2}});
  MatrixTuple a(p, {1, 0, 0, 1}), b(p, {0, 1, 1, 0});
  auto c = LinearCode::create(p, {a, a, b, a + b});
  CHECK(c.dim() == 2);
  CHECK(c.contains(a + b));
  CHECK(!c.contains(MatrixTuple(p, {1, 0, 0, 0})));
  CHECK(LinearCode::create(p, {}).dim() == 0);
}

TEST_CASE("shipped examples") {
  auto c8 = fixture("msrd8_q2.src");
  auto c7 = fixture("msrd7.src");
  auto c6 = fixture("msrd6.src");
  CHECK(c8.dim() == 3);
  CHECK(c7.dim() == 7);
  CHECK(c6.dim() == 4);
  CHECK(codewords(c6).size() == 81);
  CHECK(minimum_distance(c8) == 6);
  CHECK(minimum_distance(c6) == 4);
  CHECK(minimum_distance(c7) == 3);
  CHECK(minimum_distance(fixture("msrd8_q3.src")) == 6);
}

TEST_CASE("codeword sweep of the zero code") {
  auto p = Profile::create(Field::create(2), {{2, 2}});
  auto z = LinearCode::create(p, {});
  auto all = codewords(z);
  REQUIRE(all.size() == 1);
  CHECK(all[0].is_zero());
}

TEST_CASE("minimum distance agrees with brute force and thread count") {
  std::mt19937 rng(21);
  for (std::uint32_t q : {2u, 3u}) {
    auto f = Field::create(q);
    auto p = Profile::create(f, Profile::parse_blocks("2x2,1x2,1x1"));
    for (int i = 0; i < 15; ++i) {
      auto c = random_code(p, 1 + rng() % 4, rng);
      auto d = minimum_distance(c);
      CHECK(d == brute_distance(c));
      CHECK(minimum_distance(c, 3) == d);
    }
  }
}

TEST_CASE("enumeration guard") {
  Limits tiny;
  tiny.max_codewords = 10;
  CHECK_THROWS_AS(minimum_distance(fixture("msrd7.src"), 1, tiny), Error);
  try {
    minimum_distance(fixture("msrd7.src"), 1, tiny);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}

TEST_CASE("duals") {
  std::mt19937 rng(4);
  for (std::uint32_t q : {2u, 3u, 4u}) {
    auto f = Field::create(q);
    auto p = Profile::create(f, Profile::parse_blocks("1x1,2x3,1x2"));
    for (int i = 0; i < 10; ++i) {
      auto c = random_code(p, rng() % 5, rng);
      auto d = dual(c);
      CHECK(c.dim() + d.dim() == p->dim());
      CHECK(dual(d).same_space(c));
      for (const auto& x : c.basis())
        for (const auto& y : d.basis()) CHECK(trace_product(x, y) == 0);
    }
  }
}

TEST_CASE("shortening") {
  std::mt19937 rng(8);
  auto f = Field::create(2);
  auto p = Profile::create(f, Profile::parse_blocks("2x2,1x2,1x1"));
  auto c = random_code(p, 3, rng);
  CHECK(shorten(c, SubspaceTuple::full(p)).same_space(c));
  CHECK(shorten(c, SubspaceTuple::zero(p)).dim() == 0);
  for (const auto& u : enumerate_lattice_all(p)) {
    auto s = shorten(c, u);
    CHECK(s.size() == count_supported_in(c, u));
    for (const auto& x : s.basis()) CHECK(support(x).leq(u));
    CHECK(duality_shorten_check(c, u));
  }
}

TEST_CASE("msrd verdicts") {
  CHECK(msrd_check(fixture("msrd6.src")).is_msrd);
  CHECK(msrd_check(fixture("msrd8_q2.src")).is_msrd);
  CHECK(msrd_check(fixture("msrd8_q3.src")).is_msrd);
  auto w7 = msrd_check(fixture("msrd7.src"));
  CHECK(!w7.is_msrd);
  CHECK(*w7.d == 3);
  auto dn = construct_dual_not_msrd(Field::create(2), 2);
  CHECK(msrd_check(dn.code).is_msrd);
  CHECK(!msrd_check(dual(dn.code)).is_msrd);
  auto w6 = msrd_check(fixture("msrd6.src"));
  CHECK(w6.j == 2);
  CHECK(w6.delta == 0);
  CHECK(w6.singleton_exponent == 4);
}

TEST_CASE("systematic form splits the coordinates") {
  auto c = fixture("msrd6.src");
  auto sf = systematic_form(c);
  CHECK(sf.basis.size() == c.dim());
  CHECK(sf.tail.size() == c.dim());
  CHECK(sf.tail.size() + sf.head.size() == c.profile()->dim());
  for (std::size_t i = 0; i < sf.basis.size(); ++i)
    for (std::size_t r = 0; r < sf.tail.size(); ++r)
      CHECK(sf.basis[i].data()[sf.tail[r]] == (i == r ? 1u : 0u));
}

TEST_CASE("block reordering") {
  auto c = fixture("msrd8_q2.src");
  auto r = reorder_blocks(c, {4, 3, 2, 1, 0, 7, 6, 5});
  CHECK(minimum_distance(r) == 6);
  CHECK_THROWS_AS(reorder_blocks(c, {5, 0, 1, 2, 3, 4, 6, 7}), Error);
}

TEST_CASE("row shortening drops the last block") {
  auto c = fixture("msrd8_q2.src");
  auto s = msrd_shorten_row(c, 7);
  CHECK(s.profile()->t() == 7);
  auto w = msrd_check(s);
  CHECK(w.is_msrd);
  CHECK(*w.d == 6);
}

TEST_CASE("column shortening") {
  auto c = fixture("msrd6.src");
  auto s = msrd_shorten_col(c, 3);
  CHECK(s.profile()->blocks() == std::vector<Block>{{2, 2}, {1, 2}, {1, 2}, {1, 1}});
  auto w = msrd_check(s);
  CHECK(w.is_msrd);
  CHECK(*w.d == 4);
  CHECK_THROWS_AS(msrd_shorten_col(c, 2), Error);
}

TEST_CASE("row puncturing") {
  auto c = fixture("msrd6.src");
  for (std::size_t s : {0u, 1u}) {
    auto p = msrd_puncture_row(c, s);
    auto w = msrd_check(p);
    CHECK(w.is_msrd);
    CHECK(*w.d == 3);
  }
  CHECK_THROWS_AS(msrd_puncture_row(c, 3), Error);
  CHECK_THROWS_AS(msrd_puncture_row(fixture("msrd7.src"), 0), Error);
}

}
