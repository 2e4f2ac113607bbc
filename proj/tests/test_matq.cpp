#include "doctest.h"
#include "srkit/matq.hpp"

#include <random>
#include <set>

using namespace srk;

namespace {

Mat random_mat(const FieldPtr& f, std::size_t r, std::size_t c, std::mt19937& rng) {
  Mat m(f, r, c);
  for (auto& x : m.data()) x = rng() % f->q();
  return m;
}

// Rank by counting the vectors in the row span.
std::size_t brute_rank(const Mat& m) {
  std::set<std::vector<Elem>> span{std::vector<Elem>(m.cols(), 0)};
  const Field& f = *m.field();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto cur = span;
    for (const auto& v : span)
      for (Elem s = 1; s < f.q(); ++s) {
        std::vector<Elem> w(v);
        for (std::size_t c = 0; c < m.cols(); ++c) w[c] = f.add(w[c], f.mul(s, m(r, c)));
        cur.insert(w);
      }
    span = std::move(cur);
  }
  std::size_t k = 0;
  for (std::size_t n = span.size(); n > 1; n /= f.q()) ++k;
  return k;
}

}  // namespace

TEST_SUITE("matq") {

TEST_CASE("rref basics") {
  auto f = Field::create(2);
  auto id = Mat::identity(f, 2);
  auto r = rref(id);
  CHECK(r.reduced == id);
  CHECK(r.rank == 2);
  Mat z(f, 2, 3);
  CHECK(rref(z).rank == 0);
  CHECK(rref(z).reduced == z);
  auto ones = Mat::from_rows(f, {{1, 1}, {1, 1}});
  auto ro = rref(ones);
  CHECK(ro.rank == 1);
  CHECK(ro.reduced == Mat::from_rows(f, {{1, 1}, {0, 0}}));
  CHECK(ro.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rank agrees with span size") {
  std::mt19937 rng(11);
  for (std::uint32_t q : {2u, 3u, 4u}) {
    auto f = Field::create(q);
    for (int i = 0; i < 40; ++i) {
      auto m = random_mat(f, 1 + rng() % 4, 1 + rng() % 4, rng);
      if (i % 3 == 0 && m.rows() > 1)
        for (std::size_t c = 0; c < m.cols(); ++c) m(1, c) = f->mul(2 % q, m(0, c));
      CHECK(rank(m) == brute_rank(m));
      CHECK(rank(m) == rank(m.transpose()));
    }
  }
}

TEST_CASE("column space and complements") {
  auto f = Field::create(2);
  CHECK(colspace(Mat::identity(f, 3)) == Subspace::full(f, 3));
  CHECK(colspace(Mat(f, 3, 2)) == Subspace::zero(f, 3));
  auto c = colspace(Mat::from_rows(f, {{1, 0}, {1, 0}}));
  CHECK(c.dim() == 1);
  CHECK(c.basis() == Mat::from_rows(f, {{1, 1}}));
  CHECK(orthogonal_complement(c) == c);
}

TEST_CASE("kernel, sum, intersection, complement identities") {
  std::mt19937 rng(5);
  for (std::uint32_t q : {2u, 3u}) {
    auto f = Field::create(q);
    for (int i = 0; i < 50; ++i) {
      std::size_t n = 1 + rng() % 4;
      auto a = rowspace(random_mat(f, rng() % (n + 1), n, rng));
      auto b = rowspace(random_mat(f, rng() % (n + 1), n, rng));
      auto s = subspace_sum(a, b);
      auto x = subspace_intersect(a, b);
      CHECK(s.dim() + x.dim() == a.dim() + b.dim());
      CHECK(s.contains(a));
      CHECK(a.contains(x));
      CHECK(b.contains(x));
      auto ap = orthogonal_complement(a);
      CHECK(ap.dim() + a.dim() == n);
      CHECK(orthogonal_complement(ap) == a);
      CHECK(orthogonal_complement(s) == subspace_intersect(ap, orthogonal_complement(b)));
      auto m = random_mat(f, 1 + rng() % 3, n, rng);
      auto k = kernel_basis(m);
      CHECK((m * k.transpose()).is_zero());
      CHECK(k.rows() + rank(m) == n);
      CHECK(nullspace(m).dim() == k.rows());
    }
  }
}

TEST_CASE("gaussian binomials") {
  CHECK(gaussian_binomial(2, 1, 2) == 3);
  CHECK(gaussian_binomial(5, 0, 7) == 1);
  CHECK(gaussian_binomial(3, 1, 3) == 13);
  CHECK(gaussian_binomial(3, 2, 2) == 7);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(2, 3, 2) == 0);
  CHECK(gaussian_binomial(2, -1, 2) == 0);
}

TEST_CASE("subspace enumeration matches the gaussian binomial") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    auto f = Field::create(q);
    for (std::size_t n = 0; n <= 4; ++n)
      for (std::size_t k = 0; k <= n; ++k) {
        if (q == 4 && n == 4) continue;
        auto all = enumerate_subspaces(f, n, k);
        CHECK(BigInt(all.size()) == gaussian_binomial(n, k, q));
        std::set<Subspace> distinct(all.begin(), all.end());
        CHECK(distinct.size() == all.size());
        for (const auto& s : all) CHECK(s.dim() == k);
      }
  }
  auto f = Field::create(2);
  CHECK(enumerate_subspaces(f, 2, 1).size() == 3);
  CHECK(enumerate_subspaces(f, 3, 2).size() == 7);
  CHECK(enumerate_subspaces(f, 3, 0).size() == 1);
  Limits tiny;
  tiny.max_subspaces = 5;
  CHECK_THROWS_AS(enumerate_subspaces(f, 3, 1, tiny), Error);
}

TEST_CASE("matrix text round trip") {
  auto f = Field::create(3);
  auto m = Mat::parse(f, "1 2;0 1", 2, 2);
  CHECK(m(0, 1) == 2);
  CHECK(Mat::parse(f, m.to_text(), 2, 2) == m);
  CHECK_THROWS_AS(Mat::parse(f, "1 3;0 1", 2, 2), Error);
  CHECK_THROWS_AS(Mat::parse(f, "1 2", 2, 2), Error);
}

}
