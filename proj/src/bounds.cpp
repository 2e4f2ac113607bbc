#include "srkit/bounds.hpp"

#include <algorithm>

namespace srk {

namespace {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

BigInt hamming_ball(std::size_t N, const BigInt& Q, std::size_t r) {
  BigInt v = 0;
  for (std::size_t s = 0; s <= r && s <= N; ++s) v += binomial(N, s) * ipow(Q - 1, s);
  return v;
}

}  // namespace

void check_distance(const Profile& p, std::size_t d) {
  if (d < 1 || d > p.N())
    fail(ErrorCode::BadDistance, "distance " + std::to_string(d) + " outside [1, " + std::to_string(p.N()) + "]");
}

const BoundEntry* BoundReport::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

SingletonBound singleton_bound(const Profile& p, std::size_t d) {
  check_distance(p, d);
  SingletonBound s;
  std::size_t r = d - 1, j = 0;
  while (r >= p.block(j).n) {
    r -= p.block(j).n;
    ++j;
  }
  s.j = j;
  s.delta = r;
  for (std::size_t i = j; i < p.t(); ++i) s.exponent += p.block(i).n * p.block(i).m;
  s.exponent -= p.block(j).m * r;
  s.value = ipow(p.q(), s.exponent);
  return s;
}

InducedBounds induced_bounds(const Profile& p, std::size_t d) {
  check_distance(p, d);
  const std::size_t N = p.N();
  const BigInt Q = ipow(p.q(), p.block(0).m);
  InducedBounds b;
  b.singleton = ipow(Q, N - d + 1);
  b.hamming = ipow(Q, N) / hamming_ball(N, Q, (d - 1) / 2);
  if (Q * d > (Q - 1) * N) b.plotkin = (Q * d) / (Q * d - (Q - 1) * N);
  const BigInt QN = ipow(Q, N);
  const BigInt num = BigInt(N) * d * (Q - 1) * QN;
  // ball and term track V_w and C(N, w) (Q-1)^w incrementally
  BigInt ball = 1, term = 1;
  for (std::uint64_t w = 0; BigInt(w) * Q <= BigInt(N) * (Q - 1); ++w) {
    if (w > 0) {
      term = term * (N - w + 1) * (Q - 1) / w;
      ball += term;
    }
    BigInt den = Q * w * w - BigInt(2) * N * w * (Q - 1) + (Q - 1) * N * d;
    if (den <= 0) continue;
    BigInt f = num / (den * ball);
    if (!b.elias || f < *b.elias) {
      b.elias = f;
      b.elias_w = w;
    }
  }
  return b;
}

BigInt sphere_packing_bound(const Profile& p, std::size_t d) {
  check_distance(p, d);
  return p.cardinality() / sphere_volume(p, (d - 1) / 2);
}

ProjectiveBound projective_sphere_packing_bound(const Profile& p, std::size_t d) {
  check_distance(p, d);
  if (d < 3) fail(ErrorCode::BadDistance, "the projective bound needs d >= 3");
  ProjectiveBound b;
  std::size_t r = d - 3, l = 0;
  while (l < p.t() && r >= p.block(l).n) {
    r -= p.block(l).n;
    ++l;
  }
  if (l == p.t()) fail(ErrorCode::DecompositionUnavailable, "d-3 exceeds the row count");
  b.ell = l;
  b.delta = r;
  b.delta_zero = r == 0;
  b.reduced.push_back({p.block(l).n - r, p.block(l).m});
  for (std::size_t i = l + 1; i < p.t(); ++i) b.reduced.push_back(p.block(i));
  ProfilePtr reduced = Profile::create(p.field(), b.reduced);
  b.value = reduced->cardinality() / sphere_volume(*reduced, 1);
  return b;
}

std::optional<BigInt> total_distance_bound(const Profile& p, std::size_t d) {
  check_distance(p, d);
  BigRat gap = BigRat(BigInt(d)) - BigRat(BigInt(p.N())) + p.Q();
  if (gap <= 0) return std::nullopt;
  BigRat v = (BigRat(BigInt(d)) - BigRat(BigInt(p.N())) + BigRat(BigInt(p.t()))) / gap;
  return floor_div(v);
}

BigInt block_count_bound(std::size_t N, std::size_t d, const BigInt& qm, const BigInt& size) {
  if (size <= qm) fail(ErrorCode::HypothesisFailed, "the block-count estimate needs |C| > q^m");
  if (d > N) fail(ErrorCode::BadDistance, "d exceeds N");
  return floor_div(BigRat(BigInt(N - d) * qm * (size - 1), size - qm));
}

std::size_t sphere_covering_dimension(const Profile& p, std::size_t d) {
  check_distance(p, d);
  BigInt need = ceil_div(BigRat(p.cardinality(), sphere_volume(p, d - 1)));
  std::size_t k = 0;
  BigInt v = 1;
  while (v < need) {
    v *= p.q();
    ++k;
  }
  return k;
}

MsrdBlockCount msrd_block_count_bound(std::size_t n, std::size_t m, std::uint64_t q, std::size_t d) {
  if (n == 0 || m < n) fail(ErrorCode::BadParameters, "need 1 <= n <= m");
  if (d < 3) fail(ErrorCode::BadDistance, "the MSRD block-count bound needs d >= 3");
  MsrdBlockCount r;
  const std::size_t l = (d - 3) / n;
  const BigInt qn = ipow(q, n);
  // n*l + n - d + 3 lies in [1, n].
  const std::size_t e = n * l + n + 3 - d;
  BigInt num = qn - ipow(q, e) + BigInt(q - 1) * (ipow(q, m) + 1);
  r.bound = BigInt(l) + floor_div(BigRat(num, qn - 1));
  r.weak = BigInt(l) + 1 + floor_div(BigRat(ipow(q, m) * (q - 1), qn - 1));
  if ((d - 3) % n == 0)
    r.divisible = BigInt(l) + floor_div(BigRat(BigInt(q - 1) * (ipow(q, m) + 1), qn - 1));
  if (d <= n + 2) {
    BigInt base = floor_div(BigRat(qn - ipow(q, n + 3 - d) + BigInt(q - 1) * (ipow(q, m) + 1), qn - 1));
    r.small_d = base;
    if (n == m && n >= 2) r.square = BigInt(q);
  }
  return r;
}

BoundReport bound_report(const Profile& p, std::size_t d) {
  check_distance(p, d);
  BoundReport rep;
  rep.d = d;
  auto add = [&](std::string name, std::optional<BigInt> v, std::string note = {}) {
    BoundEntry e;
    e.name = std::move(name);
    e.value = std::move(v);
    if (e.value) e.linear = floor_log(*e.value, p.q());
    e.note = std::move(note);
    rep.entries.push_back(std::move(e));
  };
  auto sb = singleton_bound(p, d);
  auto ib = induced_bounds(p, d);
  add("Singleton", sb.value);
  add("Induced Singleton", ib.singleton);
  add("Induced Hamming", ib.hamming);
  add("Induced Plotkin", ib.plotkin, ib.plotkin ? "" : "needs q^m d > (q^m-1) N");
  add("Induced Elias", ib.elias,
      ib.elias ? "minimum over w, attained at w=" + std::to_string(*ib.elias_w) : "no admissible w");
  add("Sphere-Packing", sphere_packing_bound(p, d));
  if (d >= 3) {
    auto pb = projective_sphere_packing_bound(p, d);
    add("Proj. Sphere-Packing", pb.value, pb.delta_zero ? "delta=0 decomposition" : "");
  } else {
    add("Proj. Sphere-Packing", std::nullopt, "needs d >= 3");
  }
  auto td = total_distance_bound(p, d);
  add("Total-Distance", td, td ? "" : "needs d > N - Q");
  std::optional<BigInt> lo;
  for (const auto& e : rep.entries)
    if (e.value && (!lo || *e.value < *lo)) lo = e.value;
  for (auto& e : rep.entries)
    if (e.value && *e.value == *lo) {
      e.best = true;
      rep.best.push_back(e.name);
    }
  rep.covering_dimension = sphere_covering_dimension(p, d);
  return rep;
}

}  // namespace srk
