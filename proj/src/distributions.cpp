#include "srkit/distributions.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace srk {

namespace {

BigInt gb(std::size_t n, long long k, std::uint64_t q) { return gaussian_binomial(static_cast<long long>(n), k, q); }

BigInt sign_pow(std::size_t e, std::uint64_t q) {
  // (-1)^e q^{e(e-1)/2}
  BigInt v = ipow(q, e * (e == 0 ? 0 : e - 1) / 2);
  return e % 2 ? BigInt(-v) : v;
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (a % b != 0) fail(ErrorCode::IncompleteDistribution, "transform is not integral; the distribution is incomplete");
  return a / b;
}

void check_total(const BigInt& total, const BigInt& size) {
  if (total != size) fail(ErrorCode::IncompleteDistribution, "distribution does not sum to the code size");
}

std::vector<std::size_t> ns(const Profile& p) {
  std::vector<std::size_t> n(p.t());
  for (std::size_t i = 0; i < p.t(); ++i) n[i] = p.block(i).n;
  return n;
}

}  // namespace

Distributions brute_distributions(const LinearCode& c, const Limits& limits) {
  check_enumerable(c, limits);
  const ProfilePtr& p = c.profile();
  Distributions out;
  out.sumrank.counts.assign(p->N() + 1, 0);
  std::map<SubspaceTuple, BigInt> sup;
  for_each_codeword(
      c,
      [&](std::span<const Elem>, std::span<const Elem> word) {
        MatrixTuple x(p, std::vector<Elem>(word.begin(), word.end()));
        SubspaceTuple s = support(x);
        auto it = sup.find(s);
        if (it == sup.end()) {
          if (sup.size() >= limits.max_keys) fail(ErrorCode::TooLarge, "too many distinct supports");
          sup.emplace(std::move(s), 1);
        } else {
          ++it->second;
        }
      },
      limits);
  out.support.counts = std::move(sup);
  out.ranklist = ranklist_of(out.support);
  out.sumrank = sumrank_of(out.ranklist, p->N());
  return out;
}

RankListDistribution ranklist_of(const SupportDistribution& s) {
  RankListDistribution r;
  for (const auto& [u, w] : s.counts) r.counts[u.dim_vector()] += w;
  return r;
}

SumRankDistribution sumrank_of(const RankListDistribution& r, std::size_t N) {
  SumRankDistribution s;
  s.counts.assign(N + 1, 0);
  for (const auto& [h, w] : r.counts) s.counts[std::accumulate(h.begin(), h.end(), std::size_t{0})] += w;
  return s;
}

SupportDistribution macwilliams_support(const SupportDistribution& w, const BigInt& size, const ProfilePtr& p,
                                        const Limits& limits) {
  BigInt total = 0;
  for (const auto& kv : w.counts) total += kv.second;
  check_total(total, size);
  const std::size_t t = p->t();
  const std::uint64_t q = p->q();

  // Per block: all subspaces, and for each H in the input the table
  // g(U) = sum_v q^{m v} (-1)^{u-v} q^{binom(u-v,2)} [dim(H^perp cap U) v].
  std::vector<std::vector<Subspace>> subs(t);
  std::vector<std::unordered_map<Subspace, std::size_t, SubspaceHash>> index(t);
  BigInt lattice = 1;
  for (std::size_t i = 0; i < t; ++i) {
    subs[i] = enumerate_all_subspaces(p->field(), p->block(i).n, limits);
    for (std::size_t k = 0; k < subs[i].size(); ++k) index[i].emplace(subs[i][k], k);
    lattice *= subs[i].size();
  }
  if (lattice > limits.max_keys) fail(ErrorCode::TooLarge, "subspace lattice exceeds the key guard");

  std::vector<std::map<std::size_t, std::vector<BigInt>>> factor(t);
  auto block_factor = [&](std::size_t i, std::size_t h) -> const std::vector<BigInt>& {
    auto it = factor[i].find(h);
    if (it != factor[i].end()) return it->second;
    const std::size_t m = p->block(i).m;
    Subspace hp = orthogonal_complement(subs[i][h]);
    std::vector<BigInt> g(subs[i].size());
    for (std::size_t k = 0; k < subs[i].size(); ++k) {
      const std::size_t u = subs[i][k].dim();
      const std::size_t a = subspace_intersect(hp, subs[i][k]).dim();
      BigInt s = 0;
      for (std::size_t v = 0; v <= u; ++v) s += ipow(q, m * v) * sign_pow(u - v, q) * gb(a, static_cast<long long>(v), q);
      g[k] = s;
    }
    return factor[i].emplace(h, std::move(g)).first->second;
  };

  std::vector<std::pair<std::vector<const std::vector<BigInt>*>, BigInt>> terms;
  for (const auto& [hs, wh] : w.counts) {
    std::vector<const std::vector<BigInt>*> f(t);
    for (std::size_t i = 0; i < t; ++i) f[i] = &block_factor(i, index[i].at(hs.part(i)));
    terms.emplace_back(std::move(f), wh);
  }

  SupportDistribution out;
  std::vector<std::size_t> idx(t, 0);
  while (true) {
    BigInt s = 0;
    for (const auto& [f, wh] : terms) {
      BigInt prod = wh;
      for (std::size_t i = 0; i < t && prod != 0; ++i) prod *= (*f[i])[idx[i]];
      s += prod;
    }
    if (s != 0) {
      std::vector<Subspace> parts(t);
      for (std::size_t i = 0; i < t; ++i) parts[i] = subs[i][idx[i]];
      out.counts.emplace(SubspaceTuple(p, std::move(parts)), exact_div(s, size));
    }
    std::size_t i = t;
    while (i > 0 && ++idx[i - 1] == subs[i - 1].size()) idx[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

RankListDistribution macwilliams_ranklist(const RankListDistribution& w, const BigInt& size, const Profile& p) {
  BigInt total = 0;
  for (const auto& kv : w.counts) total += kv.second;
  check_total(total, size);
  const std::size_t t = p.t();
  const std::uint64_t q = p.q();
  const auto n = ns(p);

  // factor[i][h][u] = sum_v q^{m v} (-1)^{u-v} q^{binom(u-v,2)} [n-h v][n-v u-v]
  std::vector<std::vector<std::vector<BigInt>>> factor(t);
  for (std::size_t i = 0; i < t; ++i) {
    const std::size_t m = p.block(i).m;
    factor[i].assign(n[i] + 1, std::vector<BigInt>(n[i] + 1));
    for (std::size_t h = 0; h <= n[i]; ++h)
      for (std::size_t u = 0; u <= n[i]; ++u) {
        BigInt s = 0;
        for (std::size_t v = 0; v <= u; ++v)
          s += ipow(q, m * v) * sign_pow(u - v, q) * gb(n[i] - h, static_cast<long long>(v), q) *
               gb(n[i] - v, static_cast<long long>(u - v), q);
        factor[i][h][u] = s;
      }
  }

  RankListDistribution out;
  for_each_box_vector(n, [&](const std::vector<std::size_t>& u) {
    BigInt s = 0;
    for (const auto& [h, wh] : w.counts) {
      BigInt prod = wh;
      for (std::size_t i = 0; i < t && prod != 0; ++i) prod *= factor[i][h[i]][u[i]];
      s += prod;
    }
    if (s != 0) out.counts.emplace(u, exact_div(s, size));
  });
  return out;
}

bool binomial_moment_identity(const RankListDistribution& c, const RankListDistribution& dual, const BigInt& size,
                              const Profile& p) {
  const std::size_t t = p.t();
  const std::uint64_t q = p.q();
  const auto n = ns(p);
  bool ok = true;
  for_each_box_vector(n, [&](const std::vector<std::size_t>& u) {
    if (!ok) return;
    BigInt lhs = 0, rhs = 0;
    std::size_t e = 0;
    for (std::size_t i = 0; i < t; ++i) e += p.block(i).m * (n[i] - u[i]);
    for (const auto& [h, w] : c.counts) {
      BigInt prod = w;
      for (std::size_t i = 0; i < t; ++i)
        prod *= gaussian_binomial(static_cast<long long>(n[i] - h[i]),
                                  static_cast<long long>(u[i]) - static_cast<long long>(h[i]), q);
      lhs += prod;
    }
    for (const auto& [h, w] : dual.counts) {
      BigInt prod = w;
      for (std::size_t i = 0; i < t; ++i) prod *= gb(n[i] - h[i], static_cast<long long>(u[i]), q);
      rhs += prod;
    }
    // lhs = |C| rhs / q^e
    if (lhs * ipow(q, e) != size * rhs) ok = false;
  });
  return ok;
}

bool binomial_moment_check(const LinearCode& c, const Limits& limits) {
  LinearCode d = dual(c);
  check_enumerable(d, limits);
  auto a = brute_distributions(c, limits);
  auto b = brute_distributions(d, limits);
  return binomial_moment_identity(a.ranklist, b.ranklist, c.size(), *c.profile());
}

BigInt f_ell(const RankVec& u, long long ell, std::uint64_t q) {
  const long long total = static_cast<long long>(std::accumulate(u.begin(), u.end(), std::size_t{0}));
  if (ell < 0 || ell > total) return 0;
  // Coefficient of x^ell in prod_i sum_v (-1)^{u_i-v} q^{binom(u_i-v,2)} [u_i v] x^v.
  std::vector<BigInt> poly{1};
  for (std::size_t ui : u) {
    std::vector<BigInt> next(poly.size() + ui, 0);
    for (std::size_t a = 0; a < poly.size(); ++a) {
      if (poly[a] == 0) continue;
      for (std::size_t v = 0; v <= ui; ++v) next[a + v] += poly[a] * sign_pow(ui - v, q) * gb(ui, static_cast<long long>(v), q);
    }
    poly = std::move(next);
  }
  return poly[static_cast<std::size_t>(ell)];
}

namespace {

void check_u(const RankVec& shape, const RankVec& u) {
  if (u.size() != shape.size()) fail(ErrorCode::BadParameters, "rank vector length does not match the shape");
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] > shape[i]) fail(ErrorCode::BadParameters, "rank vector exceeds the shape");
}

BigInt omega_raw(std::size_t m, std::uint64_t q, long long d, const RankVec& u) {
  const long long total = static_cast<long long>(std::accumulate(u.begin(), u.end(), std::size_t{0}));
  BigInt s = 0;
  for (long long l = std::max<long long>(d, 0); l <= total; ++l)
    s += (ipow(q, m * static_cast<std::uint64_t>(l - d + 1)) - 1) * f_ell(u, l, q);
  return s;
}

std::size_t sum(const RankVec& v) { return std::accumulate(v.begin(), v.end(), std::size_t{0}); }

RankVec sorted_shape(RankVec shape) {
  std::sort(shape.begin(), shape.end(), std::greater<>());
  return shape;
}

void check_shape(const RankVec& shape, std::uint64_t q, std::size_t m) {
  if (shape.empty()) fail(ErrorCode::BadParameters, "empty shape");
  for (std::size_t n : shape)
    if (n == 0) fail(ErrorCode::BadParameters, "shape entries must be positive");
  if (m == 0) fail(ErrorCode::BadParameters, "m must be positive");
  std::uint64_t p = 2, r = q;
  while (q >= 2 && q % p) ++p;
  while (q >= 2 && r % p == 0) r /= p;
  if (q < 2 || r != 1) fail(ErrorCode::BadParameters, "q must be a prime power");
}

// Vectors in the box of the shape with |u| >= from, ordered by |u| and then
// comparing from the last coordinate, smaller first.
std::vector<RankVec> graded_revlex(const RankVec& shape, std::size_t from) {
  BigInt box = 1;
  for (std::size_t n : shape) box *= n + 1;
  if (box > 10000000) fail(ErrorCode::TooLarge, "omega scan grid exceeds the guard");
  std::vector<RankVec> out;
  for_each_box_vector(shape, [&](const std::vector<std::size_t>& u) {
    if (sum(u) >= from) out.push_back(u);
  });
  std::sort(out.begin(), out.end(), [](const RankVec& a, const RankVec& b) {
    std::size_t sa = sum(a), sb = sum(b);
    if (sa != sb) return sa < sb;
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

OmegaVerdict scan(const RankVec& shape, std::size_t m, std::uint64_t q, long long d) {
  OmegaVerdict v;
  for (const RankVec& u : graded_revlex(shape, static_cast<std::size_t>(std::max<long long>(d + 1, 0)))) {
    ++v.checked;
    BigInt w = omega_raw(m, q, d, u);
    if (w < 0) {
      v.excluded = true;
      v.witness = u;
      v.value = w;
      return v;
    }
  }
  return v;
}

OmegaVerdict fast(const RankVec& shape, std::size_t m, std::uint64_t q, std::size_t d) {
  OmegaVerdict v;
  v.fast = true;
  if (d + 1 > sum(shape)) return v;
  RankVec u = omega_tilde(shape, d);
  v.checked = 1;
  BigInt w = omega_raw(m, q, static_cast<long long>(d), u);
  v.witness = u;
  v.value = w;
  v.excluded = w < 0;
  return v;
}

void check_d(const RankVec& shape, std::size_t d) {
  if (d < 1 || d > sum(shape)) fail(ErrorCode::BadDistance, "distance must lie in [1, N]");
}

}  // namespace

BigInt msrd_support_distribution(const Profile& p, std::size_t d, const RankVec& u) {
  if (!p.equal_m()) fail(ErrorCode::UnequalColumnSizes, "closed form needs equal column counts");
  return omega(ns(p), p.block(0).m, p.q(), d, u);
}

BigInt omega(const RankVec& shape, std::size_t m, std::uint64_t q, std::size_t d, const RankVec& u) {
  check_shape(shape, q, m);
  check_d(shape, d);
  check_u(shape, u);
  return omega_raw(m, q, static_cast<long long>(d), u);
}

BigInt omega_hat(const RankVec& shape, std::size_t m, std::uint64_t q, std::size_t d, const RankVec& u) {
  check_shape(shape, q, m);
  check_d(shape, d);
  check_u(shape, u);
  return omega_raw(m, q, static_cast<long long>(sum(shape)) - static_cast<long long>(d) + 2, u);
}

RankVec omega_tilde(const RankVec& shape, std::size_t d) {
  RankVec s = sorted_shape(shape);
  if (d + 1 > sum(s)) fail(ErrorCode::BadDistance, "no vector of size d+1 fits the shape");
  RankVec u(s.size(), 0);
  std::size_t left = d + 1;
  for (std::size_t i = 0; i < s.size() && left > 0; ++i) {
    u[i] = std::min(s[i], left);
    left -= u[i];
  }
  return u;
}

BigInt omega_tilde_value(const RankVec& shape, std::size_t m, std::uint64_t q, std::size_t d) {
  RankVec u = omega_tilde(shape, d);
  BigInt s = 0;
  for (std::size_t ui : u) s += ipow(q, ui);
  s -= u.size();
  return ipow(q, 2 * m) - 1 - (ipow(q, m) - 1) / (q - 1) * s;
}

OmegaVerdict omega_scan(const RankVec& shape, std::size_t m, std::uint64_t q, std::size_t d) {
  check_shape(shape, q, m);
  check_d(shape, d);
  return scan(sorted_shape(shape), m, q, static_cast<long long>(d));
}

OmegaVerdict omega_fast(const RankVec& shape, std::size_t m, std::uint64_t q, std::size_t d) {
  check_shape(shape, q, m);
  check_d(shape, d);
  return fast(sorted_shape(shape), m, q, d);
}

OmegaVerdict omega_hat_scan(const RankVec& shape, std::size_t m, std::uint64_t q, std::size_t d) {
  check_shape(shape, q, m);
  check_d(shape, d);
  return scan(sorted_shape(shape), m, q, static_cast<long long>(sum(shape)) - static_cast<long long>(d) + 2);
}

OmegaVerdict omega_hat_fast(const RankVec& shape, std::size_t m, std::uint64_t q, std::size_t d) {
  check_shape(shape, q, m);
  check_d(shape, d);
  const std::size_t N = sum(shape);
  OmegaVerdict v;
  v.fast = true;
  if (d < 2) return v;  // dual distance N-d+2 exceeds N
  const std::size_t dd = N - d + 2;
  if (dd + 1 > N) return v;
  return fast(sorted_shape(shape), m, q, dd);
}

ConjectureReport conjecture_scan(std::size_t max_t, std::size_t max_n, const std::vector<std::uint64_t>& qs,
                                 std::size_t max_m) {
  ConjectureReport r;
  for (std::size_t t = 1; t <= max_t; ++t) {
    RankVec shape(t, 1);
    // all non-increasing shapes with entries in [1, max_n]
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t cap) {
      if (i == t) {
        const std::size_t N = sum(shape);
        for (std::uint64_t q : qs)
          for (std::size_t m = shape[0]; m <= max_m; ++m)
            for (std::size_t d = 1; d < N; ++d) {
              ++r.instances;
              OmegaVerdict full = scan(shape, m, q, static_cast<long long>(d));
              OmegaVerdict quick = fast(shape, m, q, d);
              if (full.excluded) ++r.excluded_full;
              if (quick.excluded) ++r.excluded_fast;
              if (full.excluded && !quick.excluded)
                r.counterexamples.push_back({shape, m, q, d, *full.witness, *full.value});
            }
        return;
      }
      for (std::size_t n = 1; n <= cap; ++n) {
        shape[i] = n;
        rec(i + 1, n);
      }
    };
    rec(0, max_n);
  }
  return r;
}

}  // namespace srk
