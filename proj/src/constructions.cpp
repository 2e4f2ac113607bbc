#include "srkit/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace srk {

namespace {

void need(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) fail(code, what);
}

Mat zero_mat(const FieldPtr& f, std::size_t r, std::size_t c) { return Mat(f, r, c); }

Mat neg(const Mat& a) {
  Mat b = a;
  const Field& F = *a.field();
  for (auto& x : b.data()) x = F.neg(x);
  return b;
}

// Pads with zero rows at the bottom.
Mat pad_rows(const Mat& a, std::size_t rows) {
  Mat b(a.field(), rows, a.cols());
  std::copy(a.data().begin(), a.data().end(), b.data().begin());
  return b;
}

Mat unit_mat(const FieldPtr& f, std::size_t r, std::size_t c, std::size_t pos) {
  Mat e(f, r, c);
  e.data()[pos] = 1;
  return e;
}

// 1 x m row holding the tower coordinates of a.
Mat coord_row(const Tower& tw, Elem a) {
  auto c = tw.coords(a);
  Mat r(tw.base(), 1, c.size());
  std::copy(c.begin(), c.end(), r.data().begin());
  return r;
}

LinearCode from_tuples(const ProfilePtr& p, const std::vector<std::vector<Mat>>& gens) {
  std::vector<MatrixTuple> xs;
  xs.reserve(gens.size());
  for (const auto& g : gens) xs.push_back(MatrixTuple::from_blocks(p, g));
  return LinearCode::create(p, xs);
}

// Sum of the k smallest entries.
std::size_t smallest_sum(std::vector<std::size_t> v, std::size_t k) {
  std::sort(v.begin(), v.end());
  return std::accumulate(v.begin(), v.begin() + static_cast<long>(std::min(k, v.size())), std::size_t{0});
}

}  // namespace

std::vector<Mat> gabidulin_basis(const FieldPtr& f, std::size_t n, std::size_t m, std::size_t d) {
  need(n >= 1 && n <= m, ErrorCode::BadParameters, "MRD codes need 1 <= n <= m");
  need(d >= 1 && d <= n, ErrorCode::BadParameters, "MRD distance must lie in [1, n]");
  Tower tw = Tower::create(f, static_cast<std::uint32_t>(m));
  const Field& E = *tw.top();
  const std::size_t k = n - d + 1;
  std::vector<Mat> out;
  std::uint64_t qi = 1;
  for (std::size_t i = 0; i < k; ++i, qi *= f->q()) {
    for (std::size_t l = 0; l < m; ++l) {
      Mat a(f, n, m);
      for (std::size_t j = 0; j < n; ++j) {
        Elem v = E.mul(tw.basis(static_cast<std::uint32_t>(l)), E.pow(tw.basis(static_cast<std::uint32_t>(j)), qi));
        auto c = tw.coords(v);
        std::copy(c.begin(), c.end(), a.row(j));
      }
      out.push_back(std::move(a));
    }
  }
  return out;
}

LinearCode gabidulin_mrd(const FieldPtr& f, std::size_t n, std::size_t m, std::size_t d) {
  ProfilePtr p = Profile::create(f, {{n, m}});
  std::vector<std::vector<Mat>> gens;
  for (auto& a : gabidulin_basis(f, n, m, d)) gens.push_back({std::move(a)});
  return from_tuples(p, gens);
}

Mat rs_mds(const FieldPtr& f, std::size_t length, std::size_t distance) {
  const std::size_t Q = f->q();
  need(length >= 1, ErrorCode::BadParameters, "length must be positive");
  need(distance >= 1 && distance <= length, ErrorCode::BadParameters, "distance must lie in [1, length]");
  if (length > Q + 1) fail(ErrorCode::LengthTooLong, "MDS length exceeds q+1");
  const std::size_t k = length - distance + 1;
  if (distance == 1) return Mat::identity(f, length);
  Mat g(f, k, length);
  for (std::size_t c = 0; c < length; ++c) {
    if (c + 1 < Q) {
      Elem a = static_cast<Elem>(c + 1);
      Elem v = 1;
      for (std::size_t r = 0; r < k; ++r, v = f->mul(v, a)) g(r, c) = v;
    } else if (c + 1 == Q) {
      g(0, c) = 1;  // the point 0
    } else {
      g(k - 1, c) = 1;  // the point at infinity
    }
  }
  return g;
}

std::size_t hamming_distance(const Mat& g, const Limits& limits) {
  const Field& F = *g.field();
  const std::size_t k = g.rows(), n = g.cols();
  if (k == 0) fail(ErrorCode::TrivialCode, "zero code has no distance");
  if (ipow(F.q(), k) > limits.max_codewords) fail(ErrorCode::TooLarge, "too many codewords");
  std::vector<Elem> coef(k, 0), word(n, 0);
  std::size_t best = n + 1;
  while (true) {
    std::size_t i = k;
    while (i > 0) {
      --i;
      Elem old = coef[i];
      coef[i] = old + 1 == F.q() ? 0 : old + 1;
      Elem delta = F.sub(coef[i], old);
      for (std::size_t c = 0; c < n; ++c) word[c] = F.add(word[c], F.mul(delta, g(i, c)));
      if (coef[i] != 0) break;
      if (i == 0) return best;
    }
    std::size_t w = 0;
    for (Elem x : word) w += x != 0;
    if (w > 0) best = std::min(best, w);
  }
}

Construction construct_mds_lift(const FieldPtr& f, std::size_t m, std::size_t t, std::size_t d) {
  need(m >= 1 && t >= 1 && d >= 1 && d <= t, ErrorCode::BadParameters, "need m, t >= 1 and 1 <= d <= t");
  Tower tw = Tower::create(f, static_cast<std::uint32_t>(m));
  const Field& E = *tw.top();
  if (t > E.q() + 1) fail(ErrorCode::BadParameters, "length exceeds q^m + 1");
  Mat g = rs_mds(tw.top(), t, d);
  ProfilePtr p = Profile::create(f, std::vector<Block>(t, Block{1, m}));
  std::vector<std::vector<Mat>> gens;
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t l = 0; l < m; ++l) {
      std::vector<Mat> bl;
      for (std::size_t c = 0; c < t; ++c) bl.push_back(coord_row(tw, E.mul(tw.basis(static_cast<std::uint32_t>(l)), g(r, c))));
      gens.push_back(std::move(bl));
    }
  return {from_tuples(p, gens), d, std::nullopt, ""};
}

namespace {

// Distance-2 code on blocks with a common m, in the order given.
Construction d2_equal_m(const ProfilePtr& p) {
  const FieldPtr& f = p->field();
  const std::size_t t = p->t(), m = p->block(0).m;
  std::size_t top = 0;
  for (std::size_t i = 1; i < t; ++i)
    if (p->block(i).n > p->block(top).n) top = i;
  const std::size_t n1 = p->block(top).n;

  std::vector<Mat> hat;  // basis of the [n1 x m; 2] MRD code, empty when n1 = 1
  if (n1 >= 2) hat = gabidulin_basis(f, n1, m, 2);

  auto zero_tuple = [&]() {
    std::vector<Mat> bl;
    for (std::size_t i = 0; i < t; ++i) bl.push_back(zero_mat(f, p->block(i).n, m));
    return bl;
  };
  std::vector<std::vector<Mat>> gens;
  for (const Mat& a : hat) {
    auto bl = zero_tuple();
    bl[top] = a;
    gens.push_back(std::move(bl));
  }
  for (std::size_t i = 0; i < t; ++i) {
    if (i == top) continue;
    const std::size_t ni = p->block(i).n;
    for (std::size_t pos = 0; pos < ni * m; ++pos) {
      auto bl = zero_tuple();
      Mat e = unit_mat(f, ni, m, pos);
      bl[top] = neg(pad_rows(e, n1));
      bl[i] = e;
      gens.push_back(std::move(bl));
    }
  }
  LinearCode code = from_tuples(p, gens);

  // Displayed dual: (B, psi_i(B)) with B in the dual of the MRD code.
  LinearCode hat_code = hat.empty() ? LinearCode::create(Profile::create(f, {{n1, m}}), {})
                                    : gabidulin_mrd(f, n1, m, 2);
  LinearCode hat_dual = dual(hat_code);
  std::vector<std::vector<Mat>> dgens;
  for (const auto& b : hat_dual.basis()) {
    Mat bm = b.block(0);
    std::vector<Mat> bl;
    for (std::size_t i = 0; i < t; ++i) bl.push_back(bm.submatrix(0, p->block(i).n, 0, m));
    dgens.push_back(std::move(bl));
  }
  return {code, 2, from_tuples(p, dgens), ""};
}

}  // namespace

Construction construct_d2(const ProfilePtr& p) {
  if (p->N() < 2) fail(ErrorCode::BadDistance, "distance 2 needs N >= 2");
  if (p->equal_m()) return d2_equal_m(p);
  const FieldPtr& f = p->field();
  const std::size_t t = p->t(), m1 = p->block(0).m;
  std::vector<Block> wide;
  for (const auto& b : p->blocks()) wide.push_back({b.n, m1});
  ProfilePtr ph = Profile::create(f, wide);
  Construction hat = d2_equal_m(ph);
  const Mat& g = hat.code.generator();

  // tau: the extra columns of every block.
  std::vector<std::size_t> extra;
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t r = 0; r < p->block(i).n; ++r)
      for (std::size_t c = p->block(i).m; c < m1; ++c) extra.push_back(ph->offset(i) + r * m1 + c);
  Mat tau(f, g.rows(), extra.size());
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t k = 0; k < extra.size(); ++k) tau(r, k) = g(r, extra[k]);
  Mat ker = kernel_basis(tau.transpose());
  Mat words = ker * g;

  std::vector<MatrixTuple> xs;
  for (std::size_t r = 0; r < words.rows(); ++r) {
    MatrixTuple x(p);
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t rr = 0; rr < p->block(i).n; ++rr)
        for (std::size_t c = 0; c < p->block(i).m; ++c)
          x.data()[p->offset(i) + rr * p->block(i).m + c] = words(r, ph->offset(i) + rr * m1 + c);
    xs.push_back(std::move(x));
  }
  return {LinearCode::create(p, xs), 2, std::nullopt, ""};
}

Construction construct_dN(const ProfilePtr& p) { return construct_dN_minus(p, 0); }

Construction construct_dN_minus(const ProfilePtr& p, std::size_t alpha) {
  const FieldPtr& f = p->field();
  const std::size_t t = p->t();
  const Block& last = p->block(t - 1);
  if (alpha > 0) {
    need(t >= 2, ErrorCode::HypothesisFailed, "needs at least two blocks");
    need(last.n >= alpha + 1, ErrorCode::HypothesisFailed, "needs n_t >= alpha + 1");
    need((alpha + 1) * last.m <= p->block(t - 2).m, ErrorCode::HypothesisFailed, "needs (alpha + 1) m_t <= m_{t-1}");
  }
  std::vector<std::vector<Mat>> bases(t);
  for (std::size_t i = 0; i + 1 < t; ++i) bases[i] = gabidulin_basis(f, p->block(i).n, p->block(i).m, p->block(i).n);
  bases[t - 1] = gabidulin_basis(f, last.n, last.m, last.n - alpha);
  const std::size_t k = (alpha + 1) * last.m;
  std::vector<std::vector<Mat>> gens;
  for (std::size_t l = 0; l < k; ++l) {
    std::vector<Mat> bl;
    for (std::size_t i = 0; i < t; ++i) bl.push_back(bases[i][l]);
    gens.push_back(std::move(bl));
  }
  Construction c{from_tuples(p, gens), p->N() - alpha, std::nullopt, ""};
  if (alpha >= 2) c.note = "distance N - alpha for alpha >= 2 follows the sketched generalization";
  return c;
}

namespace {

std::size_t min_m(const std::vector<Block>& inner) {
  std::size_t m = inner.front().m;
  for (const auto& b : inner) m = std::min(m, b.m);
  return m;
}

void check_inner(const std::vector<Block>& inner) {
  need(!inner.empty(), ErrorCode::BadParameters, "needs at least one inner block");
  for (const auto& b : inner) need(b.n >= 1 && b.n <= b.m, ErrorCode::BadBlock, "blocks need 1 <= n <= m");
}

}  // namespace

Construction construct_msrd111(const FieldPtr& f, const std::vector<Block>& inner, std::size_t t2,
                               const std::optional<Mat>& g_in) {
  check_inner(inner);
  const std::size_t mt = min_m(inner);
  need(t2 >= mt, ErrorCode::HypothesisFailed, "needs t2 >= m_{t1}");
  Mat g;
  if (g_in) {
    g = *g_in;
    need(g.rows() == mt && g.cols() == t2, ErrorCode::BadParameters, "MDS generator must be m_{t1} x t2");
    need(*g.field() == *f, ErrorCode::MixedFields, "MDS generator over another field");
  } else if (t2 == mt) {
    g = Mat::identity(f, mt);
  } else if (t2 == mt + 1) {
    g = Mat(f, mt, t2);
    for (std::size_t r = 0; r < mt; ++r) g(r, r) = g(r, mt) = 1;
  } else {
    try {
      g = rs_mds(f, t2, t2 - mt + 1);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::LengthTooLong) fail(ErrorCode::HypothesisFailed, "no MDS code of this length");
      throw;
    }
  }
  std::vector<Block> raw = inner;
  for (std::size_t j = 0; j < t2; ++j) raw.push_back({1, 1});
  std::vector<std::vector<Mat>> bases;
  for (const auto& b : inner) bases.push_back(gabidulin_basis(f, b.n, b.m, b.n));
  std::vector<std::vector<Mat>> gens;
  for (std::size_t i = 0; i < mt; ++i) {
    std::vector<Mat> bl;
    for (auto& basis : bases) bl.push_back(basis[i]);
    for (std::size_t j = 0; j < t2; ++j) bl.push_back(Mat::from_rows(f, {{g(i, j)}}));
    gens.push_back(std::move(bl));
  }
  std::size_t n_sum = 0;
  for (const auto& b : inner) n_sum += b.n;
  return {code_from_blocks(f, raw, gens), n_sum + t2 - mt + 1, std::nullopt, ""};
}

Construction construct_combine(const FieldPtr& f, const std::vector<Block>& inner, std::size_t t2, std::size_t a) {
  check_inner(inner);
  const std::size_t mt = min_m(inner);
  need(a >= 1 && a <= t2 && mt % a == 0, ErrorCode::HypothesisFailed, "needs m_{t1} = m_hat a with a <= t2");
  const std::size_t mh = mt / a;
  Tower tw = Tower::create(f, static_cast<std::uint32_t>(mh));
  const Field& E = *tw.top();
  Mat g;
  try {
    g = rs_mds(tw.top(), t2, t2 - a + 1);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::LengthTooLong) fail(ErrorCode::HypothesisFailed, "no MDS code of this length");
    throw;
  }
  std::vector<Block> raw = inner;
  for (std::size_t j = 0; j < t2; ++j) raw.push_back({1, mh});
  std::vector<std::vector<Mat>> bases;
  for (const auto& b : inner) bases.push_back(gabidulin_basis(f, b.n, b.m, b.n));
  std::vector<std::vector<Mat>> gens;
  std::size_t idx = 0;
  for (std::size_t r = 0; r < a; ++r)
    for (std::size_t l = 0; l < mh; ++l, ++idx) {
      std::vector<Mat> bl;
      for (auto& basis : bases) bl.push_back(basis[idx]);
      for (std::size_t j = 0; j < t2; ++j)
        bl.push_back(coord_row(tw, E.mul(tw.basis(static_cast<std::uint32_t>(l)), g(r, j))));
      gens.push_back(std::move(bl));
    }
  std::size_t n_sum = 0;
  for (const auto& b : inner) n_sum += b.n;
  return {code_from_blocks(f, raw, gens), n_sum + t2 - a + 1, std::nullopt, ""};
}

Construction construct_msrd111_ext(const FieldPtr& f, std::size_t m, std::size_t s) {
  need(m >= 2, ErrorCode::HypothesisFailed, "needs m >= 2");
  need(s >= 1, ErrorCode::BadParameters, "needs s >= 1");
  need(s <= m + m * (m - 1) / 2 + 1, ErrorCode::HypothesisFailed, "needs s <= m + binom(m,2) + 1");
  auto A = [&](std::size_t j) { return unit_mat(f, 1, m, j); };  // A_{j+1}
  auto plus = [&](const Mat& x, const Mat& y) { return x + y; };

  // Row of s matrices used in Z_{m+1}.
  std::vector<Mat> tail;
  for (std::size_t j = 0; j < std::min(s, m); ++j) tail.push_back(A(j));
  if (s > m) {
    std::vector<Mat> bs;
    for (std::size_t a = 0; a < m && bs.size() < s - m; ++a)
      for (std::size_t b = a + 1; b < m && bs.size() < s - m; ++b) bs.push_back(plus(A(a), A(b)));
    // B_1 twice, then B_2.. once; with s = m+1 there is room for B_1 once.
    tail.push_back(bs[0]);
    if (s > m + 1) {
      tail.push_back(bs[0]);
      for (std::size_t k = 1; k + m + 1 < s; ++k) tail.push_back(bs[k]);
    }
  }
  std::vector<Block> raw(s + 1, Block{1, m});
  for (std::size_t j = 0; j <= m; ++j) raw.push_back({1, 1});
  auto one = [&](bool on) { return Mat::from_rows(f, {{on ? Elem{1} : Elem{0}}}); };
  std::vector<std::vector<Mat>> gens;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Mat> bl{A(0)};
    for (std::size_t k = 0; k < s; ++k) bl.push_back(A(j));
    for (std::size_t k = 0; k <= m; ++k) bl.push_back(one(k == j));
    gens.push_back(std::move(bl));
  }
  std::vector<Mat> last{A(1)};
  for (const auto& x : tail) last.push_back(x);
  for (std::size_t k = 0; k <= m; ++k) last.push_back(one(k == m));
  gens.push_back(std::move(last));
  return {code_from_blocks(f, raw, gens), s + 2, std::nullopt, ""};
}

Construction construct_dual_not_msrd(const FieldPtr& f, std::size_t n) {
  need(n >= 2, ErrorCode::BadParameters, "needs n >= 2");
  std::vector<Block> raw{{n, n}, {1, 1}};
  std::vector<std::vector<Mat>> gens;
  for (auto& a : gabidulin_basis(f, n, n, 2)) gens.push_back({a, Mat(f, 1, 1)});
  Mat z = unit_mat(f, n, n, 0);
  gens.push_back({z, Mat::from_rows(f, {{1}})});
  LinearCode c = code_from_blocks(f, raw, gens);
  // Displayed dual: (B, -<B, Z>) for B in the dual of the MRD code.
  LinearCode c1d = dual(gabidulin_mrd(f, n, n, 2));
  std::vector<std::vector<Mat>> dgens;
  for (const auto& b : c1d.basis()) {
    Mat bm = b.block(0);
    dgens.push_back({bm, Mat::from_rows(f, {{f->neg(bm(0, 0))}})});
  }
  return {c, 2, code_from_blocks(f, raw, dgens), ""};
}

Construction construct_lifting(const ProfilePtr& p, const std::vector<std::size_t>& deltas, std::size_t h,
                               const std::vector<std::vector<Elem>>& h_gens, std::optional<std::size_t> delta_h,
                               const Limits& limits) {
  const FieldPtr& f = p->field();
  const std::size_t t = p->t();
  need(deltas.size() == t, ErrorCode::BadParameters, "one delta per block");
  for (std::size_t i = 0; i < t; ++i) {
    const Block& b = p->block(i);
    need(deltas[i] >= 1 && deltas[i] <= b.n, ErrorCode::HypothesisFailed, "delta_i must lie in [n_i]");
    need(h >= 1 && h <= b.m * (b.n - deltas[i] + 1), ErrorCode::HypothesisFailed, "h exceeds an MRD dimension");
  }
  need(!h_gens.empty(), ErrorCode::HypothesisFailed, "H must be nonzero");
  Tower tw = Tower::create(f, static_cast<std::uint32_t>(h));
  for (const auto& w : h_gens) {
    need(w.size() == t, ErrorCode::BadParameters, "H words must have length t");
    for (Elem x : w) need(x < tw.top()->q(), ErrorCode::BadParameters, "H entry outside GF(q^h)");
  }
  // F_q-independence of the generators, checked on their coordinate expansion.
  Mat expanded(f, h_gens.size(), t * h);
  for (std::size_t r = 0; r < h_gens.size(); ++r)
    for (std::size_t i = 0; i < t; ++i) {
      auto c = tw.coords(h_gens[r][i]);
      std::copy(c.begin(), c.end(), expanded.row(r) + i * h);
    }
  need(rank(expanded) == h_gens.size(), ErrorCode::BadParameters, "H generators must be F_q-independent");

  std::size_t dh = 0;
  if (delta_h) {
    dh = *delta_h;
  } else {
    // Hamming distance of the F_q-span, on the expanded words.
    const std::size_t k = h_gens.size();
    if (ipow(f->q(), k) > limits.max_codewords) fail(ErrorCode::TooLarge, "H too large to enumerate");
    dh = t + 1;
    std::vector<Elem> coef(k, 0), word(t * h, 0);
    const Field& F = *f;
    bool done = false;
    while (!done) {
      std::size_t i = k;
      while (true) {
        --i;
        Elem old = coef[i];
        coef[i] = old + 1 == F.q() ? 0 : old + 1;
        Elem delta = F.sub(coef[i], old);
        for (std::size_t c = 0; c < word.size(); ++c) word[c] = F.add(word[c], F.mul(delta, expanded(i, c)));
        if (coef[i] != 0) break;
        if (i == 0) {
          done = true;
          break;
        }
      }
      if (done) break;
      std::size_t w = 0;
      for (std::size_t b = 0; b < t; ++b)
        w += std::any_of(word.begin() + static_cast<long>(b * h), word.begin() + static_cast<long>((b + 1) * h),
                         [](Elem x) { return x != 0; });
      if (w > 0) dh = std::min(dh, w);
    }
  }

  std::vector<std::vector<Mat>> bases(t);
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Mat>> cache;
  for (std::size_t i = 0; i < t; ++i) {
    auto key = std::make_pair(p->block(i).n * 1000 + p->block(i).m, deltas[i]);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, gabidulin_basis(f, p->block(i).n, p->block(i).m, deltas[i])).first;
    bases[i] = it->second;
  }
  const Field& F = *f;
  std::vector<MatrixTuple> xs;
  for (std::size_t r = 0; r < h_gens.size(); ++r) {
    MatrixTuple x(p);
    for (std::size_t i = 0; i < t; ++i) {
      auto c = tw.coords(h_gens[r][i]);
      Mat acc(f, p->block(i).n, p->block(i).m);
      for (std::size_t l = 0; l < h; ++l) {
        if (c[l] == 0) continue;
        const Mat& a = bases[i][l];
        for (std::size_t e = 0; e < acc.data().size(); ++e) acc.data()[e] = F.add(acc.data()[e], F.mul(c[l], a.data()[e]));
      }
      x.set_block(i, acc);
    }
    xs.push_back(std::move(x));
  }
  return {LinearCode::create(p, xs), smallest_sum(deltas, dh), std::nullopt, ""};
}

Mat simplex_generator(const FieldPtr& f, std::size_t r) {
  need(r >= 1, ErrorCode::BadParameters, "simplex dimension must be positive");
  const std::uint64_t Q = f->q();
  BigInt len = (ipow(Q, r) - 1) / (Q - 1);
  if (len > 1000000) fail(ErrorCode::TooLarge, "simplex code too long");
  std::vector<std::vector<Elem>> cols;
  for (std::size_t lead = 0; lead < r; ++lead) {
    const std::size_t free = r - lead - 1;
    std::vector<Elem> rest(free, 0);
    while (true) {
      std::vector<Elem> col(r, 0);
      col[lead] = 1;
      std::copy(rest.begin(), rest.end(), col.begin() + static_cast<long>(lead + 1));
      cols.push_back(std::move(col));
      std::size_t i = free;
      while (i > 0 && ++rest[i - 1] == Q) rest[--i] = 0;
      if (i == 0) break;
    }
  }
  Mat g(f, r, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t i = 0; i < r; ++i) g(i, c) = cols[c][i];
  return g;
}

Construction construct_simplex_lift(std::uint32_t q, std::size_t m, std::size_t n, std::size_t r) {
  FieldPtr f = Field::create(q);
  Tower tw = Tower::create(f, static_cast<std::uint32_t>(m));
  const Field& E = *tw.top();
  Mat g = simplex_generator(tw.top(), r);
  const std::size_t t = g.cols();
  ProfilePtr p = Profile::create(f, std::vector<Block>(t, Block{n, m}));
  std::vector<std::vector<Elem>> h_gens;
  for (std::size_t row = 0; row < r; ++row)
    for (std::size_t l = 0; l < m; ++l) {
      std::vector<Elem> w(t);
      for (std::size_t c = 0; c < t; ++c) w[c] = E.mul(tw.basis(static_cast<std::uint32_t>(l)), g(row, c));
      h_gens.push_back(std::move(w));
    }
  // Every nonzero simplex word has weight Q^{r-1}.
  const std::size_t dh = ipow(E.q(), r - 1).convert_to<std::size_t>();
  Construction c = construct_lifting(p, std::vector<std::size_t>(t, n), m, h_gens, dh);
  c.note = "distance certified by the constant weight of the simplex code";
  return c;
}

}  // namespace srk
