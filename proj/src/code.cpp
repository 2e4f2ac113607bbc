#include "srkit/code.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace srk {

LinearCode LinearCode::create(ProfilePtr p, const std::vector<MatrixTuple>& gens) {
  Mat g(p->field(), gens.size(), p->dim());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    require_same_profile(*p, *gens[i].profile());
    std::copy(gens[i].data().begin(), gens[i].data().end(), g.row(i));
  }
  return from_matrix(std::move(p), g);
}

LinearCode LinearCode::from_matrix(ProfilePtr p, const Mat& g) {
  if (g.cols() != p->dim()) fail(ErrorCode::ProfileMismatch, "generator width differs from the profile dimension");
  LinearCode c;
  c.p_ = std::move(p);
  if (g.rows() == 0) {
    c.g_ = Mat(c.p_->field(), 0, c.p_->dim());
    return c;
  }
  // Pivot columns of G^T mark the first maximal independent set of rows.
  Rref r = rref(g.transpose());
  c.g_ = Mat(c.p_->field(), r.rank, c.p_->dim());
  for (std::size_t i = 0; i < r.rank; ++i) std::copy_n(g.row(r.pivots[i]), g.cols(), c.g_.row(i));
  return c;
}

MatrixTuple LinearCode::basis_element(std::size_t i) const {
  return MatrixTuple(p_, std::vector<Elem>(g_.row(i), g_.row(i) + g_.cols()));
}

std::vector<MatrixTuple> LinearCode::basis() const {
  std::vector<MatrixTuple> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_element(i));
  return out;
}

bool LinearCode::contains(const MatrixTuple& x) const {
  require_same_profile(*p_, *x.profile());
  Mat row(p_->field(), 1, p_->dim());
  std::copy(x.data().begin(), x.data().end(), row.row(0));
  return rank(g_.stack(row)) == dim();
}

bool LinearCode::same_space(const LinearCode& o) const {
  if (!p_->same_as(*o.p_) || dim() != o.dim()) return false;
  return rref(g_).reduced == rref(o.g_).reduced;
}

void check_enumerable(const LinearCode& c, const Limits& limits) {
  if (c.size() > limits.max_codewords)
    fail(ErrorCode::TooLarge, "q^k = " + c.size().str() + " codewords exceed the enumeration guard");
}

namespace {

// Codewords whose first coefficient is congruent to shard modulo shards.
template <class Fn>
void sweep(const LinearCode& c, unsigned shard, unsigned shards, Fn&& fn) {
  const Field& F = *c.field();
  const std::size_t k = c.dim(), n = c.profile()->dim();
  const Elem q = F.q();
  std::vector<Elem> coeff(k, 0), word(n, 0);
  if (k == 0) {
    if (shard == 0) fn(std::span<const Elem>(coeff), std::span<const Elem>(word));
    return;
  }
  const Mat& g = c.generator();
  for (Elem c0 = shard; c0 < q; c0 += shards) {
    std::fill(coeff.begin(), coeff.end(), 0);
    coeff[0] = c0;
    for (std::size_t e = 0; e < n; ++e) word[e] = F.mul(c0, g(0, e));
    while (true) {
      fn(std::span<const Elem>(coeff), std::span<const Elem>(word));
      std::size_t i = k - 1;
      for (; i >= 1; --i) {
        Elem old = coeff[i];
        Elem nw = old + 1 == q ? 0 : old + 1;
        Elem delta = F.sub(nw, old);
        const Elem* gi = g.row(i);
        for (std::size_t e = 0; e < n; ++e)
          if (gi[e]) word[e] = F.add(word[e], F.mul(delta, gi[e]));
        coeff[i] = nw;
        if (nw != 0) break;
      }
      if (i == 0) break;
    }
  }
}

unsigned resolve_threads(unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  return threads;
}

}  // namespace

void for_each_codeword(const LinearCode& c,
                       const std::function<void(std::span<const Elem>, std::span<const Elem>)>& fn,
                       const Limits& limits) {
  check_enumerable(c, limits);
  sweep(c, 0, 1, fn);
}

std::vector<MatrixTuple> codewords(const LinearCode& c, const Limits& limits) {
  std::vector<MatrixTuple> out;
  for_each_codeword(
      c, [&](std::span<const Elem>, std::span<const Elem> w) {
        out.emplace_back(c.profile(), std::vector<Elem>(w.begin(), w.end()));
      },
      limits);
  return out;
}

std::size_t minimum_distance(const LinearCode& c, unsigned threads, const Limits& limits) {
  if (c.dim() == 0) fail(ErrorCode::TrivialCode, "the zero code has no minimum distance");
  check_enumerable(c, limits);
  const Profile& p = *c.profile();
  threads = std::min<unsigned>(resolve_threads(threads), p.q());
  std::vector<std::size_t> best(threads, p.N() + 1);
  auto work = [&](unsigned shard) {
    std::vector<Elem> scratch(p.dim());
    std::size_t local = p.N() + 1;
    sweep(c, shard, threads, [&](std::span<const Elem> coeff, std::span<const Elem> w) {
      if (std::all_of(coeff.begin(), coeff.end(), [](Elem e) { return e == 0; })) return;
      std::size_t s = 0;
      for (std::size_t i = 0; i < p.t() && s < local; ++i)
        s += block_rank(*p.field(), w.data() + p.offset(i), p.block(i).n, p.block(i).m, scratch.data());
      local = std::min(local, s);
    });
    best[shard] = local;
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned s = 0; s < threads; ++s) pool.emplace_back(work, s);
    for (auto& th : pool) th.join();
  }
  return *std::min_element(best.begin(), best.end());
}

LinearCode dual(const LinearCode& c) { return LinearCode::from_matrix(c.profile(), kernel_basis(c.generator())); }

namespace {

// Subcode {x in C : x L = 0} for a dim x r matrix of functionals.
LinearCode subcode(const LinearCode& c, const Mat& functionals) {
  if (functionals.cols() == 0 || c.dim() == 0) return c;
  Mat a = c.generator() * functionals;
  Mat coeffs = kernel_basis(a.transpose());
  if (coeffs.rows() == 0) return LinearCode::from_matrix(c.profile(), Mat(c.field(), 0, c.profile()->dim()));
  return LinearCode::from_matrix(c.profile(), coeffs * c.generator());
}

Mat position_functionals(const Profile& p, const std::vector<std::size_t>& positions) {
  Mat l(p.field(), p.dim(), positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) l(positions[i], i) = 1;
  return l;
}

}  // namespace

LinearCode shorten(const LinearCode& c, const SubspaceTuple& u) {
  const Profile& p = *c.profile();
  require_same_profile(p, *u.profile());
  std::vector<std::vector<Elem>> cols;
  for (std::size_t i = 0; i < p.t(); ++i) {
    Subspace perp = orthogonal_complement(u.part(i));
    const Block& b = p.block(i);
    for (std::size_t w = 0; w < perp.dim(); ++w)
      for (std::size_t col = 0; col < b.m; ++col) {
        std::vector<Elem> f(p.dim(), 0);
        for (std::size_t r = 0; r < b.n; ++r) f[p.offset(i) + r * b.m + col] = perp.basis()(w, r);
        cols.push_back(std::move(f));
      }
  }
  Mat l(p.field(), p.dim(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t e = 0; e < p.dim(); ++e) l(e, j) = cols[j][e];
  return subcode(c, l);
}

std::size_t count_supported_in(const LinearCode& c, const SubspaceTuple& u, const Limits& limits) {
  const Profile& p = *c.profile();
  require_same_profile(p, *u.profile());
  std::size_t count = 0;
  std::vector<Elem> column;
  for_each_codeword(
      c, [&](std::span<const Elem>, std::span<const Elem> w) {
        for (std::size_t i = 0; i < p.t(); ++i) {
          const Block& b = p.block(i);
          column.resize(b.n);
          for (std::size_t col = 0; col < b.m; ++col) {
            for (std::size_t r = 0; r < b.n; ++r) column[r] = w[p.offset(i) + r * b.m + col];
            if (!u.part(i).contains(column)) return;
          }
        }
        ++count;
      },
      limits);
  return count;
}

bool duality_shorten_check(const LinearCode& c, const SubspaceTuple& u, const Limits& limits) {
  const Profile& p = *c.profile();
  LinearCode d = dual(c);
  check_enumerable(d, limits);
  std::size_t e = 0;
  for (std::size_t i = 0; i < p.t(); ++i) e += p.block(i).m * (p.block(i).n - u.part(i).dim());
  BigInt lhs = BigInt(count_supported_in(c, u, limits)) * ipow(p.q(), e);
  BigInt rhs = c.size() * count_supported_in(d, u.orthogonal(), limits);
  return lhs == rhs;
}

MsrdWitness msrd_check(const LinearCode& c, unsigned threads, const Limits& limits) {
  MsrdWitness w;
  if (c.dim() == 0) {
    w.is_msrd = true;
    w.singleton_value = 1;
    return w;
  }
  std::size_t d = minimum_distance(c, threads, limits);
  auto sb = singleton_bound(*c.profile(), d);
  w.d = d;
  w.singleton_value = sb.value;
  w.singleton_exponent = sb.exponent;
  w.j = sb.j;
  w.delta = sb.delta;
  w.is_msrd = c.dim() == sb.exponent;
  return w;
}

SystematicForm systematic_form(const LinearCode& c, const MsrdWitness& w) {
  if (!w.is_msrd || !w.d) fail(ErrorCode::NotMsrd, "systematic form needs a nonzero MSRD code");
  const Profile& p = *c.profile();
  SystematicForm sf;
  sf.j = w.j;
  sf.delta = w.delta;
  std::vector<bool> in_tail(p.dim(), false);
  for (std::size_t i = w.j; i < p.t(); ++i) {
    const Block& b = p.block(i);
    std::size_t rows = i == w.j ? b.n - w.delta : b.n;
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t col = 0; col < b.m; ++col) {
        sf.tail.push_back(p.offset(i) + r * b.m + col);
        in_tail[p.offset(i) + r * b.m + col] = true;
      }
  }
  for (std::size_t e = 0; e < p.dim(); ++e)
    if (!in_tail[e]) sf.head.push_back(e);
  const std::size_t k = c.dim();
  if (sf.tail.size() != k) fail(ErrorCode::NotMsrd, "tail size differs from the code dimension");
  std::vector<std::size_t> order = sf.tail;
  order.insert(order.end(), sf.head.begin(), sf.head.end());
  Mat g(c.field(), k, p.dim());
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t e = 0; e < p.dim(); ++e) g(r, e) = c.generator()(r, order[e]);
  Rref r = rref(g);
  for (std::size_t i = 0; i < k; ++i)
    if (r.pivots[i] != i) fail(ErrorCode::NotMsrd, "tail positions are not an information set");
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Elem> flat(p.dim());
    for (std::size_t e = 0; e < p.dim(); ++e) flat[order[e]] = r.reduced(i, e);
    sf.basis.emplace_back(c.profile(), std::move(flat));
  }
  return sf;
}

SystematicForm systematic_form(const LinearCode& c, const Limits& limits) {
  return systematic_form(c, msrd_check(c, 1, limits));
}

LinearCode code_from_blocks(const FieldPtr& f, const std::vector<Block>& raw,
                            const std::vector<std::vector<Mat>>& gens) {
  ProfilePtr p = Profile::create(f, raw);
  Mat g(f, gens.size(), p->dim());
  for (std::size_t r = 0; r < gens.size(); ++r) {
    if (gens[r].size() != raw.size()) fail(ErrorCode::ProfileMismatch, "generator has the wrong number of blocks");
    for (std::size_t i = 0; i < p->t(); ++i) {
      const Mat& b = gens[r][p->permutation()[i]];
      if (b.rows() != p->block(i).n || b.cols() != p->block(i).m)
        fail(ErrorCode::ProfileMismatch, "generator block has the wrong shape");
      std::copy(b.data().begin(), b.data().end(), g.row(r) + p->offset(i));
    }
  }
  return LinearCode::from_matrix(p, g);
}

namespace {

std::vector<std::vector<Mat>> blocks_of(const LinearCode& c) {
  std::vector<std::vector<Mat>> out;
  for (const auto& x : c.basis()) {
    std::vector<Mat> bl;
    for (std::size_t i = 0; i < c.profile()->t(); ++i) bl.push_back(x.block(i));
    out.push_back(std::move(bl));
  }
  return out;
}

void verify(const LinearCode& out, std::size_t expected_d, const Limits& limits) {
  if (out.dim() == 0 || out.size() > limits.max_codewords) return;
  auto w = msrd_check(out, 1, limits);
  if (!w.is_msrd || *w.d != expected_d)
    fail(ErrorCode::NotMsrd, "result failed verification; the input witness does not describe the code");
}

void require_msrd(const MsrdWitness& w) {
  if (!w.is_msrd || !w.d) fail(ErrorCode::NotMsrd, "operation needs a nonzero MSRD code");
}

}  // namespace

LinearCode reorder_blocks(const LinearCode& c, const std::vector<std::size_t>& order) {
  const Profile& p = *c.profile();
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> ident(p.t());
  std::iota(ident.begin(), ident.end(), 0);
  if (sorted != ident) fail(ErrorCode::BadParameters, "block order is not a permutation");
  std::vector<Block> raw;
  for (std::size_t i = 0; i < order.size(); ++i) {
    raw.push_back(p.block(order[i]));
    if (i && raw[i].m > raw[i - 1].m) fail(ErrorCode::BadParameters, "reordering may only permute blocks of equal m");
  }
  auto gens = blocks_of(c);
  for (auto& g : gens) {
    std::vector<Mat> re;
    for (std::size_t i : order) re.push_back(g[i]);
    g = std::move(re);
  }
  return code_from_blocks(c.field(), raw, gens);
}

LinearCode msrd_shorten_row(const LinearCode& c, std::size_t s, const MsrdWitness& w, const Limits& limits) {
  require_msrd(w);
  const Profile& p = *c.profile();
  if (s < w.j || s >= p.t())
    fail(ErrorCode::IndexOutOfTheoremRange, "row shortening needs s in {j..t}");
  const Block& b = p.block(s);
  std::vector<std::size_t> pos;
  for (std::size_t col = 0; col < b.m; ++col) pos.push_back(p.offset(s) + col);
  LinearCode sub = subcode(c, position_functionals(p, pos));
  std::vector<Block> raw = p.blocks();
  auto gens = blocks_of(sub);
  if (b.n == 1) {
    raw.erase(raw.begin() + s);
    for (auto& g : gens) g.erase(g.begin() + s);
  } else {
    raw[s].n -= 1;
    for (auto& g : gens) g[s] = g[s].submatrix(1, b.n - 1, 0, b.m);
  }
  LinearCode out = code_from_blocks(c.field(), raw, gens);
  verify(out, *w.d, limits);
  return out;
}

LinearCode msrd_shorten_col(const LinearCode& c, std::size_t s, const MsrdWitness& w, const Limits& limits) {
  require_msrd(w);
  const Profile& p = *c.profile();
  if (s <= w.j || s >= p.t())
    fail(ErrorCode::IndexOutOfTheoremRange, "column shortening needs s in {j+1..t}");
  const Block& b = p.block(s);
  std::vector<std::size_t> pos;
  for (std::size_t r = 0; r < b.n; ++r) pos.push_back(p.offset(s) + r * b.m + (b.m - 1));
  LinearCode sub = subcode(c, position_functionals(p, pos));
  std::vector<Block> raw = p.blocks();
  auto gens = blocks_of(sub);
  if (b.m == 1) {
    raw.erase(raw.begin() + s);
    for (auto& g : gens) g.erase(g.begin() + s);
  } else {
    bool flip = b.n > b.m - 1;
    raw[s] = flip ? Block{b.m - 1, b.n} : Block{b.n, b.m - 1};
    for (auto& g : gens) {
      Mat cut = g[s].submatrix(0, b.n, 0, b.m - 1);
      g[s] = flip ? cut.transpose() : cut;
    }
  }
  LinearCode out = code_from_blocks(c.field(), raw, gens);
  verify(out, *w.d, limits);
  return out;
}

LinearCode msrd_puncture_row(const LinearCode& c, std::size_t s, const MsrdWitness& w, const Limits& limits) {
  require_msrd(w);
  const Profile& p = *c.profile();
  if (*w.d < 2) fail(ErrorCode::IndexOutOfTheoremRange, "puncturing needs d >= 2");
  std::size_t limit = w.delta > 0 ? w.j + 1 : w.j;
  if (s >= limit) fail(ErrorCode::IndexOutOfTheoremRange, "row puncturing needs s in [j] (delta > 0) or [j-1]");
  const Block& b = p.block(s);
  std::vector<Block> raw = p.blocks();
  auto gens = blocks_of(c);
  if (b.n == 1) {
    raw.erase(raw.begin() + s);
    for (auto& g : gens) g.erase(g.begin() + s);
  } else {
    raw[s].n -= 1;
    for (auto& g : gens) g[s] = g[s].submatrix(0, b.n - 1, 0, b.m);
  }
  LinearCode out = code_from_blocks(c.field(), raw, gens);
  verify(out, *w.d - 1, limits);
  return out;
}

LinearCode msrd_shorten_row(const LinearCode& c, std::size_t s, const Limits& limits) {
  return msrd_shorten_row(c, s, msrd_check(c, 1, limits), limits);
}

LinearCode msrd_shorten_col(const LinearCode& c, std::size_t s, const Limits& limits) {
  return msrd_shorten_col(c, s, msrd_check(c, 1, limits), limits);
}

LinearCode msrd_puncture_row(const LinearCode& c, std::size_t s, const Limits& limits) {
  return msrd_puncture_row(c, s, msrd_check(c, 1, limits), limits);
}

}  // namespace srk
