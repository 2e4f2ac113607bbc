#include "srkit/ambient.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace srk {

ProfilePtr Profile::create(FieldPtr f, std::vector<Block> raw) {
  if (raw.empty()) fail(ErrorCode::BadBlock, "a profile needs at least one block");
  for (const auto& b : raw) {
    if (b.n == 0 || b.m == 0) fail(ErrorCode::BadBlock, "block dimensions must be positive");
    if (b.n > b.m)
      fail(ErrorCode::BadBlock, "block " + std::to_string(b.n) + "x" + std::to_string(b.m) + " has n > m");
  }
  auto p = std::make_shared<Profile>();
  p->f_ = std::move(f);
  p->perm_.resize(raw.size());
  std::iota(p->perm_.begin(), p->perm_.end(), 0);
  std::stable_sort(p->perm_.begin(), p->perm_.end(),
                   [&](std::size_t a, std::size_t b) { return raw[a].m > raw[b].m; });
  p->Q_ = 0;
  for (std::size_t i : p->perm_) {
    const Block& b = raw[i];
    p->blocks_.push_back(b);
    p->offsets_.push_back(p->dim_);
    p->N_ += b.n;
    p->M_ += b.m;
    p->dim_ += b.n * b.m;
    p->Q_ += BigRat(1, ipow(p->f_->q(), b.m));
  }
  return p;
}

std::vector<Block> Profile::parse_blocks(std::string_view text) {
  std::vector<Block> out;
  auto num = [&](std::string_view s) {
    std::size_t v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
      fail(ErrorCode::ParseError, "bad number '" + std::string(s) + "' in profile");
    return v;
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(start, end - start);
    std::vector<std::size_t> parts;
    std::size_t s = 0;
    while (true) {
      std::size_t x = tok.find('x', s);
      parts.push_back(num(tok.substr(s, x == std::string_view::npos ? std::string_view::npos : x - s)));
      if (x == std::string_view::npos) break;
      s = x + 1;
    }
    if (parts.size() < 2 || parts.size() > 3)
      fail(ErrorCode::ParseError, "profile entry '" + std::string(tok) + "' is not nxm or nxmxR");
    std::size_t rep = parts.size() == 3 ? parts[2] : 1;
    for (std::size_t r = 0; r < rep; ++r) out.push_back({parts[0], parts[1]});
    start = end + 1;
  }
  return out;
}

std::string Profile::blocks_text(const std::vector<Block>& blocks) {
  std::string s;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(blocks[i].n) + "x" + std::to_string(blocks[i].m);
  }
  return s;
}

std::vector<Block> Profile::original_blocks() const {
  std::vector<Block> out(blocks_.size());
  for (std::size_t i = 0; i < blocks_.size(); ++i) out[perm_[i]] = blocks_[i];
  return out;
}

bool Profile::equal_m() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [&](const Block& b) { return b.m == blocks_[0].m; });
}

void require_same_profile(const Profile& a, const Profile& b) {
  if (&a != &b && !a.same_as(b)) fail(ErrorCode::ProfileMismatch, "objects live in different ambient spaces");
}

MatrixTuple::MatrixTuple(ProfilePtr p) : p_(std::move(p)), a_(p_->dim(), 0) {}

MatrixTuple::MatrixTuple(ProfilePtr p, std::vector<Elem> flat) : p_(std::move(p)), a_(std::move(flat)) {
  if (a_.size() != p_->dim()) fail(ErrorCode::ProfileMismatch, "tuple length differs from the profile dimension");
}

MatrixTuple MatrixTuple::from_blocks(ProfilePtr p, const std::vector<Mat>& blocks) {
  if (blocks.size() != p->t()) fail(ErrorCode::ProfileMismatch, "wrong number of blocks");
  MatrixTuple x(p);
  for (std::size_t i = 0; i < blocks.size(); ++i) x.set_block(i, blocks[i]);
  return x;
}

Mat MatrixTuple::block(std::size_t i) const {
  const Block& b = p_->block(i);
  Mat m(p_->field(), b.n, b.m);
  std::copy_n(a_.begin() + p_->offset(i), b.n * b.m, m.data().begin());
  return m;
}

void MatrixTuple::set_block(std::size_t i, const Mat& m) {
  const Block& b = p_->block(i);
  if (m.rows() != b.n || m.cols() != b.m)
    fail(ErrorCode::ProfileMismatch, "block " + std::to_string(i + 1) + " has the wrong shape");
  std::copy(m.data().begin(), m.data().end(), a_.begin() + p_->offset(i));
}

MatrixTuple MatrixTuple::operator+(const MatrixTuple& o) const {
  require_same_profile(*p_, *o.p_);
  MatrixTuple r(p_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = p_->field()->add(a_[i], o.a_[i]);
  return r;
}

MatrixTuple MatrixTuple::operator-(const MatrixTuple& o) const {
  require_same_profile(*p_, *o.p_);
  MatrixTuple r(p_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = p_->field()->sub(a_[i], o.a_[i]);
  return r;
}

MatrixTuple MatrixTuple::scaled(Elem s) const {
  MatrixTuple r(p_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = p_->field()->mul(s, a_[i]);
  return r;
}

bool MatrixTuple::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](Elem e) { return e == 0; });
}

std::vector<std::size_t> rank_vector(const MatrixTuple& x) {
  const Profile& p = *x.profile();
  std::vector<Elem> scratch(p.dim());
  std::vector<std::size_t> out(p.t());
  for (std::size_t i = 0; i < p.t(); ++i)
    out[i] = block_rank(*p.field(), x.data().data() + p.offset(i), p.block(i).n, p.block(i).m, scratch.data());
  return out;
}

std::size_t sumrank_weight(const MatrixTuple& x) {
  auto r = rank_vector(x);
  return std::accumulate(r.begin(), r.end(), std::size_t{0});
}

SubspaceTuple support(const MatrixTuple& x) {
  const Profile& p = *x.profile();
  std::vector<Subspace> parts;
  parts.reserve(p.t());
  for (std::size_t i = 0; i < p.t(); ++i) parts.push_back(colspace(x.block(i)));
  return SubspaceTuple(x.profile(), std::move(parts));
}

Elem trace_product(const MatrixTuple& x, const MatrixTuple& y) {
  require_same_profile(*x.profile(), *y.profile());
  const Field& F = *x.profile()->field();
  Elem s = 0;
  for (std::size_t i = 0; i < x.data().size(); ++i) s = F.add(s, F.mul(x.data()[i], y.data()[i]));
  return s;
}

Mat blockdiag_embed(const MatrixTuple& x) {
  const Profile& p = *x.profile();
  Mat out(p.field(), p.N(), p.M());
  std::size_t r0 = 0, c0 = 0;
  for (std::size_t i = 0; i < p.t(); ++i) {
    const Block& b = p.block(i);
    for (std::size_t r = 0; r < b.n; ++r)
      for (std::size_t c = 0; c < b.m; ++c) out(r0 + r, c0 + c) = x.at(i, r, c);
    r0 += b.n;
    c0 += b.m;
  }
  return out;
}

SubspaceTuple::SubspaceTuple(ProfilePtr p, std::vector<Subspace> parts) : p_(std::move(p)), parts_(std::move(parts)) {
  if (parts_.size() != p_->t()) fail(ErrorCode::ProfileMismatch, "wrong number of subspaces");
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (parts_[i].ambient() != p_->block(i).n)
      fail(ErrorCode::AmbientMismatch, "subspace " + std::to_string(i + 1) + " has the wrong ambient dimension");
}

SubspaceTuple SubspaceTuple::zero(ProfilePtr p) {
  std::vector<Subspace> parts;
  for (const auto& b : p->blocks()) parts.push_back(Subspace::zero(p->field(), b.n));
  return SubspaceTuple(p, std::move(parts));
}

SubspaceTuple SubspaceTuple::full(ProfilePtr p) {
  std::vector<Subspace> parts;
  for (const auto& b : p->blocks()) parts.push_back(Subspace::full(p->field(), b.n));
  return SubspaceTuple(p, std::move(parts));
}

std::size_t SubspaceTuple::rank_L() const {
  std::size_t s = 0;
  for (const auto& u : parts_) s += u.dim();
  return s;
}

std::vector<std::size_t> SubspaceTuple::dim_vector() const {
  std::vector<std::size_t> out;
  for (const auto& u : parts_) out.push_back(u.dim());
  return out;
}

bool SubspaceTuple::leq(const SubspaceTuple& o) const {
  require_same_profile(*p_, *o.p_);
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (!o.parts_[i].contains(parts_[i])) return false;
  return true;
}

SubspaceTuple SubspaceTuple::orthogonal() const {
  std::vector<Subspace> parts;
  for (const auto& u : parts_) parts.push_back(orthogonal_complement(u));
  return SubspaceTuple(p_, std::move(parts));
}

bool SubspaceTuple::operator<(const SubspaceTuple& o) const {
  return std::lexicographical_compare(parts_.begin(), parts_.end(), o.parts_.begin(), o.parts_.end());
}

std::size_t SubspaceTuple::hash() const {
  std::size_t h = 0;
  for (const auto& u : parts_) h = h * 1000000007u ^ u.hash();
  return h;
}

std::string SubspaceTuple::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += " | ";
    s += "<" + parts_[i].basis().to_text() + ">";
  }
  return s + ")";
}

BigInt mobius(const SubspaceTuple& u, const SubspaceTuple& v) {
  if (!u.leq(v)) fail(ErrorCode::NotComparable, "mobius needs U contained in V");
  const std::uint64_t q = u.profile()->q();
  BigInt r = 1;
  for (std::size_t i = 0; i < u.parts().size(); ++i) {
    std::uint64_t d = v.part(i).dim() - u.part(i).dim();
    r *= ipow(q, d * (d - (d > 0 ? 1 : 0)) / 2);
    if (d % 2) r = -r;
  }
  return r;
}

std::vector<BigInt> rank_counts(std::size_t n, std::size_t m, std::uint64_t q) {
  std::vector<BigInt> out(n + 1);
  BigInt prod = 1;
  for (std::size_t s = 0; s <= n; ++s) {
    out[s] = gaussian_binomial(static_cast<long long>(n), static_cast<long long>(s), q) * prod;
    prod *= ipow(q, m) - ipow(q, s);
  }
  return out;
}

std::vector<BigInt> sphere_volumes(const Profile& p) {
  std::vector<BigInt> poly{1};
  for (const auto& b : p.blocks()) {
    auto c = rank_counts(b.n, b.m, p.q());
    std::vector<BigInt> next(poly.size() + b.n, 0);
    for (std::size_t i = 0; i < poly.size(); ++i)
      for (std::size_t s = 0; s <= b.n; ++s) next[i + s] += poly[i] * c[s];
    poly = std::move(next);
  }
  for (std::size_t r = 1; r < poly.size(); ++r) poly[r] += poly[r - 1];
  return poly;
}

BigInt sphere_volume(const Profile& p, std::size_t r) {
  auto v = sphere_volumes(p);
  return v[std::min(r, v.size() - 1)];
}

void for_each_box_vector(const std::vector<std::size_t>& bound,
                         const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> u(bound.size(), 0);
  while (true) {
    fn(u);
    std::size_t i = u.size();
    while (i > 0) {
      if (u[i - 1] < bound[i - 1]) {
        ++u[i - 1];
        break;
      }
      u[i - 1] = 0;
      --i;
    }
    if (i == 0) return;
  }
}

void for_each_lattice_element(const ProfilePtr& p, const std::vector<std::size_t>& dims,
                              const std::function<void(const SubspaceTuple&)>& fn, const Limits& limits) {
  if (dims.size() != p->t()) fail(ErrorCode::ProfileMismatch, "dimension vector length differs from t");
  BigInt total = 1;
  std::vector<std::vector<Subspace>> lists;
  for (std::size_t i = 0; i < p->t(); ++i) {
    if (dims[i] > p->block(i).n) return;
    total *= gaussian_binomial(static_cast<long long>(p->block(i).n), static_cast<long long>(dims[i]), p->q());
    if (total > limits.max_subspaces) fail(ErrorCode::TooLarge, "lattice enumeration exceeds the guard");
    lists.push_back(enumerate_subspaces(p->field(), p->block(i).n, dims[i], limits));
  }
  std::vector<std::size_t> sizes;
  for (const auto& l : lists) sizes.push_back(l.size() - 1);
  std::vector<Subspace> parts(p->t());
  for_each_box_vector(sizes, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t i = 0; i < idx.size(); ++i) parts[i] = lists[i][idx[i]];
    fn(SubspaceTuple(p, parts));
  });
}

std::vector<SubspaceTuple> enumerate_lattice(const ProfilePtr& p, const std::vector<std::size_t>& dims,
                                             const Limits& limits) {
  std::vector<SubspaceTuple> out;
  for_each_lattice_element(p, dims, [&](const SubspaceTuple& u) { out.push_back(u); }, limits);
  return out;
}

std::vector<SubspaceTuple> enumerate_lattice_rank(const ProfilePtr& p, std::size_t r, const Limits& limits) {
  std::vector<SubspaceTuple> out;
  std::vector<std::size_t> bound;
  for (const auto& b : p->blocks()) bound.push_back(b.n);
  for_each_box_vector(bound, [&](const std::vector<std::size_t>& u) {
    if (std::accumulate(u.begin(), u.end(), std::size_t{0}) != r) return;
    for_each_lattice_element(p, u, [&](const SubspaceTuple& x) { out.push_back(x); }, limits);
  });
  return out;
}

std::vector<SubspaceTuple> enumerate_lattice_all(const ProfilePtr& p, const Limits& limits) {
  std::vector<SubspaceTuple> out;
  std::vector<std::size_t> bound;
  for (const auto& b : p->blocks()) bound.push_back(b.n);
  for_each_box_vector(bound, [&](const std::vector<std::size_t>& u) {
    for_each_lattice_element(p, u, [&](const SubspaceTuple& x) { out.push_back(x); }, limits);
  });
  return out;
}

}  // namespace srk
