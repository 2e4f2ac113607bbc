#include "srkit/matq.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace srk {

Mat::Mat(FieldPtr f, std::size_t rows, std::size_t cols)
    : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Mat Mat::identity(FieldPtr f, std::size_t n) {
  Mat m(std::move(f), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(FieldPtr f, const std::vector<std::vector<Elem>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  Mat m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(ErrorCode::BadParameters, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] >= f->q()) fail(ErrorCode::BadParameters, "entry outside the field");
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Mat Mat::parse(FieldPtr f, std::string_view text, std::size_t rows, std::size_t cols) {
  Mat m(f, rows, cols);
  std::size_t r = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    if (r >= rows) fail(ErrorCode::ParseError, "too many matrix rows");
    std::istringstream in{std::string(text.substr(start, end - start))};
    std::size_t c = 0;
    long long v;
    while (in >> v) {
      if (c >= cols) fail(ErrorCode::ParseError, "too many entries in matrix row");
      if (v < 0 || v >= f->q()) fail(ErrorCode::ParseError, "entry outside the field");
      m(r, c++) = static_cast<Elem>(v);
    }
    if (!in.eof()) fail(ErrorCode::ParseError, "bad matrix entry");
    if (c != cols) fail(ErrorCode::ParseError, "too few entries in matrix row");
    ++r;
    start = end + 1;
  }
  if (r != rows) fail(ErrorCode::ParseError, "wrong number of matrix rows");
  return m;
}

std::string Mat::to_text() const {
  std::string s;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) s += ';';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) s += ' ';
      s += std::to_string((*this)(r, c));
    }
  }
  return s;
}

Mat Mat::transpose() const {
  Mat t(f_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) fail(ErrorCode::AmbientMismatch, "matrix product shape mismatch");
  const Field& F = *f_;
  Mat r(f_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t l = 0; l < cols_; ++l) {
      Elem a = (*this)(i, l);
      if (!a) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) = F.add(r(i, j), F.mul(a, o(l, j)));
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::AmbientMismatch, "matrix sum shape mismatch");
  Mat r(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->add(a_[i], o.a_[i]);
  return r;
}

Mat Mat::stack(const Mat& below) const {
  if (cols_ != below.cols_) fail(ErrorCode::AmbientMismatch, "stacking matrices of different widths");
  Mat r(f_ ? f_ : below.f_, rows_ + below.rows_, cols_);
  std::copy(a_.begin(), a_.end(), r.a_.begin());
  std::copy(below.a_.begin(), below.a_.end(), r.a_.begin() + a_.size());
  return r;
}

Mat Mat::submatrix(std::size_t r0, std::size_t nrows, std::size_t c0, std::size_t ncols) const {
  Mat r(f_, nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
  return r;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](Elem e) { return e == 0; });
}

std::vector<std::size_t> rref_inplace(const Field& F, Elem* a, std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) std::swap_ranges(a + piv * cols, a + piv * cols + cols, a + r * cols);
    Elem* pr = a + r * cols;
    Elem s = F.inv(pr[c]);
    if (s != 1)
      for (std::size_t x = c; x < cols; ++x) pr[x] = F.mul(pr[x], s);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      Elem* pi = a + i * cols;
      Elem f = pi[c];
      if (!f) continue;
      Elem nf = F.neg(f);
      for (std::size_t x = c; x < cols; ++x)
        if (pr[x]) pi[x] = F.add(pi[x], F.mul(nf, pr[x]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Rref rref(const Mat& m) {
  Rref out{m, 0, {}};
  out.pivots = rref_inplace(*m.field(), out.reduced.data().data(), m.rows(), m.cols());
  out.rank = out.pivots.size();
  return out;
}

std::size_t block_rank(const Field& F, const Elem* a, std::size_t rows, std::size_t cols, Elem* s) {
  std::copy(a, a + rows * cols, s);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && s[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) std::swap_ranges(s + piv * cols, s + piv * cols + cols, s + r * cols);
    Elem* pr = s + r * cols;
    Elem ninv = F.neg(F.inv(pr[c]));
    for (std::size_t i = r + 1; i < rows; ++i) {
      Elem* pi = s + i * cols;
      if (!pi[c]) continue;
      Elem f = F.mul(pi[c], ninv);
      for (std::size_t x = c; x < cols; ++x)
        if (pr[x]) pi[x] = F.add(pi[x], F.mul(f, pr[x]));
    }
    ++r;
  }
  return r;
}

std::size_t rank(const Mat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  std::vector<Elem> scratch(m.rows() * m.cols());
  return block_rank(*m.field(), m.data().data(), m.rows(), m.cols(), scratch.data());
}

Mat kernel_basis(const Mat& m) {
  const Field& F = *m.field();
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  Mat k(m.field(), m.cols() - r.rank, m.cols());
  std::size_t row = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    k(row, f) = 1;
    for (std::size_t i = 0; i < r.rank; ++i) k(row, r.pivots[i]) = F.neg(r.reduced(i, f));
    ++row;
  }
  return k;
}

Subspace Subspace::span(const Mat& rows) {
  Rref r = rref(rows);
  return from_rref(r.reduced.submatrix(0, r.rank, 0, rows.cols()));
}

Subspace Subspace::zero(FieldPtr f, std::size_t n) { return from_rref(Mat(std::move(f), 0, n)); }

Subspace Subspace::full(FieldPtr f, std::size_t n) { return from_rref(Mat::identity(std::move(f), n)); }

Subspace Subspace::from_rref(Mat basis) {
  Subspace s;
  s.basis_ = std::move(basis);
  return s;
}

bool Subspace::contains(std::span<const Elem> v) const {
  if (v.size() != ambient()) fail(ErrorCode::AmbientMismatch, "vector length differs from ambient dimension");
  const Field& F = *field();
  std::vector<Elem> w(v.begin(), v.end());
  // Reduce against the RREF rows via their pivots.
  for (std::size_t i = 0; i < dim(); ++i) {
    const Elem* b = basis_.row(i);
    std::size_t p = 0;
    while (b[p] == 0) ++p;
    Elem c = w[p];
    if (!c) continue;
    Elem nc = F.neg(c);
    for (std::size_t x = p; x < w.size(); ++x)
      if (b[x]) w[x] = F.add(w[x], F.mul(nc, b[x]));
  }
  return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
}

bool Subspace::contains(const Subspace& u) const {
  if (u.ambient() != ambient()) fail(ErrorCode::AmbientMismatch, "subspaces in different ambients");
  for (std::size_t i = 0; i < u.dim(); ++i)
    if (!contains(std::span<const Elem>(u.basis_.row(i), ambient()))) return false;
  return true;
}

bool Subspace::operator<(const Subspace& o) const {
  auto a = basis_.data(), b = o.basis_.data();
  return std::make_tuple(ambient(), dim()) < std::make_tuple(o.ambient(), o.dim()) ||
         (std::make_tuple(ambient(), dim()) == std::make_tuple(o.ambient(), o.dim()) &&
          std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()));
}

std::size_t Subspace::hash() const {
  std::size_t h = ambient() * 1000003u + dim();
  for (Elem e : basis_.data()) h = h * 0x100000001b3ull + e + 0x9e3779b97f4a7c15ull;
  return h;
}

Subspace rowspace(const Mat& m) { return Subspace::span(m); }

Subspace colspace(const Mat& m) { return Subspace::span(m.transpose()); }

Subspace nullspace(const Mat& m) { return Subspace::span(kernel_basis(m)); }

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) fail(ErrorCode::AmbientMismatch, "subspaces in different ambients");
  return Subspace::span(u.basis().stack(v.basis()));
}

Subspace orthogonal_complement(const Subspace& u) {
  if (u.dim() == 0) return Subspace::full(u.field(), u.ambient());
  return nullspace(u.basis());
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) fail(ErrorCode::AmbientMismatch, "subspaces in different ambients");
  Mat duals = orthogonal_complement(u).basis().stack(orthogonal_complement(v).basis());
  if (duals.rows() == 0) return Subspace::full(u.field(), u.ambient());
  return nullspace(duals);
}

BigInt gaussian_binomial(long long n, long long k, std::uint64_t q) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  static std::mutex mu;
  static std::map<std::tuple<long long, long long, std::uint64_t>, BigInt> cache;
  auto key = std::make_tuple(n, k, q);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  BigInt num = 1, den = 1;
  for (long long i = 0; i < k; ++i) {
    num *= ipow(q, static_cast<std::uint64_t>(n - i)) - 1;
    den *= ipow(q, static_cast<std::uint64_t>(i + 1)) - 1;
  }
  BigInt v = num / den;
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, v);
  return v;
}

void for_each_subspace(const FieldPtr& f, std::size_t n, std::size_t k,
                       const std::function<void(const Subspace&)>& fn, const Limits& limits) {
  if (k > n) return;
  if (gaussian_binomial(static_cast<long long>(n), static_cast<long long>(k), f->q()) > limits.max_subspaces)
    fail(ErrorCode::TooLarge, "subspace enumeration exceeds the guard");
  const Elem q = f->q();
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    Mat b(f, k, n);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < k; ++i) {
      b(i, piv[i]) = 1;
      is_pivot[piv[i]] = true;
    }
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c = piv[i] + 1; c < n; ++c)
        if (!is_pivot[c]) free.emplace_back(i, c);
    while (true) {
      fn(Subspace::from_rref(b));
      std::size_t x = free.size();
      while (x > 0) {
        auto [r, c] = free[x - 1];
        if (++b(r, c) < q) break;
        b(r, c) = 0;
        --x;
      }
      if (x == 0) break;
    }
    // Next pivot combination.
    std::size_t i = k;
    while (i > 0 && piv[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
}

std::vector<Subspace> enumerate_subspaces(const FieldPtr& f, std::size_t n, std::size_t k, const Limits& limits) {
  std::vector<Subspace> out;
  for_each_subspace(f, n, k, [&](const Subspace& s) { out.push_back(s); }, limits);
  return out;
}

std::vector<Subspace> enumerate_all_subspaces(const FieldPtr& f, std::size_t n, const Limits& limits) {
  std::vector<Subspace> out;
  for (std::size_t k = 0; k <= n; ++k)
    for_each_subspace(f, n, k, [&](const Subspace& s) { out.push_back(s); }, limits);
  return out;
}

}  // namespace srk
