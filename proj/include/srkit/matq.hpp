#pragma once

#include "srkit/field.hpp"

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace srk {

class Mat {
 public:
  Mat() = default;
  Mat(FieldPtr f, std::size_t rows, std::size_t cols);
  static Mat identity(FieldPtr f, std::size_t n);
  static Mat from_rows(FieldPtr f, const std::vector<std::vector<Elem>>& rows);
  // Rows separated by ';', entries by spaces.
  static Mat parse(FieldPtr f, std::string_view text, std::size_t rows, std::size_t cols);
  std::string to_text() const;

  const FieldPtr& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Elem* row(std::size_t r) const { return a_.data() + r * cols_; }
  Elem* row(std::size_t r) { return a_.data() + r * cols_; }
  std::span<const Elem> data() const { return a_; }
  std::span<Elem> data() { return a_; }

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat stack(const Mat& below) const;
  Mat submatrix(std::size_t r0, std::size_t nrows, std::size_t c0, std::size_t ncols) const;
  bool is_zero() const;
  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  FieldPtr f_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> a_;
};

struct Rref {
  Mat reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

Rref rref(const Mat& m);
// In-place reduction of a row-major buffer; returns the pivot columns.
std::vector<std::size_t> rref_inplace(const Field& f, Elem* a, std::size_t rows, std::size_t cols);
std::size_t rank(const Mat& m);
// Rank of a small row-major block; scratch must hold rows*cols entries.
std::size_t block_rank(const Field& f, const Elem* a, std::size_t rows, std::size_t cols, Elem* scratch);
// Rows spanning {x : m x = 0}.
Mat kernel_basis(const Mat& m);

class Subspace {
 public:
  Subspace() = default;
  static Subspace span(const Mat& rows);
  static Subspace zero(FieldPtr f, std::size_t n);
  static Subspace full(FieldPtr f, std::size_t n);
  // Takes a matrix already in canonical form.
  static Subspace from_rref(Mat basis);

  const FieldPtr& field() const { return basis_.field(); }
  const Mat& basis() const { return basis_; }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient() const { return basis_.cols(); }
  bool contains(std::span<const Elem> v) const;
  bool contains(const Subspace& u) const;
  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
  bool operator<(const Subspace& o) const;
  std::size_t hash() const;

 private:
  Mat basis_;
};

Subspace rowspace(const Mat& m);
Subspace colspace(const Mat& m);
Subspace nullspace(const Mat& m);
Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
Subspace orthogonal_complement(const Subspace& u);

BigInt gaussian_binomial(long long n, long long k, std::uint64_t q);

// Subspaces of F^n of dimension k, by pivot pattern (pivot sets in ascending
// lexicographic order, then free entries as an odometer).
void for_each_subspace(const FieldPtr& f, std::size_t n, std::size_t k,
                       const std::function<void(const Subspace&)>& fn,
                       const Limits& limits = Limits::defaults());
std::vector<Subspace> enumerate_subspaces(const FieldPtr& f, std::size_t n, std::size_t k,
                                          const Limits& limits = Limits::defaults());
// All subspaces of F^n, grouped by dimension 0..n.
std::vector<Subspace> enumerate_all_subspaces(const FieldPtr& f, std::size_t n,
                                              const Limits& limits = Limits::defaults());

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const { return s.hash(); }
};

}  // namespace srk
