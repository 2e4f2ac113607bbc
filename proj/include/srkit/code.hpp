#pragma once

#include "srkit/ambient.hpp"
#include "srkit/bounds.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace srk {

class LinearCode {
 public:
  LinearCode() = default;
  // Keeps the first maximal independent subset of the generators.
  static LinearCode create(ProfilePtr p, const std::vector<MatrixTuple>& gens);
  // Rows of g are flattened tuples.
  static LinearCode from_matrix(ProfilePtr p, const Mat& g);

  const ProfilePtr& profile() const { return p_; }
  const FieldPtr& field() const { return p_->field(); }
  std::size_t dim() const { return g_.rows(); }
  const Mat& generator() const { return g_; }
  MatrixTuple basis_element(std::size_t i) const;
  std::vector<MatrixTuple> basis() const;
  BigInt size() const { return ipow(p_->q(), dim()); }
  bool contains(const MatrixTuple& x) const;
  bool same_space(const LinearCode& o) const;

 private:
  ProfilePtr p_;
  Mat g_;
};

// Visits every codeword once, in lexicographic order of the coefficient vector
// (first coefficient most significant).
void for_each_codeword(const LinearCode& c,
                       const std::function<void(std::span<const Elem> coeffs, std::span<const Elem> word)>& fn,
                       const Limits& limits = Limits::defaults());
std::vector<MatrixTuple> codewords(const LinearCode& c, const Limits& limits = Limits::defaults());
void check_enumerable(const LinearCode& c, const Limits& limits);

std::size_t minimum_distance(const LinearCode& c, unsigned threads = 1, const Limits& limits = Limits::defaults());
LinearCode dual(const LinearCode& c);
// Subcode of codewords with support inside u.
LinearCode shorten(const LinearCode& c, const SubspaceTuple& u);
std::size_t count_supported_in(const LinearCode& c, const SubspaceTuple& u, const Limits& limits = Limits::defaults());
bool duality_shorten_check(const LinearCode& c, const SubspaceTuple& u, const Limits& limits = Limits::defaults());

struct MsrdWitness {
  bool is_msrd = false;
  std::optional<std::size_t> d;  // empty for the zero code
  BigInt singleton_value;
  std::size_t singleton_exponent = 0;
  std::size_t j = 0;  // 0-based block index
  std::size_t delta = 0;
};

MsrdWitness msrd_check(const LinearCode& c, unsigned threads = 1, const Limits& limits = Limits::defaults());

struct SystematicForm {
  std::vector<MatrixTuple> basis;
  std::vector<std::size_t> tail;  // flattened positions, in pivot order
  std::vector<std::size_t> head;
  std::size_t j = 0;
  std::size_t delta = 0;
};

SystematicForm systematic_form(const LinearCode& c, const MsrdWitness& w);
SystematicForm systematic_form(const LinearCode& c, const Limits& limits = Limits::defaults());

// New block i is old block order[i]; the m values must stay non-increasing.
LinearCode reorder_blocks(const LinearCode& c, const std::vector<std::size_t>& order);

// Block indices are 0-based. The witness must describe c.
LinearCode msrd_shorten_row(const LinearCode& c, std::size_t s, const MsrdWitness& w,
                            const Limits& limits = Limits::defaults());
LinearCode msrd_shorten_col(const LinearCode& c, std::size_t s, const MsrdWitness& w,
                            const Limits& limits = Limits::defaults());
LinearCode msrd_puncture_row(const LinearCode& c, std::size_t s, const MsrdWitness& w,
                             const Limits& limits = Limits::defaults());
LinearCode msrd_shorten_row(const LinearCode& c, std::size_t s, const Limits& limits = Limits::defaults());
LinearCode msrd_shorten_col(const LinearCode& c, std::size_t s, const Limits& limits = Limits::defaults());
LinearCode msrd_puncture_row(const LinearCode& c, std::size_t s, const Limits& limits = Limits::defaults());

// Builds a code in the profile given by raw blocks, each generator given as
// blocks in that same raw order.
LinearCode code_from_blocks(const FieldPtr& f, const std::vector<Block>& raw,
                            const std::vector<std::vector<Mat>>& gens);

}  // namespace srk
