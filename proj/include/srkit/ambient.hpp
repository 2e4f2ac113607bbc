#pragma once

#include "srkit/matq.hpp"

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace srk {

struct Block {
  std::size_t n = 0, m = 0;
  bool operator==(const Block&) const = default;
};

class Profile;
using ProfilePtr = std::shared_ptr<const Profile>;

// Blocks are kept sorted by non-increasing m (stable); permutation()[i] is the
// user index of normalized block i.
class Profile {
 public:
  static ProfilePtr create(FieldPtr f, std::vector<Block> raw);
  // "2x2,1x2x7,1x1x5": nxm with an optional repeat count.
  static std::vector<Block> parse_blocks(std::string_view text);
  static std::string blocks_text(const std::vector<Block>& blocks);

  const FieldPtr& field() const { return f_; }
  std::uint32_t q() const { return f_->q(); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(std::size_t i) const { return blocks_[i]; }
  const std::vector<std::size_t>& permutation() const { return perm_; }
  std::vector<Block> original_blocks() const;
  std::string to_text() const { return blocks_text(original_blocks()); }

  std::size_t t() const { return blocks_.size(); }
  std::size_t N() const { return N_; }
  std::size_t M() const { return M_; }
  std::size_t dim() const { return dim_; }
  const BigRat& Q() const { return Q_; }
  std::size_t offset(std::size_t i) const { return offsets_[i]; }
  std::size_t block_size(std::size_t i) const { return blocks_[i].n * blocks_[i].m; }
  bool equal_m() const;
  BigInt cardinality() const { return ipow(q(), dim_); }
  bool same_as(const Profile& o) const { return *f_ == *o.f_ && blocks_ == o.blocks_; }

 private:
  FieldPtr f_;
  std::vector<Block> blocks_;
  std::vector<std::size_t> perm_, offsets_;
  std::size_t N_ = 0, M_ = 0, dim_ = 0;
  BigRat Q_;
};

void require_same_profile(const Profile& a, const Profile& b);

class SubspaceTuple;

// Entries are flattened block-major, row-major inside each block.
class MatrixTuple {
 public:
  MatrixTuple() = default;
  explicit MatrixTuple(ProfilePtr p);
  MatrixTuple(ProfilePtr p, std::vector<Elem> flat);
  static MatrixTuple from_blocks(ProfilePtr p, const std::vector<Mat>& blocks);

  const ProfilePtr& profile() const { return p_; }
  std::span<const Elem> data() const { return a_; }
  std::span<Elem> data() { return a_; }
  Mat block(std::size_t i) const;
  void set_block(std::size_t i, const Mat& m);
  Elem at(std::size_t i, std::size_t r, std::size_t c) const {
    return a_[p_->offset(i) + r * p_->block(i).m + c];
  }
  MatrixTuple operator+(const MatrixTuple& o) const;
  MatrixTuple operator-(const MatrixTuple& o) const;
  MatrixTuple scaled(Elem s) const;
  bool operator==(const MatrixTuple& o) const { return a_ == o.a_; }
  bool is_zero() const;

 private:
  ProfilePtr p_;
  std::vector<Elem> a_;
};

std::size_t sumrank_weight(const MatrixTuple& x);
std::vector<std::size_t> rank_vector(const MatrixTuple& x);
SubspaceTuple support(const MatrixTuple& x);
Elem trace_product(const MatrixTuple& x, const MatrixTuple& y);
Mat blockdiag_embed(const MatrixTuple& x);

class SubspaceTuple {
 public:
  SubspaceTuple() = default;
  SubspaceTuple(ProfilePtr p, std::vector<Subspace> parts);
  static SubspaceTuple zero(ProfilePtr p);
  static SubspaceTuple full(ProfilePtr p);

  const ProfilePtr& profile() const { return p_; }
  const std::vector<Subspace>& parts() const { return parts_; }
  const Subspace& part(std::size_t i) const { return parts_[i]; }
  std::size_t rank_L() const;
  std::vector<std::size_t> dim_vector() const;
  // Componentwise containment.
  bool leq(const SubspaceTuple& o) const;
  SubspaceTuple orthogonal() const;
  bool operator==(const SubspaceTuple& o) const { return parts_ == o.parts_; }
  bool operator<(const SubspaceTuple& o) const;
  std::size_t hash() const;
  std::string to_string() const;

 private:
  ProfilePtr p_;
  std::vector<Subspace> parts_;
};

struct SubspaceTupleHash {
  std::size_t operator()(const SubspaceTuple& s) const { return s.hash(); }
};

BigInt mobius(const SubspaceTuple& u, const SubspaceTuple& v);

// Number of n x m matrices of each rank 0..n.
std::vector<BigInt> rank_counts(std::size_t n, std::size_t m, std::uint64_t q);
// V_0..V_N.
std::vector<BigInt> sphere_volumes(const Profile& p);
BigInt sphere_volume(const Profile& p, std::size_t r);

// Cartesian product of per-block subspace lists, first block slowest.
void for_each_lattice_element(const ProfilePtr& p, const std::vector<std::size_t>& dims,
                              const std::function<void(const SubspaceTuple&)>& fn,
                              const Limits& limits = Limits::defaults());
std::vector<SubspaceTuple> enumerate_lattice(const ProfilePtr& p, const std::vector<std::size_t>& dims,
                                             const Limits& limits = Limits::defaults());
std::vector<SubspaceTuple> enumerate_lattice_rank(const ProfilePtr& p, std::size_t r,
                                                  const Limits& limits = Limits::defaults());
std::vector<SubspaceTuple> enumerate_lattice_all(const ProfilePtr& p,
                                                 const Limits& limits = Limits::defaults());

// All vectors u with 0 <= u_i <= bound_i, first coordinate slowest.
void for_each_box_vector(const std::vector<std::size_t>& bound,
                         const std::function<void(const std::vector<std::size_t>&)>& fn);

}  // namespace srk
