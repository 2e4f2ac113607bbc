#pragma once

#include "srkit/common.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace srk {

// Field elements are base-p integer codes of their coefficient vectors.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  // modulus is given high to low: c_k, ..., c_0.
  static FieldPtr create(std::uint32_t p, std::uint32_t k,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);
  static FieldPtr create(std::uint32_t q);
  // Text form q=p^k;mod=c_k,...,c_0
  static FieldPtr parse(std::string_view text);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::string modulus_text() const;
  std::string to_string() const;
  bool operator==(const Field& o) const {
    return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
  }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  // a^(p^i); i is taken modulo k.
  Elem frobenius(Elem a, long long i) const;
  // The generator used for the log tables.
  Elem primitive() const { return prim_; }

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field() = default;
  void build();
  Elem mul_slow(Elem a, Elem b) const;

  std::uint32_t p_ = 2, k_ = 1, q_ = 2;
  std::vector<std::uint32_t> modulus_;  // high to low
  std::vector<std::uint32_t> low_;      // c_0..c_{k-1}
  Elem prim_ = 1;
  bool tables_ = false;
  std::vector<std::uint32_t> log_, exp_;
  std::vector<Elem> add_;
};

// Monic Conway polynomial of degree k over GF(p), high to low.
std::vector<std::uint32_t> conway_polynomial(std::uint32_t p, std::uint32_t k);
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& high_to_low);

// Value wrapper with field checks; the bare Elem interface is used in hot loops.
class FieldElement {
 public:
  FieldElement(FieldPtr f, Elem code);
  const FieldPtr& field() const { return f_; }
  Elem code() const { return code_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;
  bool operator==(const FieldElement& o) const;

 private:
  const Field& check(const FieldElement& o) const;
  FieldPtr f_;
  Elem code_;
};

// GF(q) inside GF(q^m) with ordered basis beta^0..beta^(m-1), beta = x of the top field.
class Tower {
 public:
  static Tower create(FieldPtr base, std::uint32_t m);
  static Tower create(FieldPtr base, FieldPtr top);

  const FieldPtr& base() const { return base_; }
  const FieldPtr& top() const { return top_; }
  std::uint32_t degree() const { return m_; }
  Elem embed(Elem a) const { return embed_[a]; }
  Elem basis(std::uint32_t i) const { return basis_[i]; }
  std::vector<Elem> coords(Elem a) const;
  Elem uncoords(std::span<const Elem> c) const;

 private:
  FieldPtr base_, top_;
  std::uint32_t m_ = 1;
  std::vector<Elem> embed_, basis_;
  // Inverse of the GF(p) matrix whose columns are the digit vectors of
  // embed(p^j) * beta^i, laid out (i, j) -> i*k + j.
  std::vector<std::uint32_t> inv_;
};

}  // namespace srk
