#pragma once

#include "srkit/code.hpp"

#include <optional>
#include <string>
#include <vector>

namespace srk {

// A constructed code with the distance its construction guarantees.
struct Construction {
  LinearCode code;
  std::size_t distance = 0;
  std::optional<LinearCode> dual;  // displayed dual, when the construction gives one
  std::string note;
};

// F_q-basis of the Gabidulin [n x m; d] code: gamma_l x^{q^i} evaluated at
// beta^0..beta^{n-1}, rows expanded in the tower basis.
std::vector<Mat> gabidulin_basis(const FieldPtr& f, std::size_t n, std::size_t m, std::size_t d);
LinearCode gabidulin_mrd(const FieldPtr& f, std::size_t n, std::size_t m, std::size_t d);

// Vandermonde generator on the nonzero elements in code order, then 0, then
// the point at infinity. Distance 1 gives the identity.
Mat rs_mds(const FieldPtr& f, std::size_t length, std::size_t distance);
// Minimum Hamming distance of the span of the rows (over their field).
std::size_t hamming_distance(const Mat& g, const Limits& limits = Limits::defaults());

Construction construct_mds_lift(const FieldPtr& f, std::size_t m, std::size_t t, std::size_t d);
// Distance 2 on any profile; the displayed dual is attached when all m agree.
Construction construct_d2(const ProfilePtr& p);
Construction construct_dN(const ProfilePtr& p);
// Distance N - alpha; needs n_t >= alpha + 1 and (alpha + 1) m_t <= m_{t-1}.
Construction construct_dN_minus(const ProfilePtr& p, std::size_t alpha = 1);
// Inner blocks followed by t2 blocks 1x1; g is an MDS generator of size
// m_min x t2 (chosen automatically when absent).
Construction construct_msrd111(const FieldPtr& f, const std::vector<Block>& inner, std::size_t t2,
                               const std::optional<Mat>& g = std::nullopt);
// Inner blocks followed by t2 blocks 1 x (m_min / a).
Construction construct_combine(const FieldPtr& f, const std::vector<Block>& inner, std::size_t t2, std::size_t a);
// s+1 blocks 1xm and m+1 blocks 1x1, distance s+2.
Construction construct_msrd111_ext(const FieldPtr& f, std::size_t m, std::size_t s);
// Pi(n x n | 1 x 1) with an MRD code of distance 2 glued to Z = E11.
Construction construct_dual_not_msrd(const FieldPtr& f, std::size_t n);

// Lifting of a Hamming-metric code: h_gens span H over F_q (entries in
// GF(q^h)); block i uses an MRD code of distance deltas[i]. delta_h is the
// Hamming distance of H, computed by enumeration when absent.
Construction construct_lifting(const ProfilePtr& p, const std::vector<std::size_t>& deltas, std::size_t h,
                               const std::vector<std::vector<Elem>>& h_gens,
                               std::optional<std::size_t> delta_h = std::nullopt,
                               const Limits& limits = Limits::defaults());
// Generator of the r-dimensional simplex code over f.
Mat simplex_generator(const FieldPtr& f, std::size_t r);
// q=2, m=4, n=3, t=273 lift of the GF(16) simplex code of dimension 3.
Construction construct_simplex_lift(std::uint32_t q = 2, std::size_t m = 4, std::size_t n = 3, std::size_t r = 3);

}  // namespace srk
