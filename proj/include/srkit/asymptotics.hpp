#pragma once

#include "srkit/common.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace srk {

// Block sequences: a finite head of (n_i, m_i) followed by an infinite tail in
// which every block has m = m_hat and n cycles through tail_n.
struct AsymptoticScenario {
  std::uint64_t q = 2;
  std::vector<std::size_t> head_n, head_m;
  std::size_t m_hat = 1;
  std::vector<std::size_t> tail_n{1};

  static AsymptoticScenario uniform(std::uint64_t q, std::size_t n, std::size_t m);
  void validate() const;
  std::size_t m1() const;  // largest m
  std::size_t n_star() const;
  std::size_t n_low() const;
  bool constant_tail() const;
};

double hilbert_entropy(double x, double Q);

enum class InducedKind { Singleton, Hamming, Plotkin, Elias };
double asymptotic_induced(double eta, std::uint64_t q, std::size_t m, InducedKind kind);

double asymptotic_singleton(double eta);
double asymptotic_projective_sphere_packing(double eta);
double asymptotic_total_distance(double eta, const AsymptoticScenario& s);

// Average rank of a uniformly random n x m matrix.
BigRat average_rank(std::size_t n, std::size_t m, std::uint64_t q);

// Exact: ternary search on log z. Grid: minimum over z = k/10^4, k = 1..10^4,
// which is how the published curves were sampled.
enum class EntropyMethod { Exact, Grid };
double sumrank_entropy(double rho, std::size_t n, std::size_t m, std::uint64_t q,
                       EntropyMethod method = EntropyMethod::Exact);

struct SpherePair {
  double upper = 0, lower = 0;
};
SpherePair asymptotic_sphere_pack_cover(double eta, std::size_t n, std::size_t m, std::uint64_t q,
                                        EntropyMethod method = EntropyMethod::Exact);

// Bound names accepted by the series writer.
const std::vector<std::string>& series_bound_names();

struct SeriesRow {
  double eta = 0;
  std::string bound;
  double value = 0;
};

// Points outside a bound's domain are left out.
std::vector<SeriesRow> emit_series(const AsymptoticScenario& s, const std::vector<std::string>& bounds,
                                   const std::vector<double>& grid, EntropyMethod method = EntropyMethod::Exact);
void write_series_csv(std::ostream& out, const std::vector<SeriesRow>& rows);
// "lo:hi:step"
std::vector<double> parse_grid(const std::string& text);

// Smallest eta in (0, eps/n) past which the total-distance curve lies below
// the sphere-packing curve; needs a constant tail.
double total_distance_crossover(const AsymptoticScenario& s, EntropyMethod method = EntropyMethod::Exact);

}  // namespace srk
