#include "srkit/asymptotics.hpp"

#include "srkit/matq.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace srk {

AsymptoticScenario AsymptoticScenario::uniform(std::uint64_t q, std::size_t n, std::size_t m) {
  AsymptoticScenario s;
  s.q = q;
  s.m_hat = m;
  s.tail_n = {n};
  s.validate();
  return s;
}

void AsymptoticScenario::validate() const {
  if (q < 2) fail(ErrorCode::BadParameters, "q must be at least 2");
  if (head_n.size() != head_m.size()) fail(ErrorCode::BadParameters, "head n and m lists differ in length");
  if (tail_n.empty()) fail(ErrorCode::BadParameters, "empty tail");
  if (m_hat == 0) fail(ErrorCode::BadParameters, "m must be positive");
  for (std::size_t i = 0; i < head_m.size(); ++i) {
    if (head_n[i] == 0 || head_n[i] > head_m[i]) fail(ErrorCode::BadParameters, "head blocks need 1 <= n <= m");
    std::size_t next = i + 1 < head_m.size() ? head_m[i + 1] : m_hat;
    if (head_m[i] < next) fail(ErrorCode::BadParameters, "m values must be non-increasing");
  }
  for (std::size_t n : tail_n)
    if (n == 0 || n > m_hat) fail(ErrorCode::BadParameters, "tail blocks need 1 <= n <= m");
}

std::size_t AsymptoticScenario::m1() const { return head_m.empty() ? m_hat : head_m.front(); }
std::size_t AsymptoticScenario::n_star() const { return *std::max_element(tail_n.begin(), tail_n.end()); }
std::size_t AsymptoticScenario::n_low() const { return *std::min_element(tail_n.begin(), tail_n.end()); }
bool AsymptoticScenario::constant_tail() const { return n_star() == n_low(); }

namespace {

void check_unit(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) fail(ErrorCode::DomainError, "eta must lie in [0, 1]");
}

double plotkin_like(double eta, double c) { return eta <= c ? 1.0 - eta / c : 0.0; }

}  // namespace

double hilbert_entropy(double x, double Q) {
  if (!(Q >= 2.0)) fail(ErrorCode::DomainError, "alphabet size must be at least 2");
  const double top = 1.0 - 1.0 / Q;
  if (!(x >= 0.0 && x <= top + 1e-15)) fail(ErrorCode::DomainError, "entropy argument outside [0, 1 - 1/Q]");
  if (x == 0.0) return 0.0;
  const double lq = std::log(Q);
  double h = x * std::log(Q - 1.0) / lq - x * std::log(x) / lq;
  if (x < 1.0) h -= (1.0 - x) * std::log(1.0 - x) / lq;
  return h;
}

double asymptotic_induced(double eta, std::uint64_t q, std::size_t m, InducedKind kind) {
  check_unit(eta);
  const double Q = std::pow(static_cast<double>(q), static_cast<double>(m));
  const double r = 1.0 - 1.0 / Q;
  switch (kind) {
    case InducedKind::Singleton:
      return 1.0 - eta;
    case InducedKind::Plotkin:
      return plotkin_like(eta, r);
    case InducedKind::Hamming:
      if (eta >= r) fail(ErrorCode::DomainError, "Hamming bound needs eta < 1 - q^-m");
      return 1.0 - hilbert_entropy(eta / 2.0, Q);
    case InducedKind::Elias:
      if (eta >= r) fail(ErrorCode::DomainError, "Elias bound needs eta < 1 - q^-m");
      return 1.0 - hilbert_entropy(r - std::sqrt(r * (r - eta)), Q);
  }
  return 0.0;
}

double asymptotic_singleton(double eta) {
  check_unit(eta);
  return 1.0 - eta;
}

double asymptotic_projective_sphere_packing(double eta) {
  check_unit(eta);
  return 1.0 - eta;
}

double asymptotic_total_distance(double eta, const AsymptoticScenario& s) {
  check_unit(eta);
  s.validate();
  // With a constant tail n_star is that constant, so one formula covers all cases.
  const double c = 1.0 - 1.0 / (static_cast<double>(s.n_star()) * std::pow(static_cast<double>(s.q), static_cast<double>(s.m_hat)));
  return plotkin_like(eta, c);
}

namespace {

// c_r = number of n x m matrices of rank r.
std::vector<BigInt> rank_coeffs(std::size_t n, std::size_t m, std::uint64_t q) {
  std::vector<BigInt> c(n + 1);
  for (std::size_t r = 0; r <= n; ++r) {
    BigInt v = gaussian_binomial(static_cast<long long>(n), static_cast<long long>(r), q);
    for (std::size_t j = 0; j < r; ++j) v *= ipow(q, m) - ipow(q, j);
    c[r] = v;
  }
  return c;
}

double big_log(const BigInt& v) {
  // log of a positive integer that may exceed double range
  std::size_t bits = boost::multiprecision::msb(v) + 1;
  if (bits <= 1000) return std::log(v.convert_to<double>());
  BigInt top = v >> (bits - 64);
  return std::log(top.convert_to<double>()) + static_cast<double>(bits - 64) * std::log(2.0);
}

void check_shape(std::size_t n, std::size_t m, std::uint64_t q) {
  if (n == 0 || m == 0 || q < 2) fail(ErrorCode::BadParameters, "need n, m >= 1 and q >= 2");
}

}  // namespace

BigRat average_rank(std::size_t n, std::size_t m, std::uint64_t q) {
  check_shape(n, m, q);
  auto c = rank_coeffs(n, m, q);
  BigInt num = 0;
  for (std::size_t r = 0; r <= n; ++r) num += c[r] * r;
  return BigRat(num, ipow(q, n * m));
}

double sumrank_entropy(double rho, std::size_t n, std::size_t m, std::uint64_t q, EntropyMethod method) {
  check_shape(n, m, q);
  const double eps = average_rank(n, m, q).convert_to<double>();
  if (!(rho >= 0.0 && rho <= eps * (1.0 + 1e-12))) fail(ErrorCode::DomainError, "rho must lie in [0, average rank]");
  if (rho == 0.0 && method == EntropyMethod::Exact) return 0.0;
  auto c = rank_coeffs(n, m, q);
  std::vector<double> lc(c.size());
  for (std::size_t r = 0; r < c.size(); ++r) lc[r] = big_log(c[r]);
  const double scale = static_cast<double>(m * n) * std::log(static_cast<double>(q));
  // log_{|pi|}(f(z) / z^rho) with u = log z, evaluated by log-sum-exp
  auto obj = [&](double u) {
    double mx = -INFINITY;
    for (std::size_t r = 0; r < lc.size(); ++r) mx = std::max(mx, lc[r] + r * u);
    double s = 0;
    for (std::size_t r = 0; r < lc.size(); ++r) s += std::exp(lc[r] + r * u - mx);
    return (mx + std::log(s) - rho * u) / scale;
  };
  if (method == EntropyMethod::Grid) {
    double best = INFINITY;
    for (int k = 1; k <= 10000; ++k) best = std::min(best, obj(std::log(k / 10000.0)));
    return best;
  }
  double lo = -40.0, hi = 0.0;
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    double a = lo + (hi - lo) / 3, b = hi - (hi - lo) / 3;
    if (obj(a) < obj(b))
      hi = b;
    else
      lo = a;
  }
  return obj((lo + hi) / 2);
}

SpherePair asymptotic_sphere_pack_cover(double eta, std::size_t n, std::size_t m, std::uint64_t q,
                                        EntropyMethod method) {
  check_shape(n, m, q);
  const double eps = average_rank(n, m, q).convert_to<double>();
  if (!(eta >= 0.0 && eta * n <= eps * (1.0 + 1e-12))) fail(ErrorCode::DomainError, "eta must lie in [0, eps/n]");
  const double dn = static_cast<double>(n);
  return {1.0 - sumrank_entropy(std::min(eta * dn / 2.0, eps), n, m, q, method),
          1.0 - sumrank_entropy(std::min(eta * dn, eps), n, m, q, method)};
}

const std::vector<std::string>& series_bound_names() {
  static const std::vector<std::string> names{"singleton",       "total-distance",    "projective-sphere-packing",
                                              "sphere-packing",  "sphere-covering",   "induced-singleton",
                                              "induced-hamming", "induced-plotkin",   "induced-elias"};
  return names;
}

namespace {

std::optional<double> series_value(const AsymptoticScenario& s, const std::string& b, double eta,
                                   EntropyMethod method) {
  try {
    if (b == "singleton") return asymptotic_singleton(eta);
    if (b == "projective-sphere-packing") return asymptotic_projective_sphere_packing(eta);
    if (b == "total-distance") return asymptotic_total_distance(eta, s);
    if (b == "sphere-packing" || b == "sphere-covering") {
      if (!s.constant_tail()) fail(ErrorCode::DomainError, "sphere bounds need a constant tail");
      auto pr = asymptotic_sphere_pack_cover(eta, s.tail_n[0], s.m_hat, s.q, method);
      return b == "sphere-packing" ? pr.upper : pr.lower;
    }
    if (b == "induced-singleton") return asymptotic_induced(eta, s.q, s.m1(), InducedKind::Singleton);
    if (b == "induced-hamming") return asymptotic_induced(eta, s.q, s.m1(), InducedKind::Hamming);
    if (b == "induced-plotkin") return asymptotic_induced(eta, s.q, s.m1(), InducedKind::Plotkin);
    if (b == "induced-elias") return asymptotic_induced(eta, s.q, s.m1(), InducedKind::Elias);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DomainError) return std::nullopt;
    throw;
  }
  fail(ErrorCode::BadParameters, "unknown bound " + b);
}

}  // namespace

std::vector<SeriesRow> emit_series(const AsymptoticScenario& s, const std::vector<std::string>& bounds,
                                   const std::vector<double>& grid, EntropyMethod method) {
  s.validate();
  for (const auto& b : bounds)
    if (std::find(series_bound_names().begin(), series_bound_names().end(), b) == series_bound_names().end())
      fail(ErrorCode::BadParameters, "unknown bound " + b);
  std::vector<SeriesRow> rows;
  for (const auto& b : bounds)
    for (double eta : grid)
      if (auto v = series_value(s, b, eta, method)) rows.push_back({eta, b, *v});
  return rows;
}

void write_series_csv(std::ostream& out, const std::vector<SeriesRow>& rows) {
  out << "eta,bound,value\n";
  for (const auto& r : rows) {
    std::ostringstream line;
    line << std::setprecision(10) << r.eta << ',' << r.bound << ',' << std::setprecision(12) << r.value;
    out << line.str() << '\n';
  }
}

std::vector<double> parse_grid(const std::string& text) {
  double lo = 0, hi = 0, step = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || !(in >> std::ws).eof())
    fail(ErrorCode::ParseError, "grid must look like lo:hi:step");
  if (!(step > 0) || hi < lo || lo < 0 || hi > 1) fail(ErrorCode::BadParameters, "grid must satisfy 0 <= lo <= hi <= 1, step > 0");
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
  if (count > 10000000) fail(ErrorCode::TooLarge, "grid too fine");
  std::vector<double> g;
  for (std::size_t i = 0; i <= count; ++i) g.push_back(std::min(hi, lo + static_cast<double>(i) * step));
  return g;
}

double total_distance_crossover(const AsymptoticScenario& s, EntropyMethod method) {
  s.validate();
  if (!s.constant_tail()) fail(ErrorCode::DomainError, "sphere bounds need a constant tail");
  const std::size_t n = s.tail_n[0];
  const double top = average_rank(n, s.m_hat, s.q).convert_to<double>() / static_cast<double>(n);
  auto diff = [&](double eta) {
    return asymptotic_total_distance(eta, s) - asymptotic_sphere_pack_cover(eta, n, s.m_hat, s.q, method).upper;
  };
  const int steps = 2000;
  double prev = 0;
  for (int i = 1; i <= steps; ++i) {
    double eta = top * i / steps;
    if (diff(eta) < 0) {
      double lo = prev, hi = eta;
      for (int it = 0; it < 100; ++it) {
        double mid = (lo + hi) / 2;
        (diff(mid) < 0 ? hi : lo) = mid;
      }
      return (lo + hi) / 2;
    }
    prev = eta;
  }
  fail(ErrorCode::DomainError, "no crossover inside the sphere-packing domain");
}

}  // namespace srk
