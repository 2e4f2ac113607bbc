#include "srkit/field.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <sstream>

namespace srk {

namespace {

using Poly = std::vector<std::uint32_t>;  // ascending coefficients over GF(p)

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t modinv(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder modulo a monic f.
void reduce(Poly& a, const Poly& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  trim(a);
  while (a.size() > k) {
    std::uint64_t c = a.back();
    std::size_t shift = a.size() - 1 - k;
    for (std::size_t j = 0; j < k; ++j)
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + (p - c) * f[j]) % p);
    a.pop_back();
    trim(a);
  }
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  }
  reduce(r, f, p);
  return r;
}

Poly powmod(Poly a, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly r{1};
  reduce(r, f, p);
  reduce(a, f, p);
  while (e) {
    if (e & 1) r = mulmod(r, a, f, p);
    e >>= 1;
    if (e) a = mulmod(a, a, f, p);
  }
  return r;
}

Poly polygcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    std::uint32_t li = modinv(b.back(), p);
    Poly monic = b;
    for (auto& c : monic) c = static_cast<std::uint32_t>(std::uint64_t(c) * li % p);
    reduce(a, monic, p);
    std::swap(a, b);
  }
  return a;
}

bool is_one(const Poly& a) { return a.size() == 1 && a[0] == 1; }

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t upow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

Poly ascending(const std::vector<std::uint32_t>& high_to_low) {
  return Poly(high_to_low.rbegin(), high_to_low.rend());
}

std::vector<std::uint32_t> descending(const Poly& a) {
  return std::vector<std::uint32_t>(a.rbegin(), a.rend());
}

bool x_is_primitive(const Poly& f, std::uint32_t p) {
  const std::uint32_t k = static_cast<std::uint32_t>(f.size() - 1);
  const std::uint64_t order = upow(p, k) - 1;
  const Poly x{0, 1};
  if (!is_one(powmod(x, order, f, p))) return false;
  for (std::uint64_t r : prime_factors(order))
    if (is_one(powmod(x, order / r, f, p))) return false;
  return true;
}

std::recursive_mutex conway_mutex;
std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> conway_cache;

Poly conway_ascending(std::uint32_t p, std::uint32_t k) {
  std::lock_guard<std::recursive_mutex> lock(conway_mutex);
  auto key = std::make_pair(p, k);
  if (auto it = conway_cache.find(key); it != conway_cache.end()) return it->second;

  std::vector<std::pair<std::uint32_t, Poly>> subs;
  for (std::uint32_t d = 1; d < k; ++d)
    if (k % d == 0) subs.emplace_back(d, conway_ascending(p, d));

  const std::uint64_t total = upow(p, k);
  Poly found;
  // Candidates are ordered lexicographically on (a_{k-1}, ..., a_0) where the
  // coefficient of x^i is (-1)^(k-i) a_i.
  for (std::uint64_t idx = 0; idx < total && found.empty(); ++idx) {
    Poly f(k + 1, 0);
    f[k] = 1;
    std::uint64_t v = idx;
    for (std::uint32_t i = 0; i < k; ++i) {
      std::uint32_t a = static_cast<std::uint32_t>(v % p);
      v /= p;
      f[i] = ((k - i) % 2 == 0 || a == 0) ? a : p - a;
    }
    if (f[0] == 0) continue;
    if (!x_is_primitive(f, p)) continue;
    bool ok = true;
    for (const auto& [d, c] : subs) {
      Poly y = powmod(Poly{0, 1}, (total - 1) / (upow(p, d) - 1), f, p);
      Poly acc;
      for (std::size_t i = c.size(); i-- > 0;) {
        acc = mulmod(acc, y, f, p);
        if (acc.size() < 1) acc.resize(1, 0);
        acc[0] = (acc[0] + c[i]) % p;
        trim(acc);
      }
      if (!acc.empty()) {
        ok = false;
        break;
      }
    }
    if (ok) found = f;
  }
  if (found.empty()) fail(ErrorCode::BadParameters, "no Conway polynomial found");
  conway_cache.emplace(key, found);
  return found;
}

Poly smallest_irreducible(std::uint32_t p, std::uint32_t k) {
  const std::uint64_t total = upow(p, k);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Poly f(k + 1, 0);
    f[k] = 1;
    std::uint64_t v = idx;
    for (std::uint32_t i = 0; i < k; ++i) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    if (is_irreducible(p, descending(f))) return f;
  }
  fail(ErrorCode::BadParameters, "no irreducible polynomial found");
}

}  // namespace

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& high_to_low) {
  Poly f = ascending(high_to_low);
  trim(f);
  if (f.size() < 2) return false;
  const std::uint32_t k = static_cast<std::uint32_t>(f.size() - 1);
  if (f.back() != 1) {
    std::uint32_t li = modinv(f.back(), p);
    for (auto& c : f) c = static_cast<std::uint32_t>(std::uint64_t(c) * li % p);
  }
  if (k == 1) return true;
  const Poly x{0, 1};
  auto frob = [&](std::uint32_t times) {
    Poly h = x;
    for (std::uint32_t i = 0; i < times; ++i) h = powmod(h, p, f, p);
    return h;
  };
  Poly h = frob(k);
  Poly xr = x;
  reduce(xr, f, p);
  if (h != xr) return false;
  for (std::uint64_t r : prime_factors(k)) {
    Poly g = frob(static_cast<std::uint32_t>(k / r));
    g.resize(std::max<std::size_t>(g.size(), 2), 0);
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    if (!is_one(polygcd(f, g, p))) return false;
  }
  return true;
}

std::vector<std::uint32_t> conway_polynomial(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (k == 0) fail(ErrorCode::DegreeMismatch, "degree must be positive");
  return descending(conway_ascending(p, k));
}

FieldPtr Field::create(std::uint32_t p, std::uint32_t k,
                       std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (k == 0) fail(ErrorCode::DegreeMismatch, "extension degree must be at least 1");
  std::uint64_t q = upow(p, 1);
  for (std::uint32_t i = 1; i < k; ++i) {
    q *= p;
    if (q > (std::uint64_t{1} << 20)) fail(ErrorCode::TooLarge, "fields above 2^20 elements are not supported");
  }
  std::shared_ptr<Field> f(new Field());
  f->p_ = p;
  f->k_ = k;
  f->q_ = static_cast<std::uint32_t>(q);
  if (modulus) {
    if (modulus->size() != k + 1)
      fail(ErrorCode::DegreeMismatch, "modulus must have exactly k+1 coefficients");
    if ((*modulus)[0] != 1) fail(ErrorCode::DegreeMismatch, "modulus must be monic of degree k");
    for (auto c : *modulus)
      if (c >= p) fail(ErrorCode::DegreeMismatch, "modulus coefficient out of range");
    if (!is_irreducible(p, *modulus)) fail(ErrorCode::ReducibleModulus, "modulus is reducible");
    f->modulus_ = *modulus;
  } else if (k == 1) {
    f->modulus_ = {1, 0};
  } else if (q <= (1u << 16)) {
    f->modulus_ = conway_polynomial(p, k);
  } else {
    f->modulus_ = descending(smallest_irreducible(p, k));
  }
  f->build();
  return f;
}

FieldPtr Field::create(std::uint32_t q) {
  if (q < 2) fail(ErrorCode::NotPrime, "field size must be a prime power");
  auto ps = prime_factors(q);
  if (ps.size() != 1) fail(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
  std::uint32_t p = static_cast<std::uint32_t>(ps[0]), k = 0;
  for (std::uint32_t v = q; v > 1; v /= p) ++k;
  return create(p, k);
}

namespace {

std::uint32_t parse_uint(std::string_view s, const char* what) {
  std::uint32_t v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || s.empty())
    fail(ErrorCode::ParseError, std::string("bad ") + what + " '" + std::string(s) + "'");
  return v;
}

}  // namespace

FieldPtr Field::parse(std::string_view text) {
  if (text.substr(0, 2) != "q=") fail(ErrorCode::ParseError, "field text must start with q=");
  text.remove_prefix(2);
  std::string_view head = text, mod;
  if (auto semi = text.find(';'); semi != std::string_view::npos) {
    head = text.substr(0, semi);
    mod = text.substr(semi + 1);
    if (mod.substr(0, 4) != "mod=") fail(ErrorCode::ParseError, "expected mod= after ';'");
    mod.remove_prefix(4);
  }
  std::uint32_t p, k = 1;
  if (auto caret = head.find('^'); caret != std::string_view::npos) {
    p = parse_uint(head.substr(0, caret), "characteristic");
    k = parse_uint(head.substr(caret + 1), "degree");
  } else {
    return create(parse_uint(head, "field size"));
  }
  if (mod.empty()) return create(p, k);
  std::vector<std::uint32_t> coeffs;
  while (true) {
    auto comma = mod.find(',');
    coeffs.push_back(parse_uint(mod.substr(0, comma), "coefficient"));
    if (comma == std::string_view::npos) break;
    mod.remove_prefix(comma + 1);
  }
  return create(p, k, coeffs);
}

std::string Field::modulus_text() const {
  std::string s;
  for (std::size_t i = 0; i < modulus_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(modulus_[i]);
  }
  return s;
}

std::string Field::to_string() const {
  return "q=" + std::to_string(p_) + "^" + std::to_string(k_) + ";mod=" + modulus_text();
}

void Field::build() {
  low_.assign(k_, 0);
  for (std::uint32_t i = 0; i < k_; ++i) low_[i] = modulus_[k_ - i];
  if (p_ != 2 && k_ > 1 && q_ <= 256) {
    add_.resize(std::size_t(q_) * q_);
    for (Elem a = 0; a < q_; ++a)
      for (Elem b = 0; b < q_; ++b) {
        Elem r = 0, pw = 1, x = a, y = b;
        for (std::uint32_t i = 0; i < k_; ++i) {
          r += ((x % p_ + y % p_) % p_) * pw;
          x /= p_;
          y /= p_;
          pw *= p_;
        }
        add_[std::size_t(a) * q_ + b] = r;
      }
  }

  const std::uint64_t order = q_ - 1;
  auto factors = prime_factors(order);
  auto has_full_order = [&](Elem g) {
    if (g == 0) return false;
    for (std::uint64_t r : factors)
      if (pow(g, order / r) == 1) return false;
    return true;
  };
  prim_ = 1;
  if (q_ > 2) {
    if (k_ > 1 && has_full_order(p_)) {
      prim_ = p_;
    } else {
      for (Elem g = 2; g < q_; ++g)
        if (has_full_order(g)) {
          prim_ = g;
          break;
        }
    }
  }
  if (q_ <= (1u << 16)) {
    exp_.assign(2 * order + 1, 0);
    log_.assign(q_, 0);
    Elem x = 1;
    for (std::uint64_t i = 0; i < order; ++i) {
      exp_[i] = x;
      exp_[i + order] = x;
      log_[x] = static_cast<std::uint32_t>(i);
      x = mul_slow(x, prim_);
    }
    exp_[2 * order] = 1;
    tables_ = true;
  }
}

Elem Field::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (k_ == 1) {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (!add_.empty()) return add_[std::size_t(a) * q_ + b];
  Elem r = 0, pw = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    r += ((a % p_ + b % p_) % p_) * pw;
    a /= p_;
    b /= p_;
    pw *= p_;
  }
  return r;
}

Elem Field::neg(Elem a) const {
  if (p_ == 2) return a;
  if (k_ == 1) return a ? p_ - a : 0;
  Elem r = 0, pw = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    Elem d = a % p_;
    r += (d ? p_ - d : 0) * pw;
    a /= p_;
    pw *= p_;
  }
  return r;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul_slow(Elem a, Elem b) const {
  if (k_ == 1) return static_cast<Elem>(std::uint64_t(a) * b % p_);
  std::vector<std::uint64_t> x(k_), y(k_), r(2 * k_ - 1, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    x[i] = a % p_;
    a /= p_;
    y[i] = b % p_;
    b /= p_;
  }
  for (std::uint32_t i = 0; i < k_; ++i)
    if (x[i])
      for (std::uint32_t j = 0; j < k_; ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p_;
  for (std::size_t i = r.size(); i-- > k_;) {
    std::uint64_t c = r[i];
    if (!c) continue;
    for (std::uint32_t j = 0; j < k_; ++j)
      r[i - k_ + j] = (r[i - k_ + j] + (p_ - c) * low_[j]) % p_;
  }
  Elem out = 0;
  for (std::uint32_t i = k_; i-- > 0;) out = out * p_ + static_cast<Elem>(r[i]);
  return out;
}

Elem Field::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (tables_) return exp_[log_[a] + log_[b]];
  return mul_slow(a, b);
}

Elem Field::inv(Elem a) const {
  if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
  if (tables_) return a == 1 ? 1 : exp_[(q_ - 1) - log_[a]];
  return pow(a, q_ - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (tables_) return exp_[(std::uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
  Elem r = 1, b = a;
  while (e) {
    if (e & 1) r = mul_slow(r, b);
    e >>= 1;
    if (e) b = mul_slow(b, b);
  }
  return r;
}

Elem Field::frobenius(Elem a, long long i) const {
  long long s = i % static_cast<long long>(k_);
  if (s < 0) s += k_;
  for (long long j = 0; j < s; ++j) a = pow(a, p_);
  return a;
}

FieldElement::FieldElement(FieldPtr f, Elem code) : f_(std::move(f)), code_(code) {
  if (code_ >= f_->q()) fail(ErrorCode::BadParameters, "element code out of range");
}

const Field& FieldElement::check(const FieldElement& o) const {
  if (f_ != o.f_ && !(*f_ == *o.f_)) fail(ErrorCode::MixedFields, "operands live in different fields");
  return *f_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const { return {f_, check(o).add(code_, o.code_)}; }
FieldElement FieldElement::operator-(const FieldElement& o) const { return {f_, check(o).sub(code_, o.code_)}; }
FieldElement FieldElement::operator*(const FieldElement& o) const { return {f_, check(o).mul(code_, o.code_)}; }
FieldElement FieldElement::operator/(const FieldElement& o) const { return {f_, check(o).div(code_, o.code_)}; }
FieldElement FieldElement::operator-() const { return {f_, f_->neg(code_)}; }
FieldElement FieldElement::inv() const { return {f_, f_->inv(code_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {f_, f_->pow(code_, e)}; }
bool FieldElement::operator==(const FieldElement& o) const {
  check(o);
  return code_ == o.code_;
}

Tower Tower::create(FieldPtr base, std::uint32_t m) {
  if (m == 0) fail(ErrorCode::IncompatibleTower, "extension degree must be positive");
  if (m == 1) return create(base, base);
  return create(base, Field::create(base->p(), base->k() * m));
}

Tower Tower::create(FieldPtr base, FieldPtr top) {
  if (base->p() != top->p() || top->k() % base->k() != 0)
    fail(ErrorCode::IncompatibleTower, base->to_string() + " does not embed in " + top->to_string());
  Tower t;
  t.base_ = base;
  t.top_ = top;
  t.m_ = top->k() / base->k();
  const Field& B = *base;
  const Field& T = *top;
  const std::uint32_t p = B.p(), k = B.k(), n = T.k();

  Elem root = 0;
  if (base == top || B == T) {
    root = k > 1 ? p : 0;
  } else if (k > 1) {
    const auto& mod = B.modulus();
    bool found = false;
    for (Elem r = 0; r < T.q() && !found; ++r) {
      Elem acc = 0;
      for (auto c : mod) acc = T.add(T.mul(acc, r), c);
      if (acc == 0) {
        root = r;
        found = true;
      }
    }
    if (!found) fail(ErrorCode::IncompatibleTower, "base modulus has no root in the top field");
  }
  t.embed_.resize(B.q());
  for (Elem a = 0; a < B.q(); ++a) {
    if (k == 1) {
      t.embed_[a] = a;
      continue;
    }
    Elem acc = 0, v = a, pw = 1;
    for (std::uint32_t j = 0; j < k; ++j) {
      acc = T.add(acc, T.mul(v % p, pw));
      v /= p;
      pw = T.mul(pw, root);
    }
    t.embed_[a] = acc;
  }
  t.basis_.resize(t.m_);
  Elem beta = n > 1 ? p : 1;
  for (std::uint32_t i = 0; i < t.m_; ++i) t.basis_[i] = i == 0 ? 1 : T.mul(t.basis_[i - 1], beta);

  // Invert the digit matrix over GF(p).
  std::vector<std::uint32_t> a(std::size_t(n) * 2 * n, 0);
  Elem pj = 1;
  for (std::uint32_t j = 0; j < k; ++j, pj *= p)
    for (std::uint32_t i = 0; i < t.m_; ++i) {
      Elem v = T.mul(t.embed_[pj], t.basis_[i]);
      std::uint32_t col = i * k + j;
      for (std::uint32_t r = 0; r < n; ++r) {
        a[std::size_t(r) * 2 * n + col] = v % p;
        v /= p;
      }
    }
  for (std::uint32_t r = 0; r < n; ++r) a[std::size_t(r) * 2 * n + n + r] = 1;
  for (std::uint32_t c = 0; c < n; ++c) {
    std::uint32_t piv = c;
    while (piv < n && a[std::size_t(piv) * 2 * n + c] == 0) ++piv;
    if (piv == n) fail(ErrorCode::IncompatibleTower, "tower basis is singular");
    for (std::uint32_t x = 0; x < 2 * n; ++x) std::swap(a[std::size_t(c) * 2 * n + x], a[std::size_t(piv) * 2 * n + x]);
    std::uint64_t li = modinv(a[std::size_t(c) * 2 * n + c], p);
    for (std::uint32_t x = 0; x < 2 * n; ++x) a[std::size_t(c) * 2 * n + x] = static_cast<std::uint32_t>(a[std::size_t(c) * 2 * n + x] * li % p);
    for (std::uint32_t r = 0; r < n; ++r) {
      std::uint64_t f = a[std::size_t(r) * 2 * n + c];
      if (r == c || !f) continue;
      for (std::uint32_t x = 0; x < 2 * n; ++x)
        a[std::size_t(r) * 2 * n + x] =
            static_cast<std::uint32_t>((a[std::size_t(r) * 2 * n + x] + (p - f) * a[std::size_t(c) * 2 * n + x]) % p);
    }
  }
  t.inv_.resize(std::size_t(n) * n);
  for (std::uint32_t r = 0; r < n; ++r)
    for (std::uint32_t c = 0; c < n; ++c) t.inv_[std::size_t(r) * n + c] = a[std::size_t(r) * 2 * n + n + c];
  return t;
}

std::vector<Elem> Tower::coords(Elem a) const {
  const std::uint32_t p = base_->p(), k = base_->k(), n = top_->k();
  if (a >= top_->q()) fail(ErrorCode::IncompatibleTower, "element is not in the top field");
  std::vector<std::uint64_t> digits(n);
  for (std::uint32_t r = 0; r < n; ++r) {
    digits[r] = a % p;
    a /= p;
  }
  std::vector<Elem> out(m_, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    Elem c = 0, pw = 1;
    for (std::uint32_t j = 0; j < k; ++j, pw *= p) {
      std::uint64_t s = 0;
      const std::uint32_t* row = &inv_[std::size_t(i * k + j) * n];
      for (std::uint32_t r = 0; r < n; ++r) s += row[r] * digits[r];
      c += static_cast<Elem>(s % p) * pw;
    }
    out[i] = c;
  }
  return out;
}

Elem Tower::uncoords(std::span<const Elem> c) const {
  if (c.size() != m_) fail(ErrorCode::IncompatibleTower, "coordinate vector has the wrong length");
  const Field& T = *top_;
  Elem acc = 0;
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (c[i] >= base_->q()) fail(ErrorCode::IncompatibleTower, "coordinate outside the base field");
    acc = T.add(acc, T.mul(embed_[c[i]], basis_[i]));
  }
  return acc;
}

}  // namespace srk
