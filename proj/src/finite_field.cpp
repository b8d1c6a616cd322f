#include "solvkit/finite_field.hpp"

#include "solvkit/error.hpp"

namespace solvkit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  for (std::uint32_t x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  throw InvalidArgument("no inverse mod p");
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::uint32_t c = (a.back() * lead_inv) % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p - (c * m[i]) % p) % p;
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

Poly decode(std::uint32_t a, std::uint32_t p, std::uint32_t len) {
  Poly c(len, 0);
  for (std::uint32_t i = 0; i < len; ++i) {
    c[i] = a % p;
    a /= p;
  }
  return c;
}

std::uint32_t encode(const Poly& c, std::uint32_t p) {
  std::uint32_t a = 0;
  for (std::size_t i = c.size(); i-- > 0;) a = a * p + c[i];
  return a;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  // Every monic divisor of degree d <= n/2, enumerated by its lower coefficients.
  for (std::size_t d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t k = 0; k < d; ++k) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g = decode(static_cast<std::uint32_t>(code), p, static_cast<std::uint32_t>(d));
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t n) : p_(p), n_(n) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (n < 1) throw InvalidArgument("field extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxOrder) throw Unsupported("field order exceeds " + std::to_string(kMaxOrder));
  }
  q_ = static_cast<std::uint32_t>(q);

  for (std::uint32_t code = 0; code < q_; ++code) {
    Poly m = decode(code, p, n);
    m.push_back(1);
    if (is_irreducible_mod_p(m, p)) {
      modulus_ = std::move(m);
      break;
    }
  }
  if (modulus_.empty()) throw ConsistencyError("no irreducible polynomial found");

  // Least element of multiplicative order q - 1, by direct powering.
  for (std::uint32_t cand = 1; cand < q_; ++cand) {
    const Poly c = decode(cand, p, n);
    std::vector<Element> powers{1};
    Poly cur{1};
    for (;;) {
      cur = poly_mod(poly_mul(cur, c, p), modulus_, p);
      const Element e = encode(cur, p);
      if (e == 1) break;
      powers.push_back(e);
    }
    if (powers.size() == q_ - 1) {
      exp_ = std::move(powers);
      break;
    }
  }
  if (exp_.empty()) throw ConsistencyError("multiplicative group is not cyclic");
  log_.assign(q_, 0);
  for (std::uint32_t k = 0; k < exp_.size(); ++k) log_[exp_[k]] = k;
}

FiniteField FiniteField::of_order(std::uint32_t q) {
  if (q < 2) throw InvalidArgument("field order must be at least 2");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t n = 0;
  std::uint32_t r = q;
  while (r % p == 0) {
    r /= p;
    ++n;
  }
  if (r != 1) throw InvalidArgument(std::to_string(q) + " is not a prime power");
  return FiniteField(p, n);
}

FiniteField::Element FiniteField::add(Element a, Element b) const noexcept {
  Element r = 0;
  Element scale = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Element FiniteField::sub(Element a, Element b) const noexcept {
  Element r = 0;
  Element scale = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    r += ((a % p_ + p_ - b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Element FiniteField::inv(Element a) const {
  if (a == 0) throw InvalidArgument("inverse of zero in GF(" + std::to_string(q_) + ")");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Element FiniteField::pow(Element a, std::int64_t k) const {
  if (a == 0) {
    if (k < 0) throw InvalidArgument("negative power of zero");
    return k == 0 ? 1 : 0;
  }
  const std::int64_t m = q_ - 1;
  std::int64_t e = (static_cast<std::int64_t>(log_[a]) * (k % m)) % m;
  if (e < 0) e += m;
  return exp_[static_cast<std::size_t>(e)];
}

std::uint32_t FiniteField::multiplicative_order(Element a) const {
  if (a == 0) throw InvalidArgument("zero has no multiplicative order");
  std::uint32_t k = 1;
  for (Element x = a; x != 1; x = mul(x, a)) ++k;
  return k;
}

std::vector<std::uint32_t> FiniteField::coefficients(Element a) const { return decode(a, p_, n_); }

FiniteField::Element FiniteField::from_coefficients(const std::vector<std::uint32_t>& c) const {
  if (c.size() > n_) throw InvalidArgument("too many coefficients");
  for (auto v : c)
    if (v >= p_) throw InvalidArgument("coefficient out of range");
  return encode(c, p_);
}

}  // namespace solvkit
