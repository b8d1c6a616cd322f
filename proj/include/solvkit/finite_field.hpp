#pragma once

#include <cstdint>
#include <vector>

namespace solvkit {

/// GF(p^n) with elements encoded as integers 0..q-1 whose base-p digits are
/// the coefficients of a polynomial in the field generator (constant term
/// first). The modulus is the least irreducible monic polynomial of degree
/// n, ordered by the same base-p encoding of its lower coefficients.
class FiniteField {
 public:
  using Element = std::uint32_t;

  static constexpr std::uint32_t kMaxOrder = 2048;

  FiniteField(std::uint32_t p, std::uint32_t n);

  /// Factors q as p^n; throws InvalidArgument if q is not a prime power.
  static FiniteField of_order(std::uint32_t q);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return n_; }
  std::uint32_t order() const noexcept { return q_; }
  /// Coefficients of the monic modulus, constant term first (size n + 1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  /// A generator of the multiplicative group (least by encoding).
  Element generator() const noexcept { return exp_.size() > 1 ? exp_[1] : exp_[0]; }

  static constexpr Element zero() noexcept { return 0; }
  static constexpr Element one() noexcept { return 1; }

  Element add(Element a, Element b) const noexcept;
  Element sub(Element a, Element b) const noexcept;
  Element neg(Element a) const noexcept { return sub(0, a); }
  Element mul(Element a, Element b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }
  /// Throws InvalidArgument for a == 0.
  Element inv(Element a) const;
  Element pow(Element a, std::int64_t k) const;
  std::uint32_t multiplicative_order(Element a) const;

  std::vector<std::uint32_t> coefficients(Element a) const;
  Element from_coefficients(const std::vector<std::uint32_t>& c) const;

 private:
  std::uint32_t p_;
  std::uint32_t n_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Element> exp_;          // exp_[k] = g^k, k in [0, q-1)
  std::vector<std::uint32_t> log_;    // log_[a] for a != 0
};

bool is_prime(std::uint64_t n);

/// Monic polynomial over GF(p) irreducibility by trial division.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace solvkit
