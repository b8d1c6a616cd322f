#include "solvkit/formulas.hpp"

#include <algorithm>

#include "solvkit/error.hpp"
#include "solvkit/families.hpp"
#include "solvkit/finite_field.hpp"
#include "solvkit/solvabilizer.hpp"

namespace solvkit {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("formula arithmetic overflow");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("formula arithmetic overflow");
  return r;
}

std::optional<std::uint64_t> exponent_of(std::uint64_t q, std::uint64_t p) {
  if (q < p) return std::nullopt;
  std::uint64_t n = 0;
  while (q % p == 0) {
    q /= p;
    ++n;
  }
  if (q != 1) return std::nullopt;
  return n;
}

std::uint64_t psl2_order(std::uint64_t q) {
  const std::uint64_t full = checked_mul(q, checked_mul(q - 1, q + 1));
  return q % 2 == 0 ? full : full / 2;
}

}  // namespace

unsigned FormulaFamily::congruence_case() const {
  return tag == Tag::psl2_prime ? static_cast<unsigned>(parameter % 24) : 0;
}

std::string FormulaFamily::name() const {
  const std::string q = std::to_string(parameter);
  switch (tag) {
    case Tag::psl2_even:
    case Tag::psl2_3odd:
    case Tag::psl2_prime:
    case Tag::psl2_7_special: return "PSL(2," + q + ")";
    case Tag::suzuki: return "Sz(" + q + ")";
    case Tag::psl3_3: return "PSL(3,3)";
  }
  return "?";
}

std::string FormulaFamily::tag_string() const {
  switch (tag) {
    case Tag::psl2_even: return "psl2-even";
    case Tag::psl2_3odd: return "psl2-3odd";
    case Tag::psl2_prime: return "psl2-prime";
    case Tag::suzuki: return "suzuki";
    case Tag::psl3_3: return "psl3-3";
    case Tag::psl2_7_special: return "psl2-7-special";
  }
  return "?";
}

void validate(const FormulaFamily& f) {
  const std::uint64_t v = f.parameter;
  switch (f.tag) {
    case FormulaFamily::Tag::psl2_even: {
      const auto n = exponent_of(v, 2);
      if (!n || *n < 2)
        throw Unsupported("PSL(2,q) formula 2q^2 requires q = 2^n with n >= 2 (got q = " +
                          std::to_string(v) + ")");
      return;
    }
    case FormulaFamily::Tag::psl2_3odd: {
      const auto n = exponent_of(v, 3);
      if (!n || *n < 3 || *n % 2 == 0)
        throw Unsupported("PSL(2,q) formula (4q^2 - q + 1)/2 requires q = 3^n with n an odd "
                          "integer, n >= 3 (got q = " + std::to_string(v) + ")");
      return;
    }
    case FormulaFamily::Tag::psl2_prime:
      if (v == 5)
        throw Unsupported("PSL(2,5) is A5 = PSL(2,4); use a:5 or the even family (value 32)");
      if (v == 7)
        throw Unsupported("p = 7 is a special case; use the psl2-7-special value 79");
      if (!is_prime(v) || v < 7)
        throw Unsupported("PSL(2,p) formulas require p prime with p > 7 (got p = " +
                          std::to_string(v) + ")");
      return;
    case FormulaFamily::Tag::suzuki: {
      const auto n = exponent_of(v, 2);
      if (!n || *n < 3 || !is_prime(*n))
        throw Unsupported("Sz(q) formula requires q = 2^p with p an odd prime (got q = " +
                          std::to_string(v) + ")");
      return;
    }
    case FormulaFamily::Tag::psl3_3:
      if (v != 3) throw Unsupported("PSL(3,q) has a formula only for q = 3");
      return;
    case FormulaFamily::Tag::psl2_7_special:
      if (v != 7) throw Unsupported("the special value applies to PSL(2,7) only");
      return;
  }
}

std::uint64_t solv_formula(const FormulaFamily& f) {
  validate(f);
  const std::uint64_t q = f.parameter;
  switch (f.tag) {
    case FormulaFamily::Tag::psl2_even: return checked_mul(2, checked_mul(q, q));
    case FormulaFamily::Tag::psl2_3odd:
      return (checked_mul(4, checked_mul(q, q)) - q + 1) / 2;
    case FormulaFamily::Tag::suzuki: {
      const std::uint64_t q2 = checked_mul(q, q);
      const std::uint64_t q3 = checked_mul(q2, q);
      const std::uint64_t q4 = checked_mul(q3, q);
      return (checked_add(checked_add(checked_mul(3, q4), q3), q) - q2) / 2;
    }
    case FormulaFamily::Tag::psl3_3: return 1562;
    case FormulaFamily::Tag::psl2_7_special: return 79;
    case FormulaFamily::Tag::psl2_prime: {
      const std::uint64_t p = q;
      const std::uint64_t p2 = checked_mul(p, p);
      switch (p % 24) {
        case 1: return (checked_mul(5, p2) + 5 * p + 4) / 2;
        case 5: return checked_mul(2, p2) + p + 2;
        case 7: return (checked_mul(5, p2) + p + 4) / 2;
        case 11: return checked_mul(2, p2) + 2;
        case 13: return checked_mul(2, p2) + 2 * p + 2;
        case 17: return (checked_mul(5, p2) + 3 * p + 4) / 2;
        case 19: return checked_mul(2, p2) + p + 2;
        case 23: return (checked_mul(5, p2) - p + 4) / 2;
      }
      throw ConsistencyError("prime p > 3 not a unit mod 24");
    }
  }
  throw ConsistencyError("unknown formula family");
}

std::uint64_t family_group_order(const FormulaFamily& f) {
  validate(f);
  switch (f.tag) {
    case FormulaFamily::Tag::psl2_even:
    case FormulaFamily::Tag::psl2_3odd:
    case FormulaFamily::Tag::psl2_prime:
    case FormulaFamily::Tag::psl2_7_special: return psl2_order(f.parameter);
    case FormulaFamily::Tag::suzuki: {
      const std::uint64_t q = f.parameter;
      return checked_mul(checked_mul(q, q), checked_mul(checked_add(q * q, 1), q - 1));
    }
    case FormulaFamily::Tag::psl3_3: return 5616;
  }
  throw ConsistencyError("unknown formula family");
}

bool is_minimal_simple(const FormulaFamily& f) {
  validate(f);
  switch (f.tag) {
    case FormulaFamily::Tag::psl2_even: return is_prime(*exponent_of(f.parameter, 2));
    case FormulaFamily::Tag::psl2_3odd: return is_prime(*exponent_of(f.parameter, 3));
    case FormulaFamily::Tag::psl2_prime: {
      const auto r = f.parameter % 5;
      return r == 2 || r == 3;
    }
    case FormulaFamily::Tag::suzuki:
    case FormulaFamily::Tag::psl3_3:
    case FormulaFamily::Tag::psl2_7_special: return true;
  }
  return false;
}

FormulaFamily formula_family_for(const GroupSpec& spec) {
  using Kind = GroupSpec::Kind;
  if (spec.kind == Kind::alternating && spec.param == 5) return FormulaFamily::psl2_even(4);
  if (spec.kind == Kind::psl3 && spec.param == 3) return FormulaFamily::psl3_3();
  if (spec.kind == Kind::psl2) {
    const std::uint64_t q = spec.param;
    FormulaFamily f;
    if (q == 7) {
      f = FormulaFamily::psl2_7();
    } else if (exponent_of(q, 2)) {
      f = FormulaFamily::psl2_even(q);
    } else if (exponent_of(q, 3)) {
      f = FormulaFamily::psl2_3odd(q);
    } else if (q == 5) {
      f = FormulaFamily::psl2_even(4);  // PSL(2,5) = PSL(2,4) = A5
    } else {
      f = FormulaFamily::psl2_prime(q);
    }
    validate(f);
    return f;
  }
  throw Unsupported("no formula covers " + spec.to_string() +
                    ": formulas exist for PSL(2,2^n) (n >= 2), PSL(2,3^n) (n odd, n >= 3), "
                    "PSL(2,p) (p prime, p > 7, plus p = 7), Sz(2^p) and PSL(3,3)");
}

DistinctnessReport minimal_simple_distinctness(std::uint64_t order_bound) {
  DistinctnessReport report;
  report.order_bound = order_bound;
  auto consider = [&](const FormulaFamily& f) {
    const auto order = family_group_order(f);
    if (order <= order_bound) report.entries.push_back({f, order, solv_formula(f)});
    return order;
  };

  // PSL(2, 2^p) and Sz(2^p), p prime; PSL(2, 3^p), p odd prime.
  for (std::uint64_t p = 2; p < 64; ++p) {
    if (!is_prime(p)) continue;
    if (consider(FormulaFamily::psl2_even(std::uint64_t{1} << p)) > order_bound) break;
  }
  for (std::uint64_t p = 3; p < 64; ++p) {
    if (!is_prime(p)) continue;
    if (consider(FormulaFamily::suzuki(std::uint64_t{1} << p)) > order_bound) break;
  }
  for (std::uint64_t p = 3, q = 27; p < 40; ++p, q *= 3) {
    if (!is_prime(p)) continue;
    if (consider(FormulaFamily::psl2_3odd(q)) > order_bound) break;
  }
  // PSL(2, p), p prime, p = 2, 3 mod 5; p = 3 is solvable and p = 5 is A5.
  for (std::uint64_t p = 7;; p += 2) {
    if (!is_prime(p) || (p % 5 != 2 && p % 5 != 3)) continue;
    const auto f = p == 7 ? FormulaFamily::psl2_7() : FormulaFamily::psl2_prime(p);
    if (consider(f) > order_bound) break;
  }
  consider(FormulaFamily::psl3_3());

  std::stable_sort(report.entries.begin(), report.entries.end(),
                   [](const auto& a, const auto& b) { return a.group_order < b.group_order; });
  for (std::size_t i = 0; i < report.entries.size(); ++i)
    for (std::size_t j = i + 1; j < report.entries.size(); ++j)
      if (report.entries[i].solv == report.entries[j].solv) report.collisions.emplace_back(i, j);
  return report;
}

LowerBoundCheck check_lower_bound(const SolvReport& report) {
  if (report.total <= 1)
    throw InvalidArgument("lower bound applies to nonsolvable groups only (total is 1)");
  return {report.total >= 32, report.total == 32};
}

}  // namespace solvkit
