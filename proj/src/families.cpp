#include "solvkit/families.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>

#include "solvkit/error.hpp"
#include "solvkit/finite_field.hpp"
#include "solvkit/group_io.hpp"

namespace solvkit {

namespace {

Permutation cycle_on(std::uint32_t degree, std::uint32_t first, std::uint32_t last) {
  std::vector<Point> c;
  for (std::uint32_t i = first; i <= last; ++i) c.push_back(i);
  return Permutation::from_cycles(degree, {c});
}

}  // namespace

GroupTable alternating_group(std::uint32_t n, std::size_t cap) {
  if (n == 0) throw InvalidArgument("a:n needs n >= 1");
  if (n < 3) return GroupTable::closure({Permutation::identity(n)}, cap);
  std::vector<Permutation> gens{cycle_on(n, 0, 2)};
  if (n > 3) gens.push_back(n % 2 == 1 ? cycle_on(n, 0, n - 1) : cycle_on(n, 1, n - 1));
  return GroupTable::closure(std::move(gens), cap);
}

GroupTable symmetric_group(std::uint32_t n, std::size_t cap) {
  if (n == 0) throw InvalidArgument("s:n needs n >= 1");
  if (n == 1) return GroupTable::closure({Permutation::identity(1)}, cap);
  return GroupTable::closure({cycle_on(n, 0, 1), cycle_on(n, 0, n - 1)}, cap);
}

GroupTable cyclic_group(std::uint32_t n, std::size_t cap) {
  if (n == 0) throw InvalidArgument("c:n needs n >= 1");
  if (n == 1) return GroupTable::closure({Permutation::identity(1)}, cap);
  return GroupTable::closure({cycle_on(n, 0, n - 1)}, cap);
}

GroupTable dihedral_group(std::uint32_t order, std::size_t cap) {
  if (order < 2 || order % 2 != 0) throw InvalidArgument("d:m needs an even order m >= 2");
  const std::uint32_t n = order / 2;
  if (n == 1) return GroupTable::closure({cycle_on(2, 0, 1)}, cap);
  if (n == 2)
    return GroupTable::closure({Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                                Permutation::from_cycles(4, {{0, 2}, {1, 3}})},
                               cap);
  std::vector<Point> reflect(n);
  for (std::uint32_t i = 0; i < n; ++i) reflect[i] = (n - i) % n;
  return GroupTable::closure({cycle_on(n, 0, n - 1), Permutation(std::move(reflect))}, cap);
}

GroupTable psl2(std::uint32_t q, std::size_t cap) {
  const FiniteField f = FiniteField::of_order(q);
  const Point inf = q;
  const auto square = f.mul(f.generator(), f.generator());
  std::vector<Point> shift(q + 1), scale(q + 1), invert(q + 1);
  for (Point a = 0; a < q; ++a) {
    shift[a] = f.add(a, 1);
    scale[a] = f.mul(square, a);
    invert[a] = a == 0 ? inf : f.neg(f.inv(a));
  }
  shift[inf] = inf;
  scale[inf] = inf;
  invert[inf] = 0;
  return GroupTable::closure(
      {Permutation(std::move(shift)), Permutation(std::move(scale)), Permutation(std::move(invert))},
      cap);
}

GroupTable sl2(std::uint32_t q, std::size_t cap) {
  const FiniteField f = FiniteField::of_order(q);
  using Mat = std::array<FiniteField::Element, 4>;  // row-major 2x2
  // Nonzero vector (a, b) is point a*q + b - 1.
  auto act = [&](const Mat& m) {
    std::vector<Point> images(q * q - 1);
    for (Point a = 0; a < q; ++a)
      for (Point b = 0; b < q; ++b) {
        if (a == 0 && b == 0) continue;
        const auto x = f.add(f.mul(m[0], a), f.mul(m[1], b));
        const auto y = f.add(f.mul(m[2], a), f.mul(m[3], b));
        images[a * q + b - 1] = x * q + y - 1;
      }
    return Permutation(std::move(images));
  };
  const auto l = f.generator();
  const auto minus_one = f.neg(1);
  return GroupTable::closure(
      {act({1, 1, 0, 1}), act({l, 0, 0, f.inv(l)}), act({0, minus_one, 1, 0})}, cap);
}

GroupTable psl3_3(std::size_t cap) {
  constexpr std::uint32_t p = 3;
  using Vec = std::array<std::uint32_t, 3>;
  // Projective points: vectors whose first nonzero coordinate is 1, in
  // lexicographic order.
  std::vector<Vec> points;
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c) {
        const Vec v{a, b, c};
        const auto lead = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
        if (lead != v.end() && *lead == 1) points.push_back(v);
      }
  auto index_of = [&](Vec v) {
    const auto lead = *std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
    const std::uint32_t scale = lead == 1 ? 1 : 2;  // inverse in GF(3)
    for (auto& x : v) x = (x * scale) % p;
    return static_cast<Point>(std::find(points.begin(), points.end(), v) - points.begin());
  };
  std::vector<Permutation> gens;
  // Elementary transvections I + E_ij generate SL(3, 3).
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      std::vector<Point> images(points.size());
      for (std::size_t k = 0; k < points.size(); ++k) {
        Vec v = points[k];
        v[i] = (v[i] + v[j]) % p;
        images[k] = index_of(v);
      }
      gens.emplace_back(std::move(images));
    }
  return GroupTable::closure(std::move(gens), cap);
}

// ---------------------------------------------------------------------------
// Group spec grammar.

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view s) : s_(s) {}

  GroupSpec parse_all() {
    GroupSpec g = parse_one();
    skip();
    if (i_ != s_.size()) throw ParseError("unexpected trailing input", i_);
    return g;
  }

 private:
  GroupSpec parse_one() {
    skip();
    const std::size_t start = i_;
    std::string word;
    while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) word += s_[i_++];
    if (word.empty()) throw ParseError("expected a group family name", start);

    GroupSpec g;
    if (word == "direct") {
      g.kind = GroupSpec::Kind::direct;
      expect('(');
      g.factors.push_back(parse_one());
      skip();
      expect(',');
      g.factors.push_back(parse_one());
      skip();
      expect(')');
      return g;
    }
    expect(':');
    if (word == "file") {
      g.kind = GroupSpec::Kind::file;
      const std::size_t at = i_;
      while (i_ < s_.size() && s_[i_] != ',' && s_[i_] != ')') g.path += s_[i_++];
      if (g.path.empty()) throw ParseError("empty file path", at);
      return g;
    }
    if (word == "perm") {
      g.kind = GroupSpec::Kind::perm;
      g.degree = number();
      if (g.degree == 0) throw ParseError("perm degree must be positive", i_);
      expect(':');
      // Generators run to the next top-level ',' or ')'.
      int depth = 0;
      std::size_t piece = i_;
      auto flush = [&](std::size_t end) {
        const std::string_view text = s_.substr(piece, end - piece);
        g.generators.push_back(parse_permutation(text, g.degree, piece).to_cycle_string());
      };
      for (;; ++i_) {
        const bool at_end = i_ == s_.size();
        const char ch = at_end ? '\0' : s_[i_];
        if (ch == '(') ++depth;
        if (ch == ')') {
          if (depth == 0) {
            flush(i_);
            break;
          }
          --depth;
        }
        if (at_end || (depth == 0 && ch == ',')) {
          flush(i_);
          break;
        }
        if (depth == 0 && ch == ';') {
          flush(i_);
          piece = i_ + 1;
        }
      }
      return g;
    }
    const std::size_t at = i_;
    g.param = number();
    if (word == "a") g.kind = GroupSpec::Kind::alternating;
    else if (word == "s") g.kind = GroupSpec::Kind::symmetric;
    else if (word == "c") g.kind = GroupSpec::Kind::cyclic;
    else if (word == "d") g.kind = GroupSpec::Kind::dihedral;
    else if (word == "psl2") g.kind = GroupSpec::Kind::psl2;
    else if (word == "sl2") g.kind = GroupSpec::Kind::sl2;
    else if (word == "psl3") g.kind = GroupSpec::Kind::psl3;
    else throw ParseError("unknown group family '" + word + "'", start);

    if (g.kind == GroupSpec::Kind::psl3 && g.param != 3)
      throw ParseError("only psl3:3 is supported", at);
    if (g.kind == GroupSpec::Kind::dihedral && (g.param < 2 || g.param % 2 != 0))
      throw ParseError("d:m needs an even order m >= 2", at);
    if (g.param == 0) throw ParseError("parameter must be positive", at);
    return g;
  }

  std::uint32_t number() {
    skip();
    const std::size_t at = i_;
    std::uint64_t v = 0;
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
      throw ParseError("expected a number", at);
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[i_++] - '0');
      if (v > 1'000'000'000) throw ParseError("number too large", at);
    }
    return static_cast<std::uint32_t>(v);
  }

  void expect(char c) {
    skip();
    if (i_ >= s_.size() || s_[i_] != c) throw ParseError(std::string("expected '") + c + "'", i_);
    ++i_;
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

GroupSpec GroupSpec::parse(std::string_view text) { return SpecParser(text).parse_all(); }

std::string GroupSpec::to_string() const {
  switch (kind) {
    case Kind::alternating: return "a:" + std::to_string(param);
    case Kind::symmetric: return "s:" + std::to_string(param);
    case Kind::cyclic: return "c:" + std::to_string(param);
    case Kind::dihedral: return "d:" + std::to_string(param);
    case Kind::psl2: return "psl2:" + std::to_string(param);
    case Kind::sl2: return "sl2:" + std::to_string(param);
    case Kind::psl3: return "psl3:" + std::to_string(param);
    case Kind::direct: return "direct(" + factors.at(0).to_string() + "," + factors.at(1).to_string() + ")";
    case Kind::file: return "file:" + path;
    case Kind::perm: {
      std::string s = "perm:" + std::to_string(degree) + ":";
      for (std::size_t k = 0; k < generators.size(); ++k) s += (k ? ";" : "") + generators[k];
      return s;
    }
  }
  return {};
}

GroupTable named_group(const GroupSpec& spec, std::size_t cap) {
  switch (spec.kind) {
    case GroupSpec::Kind::alternating: return alternating_group(spec.param, cap);
    case GroupSpec::Kind::symmetric: return symmetric_group(spec.param, cap);
    case GroupSpec::Kind::cyclic: return cyclic_group(spec.param, cap);
    case GroupSpec::Kind::dihedral: return dihedral_group(spec.param, cap);
    case GroupSpec::Kind::psl2: return psl2(spec.param, cap);
    case GroupSpec::Kind::sl2: return sl2(spec.param, cap);
    case GroupSpec::Kind::psl3: return psl3_3(cap);
    case GroupSpec::Kind::direct: {
      const GroupTable g = named_group(spec.factors.at(0), cap);
      const GroupTable h = named_group(spec.factors.at(1), cap);
      return direct_product(g, h, cap);
    }
    case GroupSpec::Kind::file: {
      GroupFile f = read_group_file(spec.path);
      return GroupTable::closure(std::move(f.generators), cap);
    }
    case GroupSpec::Kind::perm: {
      std::vector<Permutation> gens;
      for (const auto& g : spec.generators) gens.push_back(parse_permutation(g, spec.degree));
      if (gens.empty()) gens.push_back(Permutation::identity(spec.degree));
      return GroupTable::closure(std::move(gens), cap);
    }
  }
  throw InvalidArgument("unknown group spec kind");
}

GroupTable named_group(std::string_view spec, std::size_t cap) {
  return named_group(GroupSpec::parse(spec), cap);
}

}  // namespace solvkit
