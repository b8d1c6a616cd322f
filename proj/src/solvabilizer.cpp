#include "solvkit/solvabilizer.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "solvkit/classes.hpp"
#include "solvkit/error.hpp"

namespace solvkit {

namespace {

using Clock = std::chrono::steady_clock;

bool expired(const SolvOptions& options) {
  return options.deadline && Clock::now() >= *options.deadline;
}

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Runs body(i) for i in [0, n), serially or as an OpenMP loop. Exceptions are
// captured and the first one is rethrown after the loop.
template <typename Body>
void run_indexed(std::size_t n, const SolvOptions& options, Body&& body) {
  if (options.execution == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
#ifdef _OPENMP
  const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical(solvkit_failure)
#endif
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

std::vector<ElementId> powers_of(const GroupTable& g, ElementId x) {
  std::vector<ElementId> out;
  ElementId e = GroupTable::identity();
  do {
    out.push_back(e);
    e = g.mul(e, x);
  } while (e != GroupTable::identity());
  return out;
}

// Whether Sol_j^t == Sol_i for some t over a right transversal of N_G(Sol_j).
bool conjugate_sets(const GroupTable& g, const ElementSet& sol_i, const ElementSet& sol_j,
                    const ElementSet& normalizer_j) {
  const auto transversal = right_transversal(g, normalizer_j);
  for (ElementId t : transversal.reps) {
    const auto map = g.conjugation_map(t);
    if (sol_j.all_of([&](ElementId y) { return sol_i.contains((*map)[y]); })) return true;
  }
  return false;
}

}  // namespace

std::string to_string(Method m) { return m == Method::naive ? "naive" : "rational"; }

std::string to_string(Execution e) { return e == Execution::serial ? "serial" : "parallel"; }

ElementSet SolvabilizerEngine::sol(ElementId x) {
  const GroupTable& g = *group_;
  if (!g.valid(x)) throw InvalidArgument("element id out of range");
  if (x == GroupTable::identity()) return ElementSet::full(g);

  enum : std::uint8_t { kUnknown = 0, kIn = 1, kOut = 2 };
  std::vector<std::uint8_t> state(g.order(), kUnknown);
  const auto xp = powers_of(g, x);
  ElementSet result(g);

  for (ElementId y = 0; y < g.order(); ++y) {
    if (state[y] != kUnknown) continue;
    const ElementId pair[] = {x, y};
    const ElementSet h = subgroup_span(g, pair);
    if (oracle_.is_solvable(h)) {
      h.for_each([&](ElementId z) {
        state[z] = kIn;
        result.insert(z);
      });
      continue;
    }
    const std::uint32_t k = g.element_order(y);
    ElementId yi = y;
    for (std::uint32_t i = 1; i < k; ++i, yi = g.mul(yi, y)) {
      if (std::gcd(i, k) != 1) continue;
      for (ElementId a : xp) {
        const ElementId ay = g.mul(a, yi);
        for (ElementId b : xp) state[g.mul(ay, b)] = kOut;
      }
    }
  }
  return result;
}

ElementSet sol(const GroupTable& g, ElementId x) {
  SolvabilizerEngine engine(g);
  return engine.sol(x);
}

ElementSet cyclic_normalizer(const GroupTable& g, ElementId x) {
  const auto xp = powers_of(g, x);
  const ElementSet cyclic = ElementSet::from_ids(g, xp);
  ElementSet out(g);
  for (ElementId t = 0; t < g.order(); ++t)
    if (cyclic.contains(g.conj(x, t))) out.insert(t);
  return out;
}

std::uint64_t solv_upper_bound(const GroupTable& g) {
  std::uint64_t bound = 0;
  for (const auto& rc : rational_classes(g))
    bound += g.order() / cyclic_normalizer(g, rc.representative).size();
  return bound;
}

SolvReport solv_count_naive(const GroupTable& g, const SolvOptions& options) {
  if (g.order() > options.naive_cap)
    throw CapExceeded("group order " + std::to_string(g.order()) + " exceeds the naive cap " +
                      std::to_string(options.naive_cap) + "; use the rational method");
  const auto start = Clock::now();
  SolvabilizerEngine engine(g);
  std::vector<DenseBitset> sols(g.order());
  bool timed_out = false;
  run_indexed(g.order(), options, [&](std::size_t i) {
    if (expired(options)) {
#ifdef _OPENMP
#pragma omp atomic write
#endif
      timed_out = true;
      return;
    }
    sols[i] = engine.sol(static_cast<ElementId>(i)).bits();
  });
  if (timed_out) throw Timeout("naive count exceeded the time limit");

  std::unordered_set<DenseBitset, DenseBitsetHash> distinct(sols.begin(), sols.end());
  SolvReport report;
  report.order = g.order();
  report.method = Method::naive;
  report.total = distinct.size();
  report.upper_bound = solv_upper_bound(g);
  report.millis = millis_since(start);
  if (report.total > report.upper_bound)
    throw ConsistencyError("naive count exceeds the rational-class upper bound");
  return report;
}

SolvReport solv_count_rational(const GroupTable& g, const SolvOptions& options) {
  const auto start = Clock::now();
  const auto classes = rational_classes(g);
  SolvabilizerEngine engine(g);

  struct Work {
    std::optional<ElementSet> sol;
    std::optional<ElementSet> normalizer;
  };
  std::vector<Work> work(classes.size());
  std::vector<ClassRecord> records(classes.size());

  // Largest classes first for load balance; results land in fixed slots.
  std::vector<std::size_t> order(classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return classes[a].members.size() > classes[b].members.size();
  });

  bool timed_out = false;
  run_indexed(order.size(), options, [&](std::size_t k) {
    if (expired(options)) {
#ifdef _OPENMP
#pragma omp atomic write
#endif
      timed_out = true;
      return;
    }
    const std::size_t c = order[k];
    const RationalClass& rc = classes[c];
    const ElementId x = rc.representative;
    ElementSet s = engine.sol(x);
    ElementSet seed = cyclic_normalizer(g, x);
    ClassRecord& rec = records[c];
    rec.representative = x;
    rec.element_order = rc.element_order;
    rec.class_size = rc.members.size();
    rec.sol_size = s.size();
    rec.cyclic_normalizer_order = seed.size();
    ElementSet n(g);
    try {
      n = normalizer_of_set(g, s, seed);
    } catch (const InvalidArgument&) {
      throw ConsistencyError("N_G(<x>) does not normalize Sol(x) for representative " +
                             std::to_string(x));
    }
    rec.normalizer_order = n.size();
    rec.orbit = g.order() / n.size();
    work[c].sol = std::move(s);
    work[c].normalizer = std::move(n);
  });
  if (timed_out) throw Timeout("rational count exceeded the time limit");

  // Cross-class dedup in representative order: a later class whose
  // solvabilizer is conjugate to a kept one is merged into it.
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < classes.size(); ++j) {
    for (std::size_t i : kept) {
      if (records[i].sol_size != records[j].sol_size ||
          records[i].normalizer_order != records[j].normalizer_order)
        continue;
      if (conjugate_sets(g, *work[i].sol, *work[j].sol, *work[j].normalizer)) {
        records[j].merged_into = i;
        break;
      }
    }
    if (records[j].kept()) kept.push_back(j);
  }

  SolvReport report;
  report.order = g.order();
  report.method = Method::rational;
  for (const auto& rec : records) {
    if (rec.kept()) report.total += rec.orbit;
    report.upper_bound += g.order() / rec.cyclic_normalizer_order;
  }
  report.classes = std::move(records);
  report.millis = millis_since(start);
  if (report.total > report.upper_bound)
    throw ConsistencyError("rational count exceeds the rational-class upper bound");
  return report;
}

ElementSet sol_via_max_solvables(const GroupTable& g, ElementId x, const MaxSolvReps& reps,
                                 bool verify) {
  if (!g.valid(x)) throw InvalidArgument("element id out of range");
  const std::uint32_t k = g.element_order(x);
  ElementSet out(g);
  for (const auto& rep : reps.reps) {
    if (rep.subgroup.size() % k != 0) continue;
    for (ElementId t : rep.transversal) {
      // x in H^t  <=>  t x t^-1 in H
      if (!rep.subgroup.contains(g.conj(x, g.inv(t)))) continue;
      out |= conjugate_set(rep.subgroup, t);
    }
  }
  if (verify && !(out == sol(g, x)))
    throw ConsistencyError("union of maximal solvable subgroups differs from Sol(x) for element " +
                           std::to_string(x));
  return out;
}

}  // namespace solvkit
