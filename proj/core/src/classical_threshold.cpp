#include "litf/classical_threshold.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

#include "litf/errors.hpp"

namespace litf {
namespace {

using boost::multiprecision::cpp_int;

// a · v ≥ b over the variables (w_1, ..., w_n, t). `origin` records which
// input inequalities were combined into this row.
struct Row {
  std::vector<cpp_int> a;
  cpp_int b;
  std::uint64_t origin = 0;
};

void normalize(Row& row) {
  cpp_int g = abs(row.b);
  for (const auto& c : row.a) g = gcd(g, abs(c));
  if (g > 1) {
    for (auto& c : row.a) c /= g;
    row.b /= g;
  }
}

bool is_zero(const Row& row) {
  return std::all_of(row.a.begin(), row.a.end(), [](const cpp_int& c) { return c == 0; });
}

// Keeps, for each coefficient vector, only the row with the largest right-hand side.
void drop_dominated(std::vector<Row>& rows) {
  std::sort(rows.begin(), rows.end(), [](const Row& l, const Row& r) {
    if (l.a != r.a) return l.a < r.a;
    return l.b > r.b;
  });
  rows.erase(std::unique(rows.begin(), rows.end(),
                         [](const Row& l, const Row& r) { return l.a == r.a; }),
             rows.end());
}

struct Elimination {
  bool feasible = false;
  std::vector<std::size_t> order;
  std::vector<std::vector<Row>> stages;  // stages[k] is the system before eliminating order[k]
};

Elimination eliminate(std::vector<Row> rows, std::size_t vars, bool prune_by_origin) {
  Elimination out;
  std::vector<bool> remaining(vars, true);
  for (std::size_t step = 0; step < vars; ++step) {
    // Pick the variable that produces the fewest combined rows.
    std::size_t best = vars;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t v = 0; v < vars; ++v) {
      if (!remaining[v]) continue;
      std::size_t pos = 0, neg = 0, zero = 0;
      for (const auto& r : rows) {
        if (r.a[v] > 0) ++pos;
        else if (r.a[v] < 0) ++neg;
        else ++zero;
      }
      const std::size_t cost = pos * neg + zero;
      if (cost < best_cost) {
        best_cost = cost;
        best = v;
      }
    }
    remaining[best] = false;
    out.order.push_back(best);
    out.stages.push_back(rows);

    std::vector<Row> pos, neg, next;
    for (auto& r : rows) {
      if (r.a[best] > 0) pos.push_back(std::move(r));
      else if (r.a[best] < 0) neg.push_back(std::move(r));
      else next.push_back(std::move(r));
    }
    // Chernikov's rule: after eliminating s variables, a row built from more
    // than s + 1 input rows is implied by the others.
    const int max_origin = static_cast<int>(step) + 2;
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        const std::uint64_t origin = p.origin | q.origin;
        if (prune_by_origin && std::popcount(origin) > max_origin) continue;
        const cpp_int mp = -q.a[best];
        const cpp_int mq = p.a[best];
        Row combined{std::vector<cpp_int>(vars), mp * p.b + mq * q.b, origin};
        for (std::size_t j = 0; j < vars; ++j) combined.a[j] = mp * p.a[j] + mq * q.a[j];
        normalize(combined);
        next.push_back(std::move(combined));
      }
    }
    rows.clear();
    for (auto& r : next) {
      if (is_zero(r)) {
        if (r.b > 0) return out;  // 0 ≥ positive: infeasible
        continue;
      }
      rows.push_back(std::move(r));
    }
    drop_dominated(rows);
  }
  out.feasible = true;
  return out;
}

std::vector<Rational> back_substitute(const Elimination& e, std::size_t vars) {
  std::vector<Rational> value(vars, Rational(0));
  for (std::size_t k = e.order.size(); k-- > 0;) {
    const std::size_t v = e.order[k];
    std::optional<Rational> lower, upper;
    for (const auto& r : e.stages[k]) {
      if (r.a[v] == 0) continue;
      Rational rest(r.b);
      for (std::size_t j = 0; j < vars; ++j) {
        if (j != v && r.a[j] != 0) rest -= Rational(r.a[j]) * value[j];
      }
      const Rational bound = rest / Rational(r.a[v]);
      if (r.a[v] > 0) {
        if (!lower || bound > *lower) lower = bound;
      } else {
        if (!upper || bound < *upper) upper = bound;
      }
    }
    value[v] = lower ? *lower : (upper ? *upper : Rational(0));
  }
  // Clear denominators; scaling by a factor ≥ 1 keeps the unit margin.
  cpp_int scale = 1;
  for (const auto& q : value) {
    const cpp_int d = denominator(q);
    scale = scale / gcd(scale, d) * d;
  }
  for (auto& q : value) q *= Rational(scale);
  return value;
}

}  // namespace

std::optional<ClassicalWitness> is_classical_threshold(const BooleanFunction& f) {
  const int n = f.arity();
  if (n > kMaxEnumerationArity) {
    throw CapacityError("classical threshold test capped at n = " +
                        std::to_string(kMaxEnumerationArity));
  }
  const std::size_t vars = static_cast<std::size_t>(n) + 1;
  std::vector<Row> rows;
  for (std::size_t k = 0; k < cube_size(n); ++k) {
    const bool value = f.truth().test(k);
    Row r{std::vector<cpp_int>(vars), value ? 0 : 1, std::uint64_t{1} << k};
    for (int i = 0; i < n; ++i) {
      if ((k >> i) & 1U) r.a[static_cast<std::size_t>(i)] = value ? 1 : -1;
    }
    r.a[vars - 1] = value ? -1 : 1;
    rows.push_back(std::move(r));
  }

  for (bool prune : {true, false}) {
    const Elimination e = eliminate(rows, vars, prune);
    // Pruning only ever drops rows, so an infeasibility proof stands.
    if (!e.feasible) return std::nullopt;
    auto value = back_substitute(e, vars);
    ClassicalWitness w{{value.begin(), value.end() - 1}, value.back()};
    if (separates(w, f)) return w;
  }
  throw std::logic_error("Fourier-Motzkin produced a non-separating witness");
}

bool separates(const ClassicalWitness& witness, const BooleanFunction& f) {
  const int n = f.arity();
  if (witness.weights.size() != static_cast<std::size_t>(n)) return false;
  for (std::size_t k = 0; k < cube_size(n); ++k) {
    Rational sum(0);
    for (int i = 0; i < n; ++i) {
      if ((k >> i) & 1U) sum += witness.weights[static_cast<std::size_t>(i)];
    }
    const bool ok = f.truth().test(k) ? sum >= witness.threshold
                                      : sum <= witness.threshold - Rational(1);
    if (!ok) return false;
  }
  return true;
}

std::string format_rational(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace litf
