#include "oracles.hpp"

namespace litf::testing {

bool naive_is_up_set(const Bits& s, int n) {
  const std::size_t size = std::size_t{1} << n;
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) {
      if ((x & y) == x && s.test(x) && !s.test(y)) return false;
    }
  }
  return true;
}

std::vector<Bits> naive_up_sets(int n) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<Bits> out;
  for (unsigned long mask = 0; mask < (1UL << size); ++mask) {
    Bits s(size, mask);
    if (naive_is_up_set(s, n)) out.push_back(s);
  }
  return out;
}

bool naive_is_monotone(const BooleanFunction& f) {
  const int n = f.arity();
  const std::size_t size = std::size_t{1} << n;
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) {
      if ((x & y) == x && f.truth().test(x) && !f.truth().test(y)) return false;
    }
  }
  return true;
}

bool naive_is_order_preserving(const LValuedFunction& mu) {
  const std::size_t size = mu.domain().size();
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) {
      if ((x & y) == x && !mu.codomain().leq(mu(x), mu(y))) return false;
    }
  }
  return true;
}

Bits truth_set(const FdlElement& e) {
  const int n = e.arity();
  Bits out(std::size_t{1} << n);
  for (std::uint32_t x = 0; x < out.size(); ++x) {
    bool value = true;
    for (Clause c : e.clauses()) value = value && (c & x) != 0;
    if (value) out.set(x);
  }
  return out;
}

bool pointwise_leq(const FdlElement& a, const FdlElement& b) {
  return truth_set(a).is_subset_of(truth_set(b));
}

Subset naive_closure(const ClosureSystem& f, std::size_t x) {
  Subset acc = f.domain().full_subset();
  for (const auto& m : f.members()) {
    if (m.test(x)) acc &= m;
  }
  return acc;
}

bool naive_is_closure_system(std::size_t base, const std::vector<Subset>& members) {
  auto has = [&](const Subset& s) {
    return std::find(members.begin(), members.end(), s) != members.end();
  };
  if (!has(full_bits(base))) return false;
  for (const auto& a : members) {
    for (const auto& b : members) {
      if (!has(a & b)) return false;
    }
  }
  return true;
}

std::optional<std::vector<Element>> search_linear_weights(const ClosureSystem& f) {
  const int n = f.domain().cube_arity();
  auto lattice = share(from_closure_system(f));
  std::vector<Element> weights(static_cast<std::size_t>(n), 0);
  while (true) {
    // Compute the linear combination by hand rather than via linear_function.
    std::vector<Element> values(cube_size(n));
    for (std::size_t x = 0; x < values.size(); ++x) {
      Element acc = lattice->bottom();
      for (int i = 0; i < n; ++i) {
        if ((x >> i) & 1U) acc = lattice->join(acc, weights[static_cast<std::size_t>(i)]);
      }
      values[x] = acc;
    }
    std::vector<Subset> cuts;
    for (Element p = 0; p < lattice->size(); ++p) {
      Subset c(values.size());
      for (std::size_t x = 0; x < values.size(); ++x) {
        if (lattice->leq(p, values[x])) c.set(x);
      }
      if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    std::vector<Subset> expected(f.members().begin(), f.members().end());
    std::sort(cuts.begin(), cuts.end());
    std::sort(expected.begin(), expected.end());
    if (cuts == expected) return weights;

    std::size_t i = 0;
    while (i < weights.size() && ++weights[i] == lattice->size()) weights[i++] = 0;
    if (i == weights.size()) return std::nullopt;
  }
}

std::vector<ClosureSystem> all_up_set_systems(int n) {
  std::vector<Bits> ups = naive_up_sets(n);
  const Bits full = full_bits(std::size_t{1} << n);
  std::erase(ups, full);
  std::vector<ClosureSystem> out;
  for (unsigned long pick = 0; pick < (1UL << ups.size()); ++pick) {
    std::vector<Subset> members{full};
    for (std::size_t k = 0; k < ups.size(); ++k) {
      if ((pick >> k) & 1UL) members.push_back(ups[k]);
    }
    if (naive_is_closure_system(full.size(), members)) {
      out.emplace_back(Domain::cube(n), std::move(members));
    }
  }
  return out;
}

std::vector<ClosureSystem> all_closure_systems(const Domain& domain) {
  const std::size_t base = domain.size();
  const std::size_t subsets = std::size_t{1} << base;
  const unsigned long full_mask = subsets - 1;
  std::vector<ClosureSystem> out;
  // Families are masks over the proper subsets; the base is always added.
  for (unsigned long long pick = 0; pick < (1ULL << (subsets - 1)); ++pick) {
    std::vector<Subset> members{Bits(base, full_mask)};
    for (std::size_t k = 0; k + 1 < subsets; ++k) {
      if ((pick >> k) & 1ULL) members.emplace_back(base, k);
    }
    // Inline intersection check on masks keeps the 2^15 sweep cheap.
    bool closed = true;
    for (std::size_t a = 0; a < subsets - 1 && closed; ++a) {
      if (!((pick >> a) & 1ULL)) continue;
      for (std::size_t b = 0; b < subsets - 1; ++b) {
        if (!((pick >> b) & 1ULL)) continue;
        if (!((pick >> (a & b)) & 1ULL)) {
          closed = false;
          break;
        }
      }
    }
    if (closed) out.emplace_back(domain, std::move(members));
  }
  return out;
}

bool brute_force_classical(const BooleanFunction& f) {
  const int n = f.arity();
  std::vector<int> w(static_cast<std::size_t>(n), -3);
  while (true) {
    int lo = 1 << 20;   // least true sum
    int hi = -(1 << 20);  // greatest false sum
    for (std::uint32_t x = 0; x < cube_size(n); ++x) {
      int s = 0;
      for (int i = 0; i < n; ++i) {
        if ((x >> i) & 1U) s += w[static_cast<std::size_t>(i)];
      }
      if (f.truth().test(x)) {
        lo = std::min(lo, s);
      } else {
        hi = std::max(hi, s);
      }
    }
    if (hi < lo) return true;
    std::size_t i = 0;
    while (i < w.size() && ++w[i] > 3) w[i++] = -3;
    if (i == w.size()) return false;
  }
}

}  // namespace litf::testing
