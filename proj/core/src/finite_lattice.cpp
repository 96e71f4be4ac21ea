#include "litf/finite_lattice.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "litf/closure_system.hpp"
#include "litf/errors.hpp"

namespace litf {
namespace {

struct ClosedOrder {
  std::vector<Bits> up;
  std::vector<Bits> down;
};

std::vector<Bits> transpose(const std::vector<Bits>& rows) {
  std::vector<Bits> cols(rows.size(), Bits(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for_each_member(rows[i], [&](std::size_t j) { cols[j].set(i); });
  }
  return cols;
}

// Least member of `candidates` w.r.t. the order given by `up`, if any. The
// least element has strictly the smallest down-set, so it is the argmin of
// `down_count` and only that one candidate needs the full check.
std::optional<Element> least_in(const Bits& candidates, const std::vector<Bits>& up,
                                const std::vector<std::size_t>& down_count) {
  std::optional<Element> best;
  for_each_member(candidates, [&](std::size_t c) {
    if (!best || down_count[c] < down_count[*best]) best = c;
  });
  if (!best || !candidates.is_subset_of(up[*best])) return std::nullopt;
  return best;
}

std::vector<std::size_t> counts(const std::vector<Bits>& rows) {
  std::vector<std::size_t> out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) out[i] = rows[i].count();
  return out;
}

LatticeCheck check_closed_order(const std::vector<Bits>& up, const std::vector<Bits>& down) {
  const std::size_t n = up.size();
  if (n == 0) return {false, "empty poset has no bounds", std::nullopt};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (up[i].test(j) && up[j].test(i)) {
        return {false, "antisymmetry fails", OrderPair{i, j}};
      }
    }
  }
  const auto down_count = counts(down);
  const auto up_count = counts(up);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!least_in(up[i] & up[j], up, down_count)) {
        return {false, "pair has no least upper bound", OrderPair{i, j}};
      }
      if (!least_in(down[i] & down[j], down, up_count)) {
        return {false, "pair has no greatest lower bound", OrderPair{i, j}};
      }
    }
  }
  // Singletons: a one-element poset is a lattice; larger ones have bounds
  // once all binary joins and meets exist.
  return {true, {}, std::nullopt};
}

std::optional<LatticeCheck> close_order(std::size_t count, std::span<const OrderPair> pairs,
                                        ClosedOrder& out) {
  out.up.assign(count, Bits(count));
  for (std::size_t i = 0; i < count; ++i) out.up[i].set(i);
  for (auto [a, b] : pairs) {
    if (a >= count || b >= count) {
      return LatticeCheck{false, "order pair references an unknown element", OrderPair{a, b}};
    }
    out.up[a].set(b);
  }
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t i = 0; i < count; ++i) {
      if (out.up[i].test(k)) out.up[i] |= out.up[k];
    }
  }
  out.down = transpose(out.up);
  return std::nullopt;
}

}  // namespace

LatticeCheck verify_lattice(std::size_t count, std::span<const OrderPair> leq_pairs) {
  ClosedOrder order;
  if (auto err = close_order(count, leq_pairs, order)) return *err;
  return check_closed_order(order.up, order.down);
}

LatticeCheck verify_lattice(const FiniteLattice& lattice) {
  const auto pairs = lattice.order_pairs();
  return verify_lattice(lattice.size(), pairs);
}

FiniteLattice FiniteLattice::from_order(std::vector<std::string> labels,
                                        std::span<const OrderPair> leq_pairs) {
  ClosedOrder order;
  if (auto err = close_order(labels.size(), leq_pairs, order)) {
    throw DomainError("not a lattice: " + err->reason);
  }
  auto check = check_closed_order(order.up, order.down);
  if (!check.valid) {
    std::string msg = "not a lattice: " + check.reason;
    if (check.witness) {
      msg += " (" + labels[check.witness->first] + ", " + labels[check.witness->second] + ")";
    }
    throw DomainError(msg);
  }
  return FiniteLattice(std::move(labels), std::move(order.up));
}

FiniteLattice FiniteLattice::from_trusted_order(std::vector<std::string> labels,
                                                std::vector<Bits> up) {
  if (up.size() != labels.size()) throw UsageError("label count does not match order size");
  for (const auto& row : up) {
    if (row.size() != labels.size()) throw UsageError("order row has wrong size");
  }
  return FiniteLattice(std::move(labels), std::move(up));
}

FiniteLattice FiniteLattice::chain(std::size_t length) {
  if (length == 0) throw UsageError("chain length must be positive");
  std::vector<std::string> labels;
  std::vector<OrderPair> pairs;
  for (std::size_t i = 0; i < length; ++i) {
    labels.push_back(std::to_string(i));
    if (i + 1 < length) pairs.emplace_back(i, i + 1);
  }
  return from_order(std::move(labels), pairs);
}

FiniteLattice::FiniteLattice(std::vector<std::string> labels, std::vector<Bits> up)
    : labels_(std::move(labels)), up_(std::move(up)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw DomainError("a lattice needs at least one element");
  down_ = transpose(up_);
  down_count_ = counts(down_);

  bool found_bottom = false;
  bool found_top = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (up_[i].all()) {
      bottom_ = i;
      found_bottom = true;
    }
    if (down_[i].all()) {
      top_ = i;
      found_top = true;
    }
  }
  if (!found_bottom || !found_top) throw DomainError("order has no bottom or no top");

  if (n <= kTableLimit) {
    meet_table_.resize(n * n);
    join_table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        const Element j = least_of(up_[a] & up_[b]);
        const Element m = greatest_of(down_[a] & down_[b]);
        join_table_[a * n + b] = join_table_[b * n + a] = j;
        meet_table_[a * n + b] = meet_table_[b * n + a] = m;
      }
    }
  }
}

void FiniteLattice::check(Element e) const {
  if (e >= labels_.size()) {
    throw UsageError("element " + std::to_string(e) + " is not in the lattice");
  }
}

Element FiniteLattice::least_of(const Bits& candidates) const {
  auto best = least_in(candidates, up_, down_count_);
  if (!best) throw DomainError("no least upper bound");
  return *best;
}

Element FiniteLattice::greatest_of(const Bits& candidates) const {
  // Greatest element has the strictly smallest up-set.
  std::optional<Element> best;
  for_each_member(candidates, [&](std::size_t c) {
    if (!best || up_[c].count() < up_[*best].count()) best = c;
  });
  if (!best || !candidates.is_subset_of(down_[*best])) {
    throw DomainError("no greatest lower bound");
  }
  return *best;
}

const std::string& FiniteLattice::label(Element e) const {
  check(e);
  return labels_[e];
}

std::optional<Element> FiniteLattice::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Element>(it - labels_.begin());
}

Element FiniteLattice::element(std::string_view label) const {
  auto e = find(label);
  if (!e) throw UsageError("unknown lattice element '" + std::string(label) + "'");
  return *e;
}

bool FiniteLattice::leq(Element a, Element b) const {
  check(a);
  check(b);
  return up_[a].test(b);
}

Element FiniteLattice::meet(Element a, Element b) const {
  check(a);
  check(b);
  if (!meet_table_.empty()) return meet_table_[a * size() + b];
  return greatest_of(down_[a] & down_[b]);
}

Element FiniteLattice::join(Element a, Element b) const {
  check(a);
  check(b);
  if (!join_table_.empty()) return join_table_[a * size() + b];
  return least_of(up_[a] & up_[b]);
}

Element FiniteLattice::join_all(std::span<const Element> family) const {
  Element acc = bottom_;
  for (Element e : family) acc = join(acc, e);
  return acc;
}

Element FiniteLattice::meet_all(std::span<const Element> family) const {
  Element acc = top_;
  for (Element e : family) acc = meet(acc, e);
  return acc;
}

const Bits& FiniteLattice::up(Element e) const {
  check(e);
  return up_[e];
}

const Bits& FiniteLattice::down(Element e) const {
  check(e);
  return down_[e];
}

std::vector<OrderPair> FiniteLattice::covering_pairs() const {
  std::vector<OrderPair> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for_each_member(up_[a], [&](std::size_t b) {
      if (a == b) return;
      // a ⋖ b iff the interval [a, b] is exactly {a, b}.
      if ((up_[a] & down_[b]).count() == 2) out.emplace_back(a, b);
    });
  }
  return out;
}

std::vector<OrderPair> FiniteLattice::order_pairs() const {
  std::vector<OrderPair> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for_each_member(up_[a], [&](std::size_t b) { out.emplace_back(a, b); });
  }
  return out;
}

std::vector<Element> up_filter(const FiniteLattice& lattice, Element p) {
  return members_of(lattice.up(p));
}

FiniteLattice from_closure_system(const ClosureSystem& system) {
  const auto members = system.members();
  const std::size_t n = members.size();
  std::vector<std::string> labels;
  std::vector<Bits> up(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(system.domain().format(members[i]));
    for (std::size_t j = 0; j < n; ++j) {
      if (members[j].is_subset_of(members[i])) up[i].set(j);
    }
  }
  return FiniteLattice::from_trusted_order(std::move(labels), std::move(up));
}

std::optional<std::vector<Element>> find_isomorphism(const FiniteLattice& a,
                                                     const FiniteLattice& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  constexpr Element kUnset = std::numeric_limits<Element>::max();
  std::vector<Element> image(n, kUnset);
  std::vector<bool> used(n, false);

  auto signature = [](const FiniteLattice& l, Element e) {
    return std::pair{l.up(e).count(), l.down(e).count()};
  };

  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (Element c = 0; c < n; ++c) {
      if (used[c] || signature(a, i) != signature(b, c)) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < i && consistent; ++k) {
        consistent = a.leq(k, i) == b.leq(image[k], c) && a.leq(i, k) == b.leq(c, image[k]);
      }
      if (!consistent) continue;
      image[i] = c;
      used[c] = true;
      if (extend(i + 1)) return true;
      used[c] = false;
      image[i] = kUnset;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

std::string to_dot(const FiniteLattice& lattice, std::string_view graph_name) {
  auto escape = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out;
  };
  std::string out = "digraph " + std::string(graph_name) + " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + escape(lattice.label(i)) + "\"];\n";
  }
  for (auto [lo, hi] : lattice.covering_pairs()) {
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace litf
