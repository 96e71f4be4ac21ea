#include "litf/io.hpp"

#include <algorithm>
#include <set>

#include "litf/errors.hpp"

namespace litf::io {
namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw UsageError(std::string("missing JSON field \"") + key + "\"");
  }
  return j.at(key);
}

std::string label_of(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw UsageError("labels must be strings or integers");
}

Element resolve(const FiniteLattice& lattice, const json& ref) {
  if (ref.is_number_unsigned() || ref.is_number_integer()) {
    const auto i = ref.get<long long>();
    if (i < 0 || static_cast<std::size_t>(i) >= lattice.size()) {
      throw UsageError("lattice element index " + std::to_string(i) + " out of range");
    }
    return static_cast<Element>(i);
  }
  return lattice.element(label_of(ref));
}

bool is_bitstring(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

// Cube domain iff the labels are exactly the 2^n bit-strings of length n.
std::optional<int> cube_arity_of(const std::vector<std::string>& labels) {
  if (labels.empty() || !is_bitstring(labels.front())) return std::nullopt;
  const std::size_t n = labels.front().size();
  if (n > static_cast<std::size_t>(kMaxArity) || labels.size() != (std::size_t{1} << n)) {
    return std::nullopt;
  }
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.size() != n || !is_bitstring(l) || !seen.insert(l).second) return std::nullopt;
  }
  return static_cast<int>(n);
}

Subset subset_from_json(const Domain& domain, const json& j) {
  if (!j.is_array()) throw UsageError("a subset must be a JSON array of labels");
  Subset s = domain.empty_subset();
  for (const auto& item : j) {
    const std::string l = label_of(item);
    auto idx = domain.find(l);
    if (!idx) throw UsageError("unknown domain element '" + l + "'");
    s.set(*idx);
  }
  return s;
}

}  // namespace

json to_json(const FiniteLattice& lattice) {
  json pairs = json::array();
  for (auto [a, b] : lattice.covering_pairs()) pairs.push_back({a, b});
  return {{"elements", lattice.labels()}, {"leq", pairs}};
}

FiniteLattice lattice_from_json(const json& j) {
  std::vector<std::string> labels;
  for (const auto& e : require(j, "elements")) labels.push_back(label_of(e));
  // Resolve label references against the raw label list before closing.
  auto index_of = [&](const json& ref) -> Element {
    if (ref.is_number_integer()) {
      const auto i = ref.get<long long>();
      if (i < 0 || static_cast<std::size_t>(i) >= labels.size()) {
        throw UsageError("leq pair index " + std::to_string(i) + " out of range");
      }
      return static_cast<Element>(i);
    }
    const std::string l = label_of(ref);
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw UsageError("leq pair names unknown element '" + l + "'");
    return static_cast<Element>(it - labels.begin());
  };
  std::vector<OrderPair> pairs;
  for (const auto& p : require(j, "leq")) {
    if (!p.is_array() || p.size() != 2) throw UsageError("leq entries must be pairs");
    pairs.emplace_back(index_of(p[0]), index_of(p[1]));
  }
  return FiniteLattice::from_order(std::move(labels), pairs);
}

json to_json(const LValuedFunction& mu) {
  json values = json::object();
  for (std::size_t x = 0; x < mu.domain().size(); ++x) {
    values[mu.domain().label(x)] = mu.codomain().label(mu(x));
  }
  return {{"domain", mu.domain().labels()}, {"lattice", to_json(mu.codomain())}, {"values", values}};
}

LValuedFunction function_from_json(const json& j) {
  std::vector<std::string> labels;
  for (const auto& d : require(j, "domain")) labels.push_back(label_of(d));
  auto lattice = std::make_shared<const FiniteLattice>(lattice_from_json(require(j, "lattice")));
  const Domain domain = cube_arity_of(labels) ? Domain::cube(*cube_arity_of(labels))
                                              : Domain::labeled(labels);
  const json& values = require(j, "values");
  if (!values.is_object()) throw UsageError("\"values\" must map domain labels to elements");
  std::vector<Element> image(domain.size());
  std::vector<bool> seen(domain.size(), false);
  for (auto it = values.begin(); it != values.end(); ++it) {
    auto x = domain.find(it.key());
    if (!x) throw UsageError("value given for unknown domain element '" + it.key() + "'");
    image[*x] = resolve(*lattice, it.value());
    seen[*x] = true;
  }
  for (std::size_t x = 0; x < domain.size(); ++x) {
    if (!seen[x]) throw UsageError("no value for domain element '" + domain.label(x) + "'");
  }
  return LValuedFunction(domain, std::move(lattice), std::move(image));
}

json subset_to_json(const Domain& domain, const Subset& s) { return domain.subset_labels(s); }

json to_json(const ClosureSystem& system) {
  json members = json::array();
  for (const auto& m : system.members()) members.push_back(subset_to_json(system.domain(), m));
  if (system.domain().is_cube()) {
    return {{"n", system.domain().cube_arity()}, {"members", members}};
  }
  return {{"domain", system.domain().labels()}, {"members", members}};
}

ClosureSystem closure_system_from_json(const json& j) {
  Domain domain = [&] {
    if (j.is_object() && j.contains("n")) {
      const json& n = j.at("n");
      if (!n.is_number_integer()) throw UsageError("\"n\" must be an integer");
      return Domain::cube(n.get<int>());
    }
    std::vector<std::string> labels;
    for (const auto& d : require(j, "domain")) labels.push_back(label_of(d));
    return Domain::labeled(std::move(labels));
  }();
  std::vector<Subset> members;
  for (const auto& m : require(j, "members")) members.push_back(subset_from_json(domain, m));
  return ClosureSystem(std::move(domain), std::move(members));
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

}  // namespace litf::io
