#include "litf/free_distributive_lattice.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "litf/errors.hpp"
#include "litf/finite_lattice.hpp"

namespace litf {
namespace {

void check_arity(int n) {
  if (n < 1 || n > kMaxArity) {
    throw UsageError("arity " + std::to_string(n) + " outside [1, " +
                     std::to_string(kMaxArity) + "]");
  }
}

void check_same_arity(const FdlElement& a, const FdlElement& b) {
  if (a.arity() != b.arity()) {
    throw UsageError("arity mismatch: " + std::to_string(a.arity()) + " vs " +
                     std::to_string(b.arity()));
  }
}

std::string clause_text(Clause c) {
  std::string out;
  for (int j = 0; c >> j; ++j) {
    if ((c >> j) & 1U) {
      if (!out.empty()) out += " v ";
      out += "w" + std::to_string(j + 1);
    }
  }
  return out;
}

class FdlParser {
 public:
  FdlParser(std::string_view text, int arity) : text_(text), arity_(arity) {}

  FdlElement parse() {
    FdlElement e = parse_join();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  FdlElement parse_join() {
    FdlElement acc = parse_meet();
    while (consume('v')) acc = join(acc, parse_meet());
    return acc;
  }

  FdlElement parse_meet() {
    FdlElement acc = parse_atom();
    while (consume('^')) acc = meet(acc, parse_atom());
    return acc;
  }

  FdlElement parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      FdlElement inner = parse_join();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      return c == '0' ? FdlElement::bottom(arity_) : FdlElement::top(arity_);
    }
    if (c == 'w') {
      const std::size_t start = pos_++;
      int index = 0;
      std::size_t digits = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        index = index * 10 + (text_[pos_++] - '0');
        if (++digits > 2) break;
      }
      if (digits == 0) fail("generator needs an index");
      if (index < 1 || index > arity_) {
        throw ParseError("generator w" + std::to_string(index) + " outside arity " +
                             std::to_string(arity_),
                         start);
      }
      return FdlElement::generator(arity_, index);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  bool consume(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

  std::string_view text_;
  int arity_;
  std::size_t pos_ = 0;
};

std::uint64_t true_mask(const FdlElement& e) {
  const std::size_t size = std::size_t{1} << e.arity();
  std::uint64_t mask = 0;
  for (std::size_t x = 0; x < size; ++x) {
    if (eval(e, Point(e.arity(), static_cast<std::uint32_t>(x)))) mask |= std::uint64_t{1} << x;
  }
  return mask;
}

}  // namespace

FdlElement FdlElement::top(int arity) {
  check_arity(arity);
  return FdlElement(arity, {});
}

FdlElement FdlElement::bottom(int arity) {
  check_arity(arity);
  return FdlElement(arity, {Clause{0}});
}

FdlElement FdlElement::generator(int arity, int i) {
  check_arity(arity);
  if (i < 1 || i > arity) {
    throw UsageError("generator index " + std::to_string(i) + " outside [1, " +
                     std::to_string(arity) + "]");
  }
  return FdlElement(arity, {Clause{1} << (i - 1)});
}

std::string FdlElement::to_string() const {
  if (is_top()) return "1";
  if (is_bottom()) return "0";
  if (clauses_.size() == 1) return clause_text(clauses_.front());
  std::string out;
  for (Clause c : clauses_) {
    if (!out.empty()) out += " ^ ";
    const bool wrap = (c & (c - 1)) != 0;
    out += wrap ? "(" + clause_text(c) + ")" : clause_text(c);
  }
  return out;
}

FdlElement canonicalize(std::vector<Clause> raw, int arity) {
  check_arity(arity);
  const Clause limit = arity >= 32 ? ~Clause{0} : (Clause{1} << arity) - 1;
  for (Clause c : raw) {
    if ((c & ~limit) != 0) throw UsageError("clause exceeds arity " + std::to_string(arity));
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  // A proper subset is numerically smaller, so each clause only needs to be
  // compared against the survivors that precede it.
  std::vector<Clause> kept;
  for (Clause c : raw) {
    const bool absorbed =
        std::any_of(kept.begin(), kept.end(), [c](Clause k) { return (k & ~c) == 0; });
    if (!absorbed) kept.push_back(c);
  }
  return FdlElement(arity, std::move(kept));
}

bool leq(const FdlElement& a, const FdlElement& b) {
  check_same_arity(a, b);
  const auto ac = a.clauses();
  return std::all_of(b.clauses().begin(), b.clauses().end(), [&](Clause j) {
    return std::any_of(ac.begin(), ac.end(), [j](Clause i) { return (i & ~j) == 0; });
  });
}

FdlElement meet(const FdlElement& a, const FdlElement& b) {
  check_same_arity(a, b);
  std::vector<Clause> raw(a.clauses().begin(), a.clauses().end());
  raw.insert(raw.end(), b.clauses().begin(), b.clauses().end());
  return canonicalize(std::move(raw), a.arity());
}

FdlElement join(const FdlElement& a, const FdlElement& b) {
  check_same_arity(a, b);
  std::vector<Clause> raw;
  raw.reserve(a.clauses().size() * b.clauses().size());
  for (Clause i : a.clauses()) {
    for (Clause j : b.clauses()) raw.push_back(i | j);
  }
  return canonicalize(std::move(raw), a.arity());
}

bool eval(const FdlElement& e, Point x) {
  if (e.arity() != x.arity()) throw UsageError("point arity does not match element");
  const auto bits = x.bits();
  return std::all_of(e.clauses().begin(), e.clauses().end(),
                     [bits](Clause c) { return (c & bits) != 0; });
}

UpSet to_up_set(const FdlElement& e) {
  const std::size_t size = cube_size(e.arity());
  Bits members(size);
  for (std::size_t x = 0; x < size; ++x) {
    if (eval(e, Point(e.arity(), static_cast<std::uint32_t>(x)))) members.set(x);
  }
  return UpSet(e.arity(), std::move(members));
}

std::vector<FdlElement> enumerate_elements(int n) {
  check_arity(n);
  if (n > kMaxEnumerationArity) {
    throw CapacityError("free distributive lattice enumeration capped at n = " +
                        std::to_string(kMaxEnumerationArity));
  }
  const Clause universe = Clause{1} << n;
  std::vector<FdlElement> out;
  std::vector<Clause> chosen;
  // Clauses are added in increasing numeric order, so a later clause can
  // never be a subset of an earlier one; only the reverse needs checking.
  auto extend = [&](auto&& self, Clause next) -> void {
    out.push_back(canonicalize(chosen, n));
    for (Clause c = next; c < universe; ++c) {
      const bool comparable = std::any_of(chosen.begin(), chosen.end(),
                                          [c](Clause k) { return (k & ~c) == 0; });
      if (comparable) continue;
      chosen.push_back(c);
      self(self, c + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);

  std::vector<std::pair<int, std::size_t>> keys;
  keys.reserve(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    keys.emplace_back(std::popcount(true_mask(out[i])), i);
  }
  std::sort(keys.begin(), keys.end(), [&](const auto& l, const auto& r) {
    if (l.first != r.first) return l.first < r.first;
    return out[l.second] < out[r.second];
  });
  std::vector<FdlElement> sorted;
  sorted.reserve(out.size());
  for (const auto& [count, i] : keys) sorted.push_back(out[i]);
  return sorted;
}

FdlElement parse_fdl(std::string_view text, int arity) {
  check_arity(arity);
  return FdlParser(text, arity).parse();
}

FiniteLattice materialize_free_distributive_lattice(int n) {
  const auto elements = enumerate_elements(n);
  const std::size_t size = elements.size();
  std::vector<std::uint64_t> masks(size);
  std::vector<std::string> labels(size);
  for (std::size_t i = 0; i < size; ++i) {
    masks[i] = true_mask(elements[i]);
    labels[i] = elements[i].to_string();
  }
  std::vector<Bits> up(size, Bits(size));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      if ((masks[i] & ~masks[j]) == 0) up[i].set(j);
    }
  }
  return FiniteLattice::from_trusted_order(std::move(labels), std::move(up));
}

}  // namespace litf
