#include "domaincheck/example_one.hpp"

#include <algorithm>
#include <charconv>

#include "domaincheck/error.hpp"

namespace domaincheck {
namespace example_one {

bool leq(Elem x, Elem y) {
  if (y.is_top() || x == y) return true;
  return x.is_nat() && y.is_nat() && x.code <= y.code;
}

std::string format(Elem x) {
  if (x.is_a()) return "a";
  if (x.is_top()) return "top";
  return std::to_string(x.code);
}

Elem parse(std::string_view text) {
  if (text == "a") return Elem::a();
  if (text == "top" || text == "inf" || text == "∞") return Elem::top();
  std::uint64_t k = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, k);
  if (text.empty() || ec != std::errc{} || ptr != end || k >= Elem::kA) {
    throw Error(ErrorKind::UnknownElement, "'" + std::string(text) + "' is not in N ∪ {a, top}");
  }
  return Elem::nat(k);
}

}  // namespace example_one

E1Set::E1Set(std::vector<std::uint64_t> finite_nats, std::optional<std::uint64_t> cofinite_from,
             bool has_a, bool has_top)
    : finite_nats_(std::move(finite_nats)),
      cofinite_from_(cofinite_from),
      has_a_(has_a),
      has_top_(has_top) {
  canonicalize();
}

void E1Set::canonicalize() {
  std::sort(finite_nats_.begin(), finite_nats_.end());
  finite_nats_.erase(std::unique(finite_nats_.begin(), finite_nats_.end()), finite_nats_.end());
  if (cofinite_from_) {
    auto t = *cofinite_from_;
    std::erase_if(finite_nats_, [t](std::uint64_t k) { return k >= t; });
    while (t > 0 && !finite_nats_.empty() && finite_nats_.back() == t - 1) {
      finite_nats_.pop_back();
      --t;
    }
    cofinite_from_ = t;
  }
}

E1Set E1Set::of(std::span<const Elem> elems) {
  E1Set s;
  for (Elem e : elems) {
    if (e.is_a()) {
      s.has_a_ = true;
    } else if (e.is_top()) {
      s.has_top_ = true;
    } else {
      s.finite_nats_.push_back(e.code);
    }
  }
  s.canonicalize();
  return s;
}

E1Set E1Set::singleton(Elem e) { return of(std::span<const Elem>(&e, 1)); }

bool E1Set::contains_nat(std::uint64_t k) const {
  if (cofinite_from_ && k >= *cofinite_from_) return true;
  return std::binary_search(finite_nats_.begin(), finite_nats_.end(), k);
}

bool E1Set::contains(Elem e) const {
  if (e.is_a()) return has_a_;
  if (e.is_top()) return has_top_;
  return contains_nat(e.code);
}

std::optional<std::uint64_t> E1Set::min_nat() const {
  if (!finite_nats_.empty()) return finite_nats_.front();
  return cofinite_from_;
}

std::optional<std::uint64_t> E1Set::max_nat() const {
  if (cofinite_from_ || finite_nats_.empty()) return std::nullopt;
  return finite_nats_.back();
}

E1Set E1Set::unite(const E1Set& other) const {
  std::vector<std::uint64_t> nats = finite_nats_;
  nats.insert(nats.end(), other.finite_nats_.begin(), other.finite_nats_.end());
  std::optional<std::uint64_t> from;
  if (cofinite_from_ && other.cofinite_from_) {
    from = std::min(*cofinite_from_, *other.cofinite_from_);
  } else if (cofinite_from_) {
    from = cofinite_from_;
  } else {
    from = other.cofinite_from_;
  }
  return E1Set(std::move(nats), from, has_a_ || other.has_a_, has_top_ || other.has_top_);
}

E1Set E1Set::complement() const {
  std::vector<std::uint64_t> nats;
  std::optional<std::uint64_t> from;
  if (cofinite_from_) {
    for (std::uint64_t k = 0; k < *cofinite_from_; ++k) {
      if (!std::binary_search(finite_nats_.begin(), finite_nats_.end(), k)) nats.push_back(k);
    }
  } else {
    std::uint64_t t = finite_nats_.empty() ? 0 : finite_nats_.back() + 1;
    for (std::uint64_t k = 0; k < t; ++k) {
      if (!std::binary_search(finite_nats_.begin(), finite_nats_.end(), k)) nats.push_back(k);
    }
    from = t;
  }
  return E1Set(std::move(nats), from, !has_a_, !has_top_);
}

E1Set E1Set::intersect(const E1Set& other) const {
  return complement().unite(other.complement()).complement();
}

std::string E1Set::to_string() const {
  std::string out = "{";
  bool first = true;
  auto put = [&](const std::string& s) {
    if (!first) out += ", ";
    out += s;
    first = false;
  };
  for (auto k : finite_nats_) put(std::to_string(k));
  if (cofinite_from_) put("n>=" + std::to_string(*cofinite_from_));
  if (has_a_) put("a");
  if (has_top_) put("top");
  return out + "}";
}

}  // namespace domaincheck
