#include "latkit/subset.hpp"

#include <bit>
#include <stdexcept>

namespace latkit {

namespace {
std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }
}  // namespace

Subset::Subset(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

Subset Subset::full(std::size_t universe) {
  Subset s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.trim();
  return s;
}

Subset Subset::of(std::size_t universe, std::initializer_list<Element> members) {
  Subset s(universe);
  for (Element e : members) s.insert(e);
  return s;
}

Subset Subset::from_indices(std::size_t universe, std::span<const Element> members) {
  Subset s(universe);
  for (Element e : members) s.insert(e);
  return s;
}

Subset Subset::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw std::invalid_argument("Subset::from_mask: universe exceeds 64");
  Subset s(universe);
  if (!s.words_.empty()) s.words_[0] = mask;
  s.trim();
  return s;
}

std::size_t Subset::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Subset::empty() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

void Subset::insert(Element e) {
  if (e >= universe_) throw std::out_of_range("Subset::insert: element outside universe");
  words_[e >> 6] |= std::uint64_t{1} << (e & 63);
}

void Subset::erase(Element e) {
  if (e >= universe_) return;
  words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
}

void Subset::clear() {
  for (auto& w : words_) w = 0;
}

void Subset::check_same_universe(const Subset& other) const {
  if (universe_ != other.universe_) {
    throw std::invalid_argument("Subset: universes differ");
  }
}

bool Subset::is_subset_of(const Subset& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool Subset::intersects(const Subset& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

Subset& Subset::operator|=(const Subset& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Subset& Subset::operator&=(const Subset& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Subset& Subset::operator-=(const Subset& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

Subset& Subset::operator^=(const Subset& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

Subset Subset::complement() const {
  Subset s = *this;
  for (auto& w : s.words_) w = ~w;
  s.trim();
  return s;
}

Element Subset::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return universe_;
}

Element Subset::next(Element e) const {
  Element start = e + 1;
  if (start >= universe_) return universe_;
  std::size_t w = start >> 6;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (bits != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
    if (++w >= words_.size()) return universe_;
    bits = words_[w];
  }
}

std::vector<Element> Subset::indices() const {
  std::vector<Element> out;
  out.reserve(count());
  for_each([&](Element e) { out.push_back(e); });
  return out;
}

std::uint64_t Subset::mask() const {
  if (universe_ > 64) throw std::logic_error("Subset::mask: universe exceeds 64");
  return words_.empty() ? 0 : words_[0];
}

std::strong_ordering Subset::operator<=>(const Subset& other) const {
  if (auto c = universe_ <=> other.universe_; c != 0) return c;
  for (std::size_t i = words_.size(); i-- > 0;) {
    if (auto c = words_[i] <=> other.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t Subset::hash() const {
  std::size_t h = universe_ * 0x9e3779b97f4a7c15ull;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

void Subset::trim() {
  if (universe_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }
}

}  // namespace latkit
