#include "rexcalc/bsbimod.hpp"

#include <bit>
#include <sstream>
#include <utility>

namespace rexcalc {

BSElement::BSElement(Word word, int rank) : word_(std::move(word)), rank_(rank) {
  if (static_cast<int>(word_.size()) > kMaxFactors)
    throw InvalidArgument("Bott-Samelson words are limited to " + std::to_string(kMaxFactors) +
                          " factors");
  for (int l : word_)
    if (l < 1 || l >= rank_)
      throw InvalidArgument("letter " + std::to_string(l) + " out of range for rank " +
                            std::to_string(rank_));
}

BSElement BSElement::one(Word word, int rank) { return basis(std::move(word), rank, 0); }

BSElement BSElement::basis(Word word, int rank, Mask e) {
  BSElement b(std::move(word), rank);
  if (e >> b.length() != 0) throw InvalidArgument("mask exceeds word length");
  b.coeffs_.emplace(e, Polynomial::one(rank));
  return b;
}

Polynomial BSElement::coeff(Mask e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Polynomial::zero(rank_) : it->second;
}

void BSElement::add_term(Mask e, const Polynomial &c) {
  if (c.is_zero()) return;
  if (c.rank() != rank_) throw InvalidArgument("coefficient rank mismatch");
  auto [it, inserted] = coeffs_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

void BSElement::check_compatible(const BSElement &o) const {
  if (word_ != o.word_ || rank_ != o.rank_)
    throw InvalidArgument("Bott-Samelson elements live in different bimodules (" +
                          word_to_string(word_) + " vs " + word_to_string(o.word_) + ")");
}

BSElement &BSElement::operator+=(const BSElement &o) {
  check_compatible(o);
  for (const auto &[e, c] : o.coeffs_) add_term(e, c);
  return *this;
}

BSElement &BSElement::operator-=(const BSElement &o) { return *this += -o; }

BSElement BSElement::operator-() const {
  BSElement r = *this;
  for (auto &[e, c] : r.coeffs_) c = -c;
  return r;
}

bool BSElement::operator==(const BSElement &o) const {
  return word_ == o.word_ && rank_ == o.rank_ && coeffs_ == o.coeffs_;
}

Polynomial basis_slot(const Word &word, int rank, Mask e, int j) {
  return (e >> j) & 1u ? Polynomial::variable(rank, word[j]) : Polynomial::one(rank);
}

std::vector<std::vector<Polynomial>> BSElement::expand() const {
  std::vector<std::vector<Polynomial>> out;
  for (const auto &[e, c] : coeffs_) {
    std::vector<Polynomial> slots{c};
    for (int j = 0; j < length(); ++j) slots.push_back(basis_slot(word_, rank_, e, j));
    out.push_back(std::move(slots));
  }
  return out;
}

std::size_t BSElement::hash() const {
  std::size_t h = std::hash<std::string>{}(word_to_string(word_));
  for (const auto &[e, c] : coeffs_) h = (h * 1000003u) ^ (c.hash() + e * 0x9e3779b97f4a7c15ULL);
  return h;
}

std::string BSElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[e, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ")*[";
    for (int j = 0; j < length(); ++j) {
      if (j) os << '|';
      os << ((e >> j) & 1u ? "x" + std::to_string(word_[j]) : "1");
    }
    os << ']';
  }
  return os.str();
}

BSElement from_tensor(const Word &word, int rank, std::span<const Polynomial> slots) {
  if (slots.size() != word.size() + 1)
    throw InvalidArgument("from_tensor: expected " + std::to_string(word.size() + 1) +
                          " slots, got " + std::to_string(slots.size()));
  for (const auto &p : slots)
    if (p.rank() != rank) throw InvalidArgument("from_tensor: slot rank mismatch");

  BSElement result(word, rank);
  // Each branch carries the suffix mask decided so far and the invariant
  // polynomial that still has to be multiplied into the next slot to the left.
  std::vector<std::pair<Mask, Polynomial>> branches{{0, Polynomial::one(rank)}};
  for (int j = static_cast<int>(word.size()); j >= 1; --j) {
    std::vector<std::pair<Mask, Polynomial>> next;
    next.reserve(branches.size() * 2);
    for (auto &[mask, carry] : branches) {
      Polynomial p = slots[j] * carry;
      if (p.is_zero()) continue;
      auto [inv0, inv1] = split_over_invariants(p, word[j - 1]);
      if (!inv0.is_zero()) next.emplace_back(mask, std::move(inv0));
      if (!inv1.is_zero()) next.emplace_back(mask | (Mask{1} << (j - 1)), std::move(inv1));
    }
    branches = std::move(next);
  }
  for (auto &[mask, carry] : branches) result.add_term(mask, slots[0] * carry);
  return result;
}

BSElement from_tensor(const Word &word, std::span<const Polynomial> slots) {
  if (slots.empty()) throw InvalidArgument("from_tensor: no slots");
  return from_tensor(word, slots.front().rank(), slots);
}

BSElement left_mul(const Polynomial &p, const BSElement &e) {
  BSElement r(e.word(), e.rank());
  for (const auto &[m, c] : e.coeffs()) r.add_term(m, p * c);
  return r;
}

BSElement right_mul(const BSElement &e, const Polynomial &p) {
  BSElement r(e.word(), e.rank());
  if (e.length() == 0) {
    for (const auto &[m, c] : e.coeffs()) r.add_term(m, c * p);
    return r;
  }
  for (auto slots : e.expand()) {
    slots.back() *= p;
    r += from_tensor(e.word(), e.rank(), slots);
  }
  return r;
}

BSElement dot_cap(const BSElement &e, int factor) {
  if (factor < 0 || factor >= e.length())
    throw InvalidArgument("dot_cap: factor " + std::to_string(factor) + " out of range");
  Word w = e.word();
  w.erase(w.begin() + factor);
  BSElement r(w, e.rank());
  for (auto slots : e.expand()) {
    slots[factor] *= slots[factor + 1];
    slots.erase(slots.begin() + factor + 1);
    r += from_tensor(w, e.rank(), slots);
  }
  return r;
}

int basis_degree(Mask e, int k) { return 2 * std::popcount(e) - k; }

} // namespace rexcalc
