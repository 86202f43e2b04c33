#include "rexcalc/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "rexcalc/symgroup.hpp"

namespace rexcalc {

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : exp) d += e;
  return d;
}

Monomial Monomial::variable(int i) {
  Monomial m;
  m.exp[i - 1] = 1;
  return m;
}

Monomial operator*(const Monomial &a, const Monomial &b) {
  Monomial m;
  for (int k = 0; k < kMaxVars; ++k) {
    const int e = a.exp[k] + b.exp[k];
    if (e > 255) throw InvalidArgument("monomial exponent overflow");
    m.exp[k] = static_cast<std::uint8_t>(e);
  }
  return m;
}

bool grlex_greater(const Monomial &a, const Monomial &b) {
  const int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  return a.exp > b.exp;
}

namespace {

bool term_order(const Polynomial::Term &a, const Polynomial::Term &b) {
  return grlex_greater(a.first, b.first);
}

void check_var(int rank, int i) {
  if (i < 1 || i > rank)
    throw InvalidArgument("variable index " + std::to_string(i) + " out of range for rank " +
                          std::to_string(rank));
}

void check_reflection(int rank, int i) {
  if (i < 1 || i >= rank)
    throw InvalidArgument("generator index " + std::to_string(i) + " out of range for rank " +
                          std::to_string(rank));
}

} // namespace

Polynomial::Polynomial(int rank) : rank_(rank) {
  if (rank < 0 || rank > kMaxVars)
    throw InvalidArgument("polynomial rank must be in 0.." + std::to_string(kMaxVars));
}

Polynomial::Polynomial(int rank, const Rational &constant) : Polynomial(rank) {
  if (constant != 0) {
    terms_.emplace_back(Monomial{}, constant);
    terms_.back().second.canonicalize();
  }
}

Polynomial Polynomial::variable(int rank, int i) {
  check_var(rank, i);
  return monomial(rank, Monomial::variable(i));
}

Polynomial Polynomial::monomial(int rank, const Monomial &m, const Rational &c) {
  Polynomial p(rank);
  for (int k = rank; k < kMaxVars; ++k)
    if (m.exp[k] != 0) throw InvalidArgument("monomial uses a variable beyond the rank");
  if (c != 0) {
    p.terms_.emplace_back(m, c);
    p.terms_.back().second.canonicalize();
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.total_degree() == 0);
}

bool Polynomial::is_homogeneous() const {
  for (const auto &t : terms_)
    if (t.first.total_degree() != terms_.front().first.total_degree()) return false;
  return true;
}

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.front().first.degree(); }

void Polynomial::check_rank(const Polynomial &o) const {
  if (rank_ != o.rank_)
    throw InvalidArgument("rank mismatch: " + std::to_string(rank_) + " vs " +
                          std::to_string(o.rank_));
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), term_order);
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto &t : terms_) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term &t) { return t.second == 0; });
  terms_ = std::move(merged);
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto &t : r.terms_) t.second = -t.second;
  return r;
}

Polynomial &Polynomial::operator+=(const Polynomial &o) {
  check_rank(o);
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = o.terms_.begin(), be = o.terms_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && grlex_greater(a->first, b->first))) {
      out.push_back(std::move(*a++));
    } else if (a == ae || grlex_greater(b->first, a->first)) {
      out.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o) { return *this += -o; }

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  a.check_rank(b);
  Polynomial r(a.rank_);
  if (a.is_zero() || b.is_zero()) return r;
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto &[ma, ca] : a.terms_)
    for (const auto &[mb, cb] : b.terms_) r.terms_.emplace_back(ma * mb, ca * cb);
  r.normalize();
  return r;
}

Polynomial &Polynomial::operator*=(const Polynomial &o) { return *this = *this * o; }

Polynomial &Polynomial::operator*=(const Rational &c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  Rational k = c;
  k.canonicalize();
  for (auto &t : terms_) t.second *= k;
  return *this;
}

bool Polynomial::operator==(const Polynomial &o) const {
  return rank_ == o.rank_ && terms_ == o.terms_;
}

Polynomial Polynomial::reflect(int i) const {
  check_reflection(rank_, i);
  Polynomial r(rank_);
  r.terms_ = terms_;
  for (auto &t : r.terms_) std::swap(t.first.exp[i - 1], t.first.exp[i]);
  r.normalize();
  return r;
}

Polynomial Polynomial::act(const Permutation &p) const {
  if (p.rank() != rank_)
    throw InvalidArgument("permutation rank " + std::to_string(p.rank()) +
                          " does not match polynomial rank " + std::to_string(rank_));
  Polynomial r(rank_);
  r.terms_.reserve(terms_.size());
  for (const auto &[m, c] : terms_) {
    Monomial image;
    for (int j = 1; j <= rank_; ++j) image.exp[p(j) - 1] = m.exp[j - 1];
    r.terms_.emplace_back(image, c);
  }
  r.normalize();
  return r;
}

bool Polynomial::is_invariant(int i) const { return reflect(i) == *this; }

Polynomial Polynomial::demazure(int i) const {
  check_reflection(rank_, i);
  // x_i^a x_{i+1}^b with a > b divides to
  // x_i^b x_{i+1}^b * sum_{j=0}^{a-b-1} x_i^{a-b-1-j} x_{i+1}^j, and a < b is the negated swap.
  Polynomial r(rank_);
  for (const auto &[m, c] : terms_) {
    const int a = m.exp[i - 1], b = m.exp[i];
    if (a == b) continue;
    const int hi = std::max(a, b), lo = std::min(a, b);
    const Rational sign = a > b ? Rational(1) : Rational(-1);
    for (int j = 0; j < hi - lo; ++j) {
      Monomial q = m;
      q.exp[i - 1] = static_cast<std::uint8_t>(lo + (hi - lo - 1 - j));
      q.exp[i] = static_cast<std::uint8_t>(lo + j);
      r.terms_.emplace_back(q, sign * c);
    }
  }
  r.normalize();
  return r;
}

std::size_t Polynomial::hash() const {
  std::size_t h = static_cast<std::size_t>(rank_) * 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto &[m, c] : terms_) {
    std::size_t mh = 0;
    for (auto e : m.exp) mh = mh * 131 + e;
    mix(mh);
    const mpz_class &num = c.get_num();
    const mpz_class &den = c.get_den();
    mix(static_cast<std::size_t>(mpz_get_si(num.get_mpz_t())) ^ mpz_size(num.get_mpz_t()));
    mix(static_cast<std::size_t>(mpz_get_ui(den.get_mpz_t())));
  }
  return h;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool constant = m.total_degree() == 0;
    bool wrote = false;
    if (constant || mag != 1) {
      os << mag.get_str();
      wrote = true;
    }
    for (int k = 0; k < kMaxVars; ++k) {
      if (m.exp[k] == 0) continue;
      if (wrote) os << '*';
      os << 'x' << (k + 1);
      if (m.exp[k] > 1) os << '^' << static_cast<int>(m.exp[k]);
      wrote = true;
    }
  }
  return os.str();
}

namespace {

class PolyParser {
public:
  PolyParser(int rank, std::string_view text) : rank_(rank), text_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string &why) const {
    throw InvalidArgument("cannot parse polynomial '" + std::string(text_) + "': " + why);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    Polynomial acc(rank_);
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    Polynomial t = term();
    acc += negate ? -t : t;
    while (true) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = power();
    while (true) {
      if (eat('*')) acc *= power();
      else if (eat('/')) {
        Rational d(digits());
        if (d == 0) fail("division by zero");
        acc *= Rational(1) / d;
      } else break;
    }
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (eat('^')) {
      const int e = std::stoi(digits());
      Polynomial r = Polynomial::one(rank_);
      for (int k = 0; k < e; ++k) r *= base;
      return r;
    }
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == 'x') {
      ++pos_;
      if (eat('_')) {
      }
      const int i = std::stoi(digits());
      if (i < 1 || i > rank_) fail("variable x" + std::to_string(i) + " out of range");
      return Polynomial::variable(rank_, i);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial(rank_, Rational(digits()));
    fail(std::string("unexpected character '") + c + "'");
  }

  int rank_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

Polynomial Polynomial::parse(int rank, std::string_view text) {
  return PolyParser(rank, text).parse();
}

Polynomial act(const Permutation &p, const Polynomial &q) { return q.act(p); }
Polynomial demazure(int i, const Polynomial &p) { return p.demazure(i); }
bool is_invariant(const Polynomial &p, int i) { return p.is_invariant(i); }

std::pair<Polynomial, Polynomial> split_over_invariants(const Polynomial &p, int i) {
  Polynomial inv1 = p.demazure(i);
  Polynomial inv0 = p - inv1 * Polynomial::variable(p.rank(), i);
  return {std::move(inv0), std::move(inv1)};
}

} // namespace rexcalc
