#include "nilcert/poly.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace nilcert {

std::string Indeterminate::name() const {
  return (kind == Kind::A ? "a" : "b") + std::to_string(index);
}

// --- Monomial ---------------------------------------------------------------

Monomial::Monomial(Indeterminate v, std::uint32_t exponent) {
  if (exponent > 0) factors_.emplace_back(v, exponent);
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

std::uint32_t Monomial::exponent(Indeterminate v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, Indeterminate x) { return f.first < x; });
  return it != factors_.end() && it->first == v ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end() && j != other.factors_.end()) {
    if (i->first < j->first) {
      out.factors_.push_back(*i++);
    } else if (j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.factors_.insert(out.factors_.end(), i, factors_.end());
  out.factors_.insert(out.factors_.end(), j, other.factors_.end());
  return out;
}

std::string Monomial::to_string() const {
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += '*';
    s += v.name();
    if (e != 1) s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

bool GrlexDescending::operator()(const Monomial& x, const Monomial& y) const {
  const auto dx = x.degree();
  const auto dy = y.degree();
  if (dx != dy) return dx > dy;
  const auto& fx = x.factors();
  const auto& fy = y.factors();
  for (std::size_t k = 0; k < fx.size() && k < fy.size(); ++k) {
    if (fx[k].first != fy[k].first) {
      // the monomial carrying the earlier variable has the larger exponent there
      return fx[k].first < fy[k].first;
    }
    if (fx[k].second != fy[k].second) return fx[k].second > fy[k].second;
  }
  // equal degree and one is a prefix of the other implies equality
  return false;
}

// --- MultiPoly --------------------------------------------------------------

MultiPoly::MultiPoly(long constant) {
  if (constant != 0) terms_.emplace(Monomial(), mpz_class(constant));
}

MultiPoly::MultiPoly(const mpz_class& constant) {
  if (constant != 0) terms_.emplace(Monomial(), constant);
}

MultiPoly MultiPoly::variable(Indeterminate v) { return term(1, Monomial(v)); }

MultiPoly MultiPoly::term(const mpz_class& coefficient, const Monomial& m) {
  MultiPoly p;
  if (coefficient != 0) p.terms_.emplace(m, coefficient);
  return p;
}

std::uint64_t MultiPoly::degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::set<Indeterminate> MultiPoly::indeterminates() const {
  std::set<Indeterminate> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) out.insert(v);
  return out;
}

mpz_class MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& q) const {
  MultiPoly out = *this;
  out += q;
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& q) const {
  MultiPoly out = *this;
  out -= q;
  return out;
}

namespace {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& [v, e] : m.factors()) {
      std::size_t k = (static_cast<std::size_t>(v.kind) << 40) ^
                      (static_cast<std::size_t>(v.index) << 20) ^ e;
      h ^= k + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace

MultiPoly MultiPoly::operator*(const MultiPoly& q) const {
  if (is_zero() || q.is_zero()) return {};
  if (q.size() == 1 && q.terms_.begin()->first.is_one() && q.terms_.begin()->second == 1)
    return *this;
  std::unordered_map<Monomial, mpz_class, MonomialHash> acc;
  acc.reserve(size() * q.size());
  mpz_class prod;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : q.terms_) {
      prod = c1 * c2;
      acc[m1 * m2] += prod;
    }
  }
  MultiPoly out;
  for (auto& [m, c] : acc)
    if (c != 0) out.terms_.emplace_hint(out.terms_.end(), m, std::move(c));
  return out;
}

MultiPoly pow(const MultiPoly& p, std::uint64_t e) {
  MultiPoly result(1);
  MultiPoly base = p;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    mpz_class magnitude = c;
    if (first) {
      s += c.get_str();
    } else {
      s += c < 0 ? " - " : " + ";
      magnitude = abs(c);
      s += magnitude.get_str();
    }
    if (!m.is_one()) s += '*' + m.to_string();
    first = false;
  }
  return s;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MultiPoly parse() {
    skip_space();
    if (at_end()) fail("empty input");
    MultiPoly out;
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (!first) {
        if (peek() == '+') {
          ++pos_;
        } else if (peek() == '-') {
          sign = -1;
          ++pos_;
        } else {
          fail("expected '+' or '-'");
        }
        skip_space();
      } else if (peek() == '-' || peek() == '+') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      }
      out += parse_term(sign);
      first = false;
      skip_space();
    }
    return out;
  }

 private:
  MultiPoly parse_term(int sign) {
    mpz_class coefficient = 1;
    Monomial m;
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = mpz_class(read_digits());
      need_factor = false;
      skip_space();
      if (at_end() || peek() != '*') return MultiPoly::term(sign * coefficient, m);
      ++pos_;
      skip_space();
      need_factor = true;
    }
    while (need_factor) {
      m = m * parse_factor();
      skip_space();
      need_factor = !at_end() && peek() == '*';
      if (need_factor) {
        ++pos_;
        skip_space();
      }
    }
    return MultiPoly::term(sign * coefficient, m);
  }

  Monomial parse_factor() {
    Kind kind;
    if (peek() == 'a') {
      kind = Kind::A;
    } else if (peek() == 'b') {
      kind = Kind::B;
    } else {
      fail("expected indeterminate");
    }
    ++pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected index");
    const auto index = static_cast<std::uint32_t>(std::stoul(read_digits()));
    std::uint32_t exponent = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      exponent = static_cast<std::uint32_t>(std::stoul(read_digits()));
    }
    return Monomial({kind, index}, exponent);
  }

  std::string read_digits() {
    const auto start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) +
                                ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) { return Parser(text).parse(); }

mpz_class eval(const MultiPoly& p, const Assignment& assignment, const RingHandle& ring) {
  mpz_class total = 0;
  mpz_class value;
  for (const auto& [m, c] : p.terms()) {
    value = ring.reduce(c);
    for (const auto& [v, e] : m.factors()) {
      auto it = assignment.find(v);
      if (it == assignment.end()) throw MissingAssignment(v);
      value = ring.mul(value, ring.pow(it->second, e));
    }
    total = ring.add(total, value);
  }
  return total;
}

}  // namespace nilcert
