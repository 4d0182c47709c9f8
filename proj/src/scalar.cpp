#include "wsa/scalar.hpp"

#include <array>
#include <atomic>
#include <cctype>
#include <mutex>
#include <sstream>

#include "wsa/errors.hpp"

namespace wsa {

namespace {

// n = k^2 * m with m square-free (sign kept in m).
void square_free_split(const mpz_class& n, mpz_class& k, mpz_class& m) {
  mpz_class rest = abs(n);
  k = 1;
  m = n < 0 ? -1 : 1;
  for (mpz_class p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      k *= p;
    }
    if (rest % p == 0) {
      rest /= p;
      m *= p;
    }
  }
  m *= rest;
}

// sqrt(d) = k * sqrt(m), m square-free integer.
void reduce_radicand(const Rational& d, Rational& k, mpz_class& m) {
  mpz_class num = d.get_num() * d.get_den();
  mpz_class kk;
  square_free_split(num, kk, m);
  k = Rational(kk, d.get_den());
  k.canonicalize();
}

std::mutex& tower_mutex() {
  static std::mutex m;
  return m;
}

// Lock-free mirror of the generators for the multiplication hot path. Slots are
// written once, before the count is published.
std::array<Rational, FieldTower::kMaxGenerators> g_gen_cache;
std::atomic<int> g_gen_count{0};

FieldTower& global_tower() {
  static FieldTower t;
  return t;
}

}  // namespace

Rational FieldTower::radicand(unsigned mask) const {
  Rational r = 1;
  for (int i = 0; i < size(); ++i)
    if (mask & (1u << i)) r *= gens_[i];
  return r;
}

std::optional<std::pair<unsigned, Rational>> FieldTower::express_sqrt(const Rational& d) const {
  if (d == 0) return std::make_pair(0u, Rational(0));
  Rational k;
  mpz_class m;
  reduce_radicand(d, k, m);
  for (unsigned mask = 0; mask < (1u << size()); ++mask) {
    Rational kr;
    mpz_class mr;
    reduce_radicand(radicand(mask), kr, mr);
    if (mr == m) {
      // sqrt(d) = k sqrt(m), r_mask = kr sqrt(m)
      Rational c = k / kr;
      c.canonicalize();
      return std::make_pair(mask, c);
    }
  }
  return std::nullopt;
}

FieldTower adjoin_sqrt(const FieldTower& tower, const Rational& d) {
  if (d == 0) throw DomainError("adjoin_sqrt: zero radicand");
  if (tower.express_sqrt(d)) return tower;
  if (tower.size() >= FieldTower::kMaxGenerators)
    throw CapacityError("field tower already holds " + std::to_string(FieldTower::kMaxGenerators) +
                        " independent square roots; cannot adjoin sqrt(" + rational_str(d) + ")");
  Rational k;
  mpz_class m;
  reduce_radicand(d, k, m);
  FieldTower out = tower;
  out.gens_.push_back(Rational(m));
  return out;
}

FieldTower active_tower() {
  std::lock_guard<std::mutex> lock(tower_mutex());
  return global_tower();
}

Scalar Scalar::sqrt(const Rational& d) {
  std::pair<unsigned, Rational> rep;
  {
    std::lock_guard<std::mutex> lock(tower_mutex());
    FieldTower& t = global_tower();
    t = adjoin_sqrt(t, d);
    int have = g_gen_count.load(std::memory_order_relaxed);
    for (int i = have; i < t.size(); ++i) g_gen_cache[i] = t.generators()[i];
    g_gen_count.store(t.size(), std::memory_order_release);
    rep = *t.express_sqrt(d);
  }
  Scalar s;
  if (rep.first == 0) {
    s.q_ = rep.second;
  } else if (rep.second != 0) {
    s.irr_.push_back(rep);
  }
  return s;
}

namespace {

const Rational& tower_generator(int i) {
  if (i >= g_gen_count.load(std::memory_order_acquire)) throw InternalError("tower generator out of range");
  return g_gen_cache[i];
}

}  // namespace

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.q_ = -r.q_;
  for (auto& t : r.irr_) t.second = -t.second;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  q_ += o.q_;
  if (o.irr_.empty()) return *this;
  std::vector<std::pair<unsigned, Rational>> out;
  out.reserve(irr_.size() + o.irr_.size());
  size_t i = 0, j = 0;
  while (i < irr_.size() || j < o.irr_.size()) {
    if (j == o.irr_.size() || (i < irr_.size() && irr_[i].first < o.irr_[j].first)) {
      out.push_back(irr_[i++]);
    } else if (i == irr_.size() || o.irr_[j].first < irr_[i].first) {
      out.push_back(o.irr_[j++]);
    } else {
      Rational c = irr_[i].second + o.irr_[j].second;
      if (c != 0) out.emplace_back(irr_[i].first, c);
      ++i;
      ++j;
    }
  }
  irr_ = std::move(out);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (irr_.empty() && o.irr_.empty()) {
    q_ *= o.q_;
    return *this;
  }
  if (o.irr_.empty()) {
    if (o.q_ == 0) {
      *this = Scalar();
      return *this;
    }
    q_ *= o.q_;
    for (auto& t : irr_) t.second *= o.q_;
    return *this;
  }
  if (irr_.empty()) {
    Scalar r = o;
    r *= *this;
    *this = std::move(r);
    return *this;
  }
  std::array<Rational, 8> acc;
  auto lhs = irr_;
  lhs.emplace(lhs.begin(), 0u, q_);
  auto rhs = o.irr_;
  rhs.emplace(rhs.begin(), 0u, o.q_);
  for (const auto& [sa, ca] : lhs) {
    if (ca == 0) continue;
    for (const auto& [sb, cb] : rhs) {
      if (cb == 0) continue;
      Rational c = ca * cb;
      unsigned common = sa & sb;
      for (int g = 0; common; ++g, common >>= 1)
        if (common & 1u) c *= tower_generator(g);
      acc[sa ^ sb] += c;
    }
  }
  q_ = acc[0];
  irr_.clear();
  for (unsigned m = 1; m < 8; ++m)
    if (acc[m] != 0) irr_.emplace_back(m, acc[m]);
  return *this;
}

Scalar Scalar::conjugate(int gen) const {
  Scalar r = *this;
  for (auto& t : r.irr_)
    if (t.first & (1u << gen)) t.second = -t.second;
  return r;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero scalar");
  if (irr_.empty()) return Scalar(Rational(1) / q_);
  // Multiply by Galois conjugates until the value is rational.
  Scalar num(1);
  Scalar x = *this;
  for (int g = 0; g < FieldTower::kMaxGenerators; ++g) {
    bool uses = false;
    for (const auto& t : x.irr_) uses = uses || (t.first & (1u << g));
    if (!uses) continue;
    Scalar c = x.conjugate(g);
    num *= c;
    x *= c;
  }
  if (!x.irr_.empty() || x.q_ == 0) throw InternalError("scalar inverse did not rationalize");
  return num * Scalar(Rational(1) / x.q_);
}

std::string rational_str(const Rational& q) {
  return q.get_str();
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw ParseError("bad rational '" + text + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (q_ != 0) {
    os << rational_str(q_);
    first = false;
  }
  FieldTower t = active_tower();
  for (const auto& [mask, c] : irr_) {
    std::string rad = "sqrt(" + rational_str(t.radicand(mask)) + ")";
    if (c == 1) {
      os << (first ? "" : "+") << rad;
    } else if (c == -1) {
      os << "-" << rad;
    } else {
      if (!first && c > 0) os << "+";
      os << rational_str(c) << "*" << rad;
    }
    first = false;
  }
  return os.str();
}

Scalar Scalar::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty scalar");
  Scalar out;
  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    } else if (i != 0) {
      throw ParseError("expected sign in '" + s + "'");
    }
    Rational coef = 1;
    if (s.compare(i, 5, "sqrt(") != 0) {
      size_t j = i;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
      coef = parse_rational(s.substr(i, j - i));
      i = j;
      if (i < s.size() && s[i] == '*') {
        ++i;
        if (s.compare(i, 5, "sqrt(") != 0) throw ParseError("expected sqrt( in '" + s + "'");
      } else {
        out += Scalar(coef * sign);
        continue;
      }
    }
    i += 5;
    size_t close = s.find(')', i);
    if (close == std::string::npos) throw ParseError("unclosed sqrt in '" + s + "'");
    Rational d = parse_rational(s.substr(i, close - i));
    i = close + 1;
    out += Scalar::sqrt(d) * Scalar(coef * sign);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace wsa
