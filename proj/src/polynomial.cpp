#include "tc/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

#include "tc/error.hpp"

namespace tc {

Monomial lcm(const Monomial& a, const Monomial& b) {
  return {{std::max(a.e[0], b.e[0]), std::max(a.e[1], b.e[1]), std::max(a.e[2], b.e[2])}};
}

std::strong_ordering compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (auto c = b.e[2] <=> a.e[2]; c != 0) return c;
  if (auto c = b.e[1] <=> a.e[1]; c != 0) return c;
  return b.e[0] <=> a.e[0];
}

std::vector<Monomial> monomials_of_degree(int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  // Largest first: increasing z, then increasing y.
  for (int c = 0; c <= d; ++c)
    for (int b = 0; b + c <= d; ++b) out.push_back({{d - b - c, b, c}});
  return out;
}

namespace {

struct MonoHash {
  std::size_t operator()(const Monomial& m) const {
    return (static_cast<std::size_t>(m.e[0]) * 1000003u) ^
           (static_cast<std::size_t>(m.e[1]) * 7919u) ^ static_cast<std::size_t>(m.e[2]);
  }
};

}  // namespace

Polynomial::Polynomial(FieldPtr field, std::vector<Term> terms) : field_(std::move(field)) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return mono_greater(a.mono, b.mono); });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff = field_->add(terms_.back().coeff, t.coeff);
      if (terms_.back().coeff == 0) terms_.pop_back();
    } else if (t.coeff != 0) {
      terms_.push_back(t);
    }
  }
}

Polynomial Polynomial::constant(FieldPtr field, Elem c) {
  return monomial(std::move(field), Monomial{}, c);
}

Polynomial Polynomial::monomial(FieldPtr field, const Monomial& m, Elem c) {
  Polynomial p(std::move(field));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::variable(FieldPtr field, int i) {
  return monomial(std::move(field), Monomial::var(i), 1);
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

Elem Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return 0;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r(field_);
  const auto& a = terms_;
  const auto& b = o.terms_;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && mono_greater(a[i].mono, b[j].mono))) {
      r.terms_.push_back(a[i++]);
    } else if (i == a.size() || mono_greater(b[j].mono, a[i].mono)) {
      r.terms_.push_back(b[j++]);
    } else {
      Elem c = field_->add(a[i].coeff, b[j].coeff);
      if (c != 0) r.terms_.push_back({a[i].mono, c});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(field_->neg(field_->one())); }

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  std::unordered_map<Monomial, Elem, MonoHash> acc;
  for (const auto& s : terms_)
    for (const auto& t : o.terms_) {
      auto& slot = acc[s.mono * t.mono];
      slot = field_->add(slot, field_->mul(s.coeff, t.coeff));
    }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, c});
  return Polynomial(field_, std::move(terms));
}

Polynomial Polynomial::scaled(Elem c) const {
  Polynomial r(field_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = field_->mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::times(const Monomial& m, Elem c) const {
  Polynomial r(field_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field_->mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(field_, field_->one());
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::frobenius_power(unsigned e) const {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) q *= field_->characteristic();
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    Monomial m{{static_cast<int>(t.mono.e[0] * q), static_cast<int>(t.mono.e[1] * q),
                static_cast<int>(t.mono.e[2] * q)}};
    terms.push_back({m, field_->pow(t.coeff, q)});
  }
  return Polynomial(field_, std::move(terms));
}

Polynomial Polynomial::derivative(int var) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    int k = t.mono.e[var];
    if (k == 0) continue;
    Monomial m = t.mono;
    m.e[var] -= 1;
    terms.push_back({m, field_->mul(field_->from_int(k), t.coeff)});
  }
  return Polynomial(field_, std::move(terms));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading().coeff));
}

Polynomial Polynomial::mapped(const Embedding& emb) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) terms.push_back({t.mono, emb(t.coeff)});
  return Polynomial(emb.target(), std::move(terms));
}

std::string element_to_string(const Field& f, Elem c) {
  if (f.is_prime_field()) return std::to_string(c);
  auto digits = f.coeffs(c);
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
    if (digits[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << digits[i];
    } else {
      if (digits[i] != 1) os << digits[i] << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  static const char* names[3] = {"x", "y", "z"};
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string coeff = element_to_string(*field_, t.coeff);
    bool has_vars = t.mono.degree() > 0;
    bool compound = coeff.find_first_of("+*t") != std::string::npos;
    if (!has_vars) {
      os << (compound ? "(" + coeff + ")" : coeff);
      continue;
    }
    bool need_star = false;
    if (coeff != "1") {
      os << (compound ? "(" + coeff + ")" : coeff);
      need_star = true;
    }
    for (int v = 0; v < 3; ++v) {
      if (t.mono.e[v] == 0) continue;
      if (need_star) os << "*";
      os << names[v];
      if (t.mono.e[v] > 1) os << "^" << t.mono.e[v];
      need_star = true;
    }
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(const FieldPtr& field, std::string_view text) : field_(field), text_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    std::ostringstream os;
    os << what << " at column " << (pos_ + 1) << " in polynomial '" << text_ << "'";
    throw Error(ErrorCode::syntax, os.str());
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      std::uint64_t e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<unsigned>(text_[pos_] - '0');
        if (e > 100000) fail("exponent too large");
        ++pos_;
      }
      if (pos_ == start) fail("expected exponent");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = 0;
      const std::uint64_t p = field_->characteristic();
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = (v * 10 + static_cast<unsigned>(text_[pos_] - '0')) % p;
        ++pos_;
      }
      return Polynomial::constant(field_, static_cast<Elem>(v));
    }
    ++pos_;
    switch (c) {
      case 'x': return Polynomial::variable(field_, 0);
      case 'y': return Polynomial::variable(field_, 1);
      case 'z': return Polynomial::variable(field_, 2);
      case 't':
        if (field_->degree() == 1) {
          --pos_;
          fail("'t' requires an extension field");
        }
        return Polynomial::constant(field_, field_->generator());
      default:
        --pos_;
        fail("unexpected character");
    }
  }

  const FieldPtr& field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const FieldPtr& field, std::string_view text) {
  return Parser(field, text).parse();
}

}  // namespace tc
