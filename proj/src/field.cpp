#include "tc/field.hpp"

#include <algorithm>
#include <sstream>

#include "tc/error.hpp"
#include "tc/upoly.hpp"

namespace tc {

const char* error_tag(ErrorCode code) {
  switch (code) {
    case ErrorCode::bad_char: return "E_CHAR";
    case ErrorCode::bad_extension: return "E_EXT";
    case ErrorCode::missing_field: return "E_MISSING_FIELD";
    case ErrorCode::syntax: return "E_SYNTAX";
    case ErrorCode::not_cubic: return "E_NOT_CUBIC";
    case ErrorCode::singular_cubic: return "E_SINGULAR";
    case ErrorCode::not_primary: return "E_NOT_PRIMARY";
    case ErrorCode::bad_ideal: return "E_IDEAL";
    case ErrorCode::bad_candidate: return "E_CANDIDATE";
    case ErrorCode::field_mismatch: return "E_FIELD";
    case ErrorCode::invariant: return "E_INVARIANT";
    case ErrorCode::undecided: return "E_UNDECIDED";
  }
  return "E_UNKNOWN";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Field::Field(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), k_(static_cast<int>(modulus.size()) - 1), q_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < k_; ++i) q_ *= p_;
  if (k_ > 1 && q_ <= kTableLimit) build_tables();
}

Elem Field::generator() const { return k_ == 1 ? 0 : p_; }

Elem Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

Elem Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  // Reduce a coefficient vector of any length modulo the modulus.
  std::vector<std::uint32_t> c(coeffs.begin(), coeffs.end());
  for (auto& x : c) x %= p_;
  for (int i = static_cast<int>(c.size()) - 1; i >= k_; --i) {
    std::uint32_t lead = c[i];
    if (lead == 0) continue;
    for (int j = 0; j <= k_; ++j) {
      std::uint64_t s = (std::uint64_t{lead} * modulus_[j]) % p_;
      c[i - k_ + j] = static_cast<std::uint32_t>((c[i - k_ + j] + p_ - s) % p_);
    }
  }
  Elem code = 0;
  for (int i = std::min<int>(k_, static_cast<int>(c.size())) - 1; i >= 0; --i) {
    code = code * p_ + c[i];
  }
  return code;
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
  std::vector<std::uint32_t> out(k_);
  for (int i = 0; i < k_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

Elem Field::add(Elem a, Elem b) const {
  if (k_ == 1) {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem out = 0;
  Elem scale = 1;
  for (int i = 0; i < k_; ++i) {
    Elem d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    out += d * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

Elem Field::neg(Elem a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  Elem out = 0;
  Elem scale = 1;
  for (int i = 0; i < k_; ++i) {
    Elem d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
    a /= p_;
  }
  return out;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul_slow(Elem a, Elem b) const {
  auto ca = coeffs(a);
  auto cb = coeffs(b);
  std::vector<std::uint32_t> prod(2 * k_, 0);
  for (int i = 0; i < k_; ++i) {
    if (ca[i] == 0) continue;
    for (int j = 0; j < k_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_);
    }
  }
  return from_coeffs(prod);
}

Elem Field::mul(Elem a, Elem b) const {
  if (k_ == 1) return static_cast<Elem>((std::uint64_t{a} * b) % p_);
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) {
    std::uint64_t e = std::uint64_t{log_[a]} + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  return mul_slow(a, b);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem result = 1;
  Elem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::invariant, "inverse of zero");
  if (!exp_.empty()) {
    std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : (q_ - 1 - l)];
  }
  return pow(a, q_ - 2);
}

void Field::build_tables() {
  const auto factors = prime_factors(q_ - 1);
  auto pow_slow = [&](Elem a, std::uint64_t e) {
    Elem r = 1;
    while (e > 0) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  };
  Elem g = 0;
  for (Elem cand = 2; cand < q_; ++cand) {
    bool primitive = true;
    for (auto f : factors) {
      if (pow_slow(cand, (q_ - 1) / f) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  Elem x = 1;
  for (std::uint64_t i = 0; i + 1 < q_; ++i) {
    exp_[i] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = mul_slow(x, g);
  }
}

std::vector<std::uint32_t> find_irreducible(std::uint32_t p, int k) {
  if (!is_prime(p) || p >= (1u << 16)) {
    throw Error(ErrorCode::bad_char, "characteristic must be a prime below 65536");
  }
  if (k < 1) throw Error(ErrorCode::bad_extension, "extension degree must be >= 1");
  if (k == 1) return {0, 1};
  Field base(p, {0, 1});
  std::uint64_t count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    upoly::UPoly cand(k + 1);
    std::uint64_t c = code;
    for (int i = 0; i < k; ++i) {
      cand[i] = static_cast<Elem>(c % p);
      c /= p;
    }
    cand[k] = 1;
    if (cand[0] == 0) continue;
    if (upoly::is_irreducible(base, cand)) return {cand.begin(), cand.end()};
  }
  throw Error(ErrorCode::invariant, "no irreducible polynomial found");
}

FieldPtr make_field(std::uint32_t p, int k) {
  if (!is_prime(p) || p >= (1u << 16)) {
    std::ostringstream os;
    os << "characteristic " << p << " is not a prime below 65536";
    throw Error(ErrorCode::bad_char, os.str());
  }
  if (k < 1) throw Error(ErrorCode::bad_extension, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q >= (std::uint64_t{1} << 32)) {
      throw Error(ErrorCode::bad_extension, "field order must stay below 2^32");
    }
  }
  return std::make_shared<const Field>(p, find_irreducible(p, k));
}

Embedding::Embedding(FieldPtr source, FieldPtr target)
    : source_(std::move(source)), target_(std::move(target)), root_(0) {
  if (source_->characteristic() != target_->characteristic() ||
      target_->degree() % source_->degree() != 0) {
    throw Error(ErrorCode::field_mismatch, "target degree is not a multiple of the source degree");
  }
  if (source_->degree() == 1) {
    root_ = 0;
  } else {
    upoly::UPoly m;
    for (auto c : source_->modulus()) m.push_back(target_->from_int(c));
    auto rs = upoly::roots(*target_, m);
    if (rs.empty()) throw Error(ErrorCode::invariant, "source modulus has no root in target");
    root_ = rs.front();
  }
  Elem x = target_->one();
  for (int i = 0; i < source_->degree(); ++i) {
    root_powers_.push_back(x);
    x = target_->mul(x, root_);
  }
}

Elem Embedding::operator()(Elem a) const {
  auto c = source_->coeffs(a);
  Elem out = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    out = target_->add(out, target_->mul(target_->from_int(c[i]), root_powers_[i]));
  }
  return out;
}

Elem embed(const Field& source, Elem a, const FieldPtr& target) {
  // Shares no state with other embeddings: the same (source, target) pair
  // always picks the same root.
  Embedding e(std::make_shared<const Field>(source), target);
  return e(a);
}

}  // namespace tc
