#include "tc/upoly.hpp"

#include <algorithm>

#include "tc/error.hpp"

namespace tc::upoly {

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly add(const Field& f, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    Elem x = i < a.size() ? a[i] : 0;
    Elem y = i < b.size() ? b[i] : 0;
    r[i] = f.add(x, y);
  }
  trim(r);
  return r;
}

UPoly sub(const Field& f, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    Elem x = i < a.size() ? a[i] : 0;
    Elem y = i < b.size() ? b[i] : 0;
    r[i] = f.sub(x, y);
  }
  trim(r);
  return r;
}

UPoly mul(const Field& f, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
  }
  trim(r);
  return r;
}

UPoly scale(const Field& f, const UPoly& a, Elem c) {
  UPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
  trim(r);
  return r;
}

void divmod(const Field& f, const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.empty()) throw Error(ErrorCode::invariant, "polynomial division by zero");
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
  const Elem lead_inv = f.inv(b.back());
  while (r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const Elem c = f.mul(r.back(), lead_inv);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[shift + j] = f.sub(r[shift + j], f.mul(c, b[j]));
    }
    trim(r);
  }
  trim(q);
}

UPoly mod(const Field& f, const UPoly& a, const UPoly& b) {
  UPoly q, r;
  divmod(f, a, b, q, r);
  return r;
}

UPoly monic(const Field& f, const UPoly& a) {
  if (a.empty()) return a;
  return scale(f, a, f.inv(a.back()));
}

UPoly gcd(const Field& f, UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

UPoly inverse_mod(const Field& f, const UPoly& a, const UPoly& m) {
  UPoly r0 = m, r1 = mod(f, a, m);
  UPoly s0, s1{f.one()};
  while (!r1.empty()) {
    UPoly q, r;
    divmod(f, r0, r1, q, r);
    UPoly s = sub(f, s0, mul(f, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (deg(r0) != 0) throw Error(ErrorCode::invariant, "polynomial is not invertible modulo m");
  return mod(f, scale(f, s0, f.inv(r0[0])), m);
}

UPoly powmod(const Field& f, const UPoly& base, std::uint64_t e, const UPoly& m) {
  UPoly result{f.one()};
  result = mod(f, result, m);
  UPoly b = mod(f, base, m);
  while (e > 0) {
    if (e & 1) result = mod(f, mul(f, result, b), m);
    b = mod(f, mul(f, b, b), m);
    e >>= 1;
  }
  return result;
}

UPoly derivative(const Field& f, const UPoly& a) {
  UPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) {
    r.push_back(f.mul(f.from_int(static_cast<std::int64_t>(i % f.characteristic())), a[i]));
  }
  trim(r);
  return r;
}

Elem eval(const Field& f, const UPoly& a, Elem x) {
  Elem r = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = f.add(f.mul(r, x), *it);
  return r;
}

namespace {

// x^(q^i) mod m computed by repeated q-th powering.
UPoly frobenius_power_of_x(const Field& f, int i, const UPoly& m) {
  UPoly x{0, f.one()};
  UPoly r = mod(f, x, m);
  for (int j = 0; j < i; ++j) r = powmod(f, r, f.order(), m);
  return r;
}

// p-th root of a polynomial whose derivative vanishes.
UPoly pth_root(const Field& f, const UPoly& a) {
  const std::uint32_t p = f.characteristic();
  const std::uint64_t root_exp = f.order() / p;  // x -> x^(q/p) inverts Frobenius
  UPoly r;
  for (std::size_t i = 0; i < a.size(); i += p) r.push_back(f.pow(a[i], root_exp));
  trim(r);
  return r;
}

UPoly exact_div(const Field& f, const UPoly& a, const UPoly& b) {
  UPoly q, r;
  divmod(f, a, b, q, r);
  return q;
}

void sff_rec(const Field& f, const UPoly& a, int mult_scale,
             std::vector<std::pair<UPoly, int>>& out) {
  if (deg(a) < 1) return;
  UPoly c = gcd(f, a, derivative(f, a));
  UPoly w = exact_div(f, a, c);
  int i = 1;
  while (deg(w) > 0) {
    UPoly y = gcd(f, w, c);
    UPoly fac = exact_div(f, w, y);
    if (deg(fac) > 0) out.emplace_back(monic(f, fac), i * mult_scale);
    w = y;
    c = exact_div(f, c, y);
    ++i;
  }
  if (deg(c) > 0) sff_rec(f, pth_root(f, c), mult_scale * static_cast<int>(f.characteristic()), out);
}

// Splits a squarefree monic product of irreducibles of degree d.
void equal_degree(const Field& f, const UPoly& a, int d, std::mt19937_64& rng,
                  std::vector<UPoly>& out) {
  if (deg(a) == d) {
    out.push_back(monic(f, a));
    return;
  }
  const int n = deg(a);
  std::uniform_int_distribution<std::uint64_t> dist(0, f.order() - 1);
  for (;;) {
    UPoly b(n);
    for (auto& c : b) c = static_cast<Elem>(dist(rng));
    trim(b);
    if (deg(b) < 1) continue;
    UPoly h;
    if (f.characteristic() == 2) {
      // Absolute trace to F_2 of b over F_{q^d}.
      const int steps = f.degree() * d;
      UPoly t = mod(f, b, a);
      h = t;
      for (int j = 1; j < steps; ++j) {
        t = mod(f, mul(f, t, t), a);
        h = add(f, h, t);
      }
    } else {
      // Norm-like product b * b^q * ... * b^(q^(d-1)), then ((q-1)/2)-th power.
      UPoly prod = mod(f, b, a);
      UPoly t = prod;
      for (int j = 1; j < d; ++j) {
        t = powmod(f, t, f.order(), a);
        prod = mod(f, mul(f, prod, t), a);
      }
      h = powmod(f, prod, (f.order() - 1) / 2, a);
      h = sub(f, h, UPoly{f.one()});
    }
    UPoly g = gcd(f, a, h);
    if (deg(g) > 0 && deg(g) < n) {
      equal_degree(f, g, d, rng, out);
      equal_degree(f, exact_div(f, a, g), d, rng, out);
      return;
    }
  }
}

bool code_less(const UPoly& a, const UPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

bool is_irreducible(const Field& f, const UPoly& a) {
  const int n = deg(a);
  if (n < 1) return false;
  if (n == 1) return true;
  UPoly m = monic(f, a);
  UPoly x{0, f.one()};
  UPoly xp = mod(f, x, m);
  for (int i = 1; i <= n / 2; ++i) {
    xp = powmod(f, xp, f.order(), m);
    if (deg(gcd(f, m, sub(f, xp, x))) != 0) return false;
  }
  return true;
}

std::vector<std::pair<UPoly, int>> squarefree_factorization(const Field& f, const UPoly& a) {
  std::vector<std::pair<UPoly, int>> out;
  sff_rec(f, monic(f, a), 1, out);
  return out;
}

std::vector<std::pair<int, UPoly>> distinct_degree_factorization(const Field& f, const UPoly& a) {
  std::vector<std::pair<int, UPoly>> out;
  UPoly rest = monic(f, a);
  UPoly x{0, f.one()};
  UPoly xp = mod(f, x, rest);
  int d = 0;
  while (deg(rest) >= 2 * (d + 1)) {
    ++d;
    xp = powmod(f, xp, f.order(), rest);
    UPoly g = gcd(f, rest, sub(f, xp, x));
    if (deg(g) > 0) {
      out.emplace_back(d, g);
      rest = exact_div(f, rest, g);
      xp = mod(f, xp, rest);
    }
  }
  if (deg(rest) > 0) out.emplace_back(deg(rest), monic(f, rest));
  return out;
}

std::vector<Elem> roots(const Field& f, const UPoly& a) {
  UPoly m = monic(f, a);
  if (deg(m) < 1) return {};
  std::vector<Elem> out;
  if (m[0] == 0) {
    out.push_back(0);
    while (!m.empty() && m[0] == 0) m.erase(m.begin());
  }
  if (deg(m) >= 1) {
    UPoly xq = frobenius_power_of_x(f, 1, m);
    UPoly g = gcd(f, m, sub(f, xq, UPoly{0, f.one()}));
    if (deg(g) >= 1) {
      std::mt19937_64 rng(0x5eed);
      std::vector<UPoly> lin;
      equal_degree(f, g, 1, rng, lin);
      for (auto& l : lin) out.push_back(f.neg(l[0]));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PrimaryPart> primary_decomposition(const Field& f, const UPoly& a) {
  std::vector<PrimaryPart> out;
  std::mt19937_64 rng(0xfac7);
  for (auto& [sq, mult] : squarefree_factorization(f, a)) {
    for (auto& [d, prod] : distinct_degree_factorization(f, sq)) {
      std::vector<UPoly> irr;
      equal_degree(f, prod, d, rng, irr);
      for (auto& g : irr) {
        UPoly pw{f.one()};
        for (int i = 0; i < mult; ++i) pw = mul(f, pw, g);
        out.push_back({pw, g, mult});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const PrimaryPart& x, const PrimaryPart& y) {
    return code_less(x.irreducible, y.irreducible);
  });
  return out;
}

}  // namespace tc::upoly
