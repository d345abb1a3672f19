/*
 * Copyright 2026 The chainring Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "chainring/modpoly.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace chainring::poly {

Poly trimmed(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

bool is_one(const Poly& f) { return f.size() == 1 && f[0] == 1; }

Poly mod_coeffs(const Poly& f, std::uint64_t m) {
  Poly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] % m;
  return trimmed(std::move(out));
}

Poly add(const Poly& a, const Poly& b, std::uint64_t m) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] % m;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + b[i]) % m;
  return trimmed(std::move(out));
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t m) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] % m;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + m - b[i] % m) % m;
  return trimmed(std::move(out));
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t m) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + mulmod(a[i] % m, b[j] % m, m)) % m;
    }
  }
  return trimmed(std::move(out));
}

Poly scalar_mul(const Poly& a, std::uint64_t c, std::uint64_t m) {
  c %= m;
  if (c == 0) return {};
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mulmod(a[i] % m, c, m);
  return trimmed(std::move(out));
}

std::pair<Poly, Poly> divmod_monic(const Poly& a, const Poly& b,
                                   std::uint64_t m) {
  assert(!b.empty() && b.back() % m == 1);
  Poly rem = mod_coeffs(a, m);
  const int db = degree(b);
  if (degree(rem) < db) return {{}, std::move(rem)};
  Poly q(rem.size() - db, 0);
  for (int i = degree(rem); i >= db; --i) {
    std::uint64_t c = rem[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) {
      std::uint64_t t = mulmod(c, b[j] % m, m);
      rem[i - db + j] = (rem[i - db + j] + m - t) % m;
    }
  }
  return {trimmed(std::move(q)), trimmed(std::move(rem))};
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& f,
            std::uint64_t m) {
  Poly acc = {1 % m};
  Poly b = divmod_monic(base, f, m).second;
  while (e != 0) {
    if (e & 1) acc = divmod_monic(mul(acc, b, m), f, m).second;
    b = divmod_monic(mul(b, b, m), f, m).second;
    e >>= 1;
  }
  return trimmed(std::move(acc));
}

namespace {

std::uint64_t inv_mod_p(std::uint64_t c, std::uint64_t p) {
  return chainring::powmod(c % p, p - 2, p);
}

// General division over GF(p): scale the divisor monic first.
std::pair<Poly, Poly> divmod_fp(const Poly& a, const Poly& b,
                                std::uint64_t p) {
  assert(!b.empty());
  std::uint64_t lead_inv = inv_mod_p(b.back(), p);
  Poly bm = scalar_mul(b, lead_inv, p);
  auto [q, rem] = divmod_monic(a, bm, p);
  return {scalar_mul(q, lead_inv, p), std::move(rem)};
}

}  // namespace

Poly gcd_fp(Poly a, Poly b, std::uint64_t p) {
  a = mod_coeffs(a, p);
  b = mod_coeffs(b, p);
  while (!b.empty()) {
    Poly r = divmod_fp(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = scalar_mul(a, inv_mod_p(a.back(), p), p);
  return a;
}

Bezout ext_gcd_coprime_fp(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r0 = mod_coeffs(a, p), r1 = mod_coeffs(b, p);
  Poly s0 = {1}, s1 = {};
  Poly t0 = {}, t1 = {1};
  while (!r1.empty()) {
    auto [q, rem] = divmod_fp(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (degree(r0) != 0) {
    throw std::invalid_argument("ext_gcd_coprime_fp: inputs not coprime");
  }
  std::uint64_t g_inv = inv_mod_p(r0[0], p);
  return {scalar_mul(s0, g_inv, p), scalar_mul(t0, g_inv, p)};
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
  const int r = degree(f);
  if (r < 1 || f.back() % p != 1) return false;
  if (r == 1) return true;
  const Poly x = {0, 1};
  // frob[i] = x^(p^i) mod f
  std::vector<Poly> frob(r + 1);
  frob[0] = x;
  for (int i = 1; i <= r; ++i) frob[i] = powmod(frob[i - 1], p, f, p);
  if (trimmed(frob[r]) != x) return false;
  for (auto [q, mult] : factorize(static_cast<std::uint64_t>(r))) {
    (void)mult;
    Poly g = gcd_fp(sub(frob[r / q], x, p), f, p);
    if (degree(g) != 0) return false;
  }
  return true;
}

bool is_primitive_irreducible(const Poly& f, std::uint64_t p) {
  if (!is_irreducible(f, p)) return false;
  const int r = degree(f);
  const std::uint64_t order =
      checked_pow(p, static_cast<std::uint64_t>(r)) - 1;
  const Poly x = {0, 1};
  const Poly one = {1};
  if (powmod(x, order, f, p) != one) return false;
  for (auto [q, mult] : factorize(order)) {
    (void)mult;
    if (powmod(x, order / q, f, p) == one) return false;
  }
  return true;
}

Poly find_primitive_irreducible(std::uint64_t p, unsigned r) {
  if (!is_prime(p)) throw InvalidParams("p must be prime");
  if (r < 1) throw InvalidParams("degree must be positive");
  std::vector<std::uint64_t> c(r, 0);
  for (;;) {
    Poly f = c;
    f.push_back(1);
    if (is_primitive_irreducible(f, p)) return f;
    // ascending by the coefficient word c_0 + c_1 p + ... + c_{r-1} p^{r-1}
    unsigned i = 0;
    while (i < r && c[i] == p - 1) c[i++] = 0;
    if (i == r) {
      throw std::logic_error("no primitive polynomial found");
    }
    ++c[i];
  }
}

namespace {

Poly unit_circle_poly(std::uint64_t order, std::uint64_t m) {
  // x^order - 1 over Z/m
  Poly out(order + 1, 0);
  out[0] = m - 1;
  out[order] = 1;
  return out;
}

}  // namespace

Poly hensel_lift_factor(const Poly& f_mod_p, std::uint64_t p, unsigned n) {
  const Poly f = trimmed(mod_coeffs(f_mod_p, p));
  const int r = degree(f);
  if (r < 1 || f.back() != 1) throw InvalidParams("f must be monic");
  const std::uint64_t order =
      checked_pow(p, static_cast<std::uint64_t>(r)) - 1;
  {
    auto [q0, rem0] = divmod_monic(unit_circle_poly(order, p), f, p);
    (void)q0;
    if (!rem0.empty()) {
      throw NotLiftable(
          "f does not divide x^(p^r-1) - 1 mod p (not primitive irreducible)");
    }
  }
  if (n == 1) return f;

  Poly target = f;
  Poly cof = divmod_monic(unit_circle_poly(order, p), f, p).first;
  Bezout bz = ext_gcd_coprime_fp(cof, target, p);
  Poly s = bz.s, t = bz.t;  // s*cof + t*target = 1 mod p

  unsigned k = 1;
  while (k < n) {
    const unsigned k2 = std::min(2 * k, n);
    const std::uint64_t m = checked_pow(p, k2);
    const Poly prod_target = unit_circle_poly(order, m);
    Poly err = sub(prod_target, mul(cof, target, m), m);
    auto [q, rem] = divmod_monic(mul(s, err, m), target, m);
    cof = add(cof, add(mul(t, err, m), mul(q, cof, m), m), m);
    target = add(target, rem, m);
    if (k2 < n) {
      Poly bezerr =
          sub(add(mul(s, cof, m), mul(t, target, m), m), Poly{1}, m);
      auto [c2, d2] = divmod_monic(mul(s, bezerr, m), target, m);
      s = sub(s, d2, m);
      t = sub(t, add(mul(t, bezerr, m), mul(c2, cof, m), m), m);
    }
    k = k2;
  }

  const std::uint64_t mn = checked_pow(p, n);
  target = mod_coeffs(target, mn);
  auto [qf, remf] = divmod_monic(unit_circle_poly(order, mn), target, mn);
  (void)qf;
  if (!remf.empty() || mod_coeffs(target, p) != f) {
    throw std::logic_error("hensel lift verification failed");
  }
  return target;
}

Poly teichmuller_charpoly_lift(const Poly& f_mod_p, std::uint64_t p,
                               unsigned n) {
  const Poly f = trimmed(mod_coeffs(f_mod_p, p));
  const int r = degree(f);
  if (r < 1 || f.back() != 1) throw InvalidParams("f must be monic");
  const std::uint64_t m = checked_pow(p, n);
  // Naive monic lift; the quotient is already the right unramified extension,
  // only the class of y is not a Teichmüller element.
  const Poly& host = f;

  auto pow_p_times = [&](Poly z, unsigned times) {
    for (unsigned i = 0; i < times; ++i) z = powmod(z, p, host, m);
    return z;
  };

  Poly eta = {0, 1};
  for (unsigned it = 0; it < n; ++it) {
    Poly next = pow_p_times(eta, static_cast<unsigned>(r));
    if (next == eta) break;
    eta = std::move(next);
  }
  if (pow_p_times(eta, static_cast<unsigned>(r)) != eta) {
    throw std::logic_error("Teichmüller iteration did not converge");
  }

  // charpoly(X) = prod_j (X - eta^(p^j)); coefficients land in Z/p^n.
  std::vector<Poly> coeffs_in_x = {Poly{1}};
  Poly conj = eta;
  for (int j = 0; j < r; ++j) {
    std::vector<Poly> next(coeffs_in_x.size() + 1);
    for (std::size_t i = 0; i < coeffs_in_x.size(); ++i) {
      Poly shifted = coeffs_in_x[i];
      next[i + 1] = add(next[i + 1], shifted, m);
      Poly lowered = divmod_monic(mul(coeffs_in_x[i], conj, m), host, m).second;
      next[i] = sub(next[i], lowered, m);
    }
    coeffs_in_x = std::move(next);
    conj = powmod(conj, p, host, m);
  }

  Poly out(static_cast<std::size_t>(r) + 1, 0);
  for (std::size_t i = 0; i < coeffs_in_x.size(); ++i) {
    if (degree(coeffs_in_x[i]) > 0) {
      throw std::logic_error("characteristic polynomial not rational");
    }
    out[i] = coeffs_in_x[i].empty() ? 0 : coeffs_in_x[i][0];
  }
  return trimmed(std::move(out));
}

}  // namespace chainring::poly
