#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "hart/matrix.hpp"

namespace hart {

// Dense univariate polynomial over Q, coefficients ascending; empty = 0.
using QPoly = std::vector<Rational>;

inline void qp_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
inline long qp_deg(const QPoly& p) { return static_cast<long>(p.size()) - 1; }

inline QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline std::pair<QPoly, QPoly> qp_divmod(QPoly a, const QPoly& b) {
  qp_trim(a);
  if (b.empty()) throw UsageError("polynomial division by zero");
  QPoly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size()) {
    Rational c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    qp_trim(a);
    if (a.empty()) break;
  }
  qp_trim(q);
  return {q, a};
}

inline QPoly qp_monic(QPoly p) {
  qp_trim(p);
  if (p.empty()) return p;
  Rational inv = 1 / p.back();
  for (auto& c : p) c *= inv;
  return p;
}

inline QPoly qp_gcd(QPoly a, QPoly b) {
  qp_trim(a);
  qp_trim(b);
  while (!b.empty()) {
    auto [q, r] = qp_divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return qp_monic(a);
}

inline QPoly qp_derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  qp_trim(d);
  return d;
}

inline Rational qp_eval(const QPoly& p, const Rational& x) {
  Rational r(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

// Yun squarefree decomposition: returns (q_1, 1), (q_2, 2), ... with the q_i
// squarefree, pairwise coprime, and p = c * prod q_i^i.
inline std::vector<std::pair<QPoly, int>> qp_squarefree(QPoly p) {
  std::vector<std::pair<QPoly, int>> out;
  p = qp_monic(p);
  if (qp_deg(p) < 1) return out;
  QPoly d = qp_derivative(p);
  QPoly a = qp_gcd(p, d);
  QPoly b = qp_divmod(p, a).first;
  QPoly c = qp_divmod(d, a).first;
  int i = 1;
  while (qp_deg(b) > 0) {
    QPoly diff = c;
    QPoly db = qp_derivative(b);
    diff.resize(std::max(diff.size(), db.size()), Rational(0));
    for (std::size_t k = 0; k < db.size(); ++k) diff[k] -= db[k];
    qp_trim(diff);
    QPoly q = qp_gcd(b, diff);
    if (qp_deg(q) > 0) out.emplace_back(qp_monic(q), i);
    b = qp_divmod(b, q).first;
    c = qp_divmod(diff, q).first;
    ++i;
  }
  return out;
}

namespace detail {

// All positive divisors via trial division; nullopt when the cofactor cannot
// be fully factored within the cap.
inline std::optional<std::vector<mpz_class>> divisors_of(mpz_class n, long trial_cap = 1000000) {
  if (n < 0) n = -n;
  if (n == 0) return std::nullopt;
  std::vector<std::pair<mpz_class, int>> fac;
  for (mpz_class p = 2; p * p <= n && p <= trial_cap; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      fac.emplace_back(p, e);
    }
  }
  if (n > 1) {
    if (n > trial_cap && !mpz_probab_prime_p(n.get_mpz_t(), 24)) return std::nullopt;
    fac.emplace_back(n, 1);
  }
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : fac) {
    std::size_t sz = divs.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
      if (divs.size() > 4096) return std::nullopt;
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

inline std::vector<mpz_class> int_clear(const QPoly& p) {
  mpz_class lcm = 1;
  for (const auto& c : p) {
    mpz_class den = c.get_den();
    lcm = lcm / gcd(lcm, den) * den;
  }
  std::vector<mpz_class> out;
  for (const auto& c : p) out.push_back(mpz_class(c.get_num() * (lcm / c.get_den())));
  return out;
}

}  // namespace detail

// Rational roots of p (exact, via the rational root theorem); nullopt when
// the coefficient factorizations exceed the caps.
inline std::optional<std::vector<Rational>> qp_rational_roots(const QPoly& p0) {
  QPoly p = p0;
  qp_trim(p);
  if (qp_deg(p) < 1) return std::vector<Rational>{};
  std::vector<Rational> roots;
  // Strip t = 0 roots first.
  std::size_t shift = 0;
  while (shift < p.size() && p[shift] == 0) ++shift;
  if (shift) {
    roots.push_back(Rational(0));
    p.erase(p.begin(), p.begin() + shift);
  }
  if (qp_deg(p) < 1) return roots;
  auto ip = detail::int_clear(p);
  auto d0 = detail::divisors_of(ip.front());
  auto dn = detail::divisors_of(ip.back());
  if (!d0 || !dn) return std::nullopt;
  for (const auto& num : *d0)
    for (const auto& den : *dn) {
      for (int sign : {1, -1}) {
        Rational cand(sign * num, den);
        cand.canonicalize();
        if (qp_eval(p, cand) == 0) {
          if (std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
        }
      }
    }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Complete factorization into monic irreducibles by Kronecker interpolation.
// Returns nullopt when divisor enumeration or the combination count exceeds
// the caps; intended for the small minimal polynomials met in decomposition.
inline std::optional<std::vector<QPoly>> qp_factor(const QPoly& p0,
                                                   long combo_cap = 200000) {
  QPoly p = qp_monic(p0);
  if (qp_deg(p) <= 0) return std::vector<QPoly>{};
  if (qp_deg(p) == 1) return std::vector<QPoly>{p};

  auto roots = qp_rational_roots(p);
  if (!roots) return std::nullopt;
  std::vector<QPoly> out;
  for (const auto& r : *roots) {
    QPoly lin{-r, Rational(1)};
    while (true) {
      auto [q, rem] = qp_divmod(p, lin);
      if (!rem.empty()) break;
      out.push_back(lin);
      p = q;
    }
  }
  if (qp_deg(p) <= 0) return out;
  if (qp_deg(p) <= 3) {  // no rational roots and degree <= 3: irreducible
    out.push_back(qp_monic(p));
    return out;
  }

  auto ip = detail::int_clear(p);
  long deg = qp_deg(p);
  for (long d = 2; d <= deg / 2; ++d) {
    // Evaluation points 0, 1, -1, 2, -2, ...
    std::vector<Rational> xs;
    for (long k = 0; static_cast<long>(xs.size()) <= d; ++k) {
      xs.push_back(Rational(k % 2 ? (k + 1) / 2 : -(k / 2)));
    }
    std::vector<std::vector<Rational>> choices;
    long combos = 1;
    for (const auto& x : xs) {
      Rational v(0);
      for (auto it = ip.rbegin(); it != ip.rend(); ++it) v = v * x + Rational(*it);
      auto divs = detail::divisors_of(v.get_num());
      if (!divs) return std::nullopt;
      std::vector<Rational> c;
      for (const auto& dv : *divs) {
        c.push_back(Rational(dv));
        c.push_back(Rational(-dv));
      }
      choices.push_back(std::move(c));
      combos *= static_cast<long>(c.size());
      if (combos > combo_cap) return std::nullopt;
    }
    // Lagrange interpolation through each value tuple.
    std::vector<std::size_t> idx(xs.size(), 0);
    while (true) {
      QPoly cand;  // build by Lagrange
      {
        QPoly acc;
        for (std::size_t i = 0; i < xs.size(); ++i) {
          QPoly li{Rational(1)};
          Rational denom(1);
          for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            li = qp_mul(li, QPoly{-xs[j], Rational(1)});
            denom *= xs[i] - xs[j];
          }
          Rational scale = choices[i][idx[i]] / denom;
          acc.resize(std::max(acc.size(), li.size()), Rational(0));
          for (std::size_t k = 0; k < li.size(); ++k) acc[k] += li[k] * scale;
        }
        qp_trim(acc);
        cand = std::move(acc);
      }
      if (qp_deg(cand) == d) {
        auto [q, rem] = qp_divmod(p, qp_monic(cand));
        if (rem.empty()) {
          auto left = qp_factor(qp_monic(cand), combo_cap);
          auto right = qp_factor(qp_monic(q), combo_cap);
          if (!left || !right) return std::nullopt;
          out.insert(out.end(), left->begin(), left->end());
          out.insert(out.end(), right->begin(), right->end());
          return out;
        }
      }
      std::size_t carry = 0;
      while (carry < idx.size() && ++idx[carry] == choices[carry].size()) {
        idx[carry] = 0;
        ++carry;
      }
      if (carry == idx.size()) break;
    }
  }
  out.push_back(qp_monic(p));  // no factor of degree <= deg/2: irreducible
  return out;
}

}  // namespace hart
