#include "k3c/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace k3c {

OracleContext::OracleContext(const IntersectionLattice& lattice)
    : lat_(lattice), ample_(lattice.ample_h()) {}

void OracleContext::require_ample() const {
  if (!ample_) throw std::domain_error("oracle requires ample H");
}

std::vector<DivisorClass> OracleContext::classes_on_degree_line(i64 t, i64 min_self) const {
  std::vector<DivisorClass> out;
  i64 disc = lat_.discriminant();
  i64 two_n = mul(2, lat_.n());
  i64 cap = sub(mul(t, t), mul(two_n, min_self));
  if (cap < 0) return out;
  i64 bmax = isqrt_floor(cap / disc);
  for (i64 b = -bmax; b <= bmax; ++b) {
    i64 rem = sub(t, mul(lat_.d(), b));
    if (rem % two_n != 0) continue;
    DivisorClass X{rem / two_n, b};
    if (lat_.self(X) >= min_self) out.push_back(X);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DivisorClass> OracleContext::minus_two_classes(i64 degree_bound) const {
  require_ample();
  std::lock_guard<std::mutex> lock(mu_);
  // Degree t admits a (-2)-class iff disc * b^2 = t^2 + 4n has an integer
  // solution with a = (t - d b) / 2n integral; at most two classes per t.
  i64 disc = lat_.discriminant();
  i64 two_n = mul(2, lat_.n());
  for (i64 t = m2_bound_ + 1; t <= degree_bound; ++t) {
    i64 r = add(mul(t, t), mul(4, lat_.n()));
    if (r % disc != 0) continue;
    i64 b0;
    if (!is_square(r / disc, &b0)) continue;
    for (i64 b : {b0, -b0}) {
      i64 rem = sub(t, mul(lat_.d(), b));
      if (rem % two_n != 0) continue;
      m2_cache_.push_back({rem / two_n, b});
    }
  }
  m2_bound_ = std::max(m2_bound_, degree_bound);
  std::vector<DivisorClass> out;
  for (const DivisorClass& G : m2_cache_) {
    if (lat_.degree(G) > degree_bound) break;
    out.push_back(G);
  }
  return out;
}

bool OracleContext::effective_or_zero(const DivisorClass& D) const {
  return D.is_zero() || is_effective(D);
}

bool OracleContext::compute_effective(const DivisorClass& D) const {
  i64 t = lat_.degree(D);
  if (t <= 0) return false;
  if (lat_.self(D) >= -2) return true;  // Riemann-Roch: D or -D effective, -D has negative degree
  // Degree induction: D is effective iff some (-2)-class in its base locus
  // can be stripped leaving an effective-or-zero class of smaller degree.
  for (const DivisorClass& G : minus_two_classes(t - 1)) {
    if (lat_.intersect(G, D) >= 0) continue;
    if (effective_or_zero(D - G)) return true;
  }
  return false;
}

bool OracleContext::is_effective(const DivisorClass& D) const {
  require_ample();
  if (D.is_zero()) return true;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = eff_memo_.find(D);
    if (it != eff_memo_.end()) return it->second;
  }
  bool r = compute_effective(D);
  std::lock_guard<std::mutex> lock(mu_);
  eff_memo_.emplace(D, r);
  return r;
}

EffectivityResult OracleContext::effectivity(const DivisorClass& D) const {
  require_ample();
  EffectivityResult res;
  if (D.is_zero()) {
    res.effective = true;
    res.zero = true;
    return res;
  }
  res.effective = is_effective(D);
  if (!res.effective) return res;
  // Reconstruct one stripping chain down to self-intersection >= -2.
  DivisorClass cur = D;
  while (!cur.is_zero() && lat_.self(cur) < -2) {
    bool found = false;
    for (const DivisorClass& G : minus_two_classes(lat_.degree(cur) - 1)) {
      if (lat_.intersect(G, cur) >= 0) continue;
      if (effective_or_zero(cur - G)) {
        res.chain.push_back(G);
        cur = cur - G;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("effectivity certificate chain broke");
  }
  return res;
}

bool OracleContext::compute_irreducible(const DivisorClass& G) const {
  i64 tG = lat_.degree(G);
  for (i64 t = 1; t < tG; ++t)
    for (const DivisorClass& A : classes_on_degree_line(t, -2))
      if (effective_or_zero(G - A)) return false;
  return true;
}

bool OracleContext::is_irreducible_minus_two(const DivisorClass& G) const {
  require_ample();
  if (lat_.self(G) != -2 || lat_.degree(G) <= 0)
    throw std::invalid_argument("irreducibility test expects an effective (-2)-class");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = irr_memo_.find(G);
    if (it != irr_memo_.end()) return it->second;
  }
  bool r = compute_irreducible(G);
  std::lock_guard<std::mutex> lock(mu_);
  irr_memo_.emplace(G, r);
  return r;
}

bool OracleContext::is_nef(const DivisorClass& D) const {
  require_ample();
  if (D.is_zero()) return true;
  i64 t = lat_.degree(D);
  if (t <= 0 || lat_.self(D) < 0) return false;
  for (const DivisorClass& G : minus_two_classes(t)) {
    if (!is_irreducible_minus_two(G)) continue;
    if (lat_.intersect(D, G) < 0) return false;
  }
  return true;
}

H0Result OracleContext::h0(const DivisorClass& D, StripOrder order) const {
  require_ample();
  H0Result res;
  res.nef_model = D;
  if (!effective_or_zero(D)) return res;  // h0 = 0

  DivisorClass M = D;
  while (!M.is_zero()) {
    std::vector<DivisorClass> cand;
    for (const DivisorClass& G : minus_two_classes(lat_.degree(M)))
      if (lat_.intersect(G, M) < 0 && is_irreducible_minus_two(G)) cand.push_back(G);
    if (cand.empty()) break;
    auto deg_of = [&](const DivisorClass& X) { return lat_.degree(X); };
    DivisorClass pick;
    std::sort(cand.begin(), cand.end());
    switch (order) {
      case StripOrder::LexSmallest:
        pick = cand.front();
        break;
      case StripOrder::LexLargest:
        pick = cand.back();
        break;
      case StripOrder::SmallestDegree:
        pick = *std::min_element(cand.begin(), cand.end(),
                                 [&](const DivisorClass& x, const DivisorClass& y) {
                                   return std::make_tuple(deg_of(x), x.a, x.b) <
                                          std::make_tuple(deg_of(y), y.a, y.b);
                                 });
        break;
      case StripOrder::LargestDegree:
        pick = *std::max_element(cand.begin(), cand.end(),
                                 [&](const DivisorClass& x, const DivisorClass& y) {
                                   return std::make_tuple(deg_of(x), x.a, x.b) <
                                          std::make_tuple(deg_of(y), y.a, y.b);
                                 });
        break;
    }
    res.stripped.push_back(pick);
    M = M - pick;
  }

  res.nef_model = M;
  if (M.is_zero()) {
    res.h0 = 1;
    return res;
  }
  i64 s = lat_.self(M);
  if (s > 0) {
    res.h0 = s / 2 + 2;
  } else if (s == 0) {
    // M = k E with E primitive isotropic; h0 = k + 1.
    i64 k = std::gcd(M.a < 0 ? -M.a : M.a, M.b < 0 ? -M.b : M.b);
    res.h0 = k + 1;
  } else {
    throw std::logic_error("stripping left an effective class with negative square");
  }
  return res;
}

}  // namespace k3c
