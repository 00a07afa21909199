#pragma once

// The three block partitions of GL(1|1) weights: usual blocks B, Harish-
// Chandra blocks HC, and Kujawa blocks K defined through the affine weight
// function wt. Blocks are infinite sets; all computations are relative to a
// finite symmetric window, with the closed-form descriptions kept alongside
// for the comparisons.
//
// HC equivalence is equality of central-character vectors over the
// Harish-Chandra image generators for all Frobenius levels; two consecutive
// levels r0, r0+1 with p^{r0} > 2*window pin it exactly (a single level can
// still identify |mu| and |mu'| differing by exactly q at the window corners).

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "glk/arith.hpp"

namespace glk {

// element of the affine weight lattice: sum of Lambda_s (s mod p) plus a
// multiple of delta, with exact integer coefficients
struct AffineWeight {
  std::map<Int, Int> lambda;  // residue in [0,p) -> coefficient
  Int delta = 0;

  void add_lambda(Int s, Int c, Int p) {
    Int key = bar(s, p);
    lambda[key] += c;
    if (lambda[key] == 0) lambda.erase(key);
  }

  AffineWeight operator-(const AffineWeight& o) const {
    AffineWeight r = *this;
    for (auto& [k, c] : o.lambda) {
      r.lambda[k] -= c;
      if (r.lambda[k] == 0) r.lambda.erase(k);
    }
    r.delta -= o.delta;
    return r;
  }

  bool operator==(const AffineWeight& o) const { return lambda == o.lambda && delta == o.delta; }
  bool operator<(const AffineWeight& o) const {
    if (delta != o.delta) return delta < o.delta;
    return lambda < o.lambda;
  }
  bool is_zero() const { return lambda.empty() && delta == 0; }
};

// gamma_a = Lambda_s - Lambda_{s-1} - d*delta where a = pd + s, 1 <= s <= p
inline AffineWeight gamma_affine(Int a, Int p) {
  Int d = (a - 1) >= 0 ? (a - 1) / p : -(((-(a - 1)) + p - 1) / p);
  Int s = a - p * d;
  AffineWeight w;
  w.add_lambda(s, 1, p);
  w.add_lambda(s - 1, -1, p);
  w.delta = -d;
  return w;
}

// wt(lambda) = gamma_{lambda_1} - gamma_{-lambda_2}
inline AffineWeight wt(const Weight& lam, Int p) {
  return gamma_affine(lam[0], p) - gamma_affine(-lam[1], p);
}

// closed-form block descriptions for GL(1|1): either a singleton or an
// arithmetic progression lambda + step * Z * alpha
struct BlockShape {
  Weight base;
  Int step = 0;  // 0: singleton; k>0: base + kZ*alpha

  bool contains(const Weight& mu) const {
    if (mu[0] + mu[1] != base[0] + base[1]) return false;
    Int k = mu[0] - base[0];
    if (mu[1] - base[1] != -k) return false;
    if (step == 0) return k == 0;
    return k % step == 0;
  }

  std::vector<Weight> within(Int window) const {
    std::vector<Weight> out;
    if (step == 0) {
      if (std::abs(base[0]) <= window && std::abs(base[1]) <= window) out.push_back(base);
      return out;
    }
    for (Int k = -(2 * window) / step - 1; k <= (2 * window) / step + 1; ++k) {
      Weight mu = base + Weight{k * step, -k * step};
      if (std::abs(mu[0]) <= window && std::abs(mu[1]) <= window) out.push_back(mu);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool operator==(const BlockShape& o) const {
    if (step != o.step) return false;
    return step == 0 ? base == o.base : contains(o.base);
  }
};

// B(lambda): the line lambda + Z*alpha when p | |lambda|, else {lambda}
inline BlockShape block_B(const Weight& lam, Int p) {
  return {lam, lam.sum() % p == 0 ? Int(1) : Int(0)};
}

// K(lambda): line when p | |lambda|, else lambda + pZ*alpha
inline BlockShape block_K_closed(const Weight& lam, Int p) {
  return {lam, lam.sum() % p == 0 ? Int(1) : p};
}

// HC(lambda) closed form coincides with B(lambda)
inline BlockShape block_HC_closed(const Weight& lam, Int p) { return block_B(lam, p); }

// central-character key of mu over the level-q generators of the
// Harish-Chandra image: for p | t the orbit sums evaluate to [t = |mu| mod q];
// for p ∤ t the h_lambda generators evaluate to (-1)^{|bar mu|} at
// lambda = bar(mu) and 0 elsewhere
struct HCKey {
  bool p_divides = false;
  Int t = 0;          // set when p_divides
  Weight barmu;       // set when !p_divides
  Int sign = 0;       // set when !p_divides

  bool operator<(const HCKey& o) const {
    if (p_divides != o.p_divides) return p_divides < o.p_divides;
    if (p_divides) return t < o.t;
    if (sign != o.sign) return sign < o.sign;
    return barmu < o.barmu;
  }
  bool operator==(const HCKey& o) const { return !(*this < o) && !(o < *this); }
};

inline HCKey hc_key_at_level(const Weight& mu, Int p, Int q) {
  HCKey key;
  Int t = bar(mu.sum(), q);
  if (t % p == 0) {
    key.p_divides = true;
    key.t = t;
  } else {
    key.p_divides = false;
    key.barmu = bar(mu, q);
    key.sign = (key.barmu.sum() % 2 == 0) ? 1 : -1;
  }
  return key;
}

// smallest r with p^r > bound
inline Int level_for(Int p, Int bound) {
  Int r = 1, q = p;
  while (q <= bound) {
    q *= p;
    ++r;
  }
  return r;
}

inline std::vector<Weight> window_weights(Int window) {
  std::vector<Weight> out;
  for (Int a = -window; a <= window; ++a)
    for (Int b = -window; b <= window; ++b) out.push_back(Weight{a, b});
  return out;
}

// HC class of lambda within the window: equality of eigenvalue keys at the
// two consecutive sufficient levels
inline std::vector<Weight> block_HC(const Weight& lam, Int p, Int window,
                                    bool* agrees_with_closed_form = nullptr) {
  Int r0 = level_for(p, 2 * window);
  Int q0 = 1;
  for (Int i = 0; i < r0; ++i) q0 *= p;
  Int q1 = q0 * p;
  auto key = [&](const Weight& mu) {
    return std::make_pair(hc_key_at_level(mu, p, q0), hc_key_at_level(mu, p, q1));
  };
  auto klam = key(lam);
  std::vector<Weight> cls;
  for (auto& mu : window_weights(window))
    if (key(mu) == klam) cls.push_back(mu);
  std::sort(cls.begin(), cls.end());
  if (agrees_with_closed_form) {
    auto predicted = block_HC_closed(lam, p).within(window);
    *agrees_with_closed_form = (cls == predicted);
  }
  return cls;
}

// K class of lambda within the window via wt equality
inline std::vector<Weight> block_K(const Weight& lam, Int p, Int window,
                                   bool* agrees_with_closed_form = nullptr) {
  AffineWeight w = wt(lam, p);
  std::vector<Weight> cls;
  for (auto& mu : window_weights(window))
    if (wt(mu, p) == w) cls.push_back(mu);
  std::sort(cls.begin(), cls.end());
  if (agrees_with_closed_form) {
    auto predicted = block_K_closed(lam, p).within(window);
    *agrees_with_closed_form = (cls == predicted);
  }
  return cls;
}

struct BlockReport {
  Int p = 2;
  Int window = 0;
  std::vector<std::vector<Weight>> classes_B, classes_HC, classes_K;
  bool hc_eq_b = true;          // HC class == B class for every window weight
  bool b_subset_k = true;       // B class within K class
  bool strict_iff_p_ndiv = true;  // closed forms: B strictly inside K iff p does not divide |lambda|
  std::optional<Weight> counterexample;
};

inline std::vector<std::vector<Weight>> group_classes(const std::vector<Weight>& window,
                                                      const std::vector<std::vector<Weight>>& per_weight) {
  std::map<std::vector<Weight>, bool> seen;
  std::vector<std::vector<Weight>> out;
  for (std::size_t i = 0; i < window.size(); ++i)
    if (!seen.count(per_weight[i])) {
      seen[per_weight[i]] = true;
      out.push_back(per_weight[i]);
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline BlockReport compare_blocks(Int p, Int window) {
  BlockReport rep;
  rep.p = p;
  rep.window = window;
  auto win = window_weights(window);
  // one pass: group the whole window by HC key and by wt
  Int r0 = level_for(p, 2 * window);
  Int q0 = 1;
  for (Int i = 0; i < r0; ++i) q0 *= p;
  Int q1 = q0 * p;
  std::map<std::pair<HCKey, HCKey>, std::vector<Weight>> hc_groups;
  std::map<AffineWeight, std::vector<Weight>> k_groups;
  for (auto& mu : win) {
    hc_groups[{hc_key_at_level(mu, p, q0), hc_key_at_level(mu, p, q1)}].push_back(mu);
    k_groups[wt(mu, p)].push_back(mu);
  }
  std::vector<std::vector<Weight>> per_B, per_HC, per_K;
  for (auto& lam : win) {
    auto b = block_B(lam, p).within(window);
    auto& hc = hc_groups[{hc_key_at_level(lam, p, q0), hc_key_at_level(lam, p, q1)}];
    auto& k = k_groups[wt(lam, p)];
    if (hc != block_HC_closed(lam, p).within(window) || hc != b) {
      rep.hc_eq_b = false;
      if (!rep.counterexample) rep.counterexample = lam;
    }
    if (k != block_K_closed(lam, p).within(window) ||
        !std::includes(k.begin(), k.end(), b.begin(), b.end())) {
      rep.b_subset_k = false;
      if (!rep.counterexample) rep.counterexample = lam;
    }
    bool strict = !(block_B(lam, p) == block_K_closed(lam, p));
    if (strict != (lam.sum() % p != 0)) {
      rep.strict_iff_p_ndiv = false;
      if (!rep.counterexample) rep.counterexample = lam;
    }
    per_B.push_back(b);
    per_HC.push_back(hc);
    per_K.push_back(k);
  }
  rep.classes_B = group_classes(win, per_B);
  rep.classes_HC = group_classes(win, per_HC);
  rep.classes_K = group_classes(win, per_K);
  return rep;
}

}  // namespace glk
