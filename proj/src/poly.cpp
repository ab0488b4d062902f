// Copyright 2026 The hnfsub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hnfsub/poly.hpp"

#include <algorithm>
#include <sstream>

#include "hnfsub/error.hpp"

namespace hnfsub {

namespace {

constexpr std::size_t kKaratsubaThreshold = 32;
constexpr std::size_t kTreeThreshold = 16;

void schoolbook(const Field& k, const Fp* a, std::size_t na, const Fp* b, std::size_t nb,
                Fp* out) {
  for (std::size_t i = 0; i < na; ++i) {
    if (a[i].v == 0) continue;
    for (std::size_t j = 0; j < nb; ++j) out[i + j] = k.add(out[i + j], k.mul(a[i], b[j]));
  }
}

// out must hold 2n - 1 zeroed entries; a and b both have length n.
void karatsuba(const Field& k, const Fp* a, const Fp* b, std::size_t n, Fp* out) {
  if (n <= kKaratsubaThreshold) {
    schoolbook(k, a, n, b, n, out);
    return;
  }
  const std::size_t h = n / 2;
  const std::size_t hi = n - h;
  std::vector<Fp> low(2 * h - 1), high(2 * hi - 1), mid(2 * hi - 1);
  karatsuba(k, a, b, h, low.data());
  karatsuba(k, a + h, b + h, hi, high.data());
  std::vector<Fp> sa(hi), sb(hi);
  for (std::size_t i = 0; i < hi; ++i) {
    sa[i] = a[h + i];
    sb[i] = b[h + i];
  }
  for (std::size_t i = 0; i < h; ++i) {
    sa[i] = k.add(sa[i], a[i]);
    sb[i] = k.add(sb[i], b[i]);
  }
  karatsuba(k, sa.data(), sb.data(), hi, mid.data());
  for (std::size_t i = 0; i < low.size(); ++i) mid[i] = k.sub(mid[i], low[i]);
  for (std::size_t i = 0; i < high.size(); ++i) mid[i] = k.sub(mid[i], high[i]);
  for (std::size_t i = 0; i < low.size(); ++i) out[i] = k.add(out[i], low[i]);
  for (std::size_t i = 0; i < high.size(); ++i) out[2 * h + i] = k.add(out[2 * h + i], high[i]);
  for (std::size_t i = 0; i < mid.size(); ++i) out[h + i] = k.add(out[h + i], mid[i]);
}

}  // namespace

Poly Poly::monomial(Fp c, std::size_t k) {
  std::vector<Fp> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::linear(const Field& k, Fp a) { return Poly(std::vector<Fp>{k.neg(a), Fp{1}}); }

Poly Poly::from_ints(const Field& k, std::span<const std::int64_t> coeffs) {
  std::vector<Fp> v;
  v.reserve(coeffs.size());
  for (std::int64_t c : coeffs) v.push_back(k.from_int(c));
  return Poly(std::move(v));
}

Poly add(const Field& k, const Poly& a, const Poly& b) {
  std::vector<Fp> v(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = k.add(a.coeff(i), b.coeff(i));
  return Poly(std::move(v));
}

Poly sub(const Field& k, const Poly& a, const Poly& b) {
  std::vector<Fp> v(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = k.sub(a.coeff(i), b.coeff(i));
  return Poly(std::move(v));
}

Poly neg(const Field& k, const Poly& a) {
  std::vector<Fp> v(a.coeffs());
  for (Fp& c : v) c = k.neg(c);
  return Poly(std::move(v));
}

Poly scale(const Field& k, const Poly& a, Fp c) {
  if (c.v == 0) return Poly();
  std::vector<Fp> v(a.coeffs());
  for (Fp& e : v) e = k.mul(e, c);
  return Poly(std::move(v));
}

Poly shift(const Poly& a, std::size_t s) {
  if (a.is_zero()) return a;
  std::vector<Fp> v(s + a.size());
  std::copy(a.coeffs().begin(), a.coeffs().end(), v.begin() + static_cast<std::ptrdiff_t>(s));
  return Poly(std::move(v));
}

Poly truncate(const Poly& a, std::size_t len) {
  if (a.size() <= len) return a;
  return Poly(std::vector<Fp>(a.coeffs().begin(), a.coeffs().begin() + static_cast<std::ptrdiff_t>(len)));
}

Poly derivative(const Field& k, const Poly& a) {
  if (a.size() <= 1) return Poly();
  std::vector<Fp> v(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) v[i - 1] = k.mul(a.coeff(i), k.from_uint(i));
  return Poly(std::move(v));
}

Poly mul(const Field& k, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const std::size_t na = a.size(), nb = b.size();
  std::vector<Fp> out(na + nb - 1);
  if (std::min(na, nb) <= kKaratsubaThreshold) {
    schoolbook(k, a.coeffs().data(), na, b.coeffs().data(), nb, out.data());
    return Poly(std::move(out));
  }
  // Split the longer operand into blocks of the shorter length.
  const Poly& lng = na >= nb ? a : b;
  const Poly& sht = na >= nb ? b : a;
  const std::size_t n = sht.size();
  std::vector<Fp> block(n), prod(2 * n - 1);
  for (std::size_t off = 0; off < lng.size(); off += n) {
    std::fill(block.begin(), block.end(), Fp{0});
    const std::size_t len = std::min(n, lng.size() - off);
    std::copy_n(lng.coeffs().begin() + static_cast<std::ptrdiff_t>(off), len, block.begin());
    std::fill(prod.begin(), prod.end(), Fp{0});
    karatsuba(k, block.data(), sht.coeffs().data(), n, prod.data());
    for (std::size_t i = 0; i < prod.size() && off + i < out.size(); ++i) {
      out[off + i] = k.add(out[off + i], prod[i]);
    }
  }
  return Poly(std::move(out));
}

std::pair<Poly, Poly> divrem(const Field& k, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::kZeroInput, "division by the zero polynomial");
  if (a.size() < b.size()) return {Poly(), a};
  std::vector<Fp> r(a.coeffs());
  const std::size_t nb = b.size();
  std::vector<Fp> q(a.size() - nb + 1);
  const Fp inv_lead = k.inv(b.lead());
  for (std::size_t i = q.size(); i-- > 0;) {
    const Fp c = k.mul(r[i + nb - 1], inv_lead);
    q[i] = c;
    if (c.v == 0) continue;
    for (std::size_t j = 0; j < nb; ++j) r[i + j] = k.sub(r[i + j], k.mul(c, b.coeff(j)));
  }
  r.resize(nb - 1);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly quo(const Field& k, const Poly& a, const Poly& b) { return divrem(k, a, b).first; }

Poly rem(const Field& k, const Poly& a, const Poly& b) {
  if (a.size() < b.size() && !b.is_zero()) return a;
  return divrem(k, a, b).second;
}

Poly exact_quo(const Field& k, const Poly& a, const Poly& b) {
  auto [q, r] = divrem(k, a, b);
  if (!r.is_zero()) throw Error(ErrorCode::kNoSolution, "division is not exact");
  return q;
}

bool divides(const Field& k, const Poly& b, const Poly& a) {
  if (b.is_zero()) return a.is_zero();
  return rem(k, a, b).is_zero();
}

Poly mul_mod(const Field& k, const Poly& a, const Poly& b, const Poly& modulus) {
  return rem(k, mul(k, a, b), modulus);
}

Poly monic(const Field& k, const Poly& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return scale(k, a, k.inv(a.lead()));
}

Fp eval(const Field& k, const Poly& f, Fp point) {
  Fp acc{0};
  for (std::size_t i = f.size(); i-- > 0;) acc = k.add(k.mul(acc, point), f.coeff(i));
  return acc;
}

Xgcd xgcd(const Field& k, const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::kBothZero, "xgcd(0, 0)");
  Poly r0 = a, r1 = b;
  Poly u0 = Poly::one(), u1;
  Poly v0, v1 = Poly::one();
  while (!r1.is_zero()) {
    auto [q, r] = divrem(k, r0, r1);
    Poly u2 = sub(k, u0, mul(k, q, u1));
    Poly v2 = sub(k, v0, mul(k, q, v1));
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  const Fp c = k.inv(r0.lead());
  return {scale(k, r0, c), scale(k, u0, c), scale(k, v0, c)};
}

Poly gcd(const Field& k, const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  while (!r1.is_zero()) {
    Poly r = rem(k, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
  }
  return monic(k, r0);
}

Poly lcm(const Field& k, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::kZeroInput, "lcm of a zero polynomial");
  return monic(k, mul(k, quo(k, a, gcd(k, a, b)), b));
}

Poly lcm_tree(const Field& k, std::span<const Poly> polys) {
  if (polys.empty()) throw Error(ErrorCode::kZeroInput, "lcm of an empty list");
  std::vector<Poly> layer;
  layer.reserve(polys.size());
  for (const Poly& f : polys) {
    if (f.is_zero()) throw Error(ErrorCode::kZeroInput, "lcm of a zero polynomial");
    layer.push_back(monic(k, f));
  }
  while (layer.size() > 1) {
    std::vector<Poly> next;
    next.reserve((layer.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < layer.size(); i += 2) next.push_back(lcm(k, layer[i], layer[i + 1]));
    if (layer.size() % 2 == 1) next.push_back(std::move(layer.back()));
    layer = std::move(next);
  }
  return layer.front();
}

Poly mod_inverse(const Field& k, const Poly& c, const Poly& mu) {
  if (mu.is_zero()) throw Error(ErrorCode::kZeroInput, "modulus is zero");
  const Poly cr = rem(k, c, mu);
  if (cr.is_zero()) {
    if (mu.is_constant()) return Poly();
    throw Error(ErrorCode::kNotCoprime, "polynomial is not invertible modulo mu");
  }
  const Xgcd e = xgcd(k, cr, mu);
  if (!e.g.is_one()) throw Error(ErrorCode::kNotCoprime, "polynomial is not invertible modulo mu");
  return rem(k, e.u, mu);
}

Fraction rational_reconstruct(const Field& k, const Poly& F, const Poly& A, std::int64_t num_bound,
                              std::int64_t den_bound) {
  if (A.is_zero()) throw Error(ErrorCode::kZeroInput, "modulus is zero");
  if (num_bound < 0 || den_bound < 0 || num_bound + den_bound >= A.degree().value()) {
    throw Error(ErrorCode::kInvalidArgument, "degree bounds must satisfy df + dg < deg A");
  }
  // Remainder sequence r_j = s_j A + t_j F; stop at the first deg r_j <= df.
  Poly r0 = A, r1 = rem(k, F, A);
  Poly t0, t1 = Poly::one();
  while (!r1.is_zero() && r1.degree() > num_bound) {
    auto [q, r] = divrem(k, r0, r1);
    Poly t2 = sub(k, t0, mul(k, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r1 is either zero or the first remainder of degree <= df.
  Poly f = std::move(r1), g = std::move(t1);
  if (g.is_zero() || g.degree() > den_bound) {
    throw Error(ErrorCode::kNoSolution, "no fraction within the degree bounds");
  }
  if (!gcd(k, f, g).is_one()) {
    throw Error(ErrorCode::kNoSolution, "reconstructed fraction is not reduced");
  }
  const Fp c = k.inv(g.lead());
  return {scale(k, f, c), scale(k, g, c)};
}

Poly product_of_linears(const Field& k, std::span<const Fp> points) {
  if (points.empty()) return Poly::one();
  std::vector<Poly> layer;
  layer.reserve(points.size());
  for (Fp a : points) layer.push_back(Poly::linear(k, a));
  while (layer.size() > 1) {
    std::vector<Poly> next;
    for (std::size_t i = 0; i + 1 < layer.size(); i += 2) next.push_back(mul(k, layer[i], layer[i + 1]));
    if (layer.size() % 2 == 1) next.push_back(std::move(layer.back()));
    layer = std::move(next);
  }
  return layer.front();
}

SubproductTree::SubproductTree(const Field& k, std::vector<Fp> points)
    : k_(&k), points_(std::move(points)) {
  if (points_.empty()) throw Error(ErrorCode::kInvalidArgument, "no points");
  std::vector<Fp> sorted = points_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kDuplicatePoints, "points are not pairwise distinct");
  }
  std::vector<Poly> layer;
  layer.reserve(points_.size());
  for (Fp a : points_) layer.push_back(Poly::linear(k, a));
  levels_.push_back(layer);
  while (levels_.back().size() > 1) {
    const auto& prev = levels_.back();
    std::vector<Poly> next;
    next.reserve((prev.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < prev.size(); i += 2) next.push_back(mul(k, prev[i], prev[i + 1]));
    if (prev.size() % 2 == 1) next.push_back(prev.back());
    levels_.push_back(std::move(next));
  }
}

// Node (level, index) covers leaves [index * 2^level, (index + 1) * 2^level).
void SubproductTree::remainder_down(const Poly& f, std::size_t level, std::size_t index,
                                    std::vector<Fp>& out) const {
  const std::size_t first = index << level;
  const std::size_t last = std::min(points_.size(), (index + 1) << level);
  if (last - first <= kTreeThreshold || level == 0) {
    for (std::size_t i = first; i < last; ++i) out[i] = eval(*k_, f, points_[i]);
    return;
  }
  const std::size_t left = 2 * index;
  const auto& below = levels_[level - 1];
  remainder_down(rem(*k_, f, below[left]), level - 1, left, out);
  if (left + 1 < below.size()) remainder_down(rem(*k_, f, below[left + 1]), level - 1, left + 1, out);
}

std::vector<Fp> SubproductTree::evaluate(const Poly& f) const {
  std::vector<Fp> out(points_.size());
  const std::size_t top = levels_.size() - 1;
  remainder_down(rem(*k_, f, root()), top, 0, out);
  return out;
}

// Returns sum_i scaled[i] * prod_{j != i} (x - a_j) bottom-up.
Poly SubproductTree::combine_up(std::span<const Fp> scaled) const {
  std::vector<Poly> layer;
  layer.reserve(scaled.size());
  for (Fp c : scaled) layer.push_back(Poly::constant(c));
  for (std::size_t level = 0; level + 1 < levels_.size(); ++level) {
    const auto& nodes = levels_[level];
    std::vector<Poly> next;
    next.reserve((layer.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < layer.size(); i += 2) {
      next.push_back(add(*k_, mul(*k_, layer[i], nodes[i + 1]), mul(*k_, layer[i + 1], nodes[i])));
    }
    if (layer.size() % 2 == 1) next.push_back(std::move(layer.back()));
    layer = std::move(next);
  }
  return layer.front();
}

Poly SubproductTree::interpolate(std::span<const Fp> values) const {
  if (values.size() != points_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "value count differs from point count");
  }
  if (weights_.empty()) {
    weights_ = evaluate(derivative(*k_, root()));
    for (Fp& w : weights_) w = k_->inv(w);
  }
  std::vector<Fp> scaled(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) scaled[i] = k_->mul(values[i], weights_[i]);
  return combine_up(scaled);
}

std::vector<Fp> multipoint_eval(const Field& k, const Poly& f, std::span<const Fp> points) {
  if (points.size() <= kTreeThreshold) {
    std::vector<Fp> out;
    out.reserve(points.size());
    for (Fp a : points) out.push_back(eval(k, f, a));
    return out;
  }
  // Duplicate points are harmless for evaluation; dedupe before building the tree.
  std::vector<Fp> uniq(points.begin(), points.end());
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  if (uniq.size() != points.size()) {
    SubproductTree tree(k, uniq);
    const std::vector<Fp> vals = tree.evaluate(f);
    std::vector<Fp> out;
    out.reserve(points.size());
    for (Fp a : points) {
      out.push_back(vals[static_cast<std::size_t>(std::lower_bound(uniq.begin(), uniq.end(), a) - uniq.begin())]);
    }
    return out;
  }
  return SubproductTree(k, std::vector<Fp>(points.begin(), points.end())).evaluate(f);
}

Poly interpolate(const Field& k, std::span<const Fp> points, std::span<const Fp> values) {
  if (points.size() != values.size() || points.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "points and values must be nonempty and equal in size");
  }
  return SubproductTree(k, std::vector<Fp>(points.begin(), points.end())).interpolate(values);
}

std::string to_text(const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) os << ' ';
    os << f.coeff(i).v;
  }
  return os.str();
}

Poly poly_from_text(const Field& k, const std::string& line) {
  std::istringstream is(line);
  std::vector<Fp> v;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    long long x = 0;
    try {
      x = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, "bad coefficient '" + tok + "'");
    }
    if (used != tok.size()) throw Error(ErrorCode::kParse, "bad coefficient '" + tok + "'");
    v.push_back(k.from_int(x));
  }
  return Poly(std::move(v));
}

}  // namespace hnfsub
