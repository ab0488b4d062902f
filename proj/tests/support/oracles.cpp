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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace hnfsub::testing {

namespace {

using Row = std::vector<Fp>;

std::pair<Poly, Poly> naive_divrem(const Field& k, const Poly& a, const Poly& b) {
  std::vector<Fp> r = a.coeffs();
  const std::size_t db = b.size() - 1;
  if (r.size() <= db) return {Poly(), a};
  std::vector<Fp> q(r.size() - db);
  const Fp inv_lead = k.inv(b.lead());
  for (std::size_t i = r.size(); i-- > db;) {
    const Fp c = k.mul(r[i], inv_lead);
    q[i - db] = c;
    for (std::size_t t = 0; t <= db; ++t) r[i - db + t] = k.sub(r[i - db + t], k.mul(c, b.coeff(t)));
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly naive_rem(const Field& k, const Poly& a, const Poly& b) { return naive_divrem(k, a, b).second; }

Poly naive_add(const Field& k, const Poly& a, const Poly& b) {
  std::vector<Fp> c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = k.add(a.coeff(i), b.coeff(i));
  return Poly(std::move(c));
}

Poly naive_scale(const Field& k, const Poly& a, Fp s) {
  std::vector<Fp> c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = k.mul(a.coeff(i), s);
  return Poly(std::move(c));
}

Poly make_monic(const Field& k, const Poly& a) { return a.is_zero() ? a : naive_scale(k, a, k.inv(a.lead())); }

// Row echelon in place; returns pivot columns.
std::vector<std::size_t> echelon(const Field& k, std::vector<Row>& a, std::size_t cols) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].v == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const Fp inv = k.inv(a[r][c]);
    for (auto& x : a[r]) x = k.mul(x, inv);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].v == 0) continue;
      const Fp f = a[i][c];
      for (std::size_t t = 0; t < a[i].size(); ++t) a[i][t] = k.sub(a[i][t], k.mul(f, a[r][t]));
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

Fp naive_det(const Field& k, std::vector<Row> a) {
  const std::size_t n = a.size();
  Fp d = k.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].v == 0) ++p;
    if (p == n) return k.zero();
    if (p != c) {
      std::swap(a[p], a[c]);
      d = k.neg(d);
    }
    d = k.mul(d, a[c][c]);
    const Fp inv = k.inv(a[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      const Fp f = k.mul(a[i][c], inv);
      for (std::size_t t = c; t < n; ++t) a[i][t] = k.sub(a[i][t], k.mul(f, a[c][t]));
    }
  }
  return d;
}

// Inverse by Gauss-Jordan on [A | I]; nullopt when singular.
std::optional<std::vector<Row>> naive_inverse(const Field& k, const std::vector<Row>& a) {
  const std::size_t n = a.size();
  std::vector<Row> aug(n, Row(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = k.one();
  }
  if (echelon(k, aug, n).size() < n) return std::nullopt;
  std::vector<Row> inv(n, Row(n));
  for (std::size_t i = 0; i < n; ++i) std::copy(aug[i].begin() + n, aug[i].end(), inv[i].begin());
  return inv;
}

std::vector<Row> eval_rows(const Field& k, const PolyMat& m, Fp a) {
  std::vector<Row> out(m.rows(), Row(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = horner(k, m(i, j), a);
  }
  return out;
}

std::vector<Poly> lagrange_basis(const Field& k, const std::vector<Fp>& xs) {
  std::vector<Poly> basis;
  basis.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly l = Poly::one();
    Fp denom = k.one();
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      l = schoolbook_mul(k, l, Poly::linear(k, xs[j]));
      denom = k.mul(denom, k.sub(xs[i], xs[j]));
    }
    basis.push_back(naive_scale(k, l, k.inv(denom)));
  }
  return basis;
}

Poly combine(const Field& k, const std::vector<Poly>& basis, const std::vector<Fp>& ys) {
  std::size_t len = 0;
  for (const Poly& b : basis) len = std::max(len, b.size());
  std::vector<Fp> c(len);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (ys[i].v == 0) continue;
    for (std::size_t t = 0; t < basis[i].size(); ++t) c[t] = k.add(c[t], k.mul(ys[i], basis[i].coeff(t)));
  }
  return Poly(std::move(c));
}

std::size_t row_degree_sum(const PolyMat& m) {
  std::size_t s = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::int64_t d = -1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) d = std::max(d, m(i, j).degree().value());
    }
    if (d > 0) s += static_cast<std::size_t>(d);
  }
  return s;
}

// Coefficient matrix of p -> p F mod mu on (K[x]/mu)^m, one row per e_r x^t.
std::vector<Row> relation_map(const Field& k, const Poly& mu, const PolyMat& f) {
  const std::size_t dm = mu.size() - 1;
  std::vector<Row> rows;
  for (std::size_t r = 0; r < f.rows(); ++r) {
    for (std::size_t t = 0; t < dm; ++t) {
      Row row(f.cols() * dm);
      for (std::size_t j = 0; j < f.cols(); ++j) {
        const Poly v = naive_rem(k, schoolbook_mul(k, Poly::monomial(k.one(), t), f(r, j)), mu);
        for (std::size_t c = 0; c < dm; ++c) row[j * dm + c] = v.coeff(c);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

Fp eval_biv(const Field& k, const BivPoly& f, Fp x, Fp y) {
  Fp acc = k.zero();
  for (std::size_t i = f.ycoeffs().size(); i-- > 0;) acc = k.add(k.mul(acc, y), horner(k, f.ycoeff(i), x));
  return acc;
}

BivPoly from_terms(const std::vector<std::pair<Monomial, Fp>>& terms) {
  std::int64_t ymax = -1;
  for (const auto& [mono, c] : terms) ymax = std::max(ymax, mono.y);
  std::vector<std::vector<Fp>> c(static_cast<std::size_t>(ymax + 1));
  for (const auto& [mono, v] : terms) {
    auto& row = c[static_cast<std::size_t>(mono.y)];
    if (row.size() <= static_cast<std::size_t>(mono.x)) row.resize(static_cast<std::size_t>(mono.x) + 1);
    row[static_cast<std::size_t>(mono.x)] = v;
  }
  std::vector<Poly> ys;
  for (auto& row : c) ys.emplace_back(std::move(row));
  return BivPoly(std::move(ys));
}

}  // namespace

Poly schoolbook_mul(const Field& k, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Fp> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = k.add(c[i + j], k.mul(a.coeff(i), b.coeff(j)));
  }
  return Poly(std::move(c));
}

Fp horner(const Field& k, const Poly& f, Fp a) {
  Fp acc = k.zero();
  for (std::size_t i = f.size(); i-- > 0;) acc = k.add(k.mul(acc, a), f.coeff(i));
  return acc;
}

Poly lagrange(const Field& k, const std::vector<Fp>& xs, const std::vector<Fp>& ys) {
  return combine(k, lagrange_basis(k, xs), ys);
}

Poly euclid_gcd(const Field& k, Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = naive_rem(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(k, a);
}

FieldMat z0(std::size_t n) {
  FieldMat z(n, n);
  for (std::size_t i = 1; i < n; ++i) z(i, i - 1) = Fp{1};
  return z;
}

FieldMat z1(std::size_t n) {
  FieldMat z = z0(n);
  if (n > 0) z(0, n - 1) = Fp{1};
  return z;
}

FieldMat explicit_displacement(const Field& k, const FieldMat& m) {
  return sub(k, mul(k, z0(m.rows()), m), mul(k, m, transpose(z1(m.cols()))));
}

FieldMat explicit_inverse_displacement(const Field& k, const FieldMat& n) {
  return sub(k, mul(k, transpose(z1(n.rows())), n), mul(k, n, z0(n.cols())));
}

FieldMat explicit_transposed_displacement(const Field& k, const FieldMat& x) {
  return sub(k, mul(k, transpose(z0(x.rows())), x), mul(k, x, z1(x.cols())));
}

Poly det_poly(const Field& k, const PolyMat& m) {
  const std::size_t bound = row_degree_sum(m);
  std::vector<Fp> xs, ys;
  for (std::size_t a = 0; a <= bound; ++a) {
    xs.push_back(k.from_uint(a));
    ys.push_back(naive_det(k, eval_rows(k, m, xs.back())));
  }
  return lagrange(k, xs, ys);
}

PolyMat adjugate(const Field& k, const PolyMat& m) {
  const std::size_t n = m.rows();
  const std::size_t bound = row_degree_sum(m);
  std::vector<Fp> xs;
  std::vector<std::vector<Row>> vals;
  for (std::uint64_t a = 0; xs.size() <= bound; ++a) {
    const Fp pt = k.from_uint(a);
    const std::vector<Row> ev = eval_rows(k, m, pt);
    const Fp d = naive_det(k, ev);
    if (d.v == 0) continue;
    std::vector<Row> inv = *naive_inverse(k, ev);
    for (auto& row : inv) {
      for (auto& x : row) x = k.mul(x, d);
    }
    xs.push_back(pt);
    vals.push_back(std::move(inv));
  }
  const std::vector<Poly> basis = lagrange_basis(k, xs);
  PolyMat out(n, n);
  std::vector<Fp> ys(xs.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t t = 0; t < xs.size(); ++t) ys[t] = vals[t][i][j];
      out(i, j) = combine(k, basis, ys);
    }
  }
  return out;
}

namespace {

// (mu, mu * entries / d) for a list of entries over the common d.
std::pair<Poly, std::vector<Poly>> over_lcd(const Field& k, const std::vector<Poly>& nums, const Poly& d) {
  std::vector<Poly> rn, rd;
  for (const Poly& a : nums) {
    if (a.is_zero()) {
      rn.emplace_back();
      rd.push_back(Poly::one());
      continue;
    }
    const Poly g = euclid_gcd(k, a, d);
    Poly num = naive_divrem(k, a, g).first;
    Poly den = naive_divrem(k, d, g).first;
    const Fp lc = k.inv(den.lead());
    rn.push_back(naive_scale(k, num, lc));
    rd.push_back(naive_scale(k, den, lc));
  }
  Poly mu = Poly::one();
  for (const Poly& den : rd) {
    const Poly g = euclid_gcd(k, mu, den);
    mu = make_monic(k, schoolbook_mul(k, mu, naive_divrem(k, den, g).first));
  }
  std::vector<Poly> s;
  for (std::size_t i = 0; i < rn.size(); ++i) s.push_back(schoolbook_mul(k, rn[i], naive_divrem(k, mu, rd[i]).first));
  return {mu, s};
}

}  // namespace

std::pair<Poly, PolyMat> inverse_cols_oracle(const Field& k, const PolyMat& m, const std::vector<std::size_t>& j) {
  const Poly d = det_poly(k, m);
  const PolyMat adj = adjugate(k, m);
  std::vector<Poly> nums;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t c : j) nums.push_back(adj(i, c));
  }
  auto [mu, s] = over_lcd(k, nums, d);
  PolyMat out(m.rows(), j.size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t c = 0; c < j.size(); ++c) out(i, c) = s[i * j.size() + c];
  }
  return {mu, out};
}

std::pair<Poly, PolyMat> inverse_rows_oracle(const Field& k, const PolyMat& m, const std::vector<std::size_t>& j) {
  auto [mu, s] = inverse_cols_oracle(k, transpose(m), j);
  return {mu, transpose(s)};
}

std::size_t relation_quotient_dim(const Field& k, const Poly& mu, const PolyMat& f) {
  std::vector<Row> a = relation_map(k, mu, f);
  return echelon(k, a, f.cols() * (mu.size() - 1)).size();
}

std::vector<PolyMat> relation_nullspace(const Field& k, const Poly& mu, const PolyMat& f) {
  const std::size_t dm = mu.size() - 1;
  const std::vector<Row> a = relation_map(k, mu, f);
  const std::size_t cols = f.cols() * dm;
  const std::size_t rows = a.size();
  std::vector<Row> aug(rows, Row(cols + rows));
  for (std::size_t i = 0; i < rows; ++i) {
    std::copy(a[i].begin(), a[i].end(), aug[i].begin());
    aug[i][cols + i] = k.one();
  }
  const std::size_t r = echelon(k, aug, cols).size();
  std::vector<PolyMat> out;
  for (std::size_t i = r; i < rows; ++i) {
    PolyMat p(1, f.rows());
    for (std::size_t c = 0; c < f.rows(); ++c) {
      std::vector<Fp> coeffs(aug[i].begin() + static_cast<std::ptrdiff_t>(cols + c * dm),
                             aug[i].begin() + static_cast<std::ptrdiff_t>(cols + (c + 1) * dm));
      p(0, c) = Poly(std::move(coeffs));
    }
    out.push_back(std::move(p));
  }
  return out;
}

bool in_lower_row_span(const Field& k, const PolyMat& v, const PolyMat& h) {
  std::vector<Poly> r(v.cols());
  for (std::size_t j = 0; j < v.cols(); ++j) r[j] = v(0, j);
  for (std::size_t c = h.rows(); c-- > 0;) {
    if (h(c, c).is_zero()) return false;
    auto [q, rest] = naive_divrem(k, r[c], h(c, c));
    if (!rest.is_zero()) return false;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= c; ++j) {
      r[j] = naive_add(k, r[j], naive_scale(k, schoolbook_mul(k, q, h(c, j)), k.neg(k.one())));
    }
  }
  return std::all_of(r.begin(), r.end(), [](const Poly& x) { return x.is_zero(); });
}

DispGenPoly random_generators(const Field& k, std::size_t n, std::size_t alpha, std::size_t d, Rng& rng) {
  return DispGenPoly{DisplacementOp::kSylvester, random_polymat(k, n, alpha, d, rng),
                     random_polymat(k, n, alpha, d, rng)};
}

PolyMat random_unimodular(const Field& k, std::size_t n, std::size_t d, Rng& rng) {
  PolyMat l = PolyMat::identity(n), u = PolyMat::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = random_polymat(k, 1, 1, d, rng)(0, 0);
      u(j, i) = random_polymat(k, 1, 1, d, rng)(0, 0);
    }
  }
  PolyMat out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t t = 0; t < n; ++t) out(i, j) = naive_add(k, out(i, j), schoolbook_mul(k, l(i, t), u(t, j)));
    }
  }
  return out;
}

DrlBasis point_ideal_drl_basis(const Field& k, const std::vector<std::pair<Fp, Fp>>& pts) {
  const std::size_t np = pts.size();
  auto vec = [&](const Monomial& mono) {
    Row v(np);
    for (std::size_t i = 0; i < np; ++i) {
      v[i] = k.mul(k.pow(pts[i].first, static_cast<std::uint64_t>(mono.x)),
                   k.pow(pts[i].second, static_cast<std::uint64_t>(mono.y)));
    }
    return v;
  };
  std::vector<Monomial> standard;
  std::vector<Row> reduced;  // echelon rows of the standard evaluation vectors
  std::vector<std::size_t> pivots;
  std::vector<Monomial> corners;
  auto is_standard = [&](std::int64_t y, std::int64_t x) {
    return std::find(standard.begin(), standard.end(), Monomial{y, x}) != standard.end();
  };
  for (std::int64_t t = 0; t <= static_cast<std::int64_t>(np); ++t) {
    for (std::int64_t y = 0; y <= t; ++y) {
      const Monomial mono{y, t - y};
      Row v = vec(mono);
      for (std::size_t r = 0; r < reduced.size(); ++r) {
        const Fp f = v[pivots[r]];
        if (f.v == 0) continue;
        for (std::size_t c = 0; c < np; ++c) v[c] = k.sub(v[c], k.mul(f, reduced[r][c]));
      }
      auto nz = std::find_if(v.begin(), v.end(), [](Fp c) { return c.v != 0; });
      if (nz != v.end()) {
        const std::size_t pc = static_cast<std::size_t>(nz - v.begin());
        const Fp inv = k.inv(*nz);
        for (auto& c : v) c = k.mul(c, inv);
        reduced.push_back(std::move(v));
        pivots.push_back(pc);
        standard.push_back(mono);
        continue;
      }
      const bool below_x = mono.x == 0 || is_standard(mono.y, mono.x - 1);
      const bool below_y = mono.y == 0 || is_standard(mono.y - 1, mono.x);
      if (below_x && below_y) corners.push_back(mono);
    }
  }
  std::sort(corners.begin(), corners.end(), [](const Monomial& a, const Monomial& b) { return a.y < b.y; });

  // Solve sum_s c_s vec(s) = vec(corner) over the standard monomials.
  DrlBasis gb;
  for (const Monomial& c : corners) {
    std::vector<Row> sys(np, Row(standard.size() + 1));
    for (std::size_t s = 0; s < standard.size(); ++s) {
      const Row v = vec(standard[s]);
      for (std::size_t i = 0; i < np; ++i) sys[i][s] = v[i];
    }
    const Row rhs = vec(c);
    for (std::size_t i = 0; i < np; ++i) sys[i][standard.size()] = rhs[i];
    const std::vector<std::size_t> piv = echelon(k, sys, standard.size());
    std::vector<std::pair<Monomial, Fp>> terms{{c, k.one()}};
    for (std::size_t r = 0; r < piv.size(); ++r) terms.push_back({standard[piv[r]], k.neg(sys[r][standard.size()])});
    gb.polys.push_back(from_terms(terms));
  }
  return gb;
}

bool vanishes_on(const Field& k, const BivPoly& f, const std::vector<std::pair<Fp, Fp>>& pts) {
  return std::all_of(pts.begin(), pts.end(), [&](const auto& pt) { return eval_biv(k, f, pt.first, pt.second).v == 0; });
}

DrlBasis random_staircase_basis(const Field& k, const std::vector<Monomial>& lms, Rng& rng, bool full_support) {
  DrlBasis gb;
  for (const Monomial& lm : lms) {
    std::vector<std::pair<Monomial, Fp>> terms{{lm, k.one()}};
    const std::int64_t t = lm.x + lm.y;
    for (std::int64_t y = 0; y <= t; ++y) {
      if (!full_support && y > lm.y) break;
      for (std::int64_t x = 0; x + y <= t; ++x) {
        const Monomial mono{y, x};
        if (drl_less(mono, lm)) terms.push_back({mono, rng.element(k)});
      }
    }
    gb.polys.push_back(from_terms(terms));
  }
  return gb;
}

InversionOutcome FailingInversion::invert(const Field& k, const DispGenField& gen, std::uint64_t s_size,
                                          Rng& rng) const {
  const std::uint64_t n = gen.n();
  if (rng.uniform(s_size) < n * (n + 1)) return InvFail{};
  return DenseInversion().invert(k, gen, s_size, rng);
}

double binomial_half_upper_tail(std::size_t trials, std::size_t successes) {
  double tail = 0.0;
  for (std::size_t i = successes; i <= trials; ++i) {
    const double lg = std::lgamma(static_cast<double>(trials) + 1) - std::lgamma(static_cast<double>(i) + 1) -
                      std::lgamma(static_cast<double>(trials - i) + 1) - static_cast<double>(trials) * std::log(2.0);
    tail += std::exp(lg);
  }
  return tail;
}

}  // namespace hnfsub::testing
