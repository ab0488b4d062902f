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

#include "hnfsub/bivar.hpp"

#include <algorithm>
#include <utility>

#include "hnfsub/error.hpp"
#include "hnfsub/modsolve.hpp"

namespace hnfsub {

namespace {

const Poly kZeroPoly{};

// y^s f
BivPoly yshift(const BivPoly& f, std::size_t s) {
  if (f.is_zero()) return f;
  std::vector<Poly> v(s);
  v.insert(v.end(), f.ycoeffs().begin(), f.ycoeffs().end());
  return BivPoly(std::move(v));
}

BivPoly bsub(const Field& k, const BivPoly& a, const BivPoly& b) {
  const std::size_t len = std::max(a.ycoeffs().size(), b.ycoeffs().size());
  std::vector<Poly> v(len);
  for (std::size_t i = 0; i < len; ++i) v[i] = sub(k, a.ycoeff(i), b.ycoeff(i));
  return BivPoly(std::move(v));
}

BivPoly bneg(const Field& k, const BivPoly& a) {
  std::vector<Poly> v;
  for (const Poly& c : a.ycoeffs()) v.push_back(neg(k, c));
  return BivPoly(std::move(v));
}

std::size_t as_size(Degree d) { return static_cast<std::size_t>(d.value()); }

}  // namespace

Degree BivPoly::xdeg() const noexcept {
  Degree d;
  for (const Poly& c : y_) d = std::max(d, c.degree());
  return d;
}

Degree BivPoly::tdeg() const noexcept {
  Degree d;
  for (std::size_t i = 0; i < y_.size(); ++i) d = std::max(d, y_[i].degree() + static_cast<std::int64_t>(i));
  return d;
}

const Poly& BivPoly::ycoeff(std::size_t i) const noexcept { return i < y_.size() ? y_[i] : kZeroPoly; }

bool drl_less(const Monomial& a, const Monomial& b) noexcept {
  const std::int64_t ta = a.x + a.y, tb = b.x + b.y;
  if (ta != tb) return ta < tb;
  return a.y < b.y;
}

Monomial drl_leading_monomial(const BivPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "leading monomial of zero");
  std::optional<Monomial> best;
  // For a fixed y-degree the largest x-degree dominates.
  for (std::size_t i = 0; i < f.ycoeffs().size(); ++i) {
    const Poly& c = f.ycoeff(i);
    if (c.is_zero()) continue;
    const Monomial m{static_cast<std::int64_t>(i), c.degree().value()};
    if (!best || drl_less(*best, m)) best = m;
  }
  return *best;
}

BivPoly drl_normal_form(const Field& k, const BivPoly& f, const DrlBasis& gb) {
  std::vector<Monomial> lms;
  std::vector<Fp> lcs;
  for (const BivPoly& g : gb.polys) {
    lms.push_back(drl_leading_monomial(g));
    lcs.push_back(g.term(static_cast<std::size_t>(lms.back().y), static_cast<std::size_t>(lms.back().x)));
  }
  BivPoly p = f;
  std::vector<Poly> rest;
  while (!p.is_zero()) {
    const Monomial m = drl_leading_monomial(p);
    const std::size_t my = static_cast<std::size_t>(m.y), mx = static_cast<std::size_t>(m.x);
    const Fp c = p.term(my, mx);
    std::size_t i = 0;
    while (i < lms.size() && !(lms[i].y <= m.y && lms[i].x <= m.x)) ++i;
    const Poly term = Poly::monomial(c, mx);
    if (i == lms.size()) {
      if (rest.size() <= my) rest.resize(my + 1);
      rest[my] = add(k, rest[my], term);
      std::vector<Poly> v(p.ycoeffs());
      v[my] = sub(k, v[my], term);
      p = BivPoly(std::move(v));
      continue;
    }
    const Poly q = Poly::monomial(k.div(c, lcs[i]), static_cast<std::size_t>(m.x - lms[i].x));
    const std::size_t dy = static_cast<std::size_t>(m.y - lms[i].y);
    std::vector<Poly> v(p.ycoeffs());
    const auto& g = gb.polys[i].ycoeffs();
    if (v.size() < g.size() + dy) v.resize(g.size() + dy);
    for (std::size_t t = 0; t < g.size(); ++t) v[t + dy] = sub(k, v[t + dy], mul(k, q, g[t]));
    p = BivPoly(std::move(v));
  }
  return BivPoly(std::move(rest));
}

Staircase build_staircase(const DrlBasis& gb) {
  const std::size_t l = gb.polys.size();
  if (l < 2) throw Error(ErrorCode::kNotMinimalBasis, "a minimal basis has at least two elements");
  std::vector<Monomial> lm;
  for (const BivPoly& g : gb.polys) {
    if (g.is_zero()) throw Error(ErrorCode::kNotMinimalBasis, "basis contains the zero polynomial");
    lm.push_back(drl_leading_monomial(g));
  }
  if (lm.front().y != 0 || lm.front().x == 0) {
    throw Error(ErrorCode::kNotMinimalBasis, "first leading monomial must be a positive power of x");
  }
  if (lm.back().x != 0) throw Error(ErrorCode::kNotMinimalBasis, "last leading monomial must be a power of y");
  for (std::size_t i = 0; i + 1 < l; ++i) {
    if (lm[i].y >= lm[i + 1].y || lm[i].x <= lm[i + 1].x) {
      throw Error(ErrorCode::kNotMinimalBasis, "leading monomials do not form a minimal staircase");
    }
  }
  Staircase st;
  st.n_i.resize(l);
  std::int64_t pad = 1;
  for (std::size_t i = 0; i + 1 < l; ++i) {
    st.n_i[i] = static_cast<std::size_t>(lm[i + 1].y - lm[i].y);
    st.D += static_cast<std::int64_t>(st.n_i[i]) * lm[i].x;
    pad = std::max(pad, static_cast<std::int64_t>(st.n_i[i]) + gb.polys[i].ydeg().value() -
                            gb.polys[l - 1].ydeg().value());
  }
  st.n_i[l - 1] = static_cast<std::size_t>(pad);
  for (std::size_t i = 0; i < l; ++i) {
    st.offsets.push_back(st.n);
    st.n += st.n_i[i];
  }
  for (std::size_t i = 0; i < l; ++i) {
    if (as_size(gb.polys[i].ydeg()) > st.n - st.n_i[i]) {
      throw Error(ErrorCode::kNotMinimalBasis, "basis element does not fit in the matrix");
    }
  }
  return st;
}

PolyMat build_matrix(const DrlBasis& gb, const Staircase& st) {
  PolyMat m(st.n, st.n);
  for (std::size_t i = 0; i < gb.polys.size(); ++i) {
    const BivPoly& g = gb.polys[i];
    for (std::size_t kk = 0; kk < st.n_i[i]; ++kk) {
      for (std::size_t j = 0; j < g.ycoeffs().size(); ++j) m(st.offsets[i] + kk, j + kk) = g.ycoeff(j);
    }
  }
  return m;
}

BivPoly psi(const Field& k, const BivPoly& f, std::size_t n) {
  if (f.ydeg() >= static_cast<std::int64_t>(n)) throw Error(ErrorCode::kDegreeTooHigh, "y-degree must be below n");
  if (n == 0 || f.is_zero()) return f;
  std::vector<Poly> v(n);
  v[0] = f.ycoeff(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) v[i + 1] = f.ycoeff(i);
  (void)k;
  return BivPoly(std::move(v));
}

DispGenPoly displacement_generators_lm(const Field& k, const DrlBasis& gb, const Staircase& st) {
  const std::size_t l = gb.polys.size();
  const std::size_t n = st.n;
  DispGenPoly gen{DisplacementOp::kSylvester, PolyMat(n, l), PolyMat(n, l)};
  std::size_t used = 0;
  for (std::size_t kk = 0; kk < l; ++kk) {
    used += st.n_i[kk];
    const std::size_t row = n - used;
    BivPoly h;
    const BivPoly last = psi(k, yshift(gb.polys[kk], st.n_i[kk] - 1), n);
    if (kk + 1 < l) h = bsub(k, gb.polys[kk + 1], last);
    else h = bneg(k, last);
    gen.g(row, kk) = Poly::one();
    for (std::size_t j = 0; j < n; ++j) gen.h(j, kk) = h.ycoeff(j);
  }
  return gen;
}

PolyMat reverse_rows(const PolyMat& m) {
  PolyMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(m.rows() - 1 - i, j) = m(i, j);
  return r;
}

LexBasis extract_lex(const PolyMat& b) {
  LexBasis lex;
  Degree best;
  for (std::size_t i = 0; i < b.rows() && i < b.cols(); ++i) {
    const Degree d = b(i, i).degree();
    if (!lex.polys.empty() && d >= best) continue;
    std::vector<Poly> row(i + 1);
    for (std::size_t j = 0; j <= i; ++j) row[j] = b(i, j);
    lex.polys.emplace_back(std::move(row));
    best = d;
    if (d == 0) {
      lex.complete = true;
      break;
    }
  }
  return lex;
}

std::int64_t lex_standard_monomials(const LexBasis& lex) {
  std::int64_t count = 0;
  for (std::size_t s = 0; s + 1 < lex.polys.size(); ++s) {
    const std::int64_t dy = lex.polys[s + 1].ydeg().value() - lex.polys[s].ydeg().value();
    count += dy * lex.polys[s].ycoeffs().back().degree().value();
  }
  return count;
}

ChangeOrderOutcome change_order(const Field& k, const DrlBasis& gb, const ChangeOrderOptions& options, Rng& rng,
                                const InversionBackend& backend) {
  ChangeOrderResult res;
  res.staircase = build_staircase(gb);
  const std::size_t n = res.staircase.n;
  const DispGenPoly gen = displacement_generators_lm(k, gb, res.staircase);
  res.alpha = gen.alpha();
  const DegreeBounds bounds{res.staircase.D, res.staircase.D + static_cast<std::int64_t>(n), true};
  const std::uint64_t s_size =
      options.s_size.value_or(recommended_sample_size(n, bounds.delta(), static_cast<std::size_t>(bounds.det)));
  std::size_t m = std::clamp<std::size_t>(options.m_hint.value_or(2), 1, n);
  while (true) {
    HnfSubOutcome r = hermite_submatrix(k, gen, IndexTuple::leading(m, n), bounds, s_size, rng, backend);
    if (std::holds_alternative<Fail>(r)) return Fail{};
    if (auto* s = std::get_if<Singular>(&r)) return std::move(*s);
    HnfSubResult& h = std::get<HnfSubResult>(r);
    LexBasis lex = extract_lex(h.b);
    if (lex.complete || m == n) {
      lex.reduced = h.cert == Cert::kTrue;
      res.lex = std::move(lex);
      res.m = m;
      res.branch = h.branch;
      res.cert = h.cert;
      return res;
    }
    m = std::min(2 * m, n);
    ++res.doublings;
  }
}

}  // namespace hnfsub
