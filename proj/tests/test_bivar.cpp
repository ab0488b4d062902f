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

#include <set>

#include "doctest.h"
#include "error_code.hpp"
#include "hnfsub/bivar.hpp"
#include "hnfsub/hnfcore.hpp"
#include "oracles.hpp"

using namespace hnfsub;
using namespace hnfsub::testing;

namespace {

const Field k(2147483647);

Poly P(std::initializer_list<std::int64_t> c) {
  const std::vector<std::int64_t> v(c);
  return Poly::from_ints(k, v);
}

const std::vector<Monomial> kStaircaseLms{{0, 7}, {5, 4}, {8, 3}, {10, 0}};

BivPoly biv_mul(const BivPoly& a, const BivPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Poly> c(a.ycoeffs().size() + b.ycoeffs().size() - 1);
  for (std::size_t i = 0; i < a.ycoeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.ycoeffs().size(); ++j) {
      c[i + j] = add(k, c[i + j], schoolbook_mul(k, a.ycoeff(i), b.ycoeff(j)));
    }
  }
  return BivPoly(std::move(c));
}

BivPoly biv_add(const BivPoly& a, const BivPoly& b) {
  std::vector<Poly> c(std::max(a.ycoeffs().size(), b.ycoeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = add(k, a.ycoeff(i), b.ycoeff(i));
  return BivPoly(std::move(c));
}

std::vector<std::pair<Fp, Fp>> random_points(std::size_t count, bool distinct_x, Rng& rng) {
  std::vector<std::pair<Fp, Fp>> pts;
  std::set<std::pair<Fp, Fp>> seen;
  std::set<Fp> xs;
  while (pts.size() < count) {
    Fp x = rng.element(k);
    if (!distinct_x && !pts.empty() && rng.uniform(2) == 0) x = pts[rng.uniform(pts.size())].first;
    if (distinct_x && xs.count(x)) continue;
    const std::pair<Fp, Fp> pt{x, rng.element(k)};
    if (!seen.insert(pt).second) continue;
    xs.insert(x);
    pts.push_back(pt);
  }
  return pts;
}

ChangeOrderResult change(const DrlBasis& gb, Rng& rng) {
  const ChangeOrderOutcome out = change_order(k, gb, {}, rng);
  REQUIRE(std::holds_alternative<ChangeOrderResult>(out));
  return std::get<ChangeOrderResult>(out);
}

}  // namespace

TEST_CASE("DRL order") {
  CHECK(drl_less({0, 1}, {1, 0}));       // x < y
  CHECK(drl_less({2, 0}, {0, 3}));       // y^2 < x^3
  CHECK(drl_less({1, 1}, {2, 0}));       // xy < y^2
  CHECK_FALSE(drl_less({1, 1}, {1, 1}));
  const BivPoly f({P({1, 0, 0, 1}), P({0, 0, 1})});  // x^3 + 1 + x^2 y
  CHECK(drl_leading_monomial(f) == Monomial{1, 2});
  CHECK(error_code([] { drl_leading_monomial(BivPoly()); }) == ErrorCode::kZeroPolynomial);
  CHECK(f.xdeg() == 3);
  CHECK(f.ydeg() == 1);
  CHECK(f.tdeg() == 3);
  CHECK(f.term(1, 2).v == 1);
}

TEST_CASE("normal forms against a point-ideal basis") {
  Rng rng(1);
  const auto pts = random_points(6, false, rng);
  const DrlBasis gb = point_ideal_drl_basis(k, pts);
  for (const BivPoly& g : gb.polys) CHECK(vanishes_on(k, g, pts));
  for (int t = 0; t < 5; ++t) {
    BivPoly member;
    for (const BivPoly& g : gb.polys) {
      member = biv_add(member, biv_mul(g, BivPoly({random_polymat(k, 1, 1, 2, rng)(0, 0), P({3})})));
    }
    CHECK(drl_normal_form(k, member, gb).is_zero());
    const BivPoly outside = biv_add(member, BivPoly({P({1})}));
    CHECK_FALSE(drl_normal_form(k, outside, gb).is_zero());
  }
}

TEST_CASE("staircase with leading monomials x^7, x^4 y^5, x^3 y^8, y^10") {
  Rng rng(2);
  const Staircase full = build_staircase(random_staircase_basis(k, kStaircaseLms, rng, true));
  CHECK(full.n_i == std::vector<std::size_t>{5, 3, 2, 2});
  CHECK(full.n == 12);
  CHECK(full.D == 53);
  CHECK(full.offsets == std::vector<std::size_t>{0, 5, 8, 10});
  const Staircase thin = build_staircase(random_staircase_basis(k, kStaircaseLms, rng, false));
  CHECK(thin.n_i == std::vector<std::size_t>{5, 3, 2, 1});
  CHECK(thin.D == 53);
}

TEST_CASE("invalid staircases") {
  Rng rng(3);
  auto code = [&](std::vector<Monomial> lms) {
    return error_code([&] { build_staircase(random_staircase_basis(k, lms, rng, true)); });
  };
  CHECK(code({{0, 3}}) == ErrorCode::kNotMinimalBasis);
  CHECK(code({{1, 3}, {2, 0}}) == ErrorCode::kNotMinimalBasis);
  CHECK(code({{0, 3}, {2, 1}}) == ErrorCode::kNotMinimalBasis);
  CHECK(code({{0, 3}, {1, 3}, {2, 0}}) == ErrorCode::kNotMinimalBasis);
  CHECK_FALSE(code({{0, 3}, {1, 1}, {2, 0}}).has_value());
}

TEST_CASE("matrix and generators") {
  Rng rng(4);
  for (bool full : {true, false}) {
    const DrlBasis gb = random_staircase_basis(k, kStaircaseLms, rng, full);
    const Staircase st = build_staircase(gb);
    const PolyMat m = build_matrix(gb, st);
    Shift s(st.n);
    for (std::size_t i = 0; i < st.n; ++i) s[i] = static_cast<std::int64_t>(i);
    CHECK(is_weak_popov(m, s));
    CHECK(det_degree_reduced(k, m, s) == st.D);
    const PolyMat lm = reverse_rows(m);
    CHECK(lm(0, 0) == m(st.n - 1, 0));
    const DispGenPoly gen = displacement_generators_lm(k, gb, st);
    CHECK(gen.alpha() == gb.polys.size());
    CHECK(apply_displacement(k, lm) == mul(k, gen.g, transpose(gen.h)));
    CHECK(reconstruct(k, gen) == lm);
  }
}

TEST_CASE("psi is multiplication by y modulo y^n - 1") {
  const BivPoly f({P({1}), P({0, 1}), P({2})});
  const BivPoly g = psi(k, f, 3);
  CHECK(g == BivPoly({P({2}), P({1}), P({0, 1})}));
  CHECK(psi(k, f, 4) == BivPoly({Poly(), P({1}), P({0, 1}), P({2})}));
  CHECK(error_code([&] { psi(k, f, 2); }) == ErrorCode::kDegreeTooHigh);
}

TEST_CASE("lex extraction") {
  // HNF rows on (1, y, y^2) with diagonal degrees 3, 2, 0
  PolyMat b(3, 3);
  b(0, 0) = P({0, -1, 0, 1});
  b(1, 0) = P({0, 1});
  b(1, 1) = P({0, 0, 1});
  b(2, 0) = P({1});
  b(2, 1) = P({1});
  b(2, 2) = P({1});
  const LexBasis lex = extract_lex(b);
  REQUIRE(lex.polys.size() == 3);
  CHECK(lex.complete);
  CHECK(lex.polys[1] == BivPoly({P({0, 1}), P({0, 0, 1})}));
  CHECK(lex_standard_monomials(lex) == 3 + 2);

  PolyMat c = b;
  c(2, 2) = P({0, 1});
  c(1, 1) = P({0, 1});
  const LexBasis partial = extract_lex(c);
  CHECK_FALSE(partial.complete);
}

TEST_CASE("change of order on shape-position point ideals") {
  Rng rng(5);
  for (std::size_t count : {1, 2, 3, 6, 10}) {
    const auto pts = random_points(count, true, rng);
    const ChangeOrderResult r = change(point_ideal_drl_basis(k, pts), rng);
    std::vector<Fp> xs, ys;
    for (const auto& [x, y] : pts) {
      xs.push_back(x);
      ys.push_back(y);
    }
    REQUIRE(r.lex.polys.size() == 2);
    CHECK(r.lex.complete);
    CHECK(r.lex.polys[0] == BivPoly({product_of_linears(k, xs)}));
    CHECK(r.lex.polys[1] == BivPoly({neg(k, lagrange(k, xs, ys)), P({1})}));
    CHECK(r.branch == Branch::kHrow);
    CHECK(r.staircase.D == static_cast<std::int64_t>(count));
  }
}

TEST_CASE("change of order on non-shape ideals") {
  Rng rng(6);
  for (int t = 0; t < 5; ++t) {
    const auto pts = random_points(4 + rng.uniform(6), false, rng);
    const ChangeOrderResult r = change(point_ideal_drl_basis(k, pts), rng);
    CHECK(r.lex.complete);
    for (const BivPoly& f : r.lex.polys) CHECK(vanishes_on(k, f, pts));
    CHECK(lex_standard_monomials(r.lex) == static_cast<std::int64_t>(pts.size()));
  }
  // (x^2, y^2): the lex basis is the DRL basis
  const DrlBasis mono{{BivPoly({P({0, 0, 1})}), BivPoly({Poly(), Poly(), P({1})})}};
  const ChangeOrderResult r = change(mono, rng);
  CHECK(lex_standard_monomials(r.lex) == 4);
  for (const BivPoly& f : r.lex.polys) CHECK(drl_normal_form(k, f, mono).is_zero());
}

TEST_CASE("change of order options") {
  Rng rng(7);
  const auto pts = random_points(5, true, rng);
  const DrlBasis gb = point_ideal_drl_basis(k, pts);
  ChangeOrderOptions opt;
  opt.m_hint = 1;
  const ChangeOrderOutcome out = change_order(k, gb, opt, rng);
  REQUIRE(std::holds_alternative<ChangeOrderResult>(out));
  CHECK(std::get<ChangeOrderResult>(out).m >= 1);
  opt.s_size = 2;
  CHECK(error_code([&] { change_order(k, gb, opt, rng); }) == ErrorCode::kTooFewPoints);
}
