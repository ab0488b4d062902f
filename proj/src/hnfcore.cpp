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

#include "hnfsub/hnfcore.hpp"

#include <utility>

#include "hnfsub/error.hpp"

namespace hnfsub {

namespace {

void check_bounds(const DegreeBounds& bounds) {
  if (bounds.det < 0 || bounds.adj < 0) throw Error(ErrorCode::kInvalidArgument, "degree bounds must be non-negative");
}

// Reconstructs every entry of f from its residue modulo a and puts them
// over the least common denominator.
InverseSlice to_slice(const Field& k, const SolveSuccess& sol, const DegreeBounds& bounds) {
  const PolyMat& f = sol.f;
  std::vector<Fraction> fr;
  std::vector<Poly> dens;
  fr.reserve(f.rows() * f.cols());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      fr.push_back(rational_reconstruct(k, f(i, j), sol.a, bounds.adj, bounds.det));
      dens.push_back(fr.back().den);
    }
  }
  InverseSlice out{lcm_tree(k, dens), PolyMat(f.rows(), f.cols()), sol.points};
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      const Fraction& q = fr[i * f.cols() + j];
      out.s(i, j) = mul(k, q.num, exact_quo(k, out.mu, q.den));
    }
  }
  return out;
}

SliceOutcome from_solve(const Field& k, SolveOutcome&& r, const DegreeBounds& bounds) {
  if (std::holds_alternative<Fail>(r)) return Fail{};
  if (auto* s = std::get_if<Singular>(&r)) return std::move(*s);
  return to_slice(k, std::get<SolveSuccess>(r), bounds);
}

void check_index_tuple(const DispGenPoly& gen, const IndexTuple& j) {
  if (j.ambient() != gen.n()) throw Error(ErrorCode::kShapeMismatch, "index tuple does not match the matrix size");
  if (j.size() == 0) throw Error(ErrorCode::kInvalidArgument, "index tuple is empty");
}

// gcd(mu, r_0, ..., r_{n-1}) as a left fold with early exit.
bool coprime_with_row(const Field& k, const Poly& mu, const PolyMat& r, std::size_t row) {
  Poly g = mu;
  for (std::size_t t = 0; t < r.cols() && !g.is_one(); ++t) g = gcd(k, g, r(row, t));
  return g.is_one();
}

Cert certify(const PolyMat& b, const IndexTuple& j, const DegreeBounds& bounds) {
  return j.is_leading() || check_fills_space(b, j, bounds.det) ? Cert::kTrue : Cert::kUnknown;
}

}  // namespace

SliceOutcome inverse_cols(const Field& k, const DispGenPoly& gen, const IndexTuple& j, const DegreeBounds& bounds,
                          std::uint64_t s_size, Rng& rng, const InversionBackend& backend) {
  check_bounds(bounds);
  check_index_tuple(gen, j);
  PolyMat y(gen.n(), j.size());
  for (std::size_t t = 0; t < j.size(); ++t) y(j[t], t) = Poly::one();
  return from_solve(k, modular_right_solve(k, gen, y, bounds.delta(), s_size, rng, backend), bounds);
}

SliceOutcome inverse_rows(const Field& k, const DispGenPoly& gen, const IndexTuple& j, const DegreeBounds& bounds,
                          std::uint64_t s_size, Rng& rng, const InversionBackend& backend) {
  check_bounds(bounds);
  check_index_tuple(gen, j);
  PolyMat x(j.size(), gen.n());
  for (std::size_t t = 0; t < j.size(); ++t) x(t, j[t]) = Poly::one();
  return from_solve(k, modular_left_solve(k, gen, x, bounds.delta(), s_size, rng, backend), bounds);
}

const char* to_string(Branch b) noexcept {
  switch (b) {
    case Branch::kHcolHrow: return "HcolHrow";
    case Branch::kHcol: return "Hcol";
    case Branch::kHrow: return "Hrow";
    case Branch::kGeneral: return "General";
  }
  return "unknown";
}

const char* to_string(Cert c) noexcept { return c == Cert::kTrue ? "True" : "Unknown"; }

HnfSubOutcome hermite_submatrix(const Field& k, const DispGenPoly& gen, const IndexTuple& j,
                                const DegreeBounds& bounds, std::uint64_t s_size, Rng& rng,
                                const InversionBackend& backend) {
  check_index_tuple(gen, j);
  if (j[0] != 0) throw Error(ErrorCode::kInvalidArgument, "index tuple must start at 0");
  const std::size_t m = j.size();

  SliceOutcome cols = inverse_cols(k, gen, IndexTuple({0}, gen.n()), bounds, s_size, rng, backend);
  if (std::holds_alternative<Fail>(cols)) return Fail{};
  if (auto* s = std::get_if<Singular>(&cols)) return std::move(*s);
  InverseSlice& cs = std::get<InverseSlice>(cols);

  HnfSubResult res;
  res.col_points = std::move(cs.points);
  if (cs.mu.degree() == bounds.det) {
    const PolyMat cj = select_rows(cs.s, j.indices());
    res.mu = cs.mu;
    if (gcd(k, cs.mu, cs.s(0, 0)).is_one()) {
      res.b = relbas_onecol_hrow(k, cs.mu, cj);
      res.cert = Cert::kTrue;
      res.branch = Branch::kHcolHrow;
    } else {
      res.b = hnf_relbas(k, cs.mu, cj);
      res.cert = certify(res.b, j, bounds);
      res.branch = Branch::kHcol;
    }
    return res;
  }

  SliceOutcome rows = inverse_rows(k, gen, j, bounds, s_size, rng, backend);
  if (std::holds_alternative<Fail>(rows)) return Fail{};
  if (auto* s = std::get_if<Singular>(&rows)) return std::move(*s);
  InverseSlice& rs = std::get<InverseSlice>(rows);
  res.row_points = std::move(rs.points);
  res.mu = rs.mu;
  if (rs.mu.degree() == bounds.det && coprime_with_row(k, rs.mu, rs.s, 0)) {
    res.b = PolyMat::identity(m);
    res.b(0, 0) = rs.mu;
    const PolyMat row0 = select_rows(rs.s, std::vector<std::size_t>{0});
    for (std::size_t i = 1; i < m; ++i) {
      res.b(i, 0) = relbas_tworow(k, rs.mu, row0, select_rows(rs.s, std::vector<std::size_t>{i}));
    }
    res.cert = Cert::kTrue;
    res.branch = Branch::kHrow;
    return res;
  }
  res.b = hnf_relbas(k, rs.mu, rs.s);
  res.cert = certify(res.b, j, bounds);
  res.branch = Branch::kGeneral;
  return res;
}

bool check_fills_space(const PolyMat& b, const IndexTuple& j, std::int64_t det_degree) {
  std::int64_t sum = 0;
  for (std::size_t t = 0; t < j.size() && j[t] == t && t < b.rows(); ++t) {
    if (b(t, t).is_zero()) return false;
    sum += b(t, t).degree().value();
    if (sum == det_degree) return true;
  }
  return false;
}

}  // namespace hnfsub
