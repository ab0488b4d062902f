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

#include "hnfsub/modsolve.hpp"

#include <limits>
#include <utility>

#include "hnfsub/error.hpp"

namespace hnfsub {

namespace {

enum class Side { kRight, kLeft };

// Values of every entry of a at the tree points, indexed [entry][point].
std::vector<std::vector<Fp>> evaluate_entries(const PolyMat& a, const SubproductTree& tree) {
  std::vector<std::vector<Fp>> vals;
  vals.reserve(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) vals.push_back(tree.evaluate(a(i, j)));
  return vals;
}

FieldMat at_point(const std::vector<std::vector<Fp>>& vals, std::size_t rows, std::size_t cols,
                  std::size_t point) {
  FieldMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = vals[i * cols + j][point];
  return m;
}

using PointOutcome = std::variant<Fail, SingularAt, FieldMat>;

// Inverts M(a_i) from its generators and applies it to the evaluated right-hand side.
PointOutcome solve_at_point(const Field& k, std::size_t index, const DispGenField& gen, const FieldMat& rhs,
                            Side side, std::uint64_t s_size, Rng& rng, const InversionBackend& backend) {
  InversionOutcome inv = inv_structured(k, gen, s_size, rng, backend);
  if (std::holds_alternative<InvFail>(inv)) return Fail{};
  if (std::holds_alternative<InvSingular>(inv)) return SingularAt{index};
  const DispGenField& ginv = std::get<DispGenField>(inv);
  return side == Side::kRight ? mul_inv_structured_dense(k, ginv, rhs) : mul_dense_inv_structured(k, rhs, ginv);
}

PointSolveOutcome solve_with_points(const Field& k, const DispGenPoly& gen, const PolyMat& rhs,
                                    std::span<const Fp> points, std::uint64_t s_size, Rng& rng,
                                    const InversionBackend& backend, Side side) {
  if (gen.op != DisplacementOp::kSylvester) {
    throw Error(ErrorCode::kInvalidArgument, "solvers expect Sylvester generators");
  }
  if (gen.g.rows() != gen.h.rows() || gen.g.cols() != gen.h.cols()) {
    throw Error(ErrorCode::kShapeMismatch, "generator shapes differ");
  }
  const std::size_t n = gen.n();
  if ((side == Side::kRight ? rhs.rows() : rhs.cols()) != n) {
    throw Error(ErrorCode::kShapeMismatch, "right-hand side does not match the matrix size");
  }
  if (points.empty()) throw Error(ErrorCode::kInvalidArgument, "no points");
  const std::int64_t delta = static_cast<std::int64_t>(points.size());
  if (rhs.degree() >= delta) throw Error(ErrorCode::kDegreeTooHigh, "right-hand side degree must be below Delta");

  const SubproductTree tree(k, std::vector<Fp>(points.begin(), points.end()));
  const auto gv = evaluate_entries(gen.g, tree);
  const auto hv = evaluate_entries(gen.h, tree);
  const auto rv = evaluate_entries(rhs, tree);
  std::vector<Rng> forks;
  forks.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) forks.push_back(rng.fork());

  std::vector<std::vector<Fp>> out(rhs.rows() * rhs.cols(), std::vector<Fp>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    const DispGenField gi{DisplacementOp::kSylvester, at_point(gv, n, gen.alpha(), i),
                          at_point(hv, n, gen.alpha(), i)};
    PointOutcome r = solve_at_point(k, i, gi, at_point(rv, rhs.rows(), rhs.cols(), i), side, s_size, forks[i],
                                    backend);
    if (std::holds_alternative<Fail>(r)) return Fail{};
    if (auto* s = std::get_if<SingularAt>(&r)) return *s;
    const FieldMat& fi = std::get<FieldMat>(r);
    for (std::size_t a = 0; a < rhs.rows(); ++a)
      for (std::size_t b = 0; b < rhs.cols(); ++b) out[a * rhs.cols() + b][i] = fi(a, b);
  }
  PolyMat f(rhs.rows(), rhs.cols());
  for (std::size_t a = 0; a < rhs.rows(); ++a)
    for (std::size_t b = 0; b < rhs.cols(); ++b) f(a, b) = tree.interpolate(out[a * rhs.cols() + b]);
  return f;
}

SolveOutcome modular_solve(const Field& k, const DispGenPoly& gen, const PolyMat& rhs, std::size_t delta,
                           std::uint64_t s_size, Rng& rng, const InversionBackend& backend, Side side) {
  if (delta == 0) throw Error(ErrorCode::kInvalidArgument, "Delta must be positive");
  if (k.modulus() < delta) return Fail{};
  std::vector<Fp> points = sample_distinct_subset(k, s_size, delta, rng);
  PointSolveOutcome r = solve_with_points(k, gen, rhs, points, s_size, rng, backend, side);
  if (std::holds_alternative<Fail>(r)) return Fail{};
  if (auto* s = std::get_if<SingularAt>(&r)) {
    points.resize(s->index + 1);
    return Singular{std::move(points)};
  }
  return SolveSuccess{product_of_linears(k, points), std::move(std::get<PolyMat>(r)), std::move(points)};
}

}  // namespace

PointSolveOutcome right_solve_with_points(const Field& k, const DispGenPoly& gen, const PolyMat& y,
                                          std::span<const Fp> points, std::uint64_t s_size, Rng& rng,
                                          const InversionBackend& backend) {
  return solve_with_points(k, gen, y, points, s_size, rng, backend, Side::kRight);
}

PointSolveOutcome left_solve_with_points(const Field& k, const DispGenPoly& gen, const PolyMat& x,
                                         std::span<const Fp> points, std::uint64_t s_size, Rng& rng,
                                         const InversionBackend& backend) {
  return solve_with_points(k, gen, x, points, s_size, rng, backend, Side::kLeft);
}

SolveOutcome modular_right_solve(const Field& k, const DispGenPoly& gen, const PolyMat& y, std::size_t delta,
                                 std::uint64_t s_size, Rng& rng, const InversionBackend& backend) {
  return modular_solve(k, gen, y, delta, s_size, rng, backend, Side::kRight);
}

SolveOutcome modular_left_solve(const Field& k, const DispGenPoly& gen, const PolyMat& x, std::size_t delta,
                                std::uint64_t s_size, Rng& rng, const InversionBackend& backend) {
  return modular_solve(k, gen, x, delta, s_size, rng, backend, Side::kLeft);
}

std::uint64_t recommended_sample_size(std::size_t n, std::size_t delta, std::size_t det_bound) {
  __extension__ using u128 = unsigned __int128;
  const u128 a = static_cast<u128>(n) * (static_cast<u128>(n) + 1);
  const u128 b = static_cast<u128>(det_bound) * 2;
  const u128 s = static_cast<u128>(8) * delta * (a > b ? a : b);
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  return s > kMax ? kMax : static_cast<std::uint64_t>(s);
}

}  // namespace hnfsub
