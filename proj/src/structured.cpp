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

#include "hnfsub/structured.hpp"

#include <optional>
#include <utility>

#include "hnfsub/error.hpp"

namespace hnfsub {

namespace {

struct FieldOps {
  using Mat = FieldMat;
  using Elem = Fp;
  const Field& k;
  Fp add(Fp a, Fp b) const { return k.add(a, b); }
  Fp sub(Fp a, Fp b) const { return k.sub(a, b); }
  Fp neg(Fp a) const { return k.neg(a); }
};

struct PolyOps {
  using Mat = PolyMat;
  using Elem = Poly;
  const Field& k;
  Poly add(const Poly& a, const Poly& b) const { return hnfsub::add(k, a, b); }
  Poly sub(const Poly& a, const Poly& b) const { return hnfsub::sub(k, a, b); }
  Poly neg(const Poly& a) const { return hnfsub::neg(k, a); }
};

template <class Ops>
typename Ops::Mat displace(const Ops& ops, const typename Ops::Mat& m, DisplacementOp op) {
  using Elem = typename Ops::Elem;
  if (m.rows() != m.cols()) throw Error(ErrorCode::kShapeMismatch, "displacement of a non-square matrix");
  const std::size_t n = m.rows();
  typename Ops::Mat d(n, n);
  const Elem zero{};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      switch (op) {
        case DisplacementOp::kSylvester:
          d(i, j) = ops.sub(i > 0 ? m(i - 1, j) : zero, m(i, (j + n - 1) % n));
          break;
        case DisplacementOp::kInverse:
          d(i, j) = ops.sub(m((i + 1) % n, j), j + 1 < n ? m(i, j + 1) : zero);
          break;
        case DisplacementOp::kTransposedInverse:
          d(i, j) = ops.sub(i + 1 < n ? m(i + 1, j) : zero, m(i, (j + 1) % n));
          break;
      }
    }
  }
  return d;
}

// Solves op(M) = D entrywise.
template <class Ops>
typename Ops::Mat undisplace(const Ops& ops, const typename Ops::Mat& d, DisplacementOp op) {
  const std::size_t n = d.rows();
  typename Ops::Mat m(n, n);
  if (n == 0) return m;
  switch (op) {
    case DisplacementOp::kSylvester:
      for (std::size_t j = 0; j < n; ++j) m(0, j) = ops.neg(d(0, (j + 1) % n));
      for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 0; j + 1 < n; ++j) m(i, j) = ops.sub(m(i - 1, j + 1), d(i, j + 1));
        m(i, n - 1) = ops.sub(m(i - 1, 0), d(i, 0));
      }
      break;
    case DisplacementOp::kInverse:
      for (std::size_t r = 0; r < n; ++r) m(r, n - 1) = d((r + n - 1) % n, n - 1);
      for (std::size_t j = n - 1; j-- > 0;) {
        for (std::size_t i = 0; i < n; ++i) m((i + 1) % n, j) = ops.add(d(i, j), m(i, j + 1));
      }
      break;
    case DisplacementOp::kTransposedInverse: {
      // Z0^T X - X Z1 = D  iff  Z1^T X^T - X^T Z0 = -D^T
      typename Ops::Mat nt(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) nt(i, j) = ops.neg(d(j, i));
      }
      return transpose(undisplace(ops, nt, DisplacementOp::kInverse));
    }
  }
  return m;
}

void require_generators(std::size_t gr, std::size_t gc, std::size_t hr, std::size_t hc) {
  if (gr != hr || gc != hc) throw Error(ErrorCode::kShapeMismatch, "generator shapes differ");
}

// Column op on v: col src += q * col dst (inverse of row dst -= q * row src).
void col_axpy(const Field& k, PolyMat& v, std::size_t src, std::size_t dst, const Poly& q) {
  for (std::size_t i = 0; i < v.rows(); ++i) {
    if (v(i, dst).is_zero()) continue;
    v(i, src) = add(k, v(i, src), mul(k, q, v(i, dst)));
  }
}

}  // namespace

const char* to_string(DisplacementOp op) noexcept {
  switch (op) {
    case DisplacementOp::kSylvester: return "sylvester";
    case DisplacementOp::kInverse: return "inverse";
    case DisplacementOp::kTransposedInverse: return "transposed-inverse";
  }
  return "unknown";
}

FieldMat apply_displacement(const Field& k, const FieldMat& m, DisplacementOp op) {
  return displace(FieldOps{k}, m, op);
}

PolyMat apply_displacement(const Field& k, const PolyMat& m, DisplacementOp op) {
  return displace(PolyOps{k}, m, op);
}

DispGenField compress(const Field& k, const FieldMat& d, DisplacementOp op) {
  RankFactorization f = rank_factorize(k, d);
  return DispGenField{op, std::move(f.left), transpose(f.right)};
}

DispGenPoly compress(const Field& k, const PolyMat& d, DisplacementOp op) {
  if (!d.is_square()) throw Error(ErrorCode::kShapeMismatch, "compress needs a square matrix");
  const std::size_t n = d.rows();
  // Echelon form of D^T with D^T = V [E; 0]; then D = E^T V_{*, :r}^T.
  PolyMat a = transpose(d);
  PolyMat v = PolyMat::identity(n);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    while (true) {
      std::optional<std::size_t> p;
      for (std::size_t i = r; i < n; ++i) {
        if (a(i, c).is_zero()) continue;
        if (!p || a(i, c).degree() < a(*p, c).degree()) p = i;
      }
      if (!p) break;
      bool done = true;
      for (std::size_t i = r; i < n; ++i) {
        if (i == *p || a(i, c).is_zero()) continue;
        const Poly q = quo(k, a(i, c), a(*p, c));
        for (std::size_t j = 0; j < n; ++j) {
          if (!a(*p, j).is_zero()) a(i, j) = sub(k, a(i, j), mul(k, q, a(*p, j)));
        }
        col_axpy(k, v, *p, i, q);
        if (!a(i, c).is_zero()) done = false;
      }
      if (done) {
        if (*p != r) {
          for (std::size_t j = 0; j < n; ++j) {
            std::swap(a(r, j), a(*p, j));
            std::swap(v(j, r), v(j, *p));
          }
        }
        ++r;
        break;
      }
    }
  }
  DispGenPoly gen{op, PolyMat(n, r), PolyMat(n, r)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < r; ++t) {
      gen.g(i, t) = a(t, i);
      gen.h(i, t) = v(i, t);
    }
  }
  return gen;
}

FieldMat reconstruct(const Field& k, const DispGenField& gen) {
  require_generators(gen.g.rows(), gen.g.cols(), gen.h.rows(), gen.h.cols());
  return undisplace(FieldOps{k}, mul(k, gen.g, transpose(gen.h)), gen.op);
}

PolyMat reconstruct(const Field& k, const DispGenPoly& gen) {
  require_generators(gen.g.rows(), gen.g.cols(), gen.h.rows(), gen.h.cols());
  return undisplace(PolyOps{k}, mul(k, gen.g, transpose(gen.h)), gen.op);
}

DispGenField eval_at(const Field& k, const DispGenPoly& gen, Fp point) {
  return DispGenField{gen.op, eval_at(k, gen.g, point), eval_at(k, gen.h, point)};
}

InversionOutcome DenseInversion::invert(const Field& k, const DispGenField& gen, std::uint64_t,
                                        Rng&) const {
  if (gen.op != DisplacementOp::kSylvester) {
    throw Error(ErrorCode::kInvalidArgument, "inversion expects Sylvester generators");
  }
  const auto inv = inverse(k, reconstruct(k, gen));
  if (!inv) return InvSingular{};
  return DispGenField{DisplacementOp::kInverse, neg(k, mul(k, *inv, gen.g)),
                      mul(k, transpose(*inv), gen.h)};
}

const InversionBackend& default_inversion_backend() {
  static const DenseInversion backend;
  return backend;
}

InversionOutcome inv_structured(const Field& k, const DispGenField& gen, std::uint64_t s_size, Rng& rng,
                                const InversionBackend& backend) {
  return backend.invert(k, gen, s_size, rng);
}

FieldMat mul_inv_structured_dense(const Field& k, const DispGenField& gen, const FieldMat& y) {
  if (y.rows() != gen.n()) throw Error(ErrorCode::kShapeMismatch, "row count differs from generator size");
  return mul(k, reconstruct(k, gen), y);
}

DispGenField left_generators(const Field& k, const DispGenField& gen) {
  if (gen.op != DisplacementOp::kInverse) {
    throw Error(ErrorCode::kInvalidArgument, "left generators expect inverse-operator generators");
  }
  return DispGenField{DisplacementOp::kTransposedInverse, neg(k, gen.h), gen.g};
}

FieldMat mul_dense_inv_structured(const Field& k, const FieldMat& x, const DispGenField& gen) {
  if (x.cols() != gen.n()) throw Error(ErrorCode::kShapeMismatch, "column count differs from generator size");
  return transpose(mul_inv_structured_dense(k, left_generators(k, gen), transpose(x)));
}

}  // namespace hnfsub
