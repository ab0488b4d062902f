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

#include "hnfsub/io.hpp"

#include <sstream>

#include "hnfsub/error.hpp"

namespace hnfsub {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& is) : is_(is) {}

  // Next line that is not a comment; blank lines are kept because they encode zero.
  std::string next(const char* what) {
    std::string line;
    while (std::getline(is_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty() && line[0] == '#') continue;
      return line;
    }
    throw Error(ErrorCode::kParse, std::string("unexpected end of input, expected ") + what);
  }

  // Next non-blank, non-comment line split into unsigned integers.
  std::vector<std::uint64_t> header(const char* what) {
    std::string line;
    do {
      line = next(what);
    } while (line.find_first_not_of(" \t") == std::string::npos);
    std::istringstream ss(line);
    std::vector<std::uint64_t> out;
    std::string tok;
    while (ss >> tok) {
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || tok[0] == '-') {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_no_) + ": bad integer '" + tok + "'");
      }
      out.push_back(v);
    }
    return out;
  }

  Poly poly(const Field& k) {
    const std::string line = next("a polynomial");
    try {
      return poly_from_text(k, line);
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no_) + ": " + e.what());
    }
  }

 private:
  std::istream& is_;
  std::size_t line_no_ = 0;
};

void expect_fields(const std::vector<std::uint64_t>& h, std::size_t count, const char* what) {
  if (h.size() != count) throw Error(ErrorCode::kParse, std::string("malformed ") + what + " header");
}

PolyMat read_entries(const Field& k, LineReader& r, std::size_t rows, std::size_t cols) {
  PolyMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = r.poly(k);
  return m;
}

void write_entries(std::ostream& os, const PolyMat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) os << to_text(m(i, j)) << '\n';
}

DispGenPoly read_generator_body(const Field& k, LineReader& r, std::size_t n, std::size_t alpha, std::uint64_t d) {
  DispGenPoly gen{DisplacementOp::kSylvester, read_entries(k, r, n, alpha), read_entries(k, r, n, alpha)};
  if (gen.degree() > static_cast<std::int64_t>(d)) {
    throw Error(ErrorCode::kParse, "generator degree exceeds the declared bound");
  }
  return gen;
}

}  // namespace

void write_polymat(std::ostream& os, const PolyMat& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  write_entries(os, m);
}

PolyMat read_polymat(const Field& k, std::istream& is) {
  LineReader r(is);
  const auto h = r.header("a matrix header");
  expect_fields(h, 2, "matrix");
  return read_entries(k, r, h[0], h[1]);
}

void write_generators(std::ostream& os, const DispGenPoly& gen) {
  const Degree d = gen.degree();
  os << gen.n() << ' ' << gen.alpha() << ' ' << (d.is_finite() ? d.value() : 0) << '\n';
  write_entries(os, gen.g);
  write_entries(os, gen.h);
}

DispGenPoly read_generators(const Field& k, std::istream& is) {
  LineReader r(is);
  const auto h = r.header("a generator header");
  expect_fields(h, 3, "generator");
  return read_generator_body(k, r, h[0], h[1], h[2]);
}

MatrixInput read_matrix_input(const Field& k, std::istream& is) {
  LineReader r(is);
  const auto h = r.header("a header");
  if (h.size() == 2) return read_entries(k, r, h[0], h[1]);
  if (h.size() == 3) return read_generator_body(k, r, h[0], h[1], h[2]);
  throw Error(ErrorCode::kParse, "header must hold 2 (matrix) or 3 (generators) integers");
}

void write_basis(std::ostream& os, std::uint64_t p, const std::vector<BivPoly>& polys) {
  os << p << ' ' << polys.size() << '\n';
  for (const BivPoly& f : polys) {
    os << f.ycoeffs().size() << '\n';
    for (const Poly& c : f.ycoeffs()) os << to_text(c) << '\n';
  }
}

BasisFile read_basis(std::istream& is) {
  LineReader r(is);
  const auto h = r.header("a basis header");
  expect_fields(h, 2, "basis");
  BasisFile out;
  out.p = h[0];
  const Field k(out.p);
  for (std::uint64_t i = 0; i < h[1]; ++i) {
    const auto ny = r.header("a y-degree count");
    expect_fields(ny, 1, "polynomial");
    std::vector<Poly> ys;
    for (std::uint64_t t = 0; t < ny[0]; ++t) ys.push_back(r.poly(k));
    out.polys.emplace_back(std::move(ys));
  }
  return out;
}

}  // namespace hnfsub
