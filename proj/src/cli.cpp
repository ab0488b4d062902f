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

#include "hnfsub/cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "hnfsub/bivar.hpp"
#include "hnfsub/error.hpp"
#include "hnfsub/hnfcore.hpp"
#include "hnfsub/io.hpp"
#include "hnfsub/modsolve.hpp"
#include "hnfsub/polymat.hpp"
#include "hnfsub/structured.hpp"
#include "json.hpp"

namespace hnfsub {

namespace {

using Json = nlohmann::ordered_json;

// Ordered key/value report, rendered as "key: value" lines or as JSON.
class Report {
 public:
  template <class T>
  void add(const std::string& key, T&& value) {
    j_[key] = std::forward<T>(value);
  }

  void render(std::ostream& os, bool json) const {
    if (json) {
      os << j_.dump(2) << '\n';
      return;
    }
    for (const auto& [key, value] : j_.items()) os << key << ": " << text(value) << '\n';
  }

 private:
  static std::string text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (!v.is_array()) return v.dump();
    std::string s;
    for (const auto& e : v) {
      if (!s.empty()) s += ' ';
      s += text(e);
    }
    return s;
  }

  Json j_ = Json::object();
};

std::vector<std::uint64_t> values(const std::vector<Fp>& pts) {
  std::vector<std::uint64_t> v;
  v.reserve(pts.size());
  for (Fp a : pts) v.push_back(a.v);
  return v;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open input file '" + path + "'");
  return in;
}

void write_output(const std::string& path, const std::string& content) {
  std::ofstream os(path);
  if (!os) throw Error(ErrorCode::kParse, "cannot open output file '" + path + "'");
  os << content;
}

void add_matrix(Report& rep, const std::string& name, const PolyMat& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      rep.add(name + "[" + std::to_string(i) + "][" + std::to_string(j) + "]", to_text(b(i, j)));
}

std::int64_t degree_or_zero(Degree d) { return d.is_finite() ? d.value() : 0; }

}  // namespace

int cmd_hnf_submatrix(const JobConfig& cfg, std::ostream& out, std::ostream&) {
  const Field k(cfg.modulus);
  std::ifstream in = open_input(cfg.input);
  MatrixInput input = read_matrix_input(k, in);
  Report rep;
  rep.add("command", "hnf-submatrix");
  DispGenPoly gen;
  PolyMat m;
  if (auto* pm = std::get_if<PolyMat>(&input)) {
    if (!pm->is_square()) throw Error(ErrorCode::kShapeMismatch, "input matrix must be square");
    m = std::move(*pm);
    gen = compress(k, apply_displacement(k, m));
    rep.add("input", "matrix");
  } else {
    gen = std::move(std::get<DispGenPoly>(input));
    m = reconstruct(k, gen);
    rep.add("input", "generators");
  }
  const std::size_t n = gen.n();
  const IndexTuple j = cfg.indices.empty() ? IndexTuple::leading(cfg.m.value_or(1), n) : IndexTuple(cfg.indices, n);
  const std::int64_t dm = degree_or_zero(m.degree());

  DegreeBounds bounds;
  bounds.det_exact = cfg.exact_det;
  std::string det_source = "given";
  if (cfg.det_bound) {
    bounds.det = *cfg.det_bound;
  } else if (cfg.exact_det) {
    try {
      const PolyMat h = dense_hnf(k, m, false).h;
      for (std::size_t i = 0; i < n; ++i) bounds.det += h(i, i).degree().value();
      det_source = "dense";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSingularMatrix) throw;
      rep.add("status", "Singular");
      rep.add("singular_points", std::vector<std::uint64_t>{});
      rep.render(out, cfg.json);
      return kExitSingular;
    }
  } else {
    bounds.det = static_cast<std::int64_t>(n) * dm;
    det_source = "degree";
  }
  bounds.adj = cfg.adj_bound.value_or(static_cast<std::int64_t>(n > 0 ? n - 1 : 0) * dm);
  const std::uint64_t s_size =
      cfg.sample_size.value_or(recommended_sample_size(n, bounds.delta(), static_cast<std::size_t>(bounds.det)));

  rep.add("modulus", cfg.modulus);
  rep.add("seed", cfg.seed);
  rep.add("n", n);
  rep.add("alpha", gen.alpha());
  rep.add("m", j.size());
  rep.add("indices", j.indices());
  rep.add("det_bound", bounds.det);
  rep.add("det_bound_source", det_source);
  rep.add("det_exact", bounds.det_exact);
  rep.add("adj_bound", bounds.adj);
  rep.add("delta", bounds.delta());
  rep.add("sample_size", s_size);

  Rng rng(cfg.seed);
  HnfSubOutcome r = hermite_submatrix(k, gen, j, bounds, s_size, rng);
  if (std::holds_alternative<Fail>(r)) {
    rep.add("status", "Fail");
    rep.render(out, cfg.json);
    return kExitFail;
  }
  if (auto* s = std::get_if<Singular>(&r)) {
    rep.add("status", "Singular");
    rep.add("singular_points", values(s->points));
    rep.render(out, cfg.json);
    return kExitSingular;
  }
  const HnfSubResult& res = std::get<HnfSubResult>(r);
  rep.add("status", "Success");
  rep.add("branch", to_string(res.branch));
  rep.add("cert", to_string(res.cert));
  rep.add("mu", to_text(res.mu));
  rep.add("col_points", values(res.col_points));
  rep.add("row_points", values(res.row_points));
  add_matrix(rep, "B", res.b);
  if (cfg.verify) {
    const PolyMat h = dense_hnf(k, m, false).h;
    const bool match = submatrix(h, j.indices(), j.indices()) == res.b;
    rep.add("verify_match", match);
    rep.add("verify", match || res.cert == Cert::kUnknown ? "PASS" : "FAIL");
  }
  if (!cfg.out.empty()) {
    std::ostringstream os;
    write_polymat(os, res.b);
    write_output(cfg.out, os.str());
  }
  rep.render(out, cfg.json);
  return kExitOk;
}

int cmd_change_order(const JobConfig& cfg, std::ostream& out, std::ostream&) {
  std::ifstream in = open_input(cfg.input);
  const BasisFile file = read_basis(in);
  const Field k(file.p);
  const DrlBasis gb{file.polys};
  ChangeOrderOptions opt;
  opt.m_hint = cfg.m;
  opt.s_size = cfg.sample_size;
  Rng rng(cfg.seed);
  ChangeOrderOutcome r = change_order(k, gb, opt, rng);

  Report rep;
  rep.add("command", "change-order");
  rep.add("modulus", file.p);
  rep.add("seed", cfg.seed);
  rep.add("ell", gb.polys.size());
  if (std::holds_alternative<Fail>(r)) {
    rep.add("status", "Fail");
    rep.render(out, cfg.json);
    return kExitFail;
  }
  if (auto* s = std::get_if<Singular>(&r)) {
    rep.add("status", "Singular");
    rep.add("singular_points", values(s->points));
    rep.render(out, cfg.json);
    return kExitSingular;
  }
  const ChangeOrderResult& res = std::get<ChangeOrderResult>(r);
  rep.add("status", "Success");
  rep.add("staircase", res.staircase.n_i);
  rep.add("n", res.staircase.n);
  rep.add("D", res.staircase.D);
  rep.add("alpha", res.alpha);
  rep.add("m", res.m);
  rep.add("doublings", res.doublings);
  rep.add("branch", to_string(res.branch));
  rep.add("cert", to_string(res.cert));
  rep.add("lex_size", res.lex.polys.size());
  rep.add("lex_complete", res.lex.complete);
  rep.add("lex_reduced", res.lex.reduced);
  rep.add("standard_monomials", lex_standard_monomials(res.lex));
  for (std::size_t i = 0; i < res.lex.polys.size(); ++i) {
    const BivPoly& f = res.lex.polys[i];
    for (std::size_t t = 0; t < f.ycoeffs().size(); ++t) {
      rep.add("lex[" + std::to_string(i) + "][y^" + std::to_string(t) + "]", to_text(f.ycoeff(t)));
    }
  }
  if (cfg.verify) {
    bool in_ideal = true;
    for (const BivPoly& f : res.lex.polys) in_ideal = in_ideal && drl_normal_form(k, f, gb).is_zero();
    const bool count_ok = lex_standard_monomials(res.lex) == res.staircase.D;
    rep.add("verify_membership", in_ideal);
    rep.add("verify_count", count_ok);
    rep.add("verify", in_ideal && count_ok && res.lex.complete ? "PASS" : "FAIL");
  }
  if (!cfg.out.empty()) {
    std::ostringstream os;
    write_basis(os, file.p, res.lex.polys);
    write_output(cfg.out, os.str());
  }
  rep.render(out, cfg.json);
  return kExitOk;
}

int cmd_bench(const JobConfig& cfg, std::ostream& out, std::ostream&) {
  using Clock = std::chrono::steady_clock;
  const Field k(cfg.modulus);
  Rng rng(cfg.seed);
  Json rows = Json::array();
  if (!cfg.json) out << "n alpha d structured_ms dense_ms status\n";
  for (std::size_t n : cfg.bench_n) {
    Rng cell = rng.fork();
    const DispGenPoly gen{DisplacementOp::kSylvester, random_polymat(k, n, cfg.bench_alpha, cfg.bench_d, cell),
                          random_polymat(k, n, cfg.bench_alpha, cfg.bench_d, cell)};
    const PolyMat m = reconstruct(k, gen);
    const std::int64_t dm = degree_or_zero(m.degree());
    const DegreeBounds bounds{static_cast<std::int64_t>(n) * dm,
                              static_cast<std::int64_t>(n > 0 ? n - 1 : 0) * dm, false};
    const std::uint64_t s_size = cfg.sample_size.value_or(
        recommended_sample_size(n, bounds.delta(), static_cast<std::size_t>(bounds.det)));

    std::string status = "OK";
    auto t0 = Clock::now();
    const HnfSubOutcome r = hermite_submatrix(k, gen, IndexTuple::leading(1, n), bounds, s_size, cell);
    const double structured_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (std::holds_alternative<Singular>(r)) status = "SKIP";
    if (std::holds_alternative<Fail>(r)) status = "FAIL";
    double dense_ms = 0;
    if (status == "OK") {
      t0 = Clock::now();
      (void)dense_hnf(k, m, false);
      dense_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    }
    if (cfg.json) {
      rows.push_back(Json{{"n", n}, {"alpha", cfg.bench_alpha}, {"d", cfg.bench_d},
                          {"structured_ms", structured_ms}, {"dense_ms", dense_ms}, {"status", status}});
    } else {
      out << n << ' ' << cfg.bench_alpha << ' ' << cfg.bench_d << ' ' << structured_ms << ' ' << dense_ms << ' '
          << status << '\n';
    }
  }
  if (cfg.json) out << rows.dump(2) << '\n';
  return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hermite normal form submatrices of structured polynomial matrices"};
  app.require_subcommand(1);
  JobConfig cfg;
  std::optional<std::size_t> m;
  std::optional<std::int64_t> det_bound, adj_bound;
  std::optional<std::uint64_t> sample_size;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--modulus", cfg.modulus, "Prime modulus")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    sub->add_option("--sample-size", sample_size, "Size of the sample set S = {0, ..., s - 1}");
    sub->add_option("--out", cfg.out, "Write the result to this file");
    sub->add_flag("--verify", cfg.verify, "Compare against dense oracles");
    sub->add_flag("--json", cfg.json, "Print the report as JSON");
  };

  CLI::App* hnf = app.add_subcommand("hnf-submatrix", "Leading HNF submatrix of a matrix or generator file");
  common(hnf);
  hnf->add_option("input", cfg.input, "Matrix or generator file")->required();
  auto* m_opt = hnf->add_option("--m", m, "Use J = (0, ..., m - 1)");
  hnf->add_option("--indices", cfg.indices, "Index tuple J, starting at 0")->excludes(m_opt);
  hnf->add_option("--det-bound", det_bound, "Bound D on deg det M");
  hnf->add_option("--adj-bound", adj_bound, "Bound Da on deg adj M");
  hnf->add_flag("--exact-det", cfg.exact_det, "D equals deg det M");

  CLI::App* co = app.add_subcommand("change-order", "DRL to lex change of order for a bivariate ideal");
  common(co);
  co->add_option("input", cfg.input, "Basis file")->required();
  co->add_option("--m", m, "Initial number of leading columns");

  CLI::App* bench = app.add_subcommand("bench", "Time structured and dense paths over a grid");
  common(bench);
  bench->add_option("--n", cfg.bench_n, "Matrix sizes")->capture_default_str();
  bench->add_option("--alpha", cfg.bench_alpha, "Displacement rank")->capture_default_str();
  bench->add_option("--d", cfg.bench_d, "Generator degree")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }
  cfg.m = m;
  cfg.det_bound = det_bound;
  cfg.adj_bound = adj_bound;
  cfg.sample_size = sample_size;
  try {
    if (hnf->parsed()) {
      cfg.command = "hnf-submatrix";
      return cmd_hnf_submatrix(cfg, out, err);
    }
    if (co->parsed()) {
      cfg.command = "change-order";
      return cmd_change_order(cfg, out, err);
    }
    cfg.command = "bench";
    return cmd_bench(cfg, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace hnfsub
