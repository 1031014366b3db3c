#include "nakajima/pipeline.hpp"

#include <sstream>
#include <stdexcept>

#include "nakajima/parallel.hpp"

namespace nakajima {

namespace {

std::string dims_line(const std::string& stage, const std::string& body) { return stage + ": " + body; }

}  // namespace

PipelineResult quiver_to_adelic(const QuiverData& d, const PipelineOptions& opt) {
  if (opt.max_k < 0 || opt.max_l < 0) throw std::invalid_argument("pipeline bounds must be nonnegative");
  PipelineResult res;
  d.validate();
  GenericityResult gen = is_generic(d.tau);
  if (!gen.generic) {
    std::ostringstream os;
    os << "tau is not generic: chi_" << gen.j << " of window [" << gen.a << "," << gen.b << "] vanishes";
    throw std::invalid_argument(os.str());
  }
  StabilityResult st = is_stable(d);
  if (!st.stable)
    throw std::invalid_argument("quiver data is not stable: B-stable closure of im I has dimension " +
                                std::to_string(st.closure.dim()) + " < dim V = " + std::to_string(d.n()));
  MonadData M = build_monad(d);
  if (!monad_identity_holds(M)) throw std::runtime_error("monad: b a != 0");
  res.log.push_back(dims_line("monad", "n=" + std::to_string(d.n()) + " r=" + std::to_string(d.r()) + " b.a=0"));

  TrivializationPair T = build_trivialization(M);
  if (!compose(M.b, T.Phi).is_zero() || !compose(T.Psi, M.a).is_zero())
    throw std::runtime_error("trivialization: b Phi or Psi a is nonzero");
  Poly p = T.P_prime.at_z1();
  res.log.push_back(dims_line("trivialization", "P'(x,1) = " + p.to_string()));

  int bound_y = opt.bound_y < 0 ? opt.max_l : opt.bound_y;
  FatFrame F = make_frame(M.ctx, d.dimsW, p, bound_y);
  int m = d.m;
  GroupAlgElem one = GroupAlgElem::one(m);

  std::vector<std::pair<int, int>> bidegs;
  for (int k = 0; k <= opt.max_k; ++k)
    for (int l = 0; l <= opt.max_l; ++l) bidegs.push_back({k, l});
  std::vector<std::vector<Vec>> images(bidegs.size());
  std::vector<long> kernel_dims(bidegs.size());
  parallel_for(bidegs.size(), opt.jobs, [&](size_t i) {
    auto [k, l] = bidegs[i];
    Matrix b = M.b.evaluate(k, l), psi = T.Psi.evaluate(k, l);
    Subspace ker = b.rows() ? kernel_space(b) : Subspace::full(b.cols());
    kernel_dims[i] = static_cast<long>(ker.dim());
    PieceBasis W = piece_basis(T.Psi.dst, k, l, m);
    for (const auto& v : ker.basis()) {
      Vec img = psi.apply(v), out = zero_vec(F.dim());
      bool fits = true;
      for (size_t j = 0; j < img.size() && fits; ++j) {
        if (img[j].is_zero()) continue;
        const auto& it = W.items[j];
        // z = w = 1: w_t (x) x^a z^b y^c w^d -> w_t (x) x^a y^c.
        fits = F.add_term(out, it.gen, it.mono[0], it.mono[2], one, img[j]);
      }
      if (fits) images[i].push_back(std::move(out));
    }
  });
  std::vector<Vec> all;
  long total_kernel = 0;
  for (size_t i = 0; i < images.size(); ++i) {
    total_kernel += kernel_dims[i];
    all.insert(all.end(), images[i].begin(), images[i].end());
  }
  Subspace raw = Subspace::span(F.dim(), all);
  Subspace N = generated_submodule(F, all);
  res.raw_span_closed = raw == N;
  res.fat = FatModuleModel{F, d.dimsW, N};
  res.log.push_back(dims_line("fat module", "sum dim ker b = " + std::to_string(total_kernel) +
                                                ", frame " + std::to_string(F.dim()) + ", span " +
                                                std::to_string(raw.dim()) + ", submodule " + std::to_string(N.dim())));

  res.point = de_rham(res.fat);
  res.log.push_back(dims_line("de rham", "dim U = " + std::to_string(res.point.U.dim()) + " in model of dim " +
                                             std::to_string(res.point.model().dim())));

  res.primary = is_primary_decomposable(res.point);
  res.diff_matches = diff(res.point, bound_y).N2 == N;
  res.symb = symbol(res.fat);
  res.dim_ok = static_cast<long>(res.point.U.dim()) == static_cast<long>(std::max(p.degree(), 0)) * d.r();
  std::ostringstream os;
  os << "primary " << res.primary.ok() << ", Diff(U) = N " << res.diff_matches << ", symbol = W_0 "
     << res.symb.is_base_point << " (stable from y-degree " << res.symb.stable_at << "), dim U = deg p * r "
     << res.dim_ok;
  res.log.push_back(dims_line("checks", os.str()));
  return res;
}

}  // namespace nakajima
