#include "lcsoc/socle.hpp"

#include <atomic>
#include <thread>

#include "lcsoc/error.hpp"

namespace lcsoc {

int SocleReport::t_socle_total() const {
  int s = 0;
  for (const auto& c : cells) s += c.t_socle;
  return s;
}

int SocleReport::star_socle_total() const {
  int s = 0;
  for (const auto& c : cells) s += c.star_socle;
  return s;
}

namespace {

struct StackBlock {
  const PieceContext::Component* comp;
  int offset;
};

// Socle dimensions of the cokernel component at combined degree D: the
// kernel of the stacked multiplications into the quotients one step up,
// minus the image inside the component itself.
std::pair<int, int> socle_dims_at(PieceContext& ctx, PieceContext& prev, int D,
                                  const PieceContext::Component& comp, int im_rank) {
  const Ring& ring = ctx.f().ring();
  const Field& field = ring.field();
  const auto& mgens = ring.maximal_ideal_generators();
  const auto& weights = ctx.f().weights();
  const int n = ring.num_xvars();

  std::vector<StackBlock> blocks;
  int total = 0;
  for (const auto& g : mgens) {
    const auto& c = ctx.component(D + g.degree());
    blocks.push_back({&c, total});
    total += c.dim;
  }
  const int t_total = total;
  for (int i = 0; i < n; ++i) {
    const auto& c = prev.component(D + weights[i]);
    blocks.push_back({&c, total});
    total += c.dim;
  }

  RrefReducer t_red(field, t_total);
  RrefReducer star_red(field, total);
  const Scalar one = field.one();

  for (std::size_t a = 0; a < ctx.basis().size(); ++a) {
    if (comp.block_offset[a] < 0) continue;
    const auto& t_basis = ring.t_degree_basis(comp.block_tdeg[a]);
    const auto& alpha = ctx.basis()[a];
    for (const auto& mu : t_basis) {
      SparseVec stacked;
      std::size_t k = 0;
      for (const auto& g : mgens) {
        const StackBlock& blk = blocks[k++];
        int idx = blk.comp->block_offset[a] + ring.basis_index(mu * g);
        for (const auto& [j, val] : blk.comp->image.reduce({{idx, one}}))
          stacked.emplace_back(blk.offset + j, val);
      }
      std::size_t t_len = stacked.size();
      for (int i = 0; i < n; ++i) {
        const StackBlock& blk = blocks[k++];
        if (alpha.alpha[i] < 2) continue;
        InverseMonomial shifted{alpha.alpha};
        shifted.alpha[i] -= 1;
        auto it = std::lower_bound(prev.basis().begin(), prev.basis().end(), shifted);
        int a2 = static_cast<int>(it - prev.basis().begin());
        int idx = blk.comp->block_offset[a2] + ring.basis_index(mu);
        for (const auto& [j, val] : blk.comp->image.reduce({{idx, one}}))
          stacked.emplace_back(blk.offset + j, val);
      }
      star_red.add(stacked);
      stacked.erase(stacked.begin() + static_cast<std::ptrdiff_t>(t_len), stacked.end());
      t_red.add(stacked);
    }
  }

  int t_socle = comp.dim - t_red.rank() - im_rank;
  int star_socle = comp.dim - star_red.rank() - im_rank;
  return {t_socle, star_socle};
}

}  // namespace

SocleReport socle_report(const Hypersurface& f, int ell, const WindowPolicy& policy) {
  const Ring& ring = f.ring();
  SocleReport rep;
  rep.ell = ell;
  rep.free_rank = inverse_basis_size(ring.num_xvars(), ell);

  PieceContext ctx(f, ell);
  if (ctx.empty()) {
    rep.certified_zero_above = true;
    return rep;
  }
  PieceContext prev(f, ell - 1);

  int default_top = policy.default_top_override >= 0
                        ? policy.default_top_override
                        : (ell + f.p()) * f.max_coeff_degree() + 2 * ring.num_uvars();
  int zero_run = 0;
  int d = 0;
  for (;; ++d) {
    if (d > policy.hard_cap) break;
    if (d > default_top && zero_run >= 3) break;
    int D = ctx.d_min() + d;
    const auto& comp = ctx.component(D);
    if (comp.dim == 0) {
      rep.cells.push_back({d, 0, 0, 0});
      continue;
    }
    int im_rank = comp.image.rank();
    int coker = comp.dim - im_rank;
    if (coker == 0) {
      rep.cells.push_back({d, 0, 0, 0});
      ++zero_run;
      continue;
    }
    zero_run = 0;
    auto [t_socle, star_socle] = socle_dims_at(ctx, prev, D, comp, im_rank);
    rep.cells.push_back({d, coker, t_socle, star_socle});
  }
  rep.window_hi = d - 1;
  rep.certified_zero_above = zero_run >= 3;
  return rep;
}

std::vector<SocleReport> star_socle_table(const Hypersurface& f, int ell_lo, int ell_hi,
                                          int ell_step, const WindowPolicy& policy,
                                          int jobs) {
  if (ell_step < 1) throw UsageError("ell step must be positive");
  std::vector<int> ells;
  for (int ell = ell_lo; ell <= ell_hi; ell += ell_step) ells.push_back(ell);
  std::vector<SocleReport> out(ells.size());
  if (ells.empty()) return out;

  if (jobs <= 1) {
    for (std::size_t i = 0; i < ells.size(); ++i) out[i] = socle_report(f, ells[i], policy);
    return out;
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= ells.size()) return;
      out[i] = socle_report(f, ells[i], policy);
    }
  };
  std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(jobs), ells.size());
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace lcsoc
