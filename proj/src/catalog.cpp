#include <algorithm>
#include <random>

#include "gfan/error.hpp"
#include "gfan/hash.hpp"
#include "gfan/stability.hpp"

namespace gfan {

namespace {

// Submodule rad^k M: images of all paths of length >= k.
Subspaces radical_power(const Algebra& alg, const Representation& m, int k) {
  const auto& f = alg.field();
  Subspaces out(alg.vertex_count());
  for (int w = 0; w < alg.vertex_count(); ++w) out[w] = Matrix(m.dims[w], 0);
  for (std::size_t b = 0; b < alg.dim(); ++b) {
    if (static_cast<int>(alg.basis()[b].length()) < k) continue;
    int w = alg.target(b);
    if (!m.dims[w] || !m.dims[alg.source(b)]) continue;
    out[w] = Matrix::hstack(out[w], path_action(alg, m, b));
  }
  for (int w = 0; w < alg.vertex_count(); ++w) out[w] = column_basis(f, out[w]);
  return out;
}

class CatalogBuilder {
 public:
  CatalogBuilder(const Algebra& alg, const CatalogOptions& opt)
      : opt_(opt), twin_(alg.with_prime(opt.field)), opposite_(twin_.opposite()), rng_(opt.seed) {}

  ModuleCatalog build() {
    const int n = twin_.vertex_count();
    std::vector<Representation> seeds;
    for (int i = 0; i < n; ++i) {
      offer(simple(twin_, i), "simple");
      seeds.push_back(projective(twin_, i));
      seeds.push_back(injective(twin_, i));
      offer(seeds[seeds.size() - 2], "projective");
      offer(seeds.back(), "injective");
    }
    // Radical layers of projectives and injectives, even when those are
    // too large to keep themselves.
    for (const auto& s : seeds) {
      for (int k = 1;; ++k) {
        auto rad = radical_power(twin_, s, k);
        std::size_t d = 0;
        for (const auto& m : rad) d += m.cols();
        if (d == 0) break;
        offer(submodule(twin_, s, rad).module, "sub-quotient");
        offer(quotient(twin_, s, rad).module, "sub-quotient");
      }
    }
    // Auslander-Reiten orbits.
    const std::size_t before = members_.size();
    for (std::size_t i = 0; i < before && !full(); ++i) {
      Representation up = members_[i].module, down = members_[i].module;
      for (int step = 0; step < opt_.orbit_length; ++step) {
        if (!up.is_zero() && up.total_dim() <= 4 * opt_.dim_cap) {
          up = tau(twin_, up);
          offer(up, "tau-orbit");
        }
        if (!down.is_zero() && down.total_dim() <= 4 * opt_.dim_cap) {
          down = tau_inverse(twin_, opposite_, down);
          offer(down, "tau-orbit");
        }
      }
    }
    for (int k = 0; k < opt_.random_morphisms && !full() && !members_.empty(); ++k) {
      const auto& x = members_[rng_() % members_.size()].module;
      const auto& y = members_[rng_() % members_.size()].module;
      auto f = random_morphism(twin_, x, y, rng_);
      Representation ker = kernel(twin_, f, x).module;
      Representation cok = cokernel(twin_, f, y).module;
      Representation img = image(twin_, f, y).module;
      offer(ker, "random");
      offer(cok, "random");
      offer(img, "random");
    }
    ModuleCatalog out{twin_, std::move(members_), opt_.dim_cap, 0};
    std::uint64_t h = hash_combine(algebra_hash(twin_), opt_.dim_cap);
    for (const auto& m : out.members) {
      for (auto d : m.module.dims) h = hash_combine(h, d);
      for (const auto& mat : m.module.maps)
        for (auto x : mat.data()) h = hash_combine(h, x);
    }
    out.hash = h;
    return out;
  }

 private:
  bool full() const { return members_.size() >= opt_.max_members; }

  void offer(const Representation& m, const char* tag) {
    if (m.is_zero() || full()) return;
    if (m.total_dim() > 3 * opt_.dim_cap) return;
    for (auto& part : decompose_module(twin_, m, rng_)) {
      if (part.total_dim() > opt_.dim_cap || full()) continue;
      auto d = part.dimension_vector();
      bool known = std::any_of(members_.begin(), members_.end(), [&](const CatalogMember& c) {
        return c.module.dimension_vector() == d && is_isomorphic(twin_, c.module, part);
      });
      if (known) continue;
      auto subs = subdimvecs(twin_, part, opt_.dim_cap);
      members_.push_back({std::move(part), tag, std::move(subs)});
    }
  }

  CatalogOptions opt_;
  Algebra twin_;
  Algebra opposite_;
  std::mt19937_64 rng_;
  std::vector<CatalogMember> members_;
};

}  // namespace

ModuleCatalog build_catalog(const Algebra& alg, const CatalogOptions& opt) {
  if (opt.field != 2 && opt.field != 3) throw Error(ErrorCode::InvalidArgument, "catalog field must be 2 or 3");
  return CatalogBuilder(alg, opt).build();
}

}  // namespace gfan
