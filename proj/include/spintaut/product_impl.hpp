#pragma once

#include <algorithm>
#include <functional>

namespace spintaut {

template <class Sink>
void expand_structure(const GraphIndex& index, const Structure& s, const Decoration& alpha,
                      const Decoration& beta, bool exact, Sink&& sink) {
  const StableGraph& gamma = index.graph(s.gamma);
  const std::vector<int>& cap = index.dims(s.gamma);
  const int nv = gamma.num_vertices();
  Decoration dec = Decoration::empty(gamma);
  std::vector<int> vdeg(nv, 0);
  auto put_psi = [&](int h, int e) {
    dec.psi[h] += e;
    vdeg[gamma.vertex_of[h]] += e;
  };
  for (std::size_t x = 0; x < alpha.psi.size(); ++x)
    if (alpha.psi[x]) put_psi(s.a_half[x], alpha.psi[x]);
  for (std::size_t x = 0; x < beta.psi.size(); ++x)
    if (beta.psi[x]) put_psi(s.b_half[x], beta.psi[x]);
  for (int v = 0; v < nv; ++v)
    if (vdeg[v] > cap[v]) return;

  // κ factors pulled back as sums over the fiber
  struct KappaFactor {
    int degree;
    std::vector<int> fiber;
  };
  std::vector<KappaFactor> factors;
  auto collect = [&](const Decoration& d, const std::vector<int>& vmap) {
    for (std::size_t a = 0; a < d.kappa.size(); ++a) {
      if (d.kappa[a].empty()) continue;
      std::vector<int> fiber;
      for (int w = 0; w < nv; ++w)
        if (vmap[w] == static_cast<int>(a)) fiber.push_back(w);
      for (int m : d.kappa[a]) factors.push_back({m, fiber});
    }
  };
  collect(alpha, s.a_vertex);
  collect(beta, s.b_vertex);

  const std::size_t nk = factors.size();
  const std::size_t total = nk + s.excess.size();
  int sign = (s.excess.size() % 2 == 0) ? 1 : -1;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == total) {
      if (exact)
        for (int v = 0; v < nv; ++v)
          if (vdeg[v] != cap[v]) return;
      Decoration out = dec;
      for (auto& k : out.kappa) std::sort(k.begin(), k.end());
      sink(out, sign);
      return;
    }
    if (i < nk) {
      const auto& f = factors[i];
      for (int w : f.fiber) {
        if (vdeg[w] + f.degree > cap[w]) continue;
        vdeg[w] += f.degree;
        dec.kappa[w].push_back(f.degree);
        rec(i + 1);
        dec.kappa[w].pop_back();
        vdeg[w] -= f.degree;
      }
      return;
    }
    auto [h, hp] = s.excess[i - nk];
    for (int end : {h, hp}) {
      int w = gamma.vertex_of[end];
      if (vdeg[w] + 1 > cap[w]) continue;
      ++vdeg[w];
      ++dec.psi[end];
      rec(i + 1);
      --dec.psi[end];
      --vdeg[w];
    }
  };
  rec(0);
}

}  // namespace spintaut
