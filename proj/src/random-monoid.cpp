#include "coact/random-monoid.hpp"

#include <algorithm>
#include <map>

#include "coact/constructions.hpp"

namespace coact {

namespace {

using Transf = std::vector<int>;

Transf compose_lr(const Transf& f, const Transf& g) {
  // left-to-right: x -> g(f(x)), matching right actions
  Transf out(f.size());
  for (size_t x = 0; x < f.size(); ++x) out[x] = g[f[x]];
  return out;
}

std::optional<FiniteMonoid> transformation_monoid(std::mt19937& rng,
                                                  int points, int num_gens,
                                                  size_t max_size) {
  std::uniform_int_distribution<int> pt(0, points - 1);
  std::vector<Transf> gens;
  for (int k = 0; k < num_gens; ++k) {
    Transf t(points);
    for (int& x : t) x = pt(rng);
    gens.push_back(std::move(t));
  }
  Transf id(points);
  for (int x = 0; x < points; ++x) id[x] = x;

  std::map<Transf, ElementId> index;
  std::vector<Transf> elems{id};
  index[id] = 0;
  for (size_t k = 0; k < elems.size(); ++k) {
    for (const Transf& g : gens) {
      Transf next = compose_lr(elems[k], g);
      if (!index.count(next)) {
        if (elems.size() >= max_size) return std::nullopt;
        index[next] = static_cast<ElementId>(elems.size());
        elems.push_back(next);
      }
    }
  }
  size_t n = elems.size();
  std::vector<ElementId> table(n * n);
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      table[a * n + b] = index.at(compose_lr(elems[a], elems[b]));
    }
  }
  return FiniteMonoid(n, std::move(table), 0);
}

}  // namespace

FiniteMonoid random_regular_monoid(std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, 9);
  switch (pick(rng)) {
    case 0: return u2_monoid();
    case 1: return cyclic_group(2);
    case 2: return cyclic_group(3);
    case 3: return direct_product(cyclic_group(2), cyclic_group(2));
    case 4: return direct_product(u2_monoid(), cyclic_group(2));
    case 5: return brandt(trivial_monoid(), 2, true).monoid;
    case 6: return brandt(cyclic_group(2), 1, true).monoid;
    case 7: return brandt(cyclic_group(2), 2, true).monoid;
    case 8: return brandt(cyclic_group(3), 2, true).monoid;
    default: return brandt(cyclic_group(3), 3, true).monoid;
  }
}

FiniteMonoid random_monoid(std::mt19937& rng, const RandomMonoidOptions& opt) {
  std::uniform_int_distribution<int> kind(0, opt.allow_catalog ? 4 : 3);
  for (int attempt = 0; attempt < 64; ++attempt) {
    int k = kind(rng);
    if (k == 4) {
      // catalog, filtered by the size bound
      FiniteMonoid m = random_regular_monoid(rng);
      if (m.size() <= opt.max_size) return m;
      continue;
    }
    std::uniform_int_distribution<int> pts(2, opt.max_points);
    std::uniform_int_distribution<int> gs(1, opt.max_gens);
    auto m = transformation_monoid(rng, pts(rng), gs(rng), opt.max_size);
    if (m) return std::move(*m);
  }
  return u2_monoid();
}

std::vector<ElementId> random_subsemigroup(std::mt19937& rng,
                                           const FiniteMonoid& m) {
  std::uniform_int_distribution<ElementId> el(
      0, static_cast<ElementId>(m.size()) - 1);
  std::uniform_int_distribution<int> count(1, 2);
  std::vector<uint8_t> in(m.size(), 0);
  std::vector<ElementId> members;
  int seeds = count(rng);
  for (int k = 0; k < seeds; ++k) {
    ElementId x = el(rng);
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  }
  // worklist closure: every pair (i, j) is handled once max(i, j) is reached
  for (size_t k = 0; k < members.size(); ++k) {
    for (size_t j = 0; j <= k; ++j) {
      for (ElementId p : {m.product(members[k], members[j]),
                          m.product(members[j], members[k])}) {
        if (!in[p]) {
          in[p] = 1;
          members.push_back(p);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

PairSet random_pairs(std::mt19937& rng, size_t carrier, int max_pairs) {
  std::uniform_int_distribution<int> count(0, max_pairs);
  std::uniform_int_distribution<ElementId> el(
      0, static_cast<ElementId>(carrier) - 1);
  PairSet out;
  int n = count(rng);
  for (int k = 0; k < n; ++k) out.add(el(rng), el(rng));
  return out;
}

}  // namespace coact
