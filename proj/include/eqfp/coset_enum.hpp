#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "eqfp/perm_group.hpp"

namespace eqfp {

/// Word over presentation generators: +g (1-based) for a generator,
/// -g for its inverse.
using Word = std::vector<int>;

struct Presentation {
  int num_generators = 0;
  std::vector<Word> relators;
};

struct ToddCoxeterResult {
  FiniteGroup group;                    // regular representation on the cosets
  std::vector<int> generator_elements;  // presentation generator -> element index
};

inline int evaluate_word(const FiniteGroup& g, const std::vector<int>& gen_elements,
                         const Word& w) {
  int v = 0;
  for (int letter : w) {
    if (letter == 0) throw std::invalid_argument("word letter 0");
    int e = gen_elements.at(std::abs(letter) - 1);
    v = g.mul(v, letter > 0 ? e : g.inv(e));
  }
  return v;
}

/// Coset enumeration over the trivial subgroup (HLT strategy with fill).
/// Returns the presented group in its regular permutation representation, or
/// nullopt once more than `coset_cap` cosets have been defined. A returned
/// group is always correct: the closed table is validated before converting.
inline std::optional<ToddCoxeterResult> todd_coxeter(const Presentation& pres,
                                                     int coset_cap) {
  if (coset_cap < 1) throw std::invalid_argument("coset_cap must be >= 1");
  const int ng = pres.num_generators;
  if (ng < 0) throw std::invalid_argument("negative generator count");
  for (const Word& w : pres.relators)
    for (int letter : w)
      if (letter == 0 || std::abs(letter) > ng)
        throw std::invalid_argument("relator letter out of range");

  if (ng == 0) return ToddCoxeterResult{FiniteGroup(), {}};

  const int ncols = 2 * ng;
  auto col = [](int letter) {
    return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
  };
  auto inv_col = [](int c) { return c ^ 1; };

  std::vector<std::vector<int>> tab;  // tab[c][col] = coset, 0 = undefined
  std::vector<int> parent;            // union-find for coincidences
  tab.push_back(std::vector<int>(ncols, 0));  // dummy index 0
  parent.push_back(0);
  auto new_coset = [&]() -> int {
    if (static_cast<int>(tab.size()) > coset_cap) return 0;
    tab.push_back(std::vector<int>(ncols, 0));
    parent.push_back(static_cast<int>(tab.size()) - 1);
    return static_cast<int>(tab.size()) - 1;
  };
  if (new_coset() == 0) return std::nullopt;  // coset 1

  auto rep = [&](int c) {
    while (parent[c] != c) {
      parent[c] = parent[parent[c]];
      c = parent[c];
    }
    return c;
  };

  std::vector<int> merge_queue;
  auto merge = [&](int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    merge_queue.push_back(b);
  };
  auto process_coincidences = [&]() {
    while (!merge_queue.empty()) {
      int gamma = merge_queue.back();
      merge_queue.pop_back();
      for (int x = 0; x < ncols; ++x) {
        int delta = tab[gamma][x];
        if (delta == 0) continue;
        tab[gamma][x] = 0;
        if (tab[delta][inv_col(x)] == gamma) tab[delta][inv_col(x)] = 0;
        int mu = rep(gamma), nu = rep(delta);
        if (tab[mu][x] != 0)
          merge(nu, tab[mu][x]);
        else if (tab[nu][inv_col(x)] != 0)
          merge(mu, tab[nu][inv_col(x)]);
        else {
          tab[mu][x] = nu;
          tab[nu][inv_col(x)] = mu;
        }
      }
    }
  };

  // Scan relator w at coset alpha, defining cosets where both scans stall.
  auto scan_and_fill = [&](int alpha, const Word& w) -> bool {
    int f = alpha, b = alpha;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && tab[f][col(w[i])] != 0) f = tab[f][col(w[i++])];
      if (i > j) {
        if (f != b) {
          merge(f, b);
          process_coincidences();
        }
        return true;
      }
      while (j >= i && tab[b][inv_col(col(w[j]))] != 0) b = tab[b][inv_col(col(w[j--]))];
      if (j < i) {
        merge(f, b);
        process_coincidences();
        return true;
      }
      if (j == i) {
        tab[f][col(w[i])] = b;
        tab[b][inv_col(col(w[i]))] = f;
        return true;
      }
      int n = new_coset();
      if (n == 0) return false;
      tab[f][col(w[i])] = n;
      tab[n][inv_col(col(w[i]))] = f;
      f = n;
      ++i;
    }
  };

  for (int alpha = 1; alpha < static_cast<int>(tab.size()); ++alpha) {
    if (rep(alpha) != alpha) continue;
    for (const Word& w : pres.relators) {
      if (w.empty()) continue;
      if (!scan_and_fill(alpha, w)) return std::nullopt;
      if (rep(alpha) != alpha) break;
    }
    if (rep(alpha) != alpha) continue;
    for (int x = 0; x < ncols; ++x) {
      if (tab[alpha][x] != 0) continue;
      int n = new_coset();
      if (n == 0) return std::nullopt;
      tab[alpha][x] = n;
      tab[n][inv_col(x)] = alpha;
    }
  }

  // Compress live cosets and build the generator permutations.
  std::vector<int> live;
  for (int c = 1; c < static_cast<int>(tab.size()); ++c)
    if (rep(c) == c) live.push_back(c);
  const int n = static_cast<int>(live.size());
  std::vector<int> number(tab.size(), -1);
  for (int i = 0; i < n; ++i) number[live[i]] = i;

  std::vector<Perm> gens(ng, Perm(n));
  for (int i = 0; i < n; ++i)
    for (int gidx = 0; gidx < ng; ++gidx) {
      int to = tab[live[i]][2 * gidx];
      if (to == 0 || number[rep(to)] < 0)
        throw std::logic_error("todd_coxeter: table not closed");
      gens[gidx][i] = number[rep(to)];
    }

  // Closed-table validation: every relator fixes every coset.
  for (const Word& w : pres.relators) {
    for (int i = 0; i < n; ++i) {
      int c = i;
      for (int letter : w) c = letter > 0 ? gens[letter - 1][c] : inverse(gens[-letter - 1])[c];
      if (c != i) throw std::logic_error("todd_coxeter: relator does not close");
    }
  }

  FiniteGroup grp(n == 0 ? 1 : n, gens);
  if (grp.order() != n)
    throw std::logic_error("todd_coxeter: cosets do not form a regular representation");
  ToddCoxeterResult res{std::move(grp), {}};
  for (int gidx = 0; gidx < ng; ++gidx)
    res.generator_elements.push_back(res.group.index_of(gens[gidx]));
  return res;
}

}  // namespace eqfp
