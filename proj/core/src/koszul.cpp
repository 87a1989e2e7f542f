#include "freecrit/koszul.hpp"

#include <algorithm>

#include "freecrit/errors.hpp"

namespace freecrit {

namespace {

void subsets_rec(std::size_t c, std::size_t need, std::size_t start, std::vector<std::size_t>& cur,
                 std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == need) {
    out.push_back(cur);
    return;
  }
  for (std::size_t j = start; j < c; ++j) {
    cur.push_back(j);
    subsets_rec(c, need, j + 1, cur, out);
    cur.pop_back();
  }
}

std::string subset_label(const std::vector<std::size_t>& s) {
  if (s.empty()) return "1";
  std::string out;
  for (auto j : s) out += "e" + std::to_string(j + 1);
  return out;
}

int element_degree(const ArtinAlgebra& alg, const Matrix& a) {
  for (std::size_t l = 0; l < alg.dim(); ++l)
    if (!a.entry_is_zero(l, 0)) return alg.grading()->degrees[l];
  return 0;
}

}  // namespace

std::vector<std::vector<std::size_t>> monotone_subsets(std::size_t c, std::size_t i) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  if (i <= c) subsets_rec(c, i, 0, cur, out);
  return out;
}

std::size_t subset_index(std::size_t c, const std::vector<std::size_t>& subset) {
  auto all = monotone_subsets(c, subset.size());
  auto it = std::find(all.begin(), all.end(), subset);
  if (it == all.end()) throw DimensionMismatch("not a monotone subset");
  return static_cast<std::size_t>(it - all.begin());
}

FreeComplex koszul(AlgebraPtr alg, const std::vector<Matrix>& x) {
  const std::size_t c = x.size();
  std::vector<std::size_t> ranks;
  std::vector<std::vector<std::string>> labels;
  std::vector<std::vector<std::vector<std::size_t>>> bases;
  for (std::size_t i = 0; i <= c; ++i) {
    bases.push_back(monotone_subsets(c, i));
    ranks.push_back(bases.back().size());
    labels.emplace_back();
    for (const auto& s : bases.back()) labels.back().push_back(subset_label(s));
  }
  std::vector<AMatrix> d;
  for (std::size_t i = 1; i <= c; ++i) {
    AMatrix m(alg, ranks[i - 1], ranks[i]);
    for (std::size_t col = 0; col < ranks[i]; ++col) {
      const auto& s = bases[i][col];
      for (std::size_t j = 0; j < s.size(); ++j) {
        std::vector<std::size_t> rest = s;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
        Matrix coeff = j % 2 ? -x[s[j]] : x[s[j]];
        m.set(subset_index(c, rest), col, coeff);
      }
    }
    d.push_back(std::move(m));
  }
  FreeComplex k(alg, ranks, std::move(d));
  k.set_labels(std::move(labels));
  if (alg->graded()) {
    std::vector<std::vector<int>> degrees;
    for (std::size_t i = 0; i <= c; ++i) {
      degrees.emplace_back();
      for (const auto& s : bases[i]) {
        int deg = 0;
        for (auto j : s) deg += element_degree(*alg, x[j]);
        degrees.back().push_back(deg);
      }
    }
    k.set_degrees(std::move(degrees));
  }
  return k;
}

Homotopy koszul_contraction(const FreeComplex& k, std::size_t c, std::size_t i) {
  const AlgebraPtr& alg = k.algebra();
  Homotopy h;
  for (std::size_t deg = 0; deg <= c; ++deg) {
    AMatrix m(alg, k.rank(deg + 1), k.rank(deg));
    auto basis = monotone_subsets(c, deg);
    for (std::size_t col = 0; col < basis.size(); ++col) {
      const auto& s = basis[col];
      if (std::find(s.begin(), s.end(), i) != s.end()) continue;
      std::size_t before = static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [&](std::size_t l) { return l < i; }));
      std::vector<std::size_t> bigger = s;
      bigger.insert(bigger.begin() + static_cast<std::ptrdiff_t>(before), i);
      Matrix one = alg->one();
      m.set(subset_index(c, bigger), col, before % 2 ? -one : one);
    }
    h.h.push_back(std::move(m));
  }
  return h;
}

}  // namespace freecrit
