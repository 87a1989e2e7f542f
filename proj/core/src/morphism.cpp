#include "freecrit/morphism.hpp"

#include <deque>

#include "freecrit/errors.hpp"
#include "freecrit/linalg.hpp"

namespace freecrit {

AlgebraMorphism AlgebraMorphism::from_images(AlgebraPtr source, AlgebraPtr target,
                                             std::vector<std::pair<std::string, Matrix>> images) {
  const ArtinAlgebra& a = *source;
  const ArtinAlgebra& b = *target;
  if (!(a.field() == b.field())) throw FieldMismatch("morphism between algebras over different fields");
  std::vector<std::pair<Matrix, Matrix>> gens;
  for (const auto& [name, img] : images) {
    if (img.rows() != b.dim() || img.cols() != 1) throw DimensionMismatch("image of " + name + " has wrong shape");
    gens.emplace_back(a.parse(name), img);
  }
  // Products of generators spanning A, with their prescribed images.
  Matrix span_a = a.one(), span_b = b.one();
  std::deque<std::pair<Matrix, Matrix>> queue{{a.one(), b.one()}};
  while (!queue.empty() && span_a.cols() < a.dim()) {
    auto [va, vb] = queue.front();
    queue.pop_front();
    for (const auto& [ga, gb] : gens) {
      Matrix pa = a.mul(ga, va);
      Matrix next = Matrix::hstack({span_a, pa});
      if (rank(next) == span_a.cols()) continue;
      Matrix pb = b.mul(gb, vb);
      span_a = next;
      span_b = Matrix::hstack({span_b, pb});
      queue.emplace_back(pa, pb);
    }
  }
  if (span_a.cols() < a.dim()) throw NotWellDefined("the named elements do not generate the source algebra");
  Matrix map = span_b * *inverse(span_a);
  for (std::size_t g = 0; g < gens.size(); ++g)
    if (!(map * gens[g].first == gens[g].second))
      throw NotWellDefined("image of " + images[g].first + " conflicts with the relations of the source");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Matrix fi = map.col(i);
    if (i > 0 && !b.in_m(fi)) throw NotLocal("image of " + a.labels()[i] + " is a unit");
    for (std::size_t j = i; j < a.dim(); ++j)
      if (!(map * a.mult(i).col(j) == b.mul(fi, map.col(j))))
        throw NotWellDefined("not multiplicative on " + a.labels()[i] + "*" + a.labels()[j]);
  }
  return AlgebraMorphism(std::move(source), std::move(target), std::move(map), std::move(images));
}

AlgebraMorphism AlgebraMorphism::identity(AlgebraPtr algebra) {
  Matrix map = Matrix::identity(algebra->field(), algebra->dim());
  std::vector<std::pair<std::string, Matrix>> images;
  for (std::size_t i = 1; i < algebra->dim(); ++i) images.emplace_back(algebra->labels()[i], algebra->basis(i));
  return AlgebraMorphism(algebra, algebra, std::move(map), std::move(images));
}

Matrix AlgebraMorphism::kernel() const { return kernel_basis(map_); }

bool AlgebraMorphism::is_surjective() const { return rank(map_) == target_->dim(); }

Matrix AlgebraMorphism::mAB() const {
  std::vector<Matrix> gens;
  for (std::size_t i = 1; i < source_->dim(); ++i) gens.push_back(map_.col(i));
  return target_->ideal_span(gens);
}

std::size_t AlgebraMorphism::beta0_of_mAB() const { return minimal_generator_count(*target_, mAB()); }

std::size_t minimal_generator_count(const ArtinAlgebra& alg, const Matrix& span) {
  Matrix basis = span.cols() ? image_basis(span) : span;
  return basis.cols() - alg.m_times(basis).cols();
}

Matrix minimal_generators(const ArtinAlgebra& alg, const Matrix& span) {
  Matrix basis = span.cols() ? image_basis(span) : span;
  Matrix mn = alg.m_times(basis);
  // Extend a basis of mN by columns of the spanning set; the added ones lift N/mN.
  auto piv = rref(Matrix::hstack({mn, basis})).pivots;
  std::vector<std::size_t> keep;
  for (auto c : piv)
    if (c >= mn.cols()) keep.push_back(c - mn.cols());
  return basis.select_columns(keep);
}

}  // namespace freecrit
