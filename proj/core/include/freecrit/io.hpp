#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "freecrit/checkers.hpp"
#include "freecrit/monomial.hpp"
#include "freecrit/weyl.hpp"

namespace freecrit {

struct LoadedAlgebra {
  AlgebraPtr algebra;
  std::optional<GradedMonomialAlgebra> monomial;
};

/// Reads the JSON document formats. Documents may reference other documents
/// by path (relative to the referring file) or embed them inline. Algebras
/// with identical documents are shared, so a complex and a morphism read
/// from the same algebra file agree on it.
class Loader {
 public:
  /// `field` is the field requested by the caller; a document declaring a
  /// different field raises FieldMismatch. `truncation` overrides the
  /// truncation degree of monomial quotients.
  explicit Loader(std::optional<Field> field = std::nullopt, std::optional<int> truncation = std::nullopt);
  ~Loader();
  Loader(Loader&&) noexcept;
  Loader& operator=(Loader&&) noexcept;

  const Field& field() const noexcept { return field_; }

  LoadedAlgebra algebra(const std::string& text, const std::filesystem::path& base = {});
  FreeComplex complex(const std::string& text, const std::filesystem::path& base = {});
  AlgebraMorphism morphism(const std::string& text, const std::filesystem::path& base = {});
  ActionCertificate certificate(const std::string& text, const std::filesystem::path& base = {});
  InstanceBundle bundle(const std::string& text, const std::filesystem::path& base = {});
  WModuleRep rep(const std::string& text);
  FiniteModule module(const std::string& text, const std::filesystem::path& base = {});

  /// The monomial presentation an algebra was read from, if any.
  std::optional<GradedMonomialAlgebra> monomial_of(const AlgebraPtr& a) const;

  /// Reads a file; the document kind is chosen by the caller.
  static std::string read_file(const std::filesystem::path& path);

  struct State;

 private:
  Field field_;
  std::optional<int> truncation_;
  std::unique_ptr<State> state_;
};

/// Writers produce self-contained documents (referenced documents inline).
/// When a loader is given, algebras it read from a monomial presentation
/// are written in that form.
std::string save_algebra(const AlgebraPtr& a, const Loader* origin = nullptr);
std::string save_complex(const FreeComplex& f, const Loader* origin = nullptr);
std::string save_morphism(const AlgebraMorphism& phi, const Loader* origin = nullptr);
std::string save_certificate(const ActionCertificate& c, const Loader* origin = nullptr);
std::string save_bundle(const InstanceBundle& b, const Loader* origin = nullptr);
std::string save_rep(const WModuleRep& rep);
std::string save_module(const FiniteModule& m, const Loader* origin = nullptr);

bool equal(const ArtinAlgebra& a, const ArtinAlgebra& b);
bool equal(const FreeComplex& a, const FreeComplex& b);
bool equal(const AlgebraMorphism& a, const AlgebraMorphism& b);
bool equal(const ActionCertificate& a, const ActionCertificate& b);
bool equal(const WModuleRep& a, const WModuleRep& b);
bool equal(const FiniteModule& a, const FiniteModule& b);

}  // namespace freecrit
