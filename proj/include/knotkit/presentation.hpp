#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotkit/smith.hpp"
#include "knotkit/word.hpp"

namespace knotkit {

// Finite group presentation <generators | relators>. Relators are words set
// equal to the identity.
class Presentation {
 public:
  Presentation() = default;
  // Throws ValidationError on duplicate names or out-of-range generator
  // indices.
  Presentation(std::vector<std::string> generator_names, std::vector<Word> relators);

  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }
  std::size_t generator_count() const { return names_.size(); }

  std::optional<std::uint32_t> generator_index(std::string_view name) const;

  // Space-separated tokens "x", "x^-1", "x^3"; "1" is the identity.
  // "u = v" yields u v^-1.
  Word parse_word(std::string_view text) const;
  std::string format_word(const Word& w) const;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

// A homomorphism to Z = <t>, stored as the exponent of t for each generator.
struct AbelianizationMap {
  std::vector<int> weights;
  bool operator==(const AbelianizationMap&) const = default;
};

// "x1=1,x2=-1,x3=1" or "x1=1 x2=-1 x3=1"; every generator exactly once.
AbelianizationMap parse_map(const Presentation& p, std::string_view text);
std::string format_map(const Presentation& p, const AbelianizationMap& m);

// Contents of a .pres file: `gens:`, `rel:` and optional `map:` lines.
struct PresentationFile {
  Presentation presentation;
  std::vector<AbelianizationMap> maps;
};

PresentationFile parse_presentation_file(std::string_view text);
std::string format_presentation_file(const PresentationFile& file);

// Rows = relators, columns = generators, entry = signed exponent sum.
IntMatrix exponent_matrix(const Presentation& p);

// Finitely generated abelian group Z^free_rank + sum Z/torsion_i.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Coeff> torsion;
  bool operator==(const AbelianGroup&) const = default;
};

std::string to_string(const AbelianGroup& g);

// First homology (abelianization) of the presented group.
AbelianGroup h1(const Presentation& p);

// True iff every relator's weighted exponent sum vanishes. Throws
// ValidationError on a length mismatch.
bool validate_abelianization(const Presentation& p, const AbelianizationMap& m);

// A map inducing H1/torsion = Z, read off the Smith change of basis. Throws
// ValidationError unless H1 has free rank exactly 1.
AbelianizationMap z_surjection(const Presentation& p);

}  // namespace knotkit
