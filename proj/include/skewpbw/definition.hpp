#ifndef SKEWPBW_DEFINITION_HPP
#define SKEWPBW_DEFINITION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewpbw/pbw.hpp"

namespace skewpbw {

/// Parsed form of an .alg definition file. Sections:
///   [field]       "rationals" or "prime <p>"
///   [ring]        one "<name> weight <w>" per generator (omit for R = K)
///   [variables]   whitespace-separated variable names
///   [sigma <var>] "<gen> -> <poly>" lines; omitted generators/variables
///                 default to the identity
///   [c]           "<i> <j> = <scalar>" lines, 1-based variable indices, i < j
///   [nu]          optional "<gen> -> <poly>" lines
/// '#' starts a comment. Expression texts are kept verbatim, so
/// parse_definition(print_definition(d)) == d.
struct AlgebraDefinition {
  struct RingGen {
    std::string name;
    unsigned weight;
    bool operator==(const RingGen&) const = default;
  };
  struct MapEntry {
    std::string target;  // generator name
    std::string image;   // polynomial expression text
    bool operator==(const MapEntry&) const = default;
  };
  struct SigmaBlock {
    std::string variable;
    std::vector<MapEntry> entries;
    bool operator==(const SigmaBlock&) const = default;
  };
  struct CEntry {
    unsigned i;  // 1-based, i < j
    unsigned j;
    std::string value;  // scalar expression text
    bool operator==(const CEntry&) const = default;
  };

  bool field_is_prime = false;
  std::uint64_t modulus = 0;  // meaningful when field_is_prime
  std::vector<RingGen> ring_gens;
  std::vector<std::string> variables;
  std::vector<SigmaBlock> sigma_blocks;
  std::vector<CEntry> c_entries;
  std::optional<std::vector<MapEntry>> nu_entries;

  bool operator==(const AlgebraDefinition&) const = default;
};

AlgebraDefinition parse_definition(const std::string& text);
std::string print_definition(const AlgebraDefinition& def);

struct LoadedAlgebra {
  AlgebraHandle algebra;
  std::optional<RingEndo> nu;
};

/// Builds and validates the algebra; the field section can be overridden
/// (every scalar literal is re-evaluated over the target field).
/// ValidationFailed carries the validation report when the quasi-commutative
/// axioms do not hold.
LoadedAlgebra build_algebra(const AlgebraDefinition& def,
                            const std::optional<Field>& field_override = std::nullopt);

LoadedAlgebra load_definition(const std::string& text,
                              const std::optional<Field>& field_override = std::nullopt);

/// Reads "<gen> -> <poly>" lines (the [nu] section body) as an endomorphism of R.
RingEndo parse_endo_lines(const std::string& text, const std::shared_ptr<const PolyRing>& ring);

}  // namespace skewpbw

#endif
