#include "skewpbw/definition.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "skewpbw/expr.hpp"

namespace skewpbw {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string word;
  while (is >> word) out.push_back(word);
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

AlgebraDefinition::MapEntry parse_map_line(const std::string& line, std::size_t lineno) {
  const auto arrow = line.find("->");
  if (arrow == std::string::npos)
    fail(Errc::syntax_error, "line " + std::to_string(lineno) + ": expected '<gen> -> <poly>'");
  AlgebraDefinition::MapEntry entry;
  entry.target = strip(line.substr(0, arrow));
  entry.image = strip(line.substr(arrow + 2));
  if (!is_identifier(entry.target))
    fail(Errc::syntax_error, "line " + std::to_string(lineno) + ": bad generator name '" +
                                 entry.target + "'");
  if (entry.image.empty())
    fail(Errc::syntax_error, "line " + std::to_string(lineno) + ": empty image");
  return entry;
}

}  // namespace

AlgebraDefinition parse_definition(const std::string& text) {
  AlgebraDefinition def;
  enum class Section { none, field, ring, variables, sigma, c, nu };
  Section section = Section::none;
  bool have_field = false;
  bool have_variables = false;
  AlgebraDefinition::SigmaBlock* sigma_block = nullptr;

  std::istringstream is(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = strip(raw);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']')
        fail(Errc::syntax_error, "line " + std::to_string(lineno) + ": unterminated section header");
      const std::string header = strip(line.substr(1, line.size() - 2));
      const auto words = split_ws(header);
      if (words.empty())
        fail(Errc::schema_error, "line " + std::to_string(lineno) + ": empty section header");
      const std::string& name = words[0];
      if (name == "field" && words.size() == 1) {
        if (have_field) fail(Errc::schema_error, "duplicate [field] section");
        have_field = true;
        section = Section::field;
      } else if (name == "ring" && words.size() == 1) {
        section = Section::ring;
      } else if (name == "variables" && words.size() == 1) {
        if (have_variables) fail(Errc::schema_error, "duplicate [variables] section");
        have_variables = true;
        section = Section::variables;
      } else if (name == "sigma" && words.size() == 2) {
        def.sigma_blocks.push_back({words[1], {}});
        sigma_block = &def.sigma_blocks.back();
        section = Section::sigma;
      } else if (name == "c" && words.size() == 1) {
        section = Section::c;
      } else if (name == "nu" && words.size() == 1) {
        if (def.nu_entries) fail(Errc::schema_error, "duplicate [nu] section");
        def.nu_entries.emplace();
        section = Section::nu;
      } else {
        fail(Errc::schema_error,
             "line " + std::to_string(lineno) + ": unknown section [" + header + "]");
      }
      continue;
    }

    switch (section) {
      case Section::none:
        fail(Errc::schema_error, "line " + std::to_string(lineno) + ": content before any section");
      case Section::field: {
        const auto words = split_ws(line);
        if (words.size() == 1 && words[0] == "rationals") {
          def.field_is_prime = false;
        } else if (words.size() == 2 && words[0] == "prime") {
          def.field_is_prime = true;
          try {
            def.modulus = std::stoull(words[1]);
          } catch (const std::exception&) {
            fail(Errc::schema_error, "line " + std::to_string(lineno) + ": bad modulus");
          }
        } else {
          fail(Errc::schema_error,
               "line " + std::to_string(lineno) + ": expected 'rationals' or 'prime <p>'");
        }
        break;
      }
      case Section::ring: {
        const auto words = split_ws(line);
        if (words.size() != 3 || words[1] != "weight" || !is_identifier(words[0]))
          fail(Errc::schema_error,
               "line " + std::to_string(lineno) + ": expected '<name> weight <w>'");
        unsigned w = 0;
        try {
          w = static_cast<unsigned>(std::stoul(words[2]));
        } catch (const std::exception&) {
          fail(Errc::schema_error, "line " + std::to_string(lineno) + ": bad weight");
        }
        def.ring_gens.push_back({words[0], w});
        break;
      }
      case Section::variables: {
        for (const auto& word : split_ws(line)) {
          if (!is_identifier(word))
            fail(Errc::schema_error,
                 "line " + std::to_string(lineno) + ": bad variable name '" + word + "'");
          def.variables.push_back(word);
        }
        break;
      }
      case Section::sigma:
        sigma_block->entries.push_back(parse_map_line(line, lineno));
        break;
      case Section::c: {
        const auto eq = line.find('=');
        if (eq == std::string::npos)
          fail(Errc::syntax_error,
               "line " + std::to_string(lineno) + ": expected '<i> <j> = <scalar>'");
        const auto idx = split_ws(line.substr(0, eq));
        AlgebraDefinition::CEntry entry;
        if (idx.size() != 2)
          fail(Errc::schema_error,
               "line " + std::to_string(lineno) + ": expected two variable indices");
        try {
          entry.i = static_cast<unsigned>(std::stoul(idx[0]));
          entry.j = static_cast<unsigned>(std::stoul(idx[1]));
        } catch (const std::exception&) {
          fail(Errc::schema_error, "line " + std::to_string(lineno) + ": bad index pair");
        }
        entry.value = strip(line.substr(eq + 1));
        if (entry.value.empty())
          fail(Errc::syntax_error, "line " + std::to_string(lineno) + ": empty scalar");
        def.c_entries.push_back(std::move(entry));
        break;
      }
      case Section::nu:
        def.nu_entries->push_back(parse_map_line(line, lineno));
        break;
    }
  }

  if (!have_field) fail(Errc::schema_error, "missing [field] section");
  if (!have_variables || def.variables.empty()) fail(Errc::schema_error, "missing [variables] section");

  // Name and index sanity that does not need the field.
  std::set<std::string> names;
  for (const auto& gen : def.ring_gens) {
    if (!names.insert(gen.name).second)
      fail(Errc::schema_error, "duplicate ring generator '" + gen.name + "'");
  }
  for (const auto& var : def.variables) {
    if (!names.insert(var).second)
      fail(Errc::schema_error, "duplicate name '" + var + "'");
  }
  std::set<std::string> sigma_vars;
  for (const auto& block : def.sigma_blocks) {
    if (std::find(def.variables.begin(), def.variables.end(), block.variable) ==
        def.variables.end())
      fail(Errc::schema_error, "[sigma " + block.variable + "]: unknown variable");
    if (!sigma_vars.insert(block.variable).second)
      fail(Errc::schema_error, "duplicate [sigma " + block.variable + "] section");
    std::set<std::string> targets;
    for (const auto& entry : block.entries) {
      if (std::none_of(def.ring_gens.begin(), def.ring_gens.end(),
                       [&](const auto& g) { return g.name == entry.target; }))
        fail(Errc::schema_error,
             "[sigma " + block.variable + "]: unknown generator '" + entry.target + "'");
      if (!targets.insert(entry.target).second)
        fail(Errc::schema_error,
             "[sigma " + block.variable + "]: duplicate entry for '" + entry.target + "'");
    }
  }
  std::set<std::pair<unsigned, unsigned>> c_seen;
  for (const auto& entry : def.c_entries) {
    if (entry.i == 0 || entry.j == 0 || entry.i >= entry.j || entry.j > def.variables.size())
      fail(Errc::schema_error, "c entry (" + std::to_string(entry.i) + "," +
                                   std::to_string(entry.j) + "): need 1 <= i < j <= n");
    if (!c_seen.insert({entry.i, entry.j}).second)
      fail(Errc::schema_error, "duplicate c entry (" + std::to_string(entry.i) + "," +
                                   std::to_string(entry.j) + ")");
  }
  if (def.nu_entries) {
    std::set<std::string> targets;
    for (const auto& entry : *def.nu_entries) {
      if (std::none_of(def.ring_gens.begin(), def.ring_gens.end(),
                       [&](const auto& g) { return g.name == entry.target; }))
        fail(Errc::schema_error, "[nu]: unknown generator '" + entry.target + "'");
      if (!targets.insert(entry.target).second)
        fail(Errc::schema_error, "[nu]: duplicate entry for '" + entry.target + "'");
    }
  }
  return def;
}

std::string print_definition(const AlgebraDefinition& def) {
  std::ostringstream os;
  os << "[field]\n";
  if (def.field_is_prime)
    os << "prime " << def.modulus << "\n";
  else
    os << "rationals\n";
  if (!def.ring_gens.empty()) {
    os << "\n[ring]\n";
    for (const auto& gen : def.ring_gens) os << gen.name << " weight " << gen.weight << "\n";
  }
  os << "\n[variables]\n";
  for (std::size_t i = 0; i < def.variables.size(); ++i)
    os << def.variables[i] << (i + 1 == def.variables.size() ? "\n" : " ");
  for (const auto& block : def.sigma_blocks) {
    os << "\n[sigma " << block.variable << "]\n";
    for (const auto& entry : block.entries) os << entry.target << " -> " << entry.image << "\n";
  }
  if (!def.c_entries.empty()) {
    os << "\n[c]\n";
    for (const auto& entry : def.c_entries)
      os << entry.i << " " << entry.j << " = " << entry.value << "\n";
  }
  if (def.nu_entries) {
    os << "\n[nu]\n";
    for (const auto& entry : *def.nu_entries) os << entry.target << " -> " << entry.image << "\n";
  }
  return os.str();
}

LoadedAlgebra build_algebra(const AlgebraDefinition& def, const std::optional<Field>& field_override) {
  const Field field = field_override
                          ? *field_override
                          : (def.field_is_prime ? Field::prime(def.modulus) : Field::rationals());

  std::vector<std::string> gen_names;
  std::vector<unsigned> weights;
  for (const auto& gen : def.ring_gens) {
    gen_names.push_back(gen.name);
    weights.push_back(gen.weight);
  }
  auto ring = PolyRing::make(field, std::move(gen_names), std::move(weights));

  auto build_endo = [&](const std::vector<AlgebraDefinition::MapEntry>& entries,
                        const std::string& what) {
    std::vector<CoeffPoly> images;
    for (std::size_t k = 0; k < ring->gen_count(); ++k) images.push_back(CoeffPoly::generator(ring, k));
    for (const auto& entry : entries) {
      const auto gi = ring->gen_index(entry.target);
      images[*gi] = parse_ring_poly(entry.image, ring);
    }
    try {
      return RingEndo(ring, std::move(images));
    } catch (const Error& e) {
      if (e.code() == Errc::not_affine_linear)
        fail(Errc::validation_failed, what + ": " + e.what());
      throw;
    }
  };

  std::vector<RingEndo> sigmas;
  for (const auto& var : def.variables) {
    const auto block = std::find_if(def.sigma_blocks.begin(), def.sigma_blocks.end(),
                                    [&](const auto& b) { return b.variable == var; });
    if (block == def.sigma_blocks.end())
      sigmas.push_back(RingEndo::identity(ring));
    else
      sigmas.push_back(build_endo(block->entries, "sigma " + var));
  }

  std::map<std::pair<unsigned, unsigned>, Scalar> c_upper;
  for (const auto& entry : def.c_entries) {
    c_upper.emplace(std::make_pair(entry.i - 1, entry.j - 1), parse_scalar_expr(entry.value, field));
  }

  auto algebra = PbwAlgebra::create(ring, def.variables, std::move(sigmas), std::move(c_upper));
  if (algebra->state() == ValidationState::unvalidated)
    fail(Errc::validation_failed, "algebra fails the quasi-commutative axioms:\n" +
                                      algebra->report().to_string());

  LoadedAlgebra loaded{algebra, std::nullopt};
  if (def.nu_entries) loaded.nu = build_endo(*def.nu_entries, "nu");
  return loaded;
}

LoadedAlgebra load_definition(const std::string& text, const std::optional<Field>& field_override) {
  return build_algebra(parse_definition(text), field_override);
}

RingEndo parse_endo_lines(const std::string& text, const std::shared_ptr<const PolyRing>& ring) {
  std::vector<CoeffPoly> images;
  for (std::size_t k = 0; k < ring->gen_count(); ++k) images.push_back(CoeffPoly::generator(ring, k));
  std::istringstream is(text);
  std::string raw;
  std::size_t lineno = 0;
  std::set<std::string> targets;
  while (std::getline(is, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = strip(raw);
    if (line.empty()) continue;
    const auto entry = parse_map_line(line, lineno);
    const auto gi = ring->gen_index(entry.target);
    if (!gi) fail(Errc::unknown_identifier, "generator '" + entry.target + "'");
    if (!targets.insert(entry.target).second)
      fail(Errc::schema_error, "duplicate entry for '" + entry.target + "'");
    images[*gi] = parse_ring_poly(entry.image, ring);
  }
  return RingEndo(ring, std::move(images));
}

}  // namespace skewpbw
