#include "skewpbw/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "skewpbw/definition.hpp"
#include "skewpbw/expr.hpp"
#include "skewpbw/nakayama.hpp"
#include "skewpbw/tower.hpp"

namespace skewpbw {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_domain = 1;
constexpr int exit_usage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::schema_error, "cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::optional<Field> parse_field_flag(const std::string& value) {
  if (value.empty()) return std::nullopt;
  if (value == "q") return Field::rationals();
  if (value.rfind("fp:", 0) == 0) {
    try {
      return Field::prime(std::stoull(value.substr(3)));
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(Errc::schema_error, "bad --field value '" + value + "'");
    }
  }
  fail(Errc::schema_error, "bad --field value '" + value + "' (expected q or fp:<p>)");
}

struct CommonArgs {
  std::string file;
  std::string field_flag;

  LoadedAlgebra load() const { return load_definition(read_file(file), parse_field_flag(field_flag)); }
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("file", args.file, "algebra definition (.alg)")->required();
  cmd->add_option("--field", args.field_flag, "override the field: q or fp:<p>");
}

int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"exact engine for graded quasi-commutative skew PBW extensions"};
  app.require_subcommand(1);

  CommonArgs validate_args;
  auto* cmd_validate = app.add_subcommand("validate", "check the axioms, print the validation state");
  add_common(cmd_validate, validate_args);

  CommonArgs nf_args;
  std::vector<std::string> nf_exprs;
  auto* cmd_nf = app.add_subcommand("normalform", "print the PBW normal form of an expression");
  add_common(cmd_nf, nf_args);
  cmd_nf->add_option("-e", nf_exprs, "element expression")->required()->expected(1);

  CommonArgs mul_args;
  std::vector<std::string> mul_exprs;
  auto* cmd_mul = app.add_subcommand("mul", "multiply two elements");
  add_common(cmd_mul, mul_args);
  cmd_mul->add_option("-e", mul_exprs, "element expression (twice)")->required()->expected(2);

  CommonArgs tower_args;
  auto* cmd_tower = app.add_subcommand("tower", "print the iterated Ore-extension stages");
  add_common(cmd_tower, tower_args);

  CommonArgs hdet_args;
  unsigned hdet_stage_flag = 0;
  auto* cmd_hdet = app.add_subcommand("hdet", "print the stage homological determinant u_i");
  add_common(cmd_hdet, hdet_args);
  cmd_hdet->add_option("--stage", hdet_stage_flag, "stage index i in 1..n")->required();

  CommonArgs nak_args;
  std::string nak_nu_file;
  auto* cmd_nak = app.add_subcommand("nakayama", "print the Nakayama automorphism");
  add_common(cmd_nak, nak_args);
  cmd_nak->add_option("--nu", nak_nu_file, "file with 'gen -> poly' lines for nu");

  CommonArgs cy_args;
  std::string cy_nu_file;
  auto* cmd_cy = app.add_subcommand("check-cy", "Calabi-Yau verdict plus the Nakayama automorphism");
  add_common(cmd_cy, cy_args);
  cmd_cy->add_option("--nu", cy_nu_file, "file with 'gen -> poly' lines for nu");

  CommonArgs hil_args;
  unsigned max_degree = 0;
  auto* cmd_hil = app.add_subcommand("hilbert", "print dim A_d for d = 0..max-degree");
  add_common(cmd_hil, hil_args);
  cmd_hil->add_option("--max-degree", max_degree, "largest degree to print")->required();

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  std::string prog = "skewpbw";
  argv.push_back(prog.data());
  for (auto& a : storage) argv.push_back(a.data());
  app.parse(static_cast<int>(argv.size()), argv.data());

  if (*cmd_validate) {
    LoadedAlgebra loaded = validate_args.load();
    out << validation_state_name(loaded.algebra->state()) << "\n";
    const auto& rep = loaded.algebra->report();
    for (std::size_t i = 0; i < loaded.algebra->var_count(); ++i) {
      out << "sigma " << loaded.algebra->var_name(i) << ": bijective="
          << (rep.sigma_injective[i] ? "yes" : "no")
          << " graded=" << (rep.sigma_graded[i] ? "yes" : "no") << "\n";
    }
    out << "sigmas pairwise commute: " << (rep.sigmas_commute ? "yes" : "no") << "\n";
    out << "c entries nonzero: " << (rep.c_nonzero ? "yes" : "no") << "\n";
    return exit_ok;
  }
  if (*cmd_nf) {
    LoadedAlgebra loaded = nf_args.load();
    out << parse_element(nf_exprs.at(0), loaded.algebra).to_string() << "\n";
    return exit_ok;
  }
  if (*cmd_mul) {
    LoadedAlgebra loaded = mul_args.load();
    const PbwElement f = parse_element(mul_exprs.at(0), loaded.algebra);
    const PbwElement g = parse_element(mul_exprs.at(1), loaded.algebra);
    out << f.multiply(g).to_string() << "\n";
    return exit_ok;
  }
  if (*cmd_tower) {
    LoadedAlgebra loaded = tower_args.load();
    out << OreTower::build(loaded.algebra).to_string();
    return exit_ok;
  }
  if (*cmd_hdet) {
    LoadedAlgebra loaded = hdet_args.load();
    if (hdet_stage_flag == 0 || hdet_stage_flag > loaded.algebra->var_count())
      fail(Errc::schema_error, "--stage must be in 1.." + std::to_string(loaded.algebra->var_count()));
    out << hdet_stage(*loaded.algebra, hdet_stage_flag - 1).to_string() << "\n";
    return exit_ok;
  }
  if (*cmd_nak || *cmd_cy) {
    const bool cy = static_cast<bool>(*cmd_cy);
    CommonArgs& common = cy ? cy_args : nak_args;
    const std::string& nu_file = cy ? cy_nu_file : nak_nu_file;
    LoadedAlgebra loaded = common.load();
    std::optional<RingEndo> nu = loaded.nu;
    if (!nu_file.empty()) nu = parse_endo_lines(read_file(nu_file), loaded.algebra->ring());
    if (cy) {
      const bool verdict = is_calabi_yau(loaded.algebra, nu);
      out << "calabi_yau: " << (verdict ? "true" : "false") << "\n";
    }
    out << automorphism_to_string(*loaded.algebra, nakayama(loaded.algebra, nu));
    return exit_ok;
  }
  if (*cmd_hil) {
    LoadedAlgebra loaded = hil_args.load();
    for (unsigned d = 0; d <= max_degree; ++d) {
      if (d > 0) out << ' ';
      out << loaded.algebra->hilbert(d).get_str();
    }
    out << "\n";
    return exit_ok;
  }
  return exit_usage;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run(args, out);
  } catch (const CLI::CallForHelp& e) {
    // Rebuild a minimal usage text; CLI11's own printer needs the App object.
    out << "usage: skewpbw <validate|normalform|mul|tower|hdet|nakayama|check-cy|hilbert> "
           "<file.alg> [--field q|fp:<p>] [-e <expr>] [--stage <i>] [--nu <file>] "
           "[--max-degree <d>]\n";
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    switch (e.code()) {
      case Errc::syntax_error:
      case Errc::schema_error:
      case Errc::unknown_identifier:
        return exit_usage;
      default:
        return exit_domain;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_domain;
  }
}

}  // namespace skewpbw
