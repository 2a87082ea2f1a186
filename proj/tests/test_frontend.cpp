#include <doctest.h>

#include <sstream>

#include "skewpbw/cli.hpp"
#include "skewpbw/expr.hpp"
#include "support/helpers.hpp"

using namespace skewpbw;
using skewpbw::testing::Rng;

namespace {

const Field QQ = Field::rationals();

Scalar q(long num, long den = 1) { return Scalar::of_rational(QQ, mpq_class(num, den)); }

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return testing::fixture_path(name); }

}  // namespace

TEST_SUITE("frontend") {

TEST_CASE("parse_element: normalization, zero, shift-algebra sample") {
  auto plane = testing::make_quantum_plane(QQ, q(2));
  // x2*x1 rewrites through the defining relation
  CHECK(parse_element("x2*x1", plane) ==
        PbwElement::monomial(plane, CoeffPoly::constant(plane->ring(), q(2)), {1, 1}));
  CHECK(parse_element("0", plane).is_zero());

  auto shift = testing::make_shift_algebra(q(1), 0);
  const auto& ring = shift->ring();
  const PbwElement parsed = parse_element("(1/2)*t^2*xh + xh", shift);
  const CoeffPoly expected_coeff =
      CoeffPoly::generator(ring, 0).pow(2).scale(q(1, 2)).add(CoeffPoly::one(ring));
  CHECK(parsed == PbwElement::monomial(shift, expected_coeff, {1}));
}

TEST_CASE("parse_element: grammar coverage and errors") {
  auto plane = testing::make_quantum_plane(QQ, q(2));
  CHECK(parse_element("x1^3", plane) ==
        PbwElement::monomial(plane, CoeffPoly::one(plane->ring()), {3, 0}));
  CHECK(parse_element("-x1 + x1", plane).is_zero());
  CHECK(parse_element("2*(x1 + x2) - x2", plane) ==
        PbwElement::variable(plane, 0).scale(q(2)).add(PbwElement::variable(plane, 1)));
  CHECK(parse_element(" 1/2 ", plane) ==
        PbwElement::embed_scalar(plane, q(1, 2)));

  for (const char* bad : {"x1^", "x1 +", "(x1", "x1*", "3//4", "^2", ""}) {
    try {
      parse_element(bad, plane);
      FAIL("expected SyntaxError for ", bad);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::syntax_error);
    }
  }
  try {
    parse_element("y1 + x1", plane);
    FAIL("expected UnknownIdentifier");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unknown_identifier);
    CHECK(std::string(e.what()).find("position 1") != std::string::npos);
  }
}

TEST_CASE("parse_element over a prime field divides via inverses") {
  auto plane = testing::make_quantum_plane(Field::prime(7), Scalar::of_int(Field::prime(7), 3));
  const PbwElement f = parse_element("1/2*x1", plane);
  // 1/2 = 4 in F_7
  CHECK(f == PbwElement::variable(plane, 0).scale(Scalar::of_int(Field::prime(7), 4)));
}

TEST_CASE("print/parse round-trip on random elements") {
  Rng rng(20240812);
  std::vector<AlgebraHandle> fixtures = {
      testing::make_quantum_affine_over_kx1(QQ, testing::random_q_matrix(QQ, 3, rng)),
      testing::make_qdilation(Field::prime(101), Scalar::of_int(Field::prime(101), 5)),
      testing::make_shift_algebra(q(1), 0),
  };
  for (const auto& a : fixtures) {
    for (int iter = 0; iter < 200; ++iter) {
      const PbwElement f = testing::random_element(a, rng);
      const std::string text = f.to_string();
      const PbwElement reparsed = parse_element(text, a);
      CHECK(reparsed == f);
      CHECK(reparsed.to_string() == text);
    }
  }
}

TEST_CASE("load_definition: bundled fixtures reach the expected states") {
  const LoadedAlgebra qa = testing::load_fixture("quantum_affine_3.alg");
  CHECK(qa.algebra->state() == ValidationState::graded_quasi_commutative);
  CHECK(qa.algebra->ring()->gen_count() == 1);
  CHECK(qa.algebra->var_count() == 2);

  const LoadedAlgebra dil = testing::load_fixture("qdilation_2_2.alg");
  CHECK(dil.algebra->state() == ValidationState::graded_quasi_commutative);

  for (const auto& name : testing::bundled_fixture_names()) {
    const LoadedAlgebra loaded = testing::load_fixture(name);
    CHECK(loaded.algebra->state() == ValidationState::graded_quasi_commutative);
  }
}

TEST_CASE("load_definition: validation failures and schema errors") {
  const std::string zero_c =
      "[field]\nrationals\n[variables]\nx1 x2\n[c]\n1 2 = 0\n";
  try {
    load_definition(zero_c);
    FAIL("expected ValidationFailed");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::validation_failed);
    CHECK(std::string(e.what()).find("c(1,2)") != std::string::npos);
  }

  const std::string degree_two_sigma =
      "[field]\nrationals\n[ring]\nt weight 0\n[variables]\nx\n[sigma x]\nt -> t^2\n";
  try {
    load_definition(degree_two_sigma);
    FAIL("expected ValidationFailed");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::validation_failed);
  }

  struct BadCase {
    const char* text;
    Errc code;
  };
  const BadCase cases[] = {
      {"[variables]\nx\n", Errc::schema_error},                        // missing field
      {"[field]\nrationals\n", Errc::schema_error},                    // missing variables
      {"[field]\nprime 91\n[variables]\nx\n", Errc::schema_error},     // composite modulus
      {"[field]\nrationals\n[variables]\nx x\n", Errc::schema_error},  // duplicate names
      {"[field]\nrationals\n[ring]\nt weight 1\n[variables]\nt\n", Errc::schema_error},
      {"[field]\nrationals\n[variables]\nx y\n[c]\n2 1 = 2\n", Errc::schema_error},
      {"[field]\nrationals\n[variables]\nx y\n[c]\n1 3 = 2\n", Errc::schema_error},
      {"[field]\nrationals\n[variables]\nx\n[sigma y]\nt -> t\n", Errc::schema_error},
      {"[field]\nrationals\n[variables]\nx\n[bogus]\n", Errc::schema_error},
      {"[field]\nrationals\n[variables]\nx\n[sigma x]\nu -> u\n", Errc::schema_error},
      {"stray line\n[field]\nrationals\n[variables]\nx\n", Errc::schema_error},
      {"[field]\nrationals\n[variables]\nx y\n[c]\n1 2 = t\n", Errc::unknown_identifier},
  };
  for (const auto& bad : cases) {
    try {
      load_definition(bad.text);
      FAIL("expected failure for: ", bad.text);
    } catch (const Error& e) {
      CHECK(e.code() == bad.code);
    }
  }
}

TEST_CASE("definition round-trip: parse(print(d)) == d") {
  for (const auto& name : testing::bundled_fixture_names()) {
    const AlgebraDefinition def = parse_definition(testing::read_fixture(name));
    CHECK(parse_definition(print_definition(def)) == def);
  }
}

TEST_CASE("field override re-evaluates scalars over the target field") {
  const LoadedAlgebra over_q = testing::load_fixture("sklyanin_particular.alg");
  CHECK(over_q.algebra->field().is_rationals());
  const LoadedAlgebra over_fp =
      load_definition(testing::read_fixture("sklyanin_particular.alg"), Field::prime(101));
  CHECK(over_fp.algebra->field().is_prime());
  // -1/2 becomes -inv(2) = 50 mod 101
  CHECK(over_fp.algebra->commutation_scalar(0, 2) == Scalar::of_int(Field::prime(101), 50));
  CHECK(nakayama(over_fp.algebra).is_identity());
}

TEST_CASE("cli: validate prints the state and exits 0") {
  const CliResult r = run_cli({"validate", fx("quantum_affine_3.alg")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("graded_quasi_commutative\n", 0) == 0);

  const CliResult shift = run_cli({"validate", fx("shift_algebra.alg")});
  CHECK(shift.code == 0);
  CHECK(shift.out.rfind("graded_quasi_commutative\n", 0) == 0);
}

TEST_CASE("cli: nakayama output matches the quantum affine closed form") {
  const CliResult r = run_cli({"nakayama", fx("quantum_affine_3.alg")});
  CHECK(r.code == 0);
  CHECK(r.out == "x1 -> (1/6)*x1\nx2 -> (2/5)*x2\nx3 -> 15*x3\n");
}

TEST_CASE("cli: hilbert, hdet, tower, normalform, mul") {
  CHECK(run_cli({"hilbert", fx("quantum_affine_3.alg"), "--max-degree", "4"}).out ==
        "1 3 6 10 15\n");
  CHECK(run_cli({"hdet", fx("quantum_affine_3.alg"), "--stage", "1"}).out == "2\n");
  CHECK(run_cli({"hdet", fx("quantum_affine_3.alg"), "--stage", "2"}).out == "15\n");

  const CliResult tower = run_cli({"tower", fx("quantum_affine_3.alg")});
  CHECK(tower.code == 0);
  CHECK(tower.out ==
        "stage 1 (x2): x1 -> 2*x1\n"
        "stage 2 (x3): x1 -> 3*x1, x2 -> 5*x2\n");

  CHECK(run_cli({"normalform", fx("quantum_affine_3.alg"), "-e", "x2*x1"}).out == "2*x1*x2\n");
  CHECK(run_cli({"mul", fx("quantum_plane.alg"), "-e", "x2", "-e", "x1"}).out == "2*x1*x2\n");
}

TEST_CASE("cli: check-cy verdicts") {
  const CliResult cy = run_cli({"check-cy", fx("sklyanin_particular.alg")});
  CHECK(cy.code == 0);
  CHECK(cy.out.rfind("calabi_yau: true\n", 0) == 0);

  const CliResult not_cy = run_cli({"check-cy", fx("quantum_plane.alg")});
  CHECK(not_cy.code == 0);
  CHECK(not_cy.out.rfind("calabi_yau: false\n", 0) == 0);

  // trivially graded coefficient ring: domain error, exit 1
  const CliResult shift = run_cli({"check-cy", fx("shift_algebra.alg")});
  CHECK(shift.code == 1);
  CHECK(shift.err.find("NotConnected") != std::string::npos);
}

TEST_CASE("cli: --nu file feeds the computation") {
  // nu = sigma_H1 o sigma_H2 scales both generators by q = 2, cancelling mu|_R
  const std::string nu_path = "/tmp/skewpbw_test_nu.txt";
  {
    std::ofstream nu(nu_path);
    nu << "t1 -> 2*t1\nt2 -> 2*t2\n";
  }
  const CliResult r = run_cli({"nakayama", fx("qdilation_2_2.alg"), "--nu", nu_path});
  CHECK(r.code == 0);
  CHECK(r.out == "t1 -> t1\nt2 -> t2\nH1 -> 2*H1\nH2 -> 2*H2\n");
}

TEST_CASE("cli: --field override") {
  const CliResult r =
      run_cli({"nakayama", fx("quantum_plane.alg"), "--field", "fp:101"});
  CHECK(r.code == 0);
  // 1/2 = 51 mod 101
  CHECK(r.out == "x1 -> 51*x1\nx2 -> 2*x2\n");
  CHECK(run_cli({"validate", fx("quantum_plane.alg"), "--field", "fp:91"}).code == 2);
}

TEST_CASE("cli: exit codes for usage, parse, and domain errors") {
  CHECK(run_cli({}).code == 2);                                   // no subcommand
  CHECK(run_cli({"frobnicate", "x.alg"}).code == 2);              // unknown subcommand
  CHECK(run_cli({"validate"}).code == 2);                         // missing file
  CHECK(run_cli({"validate", "/nonexistent/file.alg"}).code == 2);
  CHECK(run_cli({"normalform", fx("quantum_plane.alg"), "-e", "x1 +"}).code == 2);
  CHECK(run_cli({"normalform", fx("quantum_plane.alg"), "-e", "zz"}).code == 2);
  CHECK(run_cli({"hdet", fx("quantum_plane.alg"), "--stage", "9"}).code == 2);
  CHECK(run_cli({"hilbert", fx("shift_algebra.alg"), "--max-degree", "3"}).code == 1);

  const std::string bad_path = "/tmp/skewpbw_zero_c.alg";
  {
    std::ofstream bad(bad_path);
    bad << "[field]\nrationals\n[variables]\nx1 x2\n[c]\n1 2 = 0\n";
  }
  const CliResult r = run_cli({"validate", bad_path});
  CHECK(r.code == 1);
  CHECK(r.err.find("ValidationFailed") != std::string::npos);
}

TEST_CASE("cli: output is byte-deterministic") {
  const CliResult a = run_cli({"nakayama", fx("iterated_skew_2.alg")});
  const CliResult b = run_cli({"nakayama", fx("iterated_skew_2.alg")});
  CHECK(a.out == b.out);
  CHECK(a.out == "t1 -> (1/10)*t1\nt2 -> (1/21)*t2\nx1 -> 6*x1\nx2 -> 35*x2\n");
}

}  // TEST_SUITE
