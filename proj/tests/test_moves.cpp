#include <doctest.h>

#include "testutil.hpp"
#include "tricap/io.hpp"
#include "tricap/moves.hpp"

using namespace tricap;
using namespace tricap::testutil;

TEST_CASE("handleslide adds one class to another") {
  const ClosedTrisectionDiagram d = standard_closed_diagram(2, 0);
  const ClosedTrisectionDiagram slid = handleslide(d, Family::Alpha, 0, 1, +1);
  CHECK(slid.alpha[0] == basis_a(d.surface, 1) + basis_a(d.surface, 2));
  CHECK(slid.alpha[1] == d.alpha[1]);
  CHECK(slid.beta == d.beta);
  CHECK(slid.gamma == d.gamma);
}

TEST_CASE("a slide and its inverse cancel exactly") {
  const RelativeTrisectionDiagram d = bundled::d1();
  const RelativeTrisectionDiagram there = handleslide(d, Family::Gamma, 1, 0, -1);
  const RelativeTrisectionDiagram back = handleslide(there, Family::Gamma, 1, 0, +1);
  CHECK(back == d);
}

TEST_CASE("slide errors") {
  const ClosedTrisectionDiagram d = standard_closed_diagram(2, 0);
  CHECK_THROWS_WITH_AS(handleslide(d, Family::Alpha, 1, 1, +1),
                       "cannot slide a curve over itself", std::invalid_argument);
  CHECK_THROWS_AS(handleslide(d, Family::Alpha, 0, 2, +1), std::out_of_range);
  CHECK_THROWS_AS(handleslide(d, Family::Beta, 0, 1, 2), std::invalid_argument);
}

TEST_CASE("slides preserve the validated type") {
  Rng rng(509);
  for (int trial = 0; trial < 100; ++trial) {
    const Int g = rand_int(rng, 2, 4);
    const Int b = rand_int(rng, 1, 3);
    const Int k = rand_int(rng, b - 1, g + b - 1);
    RelativeTrisectionDiagram d = standard_relative_diagram(g, k, 0, b);
    const InferredType before = *validate_relative(d).inferred_type;
    d = apply_move(d, random_slide(rng, d));
    const ValidationReport after = validate_relative(d);
    REQUIRE(after.ok);
    CHECK(*after.inferred_type == before);
  }
}

TEST_CASE("transvection formula matches the convention") {
  const SurfaceModel s(1, 0);
  const ClosedTrisectionDiagram d(s, {basis_b(s, 1)}, {basis_b(s, 1)},
                                  {basis_b(s, 1)});
  // twist b1 along a1: b1 + omega(b1, a1) a1 = b1 - a1
  const ClosedTrisectionDiagram t = transvection(d, basis_a(s, 1), 1);
  CHECK(t.alpha[0] == basis_b(s, 1) - basis_a(s, 1));
}

TEST_CASE("zero-power transvection is the identity") {
  const RelativeTrisectionDiagram d = bundled::d2();
  CHECK(transvection(d, basis_a(d.surface, 1), 0) == d);
}

TEST_CASE("transvections preserve the pairing") {
  Rng rng(521);
  const SurfaceModel s(3, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const H1Class c = random_primitive_class(rng, s);
    const Int n = rand_int(rng, -3, 3);
    const SymplecticMap t = transvection_map(c, n, s);
    CHECK(preserves_pairing(t, s));
    const H1Class x = random_class(rng, s), y = random_class(rng, s);
    const H1Class tx{t.matrix * x.coords}, ty{t.matrix * y.coords};
    CHECK(symplectic_pairing(tx, ty, s) == symplectic_pairing(x, y, s));
  }
}

TEST_CASE("transvection rejects a non-primitive class") {
  const RelativeTrisectionDiagram d = bundled::d1();
  CHECK_THROWS_AS(transvection(d, 2 * basis_a(d.surface, 1), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(transvection(d, zero_class(d.surface), 1),
                  std::invalid_argument);
}

TEST_CASE("cap-off of standard diagrams obeys the type law") {
  for (Int g = 0; g <= 4; ++g)
    for (Int b = 1; b <= 4; ++b)
      for (Int k = b - 1; k <= g + b - 1; ++k) {
        const ClosedTrisectionDiagram capped =
            cap_off(standard_relative_diagram(g, k, 0, b));
        const ValidationReport report = validate_closed(capped);
        REQUIRE(report.ok);
        CHECK(*report.inferred_type == InferredType{g, k - b + 1, 0, 0, true});
      }
}

TEST_CASE("cap-off requires p = 0") {
  const RelativeTrisectionDiagram d = standard_relative_diagram(2, 2, 1, 1);
  CHECK_THROWS_WITH_AS(cap_off(d), "cap-off requires p = 0",
                       std::invalid_argument);
}

TEST_CASE("cap-off rejects invalid diagrams with the report attached") {
  RelativeTrisectionDiagram d = bundled::d1();
  d.gamma[0] = 3 * d.gamma[0];
  try {
    cap_off(d);
    FAIL("expected an exception");
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    CHECK(msg.find("class not primitive") != std::string::npos);
  }
}

TEST_CASE("capping the bundled diagrams gives the expected closed families") {
  const ClosedTrisectionDiagram c1 = cap_off(bundled::d1());
  const SurfaceModel s(2, 0);
  CHECK(c1.surface == s);
  CHECK(c1.alpha == std::vector<H1Class>{basis_a(s, 1), basis_a(s, 2)});
  CHECK(c1.beta == std::vector<H1Class>{basis_b(s, 1), basis_b(s, 2)});
  CHECK(c1.gamma == std::vector<H1Class>{basis_a(s, 1) + basis_b(s, 2),
                                         basis_a(s, 2) + basis_b(s, 1)});
}

TEST_CASE("cap commutes with slides coordinate-for-coordinate") {
  Rng rng(601);
  for (int trial = 0; trial < 60; ++trial) {
    const Int g = rand_int(rng, 2, 4);
    const Int b = rand_int(rng, 1, 3);
    const Int k = rand_int(rng, b - 1, g + b - 1);
    const RelativeTrisectionDiagram d = standard_relative_diagram(g, k, 0, b);
    const Move m = random_slide(rng, d);
    CHECK(cap_off(apply_move(d, m)) == apply_move(cap_off(d), m));
  }
}

TEST_CASE("cap commutes with transvections along handle-block classes") {
  Rng rng(607);
  for (int trial = 0; trial < 60; ++trial) {
    const Int g = rand_int(rng, 1, 3);
    const Int b = rand_int(rng, 1, 3);
    const Int k = rand_int(rng, b - 1, g + b - 1);
    const RelativeTrisectionDiagram d = standard_relative_diagram(g, k, 0, b);
    const Move m = random_twist(rng, d.surface, /*handle_block_only=*/true);
    const H1Class capped_twist{IntVector(m.twist.coords.head(2 * g))};
    CHECK(cap_off(apply_move(d, m)) ==
          transvection(cap_off(d), capped_twist, m.power));
  }
}

TEST_CASE("a move sequence followed by its reverse inverse is the identity") {
  Rng rng(613);
  for (int trial = 0; trial < 40; ++trial) {
    const RelativeTrisectionDiagram d = standard_relative_diagram(3, 2, 0, 2);
    std::vector<Move> seq;
    for (int i = 0; i < 12; ++i)
      seq.push_back(rand_int(rng, 0, 1) ? random_slide(rng, d)
                                        : random_twist(rng, d.surface, false));
    RelativeTrisectionDiagram walked = apply_moves(d, seq);
    for (auto it = seq.rbegin(); it != seq.rend(); ++it)
      walked = apply_move(walked, it->inverse());
    CHECK(walked == d);
  }
}

TEST_CASE("slides and transvections keep each family's lagrangian") {
  Rng rng(617);
  for (int trial = 0; trial < 40; ++trial) {
    const RelativeTrisectionDiagram d = bundled::d1();
    std::vector<Move> seq;
    for (int i = 0; i < rand_int(rng, 1, 20); ++i)
      seq.push_back(random_slide(rng, d));
    const RelativeTrisectionDiagram moved = apply_moves(d, seq);
    for (Family f : kFamilies) {
      const LagrangianSubgroup before = lagrangian_span(d.family(f), d.surface);
      const LagrangianSubgroup after =
          lagrangian_span(moved.family(f), moved.surface);
      CHECK(before.basis == after.basis);  // same lattice, canonical basis
    }
  }
}

TEST_CASE("symplectic map application") {
  const SurfaceModel s(1, 0);
  const ClosedTrisectionDiagram d = standard_closed_diagram(1, 0);
  const SymplecticMap t = transvection_map(basis_a(s, 1), 2, s);
  const ClosedTrisectionDiagram mapped = apply_map(d, t);
  CHECK(mapped.alpha[0] == d.alpha[0]);  // a1 is fixed by its own twist
  SymplecticMap bad{IntMatrix::Identity(2, 2)};
  bad.matrix(0, 0) = 2;
  CHECK_THROWS_AS(apply_map(d, bad), std::invalid_argument);
}

TEST_CASE("move rendering is stable") {
  CHECK(Move::handleslide(Family::Alpha, 0, 1, +1).to_string() ==
        "slide alpha[0] + alpha[1]");
  const SurfaceModel s(1, 0);
  CHECK(Move::transvection(basis_a(s, 1), -2).to_string() ==
        "twist^-2 along (1,0)");
}
