#include <doctest.h>

#include "testutil.hpp"
#include "tricap/invariants.hpp"
#include "tricap/io.hpp"
#include "tricap/moves.hpp"

using namespace tricap;
using namespace tricap::testutil;

namespace {

const AbelianGroup kZ{1, {}};
const AbelianGroup kZero{0, {}};
const AbelianGroup kZ2{2, {}};

void check_duality_and_chi(const ClosedTrisectionDiagram& d) {
  const ValidationReport report = validate_closed(d);
  REQUIRE(report.ok);
  const HomologyProfile h = homology(d);
  CHECK(h.h0 == kZ);
  CHECK(h.h4 == kZ);
  CHECK(h.h3.torsion.empty());
  CHECK(h.h3.free_rank == h.h1.free_rank);
  CHECK(h.h2.torsion == h.h1.torsion);
  const Int chi = 1 - h.h1.free_rank + h.h2.free_rank - h.h3.free_rank + 1;
  CHECK(chi ==
        euler_characteristic_closed(report.inferred_type->g,
                                    report.inferred_type->k));
}

}  // namespace

TEST_CASE("euler characteristic, relative") {
  CHECK(euler_characteristic_relative(2, 1, 0, 2) == 2);
  CHECK(euler_characteristic_relative(1, 0, 0, 1) == 2);
  CHECK(euler_characteristic_relative(0, 0, 0, 1) == 1);  // the 4-ball
  CHECK_THROWS_WITH_AS(euler_characteristic_relative(0, 1, 0, 1),
                       "type constraint violated", std::invalid_argument);
  CHECK_THROWS_AS(euler_characteristic_relative(1, 0, 0, 0),
                  std::invalid_argument);
}

TEST_CASE("euler characteristic, closed") {
  CHECK(euler_characteristic_closed(0, 0) == 2);   // S^4
  CHECK(euler_characteristic_closed(2, 0) == 4);   // S^2 x S^2
  CHECK(euler_characteristic_closed(1, 1) == 0);   // S^1 x S^3
  CHECK_THROWS_AS(euler_characteristic_closed(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(euler_characteristic_closed(-1, 0), std::invalid_argument);
}

TEST_CASE("the two euler formulas differ by b through capping") {
  for (Int g = 0; g <= 4; ++g)
    for (Int b = 1; b <= 4; ++b)
      for (Int k = b - 1; k <= g + b - 1; ++k)
        CHECK(euler_characteristic_relative(g, k, 0, b) ==
              euler_characteristic_closed(g, k - b + 1) - b);
}

TEST_CASE("homology of the model manifolds") {
  const HomologyProfile s4 = homology(bundled::s4());
  CHECK(s4.h1 == kZero);
  CHECK(s4.h2 == kZero);
  CHECK(s4.h3 == kZero);

  const HomologyProfile s1xs3 = homology(bundled::s1xs3());
  CHECK(s1xs3.h1 == kZ);
  CHECK(s1xs3.h2 == kZero);
  CHECK(s1xs3.h3 == kZ);

  const HomologyProfile cp2 = homology(bundled::cp2());
  CHECK(cp2.h1 == kZero);
  CHECK(cp2.h2 == kZ);

  for (const ClosedTrisectionDiagram& d :
       {cap_off(bundled::d1()), cap_off(bundled::d2())}) {
    const HomologyProfile h = homology(d);
    CHECK(h.h1 == kZero);
    CHECK(h.h2 == kZ2);
    CHECK(h.h3 == kZero);
    CHECK_FALSE(h.reduced_confidence);
  }
}

TEST_CASE("duality and chi consistency on all model diagrams") {
  check_duality_and_chi(bundled::s4());
  check_duality_and_chi(bundled::s1xs3());
  check_duality_and_chi(bundled::cp2());
  check_duality_and_chi(bundled::cp2_bar());
  check_duality_and_chi(cap_off(bundled::d1()));
  check_duality_and_chi(cap_off(bundled::d2()));
  check_duality_and_chi(standard_closed_diagram(3, 1));
}

TEST_CASE("intersection form of CP^2 pins the sign convention") {
  const IntersectionForm q = intersection_form(bundled::cp2());
  REQUIRE(q.matrix.rows() == 1);
  CHECK(q.matrix(0, 0) == 1);
  CHECK(q.rank == 1);
  CHECK(q.signature == 1);
  CHECK(q.parity == IntersectionForm::Parity::Odd);
}

TEST_CASE("intersection form of CP^2-bar") {
  const IntersectionForm q = intersection_form(bundled::cp2_bar());
  REQUIRE(q.matrix.rows() == 1);
  CHECK(q.matrix(0, 0) == -1);
  CHECK(q.rank == 1);
  CHECK(q.signature == -1);
  CHECK(q.parity == IntersectionForm::Parity::Odd);
}

TEST_CASE("cap(d1) carries the even rank-2 form") {
  const IntersectionForm q = intersection_form(cap_off(bundled::d1()));
  CHECK(q.rank == 2);
  CHECK(q.signature == 0);
  CHECK(q.parity == IntersectionForm::Parity::Even);
  // the computed matrix is exactly hyperbolic in this basis
  IntMatrix h(2, 2);
  h << 0, 1, 1, 0;
  CHECK(q.matrix == h);
}

TEST_CASE("cap(d2) carries the odd rank-2 form") {
  const IntersectionForm q = intersection_form(cap_off(bundled::d2()));
  CHECK(q.rank == 2);
  CHECK(q.signature == 0);
  CHECK(q.parity == IntersectionForm::Parity::Odd);
  IntMatrix h(2, 2);
  h << 1, 0, 0, -1;
  CHECK(q.matrix == h);
}

TEST_CASE("empty form of S^4 counts as even") {
  const IntersectionForm q = intersection_form(bundled::s4());
  CHECK(q.rank == 0);
  CHECK(q.signature == 0);
  CHECK(q.parity == IntersectionForm::Parity::Even);
}

TEST_CASE("standard closed (2,1): one crossing handle plus one parallel") {
  // the induced manifold is CP^2 # S^1 x S^3; beta and gamma share a curve,
  // so this exercises the decomposition-independence recheck
  const ClosedTrisectionDiagram d = standard_closed_diagram(2, 1);
  const HomologyProfile h = homology(d);
  CHECK(h.h1 == kZ);
  CHECK(h.h2 == AbelianGroup{1, {}});
  const IntersectionForm q = intersection_form(d);
  REQUIRE(q.matrix.rows() == 1);
  CHECK(q.matrix(0, 0) == 1);
  CHECK(q.signature == 1);
  CHECK(q.parity == IntersectionForm::Parity::Odd);
}

TEST_CASE("homology rejects diagrams that no trisection induces") {
  // passes the necessary pair checks but violates the chi identity
  const SurfaceModel s(2, 0);
  const ClosedTrisectionDiagram d(
      s, {basis_a(s, 1), zero_class(s)}, {basis_b(s, 1), basis_b(s, 2)},
      {basis_b(s, 1), basis_a(s, 2)});
  REQUIRE(validate_closed(d).ok);
  CHECK_THROWS_AS(homology(d), std::domain_error);
}

TEST_CASE("homology rejects invalid diagrams with the report attached") {
  const SurfaceModel s(1, 0);
  const ClosedTrisectionDiagram d(s, {basis_a(s, 1)}, {2 * basis_b(s, 1)},
                                  {basis_a(s, 1)});
  CHECK_THROWS_AS(homology(d), std::invalid_argument);
  CHECK_THROWS_AS(intersection_form(d), std::invalid_argument);
}

TEST_CASE("invariants are bit-identical under handleslides") {
  Rng rng(701);
  for (const ClosedTrisectionDiagram& base :
       {cap_off(bundled::d1()), standard_closed_diagram(3, 1),
        standard_closed_diagram(2, 0)}) {
    const HomologyProfile h0 = homology(base);
    const IntersectionForm q0 = intersection_form(base);
    ClosedTrisectionDiagram d = base;
    for (int step = 0; step < 15; ++step) d = apply_move(d, random_slide(rng, d));
    CHECK(homology(d) == h0);
    const IntersectionForm q1 = intersection_form(d);
    CHECK(q1.matrix == q0.matrix);
    CHECK(q1.rank == q0.rank);
    CHECK(q1.signature == q0.signature);
    CHECK(q1.parity == q0.parity);
  }
}

TEST_CASE("invariants are isomorphism-equal under transvections") {
  Rng rng(709);
  for (const ClosedTrisectionDiagram& base :
       {cap_off(bundled::d2()), standard_closed_diagram(2, 1)}) {
    const HomologyProfile h0 = homology(base);
    const IntersectionForm q0 = intersection_form(base);
    ClosedTrisectionDiagram d = base;
    for (int step = 0; step < 6; ++step) {
      const Move m = random_twist(rng, d.surface, true);
      d = apply_move(d, m);
    }
    CHECK(homology(d) == h0);
    const IntersectionForm q1 = intersection_form(d);
    CHECK(q1.rank == q0.rank);
    CHECK(q1.signature == q0.signature);
    CHECK(q1.parity == q0.parity);
  }
}

TEST_CASE("distinguish separates d1 from d2 by parity") {
  const DistinguishVerdict v = distinguish(bundled::d1(), bundled::d2());
  CHECK(v.outcome == DistinguishVerdict::Outcome::Distinguished);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == "intersection form parity: even vs odd");
  CHECK(v.to_string().find("not diffeomorphism and handleslide equivalent") !=
        std::string::npos);
}

TEST_CASE("distinguish is inconclusive after slides") {
  Rng rng(719);
  RelativeTrisectionDiagram moved = bundled::d1();
  for (int step = 0; step < 50; ++step)
    moved = apply_move(moved, random_slide(rng, moved));
  const DistinguishVerdict v = distinguish(bundled::d1(), moved);
  CHECK(v.outcome == DistinguishVerdict::Outcome::Inconclusive);
  CHECK_FALSE(v.witness.has_value());
}

TEST_CASE("distinguish golden case: standard (2,1;0,2) against d1") {
  // outcome recorded from the computed pipeline: the capped standard diagram
  // carries diag(1,1), signature 2, while cap(d1) is hyperbolic
  const DistinguishVerdict v =
      distinguish(standard_relative_diagram(2, 1, 0, 2), bundled::d1());
  CHECK(v.outcome == DistinguishVerdict::Outcome::Distinguished);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == "intersection form signature: 2 vs 0");
}

TEST_CASE("distinguish reports a relative type mismatch as the witness") {
  const DistinguishVerdict v = distinguish(standard_relative_diagram(2, 1, 0, 2),
                                           standard_relative_diagram(2, 2, 0, 2));
  CHECK(v.outcome == DistinguishVerdict::Outcome::Distinguished);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->find("relative type") == 0);
}

TEST_CASE("distinguish propagates cap errors for p > 0") {
  const RelativeTrisectionDiagram p1 = standard_relative_diagram(2, 2, 1, 1);
  CHECK_THROWS_AS(distinguish(p1, p1), std::invalid_argument);
}

TEST_CASE("form invariants survive a unimodular change of the H2 basis") {
  Rng rng(727);
  for (const ClosedTrisectionDiagram& base :
       {cap_off(bundled::d1()), cap_off(bundled::d2())}) {
    const IntersectionForm q = intersection_form(base);
    IntMatrix u = IntMatrix::Identity(q.matrix.rows(), q.matrix.cols());
    for (int step = 0; step < 8; ++step) {
      IntMatrix e = IntMatrix::Identity(u.rows(), u.cols());
      const Int i = rand_int(rng, 0, u.rows() - 1);
      Int j = rand_int(rng, 0, u.rows() - 1);
      if (i == j) continue;
      e(i, j) = rand_int(rng, -2, 2);
      u = u * e;
    }
    REQUIRE(is_unimodular(u));
    const IntMatrix conjugated = u.transpose() * q.matrix * u;
    CHECK(matrix_rank(conjugated) == q.rank);
    CHECK(symmetric_signature(conjugated) == q.signature);
    bool even = true;
    for (Int i = 0; i < conjugated.rows(); ++i)
      if (conjugated(i, i) % 2 != 0) even = false;
    CHECK((even ? IntersectionForm::Parity::Even
                : IntersectionForm::Parity::Odd) == q.parity);
  }
}

TEST_CASE("invariant report renders every piece") {
  const InvariantReport report = invariant_report(cap_off(bundled::d1()));
  const std::string text = report.to_string();
  CHECK(text.find("closed type (2,0)") != std::string::npos);
  CHECK(text.find("H* = (Z, 0, Z^2, 0, Z)") != std::string::npos);
  CHECK(text.find("euler characteristic 4") != std::string::npos);
  CHECK(text.find("parity even") != std::string::npos);
}
