#pragma once

#include <string>

#include "tricap/diagram.hpp"

namespace tricap {

// One diagram move: a handleslide within a family, or a transvection (the
// homological action x -> x + n*omega(x,c)*c of the n-fold Dehn twist along
// a curve of class c). Curve indices are 0-based.
struct Move {
  enum class Kind { Handleslide, Transvection };
  Kind kind = Kind::Handleslide;

  Family family = Family::Alpha;  // handleslide fields
  Int curve = 0;
  Int over = 0;
  Int sign = +1;

  H1Class twist;  // transvection fields
  Int power = 0;

  static Move handleslide(Family f, Int curve, Int over, Int sign);
  static Move transvection(H1Class c, Int power);
  Move inverse() const;
  std::string to_string() const;
};

// Homological shadow of a surface diffeomorphism: coordinates map by
// x -> matrix * x.
struct SymplecticMap {
  IntMatrix matrix;
};
bool preserves_pairing(const SymplecticMap& f, const SurfaceModel& s);
SymplecticMap transvection_map(const H1Class& c, Int power,
                               const SurfaceModel& s);

// family[curve] += sign * family[over]. The slid family stays homologically
// disjoint; this is asserted.
RelativeTrisectionDiagram handleslide(const RelativeTrisectionDiagram& d,
                                      Family f, Int curve, Int over, Int sign);
ClosedTrisectionDiagram handleslide(const ClosedTrisectionDiagram& d, Family f,
                                    Int curve, Int over, Int sign);

// Applies the transvection along c to every curve of every family; c must be
// primitive.
RelativeTrisectionDiagram transvection(const RelativeTrisectionDiagram& d,
                                       const H1Class& c, Int power);
ClosedTrisectionDiagram transvection(const ClosedTrisectionDiagram& d,
                                     const H1Class& c, Int power);

RelativeTrisectionDiagram apply_move(const RelativeTrisectionDiagram& d,
                                     const Move& m);
ClosedTrisectionDiagram apply_move(const ClosedTrisectionDiagram& d,
                                   const Move& m);

RelativeTrisectionDiagram apply_map(const RelativeTrisectionDiagram& d,
                                    const SymplecticMap& f);
ClosedTrisectionDiagram apply_map(const ClosedTrisectionDiagram& d,
                                  const SymplecticMap& f);

// Glue disks to all boundary circles of a homologically valid relative
// diagram with p = 0. The result is closed of type (g, k-b+1).
ClosedTrisectionDiagram cap_off(const RelativeTrisectionDiagram& d);

}  // namespace tricap
