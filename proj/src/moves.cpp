#include "tricap/moves.hpp"

#include <sstream>

namespace tricap {

Move Move::handleslide(Family f, Int curve, Int over, Int sign) {
  Move m;
  m.kind = Kind::Handleslide;
  m.family = f;
  m.curve = curve;
  m.over = over;
  m.sign = sign;
  return m;
}

Move Move::transvection(H1Class c, Int power) {
  Move m;
  m.kind = Kind::Transvection;
  m.twist = std::move(c);
  m.power = power;
  return m;
}

Move Move::inverse() const {
  Move m = *this;
  if (kind == Kind::Handleslide)
    m.sign = -sign;
  else
    m.power = -power;
  return m;
}

std::string Move::to_string() const {
  std::ostringstream os;
  if (kind == Kind::Handleslide) {
    os << "slide " << family_name(family) << "[" << curve << "] "
       << (sign > 0 ? "+" : "-") << " " << family_name(family) << "[" << over
       << "]";
  } else {
    os << "twist^" << power << " along (";
    for (Int i = 0; i < twist.dim(); ++i) {
      if (i) os << ",";
      os << twist.coords[i];
    }
    os << ")";
  }
  return os.str();
}

bool preserves_pairing(const SymplecticMap& f, const SurfaceModel& s) {
  const Int n = s.coordinate_dim();
  if (f.matrix.rows() != n || f.matrix.cols() != n) return false;
  if (!is_unimodular(f.matrix)) return false;
  const IntMatrix j = symplectic_gram(s);
  return f.matrix.transpose() * j * f.matrix == j;
}

SymplecticMap transvection_map(const H1Class& c, Int power,
                               const SurfaceModel& s) {
  const Int n = s.coordinate_dim();
  if (c.dim() != n) throw std::invalid_argument("incompatible surface");
  if (!c.is_primitive())
    throw std::invalid_argument("twisting class must be primitive");
  // T x = x + power * omega(x,c) * c = (I + power * c (Jc)^T) x
  const IntVector jc = symplectic_gram(s) * c.coords;
  IntMatrix t = IntMatrix::Identity(n, n);
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < n; ++j)
      t(i, j) = checked_add(t(i, j),
                            checked_mul(power, checked_mul(c.coords[i], jc[j])));
  return SymplecticMap{std::move(t)};
}

namespace {

template <typename Diagram>
Diagram slide_impl(const Diagram& d, Family f, Int curve, Int over, Int sign) {
  if (curve == over)
    throw std::invalid_argument("cannot slide a curve over itself");
  const Int n = static_cast<Int>(d.family(f).size());
  if (curve < 0 || curve >= n || over < 0 || over >= n)
    throw std::out_of_range("curve index out of range");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("slide sign must be +1 or -1");

  Diagram out = d;
  auto& fam = out.family(f);
  if (sign > 0)
    fam[curve] = fam[curve] + fam[over];
  else
    fam[curve] = fam[curve] - fam[over];

  for (Int i = 0; i < n; ++i)
    if (i != curve &&
        symplectic_pairing(fam[curve], fam[i], out.surface) != 0)
      throw std::logic_error("handleslide broke intra-family disjointness");
  return out;
}

template <typename Diagram>
Diagram transvect_impl(const Diagram& d, const H1Class& c, Int power) {
  if (c.dim() != d.surface.coordinate_dim())
    throw std::invalid_argument("incompatible surface");
  if (!c.is_primitive())
    throw std::invalid_argument("twisting class must be primitive");
  Diagram out = d;
  for (Family f : kFamilies)
    for (H1Class& x : out.family(f)) {
      const Int w = symplectic_pairing(x, c, d.surface);
      x = x + (checked_mul(power, w)) * c;
    }
  return out;
}

template <typename Diagram>
Diagram map_impl(const Diagram& d, const SymplecticMap& f) {
  if (!preserves_pairing(f, d.surface))
    throw std::invalid_argument("map does not preserve the pairing");
  Diagram out = d;
  for (Family fam : kFamilies)
    for (H1Class& x : out.family(fam)) x = H1Class(f.matrix * x.coords);
  return out;
}

template <typename Diagram>
Diagram move_impl(const Diagram& d, const Move& m) {
  if (m.kind == Move::Kind::Handleslide)
    return slide_impl(d, m.family, m.curve, m.over, m.sign);
  return transvect_impl(d, m.twist, m.power);
}

}  // namespace

RelativeTrisectionDiagram handleslide(const RelativeTrisectionDiagram& d,
                                      Family f, Int curve, Int over, Int sign) {
  return slide_impl(d, f, curve, over, sign);
}
ClosedTrisectionDiagram handleslide(const ClosedTrisectionDiagram& d, Family f,
                                    Int curve, Int over, Int sign) {
  return slide_impl(d, f, curve, over, sign);
}
RelativeTrisectionDiagram transvection(const RelativeTrisectionDiagram& d,
                                       const H1Class& c, Int power) {
  return transvect_impl(d, c, power);
}
ClosedTrisectionDiagram transvection(const ClosedTrisectionDiagram& d,
                                     const H1Class& c, Int power) {
  return transvect_impl(d, c, power);
}
RelativeTrisectionDiagram apply_move(const RelativeTrisectionDiagram& d,
                                     const Move& m) {
  return move_impl(d, m);
}
ClosedTrisectionDiagram apply_move(const ClosedTrisectionDiagram& d,
                                   const Move& m) {
  return move_impl(d, m);
}
RelativeTrisectionDiagram apply_map(const RelativeTrisectionDiagram& d,
                                    const SymplecticMap& f) {
  return map_impl(d, f);
}
ClosedTrisectionDiagram apply_map(const ClosedTrisectionDiagram& d,
                                  const SymplecticMap& f) {
  return map_impl(d, f);
}

ClosedTrisectionDiagram cap_off(const RelativeTrisectionDiagram& d) {
  const ValidationReport report = validate_relative(d);
  if (!report.ok)
    throw std::invalid_argument("cap-off requires a homologically valid diagram\n" +
                                report.to_string());
  if (report.inferred_type->p != 0)
    throw std::invalid_argument("cap-off requires p = 0");

  auto [surface, alpha] = cap_classes(d.surface, d.alpha);
  auto beta = cap_classes(d.surface, d.beta).second;
  auto gamma = cap_classes(d.surface, d.gamma).second;
  return ClosedTrisectionDiagram(surface, std::move(alpha), std::move(beta),
                                 std::move(gamma));
}

}  // namespace tricap
