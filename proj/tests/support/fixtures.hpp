#pragma once

#include <string>
#include <vector>

#include "fb/ring.hpp"
#include "fb/submodule.hpp"

namespace fbtest {

inline fb::RingPtr ring(std::uint64_t p, std::vector<std::string> vars,
                        std::vector<std::string> ideal) {
  return fb::QuotientRing::make(p, std::move(vars), ideal);
}

// F_p[x,y]/(x^2, xy)
inline fb::RingPtr r1(std::uint64_t p = 5) { return ring(p, {"x", "y"}, {"x^2", "x*y"}); }
// F_p[x]
inline fb::RingPtr r2(std::uint64_t p = 5) { return ring(p, {"x"}, {}); }
// F_p[x,y]/(xy)
inline fb::RingPtr r3(std::uint64_t p = 5) { return ring(p, {"x", "y"}, {"x*y"}); }
// F_p[x,y]/(x^2)
inline fb::RingPtr r4(std::uint64_t p = 5) { return ring(p, {"x", "y"}, {"x^2"}); }

inline std::vector<std::string> r5_ideal() {
  return {"x^2", "x*z", "z^2", "x*u", "z*v", "u^2", "v^2", "z*u+x*v+u*v",
          "y*u", "y*v", "y*x-z*u", "y*z-x*v"};
}
inline fb::RingPtr r5(std::uint64_t p = 101) { return ring(p, {"x", "y", "z", "u", "v"}, r5_ideal()); }

inline fb::Polynomial poly(const fb::RingPtr& r, const std::string& text) { return r->parse(text); }

inline std::vector<fb::Polynomial> polys(const fb::RingPtr& r, const std::vector<std::string>& texts) {
  std::vector<fb::Polynomial> out;
  for (const auto& t : texts) out.push_back(r->parse(t));
  return out;
}

// Matrix from rows of polynomial text; row degrees given explicitly.
inline fb::Matrix matrix(const fb::RingPtr& r, const std::vector<std::vector<std::string>>& rows,
                         std::vector<fb::Degree> row_degrees) {
  std::vector<std::vector<fb::Polynomial>> entries;
  for (const auto& row : rows) entries.push_back(polys(r, row));
  return fb::Matrix::from_rows(r->field(), r->nvars(), entries, std::move(row_degrees));
}

inline fb::ModuleElement element(const fb::RingPtr& r, const std::vector<std::string>& comps) {
  return fb::ModuleElement(polys(r, comps));
}

// R/J as a cokernel.
inline fb::SubmodulePresentation quotient(const fb::RingPtr& r, const std::vector<std::string>& gens) {
  auto g = polys(r, gens);
  return fb::SubmodulePresentation::quotient_ring_module(r, g);
}

// Residue field K = R/m.
inline fb::SubmodulePresentation residue_field(const fb::RingPtr& r) {
  auto g = r->variables();
  return fb::SubmodulePresentation::quotient_ring_module(r, g);
}

// coker((u, v, z^2)^T : R -> R^3) over R5.
inline fb::SubmodulePresentation r5_module(const fb::RingPtr& r) {
  return fb::SubmodulePresentation::cokernel(r, matrix(r, {{"u"}, {"v"}, {"z^2"}}, {0, 0, -1}));
}

}  // namespace fbtest
