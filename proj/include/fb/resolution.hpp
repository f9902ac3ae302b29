#pragma once

#include <cstddef>
#include <vector>

#include "fb/submodule.hpp"

namespace fb {

// Graded free modules G_0..G_k with maps phi_j : G_j -> G_{j-1}.
class FreeComplex {
 public:
  FreeComplex(RingPtr ring, std::vector<std::vector<Degree>> degrees, std::vector<Matrix> maps);

  const RingPtr& ring() const noexcept { return ring_; }
  // Number of maps; spots are 0..length().
  std::size_t length() const noexcept { return maps_.size(); }
  std::size_t rank(std::size_t j) const { return j < degrees_.size() ? degrees_[j].size() : 0; }
  const std::vector<Degree>& degrees(std::size_t j) const { return degrees_[j]; }
  // phi_j for 1 <= j <= length().
  const Matrix& map(std::size_t j) const { return maps_[j - 1]; }
  const std::vector<Matrix>& maps() const noexcept { return maps_; }

  // phi_j * phi_{j+1} = 0 modulo I for every j.
  bool is_complex() const;
  // No entry of any map has a nonzero constant term.
  bool is_minimal() const;

  friend bool operator==(const FreeComplex& a, const FreeComplex& b) {
    return a.degrees_ == b.degrees_ && a.maps_ == b.maps_;
  }

 private:
  RingPtr ring_;
  std::vector<std::vector<Degree>> degrees_;
  std::vector<Matrix> maps_;
};

struct MinimalResolution {
  FreeComplex complex;
  bool minimal = true;
  std::vector<std::size_t> betti;  // ranks of G_0..G_steps
};

// Graded free resolution of the cokernel module m through homological
// degree `steps`. With `minimal` the matrices are computed minimal step by
// step; otherwise full syzygy sets are used and the complex is minimized
// afterwards (one extra step is computed so the top rank is exact).
MinimalResolution resolve(const SubmodulePresentation& m, std::size_t steps, bool minimal = true,
                          const GroebnerOptions& options = {});

// Splits off unit entries until none remain; homology is unchanged.
FreeComplex minimize(const FreeComplex& c);

// The columns of phi_{j+1} generate ker(phi_j) over R (Groebner basis
// equality of spans), for 1 <= j < length().
bool is_exact_at(const FreeComplex& c, std::size_t j, const GroebnerOptions& options = {});

// Omega_i = im(phi_i) inside G_{i-1}; Omega_0 = M.
struct SyzygyPresentation {
  std::size_t index;
  SubmodulePresentation module;
  Length length;
  int dimension;
};

SyzygyPresentation syzygy(const SubmodulePresentation& m, const MinimalResolution& res, std::size_t i);
SyzygyPresentation syzygy(const SubmodulePresentation& m, std::size_t i,
                          const GroebnerOptions& options = {});

// Minimal presentation of the cokernel: generators of G_0 and phi_1 with
// all entries in the irrelevant ideal.
Matrix minimal_presentation(const SubmodulePresentation& m, const GroebnerOptions& options = {});

}  // namespace fb
