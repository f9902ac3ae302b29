#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fb/frobenius.hpp"
#include "fb/resolution.hpp"

namespace fb {

// H_i(C) = ker(phi_i) / im(phi_{i+1}) presented as coker([C | Syz(K)])
// over the kernel generators K. phi_0 and phi_{length+1} are zero.
SubmodulePresentation homology_presentation(const FreeComplex& c, std::size_t i,
                                            const GroebnerOptions& options = {});
Length homology_length(const FreeComplex& c, std::size_t i, const GroebnerOptions& options = {});

// Hilbert series of H_i from HS(F/im) - HS(F/ker): an independent route to
// the same numbers, used for cross-checks.
HilbertSeries homology_series_by_difference(const FreeComplex& c, std::size_t i,
                                            const GroebnerOptions& options = {});

// The complex with matrices read in `target`, which must be a quotient of
// the same polynomial ring (e.g. R/p).
FreeComplex change_ring(const FreeComplex& c, const RingPtr& target);

// Hom(C, R) as a homological complex: spot k holds G_{N-k}^* where N is the
// length of C, so H^i(Hom(C,R)) = H_{N-i}.
FreeComplex dual_complex(const FreeComplex& c);

// Coefficients of Tor: R itself, or R/p for an ideal p (given by generators).
struct Coefficients {
  std::optional<std::vector<Polynomial>> prime;
  static Coefficients ring() { return {}; }
  static Coefficients quotient(std::vector<Polynomial> gens) { return {std::move(gens)}; }
};

// lambda(Tor_i(M, ^e N)) from a resolution through spot >= i + 1.
std::uint64_t tor_length(const MinimalResolution& res, std::size_t i, unsigned e,
                         const Coefficients& n = Coefficients::ring(), const GroebnerOptions& options = {});
// Same, resolving M first; throws Error(InfiniteLength) when dim M > 0.
std::uint64_t tor_length(const SubmodulePresentation& m, std::size_t i, unsigned e,
                         const Coefficients& n = Coefficients::ring(), const GroebnerOptions& options = {});

// lambda(Ext^i(M, ^e R)) from a resolution through spot >= i + 1.
std::uint64_t ext_length(const MinimalResolution& res, std::size_t i, unsigned e,
                         const GroebnerOptions& options = {});
std::uint64_t ext_length(const SubmodulePresentation& m, std::size_t i, unsigned e,
                         const GroebnerOptions& options = {});

struct OracleResult {
  std::uint64_t value;     // sum of dim ker - dim im over degrees <= bound
  bool stabilized;         // the last `window` degrees contributed nothing
  Degree bound;
};

// Linear algebra on standard-monomial bases, degree by degree.
OracleResult degreewise_homology_oracle(const FreeComplex& c, std::size_t i,
                                        std::optional<Degree> degree_bound = std::nullopt,
                                        std::size_t window = 3);
// Maximal entry degree times length plus the largest twist, plus 10.
Degree default_degree_bound(const FreeComplex& c);

// Tor_i(M, ^e R) = 0 for i = t+1 .. 2t+1 (t = depth R): a certificate of
// finite projective dimension.
bool finite_pd_certificate(const SubmodulePresentation& m, unsigned e, std::size_t ring_depth,
                           const GroebnerOptions& options = {});

// depth R: least i with Ext^i(K, R) != 0.
std::size_t depth(const RingPtr& ring, const GroebnerOptions& options = {});

}  // namespace fb
