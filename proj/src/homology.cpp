#include "fb/homology.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "fb/error.hpp"

namespace fb {

namespace {

Matrix identity(const RingPtr& ring, const std::vector<Degree>& degrees) {
  std::vector<ModuleElement> cols;
  for (std::size_t k = 0; k < degrees.size(); ++k)
    cols.push_back(ModuleElement::basis_vector(ring->field(), ring->nvars(), degrees.size(), k));
  return Matrix(ring->field(), ring->nvars(), degrees, degrees, std::move(cols));
}

std::vector<Degree> spot_degrees(const FreeComplex& c, std::size_t i) {
  return i <= c.length() ? c.degrees(i) : std::vector<Degree>{};
}

SubmodulePresentation zero_module(const RingPtr& ring) {
  return SubmodulePresentation::cokernel(ring, Matrix::zero(ring->field(), ring->nvars(), {}, {}));
}

// Generators of ker(phi_i) inside G_i (all of G_i when phi_i is zero).
Matrix kernel_at(const FreeComplex& c, std::size_t i, const GroebnerOptions& options) {
  auto degrees = spot_degrees(c, i);
  if (i == 0 || i > c.length()) return identity(c.ring(), degrees);
  return kernel_over_quotient(c.map(i), c.ring(), options);
}

Matrix incoming(const FreeComplex& c, std::size_t i) {
  if (i + 1 <= c.length()) return c.map(i + 1);
  return Matrix::zero(c.ring()->field(), c.ring()->nvars(), spot_degrees(c, i), {});
}

std::size_t rank_mod_p(std::vector<std::vector<Coeff>> rows, const PrimeField& f) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    Coeff inv = f.inv(rows[r][c]);
    for (auto& v : rows[r]) v = f.mul(v, inv);
    for (std::size_t k = r + 1; k < rows.size(); ++k) {
      Coeff factor = rows[k][c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) rows[k][j] = f.sub(rows[k][j], f.mul(factor, rows[r][j]));
    }
    ++r;
  }
  return r;
}

// Standard monomials of R in each degree, computed on demand.
class StandardBasis {
 public:
  explicit StandardBasis(const RingPtr& ring) : ring_(ring) {
    auto leads = ring->ideal_basis().leading_monomials();
    if (!leads.empty()) leads_ = leads[0];
  }

  const std::vector<Monomial>& of_degree(Degree s) {
    auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;
    std::vector<Monomial> out;
    if (s >= 0) {
      const std::size_t n = ring_->nvars();
      std::vector<Exponent> e(n, 0);
      std::function<void(std::size_t, Degree)> rec = [&](std::size_t k, Degree left) {
        if (k + 1 >= n) {
          if (n == 0) {
            if (left == 0) out.push_back(Monomial(0));
            return;
          }
          e[k] = static_cast<Exponent>(left);
          Monomial m{std::span<const Exponent>(e)};
          for (const auto& l : leads_)
            if (l.divides(m)) return;
          out.push_back(std::move(m));
          return;
        }
        for (Degree v = left; v >= 0; --v) {
          e[k] = static_cast<Exponent>(v);
          rec(k + 1, left - v);
        }
        e[k] = 0;
      };
      rec(0, s);
    }
    return cache_.emplace(s, std::move(out)).first->second;
  }

  std::size_t index(Degree s, const Monomial& m) {
    const auto& b = of_degree(s);
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i] == m) return i;
    throw Error(ErrorKind::LiftFailure, "normal form has a non-standard monomial");
  }

 private:
  RingPtr ring_;
  std::vector<Monomial> leads_;
  std::map<Degree, std::vector<Monomial>> cache_;
};

std::size_t free_dimension(StandardBasis& basis, const std::vector<Degree>& degrees, Degree t) {
  std::size_t n = 0;
  for (Degree d : degrees) n += basis.of_degree(t - d).size();
  return n;
}

// Rank of the degree-t strand of a: G_src -> G_dst.
std::size_t strand_rank(const RingPtr& ring, StandardBasis& basis, const Matrix& a, Degree t) {
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  for (Degree d : a.row_degrees()) {
    offsets.push_back(total);
    total += basis.of_degree(t - d).size();
  }
  if (total == 0) return 0;
  std::vector<std::vector<Coeff>> rows;
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const auto& mons = basis.of_degree(t - a.col_degrees()[k]);
    for (const auto& m : mons) {
      std::vector<Coeff> v(total, 0);
      bool any = false;
      for (std::size_t r = 0; r < a.rows(); ++r) {
        const Polynomial& entry = a.entry(r, k);
        if (entry.is_zero()) continue;
        Polynomial img = ring->reduce(entry.times_term(1, m));
        for (const auto& term : img.terms()) {
          v[offsets[r] + basis.index(t - a.row_degrees()[r], term.mono)] = term.coeff;
          any = true;
        }
      }
      if (any) rows.push_back(std::move(v));
    }
  }
  return rank_mod_p(std::move(rows), ring->field());
}

}  // namespace

SubmodulePresentation homology_presentation(const FreeComplex& c, std::size_t i,
                                            const GroebnerOptions& options) {
  const RingPtr& ring = c.ring();
  if (i > c.length() || c.rank(i) == 0) return zero_module(ring);
  Matrix in = incoming(c, i);
  if (i == 0) return SubmodulePresentation(ring, in, PresentationMode::Cokernel, options);
  Matrix kernel = kernel_at(c, i, options);
  if (kernel.cols() == 0) return zero_module(ring);
  Lifter lifter(ring, kernel, options);
  std::vector<ModuleElement> cols;
  std::vector<Degree> col_degrees;
  for (std::size_t k = 0; k < in.cols(); ++k) {
    auto lifted = lifter.lift(in.column(k));
    if (!lifted) throw Error(ErrorKind::LiftFailure, "image column is not in the kernel");
    cols.push_back(std::move(*lifted));
    col_degrees.push_back(in.col_degrees()[k]);
  }
  Matrix syz = lifter.syzygies();
  for (std::size_t k = 0; k < syz.cols(); ++k) {
    cols.push_back(syz.column(k));
    col_degrees.push_back(syz.col_degrees()[k]);
  }
  Matrix pres(ring->field(), ring->nvars(), kernel.col_degrees(), std::move(col_degrees), std::move(cols));
  return SubmodulePresentation(ring, std::move(pres), PresentationMode::Cokernel, options);
}

Length homology_length(const FreeComplex& c, std::size_t i, const GroebnerOptions& options) {
  return homology_presentation(c, i, options).length();
}

HilbertSeries homology_series_by_difference(const FreeComplex& c, std::size_t i,
                                            const GroebnerOptions& options) {
  const RingPtr& ring = c.ring();
  if (i > c.length() || c.rank(i) == 0) return HilbertSeries{ring->nvars(), {}};
  SubmodulePresentation by_image(ring, incoming(c, i), PresentationMode::Cokernel, options);
  SubmodulePresentation by_kernel(ring, kernel_at(c, i, options), PresentationMode::Cokernel, options);
  HilbertSeries out = by_image.hilbert_series();
  out -= by_kernel.hilbert_series();
  return out;
}

FreeComplex change_ring(const FreeComplex& c, const RingPtr& target) {
  if (target->nvars() != c.ring()->nvars() || !(target->field() == c.ring()->field()))
    throw Error(ErrorKind::AmbientMismatch, "target ring has a different polynomial ring");
  std::vector<std::vector<Degree>> degrees;
  for (std::size_t j = 0; j <= c.length(); ++j) degrees.push_back(c.degrees(j));
  std::vector<Matrix> maps;
  for (const auto& m : c.maps()) maps.push_back(target->reduce(m));
  return FreeComplex(target, std::move(degrees), std::move(maps));
}

FreeComplex dual_complex(const FreeComplex& c) {
  const std::size_t n = c.length();
  std::vector<std::vector<Degree>> degrees;
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Degree> d = c.degrees(n - k);
    for (auto& v : d) v = -v;
    degrees.push_back(std::move(d));
  }
  std::vector<Matrix> maps;
  for (std::size_t k = 1; k <= n; ++k) maps.push_back(c.map(n - k + 1).transpose());
  return FreeComplex(c.ring(), std::move(degrees), std::move(maps));
}

std::uint64_t tor_length(const MinimalResolution& res, std::size_t i, unsigned e,
                         const Coefficients& n, const GroebnerOptions& options) {
  if (res.complex.length() < i + 1)
    throw Error(ErrorKind::AmbientMismatch, "resolution too short for the requested Tor");
  const RingPtr& ring = res.complex.ring();
  FreeComplex twisted = twist_complex(res.complex, BracketLevel(ring->characteristic(), e));
  if (n.prime) twisted = change_ring(twisted, ring->quotient_by(*n.prime));
  return homology_length(twisted, i, options).value();
}

std::uint64_t tor_length(const SubmodulePresentation& m, std::size_t i, unsigned e,
                         const Coefficients& n, const GroebnerOptions& options) {
  if (m.dimension() > 0) throw Error(ErrorKind::InfiniteLength, "module has positive dimension");
  return tor_length(resolve(m, i + 1, true, options), i, e, n, options);
}

std::uint64_t ext_length(const MinimalResolution& res, std::size_t i, unsigned e,
                         const GroebnerOptions& options) {
  const std::size_t n = res.complex.length();
  if (n < i + 1) throw Error(ErrorKind::AmbientMismatch, "resolution too short for the requested Ext");
  const RingPtr& ring = res.complex.ring();
  FreeComplex twisted = twist_complex(res.complex, BracketLevel(ring->characteristic(), e));
  return homology_length(dual_complex(twisted), n - i, options).value();
}

std::uint64_t ext_length(const SubmodulePresentation& m, std::size_t i, unsigned e,
                         const GroebnerOptions& options) {
  if (m.dimension() > 0) throw Error(ErrorKind::InfiniteLength, "module has positive dimension");
  return ext_length(resolve(m, i + 1, true, options), i, e, options);
}

Degree default_degree_bound(const FreeComplex& c) {
  Degree entry = 0, twist = 0;
  for (std::size_t j = 0; j <= c.length(); ++j)
    for (Degree d : c.degrees(j)) twist = std::max(twist, d);
  for (std::size_t j = 1; j <= c.length(); ++j) {
    const Matrix& m = c.map(j);
    for (Degree cd : m.col_degrees())
      for (Degree rd : m.row_degrees()) entry = std::max(entry, cd - rd);
  }
  return entry * static_cast<Degree>(std::max<std::size_t>(c.length(), 1)) + twist + 10;
}

OracleResult degreewise_homology_oracle(const FreeComplex& c, std::size_t i,
                                        std::optional<Degree> degree_bound, std::size_t window) {
  const Degree bound = degree_bound.value_or(default_degree_bound(c));
  auto degrees = spot_degrees(c, i);
  if (degrees.empty()) return {0, true, bound};
  const RingPtr& ring = c.ring();
  StandardBasis basis(ring);
  const Degree low = *std::min_element(degrees.begin(), degrees.end());
  std::uint64_t total = 0;
  Degree last_nonzero = low - 1;
  for (Degree t = low; t <= bound; ++t) {
    std::size_t dim = free_dimension(basis, degrees, t);
    if (dim == 0) continue;
    std::size_t out = (i >= 1 && i <= c.length()) ? strand_rank(ring, basis, c.map(i), t) : 0;
    std::size_t in = (i + 1 <= c.length()) ? strand_rank(ring, basis, c.map(i + 1), t) : 0;
    std::size_t contribution = dim - out - in;
    if (contribution != 0) last_nonzero = t;
    total += contribution;
  }
  return {total, bound - last_nonzero >= static_cast<Degree>(window), bound};
}

bool finite_pd_certificate(const SubmodulePresentation& m, unsigned e, std::size_t ring_depth,
                           const GroebnerOptions& options) {
  if (m.dimension() > 0) throw Error(ErrorKind::InfiniteLength, "module has positive dimension");
  MinimalResolution res = resolve(m, 2 * ring_depth + 2, true, options);
  for (std::size_t i = ring_depth + 1; i <= 2 * ring_depth + 1; ++i)
    if (tor_length(res, i, e, Coefficients::ring(), options) != 0) return false;
  return true;
}

std::size_t depth(const RingPtr& ring, const GroebnerOptions& options) {
  const auto d = static_cast<std::size_t>(ring->dimension());
  auto vars = ring->variables();
  auto k = SubmodulePresentation::quotient_ring_module(ring, vars);
  MinimalResolution res = resolve(k, d + 1, true, options);
  for (std::size_t i = 0; i <= d; ++i)
    if (ext_length(res, i, 0, options) != 0) return i;
  return d;
}

}  // namespace fb
