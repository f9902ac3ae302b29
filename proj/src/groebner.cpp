#include "fb/groebner.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "fb/error.hpp"

namespace fb {

namespace {

struct Lead {
  std::size_t pos;
  Monomial mono;
};

// Reduction against a growing list of elements, indexed by leading position.
class Reducer {
 public:
  explicit Reducer(std::size_t rank) : by_position_(rank) {}

  void add(const ModuleElement& g) {
    std::size_t pos = g.lead_position();
    by_position_[pos].push_back(elements_.size());
    elements_.push_back(&g);
  }

  const ModuleElement* find_divisor(std::size_t pos, const Monomial& m) const {
    for (std::size_t idx : by_position_[pos]) {
      const ModuleElement* g = elements_[idx];
      if (g->lead().mono.divides(m)) return g;
    }
    return nullptr;
  }

  ModuleElement reduce(ModuleElement v) const {
    const PrimeField& field = v.field();
    for (std::size_t k = 0; k < v.rank(); ++k) {
      if (by_position_[k].empty()) continue;
      std::size_t i = 0;
      while (i < v[k].size()) {
        const Term& t = v[k].terms()[i];
        const ModuleElement* g = find_divisor(k, t.mono);
        if (g == nullptr) {
          ++i;
          continue;
        }
        const Term& gl = g->lead();
        Coeff c = field.neg(field.mul(t.coeff, field.inv(gl.coeff)));
        Monomial m = t.mono.quotient(gl.mono);
        v = v.add_multiple(*g, c, m);
      }
    }
    return v;
  }

 private:
  std::vector<std::vector<std::size_t>> by_position_;
  std::vector<const ModuleElement*> elements_;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  std::size_t pos;
  Monomial lcm;
  Degree degree;
};

bool lead_less(const ModuleElement& a, const ModuleElement& b) {
  return compare_pot(a.lead_position(), a.lead().mono, b.lead_position(), b.lead().mono) < 0;
}

std::vector<ModuleElement> interreduce(const PrimeField& field, std::size_t rank,
                                       std::vector<ModuleElement> elems) {
  // Keep elements whose leading term is not divisible by another's.
  std::vector<ModuleElement> kept;
  for (std::size_t a = 0; a < elems.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < elems.size() && !redundant; ++b) {
      if (a == b || elems[a].lead_position() != elems[b].lead_position()) continue;
      const Monomial& ma = elems[a].lead().mono;
      const Monomial& mb = elems[b].lead().mono;
      if (mb.divides(ma) && (!(ma == mb) || b < a)) redundant = true;
    }
    if (!redundant) kept.push_back(elems[a]);
  }
  std::vector<ModuleElement> reduced;
  for (std::size_t a = 0; a < kept.size(); ++a) {
    Reducer others(rank);
    for (std::size_t b = 0; b < kept.size(); ++b)
      if (b != a) others.add(kept[b]);
    // The leading term stays: no other leading term divides it.
    reduced.push_back(others.reduce(kept[a]).monic());
  }
  (void)field;
  std::sort(reduced.begin(), reduced.end(), lead_less);
  return reduced;
}

}  // namespace

GroebnerBasis::GroebnerBasis(const PrimeField& field, std::size_t nvars,
                             std::vector<Degree> row_degrees, std::vector<ModuleElement> elements)
    : field_(field), nvars_(nvars), row_degrees_(std::move(row_degrees)),
      elements_(std::move(elements)), by_position_(row_degrees_.size()) {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    by_position_[elements_[i].lead_position()].push_back(i);
}

bool GroebnerBasis::is_unit() const {
  for (std::size_t k = 0; k < rank(); ++k) {
    bool found = false;
    for (std::size_t i : by_position_[k])
      if (elements_[i].lead().mono.is_one()) found = true;
    if (!found) return false;
  }
  return true;
}

ModuleElement GroebnerBasis::normal_form(const ModuleElement& v) const {
  if (v.rank() != rank())
    throw Error(ErrorKind::AmbientMismatch, "normal form: element rank " +
                                                std::to_string(v.rank()) + " vs basis rank " +
                                                std::to_string(rank()));
  Reducer r(rank());
  for (const auto& g : elements_) r.add(g);
  return r.reduce(v);
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (rank() != 1) throw Error(ErrorKind::AmbientMismatch, "polynomial reduced by a module basis");
  return normal_form(ModuleElement(std::vector<Polynomial>{f}))[0];
}

std::vector<std::vector<Monomial>> GroebnerBasis::leading_monomials() const {
  std::vector<std::vector<Monomial>> out(rank());
  for (const auto& g : elements_) out[g.lead_position()].push_back(g.lead().mono);
  return out;
}

bool GroebnerBasis::satisfies_buchberger_criterion() const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    for (std::size_t j = i + 1; j < elements_.size(); ++j) {
      if (elements_[i].lead_position() != elements_[j].lead_position()) continue;
      if (!normal_form(s_polynomial(elements_[i], elements_[j])).is_zero()) return false;
    }
  return true;
}

ModuleElement s_polynomial(const ModuleElement& f, const ModuleElement& g) {
  const PrimeField& field = f.field();
  const Term& fl = f.lead();
  const Term& gl = g.lead();
  Monomial l = fl.mono.lcm(gl.mono);
  ModuleElement s(field, f.nvars(), f.rank());
  s = s.add_multiple(f, field.inv(fl.coeff), l.quotient(fl.mono));
  s = s.add_multiple(g, field.neg(field.inv(gl.coeff)), l.quotient(gl.mono));
  return s;
}

BuchbergerResult buchberger(const PrimeField& field, std::size_t nvars,
                            std::vector<Degree> row_degrees,
                            std::span<const ModuleElement> fixed,
                            std::span<const ModuleElement> generators,
                            const GroebnerOptions& options) {
  const std::size_t rank = row_degrees.size();
  struct Input {
    Degree degree;
    int kind;  // 0 fixed, 1 user
    std::size_t index;
  };
  std::vector<Input> inputs;
  auto enqueue = [&](std::span<const ModuleElement> gens, int kind) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].rank() != rank)
        throw Error(ErrorKind::AmbientMismatch, "generator rank differs from ambient rank");
      if (gens[i].is_zero()) continue;
      auto d = gens[i].degree(row_degrees);
      if (!d) throw Error(ErrorKind::NotHomogeneous, "generator is not homogeneous");
      inputs.push_back({*d, kind, i});
    }
  };
  enqueue(fixed, 0);
  enqueue(generators, 1);
  std::stable_sort(inputs.begin(), inputs.end(), [](const Input& a, const Input& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.kind < b.kind;
  });

  std::vector<ModuleElement> basis;
  basis.reserve(64);
  std::vector<Pair> pairs;
  std::vector<std::size_t> minimal;
  const bool ideal_case = rank == 1;

  // Elements are held by index; the reducer stores pointers, so rebuild it
  // whenever the vector may reallocate.
  auto make_reducer = [&]() {
    Reducer r(rank);
    for (const auto& g : basis) r.add(g);
    return r;
  };
  Reducer reducer = make_reducer();
  std::size_t reducer_capacity = basis.capacity();

  auto insert = [&](ModuleElement h) {
    h = h.monic();
    const std::size_t k = basis.size();
    const std::size_t pos = h.lead_position();
    const Monomial& lk = h.lead().mono;
    // Criterion B on existing pairs.
    std::erase_if(pairs, [&](const Pair& p) {
      if (p.pos != pos || !lk.divides(p.lcm)) return false;
      Monomial li = basis[p.i].lead().mono.lcm(lk);
      Monomial lj = basis[p.j].lead().mono.lcm(lk);
      return !(li == p.lcm) && !(lj == p.lcm);
    });
    // Candidate new pairs.
    std::vector<Pair> fresh;
    std::vector<bool> coprime;
    for (std::size_t i = 0; i < k; ++i) {
      if (basis[i].lead_position() != pos) continue;
      const Monomial& li = basis[i].lead().mono;
      Monomial l = li.lcm(lk);
      fresh.push_back({i, k, pos, l, static_cast<Degree>(l.degree()) + row_degrees[pos]});
      coprime.push_back(ideal_case && li.coprime(lk));
    }
    // Criterion M: drop pairs whose lcm is a proper multiple of another's.
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a)
      for (std::size_t b = 0; b < fresh.size(); ++b)
        if (a != b && fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm))
          keep[a] = false;
    // Criterion F and the product criterion over groups of equal lcm.
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      bool group_coprime = coprime[a];
      for (std::size_t b = a + 1; b < fresh.size(); ++b) {
        if (keep[b] && fresh[b].lcm == fresh[a].lcm) {
          group_coprime = group_coprime || coprime[b];
          keep[b] = false;
        }
      }
      if (group_coprime) keep[a] = false;
    }
    for (std::size_t a = 0; a < fresh.size(); ++a)
      if (keep[a]) pairs.push_back(std::move(fresh[a]));
    basis.push_back(std::move(h));
    if (basis.size() > options.max_basis_size)
      throw Error(ErrorKind::ResourceBound,
                  "Groebner basis exceeded " + std::to_string(options.max_basis_size) +
                      " elements");
    if (basis.capacity() != reducer_capacity) {
      reducer = make_reducer();
      reducer_capacity = basis.capacity();
    } else {
      reducer.add(basis.back());
    }
  };

  std::size_t next_input = 0;
  while (next_input < inputs.size() || !pairs.empty()) {
    Degree deg = std::numeric_limits<Degree>::max();
    for (const auto& p : pairs) deg = std::min(deg, p.degree);
    if (next_input < inputs.size()) deg = std::min(deg, inputs[next_input].degree);

    // S-pairs of this degree, in ascending lcm order for determinism.
    std::vector<Pair> batch;
    std::erase_if(pairs, [&](Pair& p) {
      if (p.degree != deg) return false;
      batch.push_back(std::move(p));
      return true;
    });
    std::sort(batch.begin(), batch.end(), [](const Pair& a, const Pair& b) {
      int c = compare_pot(a.pos, a.lcm, b.pos, b.lcm);
      if (c != 0) return c < 0;
      return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    for (const auto& p : batch) {
      ModuleElement s = reducer.reduce(s_polynomial(basis[p.i], basis[p.j]));
      if (!s.is_zero()) insert(std::move(s));
    }
    while (next_input < inputs.size() && inputs[next_input].degree == deg) {
      const Input& in = inputs[next_input++];
      const ModuleElement& g = in.kind == 0 ? fixed[in.index] : generators[in.index];
      ModuleElement r = reducer.reduce(g);
      if (r.is_zero()) continue;
      if (in.kind == 1) minimal.push_back(in.index);
      insert(std::move(r));
    }
  }

  auto reduced = interreduce(field, rank, std::move(basis));
  return {GroebnerBasis(field, nvars, std::move(row_degrees), std::move(reduced)),
          std::move(minimal)};
}

}  // namespace fb
