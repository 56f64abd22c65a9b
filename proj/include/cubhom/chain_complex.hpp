#pragma once

// Free chain complexes over ordered bases and their integer homology.
//
// Generators are identified by their position in the degree-q basis; the
// builders (C1Complex, SingularComplex) own whatever the positions stand for.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cubhom/checked.hpp"
#include "cubhom/matrix.hpp"

namespace cubhom {

// Finitely generated abelian group Z^rank ⊕ Z/d1 ⊕ ... with d1 | d2 | ...,
// each di >= 2. Only constructible in canonical form.
class FGAbelianGroup {
 public:
  FGAbelianGroup() = default;
  FGAbelianGroup(std::size_t rank, std::vector<std::int64_t> torsion);

  // Drops unit factors; the rest must already form a divisibility chain.
  static FGAbelianGroup from_invariant_factors(std::size_t rank, const std::vector<std::int64_t>& factors);

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<std::int64_t>& torsion() const noexcept { return torsion_; }
  bool is_zero() const noexcept { return rank_ == 0 && torsion_.empty(); }

  // "0", "Z", "Z^3", "Z + Z/2", "Z/2 + Z/6"
  std::string to_string() const;

  friend bool operator==(const FGAbelianGroup&, const FGAbelianGroup&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<std::int64_t> torsion_;
};

bool groups_isomorphic(const FGAbelianGroup& G, const FGAbelianGroup& H);

// Formal integer combination of generators of one degree.
template <class Label>
class Chain {
 public:
  explicit Chain(int degree = 0) : degree_(degree) {}

  int degree() const noexcept { return degree_; }
  const std::map<Label, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  std::int64_t coefficient(const Label& l) const {
    auto it = terms_.find(l);
    return it == terms_.end() ? 0 : it->second;
  }

  void add(const Label& l, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(l, c);
    if (!inserted) {
      it->second = cubhom::add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  Chain& operator+=(const Chain& other) {
    for (const auto& [l, c] : other.terms_) add(l, c);
    return *this;
  }

  Chain scaled(std::int64_t k) const {
    Chain out(degree_);
    for (const auto& [l, c] : terms_) out.add(l, mul(k, c));
    return out;
  }

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  int degree_;
  std::map<Label, std::int64_t> terms_;
};

class ChainComplex {
 public:
  ChainComplex() : ChainComplex(std::vector<std::size_t>{0}, {}) {}

  // basis_sizes[q] for 0 <= q <= max_degree; boundaries[q-1] is ∂_q of shape
  // basis_sizes[q-1] × basis_sizes[q].
  ChainComplex(std::vector<std::size_t> basis_sizes, std::vector<SparseMatrix> boundaries);

  int max_degree() const noexcept { return static_cast<int>(sizes_.size()) - 1; }

  // Zero outside [0, max_degree].
  std::size_t basis_size(int q) const;

  // ∂_q for 1 <= q <= max_degree; zero matrices of the right shape elsewhere.
  SparseMatrix boundary(int q) const;

  // ∂_{q-1}∘∂_q = 0 for every q.
  bool is_complex() const;

 private:
  std::vector<std::size_t> sizes_;
  std::vector<SparseMatrix> boundaries_;
};

// Rank and nontrivial invariant factors of an integer matrix.
struct MatrixInvariants {
  std::size_t rank = 0;
  std::vector<std::int64_t> torsion;
};

// Sparse column reduction to a lattice basis of the column space followed by
// dense SNF of whatever does not split off as unit pivots.
MatrixInvariants matrix_invariants(const SparseMatrix& M);

// H_q for 0 <= q <= max_degree. Throws NotAComplex when ∂∘∂ != 0.
std::vector<FGAbelianGroup> homology(const ChainComplex& C);

// Per-degree membership masks of a subcomplex; degrees beyond the vector
// are empty.
using SubBasis = std::vector<std::vector<bool>>;

// C / sub. Throws NotSubcomplex when sub is not closed under ∂.
ChainComplex quotient_complex(const ChainComplex& C, const SubBasis& sub);

// phi[q] : C_q -> D_q for 0 <= q < phi.size(); checks ∂^D_q φ_q = φ_{q-1} ∂^C_q.
bool verify_chain_map(const std::vector<SparseMatrix>& phi, const ChainComplex& C, const ChainComplex& D);

}  // namespace cubhom
