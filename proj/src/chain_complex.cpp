#include "cubhom/chain_complex.hpp"

#include <algorithm>
#include <future>
#include <limits>

#include "cubhom/snf.hpp"

namespace cubhom {

FGAbelianGroup::FGAbelianGroup(std::size_t rank, std::vector<std::int64_t> torsion)
    : rank_(rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) fail(ErrorCode::PreconditionViolated, "torsion coefficient below 2");
    if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
      fail(ErrorCode::PreconditionViolated, "torsion coefficients must form a divisibility chain");
  }
}

FGAbelianGroup FGAbelianGroup::from_invariant_factors(std::size_t rank,
                                                      const std::vector<std::int64_t>& factors) {
  std::vector<std::int64_t> t;
  for (auto f : factors) {
    if (f < 1) fail(ErrorCode::PreconditionViolated, "invariant factor must be positive");
    if (f > 1) t.push_back(f);
  }
  return FGAbelianGroup(rank, std::move(t));
}

std::string FGAbelianGroup::to_string() const {
  std::string out;
  if (rank_ == 1) out = "Z";
  else if (rank_ > 1) out = "Z^" + std::to_string(rank_);
  for (auto d : torsion_) {
    if (!out.empty()) out += " + ";
    out += "Z/" + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

bool groups_isomorphic(const FGAbelianGroup& G, const FGAbelianGroup& H) {
  return G.rank() == H.rank() && G.torsion() == H.torsion();
}

ChainComplex::ChainComplex(std::vector<std::size_t> basis_sizes, std::vector<SparseMatrix> boundaries)
    : sizes_(std::move(basis_sizes)), boundaries_(std::move(boundaries)) {
  if (sizes_.empty()) sizes_.push_back(0);
  if (boundaries_.size() + 1 != sizes_.size())
    fail(ErrorCode::ShapeMismatch, "need one boundary matrix per positive degree");
  for (std::size_t q = 1; q < sizes_.size(); ++q) {
    const SparseMatrix& d = boundaries_[q - 1];
    if (d.rows() != sizes_[q - 1] || d.cols() != sizes_[q])
      fail(ErrorCode::ShapeMismatch, "boundary " + std::to_string(q) + " has the wrong shape");
  }
}

std::size_t ChainComplex::basis_size(int q) const {
  if (q < 0 || q > max_degree()) return 0;
  return sizes_[static_cast<std::size_t>(q)];
}

SparseMatrix ChainComplex::boundary(int q) const {
  if (q >= 1 && q <= max_degree()) return boundaries_[static_cast<std::size_t>(q - 1)];
  return SparseMatrix(basis_size(q - 1), basis_size(q));
}

bool ChainComplex::is_complex() const {
  for (int q = 2; q <= max_degree(); ++q)
    if (!(boundary(q - 1) * boundary(q)).is_zero()) return false;
  return true;
}

namespace {

template <class T>
struct Entry {
  std::uint32_t row;
  T value;
};

template <class T>
using Column = std::vector<Entry<T>>;

// a*x + b*y for row-sorted sparse columns.
template <class T>
Column<T> combine(const Column<T>& x, const T& a, const Column<T>& y, const T& b) {
  Column<T> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].row < y[j].row)) {
      T v = mul(a, x[i].value);
      if (v != 0) out.push_back({x[i].row, v});
      ++i;
    } else if (i == x.size() || y[j].row < x[i].row) {
      T v = mul(b, y[j].value);
      if (v != 0) out.push_back({y[j].row, v});
      ++j;
    } else {
      T v = add(mul(a, x[i].value), mul(b, y[j].value));
      if (v != 0) out.push_back({x[i].row, v});
      ++i;
      ++j;
    }
  }
  return out;
}

template <class T>
bool is_unit(const T& v) {
  return v == 1 || v == -1;
}

template <class T>
MatrixInvariants reduce(const SparseMatrix& M) {
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> pivot_of_row(M.rows(), none);
  std::vector<Column<T>> basis;

  // Each column is reduced against the basis by unimodular column operations;
  // basis columns keep pairwise distinct lowest rows.
  for (const SparseColumn& src : M.columns()) {
    Column<T> v;
    v.reserve(src.size());
    for (const SparseEntry& e : src) v.push_back({e.row, T(e.value)});
    while (!v.empty()) {
      const std::uint32_t r = v.back().row;
      std::size_t& slot = pivot_of_row[r];
      if (slot == none) {
        slot = basis.size();
        basis.push_back(std::move(v));
        break;
      }
      Column<T>& p = basis[slot];
      const T a = p.back().value;
      const T b = v.back().value;
      if (sub(b, mul(quot(b, a), a)) == 0) {
        v = combine(v, T(1), p, neg(quot(b, a)));
      } else {
        T s, t;
        const T g = extended_gcd(a, b, s, t);
        Column<T> reduced = combine(v, quot(a, g), p, neg(quot(b, g)));
        p = combine(p, s, v, t);
        v = std::move(reduced);
      }
    }
  }

  MatrixInvariants out;
  out.rank = basis.size();

  // Unit pivots split off as invariant factor 1: clear their rows from the
  // remaining columns, highest row first, and keep only what is left.
  std::vector<std::uint32_t> unit_rows;
  std::vector<std::size_t> residual;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (is_unit(basis[k].back().value)) unit_rows.push_back(basis[k].back().row);
    else residual.push_back(k);
  }
  if (residual.empty()) return out;
  std::sort(unit_rows.rbegin(), unit_rows.rend());
  for (std::uint32_t r : unit_rows) {
    const Column<T>& u = basis[pivot_of_row[r]];
    const T sign = u.back().value;
    for (std::size_t k : residual) {
      Column<T>& c = basis[k];
      auto it = std::lower_bound(c.begin(), c.end(), r,
                                 [](const Entry<T>& e, std::uint32_t row) { return e.row < row; });
      if (it == c.end() || it->row != r) continue;
      c = combine(c, T(1), u, neg(mul(it->value, sign)));
    }
  }

  std::vector<std::uint32_t> rows;
  for (std::size_t k : residual)
    for (const auto& e : basis[k]) rows.push_back(e.row);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  DenseMatrix<BigInt> dense(rows.size(), residual.size());
  for (std::size_t j = 0; j < residual.size(); ++j)
    for (const auto& e : basis[residual[j]]) {
      auto i = static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), e.row) - rows.begin());
      dense(i, j) = BigInt(e.value);
    }
  // The residual is tiny in practice; big integers keep it simple.
  SNFResult<BigInt> snf = smith_normal_form(dense);
  if (snf.rank != residual.size()) fail(ErrorCode::InternalInvariant, "residual block lost rank");
  for (const BigInt& f : snf.invariant_factors)
    if (f > 1) out.torsion.push_back(narrow(f));
  return out;
}

}  // namespace

MatrixInvariants matrix_invariants(const SparseMatrix& M) {
  try {
    return reduce<std::int64_t>(M);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CoefficientOverflow) throw;
  }
  return reduce<BigInt>(M);
}

std::vector<FGAbelianGroup> homology(const ChainComplex& C) {
  if (!C.is_complex()) fail(ErrorCode::NotAComplex, "boundary of a boundary is nonzero");
  const int top = C.max_degree();
  // invariants[q] describes ∂_q for 1 <= q <= top.
  std::vector<std::future<MatrixInvariants>> jobs;
  for (int q = 1; q <= top; ++q)
    jobs.push_back(std::async(std::launch::async, [&C, q] { return matrix_invariants(C.boundary(q)); }));
  std::vector<MatrixInvariants> inv(static_cast<std::size_t>(top) + 2);
  for (int q = 1; q <= top; ++q) inv[static_cast<std::size_t>(q)] = jobs[static_cast<std::size_t>(q - 1)].get();

  std::vector<FGAbelianGroup> out;
  for (int q = 0; q <= top; ++q) {
    const auto& here = inv[static_cast<std::size_t>(q)];
    const auto& above = inv[static_cast<std::size_t>(q) + 1];
    const std::size_t n = C.basis_size(q);
    if (here.rank + above.rank > n) fail(ErrorCode::InternalInvariant, "rank exceeds chain group");
    out.emplace_back(n - here.rank - above.rank, above.torsion);
  }
  return out;
}

ChainComplex quotient_complex(const ChainComplex& C, const SubBasis& sub) {
  const int top = C.max_degree();
  auto in_sub = [&](int q, std::size_t i) {
    if (q < 0 || static_cast<std::size_t>(q) >= sub.size()) return false;
    const auto& mask = sub[static_cast<std::size_t>(q)];
    if (mask.size() != C.basis_size(q))
      fail(ErrorCode::ShapeMismatch, "sub-basis mask size differs in degree " + std::to_string(q));
    return static_cast<bool>(mask[i]);
  };

  std::vector<std::vector<std::uint32_t>> new_index(static_cast<std::size_t>(top) + 1);
  std::vector<std::size_t> sizes(static_cast<std::size_t>(top) + 1, 0);
  constexpr std::uint32_t dropped = std::numeric_limits<std::uint32_t>::max();
  for (int q = 0; q <= top; ++q) {
    auto& idx = new_index[static_cast<std::size_t>(q)];
    idx.assign(C.basis_size(q), dropped);
    for (std::size_t i = 0; i < C.basis_size(q); ++i)
      if (!in_sub(q, i)) idx[i] = static_cast<std::uint32_t>(sizes[static_cast<std::size_t>(q)]++);
  }

  std::vector<SparseMatrix> boundaries;
  for (int q = 1; q <= top; ++q) {
    SparseMatrix d = C.boundary(q);
    SparseMatrix out(sizes[static_cast<std::size_t>(q - 1)], 0);
    const auto& rows = new_index[static_cast<std::size_t>(q - 1)];
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (in_sub(q, j)) {
        for (const SparseEntry& e : d.column(j))
          if (!in_sub(q - 1, e.row))
            fail(ErrorCode::NotSubcomplex,
                 "boundary of a degree-" + std::to_string(q) + " sub-generator leaves the sub-basis");
        continue;
      }
      SparseColumn col;
      for (const SparseEntry& e : d.column(j))
        if (rows[e.row] != dropped) col.push_back({rows[e.row], e.value});
      out.push_column(std::move(col));
    }
    boundaries.push_back(std::move(out));
  }
  return ChainComplex(std::move(sizes), std::move(boundaries));
}

bool verify_chain_map(const std::vector<SparseMatrix>& phi, const ChainComplex& C, const ChainComplex& D) {
  for (std::size_t q = 0; q < phi.size(); ++q) {
    const int d = static_cast<int>(q);
    if (phi[q].rows() != D.basis_size(d) || phi[q].cols() != C.basis_size(d))
      fail(ErrorCode::ShapeMismatch, "chain map component " + std::to_string(q) + " has the wrong shape");
  }
  for (std::size_t q = 1; q < phi.size(); ++q) {
    const int d = static_cast<int>(q);
    if (!(D.boundary(d) * phi[q] == phi[q - 1] * C.boundary(d))) return false;
  }
  return true;
}

}  // namespace cubhom
