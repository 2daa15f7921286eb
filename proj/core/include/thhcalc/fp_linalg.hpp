#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace thhcalc {

/// Coefficient of F_p, always a canonical residue in [0, p).
using Coeff = std::uint32_t;
using Vec = std::vector<Coeff>;

/// The prime field F_p for an odd prime p. The prime is a runtime value so a
/// single build serves every scenario prime.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }

  Coeff reduce(std::int64_t x) const noexcept {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff add(Coeff a, Coeff b) const noexcept { return static_cast<Coeff>((a + b) % p_); }
  Coeff sub(Coeff a, Coeff b) const noexcept { return static_cast<Coeff>((a + p_ - b) % p_); }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Coeff pow(Coeff a, std::uint64_t e) const noexcept;
  Coeff inv(Coeff a) const;

  /// binom(n, k) mod p via Lucas' theorem.
  Coeff binomial(std::int64_t n, std::int64_t k) const noexcept;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n) noexcept;

/// Dense matrix over F_p. Column convention: a rows x cols matrix is the map
/// F_p^cols -> F_p^rows.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  FpMatrix(std::size_t rows, std::size_t cols, std::vector<Coeff> entries);

  static FpMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Coeff at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Coeff& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Coeff> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec column(std::size_t c) const;

  bool is_zero() const noexcept;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Coeff> data_;
};

FpMatrix multiply(const FpMatrix& a, const FpMatrix& b, const PrimeField& f);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(FpMatrix& m, const PrimeField& f);

std::size_t rank(const FpMatrix& m, const PrimeField& f);

/// Basis of ker(m) as vectors of length m.cols().
std::vector<Vec> kernel_basis(const FpMatrix& m, const PrimeField& f);

/// dim ker(d_out) - rank(d_in) for F^a --d_in--> V --d_out--> F^b.
/// Throws CompositionNonzero unless d_out * d_in == 0, DimensionMismatch when
/// the shapes do not compose.
std::size_t homology_dim(const FpMatrix& d_in, const FpMatrix& d_out, const PrimeField& f);

/// A subspace of F_p^n kept as a reduced row echelon basis.
class Subspace {
 public:
  Subspace(std::size_t ambient_dim, const PrimeField& f) : n_(ambient_dim), field_(f) {}

  static Subspace whole(std::size_t ambient_dim, const PrimeField& f);

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vec>& basis() const noexcept { return basis_; }

  /// Remainder of v after elimination against the basis; zero iff v is in the span.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  /// Adds v to the span; returns false when v was already in it.
  bool insert(Vec v);

 private:
  std::size_t n_;
  PrimeField field_;
  std::vector<Vec> basis_;        // each row normalized with pivot coefficient 1
  std::vector<std::size_t> pivots_;
};

bool is_zero(const Vec& v) noexcept;

}  // namespace thhcalc
