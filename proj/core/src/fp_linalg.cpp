#include "thhcalc/fp_linalg.hpp"

#include "thhcalc/errors.hpp"

#include <string>
#include <utility>

namespace thhcalc {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidPrime: return "InvalidPrime";
    case ErrorCode::InvalidGenerator: return "InvalidGenerator";
    case ErrorCode::CompositionNonzero: return "CompositionNonzero";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::MixedSpec: return "MixedSpec";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::UnsupportedKind: return "UnsupportedKind";
    case ErrorCode::UnsupportedShape: return "UnsupportedShape";
    case ErrorCode::NotADifferential: return "NotADifferential";
    case ErrorCode::BidegreeViolation: return "BidegreeViolation";
    case ErrorCode::LeibnizConflict: return "LeibnizConflict";
    case ErrorCode::FamilyViolation: return "FamilyViolation";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::ExtensionDegreeError: return "ExtensionDegreeError";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::InexactAt: return "InexactAt";
    case ErrorCode::UnknownScenario: return "UnknownScenario";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p < 3)
    throw Error(ErrorCode::InvalidPrime, "p must be an odd prime, got " + std::to_string(p));
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const noexcept {
  Coeff result = 1 % p_;
  Coeff base = a % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw Error(ErrorCode::DimensionMismatch, "inverse of zero in F_p");
  return pow(a, p_ - 2);
}

Coeff PrimeField::binomial(std::int64_t n, std::int64_t k) const noexcept {
  if (k < 0 || n < 0 || k > n) return 0;
  Coeff result = 1;
  while (n > 0 || k > 0) {
    const auto ni = static_cast<std::uint32_t>(n % p_);
    const auto ki = static_cast<std::uint32_t>(k % p_);
    if (ki > ni) return 0;
    // small binomial binom(ni, ki) with ni < p
    Coeff num = 1, den = 1;
    for (std::uint32_t i = 0; i < ki; ++i) {
      num = mul(num, ni - i);
      den = mul(den, i + 1);
    }
    result = mul(result, mul(num, pow(den, p_ - 2)));
    n /= p_;
    k /= p_;
  }
  return result;
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::vector<Coeff> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols)
    throw Error(ErrorCode::DimensionMismatch, "entry count does not match matrix shape");
}

FpMatrix FpMatrix::identity(std::size_t n) {
  FpMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vec FpMatrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

bool FpMatrix::is_zero() const noexcept {
  for (Coeff c : data_)
    if (c != 0) return false;
  return true;
}

FpMatrix multiply(const FpMatrix& a, const FpMatrix& b, const PrimeField& f) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::DimensionMismatch, "cannot multiply " + std::to_string(a.rows()) + "x" +
                                                  std::to_string(a.cols()) + " by " +
                                                  std::to_string(b.rows()) + "x" +
                                                  std::to_string(b.cols()));
  FpMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Coeff aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c.at(i, j) = f.add(c.at(i, j), f.mul(aik, b.at(k, j)));
    }
  }
  return c;
}

std::vector<std::size_t> row_reduce(FpMatrix& m, const PrimeField& f) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(lead_row, c));
    const Coeff inv = f.inv(m.at(lead_row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m.at(lead_row, c) = f.mul(m.at(lead_row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row) continue;
      const Coeff factor = m.at(r, col);
      if (factor == 0) continue;
      for (std::size_t c = col; c < m.cols(); ++c)
        m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(lead_row, c)));
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return pivots;
}

std::size_t rank(const FpMatrix& m, const PrimeField& f) {
  FpMatrix copy = m;
  return row_reduce(copy, f).size();
}

std::vector<Vec> kernel_basis(const FpMatrix& m, const PrimeField& f) {
  FpMatrix reduced = m;
  const auto pivots = row_reduce(reduced, f);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(m.cols(), 0);
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(reduced.at(i, free_col));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t homology_dim(const FpMatrix& d_in, const FpMatrix& d_out, const PrimeField& f) {
  if (d_in.rows() != d_out.cols())
    throw Error(ErrorCode::DimensionMismatch,
                "d_in has " + std::to_string(d_in.rows()) + " rows but d_out has " +
                    std::to_string(d_out.cols()) + " columns");
  if (d_in.cols() > 0 && d_out.rows() > 0 && !multiply(d_out, d_in, f).is_zero())
    throw Error(ErrorCode::CompositionNonzero, "d_out * d_in != 0");
  const std::size_t middle = d_out.cols();
  return middle - rank(d_out, f) - rank(d_in, f);
}

bool is_zero(const Vec& v) noexcept {
  for (Coeff c : v)
    if (c != 0) return false;
  return true;
}

Subspace Subspace::whole(std::size_t ambient_dim, const PrimeField& f) {
  Subspace s(ambient_dim, f);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    Vec e(ambient_dim, 0);
    e[i] = 1;
    s.basis_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != n_) throw Error(ErrorCode::DimensionMismatch, "vector length != subspace ambient");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Coeff c = v[pivots_[i]];
    if (c == 0) continue;
    const Vec& row = basis_[i];
    for (std::size_t j = 0; j < n_; ++j)
      if (row[j] != 0) v[j] = field_.sub(v[j], field_.mul(c, row[j]));
  }
  return v;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::insert(Vec v) {
  v = reduce(std::move(v));
  std::size_t pivot = 0;
  while (pivot < n_ && v[pivot] == 0) ++pivot;
  if (pivot == n_) return false;
  const Coeff inv = field_.inv(v[pivot]);
  for (auto& c : v) c = field_.mul(c, inv);
  for (auto& row : basis_) {
    const Coeff c = row[pivot];
    if (c == 0) continue;
    for (std::size_t j = 0; j < n_; ++j)
      if (v[j] != 0) row[j] = field_.sub(row[j], field_.mul(c, v[j]));
  }
  basis_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace thhcalc
