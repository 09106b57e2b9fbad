#ifndef LIEVA_EXACT_MATRIX_HPP
#define LIEVA_EXACT_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "lieva/coeff.hpp"

namespace lieva {

/// Dense matrix with canonical entries in a fixed coefficient domain.
struct ExactMatrix {
  CoeffDomain domain = CoeffDomain::integers();
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> a;  // row-major, rows*cols entries

  ExactMatrix() = default;
  ExactMatrix(CoeffDomain d, std::size_t r, std::size_t c)
      : domain(d), rows(r), cols(c), a(r * c) {}

  Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static ExactMatrix identity(CoeffDomain d, std::size_t n);
  static ExactMatrix from_rows(CoeffDomain d,
                               const std::vector<std::vector<Int>>& rows);
  std::vector<Int> row(std::size_t i) const;
  void canonicalize();

  bool operator==(const ExactMatrix& o) const {
    return domain == o.domain && rows == o.rows && cols == o.cols && a == o.a;
  }
};

ExactMatrix matmul(const ExactMatrix& x, const ExactMatrix& y);

/// Determinant by fraction-free (Bareiss) elimination; Integers only.
Int determinant(const ExactMatrix& m);

struct HermiteResult {
  ExactMatrix h;  // row-style Hermite form: echelon, positive pivots,
                  // entries above each pivot reduced into [0, pivot)
  ExactMatrix u;  // unimodular, u*m = h
};
HermiteResult hermite_normal_form(const ExactMatrix& m);

struct SmithResult {
  ExactMatrix s;  // diagonal, nonnegative, divisibility chain
  ExactMatrix u;  // unimodular, u*m*v = s
  ExactMatrix v;
};
SmithResult smith_normal_form(const ExactMatrix& m);

/// Exact membership of v in the row space of m: integer combinations over
/// Integers, field combinations over a prime modulus.
bool row_space_membership(const std::vector<Int>& v, const ExactMatrix& m);

/// Finitely generated abelian group presented as ambient/rowspace, with
/// enough change-of-basis data to map ambient vectors to quotient
/// coordinates.  Factors equal to 1 are omitted; 0 denotes a free factor.
class AbelianPresentation {
 public:
  std::size_t ambient_rank() const { return ambient_; }
  const std::vector<Int>& invariant_factors() const { return factors_; }
  bool trivial() const { return factors_.empty(); }
  Int order() const;  // group order; 0 when infinite

  /// Quotient coordinates of an ambient row vector (coordinates at factors
  /// equal to 1 are dropped; finite coordinates are reduced).
  std::vector<Int> coordinates(const std::vector<Int>& ambient) const;
  bool is_zero(const std::vector<Int>& ambient) const;

 private:
  friend AbelianPresentation quotient_presentation(const ExactMatrix&,
                                                   std::size_t);
  CoeffDomain domain_ = CoeffDomain::integers();
  std::size_t ambient_ = 0;
  std::vector<Int> factors_;
  // Integers: full SNF data.  diag_ has ambient_ entries (zeros appended),
  // basis_images_ is the right transform V; coords(x) = x*V reduced.
  std::vector<Int> diag_;
  ExactMatrix basis_images_;
  // Prime field: reduced echelon rows of the span and their pivot columns;
  // coordinates are the non-pivot entries of the reduced vector.
  std::vector<std::vector<Int>> echelon_;
  std::vector<std::size_t> pivots_;
};

/// Presentation of ambient/rowspace(span).  Integers or prime modulus.
AbelianPresentation quotient_presentation(const ExactMatrix& span,
                                          std::size_t ambient_rank);

/// Incremental row-space accumulator: absorbs rows one at a time, keeps an
/// echelon basis, answers exact membership.  Integers (lattice with gcd
/// pivots) or prime modulus (int64 arithmetic).  Composite moduli are
/// rejected.
class RowSpan {
 public:
  RowSpan(CoeffDomain domain, std::size_t cols);

  /// Returns true if the row enlarged the span.
  bool insert(const std::vector<Int>& row);
  bool contains(const std::vector<Int>& row) const;
  /// Residue of row modulo the span; zero iff member.  Over Integers the
  /// reduction stops at the first non-divisible pivot.
  std::vector<Int> reduce(const std::vector<Int>& row) const;

  std::size_t rank() const;
  std::size_t cols() const { return cols_; }
  const CoeffDomain& domain() const { return domain_; }
  bool empty() const { return rank() == 0; }

  /// Current echelon basis rows (ascending pivot columns).
  std::vector<std::vector<Int>> basis_rows() const;
  /// Canonical form of the span: HNF over Integers, RREF over a prime
  /// field.  Two spans are equal iff their canonical rows agree.
  std::vector<std::vector<Int>> canonical_rows() const;

 private:
  CoeffDomain domain_;
  std::size_t cols_;
  bool modp_;
  std::int64_t p_ = 0;
  // prime-field storage: monic echelon rows
  std::vector<std::vector<std::int64_t>> frow_;
  std::vector<std::size_t> fpiv_;
  // integer storage: echelon rows, positive leading entries
  std::vector<std::vector<Int>> zrow_;
  std::vector<std::size_t> zpiv_;
};

/// Presentation of span(extra + base)/span(base) inside the ambient module;
/// reports the structure of the subgroup generated by `extra` modulo `base`.
AbelianPresentation span_quotient(CoeffDomain domain, std::size_t cols,
                                  const std::vector<std::vector<Int>>& extra,
                                  const std::vector<std::vector<Int>>& base);

/// Basis of the left null space {z : z*T = 0}: a lattice basis over
/// Integers, a vector-space basis over a prime field.
std::vector<std::vector<Int>> left_nullspace(const ExactMatrix& t);

}  // namespace lieva

#endif
