#include "lieva/exact_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace lieva {

namespace {

// floor division, b > 0
Int fdiv(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b < 0) q -= 1;
  return q;
}

// g = s*a + t*b, g >= 0
Int xgcd(const Int& a, const Int& b, Int& s, Int& t) {
  Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1; r0 = r1; r1 = r2;
    Int s2 = s0 - q * s1; s0 = s1; s1 = s2;
    Int t2 = t0 - q * t1; t0 = t1; t1 = t2;
  }
  if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
  s = s0; t = t0;
  return r0;
}

std::int64_t imod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r0 = imod(a, p), r1 = p, s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1; r0 = r1; r1 = r2;
    std::int64_t s2 = s0 - q * s1; s0 = s1; s1 = s2;
  }
  assert(r0 == 1);
  return imod(s0, p);
}

std::size_t lead_col(const std::vector<Int>& v) {
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j] != 0) return j;
  return v.size();
}

}  // namespace

ExactMatrix ExactMatrix::identity(CoeffDomain d, std::size_t n) {
  ExactMatrix m(d, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(CoeffDomain d,
                                   const std::vector<std::vector<Int>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  ExactMatrix m(d, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    assert(rows[i].size() == c);
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = d.canon(rows[i][j]);
  }
  return m;
}

std::vector<Int> ExactMatrix::row(std::size_t i) const {
  return std::vector<Int>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
}

void ExactMatrix::canonicalize() {
  for (auto& x : a) x = domain.canon(x);
}

ExactMatrix matmul(const ExactMatrix& x, const ExactMatrix& y) {
  assert(x.cols == y.rows && x.domain == y.domain);
  ExactMatrix r(x.domain, x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const Int& f = x.at(i, k);
      if (f == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j)
        r.at(i, j) += f * y.at(k, j);
    }
  r.canonicalize();
  return r;
}

Int determinant(const ExactMatrix& m) {
  if (!m.domain.is_integers())
    throw DomainError("determinant is implemented over Integers only");
  assert(m.rows == m.cols);
  const std::size_t n = m.rows;
  if (n == 0) return 1;
  ExactMatrix w = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t swap_row = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) { swap_row = i; break; }
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j)
        std::swap(w.at(k, j), w.at(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

HermiteResult hermite_normal_form(const ExactMatrix& m) {
  if (!m.domain.is_integers())
    throw DomainError("Hermite form requires the Integers domain");
  HermiteResult res{m, ExactMatrix::identity(m.domain, m.rows)};
  ExactMatrix& h = res.h;
  ExactMatrix& u = res.u;
  const std::size_t rows = m.rows, cols = m.cols;

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(h.at(i, c), h.at(j, c));
    for (std::size_t c = 0; c < rows; ++c) std::swap(u.at(i, c), u.at(j, c));
  };
  auto add_multiple = [&](std::size_t dst, std::size_t src, const Int& f) {
    if (f == 0) return;
    for (std::size_t c = 0; c < cols; ++c) h.at(dst, c) += f * h.at(src, c);
    for (std::size_t c = 0; c < rows; ++c) u.at(dst, c) += f * u.at(src, c);
  };
  auto negate_row = [&](std::size_t i) {
    for (std::size_t c = 0; c < cols; ++c) h.at(i, c) = -h.at(i, c);
    for (std::size_t c = 0; c < rows; ++c) u.at(i, c) = -u.at(i, c);
  };

  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    bool any = false;
    for (std::size_t i = pr; i < rows; ++i)
      if (h.at(i, c) != 0) { any = true; break; }
    if (!any) continue;
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = pr; i < rows; ++i) {
        if (h.at(i, c) == 0) continue;
        if (best == rows || abs(h.at(i, c)) < abs(h.at(best, c))) best = i;
      }
      swap_rows(best, pr);
      bool clean = true;
      for (std::size_t i = pr + 1; i < rows; ++i) {
        if (h.at(i, c) == 0) continue;
        add_multiple(i, pr, -Int(h.at(i, c) / h.at(pr, c)));
        if (h.at(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h.at(pr, c) < 0) negate_row(pr);
    for (std::size_t i = 0; i < pr; ++i)
      add_multiple(i, pr, -fdiv(h.at(i, c), h.at(pr, c)));
    ++pr;
  }
  return res;
}

SmithResult smith_normal_form(const ExactMatrix& m) {
  if (!m.domain.is_integers())
    throw DomainError("Smith form requires the Integers domain");
  SmithResult res{m, ExactMatrix::identity(m.domain, m.rows),
                  ExactMatrix::identity(m.domain, m.cols)};
  ExactMatrix& s = res.s;
  ExactMatrix& u = res.u;
  ExactMatrix& v = res.v;
  const std::size_t rows = m.rows, cols = m.cols;
  const std::size_t nmin = std::min(rows, cols);

  auto row_op = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t c = 0; c < cols; ++c) s.at(dst, c) += f * s.at(src, c);
    for (std::size_t c = 0; c < rows; ++c) u.at(dst, c) += f * u.at(src, c);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t r = 0; r < rows; ++r) s.at(r, dst) += f * s.at(r, src);
    for (std::size_t r = 0; r < cols; ++r) v.at(r, dst) += f * v.at(r, src);
  };
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(s.at(i, c), s.at(j, c));
    for (std::size_t c = 0; c < rows; ++c) std::swap(u.at(i, c), u.at(j, c));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap(s.at(r, i), s.at(r, j));
    for (std::size_t r = 0; r < cols; ++r) std::swap(v.at(r, i), v.at(r, j));
  };
  auto negate_row = [&](std::size_t i) {
    for (std::size_t c = 0; c < cols; ++c) s.at(i, c) = -s.at(i, c);
    for (std::size_t c = 0; c < rows; ++c) u.at(i, c) = -u.at(i, c);
  };

  for (std::size_t t = 0; t < nmin; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing submatrix becomes the pivot
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (s.at(i, j) == 0) continue;
          if (bi == rows || abs(s.at(i, j)) < abs(s.at(bi, bj))) {
            bi = i; bj = j;
          }
        }
      if (bi == rows) { t = nmin; break; }  // trailing submatrix is zero
      swap_rows(t, bi);
      swap_cols(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s.at(i, t) == 0) continue;
        row_op(i, t, -Int(s.at(i, t) / s.at(t, t)));
        if (s.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s.at(t, j) == 0) continue;
        col_op(j, t, -Int(s.at(t, j) / s.at(t, t)));
        if (s.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // pivot must divide the whole trailing submatrix
      std::size_t oi = rows;
      for (std::size_t i = t + 1; i < rows && oi == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s.at(i, j) % s.at(t, t) != 0) { oi = i; break; }
      if (oi == rows) break;
      row_op(t, oi, 1);
    }
    if (t >= nmin) break;
    if (s.at(t, t) < 0) negate_row(t);
  }
  for (std::size_t t = 0; t < nmin; ++t)
    if (s.at(t, t) < 0) negate_row(t);
  return res;
}

bool row_space_membership(const std::vector<Int>& v, const ExactMatrix& m) {
  if (v.size() != m.cols) throw InputError("membership: dimension mismatch");
  RowSpan span(m.domain, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) span.insert(m.row(i));
  return span.contains(v);
}

// ---------------------------------------------------------------------------
// AbelianPresentation

Int AbelianPresentation::order() const {
  Int n = 1;
  for (const Int& f : factors_) {
    if (f == 0) return 0;
    n *= f;
  }
  return n;
}

std::vector<Int> AbelianPresentation::coordinates(
    const std::vector<Int>& ambient) const {
  if (ambient.size() != ambient_)
    throw InputError("presentation: dimension mismatch");
  std::vector<Int> out;
  if (domain_.is_integers()) {
    for (std::size_t j = 0; j < ambient_; ++j) {
      const Int& d = diag_[j];
      if (d == 1) continue;
      Int y = 0;
      for (std::size_t i = 0; i < ambient_; ++i)
        y += ambient[i] * basis_images_.at(i, j);
      if (d != 0) {
        y %= d;
        if (y < 0) y += d;
      }
      out.push_back(y);
    }
    return out;
  }
  // prime field: reduce against the echelon, read off non-pivot coordinates
  std::vector<Int> w(ambient.size());
  for (std::size_t j = 0; j < w.size(); ++j) w[j] = domain_.canon(ambient[j]);
  for (std::size_t k = 0; k < echelon_.size(); ++k) {
    const Int c = w[pivots_[k]];
    if (c == 0) continue;
    for (std::size_t j = pivots_[k]; j < w.size(); ++j)
      w[j] = domain_.sub(w[j], domain_.mul(c, echelon_[k][j]));
  }
  std::vector<bool> is_pivot(ambient_, false);
  for (std::size_t p : pivots_) is_pivot[p] = true;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (!is_pivot[j]) out.push_back(w[j]);
  return out;
}

bool AbelianPresentation::is_zero(const std::vector<Int>& ambient) const {
  for (const Int& c : coordinates(ambient))
    if (c != 0) return false;
  return true;
}

AbelianPresentation quotient_presentation(const ExactMatrix& span,
                                          std::size_t ambient_rank) {
  if (span.rows > 0 && span.cols != ambient_rank)
    throw InputError("quotient_presentation: dimension mismatch");
  AbelianPresentation pres;
  pres.domain_ = span.domain;
  pres.ambient_ = ambient_rank;
  if (span.domain.is_integers()) {
    ExactMatrix padded = span;
    if (padded.rows == 0) padded = ExactMatrix(span.domain, 0, ambient_rank);
    SmithResult snf = smith_normal_form(padded);
    pres.diag_.assign(ambient_rank, 0);
    const std::size_t nmin = std::min(padded.rows, padded.cols);
    for (std::size_t i = 0; i < nmin; ++i) pres.diag_[i] = snf.s.at(i, i);
    pres.basis_images_ = snf.v;
    for (const Int& d : pres.diag_)
      if (d != 1) pres.factors_.push_back(d);
    // chain order: finite factors ascending by divisibility, free factors last
    std::stable_partition(pres.factors_.begin(), pres.factors_.end(),
                          [](const Int& d) { return d != 0; });
    return pres;
  }
  if (!span.domain.is_prime_field())
    throw DomainError("quotient_presentation needs Integers or a prime field");
  RowSpan rs(span.domain, ambient_rank);
  for (std::size_t i = 0; i < span.rows; ++i) rs.insert(span.row(i));
  pres.echelon_ = rs.basis_rows();
  pres.pivots_.clear();
  for (const auto& r : pres.echelon_) pres.pivots_.push_back(lead_col(r));
  const std::size_t q = ambient_rank - pres.echelon_.size();
  pres.factors_.assign(q, span.domain.characteristic());
  return pres;
}

// ---------------------------------------------------------------------------
// RowSpan

RowSpan::RowSpan(CoeffDomain domain, std::size_t cols)
    : domain_(domain), cols_(cols) {
  if (domain_.is_integers()) {
    modp_ = false;
  } else if (domain_.is_prime_field()) {
    modp_ = true;
    p_ = domain_.characteristic().convert_to<std::int64_t>();
  } else {
    throw DomainError("row spans need Integers or a prime field, got " +
                      domain_.str());
  }
}

bool RowSpan::insert(const std::vector<Int>& row) {
  assert(row.size() == cols_);
  if (modp_) {
    std::vector<std::int64_t> w(cols_);
    for (std::size_t j = 0; j < cols_; ++j) {
      Int r = row[j] % p_;
      if (r < 0) r += p_;
      w[j] = r.convert_to<std::int64_t>();
    }
    for (std::size_t k = 0; k < frow_.size(); ++k) {
      const std::int64_t c = w[fpiv_[k]];
      if (c == 0) continue;
      const auto& r = frow_[k];
      for (std::size_t j = fpiv_[k]; j < cols_; ++j)
        w[j] = imod(w[j] - c * r[j], p_);
    }
    std::size_t lead = cols_;
    for (std::size_t j = 0; j < cols_; ++j)
      if (w[j] != 0) { lead = j; break; }
    if (lead == cols_) return false;
    const std::int64_t s = inv_mod(w[lead], p_);
    for (std::size_t j = lead; j < cols_; ++j) w[j] = imod(w[j] * s, p_);
    auto pos = std::upper_bound(fpiv_.begin(), fpiv_.end(), lead);
    const std::size_t idx = pos - fpiv_.begin();
    fpiv_.insert(pos, lead);
    frow_.insert(frow_.begin() + idx, std::move(w));
    return true;
  }
  std::vector<Int> w(cols_);
  for (std::size_t j = 0; j < cols_; ++j) w[j] = row[j];
  for (;;) {
    const std::size_t lead = lead_col(w);
    if (lead == cols_) return false;
    auto it = std::lower_bound(zpiv_.begin(), zpiv_.end(), lead);
    const std::size_t idx = it - zpiv_.begin();
    if (it == zpiv_.end() || *it != lead) {
      if (w[lead] < 0)
        for (auto& x : w) x = -x;
      zpiv_.insert(it, lead);
      zrow_.insert(zrow_.begin() + idx, std::move(w));
      return true;
    }
    std::vector<Int>& prow = zrow_[idx];
    const Int& a = prow[lead];
    const Int& b = w[lead];
    if (b % a == 0) {
      const Int q = b / a;
      for (std::size_t j = lead; j < cols_; ++j) w[j] -= q * prow[j];
    } else {
      Int s, t;
      const Int g = xgcd(a, b, s, t);
      const Int fa = a / g, fb = b / g;
      std::vector<Int> np(cols_), nw(cols_);
      for (std::size_t j = 0; j < cols_; ++j) {
        np[j] = s * prow[j] + t * w[j];
        nw[j] = fa * w[j] - fb * prow[j];
      }
      prow = std::move(np);
      w = std::move(nw);
      // the pivot shrank to the gcd, so the span grew
      for (;;) {
        const std::size_t l2 = lead_col(w);
        if (l2 == cols_) break;
        auto it2 = std::lower_bound(zpiv_.begin(), zpiv_.end(), l2);
        const std::size_t i2 = it2 - zpiv_.begin();
        if (it2 == zpiv_.end() || *it2 != l2) {
          if (w[l2] < 0)
            for (auto& x : w) x = -x;
          zpiv_.insert(it2, l2);
          zrow_.insert(zrow_.begin() + i2, std::move(w));
          break;
        }
        std::vector<Int>& pr2 = zrow_[i2];
        if (w[l2] % pr2[l2] == 0) {
          const Int q = w[l2] / pr2[l2];
          for (std::size_t j = l2; j < cols_; ++j) w[j] -= q * pr2[j];
        } else {
          Int s2, t2;
          const Int g2 = xgcd(pr2[l2], w[l2], s2, t2);
          const Int fa2 = pr2[l2] / g2, fb2 = w[l2] / g2;
          std::vector<Int> np2(cols_), nw2(cols_);
          for (std::size_t j = 0; j < cols_; ++j) {
            np2[j] = s2 * pr2[j] + t2 * w[j];
            nw2[j] = fa2 * w[j] - fb2 * pr2[j];
          }
          pr2 = std::move(np2);
          w = std::move(nw2);
        }
      }
      return true;
    }
  }
}

std::vector<Int> RowSpan::reduce(const std::vector<Int>& row) const {
  assert(row.size() == cols_);
  std::vector<Int> w(cols_);
  for (std::size_t j = 0; j < cols_; ++j) w[j] = domain_.canon(row[j]);
  if (modp_) {
    for (std::size_t k = 0; k < frow_.size(); ++k) {
      const Int c = w[fpiv_[k]];
      if (c == 0) continue;
      const std::int64_t ci = c.convert_to<std::int64_t>();
      for (std::size_t j = fpiv_[k]; j < cols_; ++j)
        w[j] = Int(imod(w[j].convert_to<std::int64_t>() - ci * frow_[k][j], p_));
    }
    return w;
  }
  for (std::size_t k = 0; k < zrow_.size(); ++k) {
    const std::size_t pc = zpiv_[k];
    if (w[pc] == 0) continue;
    const Int q = fdiv(w[pc], zrow_[k][pc]);
    if (q == 0) continue;
    for (std::size_t j = pc; j < cols_; ++j) w[j] -= q * zrow_[k][j];
  }
  return w;
}

bool RowSpan::contains(const std::vector<Int>& row) const {
  for (const Int& x : reduce(row))
    if (x != 0) return false;
  return true;
}

std::size_t RowSpan::rank() const {
  return modp_ ? frow_.size() : zrow_.size();
}

std::vector<std::vector<Int>> RowSpan::basis_rows() const {
  std::vector<std::vector<Int>> out;
  if (modp_) {
    out.reserve(frow_.size());
    for (const auto& r : frow_) {
      std::vector<Int> v(cols_);
      for (std::size_t j = 0; j < cols_; ++j) v[j] = r[j];
      out.push_back(std::move(v));
    }
  } else {
    out = zrow_;
  }
  return out;
}

std::vector<std::vector<Int>> RowSpan::canonical_rows() const {
  if (modp_) {
    // full back-substitution gives the unique RREF
    auto rows = frow_;
    for (std::size_t k = rows.size(); k-- > 0;) {
      for (std::size_t i = 0; i < k; ++i) {
        const std::int64_t c = rows[i][fpiv_[k]];
        if (c == 0) continue;
        for (std::size_t j = fpiv_[k]; j < cols_; ++j)
          rows[i][j] = imod(rows[i][j] - c * rows[k][j], p_);
      }
    }
    std::vector<std::vector<Int>> out;
    for (const auto& r : rows) {
      std::vector<Int> v(cols_);
      for (std::size_t j = 0; j < cols_; ++j) v[j] = r[j];
      out.push_back(std::move(v));
    }
    return out;
  }
  HermiteResult hr =
      hermite_normal_form(ExactMatrix::from_rows(domain_, zrow_));
  std::vector<std::vector<Int>> out;
  for (std::size_t i = 0; i < hr.h.rows; ++i) {
    auto r = hr.h.row(i);
    if (lead_col(r) < cols_) out.push_back(std::move(r));
  }
  return out;
}

AbelianPresentation span_quotient(CoeffDomain domain, std::size_t cols,
                                  const std::vector<std::vector<Int>>& extra,
                                  const std::vector<std::vector<Int>>& base) {
  RowSpan whole(domain, cols);
  for (const auto& r : base) whole.insert(r);
  for (const auto& r : extra) whole.insert(r);
  const auto hrows = whole.basis_rows();
  const std::size_t rank = hrows.size();
  std::vector<std::size_t> piv(rank);
  for (std::size_t k = 0; k < rank; ++k) piv[k] = lead_col(hrows[k]);

  // express base generators in whole-span coordinates
  std::vector<std::vector<Int>> rel;
  rel.reserve(base.size());
  for (const auto& b : base) {
    std::vector<Int> w(cols);
    for (std::size_t j = 0; j < cols; ++j) w[j] = domain.canon(b[j]);
    std::vector<Int> coef(rank, 0);
    for (std::size_t k = 0; k < rank; ++k) {
      if (w[piv[k]] == 0) continue;
      Int c;
      if (domain.is_integers()) {
        assert(w[piv[k]] % hrows[k][piv[k]] == 0);
        c = w[piv[k]] / hrows[k][piv[k]];
      } else {
        c = domain.mul(w[piv[k]], domain.inv(hrows[k][piv[k]]));
      }
      coef[k] = c;
      for (std::size_t j = piv[k]; j < cols; ++j)
        w[j] = domain.is_integers() ? Int(w[j] - c * hrows[k][j])
                                    : domain.sub(w[j], domain.mul(c, hrows[k][j]));
    }
    assert(lead_col(w) == cols);
    rel.push_back(std::move(coef));
  }
  return quotient_presentation(ExactMatrix::from_rows(domain, rel), rank);
}

std::vector<std::vector<Int>> left_nullspace(const ExactMatrix& t) {
  if (t.domain.is_integers()) {
    HermiteResult hr = hermite_normal_form(t);
    std::vector<std::vector<Int>> out;
    for (std::size_t i = 0; i < t.rows; ++i) {
      bool zero = true;
      for (std::size_t j = 0; j < t.cols; ++j)
        if (hr.h.at(i, j) != 0) { zero = false; break; }
      if (zero) out.push_back(hr.u.row(i));
    }
    return out;
  }
  if (!t.domain.is_prime_field())
    throw DomainError("left_nullspace needs Integers or a prime field");
  // incremental elimination with coefficient tracking
  const CoeffDomain& d = t.domain;
  std::vector<std::vector<Int>> prow;   // pivot rows over t-columns
  std::vector<std::vector<Int>> pcoef;  // their expressions in input rows
  std::vector<std::size_t> piv;
  std::vector<std::vector<Int>> out;
  for (std::size_t i = 0; i < t.rows; ++i) {
    std::vector<Int> w = t.row(i);
    std::vector<Int> coef(t.rows, 0);
    coef[i] = 1;
    for (std::size_t k = 0; k < prow.size(); ++k) {
      const Int c = w[piv[k]];
      if (c == 0) continue;
      for (std::size_t j = piv[k]; j < t.cols; ++j)
        w[j] = d.sub(w[j], d.mul(c, prow[k][j]));
      for (std::size_t j = 0; j < t.rows; ++j)
        coef[j] = d.sub(coef[j], d.mul(c, pcoef[k][j]));
    }
    const std::size_t lead = lead_col(w);
    if (lead == t.cols) {
      out.push_back(std::move(coef));
      continue;
    }
    const Int s = d.inv(w[lead]);
    for (std::size_t j = lead; j < t.cols; ++j) w[j] = d.mul(w[j], s);
    for (std::size_t j = 0; j < t.rows; ++j) coef[j] = d.mul(coef[j], s);
    auto pos = std::upper_bound(piv.begin(), piv.end(), lead);
    const std::size_t idx = pos - piv.begin();
    piv.insert(pos, lead);
    prow.insert(prow.begin() + idx, std::move(w));
    pcoef.insert(pcoef.begin() + idx, std::move(coef));
  }
  return out;
}

}  // namespace lieva
