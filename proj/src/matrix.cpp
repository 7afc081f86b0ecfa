#include "ghcodes/matrix.hpp"

#include <algorithm>

namespace ghcodes {

std::size_t rref_in_place(const FieldCtx& f, Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    std::size_t piv = pr;
    while (piv < rows && f.is_zero(m.at(piv, c))) ++piv;
    if (piv == rows) continue;
    if (piv != pr)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(pr, j), m.at(piv, j));
    FieldElement iv = f.inv(m.at(pr, c));
    for (std::size_t j = c; j < cols; ++j) m.at(pr, j) = f.mul(m.at(pr, j), iv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr || f.is_zero(m.at(r, c))) continue;
      FieldElement fac = m.at(r, c);
      for (std::size_t j = c; j < cols; ++j)
        m.at(r, j) = f.sub(m.at(r, j), f.mul(fac, m.at(pr, j)));
    }
    ++pr;
  }
  return pr;
}

Matrix rref(const FieldCtx& f, Matrix m) {
  rref_in_place(f, m);
  return m;
}

Matrix take_rows(const Matrix& m, std::size_t rank) {
  Matrix out(rank, m.cols());
  for (std::size_t r = 0; r < rank; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(r, c);
  return out;
}

Matrix null_space(const FieldCtx& f, const Matrix& m) {
  Matrix r = m;
  std::size_t rank = rref_in_place(f, r);
  const std::size_t cols = m.cols();

  std::vector<std::size_t> pivots;
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t i = 0, c = 0; i < rank; ++i) {
    while (c < cols && f.is_zero(r.at(i, c))) ++c;
    pivots.push_back(c);
    is_pivot[c] = true;
  }

  Matrix basis(cols - rank, cols);
  std::size_t bi = 0;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    basis.at(bi, fc) = f.one();
    for (std::size_t i = 0; i < rank; ++i) basis.at(bi, pivots[i]) = f.neg(r.at(i, fc));
    ++bi;
  }
  rref_in_place(f, basis);
  return basis;
}

Matrix mat_mul(const FieldCtx& f, const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      FieldElement aik = a.at(i, k);
      if (f.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out.at(i, j) = f.add(out.at(i, j), f.mul(aik, b.at(k, j)));
    }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(j, i) = m.at(i, j);
  return out;
}

bool is_zero_matrix(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j).index != 0) return false;
  return true;
}

bool in_row_space(const FieldCtx& f, const Matrix& rref_m, std::span<const FieldElement> v) {
  std::vector<FieldElement> w(v.begin(), v.end());
  for (std::size_t i = 0; i < rref_m.rows(); ++i) {
    std::size_t p = 0;
    while (p < rref_m.cols() && f.is_zero(rref_m.at(i, p))) ++p;
    if (p == rref_m.cols()) break;
    if (!f.is_zero(w[p])) {
      FieldElement fac = w[p];
      for (std::size_t j = p; j < w.size(); ++j)
        w[j] = f.sub(w[j], f.mul(fac, rref_m.at(i, j)));
    }
  }
  return std::all_of(w.begin(), w.end(), [](FieldElement x) { return x.index == 0; });
}

}  // namespace ghcodes
