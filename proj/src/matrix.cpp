#include "rescat/matrix.hpp"

#include <sstream>

#include "rescat/errors.hpp"

namespace rescat {

FreeModule FreeModule::dual() const {
  FreeModule out;
  for (int d : deg) out.deg.push_back(-d);
  return out;
}

FreeModule direct_sum(const FreeModule& a, const FreeModule& b) {
  FreeModule out = a;
  out.deg.insert(out.deg.end(), b.deg.begin(), b.deg.end());
  return out;
}

FreeModule tensor(const FreeModule& a, const FreeModule& b) {
  FreeModule out;
  for (int x : a.deg)
    for (int y : b.deg) out.deg.push_back(x + y);
  return out;
}

Matrix::Matrix(FreeModule tgt, FreeModule src)
    : tgt_(std::move(tgt)), src_(std::move(src)), a_(tgt_.rank() * src_.rank()) {}

Vec Matrix::column(std::size_t j, const TermOrder& ord) const {
  Vec v;
  for (std::size_t i = 0; i < rows(); ++i)
    for (const Term& t : at(i, j)) v.push_back(Term{t.m, static_cast<uint32_t>(i), t.c});
  normalize(v, ord);
  return v;
}

std::vector<Vec> Matrix::columns(const TermOrder& ord) const {
  std::vector<Vec> out;
  for (std::size_t j = 0; j < cols(); ++j) out.push_back(column(j, ord));
  return out;
}

Matrix Matrix::from_columns(const FreeModule& tgt, const FreeModule& src, const std::vector<Vec>& cols,
                            const PolyRing& R) {
  if (cols.size() != src.rank()) throw InvariantError("column count does not match source rank");
  Matrix m(tgt, src);
  TermOrder ord = TermOrder::grevlex(R);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const Term& t : cols[j]) {
      if (t.comp >= tgt.rank()) throw InvariantError("column entry outside the target");
      m.at(t.comp, j).push_back(Term{t.m, 0, t.c});
    }
    for (std::size_t i = 0; i < tgt.rank(); ++i) normalize(m.at(i, j), ord);
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const Poly& p : a_)
    if (!p.empty()) return false;
  return true;
}

bool Matrix::is_minimal() const {
  for (const Poly& p : a_)
    for (const Term& t : p)
      if (t.m.is_one()) return false;
  return true;
}

bool Matrix::is_homogeneous() const {
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      for (const Term& t : at(i, j))
        if (t.m.deg != src_.deg[j] - tgt_.deg[i]) return false;
  return true;
}

Matrix Matrix::dual() const {
  Matrix m(src_.dual(), tgt_.dual());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) m.at(j, i) = at(i, j);
  return m;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
  FreeModule s;
  for (std::size_t j : idx) s.deg.push_back(src_.deg[j]);
  Matrix m(tgt_, s);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) m.at(i, k) = at(i, idx[k]);
  return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  FreeModule t;
  for (std::size_t i : idx) t.deg.push_back(tgt_.deg[i]);
  Matrix m(t, src_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t j = 0; j < cols(); ++j) m.at(k, j) = at(idx[k], j);
  return m;
}

Matrix identity(const FreeModule& F) {
  Matrix m(F, F);
  for (std::size_t i = 0; i < F.rank(); ++i) m.at(i, i) = constant(1);
  return m;
}

Matrix zero_map(const FreeModule& tgt, const FreeModule& src) { return Matrix(tgt, src); }

Matrix compose(const Matrix& a, const Matrix& b, const GradedRing& R) {
  if (a.cols() != b.rows()) throw InvariantError("composing maps of incompatible shape");
  Matrix m(a.tgt(), b.src());
  const PolyRing& P = R.poly();
  TermOrder ord = TermOrder::grevlex(P);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Poly acc;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a.at(i, k).empty() || b.at(k, j).empty()) continue;
        acc = add(acc, poly_mul(a.at(i, k), b.at(k, j), P), ord);
      }
      m.at(i, j) = R.reduce(acc);
    }
  return m;
}

Matrix reduce_entries(const Matrix& a, const GradedRing& R) {
  Matrix m = a;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = R.reduce(m.at(i, j));
  return m;
}

Matrix concat_columns(const Matrix& a, const Matrix& b) {
  if (!(a.tgt() == b.tgt())) throw InvariantError("concatenating maps with different targets");
  Matrix m(a.tgt(), direct_sum(a.src(), b.src()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
  }
  return m;
}

Matrix block_sum(const Matrix& a, const Matrix& b) {
  Matrix m(direct_sum(a.tgt(), b.tgt()), direct_sum(a.src(), b.src()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return m;
}

Matrix kron_left(const Matrix& a, const FreeModule& G) {
  const std::size_t n = G.rank();
  Matrix m(tensor(a.tgt(), G), tensor(a.src(), G));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).empty()) continue;
      for (std::size_t k = 0; k < n; ++k) m.at(i * n + k, j * n + k) = a.at(i, j);
    }
  return m;
}

Matrix kron_right(const FreeModule& F, const Matrix& b) {
  const std::size_t r = b.rows(), c = b.cols();
  Matrix m(tensor(F, b.tgt()), tensor(F, b.src()));
  for (std::size_t f = 0; f < F.rank(); ++f)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(f * r + i, f * c + j) = b.at(i, j);
  return m;
}

bool equal(const Matrix& a, const Matrix& b) {
  if (!(a.tgt() == b.tgt()) || !(a.src() == b.src())) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Poly& x = a.at(i, j);
      const Poly& y = b.at(i, j);
      if (x.size() != y.size()) return false;
      for (std::size_t k = 0; k < x.size(); ++k)
        if (!(x[k].m == y[k].m) || x[k].c != y[k].c) return false;
    }
  return true;
}

std::string format_matrix(const Matrix& m, const PolyRing& R) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << R.format(m.at(i, j));
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace rescat
