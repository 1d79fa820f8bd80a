#include "idemrep/monomial.hpp"

#include <sstream>

namespace idemrep {

namespace {

void require_tag(SemifieldTag expected, const Value& v, const char* where) {
  if (v.tag() != expected) throw TagMismatch(std::string(where) + ": mixed semifields");
}

}  // namespace

Vector Vector::zero(SemifieldTag tag, std::size_t n) {
  return Vector{tag, std::vector<Value>(n, Value::zero(tag))};
}

Vector Vector::basis(SemifieldTag tag, std::size_t n, std::size_t i) {
  Vector v = zero(tag, n);
  v.entries.at(i) = Value::one(tag);
  return v;
}

bool Vector::is_zero() const {
  for (const auto& x : entries)
    if (!x.is_zero()) return false;
  return true;
}

std::string Vector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ", ";
    out += entries[i].to_string();
  }
  return out + ")";
}

Vector add(const Vector& a, const Vector& b) {
  if (a.tag != b.tag) throw TagMismatch("vector add: mixed semifields");
  if (a.size() != b.size()) throw ValidationError("vector add: dimension mismatch");
  Vector out{a.tag, {}};
  out.entries.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.entries.push_back(add(a.entries[i], b.entries[i]));
  return out;
}

Vector scale(const Value& c, const Vector& v) {
  Vector out{v.tag, {}};
  out.entries.reserve(v.size());
  for (const auto& x : v.entries) out.entries.push_back(mul(c, x));
  return out;
}

Matrix::Matrix(SemifieldTag tag, std::size_t rows, std::size_t cols)
    : tag_(tag), rows_(rows), cols_(cols), entries_(rows * cols, Value::zero(tag)) {}

Matrix Matrix::identity(SemifieldTag tag, std::size_t n) {
  Matrix m(tag, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Value::one(tag));
  return m;
}

Matrix Matrix::from_rows(SemifieldTag tag, const std::vector<std::vector<Value>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(tag, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ValidationError("matrix rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, const Value& v) {
  require_tag(tag_, v, "Matrix::set");
  entries_.at(r * cols_ + c) = v;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c);
    os << "]\n";
  }
  return os.str();
}

bool operator<(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    const Value& x = a.entries_[i];
    const Value& y = b.entries_[i];
    if (x == y) continue;
    return natural_leq(x, y);
  }
  return false;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.tag() != b.tag()) throw TagMismatch("matrix multiply: mixed semifields");
  if (a.cols() != b.rows()) throw ValidationError("matrix multiply: dimension mismatch");
  Matrix out(a.tag(), a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) {
      Value acc = Value::zero(a.tag());
      for (std::size_t k = 0; k < a.cols(); ++k) acc = add(acc, mul(a.at(r, k), b.at(k, c)));
      out.set(r, c, acc);
    }
  return out;
}

Vector multiply(const Matrix& a, const Vector& v) {
  if (a.tag() != v.tag) throw TagMismatch("matrix-vector multiply: mixed semifields");
  if (a.cols() != v.size()) throw ValidationError("matrix-vector multiply: dimension mismatch");
  Vector out = Vector::zero(a.tag(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k)
      out.entries[r] = add(out.entries[r], mul(a.at(r, k), v.entries[k]));
  return out;
}

MonomialMap MonomialMap::create(SemifieldTag tag, Permutation perm, std::vector<Value> scalars) {
  if (!is_permutation(perm)) throw ValidationError("monomial map: perm is not a bijection");
  if (scalars.size() != perm.size()) {
    throw ValidationError("monomial map: scalar count differs from dimension");
  }
  for (const auto& s : scalars) {
    require_tag(tag, s, "monomial map");
    if (s.is_zero()) throw ValidationError("monomial map: scalars must be units");
  }
  return MonomialMap(tag, std::move(perm), std::move(scalars));
}

MonomialMap MonomialMap::identity(SemifieldTag tag, std::size_t n) {
  return MonomialMap(tag, identity_permutation(n), std::vector<Value>(n, Value::one(tag)));
}

MonomialMap MonomialMap::permutation(SemifieldTag tag, Permutation perm) {
  const std::size_t n = perm.size();
  return create(tag, std::move(perm), std::vector<Value>(n, Value::one(tag)));
}

Matrix MonomialMap::to_matrix() const {
  Matrix m(tag_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set(perm_[j], j, scalars_[j]);
  return m;
}

std::string MonomialMap::to_string() const {
  std::ostringstream os;
  os << "perm " << cycle_notation(perm_) << " scalars (";
  for (std::size_t j = 0; j < scalars_.size(); ++j) os << (j ? ", " : "") << scalars_[j];
  os << ')';
  return os.str();
}

Vector apply(const MonomialMap& m, const Vector& v) {
  if (m.tag() != v.tag) throw TagMismatch("apply: mixed semifields");
  if (m.dim() != v.size()) throw ValidationError("apply: dimension mismatch");
  Vector out = Vector::zero(v.tag, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    out.entries[m.perm()[j]] = mul(m.scalars()[j], v.entries[j]);
  }
  return out;
}

MonomialMap compose(const MonomialMap& f, const MonomialMap& g) {
  if (f.tag() != g.tag()) throw TagMismatch("compose: mixed semifields");
  if (f.dim() != g.dim()) throw ValidationError("compose: dimension mismatch");
  std::vector<Value> scalars;
  scalars.reserve(g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j) {
    scalars.push_back(mul(g.scalars()[j], f.scalars()[g.perm()[j]]));
  }
  return MonomialMap::create(f.tag(), compose_permutations(f.perm(), g.perm()), std::move(scalars));
}

MonomialMap invert(const MonomialMap& m) {
  std::vector<Value> scalars(m.dim(), Value::one(m.tag()));
  for (std::size_t j = 0; j < m.dim(); ++j) scalars[m.perm()[j]] = inv(m.scalars()[j]);
  return MonomialMap::create(m.tag(), invert_permutation(m.perm()), std::move(scalars));
}

std::optional<MonomialMap> recognize_monomial(const Matrix& a) {
  if (a.rows() != a.cols()) throw ValidationError("recognize_monomial: matrix is not square");
  const std::size_t n = a.rows();
  Permutation perm(n);
  std::vector<Value> scalars(n, Value::one(a.tag()));
  std::vector<int> row_hits(n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    int hits = 0;
    for (std::size_t r = 0; r < n; ++r) {
      if (a.at(r, c).is_zero()) continue;
      ++hits;
      ++row_hits[r];
      perm[c] = static_cast<std::uint32_t>(r);
      scalars[c] = a.at(r, c);
    }
    if (hits != 1) return std::nullopt;
  }
  for (int h : row_hits)
    if (h != 1) return std::nullopt;
  return MonomialMap::create(a.tag(), std::move(perm), std::move(scalars));
}

const Permutation& basis_line_permutation(const MonomialMap& m) { return m.perm(); }

}  // namespace idemrep
