#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idemrep/finite_group.hpp"
#include "idemrep/semifield.hpp"

namespace idemrep {

/// A vector in the free module K^n.
struct Vector {
  SemifieldTag tag = SemifieldTag::Boolean;
  std::vector<Value> entries;

  static Vector zero(SemifieldTag tag, std::size_t n);
  /// The standard basis vector e_i.
  static Vector basis(SemifieldTag tag, std::size_t n, std::size_t i);

  std::size_t size() const { return entries.size(); }
  bool is_zero() const;
  std::string to_string() const;

  friend bool operator==(const Vector&, const Vector&) = default;
};

Vector add(const Vector& a, const Vector& b);
Vector scale(const Value& c, const Vector& v);

/// A dense matrix over K. Column j is the image of e_j.
class Matrix {
 public:
  Matrix() = default;
  Matrix(SemifieldTag tag, std::size_t rows, std::size_t cols);
  static Matrix identity(SemifieldTag tag, std::size_t n);
  /// Throws ValidationError on ragged rows or mixed tags.
  static Matrix from_rows(SemifieldTag tag, const std::vector<std::vector<Value>>& rows);

  SemifieldTag tag() const { return tag_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Value& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, const Value& v);

  std::string to_string() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;
  /// Entry-wise lexicographic order, used for canonical listings.
  friend bool operator<(const Matrix& a, const Matrix& b);

 private:
  SemifieldTag tag_ = SemifieldTag::Boolean;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Value> entries_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Vector multiply(const Matrix& a, const Vector& v);

/// An invertible linear map e_j -> scalars[j] * e_{perm[j]}.
///
/// Over B and T these are exactly the invertible matrices, so the group
/// GL_n(K) is stored structurally rather than as matrices.
class MonomialMap {
 public:
  /// Validates that perm is a bijection and every scalar is a unit of `tag`.
  static MonomialMap create(SemifieldTag tag, Permutation perm, std::vector<Value> scalars);
  static MonomialMap identity(SemifieldTag tag, std::size_t n);
  /// A pure permutation map (all scalars 1).
  static MonomialMap permutation(SemifieldTag tag, Permutation perm);

  SemifieldTag tag() const { return tag_; }
  std::size_t dim() const { return perm_.size(); }
  const Permutation& perm() const { return perm_; }
  const std::vector<Value>& scalars() const { return scalars_; }

  Matrix to_matrix() const;
  std::string to_string() const;

  friend bool operator==(const MonomialMap&, const MonomialMap&) = default;

 private:
  MonomialMap(SemifieldTag tag, Permutation perm, std::vector<Value> scalars)
      : tag_(tag), perm_(std::move(perm)), scalars_(std::move(scalars)) {}

  SemifieldTag tag_ = SemifieldTag::Boolean;
  Permutation perm_;
  std::vector<Value> scalars_;
};

Vector apply(const MonomialMap& m, const Vector& v);
/// v -> f(g(v)).
MonomialMap compose(const MonomialMap& f, const MonomialMap& g);
MonomialMap invert(const MonomialMap& m);
/// The monomial map with this matrix, or nullopt when some row or column does
/// not have exactly one nonzero entry. Throws on non-square input.
std::optional<MonomialMap> recognize_monomial(const Matrix& a);
/// The permutation of basis lines induced by m.
const Permutation& basis_line_permutation(const MonomialMap& m);

}  // namespace idemrep
