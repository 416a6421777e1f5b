#pragma once

// Coxeter systems defined by integral generalized Cartan matrices.
//
// A group element is represented by its action on h* written in
// simple-root coordinates, which is exact and works uniformly for
// finite and affine systems. Faithfulness of this representation is a
// standing assumption (it holds for every generalized Cartan matrix
// realization over the root lattice). Elements of one system are
// interned in a shared pool, so equality tests and repeated products
// with generators are cheap lookups; the pool is synchronized and all
// public operations are pure.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nh {

using Int = long long;

enum class ErrorCode {
  Parse,
  DiagonalNotTwo,
  PositiveOffDiagonal,
  AsymmetricZero,
  OrderMismatch,
  BadGenerator,
  LengthMismatch,
  EndpointMismatch,
  HasD1,
  NotLinear,
  InexactDivision,
  OracleBoundExceeded,
  NonConstantEntries,
  SystemMismatch,
  Overflow,
  InvalidArgument,
  ExampleMismatch,
  Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& msg);

// Dense square matrix over 64-bit integers. All arithmetic is
// overflow-checked: entries of Weyl-group action matrices stay tiny at
// the scales this library targets, and a checked failure is preferred
// over silent wraparound.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}
  static IntMatrix identity(int n);

  int dim() const { return n_; }
  Int at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;
  bool is_identity() const;
  std::size_t hash() const;

 private:
  int n_ = 0;
  std::vector<Int> a_;
};

Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

// Coxeter matrix entry denoting m_st = infinity.
inline constexpr unsigned kInfiniteOrder = 0;

namespace detail {
struct SystemImpl;
}

class Element;

class CoxeterSystem {
 public:
  CoxeterSystem() = default;

  // cartan[s][t] = <alpha_t, alpha_s^vee>. The Coxeter matrix is derived
  // from p = cartan[s][t]*cartan[t][s] by the crystallographic rule
  // (p = 0,1,2,3 gives m = 2,3,4,6; p >= 4 gives infinity) unless
  // overridden, in which case the order of the (st) action matrix is
  // verified to equal the override.
  static CoxeterSystem create(
      std::vector<std::string> generator_names,
      const std::vector<std::vector<Int>>& cartan,
      const std::optional<std::vector<std::vector<unsigned>>>& coxeter_override = {});

  bool valid() const { return impl_ != nullptr; }
  int rank() const;
  const std::string& generator_name(int s) const;
  int generator_index(const std::string& name) const;  // -1 when unknown
  Int cartan(int s, int t) const;
  unsigned coxeter_order(int s, int t) const;  // kInfiniteOrder for infinity
  const IntMatrix& generator_action(int s) const;

  Element identity() const;
  Element generator(int s) const;
  Element element_from_word(std::span<const int> word) const;
  Element demazure_product(std::span<const int> word) const;

  bool same_system(const CoxeterSystem& other) const { return impl_ == other.impl_; }

 private:
  friend class Element;
  friend struct detail::SystemImpl;
  std::shared_ptr<const detail::SystemImpl> impl_;
};

class Element {
 public:
  Element() = default;

  bool valid() const { return impl_ != nullptr; }
  CoxeterSystem system() const;
  unsigned length() const;
  bool is_identity() const { return length() == 0; }
  IntMatrix matrix() const;

  // Stable id within the owning system instance; usable as a map key.
  std::uint32_t key() const { return id_; }

  bool right_descent(int s) const;
  bool left_descent(int s) const;
  Element times(int s) const;      // w * s
  Element pre_times(int s) const;  // s * w

  friend bool operator==(const Element& a, const Element& b) {
    return a.impl_ == b.impl_ && a.id_ == b.id_;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
  // Arbitrary but strict order (pool discovery order), for map keys.
  friend bool operator<(const Element& a, const Element& b) {
    return a.impl_ == b.impl_ ? a.id_ < b.id_ : a.impl_ < b.impl_;
  }

 private:
  friend class CoxeterSystem;
  friend struct detail::SystemImpl;
  friend bool bruhat_leq(const Element& x, const Element& w);
  Element(std::shared_ptr<const detail::SystemImpl> impl, std::uint32_t id)
      : impl_(std::move(impl)), id_(id) {}
  std::shared_ptr<const detail::SystemImpl> impl_;
  std::uint32_t id_ = 0;
};

unsigned length(const Element& w);
bool is_right_descent(const Element& w, int s);
bool bruhat_leq(const Element& x, const Element& w);
Element demazure_star(const Element& x, int s);
Element demazure_star(const Element& x, const Element& y);

// ShortLex normal form: repeatedly strip the least left descent.
std::vector<int> canonical_word(const Element& w);

std::string word_to_string(const CoxeterSystem& sys, std::span<const int> word);

}  // namespace nh
