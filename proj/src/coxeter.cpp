#include "coxeter.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <unordered_map>

namespace nh {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::DiagonalNotTwo: return "DiagonalNotTwo";
    case ErrorCode::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case ErrorCode::AsymmetricZero: return "AsymmetricZero";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::BadGenerator: return "BadGenerator";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::EndpointMismatch: return "EndpointMismatch";
    case ErrorCode::HasD1: return "HasD1";
    case ErrorCode::NotLinear: return "NotLinear";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::OracleBoundExceeded: return "OracleBoundExceeded";
    case ErrorCode::NonConstantEntries: return "NonConstantEntries";
    case ErrorCode::SystemMismatch: return "SystemMismatch";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ExampleMismatch: return "ExampleMismatch";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in matrix arithmetic");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in matrix arithmetic");
  return r;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  IntMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      Int v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < n_; ++j)
        out.at(i, j) = checked_add(out.at(i, j), checked_mul(v, rhs.at(k, j)));
    }
  return out;
}

bool IntMatrix::is_identity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::size_t IntMatrix::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (Int v : a_) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

namespace detail {

constexpr std::uint32_t kUnset = 0xffffffffu;

struct ElemRec {
  IntMatrix mat;  // action of w on h*
  IntMatrix inv;  // action of w^{-1}
  unsigned length = 0;
  std::uint64_t rdesc = 0;  // right descent set, bit per generator
  std::uint64_t ldesc = 0;
  std::vector<std::uint32_t> right;  // (w*s) ids, lazily filled
  std::vector<std::uint32_t> left;   // (s*w) ids
};

struct SystemImpl {
  std::vector<std::string> names;
  int rank = 0;
  std::vector<Int> cart;      // rank*rank
  std::vector<unsigned> cox;  // rank*rank, kInfiniteOrder for infinity
  std::vector<IntMatrix> act;

  mutable std::mutex mu;
  mutable std::deque<ElemRec> elems;
  mutable std::unordered_map<std::size_t, std::vector<std::uint32_t>> by_hash;
  mutable std::map<std::pair<std::uint32_t, std::uint32_t>, bool> bruhat_cache;

  Int cartan(int s, int t) const { return cart[static_cast<std::size_t>(s) * rank + t]; }

  // Column s of the action matrix of w is the coordinate vector of
  // w(alpha_s). For a real root these coordinates are sign-coherent.
  static std::uint64_t descent_mask(const IntMatrix& m, int rank) {
    std::uint64_t mask = 0;
    for (int s = 0; s < rank; ++s) {
      bool nonpos = true, nonneg = true;
      for (int i = 0; i < rank; ++i) {
        Int v = m.at(i, s);
        if (v > 0) nonpos = false;
        if (v < 0) nonneg = false;
      }
      if (!nonpos && !nonneg)
        fail(ErrorCode::Internal, "image of a simple root is not sign-coherent");
      if (nonpos) mask |= (std::uint64_t{1} << s);
    }
    return mask;
  }

  std::uint32_t insert_locked(ElemRec rec) const {
    std::size_t h = rec.mat.hash();
    auto& bucket = by_hash[h];
    for (std::uint32_t id : bucket)
      if (elems[id].mat == rec.mat) return id;
    rec.rdesc = descent_mask(rec.mat, rank);
    rec.ldesc = descent_mask(rec.inv, rank);
    rec.right.assign(static_cast<std::size_t>(rank), kUnset);
    rec.left.assign(static_cast<std::size_t>(rank), kUnset);
    auto id = static_cast<std::uint32_t>(elems.size());
    elems.push_back(std::move(rec));
    bucket.push_back(id);
    return id;
  }

  std::uint32_t lookup_locked(const IntMatrix& m) const {
    auto it = by_hash.find(m.hash());
    if (it == by_hash.end()) return kUnset;
    for (std::uint32_t id : it->second)
      if (elems[id].mat == m) return id;
    return kUnset;
  }

  // Interns an arbitrary action matrix; length and inverse are found by
  // stripping right descents. Used only at construction and as a
  // fallback; products with generators go through times/pre_times.
  std::uint32_t intern(const IntMatrix& m) const {
    {
      std::lock_guard<std::mutex> lk(mu);
      std::uint32_t id = lookup_locked(m);
      if (id != kUnset) return id;
    }
    IntMatrix cur = m;
    IntMatrix inv = IntMatrix::identity(rank);
    unsigned len = 0;
    while (!cur.is_identity()) {
      std::uint64_t mask = descent_mask(cur, rank);
      if (mask == 0) fail(ErrorCode::Internal, "non-identity element without right descent");
      int s = __builtin_ctzll(mask);
      cur = mul_right_gen(cur, s);
      inv = mul_right_gen(inv, s);
      ++len;
      if (len > 100000) fail(ErrorCode::Internal, "descent stripping failed to terminate");
    }
    ElemRec rec;
    rec.mat = m;
    rec.inv = inv;
    rec.length = len;
    std::lock_guard<std::mutex> lk(mu);
    return insert_locked(std::move(rec));
  }

  // M * A_s as a column operation: col_t -= cartan[s][t] * col_s.
  IntMatrix mul_right_gen(const IntMatrix& m, int s) const {
    IntMatrix out = m;
    std::vector<Int> cs(rank);
    for (int i = 0; i < rank; ++i) cs[i] = m.at(i, s);
    for (int t = 0; t < rank; ++t) {
      Int c = cartan(s, t);
      if (c == 0) continue;
      for (int i = 0; i < rank; ++i)
        out.at(i, t) = checked_add(out.at(i, t), -checked_mul(c, cs[i]));
    }
    return out;
  }

  // A_s * M as a row operation: row_s -= sum_t cartan[s][t] * row_t.
  IntMatrix mul_left_gen(int s, const IntMatrix& m) const {
    IntMatrix out = m;
    std::vector<Int> acc(rank, 0);
    for (int t = 0; t < rank; ++t) {
      Int c = cartan(s, t);
      if (c == 0) continue;
      for (int j = 0; j < rank; ++j)
        acc[j] = checked_add(acc[j], checked_mul(c, m.at(t, j)));
    }
    for (int j = 0; j < rank; ++j)
      out.at(s, j) = checked_add(out.at(s, j), -acc[j]);
    return out;
  }

  std::uint32_t times(std::uint32_t w, int s) const {
    IntMatrix mat, inv;
    unsigned len;
    {
      std::lock_guard<std::mutex> lk(mu);
      const ElemRec& rec = elems[w];
      std::uint32_t cached = rec.right[s];
      if (cached != kUnset) return cached;
      bool desc = (rec.rdesc >> s) & 1;
      len = rec.length + (desc ? -1 : 1);
      mat = mul_right_gen(rec.mat, s);
      inv = mul_left_gen(s, rec.inv);
    }
    ElemRec out;
    out.mat = std::move(mat);
    out.inv = std::move(inv);
    out.length = len;
    std::lock_guard<std::mutex> lk(mu);
    std::uint32_t id = insert_locked(std::move(out));
    elems[w].right[s] = id;
    elems[id].right[s] = w;
    return id;
  }

  std::uint32_t pre_times(int s, std::uint32_t w) const {
    IntMatrix mat, inv;
    unsigned len;
    {
      std::lock_guard<std::mutex> lk(mu);
      const ElemRec& rec = elems[w];
      std::uint32_t cached = rec.left[s];
      if (cached != kUnset) return cached;
      bool desc = (rec.ldesc >> s) & 1;
      len = rec.length + (desc ? -1 : 1);
      mat = mul_left_gen(s, rec.mat);
      inv = mul_right_gen(rec.inv, s);
    }
    ElemRec out;
    out.mat = std::move(mat);
    out.inv = std::move(inv);
    out.length = len;
    std::lock_guard<std::mutex> lk(mu);
    std::uint32_t id = insert_locked(std::move(out));
    elems[w].left[s] = id;
    elems[id].left[s] = w;
    return id;
  }

  unsigned len_of(std::uint32_t w) const {
    std::lock_guard<std::mutex> lk(mu);
    return elems[w].length;
  }
  std::uint64_t rdesc_of(std::uint32_t w) const {
    std::lock_guard<std::mutex> lk(mu);
    return elems[w].rdesc;
  }
  std::uint64_t ldesc_of(std::uint32_t w) const {
    std::lock_guard<std::mutex> lk(mu);
    return elems[w].ldesc;
  }
  IntMatrix matrix_of(std::uint32_t w) const {
    std::lock_guard<std::mutex> lk(mu);
    return elems[w].mat;
  }

  std::uint32_t star(std::uint32_t x, int s) const {
    if ((rdesc_of(x) >> s) & 1) return x;
    return times(x, s);
  }

  // Bruhat order by the standard descent recursion.
  bool leq(std::uint32_t x, std::uint32_t w) const {
    if (x == w) return true;
    unsigned lx = len_of(x), lw = len_of(w);
    if (lx >= lw) return false;
    {
      std::lock_guard<std::mutex> lk(mu);
      auto it = bruhat_cache.find({x, w});
      if (it != bruhat_cache.end()) return it->second;
    }
    int s = __builtin_ctzll(rdesc_of(w));
    std::uint32_t ws = times(w, s);
    std::uint32_t xs = times(x, s);
    bool r = (len_of(xs) < lx) ? leq(xs, ws) : leq(x, ws);
    std::lock_guard<std::mutex> lk(mu);
    bruhat_cache.emplace(std::make_pair(x, w), r);
    return r;
  }

  void check_generator(int s) const {
    if (s < 0 || s >= rank)
      fail(ErrorCode::BadGenerator, "generator index " + std::to_string(s) + " out of range");
  }
};

}  // namespace detail

namespace {

// Multiplicative order of m, or kInfiniteOrder if it exceeds the cap.
unsigned matrix_order(const IntMatrix& m, unsigned cap) {
  IntMatrix p = m;
  for (unsigned k = 1; k <= cap; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  return kInfiniteOrder;
}

unsigned derived_order(Int p) {
  if (p == 0) return 2;
  if (p == 1) return 3;
  if (p == 2) return 4;
  if (p == 3) return 6;
  return kInfiniteOrder;
}

}  // namespace

CoxeterSystem CoxeterSystem::create(
    std::vector<std::string> generator_names,
    const std::vector<std::vector<Int>>& cartan,
    const std::optional<std::vector<std::vector<unsigned>>>& coxeter_override) {
  const int n = static_cast<int>(cartan.size());
  if (n < 1) fail(ErrorCode::InvalidArgument, "Cartan matrix must have size >= 1");
  if (n > 60) fail(ErrorCode::InvalidArgument, "rank > 60 not supported");
  for (const auto& row : cartan)
    if (static_cast<int>(row.size()) != n)
      fail(ErrorCode::InvalidArgument, "Cartan matrix must be square");
  if (generator_names.empty()) {
    for (int i = 0; i < n; ++i) generator_names.push_back("s" + std::to_string(i + 1));
  }
  if (static_cast<int>(generator_names.size()) != n)
    fail(ErrorCode::InvalidArgument, "generator name count does not match Cartan size");
  for (int s = 0; s < n; ++s) {
    if (cartan[s][s] != 2)
      fail(ErrorCode::DiagonalNotTwo, "cartan[" + std::to_string(s) + "][" + std::to_string(s) + "] != 2");
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      if (cartan[s][t] > 0)
        fail(ErrorCode::PositiveOffDiagonal,
             "cartan[" + std::to_string(s) + "][" + std::to_string(t) + "] > 0");
      if ((cartan[s][t] == 0) != (cartan[t][s] == 0))
        fail(ErrorCode::AsymmetricZero,
             "cartan[" + std::to_string(s) + "][" + std::to_string(t) + "] = 0 but the transpose entry is not");
    }
  }

  auto impl = std::make_shared<detail::SystemImpl>();
  impl->rank = n;
  impl->names = std::move(generator_names);
  impl->cart.resize(static_cast<std::size_t>(n) * n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) impl->cart[static_cast<std::size_t>(s) * n + t] = cartan[s][t];

  // s(alpha_t) = alpha_t - cartan[s][t] alpha_s
  impl->act.reserve(n);
  for (int s = 0; s < n; ++s) {
    IntMatrix a = IntMatrix::identity(n);
    for (int t = 0; t < n; ++t) a.at(s, t) -= cartan[s][t];
    impl->act.push_back(std::move(a));
  }

  impl->cox.assign(static_cast<std::size_t>(n) * n, 0);
  if (coxeter_override) {
    const auto& ov = *coxeter_override;
    if (static_cast<int>(ov.size()) != n)
      fail(ErrorCode::InvalidArgument, "Coxeter matrix must match Cartan size");
    for (const auto& row : ov)
      if (static_cast<int>(row.size()) != n)
        fail(ErrorCode::InvalidArgument, "Coxeter matrix must be square");
    for (int s = 0; s < n; ++s) {
      if (ov[s][s] != 1) fail(ErrorCode::InvalidArgument, "Coxeter matrix diagonal must be 1");
      for (int t = 0; t < n; ++t) {
        if (ov[s][t] != ov[t][s])
          fail(ErrorCode::InvalidArgument, "Coxeter matrix must be symmetric");
        if (s != t && ov[s][t] != kInfiniteOrder && ov[s][t] < 2)
          fail(ErrorCode::InvalidArgument, "off-diagonal Coxeter entries must be >= 2 or infinity");
      }
    }
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        if (s == t) {
          impl->cox[static_cast<std::size_t>(s) * n + t] = 1;
          continue;
        }
        unsigned m = ov[s][t];
        impl->cox[static_cast<std::size_t>(s) * n + t] = m;
        if (t < s) continue;  // each pair checked once
        Int p = checked_mul(cartan[s][t], cartan[t][s]);
        unsigned derived = derived_order(p);
        if (m == derived) continue;
        if (m == kInfiniteOrder) {
          // The (st) action has infinite order exactly when p >= 4.
          fail(ErrorCode::OrderMismatch,
               "m_st overridden to infinity but the (st) action has finite order");
        }
        unsigned actual = matrix_order(impl->act[s] * impl->act[t], std::max(m, 64u));
        if (actual != m)
          fail(ErrorCode::OrderMismatch,
               "override m_st = " + std::to_string(m) + " but the (st) action has order " +
                   (actual == kInfiniteOrder ? std::string("> cap") : std::to_string(actual)));
      }
  } else {
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        if (s == t) {
          impl->cox[static_cast<std::size_t>(s) * n + t] = 1;
        } else {
          Int p = checked_mul(cartan[s][t], cartan[t][s]);
          impl->cox[static_cast<std::size_t>(s) * n + t] = derived_order(p);
        }
      }
  }

  // id gets pool slot 0
  detail::ElemRec rec;
  rec.mat = IntMatrix::identity(n);
  rec.inv = IntMatrix::identity(n);
  rec.length = 0;
  {
    std::lock_guard<std::mutex> lk(impl->mu);
    impl->insert_locked(std::move(rec));
  }

  CoxeterSystem sys;
  sys.impl_ = std::move(impl);
  return sys;
}

int CoxeterSystem::rank() const { return impl_->rank; }

const std::string& CoxeterSystem::generator_name(int s) const {
  impl_->check_generator(s);
  return impl_->names[s];
}

int CoxeterSystem::generator_index(const std::string& name) const {
  for (int s = 0; s < impl_->rank; ++s)
    if (impl_->names[s] == name) return s;
  return -1;
}

Int CoxeterSystem::cartan(int s, int t) const {
  impl_->check_generator(s);
  impl_->check_generator(t);
  return impl_->cartan(s, t);
}

unsigned CoxeterSystem::coxeter_order(int s, int t) const {
  impl_->check_generator(s);
  impl_->check_generator(t);
  return impl_->cox[static_cast<std::size_t>(s) * impl_->rank + t];
}

const IntMatrix& CoxeterSystem::generator_action(int s) const {
  impl_->check_generator(s);
  return impl_->act[s];
}

Element CoxeterSystem::identity() const { return Element(impl_, 0); }

Element CoxeterSystem::generator(int s) const {
  impl_->check_generator(s);
  return Element(impl_, impl_->times(0, s));
}

Element CoxeterSystem::element_from_word(std::span<const int> word) const {
  std::uint32_t w = 0;
  for (int s : word) {
    impl_->check_generator(s);
    w = impl_->times(w, s);
  }
  return Element(impl_, w);
}

Element CoxeterSystem::demazure_product(std::span<const int> word) const {
  std::uint32_t w = 0;
  for (int s : word) {
    impl_->check_generator(s);
    w = impl_->star(w, s);
  }
  return Element(impl_, w);
}

CoxeterSystem Element::system() const {
  CoxeterSystem sys;
  sys.impl_ = impl_;
  return sys;
}

unsigned Element::length() const { return impl_->len_of(id_); }

IntMatrix Element::matrix() const { return impl_->matrix_of(id_); }

bool Element::right_descent(int s) const {
  impl_->check_generator(s);
  return (impl_->rdesc_of(id_) >> s) & 1;
}

bool Element::left_descent(int s) const {
  impl_->check_generator(s);
  return (impl_->ldesc_of(id_) >> s) & 1;
}

Element Element::times(int s) const {
  impl_->check_generator(s);
  return Element(impl_, impl_->times(id_, s));
}

Element Element::pre_times(int s) const {
  impl_->check_generator(s);
  return Element(impl_, impl_->pre_times(s, id_));
}

unsigned length(const Element& w) { return w.length(); }

bool is_right_descent(const Element& w, int s) { return w.right_descent(s); }

namespace {
void require_same(const Element& a, const Element& b) {
  if (!a.valid() || !b.valid()) fail(ErrorCode::InvalidArgument, "uninitialized element");
  if (!a.system().same_system(b.system()))
    fail(ErrorCode::SystemMismatch, "elements belong to different Coxeter systems");
}
}  // namespace

bool bruhat_leq(const Element& x, const Element& w) {
  require_same(x, w);
  return x.impl_->leq(x.id_, w.id_);
}

Element demazure_star(const Element& x, int s) {
  if (x.right_descent(s)) return x;
  return x.times(s);
}

Element demazure_star(const Element& x, const Element& y) {
  require_same(x, y);
  Element acc = x;
  for (int s : canonical_word(y)) acc = demazure_star(acc, s);
  return acc;
}

std::vector<int> canonical_word(const Element& w) {
  std::vector<int> out;
  Element cur = w;
  while (!cur.is_identity()) {
    int rank = cur.system().rank();
    int s = 0;
    while (s < rank && !cur.left_descent(s)) ++s;
    if (s == rank) fail(ErrorCode::Internal, "non-identity element without left descent");
    out.push_back(s);
    cur = cur.pre_times(s);
  }
  return out;
}

std::string word_to_string(const CoxeterSystem& sys, std::span<const int> word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += sys.generator_name(word[i]);
  }
  return out;
}

}  // namespace nh
