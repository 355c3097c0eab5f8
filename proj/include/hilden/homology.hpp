#pragma once

// Smith normal form over arbitrary-precision integers and H_1 of finite
// presentations.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hilden/presentation.hpp"

namespace hilden {

using Integer = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(std::vector<std::vector<long long>> const& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    IntMatrix   m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) {
        throw std::invalid_argument("IntMatrix: ragged rows");
      }
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer&       operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Integer const& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
  }
  // row_i += q * row_k
  void add_row(std::size_t i, std::size_t k, Integer const& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) += q * (*this)(k, j);
  }
  // col_j += q * col_k
  void add_col(std::size_t j, std::size_t k, Integer const& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) += q * (*this)(i, k);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }

  bool operator==(IntMatrix const&) const = default;

 private:
  std::size_t          rows_ = 0, cols_ = 0;
  std::vector<Integer> a_;
};

inline IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("IntMatrix: dimension mismatch");
  }
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

// Fraction-free Gaussian elimination.
inline Integer determinant(IntMatrix m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("determinant: matrix is not square");
  }
  std::size_t const n    = m.rows();
  Integer           prev = 1;
  int               sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return n == 0 ? Integer(1) : sign * m(n - 1, n - 1);
}

inline bool is_unimodular(IntMatrix const& m) {
  return m.rows() == m.cols() && abs(determinant(m)) == 1;
}

struct SmithForm {
  IntMatrix D, U, V;  // U * M * V == D

  std::vector<Integer> diagonal() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
  }
};

class snf_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline SmithForm smith_normal_form(IntMatrix const& M) {
  SmithForm   f{M, IntMatrix::identity(M.rows()), IntMatrix::identity(M.cols())};
  IntMatrix&  A = f.D;
  std::size_t const r = A.rows(), c = A.cols();

  auto row_op = [&](std::size_t i, std::size_t k, Integer const& q) {
    A.add_row(i, k, q);
    f.U.add_row(i, k, q);
  };
  auto col_op = [&](std::size_t j, std::size_t k, Integer const& q) {
    A.add_col(j, k, q);
    f.V.add_col(j, k, q);
  };

  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    while (true) {
      // Pivot on the smallest nonzero |entry| of the remaining block.
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (A(i, j) != 0 && (!best || abs(A(i, j)) < abs(A(best->first, best->second))))
            best = std::pair{i, j};
      if (!best) {
        break;
      }
      A.swap_rows(t, best->first);
      f.U.swap_rows(t, best->first);
      A.swap_cols(t, best->second);
      f.V.swap_cols(t, best->second);

      bool dirty = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (A(i, t) == 0) continue;
        row_op(i, t, -Integer(A(i, t) / A(t, t)));
        dirty |= A(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (A(t, j) == 0) continue;
        col_op(j, t, -Integer(A(t, j) / A(t, t)));
        dirty |= A(t, j) != 0;
      }
      if (dirty) {
        continue;
      }
      // Row and column t are clear; enforce divisibility of the rest.
      std::optional<std::size_t> bad;
      for (std::size_t i = t + 1; i < r && !bad; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (A(i, j) % A(t, t) != 0) {
            bad = i;
            break;
          }
      if (!bad) {
        break;
      }
      row_op(t, *bad, Integer(1));
    }
    if (A(t, t) < 0) {
      A.negate_row(t);
      f.U.negate_row(t);
    }
  }
  return f;
}

// Checks U*M*V == D, unimodularity, diagonal shape and the divisibility chain.
inline void check_smith_form(IntMatrix const& M, SmithForm const& f) {
  if (f.U * M * f.V != f.D) throw snf_error("SNF: U*M*V != D");
  if (!is_unimodular(f.U) || !is_unimodular(f.V)) throw snf_error("SNF: U or V not unimodular");
  for (std::size_t i = 0; i < f.D.rows(); ++i)
    for (std::size_t j = 0; j < f.D.cols(); ++j)
      if (i != j && f.D(i, j) != 0) throw snf_error("SNF: D is not diagonal");
  auto d = f.diagonal();
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (d[i] < 0) throw snf_error("SNF: negative invariant factor");
    if (d[i] == 0 ? d[i + 1] != 0 : d[i + 1] % d[i] != 0)
      throw snf_error("SNF: divisibility chain broken");
  }
}

struct AbelianInvariants {
  std::size_t          free_rank = 0;
  std::vector<Integer> torsion;  // d_1 | d_2 | ..., each >= 2

  bool operator==(AbelianInvariants const&) const = default;
};

inline std::string to_string(AbelianInvariants const& a) {
  std::string out;
  if (a.free_rank == 1) {
    out = "Z";
  } else if (a.free_rank > 1) {
    out = "Z^" + std::to_string(a.free_rank);
  }
  for (auto const& d : a.torsion) out += (out.empty() ? "Z" : " + Z") + d.str();
  return out.empty() ? "0" : out;
}

inline AbelianInvariants invariants_of(SmithForm const& f, std::size_t generators) {
  AbelianInvariants a;
  std::size_t       rank = 0;
  for (auto const& d : f.diagonal()) {
    if (d == 0) continue;
    ++rank;
    if (d != 1) a.torsion.push_back(d);
  }
  a.free_rank = generators - rank;
  return a;
}

// Exponent-sum matrix: one row per relator, one column per generator.
inline IntMatrix relation_matrix(Presentation const& p) {
  IntMatrix m(p.relations.size(), p.generators().size());
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    Word const w = p.relations[i].relator();
    for (Letter l : w.letters()) m(i, l.generator()) += l.sign();
  }
  return m;
}

inline AbelianInvariants h1_of_presentation(Presentation const& p) {
  return invariants_of(smith_normal_form(relation_matrix(p)), p.generators().size());
}

////////////////////////////////////////////////////////////////////////////
// Named classes
////////////////////////////////////////////////////////////////////////////

struct NamedClass {
  std::string            name;
  Word                   word;
  std::optional<Integer> order;  // none: infinite order
};

struct H1Report {
  AbelianInvariants       invariants;
  std::vector<NamedClass> classes;
  bool                    generates = false;  // the named classes generate H_1
  // The named classes realize the invariants: they generate and their orders
  // are exactly {infinite x free_rank} + torsion.
  bool                    splits = false;
};

// Order of the class of exponent vector v in Z^c / rowspace(M).
inline std::optional<Integer> class_order(SmithForm const& f, std::vector<Integer> const& v) {
  std::size_t const c = f.V.rows();
  auto              d = f.diagonal();
  Integer           order = 1;
  for (std::size_t j = 0; j < c; ++j) {
    Integer y = 0;
    for (std::size_t i = 0; i < c; ++i) y += v[i] * f.V(i, j);
    Integer dj = j < d.size() ? d[j] : Integer(0);
    if (dj == 0) {
      if (y != 0) return std::nullopt;
      continue;
    }
    Integer g   = gcd(abs(y), dj);
    Integer ord = dj / g;
    order       = order / gcd(order, ord) * ord;
  }
  return order;
}

inline std::vector<Integer> exponent_vector(Word const& w) {
  std::vector<Integer> v(w.alphabet()->size());
  for (Letter l : w.letters()) v[l.generator()] += l.sign();
  return v;
}

// Distinguished classes: for lh (and sh with k odd) s1, r1, X = r (r1 s1)^{n(n+1)/2};
// for sh with k even, s1, r1, Y = r s1^{n(n+1)/2}, plus X = t1 s1^n when n is odd.
inline std::vector<NamedClass> distinguished_classes(Presentation const& p) {
  std::string pre;
  if (p.name == "sh") {
    pre = "~";
  } else if (p.name != "lh") {
    throw std::invalid_argument("h1 report: unsupported presentation '" + p.name + "'");
  }
  auto        g    = [&](std::string const& x) { return Word::generator(p.alphabet, pre + x); };
  long const  half = static_cast<long>(p.n * (p.n + 1) / 2);
  std::vector<NamedClass> out;
  out.push_back({"s1", g("s1"), {}});
  out.push_back({"r1", g("r1"), {}});
  if (p.name == "lh" || p.k % 2 == 1) {
    out.push_back({"X", g("r") * power(g("r1") * g("s1"), half), {}});
  } else {
    if (p.n % 2 == 1) {
      out.push_back({"X", g("t1") * power(g("s1"), static_cast<long>(p.n)), {}});
    }
    out.push_back({"Y", g("r") * power(g("s1"), half), {}});
  }
  return out;
}

inline H1Report h1_generators_report(Presentation const& p) {
  H1Report rep;
  auto     M   = relation_matrix(p);
  auto     snf = smith_normal_form(M);
  rep.invariants = invariants_of(snf, p.generators().size());
  rep.classes    = distinguished_classes(p);
  for (auto& c : rep.classes) c.order = class_order(snf, exponent_vector(c.word));

  // Generation: appending the named classes as relations kills everything.
  IntMatrix stacked(M.rows() + rep.classes.size(), M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) stacked(i, j) = M(i, j);
  for (std::size_t k = 0; k < rep.classes.size(); ++k) {
    auto v = exponent_vector(rep.classes[k].word);
    for (std::size_t j = 0; j < M.cols(); ++j) stacked(M.rows() + k, j) = v[j];
  }
  auto quotient = invariants_of(smith_normal_form(stacked), M.cols());
  rep.generates = quotient.free_rank == 0 && quotient.torsion.empty();

  // A surjection from the direct sum of cyclic groups of these orders onto an
  // isomorphic group is an isomorphism.
  std::size_t          infinite = 0;
  std::vector<Integer> finite;
  for (auto const& c : rep.classes) {
    if (!c.order) {
      ++infinite;
    } else if (*c.order != 1) {
      finite.push_back(*c.order);
    }
  }
  std::sort(finite.begin(), finite.end());
  rep.splits = rep.generates && infinite == rep.invariants.free_rank &&
               finite == rep.invariants.torsion;
  return rep;
}

}  // namespace hilden
