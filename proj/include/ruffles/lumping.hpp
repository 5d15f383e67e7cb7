#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ruffles/parallel.hpp"

namespace ruffles {

// Partition of a finite ordered element set by a statistic. Classes are
// ordered by their statistic key, elements ascending within each class, so
// every downstream table is deterministic.
template <class T>
struct ClassTable {
  std::string statistic;
  std::vector<T> elements;                 // ascending, no duplicates
  std::vector<std::string> labels;         // one per class
  std::vector<std::vector<int>> members;   // element indices per class
  std::vector<int> class_of;               // element index -> class index

  int classes() const { return static_cast<int>(labels.size()); }
  std::int64_t class_size(int c) const {
    return static_cast<std::int64_t>(members[static_cast<std::size_t>(c)].size());
  }
};

// key_fn maps an element to a sort key (vector<int>); label_fn renders the
// key for reports.
template <class T, class KeyFn, class LabelFn>
ClassTable<T> classify(std::vector<T> elements, std::string statistic, KeyFn&& key_fn,
                       LabelFn&& label_fn) {
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
    throw std::invalid_argument("classify: duplicate elements");
  std::map<std::vector<int>, std::vector<int>> buckets;
  for (std::size_t i = 0; i < elements.size(); ++i)
    buckets[key_fn(elements[i])].push_back(static_cast<int>(i));
  ClassTable<T> table;
  table.statistic = std::move(statistic);
  table.elements = std::move(elements);
  table.class_of.assign(table.elements.size(), -1);
  for (auto& [key, idxs] : buckets) {
    const int c = table.classes();
    table.labels.push_back(label_fn(key));
    for (int i : idxs) table.class_of[static_cast<std::size_t>(i)] = c;
    table.members.push_back(std::move(idxs));
  }
  return table;
}

// Canonical label renderings.
inline std::string scalar_label(const std::vector<int>& key) { return std::to_string(key.at(0)); }

inline std::string set_label(const std::vector<int>& key) {
  std::string s = "{";
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(key[i]);
  }
  return s + "}";
}

// radix:[c0,c1,...] for cut classes.
inline std::string cut_label(const std::vector<int>& key) {
  std::string s = std::to_string(key.at(0)) + ":[";
  for (std::size_t i = 1; i < key.size(); ++i) {
    if (i > 1) s += ',';
    s += std::to_string(key[i]);
  }
  return s + "]";
}

// Exact counts C_{[a],[b],[c]}: the number of ways of writing x*y = c with
// x in class a, y in class b, constant over representatives c.
struct StructureTable {
  std::string a_statistic, b_statistic, c_statistic;
  std::vector<std::string> a_labels, b_labels, c_labels;
  std::vector<std::int64_t> a_sizes, b_sizes, c_sizes;
  std::vector<std::int64_t> constants;  // dense, index (a*nb + b)*nc + c

  std::int64_t at(int a, int b, int c) const {
    const auto nb = static_cast<std::int64_t>(b_labels.size());
    const auto nc = static_cast<std::int64_t>(c_labels.size());
    return constants[static_cast<std::size_t>((a * nb + b) * nc + c)];
  }
};

template <class T>
struct StructureCounterexample {
  int a_class = 0, b_class = 0, c_class = 0;
  T witness1{}, witness2{};          // representatives of the c-class
  std::int64_t count1 = 0, count2 = 0;
};

template <class T>
struct StructureOutcome {
  std::optional<StructureTable> table;
  std::optional<StructureCounterexample<T>> counterexample;
  bool ok() const { return table.has_value(); }
};

namespace detail {

template <class T>
int index_of(const std::vector<T>& sorted, const T& value, const char* what) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), value);
  if (it == sorted.end() || !(*it == value))
    throw std::invalid_argument(std::string(what) + ": product escapes the element set");
  return static_cast<int>(it - sorted.begin());
}

}  // namespace detail

// General graded form: products of A-elements with B-elements must land in
// C's element set. The group-algebra case is A = B = C. A single streaming
// pass counts products per (a-class, b-class, c-element); the table exists
// iff the counts are constant over every c-class.
template <class T, class Prod>
StructureOutcome<T> structure_constants(const ClassTable<T>& A, const ClassTable<T>& B,
                                        const ClassTable<T>& C, Prod&& prod, int workers = 1) {
  const std::int64_t na = A.classes(), nb = B.classes(), nc = C.classes();
  const std::int64_t n_elems_a = static_cast<std::int64_t>(A.elements.size());
  const std::int64_t n_elems_b = static_cast<std::int64_t>(B.elements.size());
  const std::int64_t n_elems_c = static_cast<std::int64_t>(C.elements.size());
  const std::int64_t pairs = n_elems_a * n_elems_b;

  const int lanes = workers > 1 ? workers : 1;
  std::vector<std::vector<std::int64_t>> lane_counts(
      static_cast<std::size_t>(lanes),
      std::vector<std::int64_t>(static_cast<std::size_t>(na * nb * n_elems_c), 0));
  run_partitioned(pairs, workers, [&](int w, std::int64_t begin, std::int64_t end) {
    auto& counts = lane_counts[static_cast<std::size_t>(w)];
    for (std::int64_t k = begin; k < end; ++k) {
      const auto i = static_cast<std::size_t>(k / n_elems_b);
      const auto j = static_cast<std::size_t>(k % n_elems_b);
      const T z = prod(A.elements[i], B.elements[j]);
      const int zi = detail::index_of(C.elements, z, "structure_constants");
      const std::int64_t slot =
          (static_cast<std::int64_t>(A.class_of[i]) * nb + B.class_of[j]) * n_elems_c + zi;
      ++counts[static_cast<std::size_t>(slot)];
    }
  });
  std::vector<std::int64_t>& counts = lane_counts[0];
  for (int w = 1; w < lanes; ++w)
    for (std::size_t s = 0; s < counts.size(); ++s) counts[s] += lane_counts[static_cast<std::size_t>(w)][s];

  StructureOutcome<T> out;
  StructureTable table;
  table.a_statistic = A.statistic;
  table.b_statistic = B.statistic;
  table.c_statistic = C.statistic;
  table.a_labels = A.labels;
  table.b_labels = B.labels;
  table.c_labels = C.labels;
  for (int a = 0; a < na; ++a) table.a_sizes.push_back(A.class_size(a));
  for (int b = 0; b < nb; ++b) table.b_sizes.push_back(B.class_size(b));
  for (int c = 0; c < nc; ++c) table.c_sizes.push_back(C.class_size(c));
  table.constants.assign(static_cast<std::size_t>(na * nb * nc), 0);

  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b) {
      const std::int64_t base = (static_cast<std::int64_t>(a) * nb + b) * n_elems_c;
      std::int64_t row_sum = 0;
      for (int c = 0; c < nc; ++c) {
        const auto& group = C.members[static_cast<std::size_t>(c)];
        const std::int64_t expected = counts[static_cast<std::size_t>(base + group.front())];
        for (int m : group) {
          const std::int64_t got = counts[static_cast<std::size_t>(base + m)];
          if (got != expected) {
            out.counterexample = StructureCounterexample<T>{
                a, b, c, C.elements[static_cast<std::size_t>(group.front())],
                C.elements[static_cast<std::size_t>(m)], expected, got};
            return out;
          }
        }
        table.constants[static_cast<std::size_t>((static_cast<std::int64_t>(a) * nb + b) * nc + c)] =
            expected;
        row_sum += expected * C.class_size(c);
      }
      if (row_sum != A.class_size(a) * B.class_size(b))
        throw std::logic_error("structure_constants: row-sum identity violated");
    }
  out.table = std::move(table);
  return out;
}

template <class T, class Prod>
StructureOutcome<T> structure_constants(const ClassTable<T>& table, Prod&& prod, int workers = 1) {
  return structure_constants(table, table, table, std::forward<Prod>(prod), workers);
}

// Restructure constants D_{[a]_mu,[b]_nu}: the number of x in the source
// class with f(x) = b, constant over representatives b of each target class.
// When the rows and columns can be reordered into lower-triangular form with
// non-zero diagonal, the ordering and the diagonal are reported along with
// the matrix; target classes with no preimage at all sit outside the square
// part and are listed separately.
struct RestructureMatrix {
  std::string source_statistic, target_statistic;
  std::vector<std::string> row_labels, col_labels;
  std::vector<std::int64_t> row_sizes, col_sizes;
  std::vector<std::int64_t> entries;  // dense rows x cols

  std::int64_t at(int r, int c) const {
    return entries[static_cast<std::size_t>(r) * col_labels.size() + static_cast<std::size_t>(c)];
  }

  bool triangular = false;
  std::vector<int> row_order;  // row_order[t] = row occupying diagonal slot t
  std::vector<int> col_order;
  std::vector<std::int64_t> diagonal;
  std::vector<int> unhit_columns;  // target classes with an all-zero column
};

template <class TN>
struct RestructureCounterexample {
  int source_class = 0, target_class = 0;
  TN witness1{}, witness2{};
  std::int64_t count1 = 0, count2 = 0;
};

template <class TN>
struct RestructureOutcome {
  std::optional<RestructureMatrix> matrix;
  std::optional<RestructureCounterexample<TN>> counterexample;
  bool ok() const { return matrix.has_value(); }
};

namespace detail {

// Greedy elimination: repeatedly take the row with a single remaining
// non-zero column (smallest row first on ties); that column joins it on the
// diagonal. Leftover rows with no remaining non-zero columns go below the
// square part.
inline void order_triangular(RestructureMatrix& m) {
  const int rows = static_cast<int>(m.row_labels.size());
  const int cols = static_cast<int>(m.col_labels.size());
  std::vector<char> row_done(static_cast<std::size_t>(rows), 0);
  std::vector<char> col_done(static_cast<std::size_t>(cols), 0);
  int cols_left = 0;
  for (int c = 0; c < cols; ++c) {
    bool hit = false;
    for (int r = 0; r < rows; ++r) hit = hit || m.at(r, c) != 0;
    if (!hit) {
      m.unhit_columns.push_back(c);
      col_done[static_cast<std::size_t>(c)] = 1;
    } else {
      ++cols_left;
    }
  }
  m.triangular = true;
  while (cols_left > 0) {
    int pick_row = -1, pick_col = -1;
    for (int r = 0; r < rows && pick_row < 0; ++r) {
      if (row_done[static_cast<std::size_t>(r)]) continue;
      int nonzero = 0, last = -1;
      for (int c = 0; c < cols; ++c) {
        if (col_done[static_cast<std::size_t>(c)]) continue;
        if (m.at(r, c) != 0) {
          ++nonzero;
          last = c;
        }
      }
      if (nonzero == 1) {
        pick_row = r;
        pick_col = last;
      }
    }
    if (pick_row < 0) {
      m.triangular = false;
      m.row_order.clear();
      m.col_order.clear();
      m.diagonal.clear();
      return;
    }
    m.row_order.push_back(pick_row);
    m.col_order.push_back(pick_col);
    m.diagonal.push_back(m.at(pick_row, pick_col));
    row_done[static_cast<std::size_t>(pick_row)] = 1;
    col_done[static_cast<std::size_t>(pick_col)] = 1;
    --cols_left;
  }
  for (int r = 0; r < rows; ++r)
    if (!row_done[static_cast<std::size_t>(r)]) m.row_order.push_back(r);
}

}  // namespace detail

template <class TM, class TN, class F>
RestructureOutcome<TN> restructure(const ClassTable<TM>& source, const ClassTable<TN>& target,
                                   F&& f, int workers = 1) {
  const std::int64_t rows = source.classes();
  const std::int64_t n_target = static_cast<std::int64_t>(target.elements.size());
  const int lanes = workers > 1 ? workers : 1;
  std::vector<std::vector<std::int64_t>> lane_counts(
      static_cast<std::size_t>(lanes),
      std::vector<std::int64_t>(static_cast<std::size_t>(rows * n_target), 0));
  run_partitioned(static_cast<std::int64_t>(source.elements.size()), workers,
                  [&](int w, std::int64_t begin, std::int64_t end) {
                    auto& counts = lane_counts[static_cast<std::size_t>(w)];
                    for (std::int64_t k = begin; k < end; ++k) {
                      const auto i = static_cast<std::size_t>(k);
                      const TN image = f(source.elements[i]);
                      const int t = detail::index_of(target.elements, image, "restructure");
                      ++counts[static_cast<std::size_t>(
                          static_cast<std::int64_t>(source.class_of[i]) * n_target + t)];
                    }
                  });
  std::vector<std::int64_t>& counts = lane_counts[0];
  for (int w = 1; w < lanes; ++w)
    for (std::size_t s = 0; s < counts.size(); ++s) counts[s] += lane_counts[static_cast<std::size_t>(w)][s];

  RestructureOutcome<TN> out;
  RestructureMatrix m;
  m.source_statistic = source.statistic;
  m.target_statistic = target.statistic;
  m.row_labels = source.labels;
  m.col_labels = target.labels;
  for (int r = 0; r < rows; ++r) m.row_sizes.push_back(source.class_size(r));
  for (int c = 0; c < target.classes(); ++c) m.col_sizes.push_back(target.class_size(c));
  m.entries.assign(static_cast<std::size_t>(rows * target.classes()), 0);
  for (int r = 0; r < rows; ++r) {
    const std::int64_t base = static_cast<std::int64_t>(r) * n_target;
    for (int c = 0; c < target.classes(); ++c) {
      const auto& group = target.members[static_cast<std::size_t>(c)];
      const std::int64_t expected = counts[static_cast<std::size_t>(base + group.front())];
      for (int t : group) {
        const std::int64_t got = counts[static_cast<std::size_t>(base + t)];
        if (got != expected) {
          out.counterexample = RestructureCounterexample<TN>{
              r, c, target.elements[static_cast<std::size_t>(group.front())],
              target.elements[static_cast<std::size_t>(t)], expected, got};
          return out;
        }
      }
      m.entries[static_cast<std::size_t>(r) * m.col_labels.size() + static_cast<std::size_t>(c)] =
          expected;
    }
  }
  detail::order_triangular(m);
  out.matrix = std::move(m);
  return out;
}

// Verdict of the transport argument: if f has well-defined restructure
// constants whose row space witnesses every standard basis vector (here via
// a lower-triangular ordering with non-zero diagonal) and the source
// statistic is a verified lumping, the target statistic is a lumping. The
// conclusion is always cross-validated by a direct structure-constant run;
// a certified-but-directly-failing target means an implementation bug and
// throws.
struct LumpingCertificate {
  bool source_verified = false;
  bool restructure_ok = false;
  bool basis_witnessed = false;  // triangular with non-zero diagonal
  bool direct_ok = false;
  bool certified() const { return source_verified && restructure_ok && basis_witnessed; }
};

template <class TM, class TN, class F, class Prod>
LumpingCertificate certify_lumping_via_theorem(bool source_verified, const ClassTable<TM>& source,
                                               const ClassTable<TN>& target, F&& f,
                                               Prod&& target_prod, int workers = 1) {
  LumpingCertificate cert;
  cert.source_verified = source_verified;
  auto rest = restructure(source, target, std::forward<F>(f), workers);
  cert.restructure_ok = rest.ok();
  if (rest.ok()) {
    bool nonzero = rest.matrix->triangular;
    for (std::int64_t d : rest.matrix->diagonal) nonzero = nonzero && d != 0;
    cert.basis_witnessed = nonzero;
  }
  auto direct = structure_constants(target, std::forward<Prod>(target_prod), workers);
  cert.direct_ok = direct.ok();
  if (cert.certified() && !cert.direct_ok)
    throw std::logic_error("certify_lumping_via_theorem: certified lumping fails direct check");
  return cert;
}

}  // namespace ruffles
