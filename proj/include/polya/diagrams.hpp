#pragma once

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "polya/partition.hpp"
#include "polya/rational.hpp"

namespace polya {

/// Rectangular matrix of nonnegative integer weights; the model of a
/// weighted bipartite graph (rows = white vertices, columns = black).
class WeightMatrix {
public:
  WeightMatrix() : rows_(0), cols_(0) {}
  WeightMatrix(unsigned rows, unsigned cols, std::vector<unsigned> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<std::size_t>(rows) * cols)
      throw std::invalid_argument("entry count does not match dimensions");
  }

  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }
  const std::vector<unsigned>& entries() const { return entries_; }
  unsigned at(unsigned i, unsigned j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }

  auto operator<=>(const WeightMatrix&) const = default;

private:
  unsigned rows_, cols_;
  std::vector<unsigned> entries_;
};

inline bool is_packed(const WeightMatrix& m) {
  for (unsigned i = 0; i < m.rows(); ++i) {
    bool nonzero = false;
    for (unsigned j = 0; j < m.cols(); ++j)
      if (m.at(i, j)) nonzero = true;
    if (!nonzero) return false;
  }
  for (unsigned j = 0; j < m.cols(); ++j) {
    bool nonzero = false;
    for (unsigned i = 0; i < m.rows(); ++i)
      if (m.at(i, j)) nonzero = true;
    if (!nonzero) return false;
  }
  return true;
}

/// Delete all-zero rows and columns, preserving order.
inline WeightMatrix pack(const WeightMatrix& m) {
  std::vector<unsigned> keep_rows, keep_cols;
  for (unsigned i = 0; i < m.rows(); ++i)
    for (unsigned j = 0; j < m.cols(); ++j)
      if (m.at(i, j)) {
        keep_rows.push_back(i);
        break;
      }
  for (unsigned j = 0; j < m.cols(); ++j)
    for (unsigned i = 0; i < m.rows(); ++i)
      if (m.at(i, j)) {
        keep_cols.push_back(j);
        break;
      }
  std::vector<unsigned> entries;
  entries.reserve(keep_rows.size() * keep_cols.size());
  for (unsigned i : keep_rows)
    for (unsigned j : keep_cols) entries.push_back(m.at(i, j));
  return WeightMatrix(static_cast<unsigned>(keep_rows.size()),
                      static_cast<unsigned>(keep_cols.size()),
                      std::move(entries));
}

inline WeightMatrix permute_matrix(const WeightMatrix& m,
                                   const std::vector<unsigned>& row_perm,
                                   const std::vector<unsigned>& col_perm) {
  std::vector<unsigned> entries;
  entries.reserve(m.entries().size());
  for (unsigned i = 0; i < m.rows(); ++i)
    for (unsigned j = 0; j < m.cols(); ++j)
      entries.push_back(m.at(row_perm[i], col_perm[j]));
  return WeightMatrix(m.rows(), m.cols(), std::move(entries));
}

/// Lexicographically minimal row-major flattening over all row/column
/// permutations.  Exhaustive n!*m! scan with early exit on the prefix.
inline WeightMatrix canonical_form(const WeightMatrix& m) {
  unsigned n = m.rows(), mm = m.cols();
  std::vector<unsigned> row_perm(n), col_perm(mm);
  std::iota(row_perm.begin(), row_perm.end(), 0u);
  std::vector<unsigned> best;
  bool have_best = false;
  do {
    std::iota(col_perm.begin(), col_perm.end(), 0u);
    do {
      std::vector<unsigned> flat;
      flat.reserve(m.entries().size());
      bool worse = false;
      for (unsigned i = 0; i < n && !worse; ++i)
        for (unsigned j = 0; j < mm; ++j) {
          flat.push_back(m.at(row_perm[i], col_perm[j]));
          if (have_best) {
            std::size_t k = flat.size() - 1;
            if (flat[k] > best[k]) {
              worse = true;
              break;
            }
            if (flat[k] < best[k]) have_best = false;  // now strictly ahead
          }
        }
      if (!worse && (!have_best || flat < best)) {
        best = std::move(flat);
        have_best = true;
      }
    } while (std::next_permutation(col_perm.begin(), col_perm.end()));
  } while (std::next_permutation(row_perm.begin(), row_perm.end()));
  return WeightMatrix(n, mm, std::move(best));
}

/// Canonical representative of the orbit of pack(m).
class DiagramClass {
public:
  explicit DiagramClass(const WeightMatrix& m)
      : canonical_(canonical_form(pack(m))) {}
  const WeightMatrix& canonical() const { return canonical_; }
  bool operator==(const DiagramClass&) const = default;
  auto operator<=>(const DiagramClass&) const = default;

private:
  WeightMatrix canonical_;
};

/// Per-weight cell counts (i_0, ..., i_P); sum = rows*cols.  min_length
/// pads with zero counts so censuses over a fixed weight bound share keys.
inline std::vector<unsigned> type_of(const WeightMatrix& m,
                                     std::size_t min_length = 1) {
  unsigned max_entry = 0;
  for (unsigned x : m.entries()) max_entry = std::max(max_entry, x);
  std::vector<unsigned> counts(
      std::max<std::size_t>(min_length, max_entry + 1u), 0);
  for (unsigned x : m.entries()) ++counts[x];
  return counts;
}

/// Sorted nonzero counts, descending.
inline Partition shape_of(const WeightMatrix& m) {
  return Partition(type_of(m));
}

/// Bipartite graph with labelled white/black vertices and weighted edges.
struct LabelledDiagram {
  unsigned white = 0;
  unsigned black = 0;
  // (white index, black index, weight >= 1), sorted.
  std::vector<std::tuple<unsigned, unsigned, unsigned>> edges;

  bool operator==(const LabelledDiagram&) const = default;
};

inline LabelledDiagram matrix_to_diagram(const WeightMatrix& m) {
  for (unsigned i = 0; i < m.rows(); ++i) {
    bool nonzero = false;
    for (unsigned j = 0; j < m.cols(); ++j)
      if (m.at(i, j)) nonzero = true;
    if (!nonzero)
      throw std::domain_error("matrix is not packed: row " +
                              std::to_string(i) + " is all zero");
  }
  for (unsigned j = 0; j < m.cols(); ++j) {
    bool nonzero = false;
    for (unsigned i = 0; i < m.rows(); ++i)
      if (m.at(i, j)) nonzero = true;
    if (!nonzero)
      throw std::domain_error("matrix is not packed: column " +
                              std::to_string(j) + " is all zero");
  }
  LabelledDiagram d;
  d.white = m.rows();
  d.black = m.cols();
  for (unsigned i = 0; i < m.rows(); ++i)
    for (unsigned j = 0; j < m.cols(); ++j)
      if (m.at(i, j)) d.edges.emplace_back(i, j, m.at(i, j));
  return d;
}

inline WeightMatrix diagram_to_matrix(const LabelledDiagram& d) {
  std::vector<unsigned> entries(
      static_cast<std::size_t>(d.white) * d.black, 0);
  for (auto [i, j, w] : d.edges)
    entries[static_cast<std::size_t>(i) * d.black + j] = w;
  return WeightMatrix(d.white, d.black, std::move(entries));
}

// --- renderers ---------------------------------------------------------
// Labels are printed 1-indexed, matching the usual drawings.

inline std::string render_dot(const LabelledDiagram& d) {
  std::ostringstream out;
  out << "graph diagram {\n  rankdir=LR;\n";
  for (unsigned i = 0; i < d.white; ++i)
    out << "  w" << i + 1 << " [shape=circle, style=\"\", label=\"" << i + 1
        << "\"];\n";
  for (unsigned j = 0; j < d.black; ++j)
    out << "  b" << j + 1 << " [shape=circle, style=filled, fillcolor=black,"
        << " fontcolor=white, label=\"" << j + 1 << "\"];\n";
  for (auto [i, j, w] : d.edges)
    out << "  w" << i + 1 << " -- b" << j + 1 << " [label=\"" << w << "\"];\n";
  out << "}\n";
  return out.str();
}

inline std::string render_ascii(const LabelledDiagram& d) {
  WeightMatrix m = diagram_to_matrix(d);
  std::ostringstream out;
  out << "      ";
  for (unsigned j = 0; j < d.black; ++j) out << " b" << j + 1;
  out << "\n";
  for (unsigned i = 0; i < d.white; ++i) {
    out << "  w" << i + 1 << " |";
    for (unsigned j = 0; j < d.black; ++j) {
      out << "  ";
      if (m.at(i, j))
        out << m.at(i, j);
      else
        out << ".";
    }
    out << "\n";
  }
  return out.str();
}

// --- CSV matrix format: integer rows, '#' comments ---------------------

inline std::string matrix_to_csv(const WeightMatrix& m) {
  std::string out;
  for (unsigned i = 0; i < m.rows(); ++i) {
    for (unsigned j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += std::to_string(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

inline WeightMatrix parse_matrix_csv(std::istream& in) {
  std::vector<std::vector<unsigned>> rows;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r'))
      line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<unsigned> row;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::size_t start = tok.find_first_not_of(" \t");
      std::size_t end = tok.find_last_not_of(" \t");
      if (start == std::string::npos)
        throw parse_error("empty matrix entry in '" + line + "'");
      tok = tok.substr(start, end - start + 1);
      if (tok.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error("bad matrix entry '" + tok + "'");
      row.push_back(static_cast<unsigned>(std::stoul(tok)));
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw parse_error("ragged matrix row in '" + line + "'");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return WeightMatrix();
  std::vector<unsigned> entries;
  for (const auto& r : rows)
    entries.insert(entries.end(), r.begin(), r.end());
  return WeightMatrix(static_cast<unsigned>(rows.size()),
                      static_cast<unsigned>(rows.front().size()),
                      std::move(entries));
}

inline WeightMatrix parse_matrix_string(const std::string& text) {
  // Inline form: rows separated by ';', entries by ','.
  std::string normalized = text;
  for (char& c : normalized)
    if (c == ';') c = '\n';
  std::istringstream in(normalized);
  return parse_matrix_csv(in);
}

}  // namespace polya
