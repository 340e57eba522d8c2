/**
 * textsim — semantic text similarity toolkit
 *
 * Copyright (c) 2026 The textsim Authors
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "textsim/embedding.hpp"
#include "textsim/tfidf.hpp"

namespace textsim {

enum class Method : std::uint8_t {
  tfidf_cosine = 0,
  w2v_cosine = 1,
  w2v_softcosine = 2,
};

std::string_view to_string(Method method);
std::optional<Method> parse_method(std::string_view tag);

struct TermSimilarityParams {
  double exponent = 2.0;   // applied to the clipped cosine
  double threshold = 0.0;  // raw cosine must be strictly greater to be kept
  std::size_t topk = 100;  // strongest off-diagonal entries kept per row
};

/// Sparse symmetric term-to-term similarity matrix with an implicit unit
/// diagonal. Off-diagonal entries are nonnegative and stored in both
/// directions, each row sorted by column.
class TermSimilarityMatrix {
 public:
  using Entry = std::pair<std::uint32_t, double>;

  TermSimilarityMatrix() = default;

  static TermSimilarityMatrix identity(std::uint32_t dim);

  /// Builds from per-row off-diagonal entries (both directions present).
  /// Used by build_term_similarity and by tests constructing instances
  /// directly; validates symmetry and the [0, 1] range.
  static TermSimilarityMatrix from_rows(std::uint32_t dim, std::vector<std::vector<Entry>> rows,
                                        TermSimilarityParams params = {});

  std::uint32_t dim() const { return dim_; }

  /// 1 on the diagonal, stored value off it, 0 when absent.
  double at(std::uint32_t i, std::uint32_t j) const;

  /// Off-diagonal entries of row i, sorted by column.
  const std::vector<Entry>& row(std::uint32_t i) const;

  /// Number of stored off-diagonal entries (counting both directions).
  std::size_t stored_entries() const;

  const TermSimilarityParams& params() const { return params_; }

  /// Text dump: a `# dim=.. exponent=.. threshold=.. topk=..` header, the
  /// unit diagonal, then each symmetric pair once (i < j), values to
  /// 6 significant digits.
  void save_text(const std::string& path) const;

 private:
  std::uint32_t dim_ = 0;
  std::vector<std::vector<Entry>> rows_;
  TermSimilarityParams params_;
};

/// s_ii = 1; for i != j with raw = cosine(vec_i, vec_j), the entry
/// max(0, raw)^exponent is kept when raw > threshold. Each row then retains
/// only its topk largest entries (ties broken toward the smaller column) and
/// the result is symmetrized by keeping a pair if either direction kept it,
/// so a row can end up with more than topk entries. Terms without an
/// embedding have zero vectors, hence no off-diagonal entries.
TermSimilarityMatrix build_term_similarity(const Vocabulary& vocab, const EmbeddingTable& table,
                                           const TermSimilarityParams& params = {});

/// dot(a, b) / (|a| |b|), clamped to [-1, 1]; 0 when either norm is zero.
double cosine(const DenseVector& a, const DenseVector& b);

/// Merge-join cosine over sorted sparse entries; same value as `cosine` on
/// the densified vectors and the same zero-vector rule.
double sparse_cosine(const SparseVector& a, const SparseVector& b);

/// sum_ij s_ij a_i b_j / (sqrt(sum_ij s_ij a_i a_j) sqrt(sum_ij s_ij b_i b_j)),
/// clamped to [-1, 1]. Returns 0 when either radicand is <= 1e-12, which
/// covers zero vectors and keeps NaN out of downstream matrices.
double soft_cosine(const SparseVector& a, const SparseVector& b, const TermSimilarityMatrix& sim);

/// n x n all-pairs document similarity scores, row-major.
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;
  SimilarityMatrix(std::size_t n, Method method);

  std::size_t size() const { return n_; }
  Method method() const { return method_; }
  bool self_excluded() const { return self_excluded_; }

  double at(std::size_t i, std::size_t j) const { return scores_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double value) { scores_[i * n_ + j] = value; }
  std::span<const double> row(std::size_t i) const { return {scores_.data() + i * n_, n_}; }

  /// Binary dump: magic "SIMM1" | u32 n (little-endian) | method tag byte |
  /// row-major IEEE-754 doubles, little-endian.
  void save_simm(const std::string& path) const;
  static SimilarityMatrix load_simm(const std::string& path);

  /// Tab-separated matrix, 6 significant digits, for inspection.
  void save_tsv(const std::string& path) const;

  friend SimilarityMatrix exclude_self(SimilarityMatrix matrix);

 private:
  std::size_t n_ = 0;
  Method method_ = Method::tfidf_cosine;
  bool self_excluded_ = false;
  std::vector<double> scores_;
};

/// Dense-vector pairwise matrix (w2v-cosine). Computes the upper triangle in
/// parallel across rows and mirrors it. Requires >= 2 vectors of uniform
/// dimension.
SimilarityMatrix pairwise_matrix(const std::vector<DenseVector>& vectors,
                                 Method method = Method::w2v_cosine);

/// Sparse-vector pairwise matrix: sparse cosine for tfidf_cosine, soft
/// cosine for w2v_softcosine (term_sim required, else MissingTermMatrix).
SimilarityMatrix pairwise_matrix(const std::vector<SparseVector>& vectors, Method method,
                                 const TermSimilarityMatrix* term_sim = nullptr);

/// Sets the diagonal to 0 and marks the matrix, leaving off-diagonal scores
/// untouched. Idempotent.
SimilarityMatrix exclude_self(SimilarityMatrix matrix);

struct Neighbor {
  std::size_t index = 0;
  double score = 0.0;
};

/// Argmax over j != i of scores[i][j], excluding the document by index (the
/// zeroed diagonal is never relied on), ties broken toward the smallest j.
/// Requires a self-excluded matrix with n >= 2.
Neighbor most_similar(const SimilarityMatrix& matrix, std::size_t i);

}  // namespace textsim
