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
#include <string>
#include <unordered_map>
#include <vector>

#include "textsim/corpus.hpp"

namespace textsim {

/// Term ids are dense 0..V-1, assigned in lexicographic (bytewise) term
/// order so that fitted models are reproducible across runs and platforms.
class Vocabulary {
 public:
  Vocabulary() = default;

  static Vocabulary build(const std::vector<std::vector<Token>>& docs);

  std::optional<std::uint32_t> id_of(const std::string& term) const;
  const std::string& term_of(std::uint32_t id) const;
  const std::vector<std::string>& terms() const { return terms_; }

  /// Number of documents the term appears in (counted once per document).
  std::uint32_t df(std::uint32_t id) const;
  std::size_t n_docs() const { return n_docs_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(terms_.size()); }

  // Used by the model loader; df values must be in [1, n_docs].
  static Vocabulary from_parts(std::vector<std::string> terms, std::vector<std::uint32_t> df,
                               std::size_t n_docs);

 private:
  std::unordered_map<std::string, std::uint32_t> ids_;
  std::vector<std::string> terms_;
  std::vector<std::uint32_t> df_;
  std::size_t n_docs_ = 0;
};

/// Ordered (term_id, weight) pairs over a vocabulary of `dim` terms.
/// Invariants: ids strictly increasing, no zero weights stored, ids < dim.
struct SparseVector {
  std::vector<std::pair<std::uint32_t, double>> entries;
  std::uint32_t dim = 0;

  double l2_norm() const;
  bool empty() const { return entries.empty(); }
};

struct TfIdfOptions {
  /// On: idf_i = ln((1+N)/(1+df_i)) + 1, always positive.
  /// Off: idf_i = ln(N/df_i), zero for terms present in every document.
  bool smoothing = true;
  /// Scale each transformed vector to unit L2 norm (zero vectors stay zero).
  bool normalize = true;
};

class TfIdfModel {
 public:
  TfIdfModel() = default;

  static TfIdfModel fit(const std::vector<std::vector<Token>>& docs, TfIdfOptions options = {});
  static TfIdfModel fit(const Corpus& corpus, TfIdfOptions options = {});

  /// Per in-vocabulary term: weight = tf * idf. Out-of-vocabulary tokens are
  /// ignored; an empty or all-OOV token list yields the zero vector.
  SparseVector transform(const std::vector<Token>& tokens) const;
  std::vector<SparseVector> transform_corpus(const Corpus& corpus) const;

  const Vocabulary& vocab() const { return vocab_; }
  double idf(std::uint32_t id) const;
  const TfIdfOptions& options() const { return options_; }

  /// JSON dump with vocabulary array, df array, N and the two flags.
  void save(const std::string& path) const;
  static TfIdfModel load(const std::string& path);

 private:
  Vocabulary vocab_;
  std::vector<double> idf_;
  TfIdfOptions options_;
};

/// Raw term-count vector over `vocab` (the bag-of-words representation used
/// by soft cosine). Out-of-vocabulary tokens are ignored.
SparseVector bow_vector(const Vocabulary& vocab, const std::vector<Token>& tokens);

/// Text dump, one line per document: `doc_id term_id:weight ...` with
/// weights printed to 6 significant digits.
void write_vector_dump(const std::string& path, const std::vector<SparseVector>& vectors);

}  // namespace textsim
