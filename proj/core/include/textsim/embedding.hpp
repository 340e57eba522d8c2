/**
 * textsim — semantic text similarity toolkit
 *
 * Copyright (c) 2026 The textsim Authors
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "textsim/preprocess.hpp"

namespace textsim {

using DenseVector = std::vector<double>;

/// Pre-trained word vectors keyed by lowercased token. All stored vectors
/// have exactly dim() finite components.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  explicit EmbeddingTable(std::size_t dim, std::string name = "");

  /// Reads the word2vec text interchange format: a `<vocab_size> <dim>`
  /// header followed by `<token> <v1> ... <v_dim>` lines. Tokens are
  /// lowercased the same way preprocessing lowercases them; duplicates keep
  /// the first occurrence. Gzip-compressed input is accepted when the
  /// filename ends in ".gz". With `limit`, only the first min(vocab_size,
  /// limit) rows are read. Raises BadHeader, DimensionMismatch (with line
  /// number), ParseError for non-finite components, IoError.
  static EmbeddingTable load_word2vec_text(const std::string& path,
                                           std::optional<std::size_t> limit = std::nullopt);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return keys_.size(); }
  const std::string& name() const { return name_; }

  bool contains(const std::string& token) const;

  /// Stored vector, or the all-zeros vector of dimension dim() for
  /// out-of-vocabulary tokens.
  DenseVector lookup(const std::string& token) const;

  /// No-copy variant of lookup; nullptr for out-of-vocabulary tokens.
  const DenseVector* find(const std::string& token) const;

  /// Keeps the first occurrence when the token is already present.
  /// Raises DimensionMismatch for wrong-length or non-finite vectors.
  void add(const std::string& token, DenseVector vector);

  /// Component-wise mean of lookup(t) over all tokens. Out-of-vocabulary
  /// tokens contribute zero vectors and, by default, still count in the
  /// divisor; with skip_oov the divisor is the in-vocabulary token count.
  /// An empty token list (or, with skip_oov, an all-OOV one) yields the
  /// zero vector.
  DenseVector doc_vector(const std::vector<Token>& tokens, bool skip_oov = false) const;

  /// Writes the table back out in word2vec text format, in insertion order.
  void save_word2vec_text(const std::string& path) const;

 private:
  std::size_t dim_ = 0;
  std::string name_;
  std::vector<std::string> keys_;  // insertion order, for reproducible dumps
  std::unordered_map<std::string, DenseVector> vectors_;
};

struct FilterStats {
  std::size_t vocab_terms = 0;  // distinct corpus terms requested
  std::size_t matched = 0;      // terms found in the embedding file
  std::size_t rows_read = 0;

  double oov_rate_percent() const {
    if (vocab_terms == 0) return 0.0;
    return 100.0 * static_cast<double>(vocab_terms - matched) / static_cast<double>(vocab_terms);
  }
};

/// Streams a (possibly gzipped) word2vec text file and writes a plain-text
/// one restricted to `vocab_terms`, header rewritten with the matched count.
/// Component text is copied through verbatim so rerunning the filter on its
/// own output is byte-identical.
///
/// When `strip_prefix` is non-empty, only keys bearing the prefix are
/// considered and the prefix is removed before matching (the rule for
/// URI-like key schemes such as `/c/en/word`); all other keys are dropped.
FilterStats filter_word2vec(const std::string& input_path, const std::string& output_path,
                            const std::vector<std::string>& vocab_terms,
                            const std::string& strip_prefix = "");

}  // namespace textsim
