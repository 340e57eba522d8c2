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
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "textsim/preprocess.hpp"

namespace textsim {

/// One labeled short text. `id` is the 0-based position in the corpus it
/// belongs to; `source_id` survives sampling and points back at the position
/// in the originally loaded file.
struct Document {
  std::size_t id = 0;
  std::size_t source_id = 0;
  std::string label;
  std::string raw;
  std::vector<Token> tokens;  // filled by preprocess_corpus
};

struct Corpus {
  std::vector<Document> docs;

  std::size_t size() const { return docs.size(); }
  bool empty() const { return docs.empty(); }

  /// Per-document labels, in corpus order.
  std::vector<std::string> labels() const;
  std::set<std::string> label_set() const;
  std::map<std::string, std::size_t> class_counts() const;
};

/// Class-index column value -> human readable label.
using LabelMap = std::map<std::string, std::string>;

/// {"1" -> "World", "2" -> "Sports", "3" -> "Business", "4" -> "Sci/Tech"}
const LabelMap& default_agnews_labels();

/// Loads a 3-column CSV (class index, title, description) with RFC 4180
/// quoting. Raw text is `title + " " + description`. Rows with the wrong
/// column count or an unknown class index raise MalformedRow with the line
/// number; unreadable files raise IoError.
Corpus load_agnews_csv(const std::string& path, const LabelMap& labels = default_agnews_labels());

/// Draws `n` documents without replacement using a partial Fisher-Yates
/// shuffle over std::mt19937_64 (whose output sequence the C++ standard
/// pins down) with unbiased rejection-sampled index draws, so the selection
/// is identical on every platform. Ids are reindexed 0..n-1 in selection
/// order; source_id keeps each document's original position.
Corpus sample(const Corpus& corpus, std::size_t n, std::uint64_t seed);

/// Fills Document::tokens for every document. Documents whose token list
/// comes out empty are retained; they vectorize to zero vectors downstream.
Corpus preprocess_corpus(Corpus corpus, const PreprocessConfig& config,
                         const StopwordList& stops, const LemmaLexicon& lexicon);

/// JSON-lines cache, one document per line with fields id, source_id, label,
/// raw, tokens.
void save_jsonl(const Corpus& corpus, const std::string& path);
Corpus load_jsonl(const std::string& path);

}  // namespace textsim
